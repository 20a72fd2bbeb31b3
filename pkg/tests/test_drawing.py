"""Grid drawings: construction from a planted solution, exact verification,
decoding, and every violation code."""

import pytest

from simgadget import (
    FormatError,
    GridDrawing,
    MalformedDrawing,
    P1,
    P2,
    SefeInstance,
    SolutionMismatch,
    ThreePartitionSolution,
    UnmappedVertex,
    construct_drawing,
    decode_solution,
    generate_yes_instance,
    reduce_gracsim,
    solve_brute_force,
    validate_instance,
    value_triples,
    verify_drawing,
    verify_solution,
)


# ---------------------------------------------------------------------------
# the running example


def test_running_example_drawing_is_valid(running_report):
    assert running_report.valid
    assert running_report.violations == ()


def test_running_example_crossing_census(running_gracsim, running_report):
    inst, index = running_gracsim
    m, B = index.m, index.B
    assert len(running_report.crossings) == m * (2 * B + 3) == 153
    for c in running_report.crossings:
        assert c.right_angle
        assert sorted(c.labels) == [P1, P2]
        u1, v1, _ = inst.edges[c.edge1]
        assert c.edge1 < c.edge2


def test_small_crossing_count(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    report = verify_drawing(inst, d)
    assert report.valid
    assert len(report.crossings) == 1 * (2 * 10 + 3) == 23


def test_pole_positions(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    top = max(y for sl in index.slices for x, y in (d.coords[v] for v in sl.pi_t))
    bottom = min(y for sl in index.slices for x, y in (d.coords[v] for v in sl.pi_s))
    assert d.coords[index.t][1] == top + 12
    assert d.coords[index.s][1] == bottom - 12
    assert d.coords[index.t][0] == d.coords[index.s][0]


def test_per_slice_crossing_budget(small_gracsim):
    # each private slice edge is crossed at most once, and each transversal
    # edge crosses at most one edge of any one slice
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    report = verify_drawing(inst, d)

    def undirected(e):
        u, v, lab = e
        return (min(u, v), max(u, v), lab)

    pos = {undirected(e): i for i, e in enumerate(inst.edges)}
    slice_of = {}
    for i, sl in enumerate(index.slices):
        for e in list(sl.rungs) + list(sl.zigzag):
            slice_of[pos[undirected(e)]] = i
    path_edges = {
        pos[undirected(e)] for path in index.transversals for e in path.edges
    }

    slice_edge_hits = {}
    pair_hits = {}
    for c in report.crossings:
        for a, b in ((c.edge1, c.edge2), (c.edge2, c.edge1)):
            if a in slice_of and b in path_edges:
                slice_edge_hits[a] = slice_edge_hits.get(a, 0) + 1
                pair_hits[(b, slice_of[a])] = pair_hits.get((b, slice_of[a]), 0) + 1
    assert slice_edge_hits and all(v == 1 for v in slice_edge_hits.values())
    assert pair_hits and all(v == 1 for v in pair_hits.values())


# ---------------------------------------------------------------------------
# decoding


def test_decode_small(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    assert decode_solution(inst, index, d).triples == ((0, 1, 2),)


def test_decode_recovers_known_solution(running_gracsim, running_drawing, running_solution, running_instance):
    inst, index = running_gracsim
    decoded = decode_solution(inst, index, running_drawing)
    assert verify_solution(running_instance, decoded)
    assert value_triples(running_instance, decoded) == value_triples(running_instance, running_solution)
    assert value_triples(running_instance, decoded) == [(7, 7, 10), (7, 8, 9), (8, 8, 8)]


def test_decode_tracks_wedge_assignment(running_gracsim, running_solution, running_instance):
    inst, index = running_gracsim
    permuted = ThreePartitionSolution(tuple(reversed(running_solution.triples)))
    d = construct_drawing(inst, index, permuted)
    decoded = decode_solution(inst, index, d)
    assert decoded.triples == permuted.triples
    assert value_triples(running_instance, decoded) == value_triples(running_instance, running_solution)


def test_decode_round_trip_on_generated_instances():
    for seed in range(4):
        inst3p, planted = generate_yes_instance(2, 11 + seed, seed=seed)
        inst, index = reduce_gracsim(inst3p)
        d = construct_drawing(inst, index, planted)
        decoded = decode_solution(inst, index, d)
        assert verify_solution(inst3p, decoded)
        assert value_triples(inst3p, decoded) == value_triples(inst3p, planted)


def test_decode_rejects_invalid_drawing(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    coords = dict(d.coords)
    v0 = index.transversals[0].inner[0]
    x, y = coords[v0]
    coords[v0] = (x + 1, y)
    broken = GridDrawing(coords)
    assert not verify_drawing(inst, broken).valid
    with pytest.raises(MalformedDrawing):
        decode_solution(inst, index, broken)


# ---------------------------------------------------------------------------
# violations, one code at a time


def _grid(inst, pts):
    return GridDrawing({v: pts[v] for v in range(inst.n)})


def test_violation_oblique_crossing(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    coords = dict(d.coords)
    v0 = index.transversals[0].inner[0]
    x, y = coords[v0]
    coords[v0] = (x + 1, y)
    report = verify_drawing(inst, GridDrawing(coords))
    assert not report.valid
    assert {v.code for v in report.violations} == {"oblique-crossing"}


def test_violation_duplicate_point(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    coords = dict(d.coords)
    coords[index.t] = coords[index.slices[0].pi_t[0]]
    report = verify_drawing(inst, GridDrawing(coords))
    assert not report.valid
    assert "duplicate-point" in {v.code for v in report.violations}


def test_violation_same_layer_crossing():
    inst = SefeInstance(4, ((0, 1, "p1"), (2, 3, "p1")), {})
    report = verify_drawing(inst, _grid(inst, {0: (0, 0), 1: (4, 4), 2: (0, 4), 3: (4, 0)}))
    assert not report.valid
    assert {v.code for v in report.violations} == {"same-layer-crossing"}
    assert len(report.crossings) == 1


def test_violation_shared_edge_crossing():
    inst = SefeInstance(4, ((0, 1, "shared"), (2, 3, "p2")), {})
    report = verify_drawing(inst, _grid(inst, {0: (0, 0), 1: (4, 4), 2: (0, 4), 3: (4, 0)}))
    assert not report.valid
    assert {v.code for v in report.violations} == {"shared-edge-crossing"}


def test_violation_overlap():
    inst = SefeInstance(4, ((0, 1, "p1"), (2, 3, "p1")), {})
    report = verify_drawing(
        inst, _grid(inst, {0: (0, 0), 1: (4, 0), 2: (1, 0), 3: (3, 0)})
    )
    assert not report.valid
    codes = {v.code for v in report.violations}
    assert "overlap" in codes
    assert "vertex-on-edge" in codes


def test_violation_vertex_on_edge():
    inst = SefeInstance(3, ((0, 1, "p1"),), {})
    report = verify_drawing(inst, _grid(inst, {0: (0, 0), 1: (4, 0), 2: (2, 0)}))
    assert not report.valid
    assert {v.code for v in report.violations} == {"vertex-on-edge"}


def test_valid_perpendicular_crossing_passes():
    inst = SefeInstance(4, ((0, 1, "p1"), (2, 3, "p2")), {})
    report = verify_drawing(inst, _grid(inst, {0: (0, 0), 1: (4, 4), 2: (0, 4), 3: (4, 0)}))
    assert report.valid
    assert len(report.crossings) == 1
    assert report.crossings[0].right_angle


# ---------------------------------------------------------------------------
# errors and serialization


def test_construct_rejects_wrong_solution(small_gracsim):
    _, inst, index, _ = small_gracsim
    with pytest.raises(SolutionMismatch):
        construct_drawing(inst, index, ThreePartitionSolution(((0, 1, 1),)))


def test_verify_rejects_missing_and_unknown_vertices(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    coords = dict(d.coords)
    del coords[0]
    with pytest.raises(UnmappedVertex):
        verify_drawing(inst, GridDrawing(coords))
    coords = dict(d.coords)
    coords[inst.n + 5] = (999, 999)
    with pytest.raises(FormatError):
        verify_drawing(inst, GridDrawing(coords))


def test_drawing_json_round_trip(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    again = GridDrawing.from_json(d.to_json())
    assert again == d
    assert again.to_json() == d.to_json()


def test_drawing_json_rejects_non_integer_coordinates():
    with pytest.raises(FormatError):
        GridDrawing.from_json_dict({"coords": {"0": [1.5, 2]}})
    with pytest.raises(FormatError):
        GridDrawing.from_json_dict({"coords": {"0": [1, 2, 3]}})
    with pytest.raises(FormatError):
        GridDrawing.from_json_dict({})


def test_report_json_shape(small_gracsim):
    _, inst, index, sol = small_gracsim
    d = construct_drawing(inst, index, sol)
    doc = verify_drawing(inst, d).to_json_dict(inst)
    assert doc["valid"] is True
    assert doc["violations"] == []
    first = doc["crossings"][0]
    assert set(first) == {"edge1", "edge2", "labels", "point", "right_angle"}
    (xn, xd), (yn, yd) = first["point"]
    assert all(isinstance(c, int) for c in (xn, xd, yn, yd))
    assert xd >= 1 and yd >= 1


def test_construction_is_deterministic(small_gracsim):
    _, inst, index, sol = small_gracsim
    a = construct_drawing(inst, index, sol)
    b = construct_drawing(inst, index, sol)
    assert a == b
    assert a.to_json() == b.to_json()
