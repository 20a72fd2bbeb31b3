"""Acceptance gate.  One test per criterion, each printing a single PASS
line (run with -s to see them; a failed criterion shows up as a failed
test).  All checks are exact integer comparisons and every criterion
carries a wall-clock budget measured around the work it performs."""

import random
import time

import networkx as nx

import oracles
from simgadget import (
    Multigraph,
    construct_certificate_1sefe,
    construct_drawing,
    decode_solution,
    emit_svg,
    expand_to_k,
    generate_yes_instance,
    min_private_edge_crossings,
    planarity_test,
    reduce_1sefe,
    reduce_gracsim,
    solve_brute_force,
    split_layers,
    validate_instance,
    value_triples,
    verify_certificate,
    verify_drawing,
    wheel_instance,
)
from simgadget.graphs import nx_graph
from simgadget.sefe import transversal_matchings

RUNNING_B = 24
RUNNING_A = [7, 7, 10, 7, 8, 9, 8, 8, 8]
KNOWN_TRIPLES = [(7, 7, 10), (7, 8, 9), (8, 8, 8)]


def test_criterion_1_drawing_pipeline_on_running_example():
    start = time.monotonic()
    inst = validate_instance(RUNNING_B, RUNNING_A)
    sol = solve_brute_force(inst)
    assert sol is not None
    assert value_triples(inst, sol) == KNOWN_TRIPLES

    big, index = reduce_gracsim(inst)
    assert big.n == 484
    assert len(big.edges) == 787 == 10 * RUNNING_B * 3 + 20 * 3 + 7

    drawing = construct_drawing(big, index, sol)
    report = verify_drawing(big, drawing)
    assert report.valid is True
    assert report.violations == ()
    assert len(report.crossings) == 153 == 3 * (2 * RUNNING_B + 3)
    for rec in report.crossings:
        assert rec.right_angle is True
        assert set(rec.labels) == {"p1", "p2"}

    decoded = decode_solution(big, index, drawing)
    assert value_triples(inst, decoded) == KNOWN_TRIPLES

    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    print(f"PASS criterion 1: solve/reduce/draw/verify/decode round trip ({elapsed:.2f}s)")


def test_criterion_2_certificate_pipeline_on_running_example():
    start = time.monotonic()
    inst = validate_instance(RUNNING_B, RUNNING_A)
    sol = solve_brute_force(inst)
    big, index = reduce_1sefe(inst)
    B, m = index.B, index.m
    assert big.n == 300
    assert len(big.edges) == 585 == 8 * B * m + 2 * m + 3

    shared, _, _, _ = split_layers(big)
    graph = nx_graph(shared)
    isolated = {v for v in graph if graph.degree(v) == 0}
    # transversal interiors are exactly the shared-isolated vertices;
    # the two transversal matchings have (B-1)m = 69 edges apiece
    assert len(isolated) == (2 * B - 1) * m == 141
    m1, m2 = transversal_matchings(index)
    assert len(m1) == len(m2) == (B - 1) * m == 69

    cert = construct_certificate_1sefe(big, index, sol)
    assert cert.total_crossings() == 2 * B * m == 144
    assert verify_certificate(big, cert, 1) is True
    assert verify_certificate(big, cert, 0) is False

    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    print(f"PASS criterion 2: shared-layer census and cap-1 certificate ({elapsed:.2f}s)")


def test_criterion_3_expansion_recertifies_at_higher_caps():
    start = time.monotonic()
    inst = validate_instance(RUNNING_B, RUNNING_A)
    sol = solve_brute_force(inst)
    base, index = reduce_1sefe(inst)
    for k in (2, 3):
        big, bigidx = expand_to_k(base, index, k)
        assert big.n == 300 + 144 * k
        assert len(big.edges) == 441 + 288 * k
        cert = construct_certificate_1sefe(big, bigidx, sol)
        assert cert.total_crossings() == 2 * index.B * index.m * k
        assert verify_certificate(big, cert, k) is True
        assert verify_certificate(big, cert, k - 1) is False

    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    print(f"PASS criterion 3: k in {{2,3}} expansion certificates ({elapsed:.2f}s)")


def test_criterion_4_wheel_separation():
    start = time.monotonic()
    for k in (1, 2, 3):
        w = wheel_instance(k)
        edge = (0, k + 2, "p1")                # (u_0, v_0)
        assert min_private_edge_crossings(w, edge, k) is None
        assert min_private_edge_crossings(w, edge, k + 1) == k + 1

    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"PASS criterion 4: wheels separate cap k from cap k+1 ({elapsed:.2f}s)")


def test_criterion_5_property_sweeps():
    start = time.monotonic()

    # (a) planarity against the subdivision-search oracle
    rng = random.Random(20240817)
    for _ in range(200):
        n = rng.randint(1, 8)
        edges = tuple(
            (rng.randrange(n), rng.randrange(n))
            for _ in range(rng.randint(0, 18))
        )
        assert planarity_test(Multigraph(n, edges)) == oracles.planar_by_kuratowski(n, edges)
    named = [
        (5, tuple((u, v) for u in range(5) for v in range(u + 1, 5)), False),
        (6, tuple((u, v + 3) for u in range(3) for v in range(3)), False),
        (4, tuple((u, v) for u in range(4) for v in range(u + 1, 4)), True),
    ]
    for n in range(4, 9):
        named.append((n, tuple(nx.wheel_graph(n).edges()), True))
    wheel_union = wheel_instance(1)
    named.append((wheel_union.n, tuple((u, v) for u, v, _ in wheel_union.edges), False))
    for n, edges, expected in named:
        assert planarity_test(Multigraph(n, edges)) is expected
        assert oracles.planar_by_kuratowski(n, edges) is expected

    # (b) 50 seeded yes-instances, m <= 4 and B <= 40, drawn and decoded
    # (B = 8 admits no in-range triple, so the sweep starts at 9)
    for s in range(50):
        m = s % 4 + 1
        B = 9 + (5 * s) % 32
        src, planted = generate_yes_instance(m, B, seed=s)
        big, index = reduce_gracsim(src)
        drawing = construct_drawing(big, index, planted)
        report = verify_drawing(big, drawing)
        assert report.valid, (m, B, s)
        assert decode_solution(big, index, drawing) == planted

    # (c) solver vs. the independent partition enumerator, 3m <= 9
    for seed in range(12):
        m = seed % 3 + 1
        B = 13 + 7 * (seed % 4)
        inst, _ = generate_yes_instance(m, B, seed=seed)
        got = solve_brute_force(inst)
        want = oracles.all_triple_partitions(B, list(inst.A))
        assert got is not None and want
        assert list(got.triples) == list(want[0])
    shuffled = validate_instance(13, [5, 4, 4, 4, 5, 4])
    assert list(solve_brute_force(shuffled).triples) == list(
        oracles.all_triple_partitions(13, [5, 4, 4, 4, 5, 4])[0]
    )

    # (d) the no-instance stays a no-instance under both solvers
    no = validate_instance(13, [4, 4, 4, 4, 4, 6])
    assert solve_brute_force(no) is None
    assert oracles.all_triple_partitions(13, [4, 4, 4, 4, 4, 6]) == []

    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    print(f"PASS criterion 5: oracle sweeps a-d ({elapsed:.2f}s)")


def test_criterion_6_byte_identical_reruns():
    start = time.monotonic()
    inst = validate_instance(RUNNING_B, RUNNING_A)
    sol = solve_brute_force(inst)

    def pipeline() -> list[str]:
        out = [inst.to_json(), sol.to_json()]
        big, index = reduce_gracsim(inst)
        out += [big.to_json(), index.to_json()]
        drawing = construct_drawing(big, index, sol)
        report = verify_drawing(big, drawing)
        decoded = decode_solution(big, index, drawing)
        out += [drawing.to_json(), report.to_json(big), decoded.to_json()]
        out.append(emit_svg(big, drawing=drawing, stretch=2))
        se, sei = reduce_1sefe(inst)
        ek, eki = expand_to_k(se, sei, 2)
        out += [se.to_json(), sei.to_json(), ek.to_json(), eki.to_json()]
        cert = construct_certificate_1sefe(se, sei, sol)
        out += [cert.to_json(), emit_svg(se, cert=cert)]
        return out

    first = pipeline()
    second = pipeline()
    assert first == second

    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"PASS criterion 6: every stage reruns byte-identically ({elapsed:.2f}s)")
