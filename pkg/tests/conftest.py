"""Shared fixtures: the running example instance (m=3, B=24) and its
reduced/drawn/certified artifacts, built once per session."""

import pytest

from simgadget import (
    construct_certificate_1sefe,
    construct_drawing,
    reduce_1sefe,
    reduce_gracsim,
    solve_brute_force,
    validate_instance,
    verify_drawing,
)

RUNNING_B = 24
RUNNING_A = [7, 7, 10, 7, 8, 9, 8, 8, 8]


@pytest.fixture(scope="session")
def running_instance():
    return validate_instance(RUNNING_B, RUNNING_A)


@pytest.fixture(scope="session")
def running_solution(running_instance):
    sol = solve_brute_force(running_instance)
    assert sol is not None
    return sol


@pytest.fixture(scope="session")
def running_gracsim(running_instance):
    return reduce_gracsim(running_instance)


@pytest.fixture(scope="session")
def running_drawing(running_gracsim, running_solution):
    inst, index = running_gracsim
    return construct_drawing(inst, index, running_solution)


@pytest.fixture(scope="session")
def running_report(running_gracsim, running_drawing):
    inst, _ = running_gracsim
    return verify_drawing(inst, running_drawing)


@pytest.fixture(scope="session")
def running_1sefe(running_instance):
    return reduce_1sefe(running_instance)


@pytest.fixture(scope="session")
def running_cert(running_1sefe, running_solution):
    inst, index = running_1sefe
    return construct_certificate_1sefe(inst, index, running_solution)


@pytest.fixture(scope="session")
def small_gracsim():
    """m=1, B=10 pipeline, cheap enough for per-test reuse."""
    inst3p = validate_instance(10, [3, 3, 4])
    sefe, index = reduce_gracsim(inst3p)
    sol = solve_brute_force(inst3p)
    return inst3p, sefe, index, sol


@pytest.fixture(scope="session")
def small_1sefe():
    inst3p = validate_instance(10, [3, 3, 4])
    sefe, index = reduce_1sefe(inst3p)
    sol = solve_brute_force(inst3p)
    return inst3p, sefe, index, sol
