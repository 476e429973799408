import pytest

from monophilic import paths
from monophilic.counting import col, col_brute_force, col_uniform
from monophilic.errors import InputError
from monophilic.graph import build_cycle, build_path
from monophilic.paths import A, B, PathListKind, cycle_uniform_count, make_path_assignment


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", range(1, 9))
def test_closed_forms_match_counts(k, n):
    P = build_path(k)
    assert col(P, make_path_assignment(k, n, PathListKind.TypeA)) == A(k, n)
    assert col(P, make_path_assignment(k, n, "B")) == B(k, n)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", range(1, 5))
def test_closed_forms_match_brute_force(k, n):
    P = build_path(k)
    assert col_brute_force(P, make_path_assignment(k, n, PathListKind.TypeA)) == A(k, n)
    assert col_brute_force(P, make_path_assignment(k, n, PathListKind.TypeB)) == B(k, n)


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("k", range(2, 13))
def test_recurrences_and_difference(k, n):
    assert A(k, n) == (n - 1) * B(k - 1, n)
    assert B(k, n) == A(k - 1, n) + (n - 2) * B(k - 1, n)
    assert A(k, n) - B(k, n) == (-1) ** k
    assert A(k, n) == paths.A_recursive(k, n) and B(k, n) == paths.B_recursive(k, n)


def test_small_values():
    assert [A(k, 2) for k in range(1, 6)] == [0, 1, 0, 1, 0]
    assert [B(k, 2) for k in range(1, 6)] == [1, 0, 1, 0, 1]
    assert A(1, 3) == 2 and B(1, 3) == 3


@pytest.mark.parametrize("k", range(3, 10))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_cycle_count(k, n):
    assert cycle_uniform_count(k, n) == col_uniform(build_cycle(k), n) == (n - 1) ** k + (-1) ** k * (n - 1)


def test_domain_errors():
    with pytest.raises(InputError):
        A(0, 3)
    with pytest.raises(InputError):
        B(3, 1)
    with pytest.raises(InputError):
        cycle_uniform_count(2, 3)
