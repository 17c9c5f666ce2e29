import pytest

from cubeforge.indices import DomainError, lower, lower2, mixed, raise2, raise_

N = 12  # exhaustive range for the invariant checks


def test_raise_cases():
    assert raise_(1, 2) == 1
    assert raise_(2, 2) == 3
    assert raise_(5, 1) == 6


def test_lower_cases():
    assert lower(1, 3) == 1
    assert lower(4, 2) == 3
    with pytest.raises(DomainError):
        lower(2, 2)


def test_composites():
    assert lower2(3, 1, 2) == 1
    assert raise2(1, 2, 3) == 1
    # (2^3)_1 = 2_1 = 1, confirmed by the factorisation (2_{1_3})^{3_1} = 1^2 = 1
    assert mixed(2, 1, 3) == 1


def test_composite_domains():
    with pytest.raises(DomainError):
        lower2(1, 1, 2)
    with pytest.raises(DomainError):
        lower2(2, 3, 3)
    with pytest.raises(DomainError):
        mixed(1, 1, 2)  # i_j = 1_2 = 1
    with pytest.raises(DomainError):
        raise2(1, 4, 4)


def test_raise_lower_mutually_inverse():
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            assert lower(raise_(j, i), i) == j
            if j != i:
                assert raise_(lower(j, i), i) == j
            # the image of raise_ really avoids i
            assert raise_(j, i) != i


def test_raise2_symmetric():
    for k in range(1, N + 1):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if i == j:
                    continue
                assert raise2(k, i, j) == raise2(k, j, i)


def test_lower2_symmetric():
    for k in range(1, N + 1):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if i == j or k in (i, j):
                    continue
                assert lower2(k, i, j) == lower2(k, j, i)


def test_mixed_factorisation():
    # k^j_i = (k_{i_j})^{j_i} for k != i_j
    for k in range(1, N + 1):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if i == j or k == lower(i, j):
                    continue
                assert mixed(k, i, j) == raise_(lower(k, lower(i, j)), lower(j, i))
                # and the image avoids j_i
                assert mixed(k, i, j) != lower(j, i)
