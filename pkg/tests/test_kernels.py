"""Backend parity: the compiled kernels must match the pure-Python ones
bit for bit, and both must match definitional oracles."""

import random

import pytest

from partitionlab import _kernels_py

try:
    from partitionlab import _speedups
except ImportError:
    _speedups = None

BACKENDS = [_kernels_py] + ([_speedups] if _speedups is not None else [])
IDS = ["pure"] + (["compiled"] if _speedups is not None else [])


@pytest.fixture(params=BACKENDS, ids=IDS)
def backend(request):
    return request.param


def test_compiled_backend_is_built():
    # the extension is part of the default build; fail loudly if missing
    assert _speedups is not None


def naive_convolve(a, b):
    n = len(a)
    out = [0] * n
    for i in range(n):
        for j in range(n):
            if i + j < n:
                out[i + j] += a[i] * b[j]
    return out


def test_convolve_small(backend):
    assert backend.convolve([1, 1, 0], [1, -1, 0]) == [1, 0, -1]
    assert backend.convolve([2], [3]) == [6]
    assert backend.convolve([0, 1, 2], [5, 0, 0]) == [0, 5, 10]


def test_convolve_matches_naive_on_random_input(backend):
    rng = random.Random(12345)
    for _ in range(20):
        n = rng.randrange(1, 40)
        a = [rng.randrange(-10**30, 10**30) for _ in range(n)]
        b = [rng.randrange(-10**30, 10**30) for _ in range(n)]
        assert backend.convolve(a, b) == naive_convolve(a, b)


def test_convolve_rejects_order_mismatch(backend):
    with pytest.raises(ValueError):
        backend.convolve([1, 2], [1, 2, 3])


def test_invert_geometric(backend):
    assert backend.invert_unit([1, -1, 0, 0]) == [1, 1, 1, 1]


def test_invert_roundtrip_random(backend):
    rng = random.Random(999)
    for lead in (1, -1):
        for _ in range(10):
            n = rng.randrange(1, 30)
            a = [lead] + [rng.randrange(-10**20, 10**20) for _ in range(n)]
            inv = backend.invert_unit(a)
            unit = backend.convolve(a, inv)
            assert unit == [1] + [0] * n


def test_invert_rejects_non_unit(backend):
    with pytest.raises(ValueError):
        backend.invert_unit([0, 1])
    with pytest.raises(ValueError):
        backend.invert_unit([2, 1])
    with pytest.raises(ValueError):
        backend.invert_unit([])


def brute_stat_sums(n, k_max):
    """Definitional oracle: run over explicit partitions of n."""
    from partitionlab.enumeration import part_multiplicities, partitions

    A = [[0] * k for k in range(1, k_max + 1)]
    B = [0] * k_max
    for parts in partitions(n):
        mults = part_multiplicities(parts)
        for v, m in mults.items():
            for k in range(1, k_max + 1):
                A[k - 1][v % k] += v
                if m >= k:
                    B[k - 1] += v
    return A, B


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9, 14])
def test_stat_sums_match_definition(backend, n):
    assert backend.ab_stat_sums(n, 6) == brute_stat_sums(n, 6)


def test_stat_sums_domain_errors(backend):
    with pytest.raises(ValueError):
        backend.ab_stat_sums(-1, 3)
    with pytest.raises(ValueError):
        backend.ab_stat_sums(5, 0)
    with pytest.raises(ValueError):
        backend.ab_stat_sums(backend.MAX_SWEEP_N + 1, 1)


@pytest.mark.skipif(_speedups is None, reason="extension not built")
def test_backends_agree_on_larger_sweeps():
    for n in (20, 33):
        assert _speedups.ab_stat_sums(n, 8) == _kernels_py.ab_stat_sums(n, 8)
    euler = [0] * 200
    euler[0] = 1
    # (q;q)_inf coefficients by the pentagonal formula
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 >= 200 and g2 >= 200:
            break
        s = -1 if j % 2 else 1
        if g1 < 200:
            euler[g1] = s
        if g2 < 200:
            euler[g2] = s
        j += 1
    assert _speedups.invert_unit(euler) == _kernels_py.invert_unit(euler)
