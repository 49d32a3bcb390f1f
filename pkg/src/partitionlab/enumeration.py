"""Brute-force oracles for every partition statistic.

Everything in this module computes statistics directly from their
verbal definitions by enumerating objects (partitions, marked
overpartitions, subsets), independently of the series machinery in
`stats`.  Partitions are represented as weakly decreasing tuples of
positive integers; the empty tuple is the single partition of 0.

The full-sweep statistics are capped (PARTITION_SWEEP_CAP /
SUBSET_SWEEP_CAP) so the oracle suite stays fast; pass an explicit
`cap` to go further.
"""

from dataclasses import dataclass

import numpy

from . import kernels
from .series import pentagonal_number

PARTITION_SWEEP_CAP = 60
SUBSET_SWEEP_CAP = 25


def partitions(n, max_part=None):
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    For n=5: (5,), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1), (1,1,1,1,1).
    With max_part set, only partitions whose largest part is <= max_part
    are produced (same order).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    cap = n if max_part is None or max_part > n else max_part
    if cap < 1:
        return
    full, rem = divmod(n, cap)
    r = (cap,) * full + ((rem,) if rem else ())
    yield r
    while True:
        # successor: decrement the last part exceeding 1, then refill the
        # freed weight greedily under the new bound
        i = len(r) - 1
        while i >= 0 and r[i] == 1:
            i -= 1
        if i < 0:
            return
        freed = len(r) - i
        r = r[:i] + (r[i] - 1,)
        bound = r[-1]
        while freed > 0:
            take = bound if bound < freed else freed
            r += (take,)
            freed -= take
        yield r


def part_multiplicities(parts):
    """Map each distinct part value of a partition to its multiplicity."""
    m = {}
    for v in parts:
        m[v] = m.get(v, 0) + 1
    return m


def partition_count_table(n_max):
    """p(0..n_max) by the pentagonal-number recurrence (fast count oracle)."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        j = 1
        while True:
            g_pos = pentagonal_number(j)
            g_neg = pentagonal_number(-j)
            if g_pos > n and g_neg > n:
                break
            sign = -1 if j % 2 == 0 else 1
            if g_pos <= n:
                total += sign * p[n - g_pos]
            if g_neg <= n:
                total += sign * p[n - g_neg]
            j += 1
        p[n] = total
    return p


def _check_sweep(n, cap):
    limit = PARTITION_SWEEP_CAP if cap is None else cap
    if n > limit:
        raise ValueError("n=%d exceeds the enumeration cap %d" % (n, limit))


# n -> (k_max, A, B); one partition sweep covers every k <= k_max, so a
# cached entry is reused by any request with a smaller k
_sweep_cache = {}


def _stat_sums(n, k):
    entry = _sweep_cache.get(n)
    if entry is None or entry[0] < k:
        A, B = kernels.ab_stat_sums(n, k)
        entry = (k, tuple(tuple(row) for row in A), tuple(B))
        _sweep_cache[n] = entry
    return entry


def warm_statistics_cache(n_max, k_max):
    """Run the partition sweep once per n covering all k <= k_max."""
    for n in range(1, n_max + 1):
        _stat_sums(n, k_max)


def clear_statistics_cache():
    _sweep_cache.clear()


def a_kp(n, k, p, cap=None):
    """Total over all partitions of n of the distinct part values = p (mod k).

    Each qualifying value contributes once per partition no matter how
    many times it occurs there.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 <= p < k:
        raise ValueError("need 0 <= p < k")
    _check_sweep(n, cap)
    return _stat_sums(n, k)[1][k - 1][p]


def a_k(n, k, cap=None):
    """Total over all partitions of n of the distinct part values divisible by k."""
    return a_kp(n, k, 0, cap)


def b_k(n, k, cap=None):
    """Total over all partitions of n of the distinct part values with multiplicity >= k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_sweep(n, cap)
    return _stat_sums(n, k)[2][k - 1]


def m_ell(n, ell, cap=None):
    """Count partitions of n where ell is the least positive non-part and
    parts greater than ell outnumber parts less than ell.

    Both counts take multiplicity into account.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    _check_sweep(n, cap)
    count = 0
    for parts in partitions(n):
        values = set(parts)
        if ell in values:
            continue
        if any(v not in values for v in range(1, ell)):
            continue
        greater = sum(1 for v in parts if v > ell)
        less = sum(1 for v in parts if v < ell)
        if greater > less:
            count += 1
    return count


def q_distinct(n, cap=None):
    """Number of partitions of n into distinct parts; 1 for n=0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_sweep(n, cap)
    return sum(1 for parts in partitions(n) if len(set(parts)) == len(parts))


def c_subsets(n, cap=None):
    """Count subsets of {1..n} containing an element greater than the sum
    of the other elements (singletons qualify).

    Exhaustive sweep over all 2^n subsets, organized by top element: the
    masks in [2^i, 2^(i+1)) are exactly the subsets whose largest element
    is i+1, so their sums extend the already-computed prefix by i+1.
    Sums stay <= n(n+1)/2 <= 325, comfortably exact in int16.
    """
    limit = SUBSET_SWEEP_CAP if cap is None else cap
    if not 0 <= n <= limit:
        raise ValueError("n=%d outside 0..%d (exhaustive 2^n sweep)" % (n, limit))
    if n == 0:
        return 0
    sums = numpy.zeros(1 << n, dtype=numpy.int16)
    count = 0
    for i in range(n):
        lo = 1 << i
        block = sums[:lo] + numpy.int16(i + 1)
        sums[lo : 2 * lo] = block
        # top element i+1 dominates iff i+1 > sum - (i+1)
        count += int(numpy.count_nonzero(block < 2 * (i + 1)))
    return count


@dataclass(frozen=True)
class OverpartitionMarked:
    """A partition with one overlined part value and optionally one colored one.

    Overline and color mark distinct part occurrences, so colored may
    equal overlined only when that value occurs at least twice in base.
    """

    base: tuple
    overlined: int
    colored: int | None = None


def overpartitions_p(n, k):
    """Yield the overpartitions of n with exactly one overlined part divisible by k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    for parts in partitions(n):
        for v in sorted(part_multiplicities(parts)):
            if v % k == 0:
                yield OverpartitionMarked(parts, v)


def overpartitions_a(n, k):
    """Yield the colored overpartitions of n: one overlined part divisible
    by k plus at most one other colored part divisible by k.

    Marks attach to part occurrences: overlining and coloring the same
    value needs multiplicity >= 2, and (overlined v, colored w) is a
    different object from (overlined w, colored v).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    for parts in partitions(n):
        mults = part_multiplicities(parts)
        divisible = [v for v in sorted(mults) if v % k == 0]
        for v in divisible:
            yield OverpartitionMarked(parts, v)
            for w in divisible:
                if w == v and mults[v] < 2:
                    continue
                yield OverpartitionMarked(parts, v, w)


def mp_ell(n, ell, cap=None):
    """Count partitions of n whose smallest part greater than 2*ell-1 is odd
    and occurs exactly ell times, with every other odd part occurring at
    most once (even parts are unrestricted).

    Partitions with no part above 2*ell-1 are not counted.  This is the
    reading that agrees with the series evaluation (stats.mp_ell_table)
    everywhere; see mp_ell_verbal for the looser published wording.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    _check_sweep(n, cap)
    count = 0
    threshold = 2 * ell - 1
    for parts in partitions(n):
        mults = part_multiplicities(parts)
        above = [v for v in mults if v > threshold]
        if not above:
            continue
        special = min(above)
        if special % 2 == 0 or mults[special] != ell:
            continue
        if any(v % 2 == 1 and m > 1 for v, m in mults.items() if v != special):
            continue
        count += 1
    return count


def mp_ell_verbal(n, ell, cap=None):
    """The literal verbal counting: smallest part greater than 2*ell-1 is odd
    and occurs exactly ell times, ALL other parts occur at most once; when no
    part exceeds 2*ell-1 the condition degenerates to all parts distinct.

    Disagrees with the series evaluation (e.g. gives 3 instead of 0 at
    n=5, ell=3); kept so the discrepancy can be inspected, not patched.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    _check_sweep(n, cap)
    count = 0
    threshold = 2 * ell - 1
    for parts in partitions(n):
        mults = part_multiplicities(parts)
        above = [v for v in mults if v > threshold]
        if not above:
            if all(m == 1 for m in mults.values()):
                count += 1
            continue
        special = min(above)
        if special % 2 == 0 or mults[special] != ell:
            continue
        if any(m > 1 for v, m in mults.items() if v != special):
            continue
        count += 1
    return count


def mp_verbal_discrepancies(ell, n_max, series_values):
    """List (n, verbal count, series value) wherever the two disagree.

    series_values must cover 0..n_max (e.g. stats.mp_ell_table(ell, n_max)
    values); the series side is the authoritative one.
    """
    out = []
    for n in range(1, n_max + 1):
        verbal = mp_ell_verbal(n, ell)
        if verbal != series_values[n]:
            out.append((n, verbal, series_values[n]))
    return out
