"""The sum-free set F with shifted IP structure, built and verified
exhaustively up to a bound.

F = union over n of (J_n + n), where J_n is the IP-set generated by
{10^k : k in I_n} and the index sets I_n = {2^(n-1) (2i-1) : i >= 1} are
pairwise disjoint with min I_n = 2^(n-1) >= n.  All arithmetic in base
10 is carry-free, which gives a second, digit-based membership oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .intsets import IntegerSetModel


def canonical_index(n: int, i: int) -> int:
    """i-th element (1-based) of I_n = {2^(n-1) (2i-1)}."""
    if n < 1 or i < 1:
        raise ValueError("need n >= 1 and i >= 1")
    return (1 << (n - 1)) * (2 * i - 1)


def index_set(n: int, upto: int) -> list:
    """Elements of I_n that are <= upto."""
    out = []
    i = 1
    while True:
        v = canonical_index(n, i)
        if v > upto:
            return out
        out.append(v)
        i += 1


def in_index_set(k: int, n: int) -> bool:
    """k in I_n iff the 2-adic valuation of k equals n - 1."""
    if k < 1:
        return False
    v = (k & -k).bit_length() - 1
    return v == n - 1


def ip_closure(generators, depth: int, bound: int) -> list:
    """All sums of at most `depth` distinct generators, up to `bound`."""
    gens = sorted(set(int(g) for g in generators))
    if gens and gens[0] < 1:
        raise ValueError("generators must be positive")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    out = set()

    def rec(i, acc, used):
        if used == depth:
            return
        for j in range(i, len(gens)):
            v = acc + gens[j]
            if v > bound:
                break
            out.add(v)
            rec(j + 1, v, used + 1)

    rec(0, 0, 0)
    return sorted(out)


@dataclass(frozen=True)
class FSetModel:
    """F intersected with [1, N], with per-element provenance."""

    bound: int
    elements: tuple                # ascending
    provenance: dict               # element -> (n, j) with j in J_n, element = j + n
    index_sets: dict               # n -> materialized slice of I_n

    def as_intset(self) -> IntegerSetModel:
        return IntegerSetModel.explicit_window(self.elements, self.bound)


def _digit_positions(y: int):
    """(ok, positions) where positions lists the decimal places of 1-digits;
    ok is False when any digit exceeds 1."""
    pos = []
    p = 0
    while y:
        y, d = divmod(y, 10)
        if d > 1:
            return False, []
        if d == 1:
            pos.append(p)
        p += 1
    return True, pos


def build_F(n_bound: int) -> FSetModel:
    """Materialize F = union(J_n + n) on [1, n_bound] by subset sums."""
    if n_bound < 11:
        return FSetModel(n_bound, (), {}, {})
    elements = []
    provenance = {}
    index_sets = {}
    n = 1
    while 10 ** (1 << (n - 1)) + n <= n_bound:
        max_power = 1
        while 10 ** (max_power + 1) <= n_bound - n:
            max_power += 1
        idx = [k for k in index_set(n, max_power)]
        index_sets[n] = idx
        gens = [10 ** k for k in idx]
        for j in ip_closure(gens, depth=len(gens) if gens else 1,
                            bound=n_bound - n):
            x = j + n
            elements.append(x)
            provenance[x] = (n, j)
        n += 1
    elements.sort()
    if len(set(elements)) != len(elements):
        raise AssertionError("J_n + n overlapped; dyadic disjointness broken")
    return FSetModel(n_bound, tuple(elements), provenance, index_sets)


@dataclass(frozen=True)
class SumFreeReport:
    ok: bool
    counterexample: tuple | None   # (x, y, x + y) if found
    pairs_checked: int


def verify_sum_free(elements, n_bound: int) -> SumFreeReport:
    """Check x + y not in the set for every pair x <= y with x + y <= bound."""
    elems = sorted(elements)
    member = set(elems)
    checked = 0
    for i, x in enumerate(elems):
        for y in elems[i:]:
            s = x + y
            if s > n_bound:
                break
            checked += 1
            if s in member:
                return SumFreeReport(False, (x, y, s), checked)
    return SumFreeReport(True, None, checked)


@dataclass(frozen=True)
class ShiftIPReport:
    n: int
    depth: int
    ok: bool
    required: tuple
    missing: tuple


def verify_shift_ip(f_model: FSetModel, n: int, depth: int) -> ShiftIPReport:
    """Check that F - n contains the depth-truncated IP closure of
    {10^k : k in I_n}, for every materialized element within the bound."""
    if n < 1:
        raise ValueError("n must be >= 1")
    max_power = 0
    while 10 ** (max_power + 1) <= f_model.bound - n:
        max_power += 1
    gens = [10 ** k for k in index_set(n, max_power)]
    required = ip_closure(gens, depth, f_model.bound - n) if gens else []
    member = set(f_model.elements)
    missing = tuple(j for j in required if j + n not in member)
    return ShiftIPReport(n, depth, not missing, tuple(required), missing)


def digit_membership(x: int, n_max: int = 64):
    """(member, n) via the sparse-digit oracle: x in F iff for some n the
    decimal digits of x - n are all 0/1 with 1s exactly at places in I_n."""
    n = 1
    while n <= n_max and 10 ** (1 << (n - 1)) + n <= x:
        ok, pos = _digit_positions(x - n)
        if ok and pos and all(in_index_set(p, n) for p in pos):
            return True, n
        n += 1
    return False, None


def digit_enumerate(n_bound: int, chunk: int = 1_000_000) -> list:
    """All members of F in [1, n_bound] found by applying the digit oracle
    to every integer (vectorized in chunks); independent of build_F."""
    digits_needed = len(str(n_bound))
    shifts = []
    n = 1
    while 10 ** (1 << (n - 1)) + n <= n_bound:
        allowed = np.zeros(digits_needed + 1, dtype=bool)
        for p in range(1, digits_needed + 1):
            allowed[p] = in_index_set(p, n)
        shifts.append((n, allowed))
        n += 1
    found = []
    start = 1
    while start <= n_bound:
        stop = min(start + chunk - 1, n_bound)
        arr = np.arange(start, stop + 1, dtype=np.int64)
        for n, allowed in shifts:
            y = arr - n
            valid = y >= 10
            bad = np.zeros(arr.shape, dtype=bool)
            any_one = np.zeros(arr.shape, dtype=bool)
            rest = np.where(valid, y, 0)
            for p in range(digits_needed + 1):
                d = rest % 10
                rest = rest // 10
                bad |= d > 1
                one = d == 1
                if allowed[p] if p <= digits_needed else False:
                    any_one |= one
                else:
                    bad |= one
            hit = valid & ~bad & any_one
            if hit.any():
                found.extend(int(v) for v in arr[hit])
        start = stop + 1
    return sorted(set(found))
