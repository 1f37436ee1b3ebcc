"""Finite words over {0, ..., k-1}: factor languages, complexity profiles,
entropy estimates, and the two special generators every construction leans
on (mechanical words and universal words).

Words stand in for one-sided sequences; position p of the modeled
sequence (positions start at 1) lives at symbols[p-1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .intsets import atomic_write_text, continued_fraction_value


@dataclass(frozen=True)
class SymbolWord:
    """Immutable finite word over the alphabet {0, ..., alphabet_size-1}."""

    alphabet_size: int
    symbols: tuple

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be >= 1")
        for s in self.symbols:
            if not 0 <= s < self.alphabet_size:
                raise ValueError(f"symbol {s} outside alphabet")

    def __len__(self):
        return len(self.symbols)

    def at(self, position: int) -> int:
        """Symbol at 1-based sequence position."""
        if not 1 <= position <= len(self.symbols):
            raise IndexError(position)
        return self.symbols[position - 1]

    def packed(self) -> bytes:
        if self.alphabet_size > 256:
            raise ValueError("packed() needs alphabet_size <= 256")
        return bytes(self.symbols)


def word(alphabet_size, symbols) -> SymbolWord:
    return SymbolWord(alphabet_size, tuple(symbols))


def factors(w: SymbolWord, n: int) -> list:
    """Distinct length-n factors of w, lexicographically sorted tuples."""
    if not 1 <= n <= len(w):
        raise ValueError(f"factor length {n} out of range for |w| = {len(w)}")
    data = w.packed()
    seen = {data[i:i + n] for i in range(len(data) - n + 1)}
    return [tuple(b) for b in sorted(seen)]


def factor_count(w: SymbolWord, n: int) -> int:
    if not 1 <= n <= len(w):
        raise ValueError(f"factor length {n} out of range for |w| = {len(w)}")
    data = w.packed()
    return len({data[i:i + n] for i in range(len(data) - n + 1)})


@dataclass(frozen=True)
class ComplexityProfile:
    """p(n) = number of distinct length-n factors, with h(n) = log p(n) / n."""

    alphabet_size: int
    word_length: int
    p: dict
    h_est: dict

    def violations(self) -> list:
        """Invariant check: p(n) <= k^n, submultiplicativity, monotone head."""
        out = []
        k = self.alphabet_size
        ns = sorted(self.p)
        for n in ns:
            if self.p[n] > k ** n:
                out.append(f"p({n}) = {self.p[n]} exceeds k^n")
        peak = max(ns, key=lambda n: (self.p[n], -n))
        prev = 0
        for n in ns:
            if n > peak:
                break
            if self.p[n] < prev:
                out.append(f"p not nondecreasing at n = {n}")
            prev = self.p[n]
        for n in ns:
            for m in ns:
                if n + m in self.p and self.p[n + m] > self.p[n] * self.p[m]:
                    out.append(f"p({n + m}) > p({n}) p({m})")
        return out


def complexity_profile(w: SymbolWord, n_max: int = None,
                       allow_deep: bool = False) -> ComplexityProfile:
    """Factor counts for n = 1..n_max.

    n_max defaults to |w|/2 and is capped there unless allow_deep is set:
    beyond half the length the profile measures the prefix artifact, not
    the sequence it approximates.
    """
    if len(w) < 2:
        raise ValueError("word too short for a profile")
    cap = len(w) // 2
    if n_max is None:
        n_max = cap
    if n_max > cap and not allow_deep:
        raise ValueError(f"n_max {n_max} beyond |w|/2 = {cap}; pass allow_deep=True")
    if n_max > len(w):
        raise ValueError("n_max exceeds word length")
    data = w.packed()
    p = {}
    h = {}
    for n in range(1, n_max + 1):
        cnt = len({data[i:i + n] for i in range(len(data) - n + 1)})
        p[n] = cnt
        h[n] = math.log(cnt) / n
    return ComplexityProfile(w.alphabet_size, len(w), p, h)


@dataclass(frozen=True)
class EntropyEstimate:
    n_max: int
    at_n_max: float
    infimum: float


def entropy_estimate(profile: ComplexityProfile) -> EntropyEstimate:
    """log p(n)/n at the deepest computed n, and the infimum over all n."""
    if not profile.p:
        raise ValueError("empty profile")
    n_max = max(profile.p)
    return EntropyEstimate(n_max, profile.h_est[n_max], min(profile.h_est.values()))


def mechanical_word(delta, length: int) -> SymbolWord:
    """Indicator word of S = {floor(m/delta) : m in N} on positions 1..length.

    delta is an exact rational in (0, 1/2], given as a Fraction or as a
    truncated continued fraction.  Every length-m factor carries at most
    ceil(m*delta) ones.
    """
    if isinstance(delta, (list, tuple)):
        delta = continued_fraction_value(delta)
    delta = Fraction(delta)
    if not 0 < delta <= Fraction(1, 2):
        raise ValueError("delta must lie in (0, 1/2]")
    if length < 1:
        raise ValueError("length must be >= 1")
    p, q = delta.numerator, delta.denominator
    sym = [0] * length
    m = 1
    while True:
        x = (m * q) // p
        if x > length:
            break
        sym[x - 1] = 1
        m += 1
    return SymbolWord(2, tuple(sym))


def _de_bruijn(k: int, n: int) -> list:
    """Cyclic de Bruijn sequence of order n over {0..k-1} (FKM algorithm)."""
    if k == 1:
        return [0]
    a = [0] * (k * n)
    seq = []

    def db(t, p):
        if t > n:
            if n % p == 0:
                seq.extend(a[1:p + 1])
        else:
            a[t] = a[t - p]
            db(t + 1, p)
            for j in range(a[t - p] + 1, k):
                a[t] = j
                db(t + 1, t)

    db(1, 1)
    return seq


def universal_word(k: int, max_len: int) -> SymbolWord:
    """A word containing every word of length <= max_len over {0..k-1}.

    Concatenates linearized de Bruijn sequences of orders 1..max_len, so
    prefixes already cover all short orders; total length stays below the
    k^L * L + k budget.
    """
    if k < 1 or max_len < 1:
        raise ValueError("need k >= 1 and max_len >= 1")
    sym = []
    for n in range(1, max_len + 1):
        cyc = _de_bruijn(k, n)
        sym.extend(cyc)
        sym.extend(cyc[:n - 1])
    return SymbolWord(k, tuple(sym))


def write_word_file(path, w: SymbolWord) -> None:
    """Header 'k=<alphabet>', then symbols; digits for k <= 10.

    Written atomically (temp file + rename)."""
    lines = [f"k={w.alphabet_size}"]
    if w.alphabet_size <= 10:
        text = "".join(str(s) for s in w.symbols)
        lines.extend(text[i:i + 120] for i in range(0, len(text), 120))
    else:
        lines.extend(
            ",".join(str(s) for s in w.symbols[i:i + 40])
            for i in range(0, len(w.symbols), 40))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_word_file(path) -> SymbolWord:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if not header.startswith("k="):
            raise ValueError(f"{path}: missing k= header")
        k = int(header[2:])
        body = [line.strip() for line in fh if line.strip()]
    if k <= 10:
        sym = tuple(int(c) for line in body for c in line)
    else:
        sym = tuple(int(x) for line in body for x in line.split(","))
    return SymbolWord(k, sym)
