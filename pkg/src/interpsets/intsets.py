"""Subsets of N = {1, 2, ...} with scale-tagged combinatorial certificates.

A set is described either by a closed-form generator (arithmetic
progression, powers of a fixed base, Sturmian floor set, finite subset
sums, shifts and unions of these) or by an explicit finite window.  The
syndetic / thick / piecewise-syndetic predicates are evaluated on an
explicit window [1, N] and return Certificates that can be replayed
against the set.  Nothing here claims an infinitary verdict: every
answer is tagged with the scale it was computed at.
"""

from __future__ import annotations

import bisect
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

HOLDS = "holds-at-scale"
FAILS = "fails-at-scale"


def atomic_write_text(path, text: str) -> None:
    """Write via a temp file in the same directory, then rename."""
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

KINDS = ("explicit", "ap", "powers", "sturmian", "union", "shift", "sums")


class EmptyWindowError(ValueError):
    """The operation needs S to meet [1, N] and it does not."""


class SpecGrammarError(ValueError):
    """Malformed generator spec string."""


def continued_fraction_value(cf) -> Fraction:
    """Evaluate a continued fraction [a0; a1, a2, ...] to an exact rational."""
    cf = list(cf)
    if not cf:
        raise ValueError("empty continued fraction")
    if cf[0] < 0 or any(a < 1 for a in cf[1:]):
        raise ValueError("continued fraction needs a0 >= 0 and a_i >= 1")
    value = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        value = a + 1 / value
    return value


@dataclass(frozen=True)
class IntegerSetModel:
    """A subset of N given by a generator or an explicit window.

    Membership is exact and deterministic; explicit sets are only known
    up to window_bound and refuse questions beyond it.
    """

    kind: str
    a: int = 0
    b: int = 0
    base: int = 0
    cf: tuple = ()
    members: tuple = ()
    window_bound: int | None = None
    parts: tuple = ()
    inner: "IntegerSetModel | None" = None
    t: int = 0
    gens: tuple = ()

    # -- constructors ---------------------------------------------------

    @classmethod
    def explicit_window(cls, members, window_bound=None):
        """Finite set given by its elements.  window_bound = None means the
        list is complete; a bound means membership is only known up to it."""
        ms = tuple(sorted(set(int(x) for x in members)))
        if ms and ms[0] < 1:
            raise ValueError("explicit members must be >= 1")
        if window_bound is not None and ms and ms[-1] > window_bound:
            raise ValueError("member beyond window_bound")
        return cls(kind="explicit", members=ms, window_bound=window_bound)

    @classmethod
    def arithmetic_progression(cls, a, b):
        if a < 1:
            raise ValueError("modulus a must be >= 1")
        return cls(kind="ap", a=a, b=b % a)

    @classmethod
    def lacunary_powers(cls, base):
        if base < 2:
            raise ValueError("base must be >= 2")
        return cls(kind="powers", base=base)

    @classmethod
    def sturmian_floor(cls, cf):
        delta = continued_fraction_value(cf)
        if not 0 < delta <= 1:
            raise ValueError("sturmian parameter must lie in (0, 1]")
        return cls(kind="sturmian", cf=tuple(int(a) for a in cf))

    @classmethod
    def union_of(cls, parts):
        parts = tuple(parts)
        if not parts:
            raise ValueError("union needs at least one part")
        return cls(kind="union", parts=parts)

    @classmethod
    def shifted(cls, inner, t):
        return cls(kind="shift", inner=inner, t=int(t))

    @classmethod
    def finite_sums(cls, gens):
        gs = tuple(sorted(set(int(g) for g in gens)))
        if not gs or gs[0] < 1:
            raise ValueError("generators must be positive")
        return cls(kind="sums", gens=gs)

    # -- queries ---------------------------------------------------------

    def delta(self) -> Fraction:
        if self.kind != "sturmian":
            raise ValueError("delta is only defined for sturmian sets")
        return continued_fraction_value(self.cf)

    def elements(self, n: int) -> list:
        """Sorted members of S in [1, n]."""
        return list(_elements(self, int(n)))

    def contains(self, x: int) -> bool:
        if x < 1:
            return False
        if self.kind == "explicit":
            if self.window_bound is not None and x > self.window_bound:
                raise ValueError(
                    f"membership of {x} unknown beyond window_bound {self.window_bound}"
                )
            return x in set(self.members)
        if self.kind == "ap":
            return x % self.a == self.b
        if self.kind == "powers":
            v = self.base
            while v < x:
                v *= self.base
            return v == x
        if self.kind == "sturmian":
            d = self.delta()
            # x in S iff some integer m satisfies x*d <= m < (x+1)*d
            lo = x * d
            m = -((-lo.numerator) // lo.denominator)  # ceil(lo)
            return m < (x + 1) * d or lo == m
        if self.kind == "union":
            return any(p.contains(x) for p in self.parts)
        if self.kind == "shift":
            return self.inner.contains(x - self.t)
        if self.kind == "sums":
            return x in set(_elements(self, x))
        raise ValueError(f"unknown kind {self.kind!r}")

    def exact_density(self):
        """Exact upper Banach density where the generator has a closed form."""
        if self.kind == "ap":
            return Fraction(1, self.a)
        if self.kind == "sturmian":
            return self.delta()
        return None

    def spec_string(self) -> str:
        if self.kind == "explicit":
            elems = ",".join(str(x) for x in self.members)
            spec = f"kind=explicit elements={elems}"
            if self.window_bound is not None:
                spec += f" bound={self.window_bound}"
            return spec
        if self.kind == "ap":
            return f"kind=ap a={self.a} b={self.b}"
        if self.kind == "powers":
            return f"kind=powers base={self.base}"
        if self.kind == "sturmian":
            return "kind=sturmian cf=" + ",".join(str(a) for a in self.cf)
        if self.kind == "union":
            return "kind=union of=" + "".join(f"({p.spec_string()})" for p in self.parts)
        if self.kind == "shift":
            return f"kind=shift t={self.t} of=({self.inner.spec_string()})"
        if self.kind == "sums":
            return "kind=sums gens=" + ",".join(str(g) for g in self.gens)
        raise ValueError(self.kind)


@lru_cache(maxsize=128)
def _elements(model: IntegerSetModel, n: int) -> tuple:
    if n < 1:
        return ()
    if model.kind == "explicit":
        if model.window_bound is not None and n > model.window_bound:
            raise ValueError(
                f"window {n} exceeds explicit window_bound {model.window_bound}"
            )
        return tuple(x for x in model.members if x <= n)
    if model.kind == "ap":
        start = model.b if model.b >= 1 else model.a
        return tuple(range(start, n + 1, model.a))
    if model.kind == "powers":
        out = []
        v = model.base
        while v <= n:
            out.append(v)
            v *= model.base
        return tuple(out)
    if model.kind == "sturmian":
        d = model.delta()
        p, q = d.numerator, d.denominator
        out = []
        m = 1
        while True:
            x = (m * q) // p
            if x > n:
                break
            if x >= 1 and (not out or out[-1] != x):
                out.append(x)
            m += 1
        return tuple(out)
    if model.kind == "union":
        acc = set()
        for part in model.parts:
            acc.update(_elements(part, n))
        return tuple(sorted(acc))
    if model.kind == "shift":
        sub = _elements(model.inner, n - model.t) if n - model.t >= 1 else ()
        return tuple(x + model.t for x in sub if x + model.t >= 1)
    if model.kind == "sums":
        out = set()

        def rec(i, acc):
            for j in range(i, len(model.gens)):
                v = acc + model.gens[j]
                if v <= n:
                    out.add(v)
                    rec(j + 1, v)

        rec(0, 0)
        return tuple(sorted(out))
    raise ValueError(f"unknown kind {model.kind!r}")


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """A replayable, scale-tagged witness for a set predicate."""

    predicate: str
    scale: dict
    verdict: str
    witness: dict

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        return {
            "predicate": self.predicate,
            "scale": dict(self.scale),
            "verdict": self.verdict,
            "witness": dict(self.witness),
        }

    @classmethod
    def from_json(cls, data) -> "Certificate":
        return cls(data["predicate"], dict(data["scale"]), data["verdict"],
                   dict(data["witness"]))


def gap_sequence(model: IntegerSetModel, n: int) -> list:
    """Differences between consecutive members of S in [1, n]."""
    elems = model.elements(n)
    if not elems:
        raise EmptyWindowError(f"{model.spec_string()} is empty on [1, {n}]")
    return [y - x for x, y in zip(elems, elems[1:])]


def free_runs(model: IntegerSetModel, n: int) -> list:
    """Maximal intervals [u, v] inside [1, n] disjoint from S."""
    elems = model.elements(n)
    runs = []
    prev = 0
    for e in elems:
        if e - prev >= 2:
            runs.append((prev + 1, e - 1))
        prev = e
    if prev < n:
        runs.append((prev + 1, n))
    return runs


def syndetic_certificate(model: IntegerSetModel, n: int, g: int) -> Certificate:
    """Does every length-g subwindow of [1, n] meet S?

    Equivalent to all gaps (counting a virtual element at 0) being <= g
    and the pending tail gap being < g.  The fails witness is the largest
    completed gap exceeding g, or the pending tail if only it violates.
    """
    if g < 1:
        raise ValueError("gap bound g must be >= 1")
    if n < g:
        raise ValueError("window must satisfy N >= g")
    elems = model.elements(n)
    if not elems:
        raise EmptyWindowError(f"{model.spec_string()} is empty on [1, {n}]")
    scale = {"N": n, "g": g}
    pairs = [(0, elems[0])] + list(zip(elems, elems[1:]))
    worst = max(pairs, key=lambda p: (p[1] - p[0], -p[0]))
    bad = [p for p in pairs if p[1] - p[0] > g]
    pending = n - elems[-1]
    if bad:
        wa, wb = max(bad, key=lambda p: (p[1] - p[0], -p[0]))
        witness = {"gap": [wa, wb], "length": wb - wa, "kind": "completed"}
        return Certificate("syndetic", scale, FAILS, witness)
    if pending >= g:
        witness = {"gap": [elems[-1], n + 1], "length": pending + 1,
                   "kind": "pending-tail"}
        return Certificate("syndetic", scale, FAILS, witness)
    witness = {"max_gap": [worst[0], worst[1]], "length": worst[1] - worst[0],
               "pending_tail": pending}
    return Certificate("syndetic", scale, HOLDS, witness)


def thick_certificate(model: IntegerSetModel, n: int, run_len: int) -> Certificate:
    """Does [1, n] contain run_len consecutive members of S?"""
    if run_len < 1:
        raise ValueError("run length must be >= 1")
    elems = model.elements(n)
    if not elems:
        raise EmptyWindowError(f"{model.spec_string()} is empty on [1, {n}]")
    scale = {"N": n, "L": run_len}
    best_start, best_len = elems[0], 1
    start, length = elems[0], 1
    hit = None
    for x, y in zip(elems, elems[1:]):
        if y == x + 1:
            length += 1
        else:
            start, length = y, 1
        if length > best_len:
            best_start, best_len = start, length
        if length >= run_len and hit is None:
            hit = start
    if run_len == 1:
        hit = elems[0]
    if hit is not None:
        return Certificate("thick", scale, HOLDS, {"run_start": hit, "length": run_len})
    return Certificate("thick", scale, FAILS,
                       {"longest_run_start": best_start, "longest_run": best_len})


def gap_syndeticity_table(model: IntegerSetModel, n: int, gap_len: int) -> Certificate:
    """Do S-free runs of length gap_len recur across the whole window?

    The holds witness carries spacing_bound D: the least L such that every
    length-L subinterval of [1, n] contains a full gap_len-run disjoint
    from S.  Fails when no such run exists at all in the window.
    """
    if gap_len < 1:
        raise ValueError("gap length must be >= 1")
    elems = model.elements(n)
    if not elems:
        raise EmptyWindowError(f"{model.spec_string()} is empty on [1, {n}]")
    scale = {"N": n, "n": gap_len}
    runs = [(u, v) for (u, v) in free_runs(model, n) if v - u + 1 >= gap_len]
    if not runs:
        longest = max((v - u + 1 for (u, v) in free_runs(model, n)), default=0)
        witness = {"stretch": [1, n], "longest_free_run": longest}
        return Certificate("gap-syndetic", scale, FAILS, witness)
    # start positions of gap_len-gaps within run (u, v) are u .. v-gap_len+1
    d = runs[0][0] + gap_len - 1
    count = 0
    for (u1, v1), (u2, _v2) in zip(runs, runs[1:]):
        d = max(d, u2 - (v1 - gap_len + 1) + gap_len - 1)
    for (u, v) in runs:
        count += v - gap_len + 1 - u + 1
    d = max(d, n - (runs[-1][1] - gap_len + 1) + 1)
    witness = {"spacing_bound": d, "first_gap_start": runs[0][0],
               "gap_start_count": count}
    return Certificate("gap-syndetic", scale, HOLDS, witness)


def piecewise_syndetic_certificate(model: IntegerSetModel, n: int, g: int,
                                   run_len: int) -> Certificate:
    """Does some length-run_len subinterval of [1, n] have all S-gaps <= g?

    A window [a, a+L-1] qualifies when every length-g subwindow of it
    meets S.  Scan is linear in the number of S-free runs.
    """
    if g < 1 or run_len < g:
        raise ValueError("need run length L >= g >= 1")
    if run_len > n:
        raise ValueError("window must satisfy N >= L")
    elems = model.elements(n)
    if not elems:
        raise EmptyWindowError(f"{model.spec_string()} is empty on [1, {n}]")
    scale = {"N": n, "g": g, "L": run_len}
    # violation positions x: [x, x+g-1] misses S; they form intervals
    viol = [(u, v - g + 1) for (u, v) in free_runs(model, n) if v - u + 1 >= g]
    x_hi = n - g + 1
    need = run_len - g + 1
    best_len, best_start = 0, None
    cur = 1
    for (u, v) in viol + [(x_hi + 1, x_hi + 1)]:
        if u - 1 >= cur:
            stretch = u - 1 - cur + 1
            if stretch > best_len:
                best_len, best_start = stretch, cur
            if stretch >= need:
                a = cur
                witness = {"interval": [a, a + run_len - 1]}
                return Certificate("piecewise-syndetic", scale, HOLDS, witness)
        cur = max(cur, v + 1)
    witness = {"best_stretch": best_len, "best_start": best_start, "needed": need}
    return Certificate("piecewise-syndetic", scale, FAILS, witness)


@dataclass(frozen=True)
class DensityRow:
    length: int
    count: int
    start: int
    value: Fraction


@dataclass(frozen=True)
class DensityProfile:
    window: int
    rows: tuple
    exact: Fraction | None

    def value(self, length: int) -> Fraction:
        for row in self.rows:
            if row.length == length:
                return row.value
        raise KeyError(length)


def max_window_count(model: IntegerSetModel, n: int, length: int):
    """(count, start) maximizing |S intersect [m, m+length)| over [1, n]."""
    elems = model.elements(n)
    if not elems:
        return 0, 1
    best, best_start = 0, 1
    hi_start = n - length + 1
    for i, e in enumerate(elems):
        m = min(e, hi_start)
        if m < 1:
            m = 1
        j = bisect.bisect_right(elems, m + length - 1)
        i0 = bisect.bisect_left(elems, m)
        if j - i0 > best:
            best, best_start = j - i0, m
    return best, best_start


def banach_density_profile(model: IntegerSetModel, n: int, n_max: int = None,
                           lengths=None) -> DensityProfile:
    """Best window densities d_L = max_m |S intersect [m, m+L)| / L.

    Computes d_L for L = 1..n_max (or an explicit list of lengths) and
    attaches the exact density when the generator has one.
    """
    if lengths is None:
        if n_max is None:
            raise ValueError("pass n_max or lengths")
        if n_max > n // 2:
            raise ValueError("n_max must be <= N/2")
        lengths = range(1, n_max + 1)
    rows = []
    for length in lengths:
        if not 1 <= length <= n:
            raise ValueError(f"window length {length} out of range")
        count, start = max_window_count(model, n, length)
        rows.append(DensityRow(length, count, start, Fraction(count, length)))
    return DensityProfile(n, tuple(rows), model.exact_density())


def replay_certificate(model: IntegerSetModel, cert: Certificate) -> bool:
    """Recompute the certificate and check the witness against the set."""
    s = cert.scale
    if cert.predicate == "syndetic":
        again = syndetic_certificate(model, s["N"], s["g"])
    elif cert.predicate == "thick":
        again = thick_certificate(model, s["N"], s["L"])
    elif cert.predicate == "gap-syndetic":
        again = gap_syndeticity_table(model, s["N"], s["n"])
    elif cert.predicate == "piecewise-syndetic":
        again = piecewise_syndetic_certificate(model, s["N"], s["g"], s["L"])
    else:
        raise ValueError(f"unknown predicate {cert.predicate!r}")
    if again != cert:
        return False
    return _witness_consistent(model, cert)


def _witness_consistent(model: IntegerSetModel, cert: Certificate) -> bool:
    s, w = cert.scale, cert.witness
    n = s["N"]
    if cert.predicate == "syndetic" and cert.verdict == FAILS:
        if w["kind"] == "completed":
            lo, hi = w["gap"]
            if hi - lo <= s["g"]:
                return False
            interior = any(model.contains(x) for x in range(max(lo, 1) + 1, hi))
            return not interior and (lo == 0 or model.contains(lo)) and model.contains(hi)
        lo = w["gap"][0]
        return model.contains(lo) and not any(
            model.contains(x) for x in range(lo + 1, n + 1))
    if cert.predicate == "thick" and cert.verdict == HOLDS:
        a = w["run_start"]
        return all(model.contains(a + i) for i in range(w["length"]))
    if cert.predicate == "piecewise-syndetic" and cert.verdict == HOLDS:
        a, b = w["interval"]
        g = s["g"]
        return all(
            any(model.contains(y) for y in range(x, x + g))
            for x in range(a, b - g + 2))
    if cert.predicate == "gap-syndetic" and cert.verdict == HOLDS:
        u = w["first_gap_start"]
        return not any(model.contains(x) for x in range(u, u + s["n"]))
    return True


# -- spec grammar and files ------------------------------------------------


def _tokenize_spec(text: str) -> list:
    tokens, cur, depth = [], [], 0
    for ch in text:
        if ch == "(":
            depth += 1
            cur.append(ch)
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecGrammarError("unbalanced parentheses")
            cur.append(ch)
        elif ch.isspace() and depth == 0:
            if cur:
                tokens.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise SpecGrammarError("unbalanced parentheses")
    if cur:
        tokens.append("".join(cur))
    return tokens


def _split_groups(value: str) -> list:
    groups, cur, depth = [], [], 0
    for ch in value:
        if ch == "(":
            depth += 1
            if depth == 1:
                continue
        elif ch == ")":
            depth -= 1
            if depth == 0:
                groups.append("".join(cur))
                cur = []
                continue
        if depth >= 1:
            cur.append(ch)
    if depth != 0 or cur:
        raise SpecGrammarError(f"malformed group list {value!r}")
    return groups


def parse_set_spec(text: str) -> IntegerSetModel:
    """Parse the key=value generator grammar, e.g. 'kind=ap a=3 b=0'."""
    fields = {}
    for tok in _tokenize_spec(text):
        if "=" not in tok:
            raise SpecGrammarError(f"expected key=value, got {tok!r}")
        key, value = tok.split("=", 1)
        fields[key] = value
    kind = fields.pop("kind", None)
    if kind is None:
        raise SpecGrammarError("missing kind=")
    try:
        if kind == "explicit":
            elems = [int(x) for x in fields.pop("elements").split(",") if x]
            bound = int(fields.pop("bound")) if "bound" in fields else None
            model = IntegerSetModel.explicit_window(elems, bound)
        elif kind == "ap":
            model = IntegerSetModel.arithmetic_progression(
                int(fields.pop("a")), int(fields.pop("b")))
        elif kind == "powers":
            model = IntegerSetModel.lacunary_powers(int(fields.pop("base")))
        elif kind == "sturmian":
            cf = [int(x) for x in fields.pop("cf").split(",")]
            model = IntegerSetModel.sturmian_floor(cf)
        elif kind == "union":
            parts = [parse_set_spec(g) for g in _split_groups(fields.pop("of"))]
            model = IntegerSetModel.union_of(parts)
        elif kind == "shift":
            inner = parse_set_spec(_split_groups(fields.pop("of"))[0])
            model = IntegerSetModel.shifted(inner, int(fields.pop("t")))
        elif kind == "sums":
            gens = [int(x) for x in fields.pop("gens").split(",")]
            model = IntegerSetModel.finite_sums(gens)
        else:
            raise SpecGrammarError(f"unknown kind {kind!r}")
    except (KeyError, ValueError) as exc:
        if isinstance(exc, SpecGrammarError):
            raise
        raise SpecGrammarError(f"bad spec {text!r}: {exc}") from exc
    if fields:
        raise SpecGrammarError(f"unused keys {sorted(fields)} in {text!r}")
    return model


def write_set_file(path, model: IntegerSetModel, n: int) -> None:
    """One ascending decimal per line, LF endings; atomic write."""
    atomic_write_text(path, "".join(f"{x}\n" for x in model.elements(n)))


def read_set_file(path) -> IntegerSetModel:
    """Set files materialize a window, so knowledge stops at the last line."""
    with open(path, "r", encoding="utf-8") as fh:
        elems = [int(line) for line in fh if line.strip()]
    if elems != sorted(set(elems)):
        raise ValueError(f"{path}: set file must be strictly ascending")
    return IntegerSetModel.explicit_window(elems, elems[-1] if elems else 0)
