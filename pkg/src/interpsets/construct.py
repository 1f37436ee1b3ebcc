"""The interpolation constructions and adversarial witness generators.

Five constructors produce sequence prefixes from a function f defined on
a set S inside a window [1, N]:

  * extend_zero            - set 0 off S (zero-entropy route)
  * sturmian_interpolate   - overwrite the 1s of a mechanical word
  * mixing_extend          - plant universal-word prefixes in the gaps of S
  * totally_minimal_construct   - leveled block construction with
                                  residue-dense anchor families
  * strictly_ergodic_construct  - leveled block construction with
                                  forced anchor frequencies

The leveled constructions return a ConstructionTrace holding every
intermediate partial filling (unfilled cells are None) so the structural
claims can be re-verified from the outside.  All choices are first-fit
and deterministic: identical inputs give bit-identical traces.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .intsets import (
    IntegerSetModel,
    free_runs,
    gap_syndeticity_table,
    max_window_count,
    syndetic_certificate,
)
from .words import (
    SymbolWord,
    complexity_profile,
    factor_count,
    universal_word,
)

SequencePrefix = SymbolWord


class DomainError(ValueError):
    """f is not defined on exactly S intersect [1, N]."""


class ConstructionRefused(Exception):
    """The set is syndetic at scale; the mixing extension cannot run."""

    def __init__(self, message, certificate, required, available):
        super().__init__(message)
        self.certificate = certificate
        self.required = required
        self.available = available


class LevelWindowError(Exception):
    """The window cannot host the next level of a leveled construction."""

    def __init__(self, level, reason, required_gap=None, certificate=None):
        super().__init__(f"level {level}: {reason}")
        self.level = level
        self.required_gap = required_gap
        self.certificate = certificate


# -- problems ----------------------------------------------------------------


@dataclass(frozen=True)
class InterpolationProblem:
    """A function f on S intersect [1, N] with values in {0..k-1}."""

    model: IntegerSetModel
    k: int
    n: int
    f: dict

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("alphabet size k must be >= 1")
        domain = set(self.model.elements(self.n))
        given = set(self.f)
        if domain != given:
            extra = sorted(given - domain)[:5]
            missing = sorted(domain - given)[:5]
            raise DomainError(
                f"f domain mismatch: extra {extra}, missing {missing}")
        for s, v in self.f.items():
            if not 0 <= v < self.k:
                raise DomainError(f"f({s}) = {v} outside alphabet")


def random_problem(model: IntegerSetModel, k: int, n: int,
                   seed: int) -> InterpolationProblem:
    """Uniform seeded f over S intersect [1, n]; ascending fill order."""
    rng = random.Random(seed)
    f = {s: rng.randrange(k) for s in model.elements(n)}
    return InterpolationProblem(model, k, n, f)


def constant_problem(model: IntegerSetModel, k: int, n: int,
                     value: int) -> InterpolationProblem:
    return InterpolationProblem(model, k, n,
                                {s: value for s in model.elements(n)})


# -- simple constructors ------------------------------------------------------


def extend_zero(problem: InterpolationProblem, profile_max: int = None):
    """Extend f by zero off S.  Returns (word, complexity profile)."""
    sym = [0] * problem.n
    for s, v in problem.f.items():
        sym[s - 1] = v
    w = SymbolWord(problem.k, tuple(sym))
    if profile_max is None:
        profile_max = min(64, problem.n // 2)
    return w, complexity_profile(w, profile_max)


def sturmian_interpolate(delta, f: dict, k: int, n: int) -> SymbolWord:
    """Place f on S = {floor(m/delta)} and 0 elsewhere.

    The output differs from the mechanical word of delta only at its 1s,
    so its factor count at m is at most (m+1) k^ceil(m*delta).
    """
    if isinstance(delta, (list, tuple)):
        model = IntegerSetModel.sturmian_floor(delta)
    else:
        frac = Fraction(delta)
        cf = []
        p, q = frac.numerator, frac.denominator
        while q:
            cf.append(p // q)
            p, q = q, p % q
        model = IntegerSetModel.sturmian_floor(cf)
    d = model.delta()
    if not 0 < d <= Fraction(1, 2):
        raise ValueError("delta must lie in (0, 1/2]")
    problem = InterpolationProblem(model, k, n, f)
    sym = [0] * n
    for s, v in problem.f.items():
        sym[s - 1] = v
    return SymbolWord(k, tuple(sym))


@dataclass(frozen=True)
class MixingExtension:
    word: SymbolWord
    l_target: int
    l_cover: int
    placements: tuple            # (start position, prefix length) per record run
    universal: SymbolWord


def mixing_extend(problem: InterpolationProblem, l_target: int) -> MixingExtension:
    """Copy universal-word prefixes into the gaps of S, longest first-fit.

    The first S-free run of each record length receives the longest
    universal prefix it can hold, so every n <= l_target has a gap
    carrying the length-n prefix.  Refuses when the window has no run of
    length l_target, attaching the blocking syndetic certificate.
    """
    if l_target < 1:
        raise ValueError("l_target must be >= 1")
    runs = free_runs(problem.model, problem.n)
    max_run = max((v - u + 1 for (u, v) in runs), default=0)
    if max_run < l_target:
        cert = syndetic_certificate(problem.model, problem.n, max_run + 1)
        raise ConstructionRefused(
            f"no S-free run of length {l_target} in [1, {problem.n}]; "
            f"S is syndetic at scale with gap bound {max_run + 1}",
            cert, l_target, max_run)
    y = universal_word(problem.k, l_target)
    sym = [0] * problem.n
    for s, v in problem.f.items():
        sym[s - 1] = v
    placements = []
    record = 0
    for (u, v) in runs:
        length = v - u + 1
        if length > record:
            record = length
            take = min(length, len(y))
            sym[u - 1:u - 1 + take] = y.symbols[:take]
            placements.append((u, take))
            if record >= len(y):
                break
    w = SymbolWord(problem.k, tuple(sym))
    l_cover = 0
    for m in range(1, l_target + 1):
        if factor_count(w, m) == problem.k ** m:
            l_cover = m
        else:
            break
    return MixingExtension(w, l_target, l_cover, tuple(placements), y)


# -- leveled constructions ----------------------------------------------------


@dataclass
class LevelData:
    level: int
    m: int
    w: SymbolWord
    t_sample: tuple
    t_prime_sample: tuple | None
    t_enum_len: int
    t_prime_enum_len: int
    v_anchor: SymbolWord | None
    u_block: SymbolWord | None
    t_capped: bool
    gap_required: int | None
    spacing_bound: int | None
    density_bound: Fraction | None


@dataclass
class ConstructionTrace:
    kind: str
    alphabet_size: int
    window: int
    set_spec: str
    levels: list
    fillings: list               # per level: list of (None | int), index = position-1
    result: SymbolWord
    closing_blocks: tuple
    _member_memo: dict = field(default_factory=dict, repr=False)

    @property
    def final_m(self) -> int:
        return self.levels[-1].m


def _pad_enum(items: list, mult: int) -> list:
    out = list(items)
    while len(out) % mult:
        out.append(out[-1])
    return out


def _concat(words) -> list:
    out = []
    for w in words:
        out.extend(w.symbols)
    return out


def _first_free_run(elems, lo: int, hi: int, need: int):
    """First [u, v] inside positions [lo, hi] with v-u+1 >= need and no
    element of the ascending list elems."""
    i = bisect.bisect_left(elems, lo)
    prev = lo - 1
    while i < len(elems) and elems[i] <= hi:
        e = elems[i]
        if e - prev - 1 >= need:
            return prev + 1, e - 1
        prev = e
        i += 1
    if hi - prev >= need:
        return prev + 1, hi
    return None


def _block_meets(elems, lo: int, hi: int) -> bool:
    i = bisect.bisect_left(elems, lo)
    return i < len(elems) and elems[i] <= hi


# .. totally minimal ..........................................................


def totally_minimal_construct(problem: InterpolationProblem, levels: int = 3,
                              variants: int = 1,
                              anchor_cap: int = 64) -> ConstructionTrace:
    """Leveled construction for non-piecewise-syndetic S.

    Per level: m_{j+1} is a multiple of m_j (j+1)! large enough that every
    window of that length contains an S-free run of length
    G_j = 4 m_j^2 (|T_j| + |T'_j|); the next anchor word repeats the
    current one and appends the coverage block U_j (all T_j elements,
    then all T'_j elements, then the primed anchor v_j) m_j times, which
    shifts through every residue class mod j!.
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    if problem.k < 2:
        raise ValueError("leveled constructions need alphabet size >= 2")
    k, n, model = problem.k, problem.n, problem.model
    capped = k > anchor_cap or k * k > anchor_cap
    t0 = [SymbolWord(k, (s,)) for s in range(min(k, anchor_cap))]
    tp0 = [SymbolWord(k, (a, b)) for a in range(k) for b in range(k)][:anchor_cap]
    lvl0 = LevelData(0, 1, SymbolWord(k, (0,)), tuple(t0), tuple(tp0),
                     len(t0), len(tp0), tp0[0], None, capped, None, None, None)
    level_data = [lvl0]
    fillings = [[None] * n]
    for s, v in problem.f.items():
        fillings[0][s - 1] = v
    elems = model.elements(n)

    for j in range(levels):
        cur = level_data[j]
        m = cur.m
        t_enum = _pad_enum(list(cur.t_sample), math.factorial(j))
        tp_enum = _pad_enum(list(cur.t_prime_sample), math.factorial(j))
        gap_needed = 4 * m * m * (len(t_enum) + len(tp_enum))
        cert = gap_syndeticity_table(model, n, gap_needed)
        if not cert.holds:
            raise LevelWindowError(
                j + 1, f"no S-free run of length {gap_needed} in [1, {n}]",
                gap_needed, cert)
        spacing = cert.witness["spacing_bound"]
        step = m * math.factorial(j + 1)
        m_next = ((spacing + step - 1) // step) * step
        if m_next > n:
            raise LevelWindowError(
                j + 1, f"m_{j + 1} = {m_next} exceeds the window {n}",
                gap_needed, cert)
        u_sym = _concat(t_enum) + _concat(tp_enum) + list(cur.v_anchor.symbols)
        u_block = SymbolWord(k, tuple(u_sym))
        fact_j = math.factorial(j)
        if len(u_block) % fact_j != 1 % fact_j:
            raise AssertionError("U block length residue broken")
        reps = m_next - m * len(u_block)
        if reps <= 0 or reps % m:
            raise AssertionError("anchor word does not fit the level length")
        r = reps // m
        u_repeated = list(u_block.symbols) * m

        def make_anchor(fill_word):
            return SymbolWord(k, tuple(list(fill_word.symbols) * r + u_repeated))

        def make_primed(fill_word):
            sym = list(cur.v_anchor.symbols)
            sym += list(fill_word.symbols) * (r - 1)
            sym += u_repeated
            return SymbolWord(k, tuple(sym))

        w_next = make_anchor(cur.w)
        n_var = min(variants, len(cur.t_sample) - 1)
        t_next = [w_next] + [make_anchor(cur.t_sample[i + 1]) for i in range(n_var)]
        tp_next = [make_primed(cur.w)] + [make_primed(cur.t_sample[i + 1])
                                          for i in range(n_var)]
        cur.u_block = u_block
        level_data.append(LevelData(
            j + 1, m_next, w_next, tuple(t_next), tuple(tp_next),
            len(t_next), len(tp_next), tp_next[0], None, False,
            gap_needed, spacing, None))

        fill = list(fillings[j])
        j_len = m * len(u_block)
        for b in range(n // m_next):
            lo, hi = b * m_next + 1, (b + 1) * m_next
            if not _block_meets(elems, lo, hi):
                continue
            run = _first_free_run(elems, lo, hi, gap_needed)
            if run is None:
                raise LevelWindowError(
                    j + 1, f"block [{lo}, {hi}] has no free run of {gap_needed}",
                    gap_needed, cert)
            ru, rv = run
            a_idx = ((ru - 1 + m - 1) // m) * m
            if a_idx + j_len > rv:
                raise AssertionError("aligned coverage block does not fit the run")
            if any(v is not None for v in fill[a_idx:a_idx + j_len]):
                raise AssertionError("coverage block would overwrite filled cells")
            fill[a_idx:a_idx + j_len] = u_repeated
            for c in range(lo - 1, hi, m):
                if a_idx <= c < a_idx + j_len:
                    continue
                seg = fill[c:c + m]
                if all(v is None for v in seg):
                    fill[c:c + m] = cur.w.symbols
                elif any(v is None for v in seg):
                    raise AssertionError("partially filled sub-block")
        fillings.append(fill)

    return _finish_trace("totally-minimal", problem, level_data, fillings)


def _finish_trace(kind, problem, level_data, fillings) -> ConstructionTrace:
    """Close all-unfilled final blocks with the top anchor word and cut the
    longest fully-filled prefix as the result."""
    m_k = level_data[-1].m
    w_k = level_data[-1].w
    final = list(fillings[-1])
    closing = []
    for b in range(problem.n // m_k):
        seg = final[b * m_k:(b + 1) * m_k]
        if all(v is None for v in seg):
            final[b * m_k:(b + 1) * m_k] = w_k.symbols
            closing.append(b)
    fillings[-1] = final
    stop = 0
    for b in range(problem.n // m_k):
        if any(v is None for v in final[b * m_k:(b + 1) * m_k]):
            break
        stop = (b + 1) * m_k
    if stop == 0:
        raise LevelWindowError(len(level_data) - 1,
                               "no fully filled block inside the window")
    result = SymbolWord(problem.k, tuple(final[:stop]))
    return ConstructionTrace(kind, problem.k, problem.n,
                             problem.model.spec_string(), level_data, fillings,
                             result, tuple(closing))


# .. membership (totally minimal levels) ......................................


def _index_by_bytes(words) -> dict:
    idx = {}
    for w in words:
        b = w.packed()
        if b not in idx:
            idx[b] = len(idx)
    return idx


class _MemberContext:
    def __init__(self, trace: ConstructionTrace):
        self.ms = [lvl.m for lvl in trace.levels]
        self.t_idx = [_index_by_bytes(lvl.t_sample) for lvl in trace.levels]
        self.tp_idx = [_index_by_bytes(lvl.t_prime_sample or ())
                       for lvl in trace.levels]
        self.memo = trace._member_memo


def _insert_maximal(masks: list, mask: int) -> None:
    for other in masks:
        if other | mask == other:
            return
    masks[:] = [other for other in masks if other | mask != mask]
    masks.append(mask)


def _member(ctx: _MemberContext, level: int, data: bytes) -> bool:
    if level == 0:
        return len(data) in (1, 2)
    key = (level, data)
    memo = ctx.memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    m_prev = ctx.ms[level - 1]
    rho = math.factorial(level - 1)
    t_idx = ctx.t_idx[level - 1]
    tp_idx = ctx.tp_idx[level - 1]
    n_t = len(t_idx)
    full = (1 << ((n_t + len(tp_idx)) * rho)) - 1
    total = len(data)
    states = {0: [0]}
    result = False
    for p in range(total + 1):
        masks = states.pop(p, None)
        if not masks:
            continue
        if p == total:
            result = any(mask == full for mask in masks)
            break
        end = p + m_prev
        if end <= total:
            piece = data[p:end]
            if _member(ctx, level - 1, piece):
                ti = t_idx.get(piece)
                bit = 1 << (ti * rho + p % rho) if ti is not None else 0
                bucket = states.setdefault(end, [])
                for mask in masks:
                    _insert_maximal(bucket, mask | bit)
        end = p + m_prev + 1
        if end <= total:
            piece = data[p:end]
            if _member(ctx, level - 1, piece):
                ti = tp_idx.get(piece)
                bit = (1 << ((n_t + ti) * rho + p % rho)) if ti is not None else 0
                bucket = states.setdefault(end, [])
                for mask in masks:
                    _insert_maximal(bucket, mask | bit)
    memo[key] = result
    return result


def is_member_level(w: SymbolWord, level: int, trace: ConstructionTrace) -> bool:
    """Does w belong to the level-`level` family X (length m) or X' (m+1)?

    Decided by dynamic programming over split points into level-(level-1)
    pieces, tracking which anchor elements appeared at which residue
    mod (level-1)!.  Words of any other length are an error.
    """
    if trace.kind != "totally-minimal":
        raise ValueError("membership DP is defined for totally-minimal traces")
    if not 0 <= level < len(trace.levels):
        raise ValueError(f"no level {level} in this trace")
    m = trace.levels[level].m
    if len(w) not in (m, m + 1):
        raise ValueError(f"|w| = {len(w)} but level {level} needs {m} or {m + 1}")
    if w.alphabet_size != trace.alphabet_size:
        raise ValueError("alphabet mismatch")
    ctx = _MemberContext(trace)
    return _member(ctx, level, w.packed())


# .. strictly ergodic .........................................................


def strictly_ergodic_construct(problem: InterpolationProblem, levels: int = 3,
                               variants: int = 1,
                               anchor_cap: int = 64) -> ConstructionTrace:
    """Leveled construction for zero-density S.

    Per level: m_{j+1} is a multiple of (2j+2) m_j exceeding
    (2j+2) m_j |T_j| such that every window of length m_{j+1} holds fewer
    than m_{j+1} / ((2j+2) m_j) points of S.  Blocks meeting S keep their
    inherited content; a forced majority of the free sub-blocks becomes
    w_j and the remainder cycles through the anchor sample T_j.
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    if problem.k < 2:
        raise ValueError("leveled constructions need alphabet size >= 2")
    k, n, model = problem.k, problem.n, problem.model
    capped = k > anchor_cap
    t0 = [SymbolWord(k, (s,)) for s in range(min(k, anchor_cap))]
    lvl0 = LevelData(0, 1, SymbolWord(k, (0,)), tuple(t0), None,
                     len(t0), 0, None, None, capped, None, None, None)
    level_data = [lvl0]
    fillings = [[None] * n]
    for s, v in problem.f.items():
        fillings[0][s - 1] = v
    elems = model.elements(n)

    for j in range(levels):
        cur = level_data[j]
        m = cur.m
        t_list = list(cur.t_sample)
        step = (2 * j + 2) * m
        t_mult = len(t_list) + 1
        m_next = None
        density = None
        while True:
            cand = step * t_mult
            if cand > n:
                raise LevelWindowError(
                    j + 1,
                    f"window {n} cannot satisfy the density bound "
                    f"1/{step} at level length {cand}")
            count, _ = max_window_count(model, n, cand)
            if count * step < cand:
                m_next = cand
                density = Fraction(count, cand)
                break
            t_mult += 1
        big_r = m_next // m
        fill_reps = big_r - 1 - len(t_list)
        w_sym = list(cur.w.symbols) + _concat(t_list) + list(cur.w.symbols) * fill_reps
        w_next = SymbolWord(k, tuple(w_sym))
        t_next = [w_next]
        if variants >= 1:
            var_sym = list(cur.w.symbols) * (big_r - len(t_list)) + _concat(t_list)
            t_next.append(SymbolWord(k, tuple(var_sym)))
        level_data.append(LevelData(
            j + 1, m_next, w_next, tuple(t_next), None, len(t_next), 0,
            None, None, False, None, None, density))

        fill = list(fillings[j])
        overwrite = big_r - big_r // (j + 1)
        for b in range(n // m_next):
            lo, hi = b * m_next + 1, (b + 1) * m_next
            if not _block_meets(elems, lo, hi):
                continue
            stars = []
            for c in range(lo - 1, hi, m):
                seg = fill[c:c + m]
                if all(v is None for v in seg):
                    stars.append(c)
                elif any(v is None for v in seg):
                    raise AssertionError("partially filled sub-block")
            if len(stars) < overwrite + len(t_list):
                raise LevelWindowError(
                    j + 1, f"block [{lo}, {hi}] too crowded: {len(stars)} free "
                    f"sub-blocks, need {overwrite + len(t_list)}")
            for idx, c in enumerate(stars):
                if idx < overwrite:
                    fill[c:c + m] = cur.w.symbols
                elif idx - overwrite < len(t_list):
                    fill[c:c + m] = t_list[idx - overwrite].symbols
                else:
                    fill[c:c + m] = cur.w.symbols
        fillings.append(fill)

    return _finish_trace("strictly-ergodic", problem, level_data, fillings)


def ergodic_block_report(trace: ConstructionTrace, level: int) -> list:
    """Per fully-defined block of the given level (1-based): block index,
    non-anchor fraction bound satisfied, anchor sample covered, count."""
    if trace.kind != "strictly-ergodic":
        raise ValueError("block report is defined for strictly-ergodic traces")
    if not 1 <= level < len(trace.levels):
        raise ValueError(f"no level {level} in this trace")
    lvl = trace.levels[level]
    prev = trace.levels[level - 1]
    fill = trace.fillings[level]
    m, m_prev = lvl.m, prev.m
    big_r = m // m_prev
    anchors = {w.symbols for w in prev.t_sample}
    w_prev = prev.w.symbols
    out = []
    for b in range(trace.window // m):
        seg = fill[b * m:(b + 1) * m]
        if any(v is None for v in seg):
            continue
        blocks = [tuple(seg[c:c + m_prev]) for c in range(0, m, m_prev)]
        non_anchor = sum(1 for bl in blocks if bl != w_prev)
        frac_ok = non_anchor * level <= big_r
        cover_ok = anchors.issubset(set(blocks))
        out.append((b, frac_ok, cover_ok, non_anchor))
    return out


def _ergodic_member(trace: ConstructionTrace, level: int, syms: tuple,
                    memo: dict) -> bool:
    if level == 0:
        return len(syms) == 1
    key = (level, syms)
    hit = memo.get(key)
    if hit is not None:
        return hit
    lvl = trace.levels[level]
    prev = trace.levels[level - 1]
    m, m_prev = lvl.m, prev.m
    ok = False
    if len(syms) == m:
        big_r = m // m_prev
        blocks = [syms[c:c + m_prev] for c in range(0, m, m_prev)]
        w_count = sum(1 for bl in blocks if bl == prev.w.symbols)
        anchors = {w.symbols for w in prev.t_sample}
        ok = (all(_ergodic_member(trace, level - 1, bl, memo) for bl in blocks)
              and anchors.issubset(set(blocks))
              and w_count * level >= big_r * (level - 1))
    memo[key] = ok
    return ok


def is_ergodic_member(w: SymbolWord, level: int, trace: ConstructionTrace) -> bool:
    """Frequency-family membership for the strictly ergodic construction."""
    if not 0 <= level < len(trace.levels):
        raise ValueError(f"no level {level} in this trace")
    if len(w) != trace.levels[level].m:
        raise ValueError("length mismatch")
    return _ergodic_member(trace, level, w.symbols, trace._member_memo)


# -- witness generators -------------------------------------------------------


@dataclass(frozen=True)
class SyndeticPartition:
    g: int
    h: int
    window: int
    pieces: tuple                # tuple of tuples of positions
    coloring: dict               # s -> piece index (0 off all pieces)
    covering_ok: bool
    covering_checked: int
    failures: tuple


def syndetic_partition_witness(model: IntegerSetModel, g: int, h: int,
                               n: int) -> SyndeticPartition:
    """Split a syndetic S into h residue-window pieces S_i and verify that
    each piece, smeared g-1 steps left, covers h^2 N + ih inside the window.

    The coloring f = i on S_i is the witness function used against
    totally transitive interpolation.
    """
    cert = syndetic_certificate(model, n, g)
    if not cert.holds:
        raise ValueError(f"S is not syndetic at gap {g} on [1, {n}]: {cert}")
    if h <= g:
        raise ValueError("need h > g")
    hh = h * h
    elems = model.elements(n)
    pieces = [[] for _ in range(h)]
    coloring = {}
    for x in elems:
        coloring[x] = 0
        if x < hh:
            continue
        i = (x % hh) // h
        pieces[i].append(x)
        coloring[x] = i
    member = [set(p) for p in pieces]
    failures = []
    checked = 0
    for i in range(h):
        q = 1
        while True:
            target = hh * q + i * h
            if target > n - hh:
                break
            checked += 1
            if not any(target + j in member[i] for j in range(g)):
                failures.append((i, target))
            q += 1
    return SyndeticPartition(g, h, n, tuple(tuple(p) for p in pieces), coloring,
                             not failures, checked, tuple(failures))


@dataclass(frozen=True)
class DensityColoring:
    k: int
    intervals: tuple
    coloring: dict


def density_coloring_witness(model: IntegerSetModel, intervals, k: int,
                             n: int) -> DensityColoring:
    """Color S by interval index mod k over a disjoint ascending family of
    half-open intervals [lo, hi); 0 off all intervals."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ivs = [(int(lo), int(hi)) for lo, hi in intervals]
    prev_hi = 0
    for lo, hi in ivs:
        if lo < 1 or hi <= lo or lo < prev_hi:
            raise ValueError("intervals must be disjoint, ascending, nonempty")
        prev_hi = hi
    coloring = {s: 0 for s in model.elements(n)}
    for idx, (lo, hi) in enumerate(ivs, start=1):
        color = idx % k
        for s in coloring:
            if lo <= s < hi:
                coloring[s] = color
    return DensityColoring(k, tuple(ivs), coloring)


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def verify_trace(trace: ConstructionTrace, problem: InterpolationProblem,
                 deep: bool = True) -> list:
    """Structural checks shared by both leveled constructions, plus the
    membership checks specific to each kind."""
    out = []
    lv = trace.levels
    ok = all(lv[j + 1].w.symbols[:lv[j].m] == lv[j].w.symbols
             for j in range(len(lv) - 1))
    out.append(CheckResult("prefix-chain", ok, "w_j is a prefix of w_{j+1}"))
    ok = all(lv[j + 1].m % lv[j].m == 0 for j in range(len(lv) - 1))
    out.append(CheckResult("m-divisibility", ok, "m_j divides m_{j+1}"))
    if trace.kind == "totally-minimal":
        ok = all(lvl.m % math.factorial(lvl.level) == 0 for lvl in lv)
        out.append(CheckResult("factorial-divisibility", ok, "j! divides m_j"))
    ok = True
    for j in range(len(trace.fillings) - 1):
        a, b = trace.fillings[j], trace.fillings[j + 1]
        if any(x is not None and x != y for x, y in zip(a, b)):
            ok = False
            break
    out.append(CheckResult("monotone-filling", ok,
                           "filled positions never change"))
    final = trace.fillings[-1]
    res = trace.result
    ok = (len(res) % trace.final_m == 0 and len(res) >= trace.final_m
          and tuple(final[:len(res)]) == res.symbols
          and all(v is not None for v in final[:len(res)]))
    out.append(CheckResult("result-complete", ok,
                           f"result covers [1, {len(res)}] with no unfilled cell"))
    bad = 0
    for s, v in problem.f.items():
        got = final[s - 1]
        if s <= len(res) and got is None:
            bad += 1
        elif got is not None and got != v:
            bad += 1
    out.append(CheckResult("restriction-identity", bad == 0,
                           f"{bad} mismatches of x|_S against f"))
    if deep and trace.kind == "totally-minimal":
        ok = all(is_member_level(lv[j].w, j, trace) for j in range(1, len(lv)))
        out.append(CheckResult("anchor-membership", ok,
                               "w_j passes is_member_level at every level"))
        m_k = trace.final_m
        blocks_ok = True
        for b in range(len(res) // m_k):
            blk = SymbolWord(trace.alphabet_size,
                             res.symbols[b * m_k:(b + 1) * m_k])
            if not is_member_level(blk, len(lv) - 1, trace):
                blocks_ok = False
                break
        out.append(CheckResult("block-membership", blocks_ok,
                               "every aligned result block is a level member"))
    if deep and trace.kind == "strictly-ergodic":
        ok = all(is_ergodic_member(lv[j].w, j, trace) for j in range(1, len(lv)))
        out.append(CheckResult("anchor-membership", ok,
                               "w_j satisfies the frequency conditions"))
        top = len(lv) - 1
        report = ergodic_block_report(trace, top)
        ok = all(f and c for (_b, f, c, _n) in report)
        out.append(CheckResult(
            "block-frequencies", ok,
            f"{len(report)} blocks: non-anchor fraction <= 1/{top}, "
            "anchor sample covered"))
    return out
