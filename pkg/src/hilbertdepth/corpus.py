"""Corpora of squarefree ideals: exhaustive enumeration, seeded sampling, search.

Proper nonzero ideals over n variables correspond bijectively to the downsets
of the Boolean lattice that contain the empty set and are not the whole
lattice (the downset is the set of monomials *outside* the ideal, i.e. the
faces of a simplicial complex; the minimal non-faces are the generators).
``enumerate_ideals`` walks exactly these downsets by backtracking over degree
levels, so it is duplicate-free by construction; the supported ceiling is
n <= EXHAUSTIVE_N_MAX (downset counts explode beyond ~7.8M at n = 6).

The verification harness aggregates per distinct alpha vector: every check it
runs is a function of (n, alpha(S/I)) alone, so exhaustive runs tally an
"alpha census" instead of materializing 7.8M ideal objects, and random runs
memoize check outcomes per profile.  Work is partitioned by fixing the
membership pattern of the first levels (the chunk key), which preserves the
enumerated multiset for any worker count.

Random generation draws a generator count uniform in [1, 3n] and generator
degrees from a distribution weighted toward [2, n-2], then minimalizes.
Sample i of a run is drawn from its own Random seeded with "seed:n:i", making
runs bit-reproducible independently of worker count.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinatorics import N_MAX, binom_row
from .errors import CapacityError
from .ideals import Ideal, Monomial, alpha_counts_of_ideal, minimalize
from .theorems import (CHECK_ORDER, VERIFY_CHECKS, evaluate_profile,
                       witness_from_ideal)

EXHAUSTIVE_N_MAX = 6

# downward-closed family counts for the Boolean lattice on n points, minus the
# two trivial downsets; equals the number of proper nonzero ideals
PROPER_IDEAL_COUNTS = {1: 1, 2: 4, 3: 18, 4: 166, 5: 7579, 6: 7828352}


# --- level tables -------------------------------------------------------------

class _Levels:
    """Per-n tables for walking downsets level by level.

    masks[d] lists the degree-d variable-masks in ascending order; facet bit
    i of facet_bits[d][i] indexes into level d-1.
    """

    def __init__(self, n: int):
        self.n = n
        self.masks: list[list[int]] = [[] for _ in range(n + 1)]
        for m in range(1, 1 << n):
            self.masks[m.bit_count()].append(m)
        index = [{m: i for i, m in enumerate(level)} for level in self.masks]
        self.facet_bits: list[list[int]] = [[], [0] * len(self.masks[1])]
        for d in range(2, n + 1):
            rows = []
            for m in self.masks[d]:
                bits = 0
                mm = m
                while mm:
                    low = mm & -mm
                    bits |= 1 << index[d - 1][m ^ low]
                    mm ^= low
                rows.append(bits)
            self.facet_bits.append(rows)
        self.full = [(1 << len(level)) - 1 for level in self.masks]


@lru_cache(maxsize=8)
def _levels(n: int) -> _Levels:
    return _Levels(n)


def _allowed(lv: _Levels, d: int, prev_bits: int) -> int:
    """Level-d sets whose facets all lie in the level-(d-1) selection."""
    if prev_bits == lv.full[d - 1]:
        return lv.full[d]
    allowed = 0
    for i, req in enumerate(lv.facet_bits[d]):
        if req & ~prev_bits == 0:
            allowed |= 1 << i
    return allowed


# --- exhaustive enumeration ----------------------------------------------------

def _check_exhaustive_n(n: int):
    if not 1 <= n <= EXHAUSTIVE_N_MAX:
        raise CapacityError(
            f"exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_N_MAX}, got {n}")


def _prefixes(lv: _Levels, depth: int) -> list[tuple[int, ...]]:
    """All valid level selections for levels 1..depth, in DFS order."""
    out: list[tuple[int, ...]] = []

    def rec(d: int, prev: int, acc: list[int]):
        if d > depth:
            out.append(tuple(acc))
            return
        allowed = _allowed(lv, d, prev)
        s = allowed
        while True:
            acc.append(s)
            rec(d + 1, s, acc)
            acc.pop()
            if s == 0:
                break
            s = (s - 1) & allowed

    rec(1, 0, [])
    return out


# A work chunk fixes the levels 1..depth selection and, below heavy prefixes,
# additionally pins the membership pattern of a few level-(depth+1) slots, so
# that no chunk dominates the walk.  Chunks partition the downsets exactly.
_SPLIT_FREE_BITS = 12
_SPLIT_MAX_FIXED = 6


@lru_cache(maxsize=8)
def _chunk_specs(n: int) -> tuple[tuple[tuple[int, ...], int, int], ...]:
    lv = _levels(n)
    depth = min(2, n)
    chunks: list[tuple[tuple[int, ...], int, int]] = []
    for prefix in _prefixes(lv, depth):
        if depth == n:
            chunks.append((prefix, 0, 0))
            continue
        allowed = _allowed(lv, depth + 1, prefix[-1])
        t = min(max(allowed.bit_count() - _SPLIT_FREE_BITS, 0), _SPLIT_MAX_FIXED)
        if t == 0:
            chunks.append((prefix, 0, 0))
            continue
        fix = 0
        rest = allowed
        for _ in range(t):
            low = rest & -rest
            fix |= low
            rest ^= low
        pattern = fix
        while True:
            chunks.append((prefix, fix, pattern))
            if pattern == 0:
                break
            pattern = (pattern - 1) & fix
    return tuple(chunks)


def _partition_chunks(n: int, part: tuple[int, int] | None):
    chunks = _chunk_specs(n)
    if part is None:
        return chunks
    num_parts, idx = part
    if num_parts < 1 or not 0 <= idx < num_parts:
        raise ValueError(f"bad partition {part}")
    return chunks[idx::num_parts]


def enumerate_downsets(n: int, part: tuple[int, int] | None = None):
    """Yield every proper-nonzero-ideal downset as per-level index bitmasks.

    ``part = (num_parts, idx)`` restricts to one slice of the work chunks;
    the union over all idx reproduces the unpartitioned multiset exactly.
    """
    _check_exhaustive_n(n)
    lv = _levels(n)
    full_leaf = tuple(lv.full[1:])

    def rec(d: int, prev: int, acc: list[int]):
        if d > n:
            leaf = tuple(acc)
            if leaf != full_leaf:
                yield leaf
            return
        allowed = _allowed(lv, d, prev)
        s = allowed
        while True:
            acc.append(s)
            yield from rec(d + 1, s, acc)
            acc.pop()
            if s == 0:
                break
            s = (s - 1) & allowed

    for prefix, fix, pattern in _partition_chunks(n, part):
        depth = len(prefix)
        if depth == n:
            if prefix != full_leaf:
                yield prefix
            continue
        d = depth + 1
        allowed = _allowed(lv, d, prefix[-1]) & ~fix
        s_free = allowed
        while True:
            s = s_free | pattern
            acc = list(prefix)
            acc.append(s)
            if d == n:
                leaf = tuple(acc)
                if leaf != full_leaf:
                    yield leaf
            else:
                yield from rec(d + 1, s, acc)
            if s_free == 0:
                break
            s_free = (s_free - 1) & allowed


def _gens_from_levels(lv: _Levels, leaf: tuple[int, ...]) -> list[int]:
    """Minimal non-faces of the downset: generator masks, sorted by (degree, mask)."""
    gens = []
    for d in range(1, lv.n + 1):
        chosen = leaf[d - 1]
        if d == 1:
            for i, m in enumerate(lv.masks[1]):
                if not chosen >> i & 1:
                    gens.append(m)
            continue
        prev = leaf[d - 2]
        for i, m in enumerate(lv.masks[d]):
            if not chosen >> i & 1 and lv.facet_bits[d][i] & ~prev == 0:
                gens.append(m)
    return gens


def enumerate_ideals(n: int, part: tuple[int, int] | None = None):
    """Yield every proper nonzero squarefree ideal on n variables exactly once."""
    lv = _levels(n)
    for leaf in enumerate_downsets(n, part):
        yield Ideal(n, tuple(Monomial(m) for m in _gens_from_levels(lv, leaf)))


def alpha_census(n: int, part: tuple[int, int] | None = None) -> Counter:
    """Counter of alpha(S/I) over every proper nonzero ideal (one DFS pass).

    Keys are the full tuples (1, a_1, ..., a_n); the downset at level d has
    a_d faces.  Much faster than materializing ideals: the per-leaf work is a
    handful of popcounts.
    """
    _check_exhaustive_n(n)
    lv = _levels(n)
    counts: dict[tuple[int, ...], int] = {}
    full_masks = lv.full
    facet_bits = lv.facet_bits
    n_local = n

    def rec(d: int, prev: int, prefix: tuple[int, ...]):
        if prev == full_masks[d - 1]:
            allowed = full_masks[d]
        else:
            allowed = 0
            for i, req in enumerate(facet_bits[d]):
                if req & ~prev == 0:
                    allowed |= 1 << i
        s = allowed
        if d == n_local:
            while True:
                key = prefix + (s.bit_count(),)
                counts[key] = counts.get(key, 0) + 1
                if s == 0:
                    return
                s = (s - 1) & allowed
        while True:
            rec(d + 1, s, prefix + (s.bit_count(),))
            if s == 0:
                return
            s = (s - 1) & allowed

    for prefix, fix, pattern in _partition_chunks(n, part):
        key = (1,) + tuple(b.bit_count() for b in prefix)
        depth = len(prefix)
        if depth == n:
            counts[key] = counts.get(key, 0) + 1
            continue
        d = depth + 1
        allowed = _allowed(lv, d, prefix[-1]) & ~fix
        s_free = allowed
        while True:
            s = s_free | pattern
            if d == n:
                leaf_key = key + (s.bit_count(),)
                counts[leaf_key] = counts.get(leaf_key, 0) + 1
            else:
                rec(d + 1, s, key + (s.bit_count(),))
            if s_free == 0:
                break
            s_free = (s_free - 1) & allowed

    # drop the full downset (I = 0): it is the unique leaf with a full alpha row
    full_key = (1,) + tuple(len(level) for level in lv.masks[1:])
    if full_key in counts:
        if counts[full_key] == 1:
            del counts[full_key]
        else:
            counts[full_key] -= 1
    return Counter(counts)


def find_ideal_with_alpha(n: int, alpha: tuple[int, ...]) -> Ideal | None:
    """First enumerated ideal whose quotient alpha vector matches (small n)."""
    lv = _levels(n)
    target = tuple(alpha[1:])
    for leaf in enumerate_downsets(n):
        if tuple(b.bit_count() for b in leaf) == target:
            return Ideal(n, tuple(Monomial(m) for m in _gens_from_levels(lv, leaf)))
    return None


# --- compressed complexes -------------------------------------------------------

def colex_first_masks(n: int, k: int, count: int) -> list[int]:
    """The first ``count`` k-subsets of {1..n} in colexicographic order."""
    subsets = sorted(tuple(sorted(c, reverse=True)) for c in combinations(range(n), k))
    if count > len(subsets):
        raise ValueError(f"only C({n},{k})={len(subsets)} subsets exist, wanted {count}")
    out = []
    for c in subsets[:count]:
        mask = 0
        for v in c:
            mask |= 1 << v
        out.append(mask)
    return out


def compressed_complex_ideal(n: int, alpha: tuple[int, ...]) -> Ideal:
    """The ideal whose quotient complex takes the first alpha[j] faces of each
    level in colex order.  Valid only for downward-closed (Kruskal-Katona
    consistent) alpha vectors; raises ValueError otherwise.
    """
    if len(alpha) != n + 1 or alpha[0] != 1:
        raise ValueError("alpha must be (1, a_1, ..., a_n)")
    lv = _levels(n) if n <= EXHAUSTIVE_N_MAX else _Levels(n)
    leaf = []
    for d in range(1, n + 1):
        chosen_masks = set(colex_first_masks(n, d, alpha[d]))
        bits = 0
        for i, m in enumerate(lv.masks[d]):
            if m in chosen_masks:
                bits |= 1 << i
        leaf.append(bits)
    # downward-closedness: every face's facets must be faces
    for d in range(2, n + 1):
        prev = leaf[d - 2]
        bits = leaf[d - 1]
        for i in range(len(lv.masks[d])):
            if bits >> i & 1 and lv.facet_bits[d][i] & ~prev:
                raise ValueError(f"alpha not realizable: colex family at level {d} is not closed")
    return Ideal(n, tuple(Monomial(m) for m in _gens_from_levels(lv, tuple(leaf))))


# --- random generation ----------------------------------------------------------

def default_degree_weights(n: int) -> dict[int, float]:
    """Generator-degree distribution weighted toward [2, n-2]."""
    w = {d: 1.0 for d in range(1, n + 1)}
    for d in range(2, n - 1):
        w[d] = 6.0
    if n >= 3:
        w[n - 1] = 2.0
    if n >= 2:
        w[n] = 0.5
    return w


def random_gen_masks(n: int, rng: random.Random,
                     degree_weights: dict[int, float] | None = None) -> tuple[int, ...]:
    """Minimalized generator masks of one random ideal (always proper, nonzero)."""
    weights = degree_weights or default_degree_weights(n)
    degrees = sorted(weights)
    cum = []
    total = 0.0
    for d in degrees:
        total += weights[d]
        cum.append(total)
    g = rng.randint(1, 3 * n)
    masks = []
    for _ in range(g):
        d = rng.choices(degrees, cum_weights=cum)[0]
        mask = 0
        for v in rng.sample(range(n), d):
            mask |= 1 << v
        masks.append(mask)
    return minimalize(masks)


def random_ideal(n: int, rng: random.Random,
                 degree_weights: dict[int, float] | None = None) -> Ideal:
    """One random proper nonzero ideal; deterministic given the rng state."""
    if n < 2:
        raise ValueError("random_ideal needs n >= 2")
    if n > N_MAX:
        raise CapacityError(f"random_ideal: n={n} exceeds cap {N_MAX}")
    while True:
        masks = random_gen_masks(n, rng, degree_weights)
        ideal = Ideal(n, tuple(Monomial(m) for m in masks))
        if not ideal.is_zero and not ideal.is_unit:
            return ideal


def sample_rng(seed: int, n: int, index: int) -> random.Random:
    """The rng for sample ``index`` of a run: worker-count independent."""
    return random.Random(f"{seed}:{n}:{index}")


# --- plans and reports -----------------------------------------------------------

@dataclass(frozen=True)
class EnumerationPlan:
    """What corpus to scan: exhaustive at small n, or seeded random samples."""

    n: int
    mode: str  # "exhaustive" | "random"
    sample_count: int = 0
    seed: int | None = None
    degree_bias: dict[int, float] | None = None
    workers: int = 1
    partition: tuple[int, int] | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive":
            _check_exhaustive_n(self.n)
        else:
            if self.n < 2 or self.n > N_MAX:
                raise CapacityError(f"random mode needs 2 <= n <= {N_MAX}, got {self.n}")
            if self.sample_count < 1:
                raise ValueError("random mode needs sample_count >= 1")
            if self.seed is None:
                raise ValueError("random mode needs an explicit seed")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class CheckerTally:
    applicable: int = 0
    passed: int = 0
    failed: int = 0


@dataclass
class VerifySummary:
    n: int
    mode: str
    scanned: int
    elapsed: float
    seed: int | None
    sample_count: int
    workers: int
    checks: dict[str, CheckerTally]
    witnesses: list[dict]
    distinct_profiles: int
    q_histogram: dict[int, int]
    lem_gate_excluded: int

    @property
    def total_failures(self) -> int:
        return sum(t.failed for t in self.checks.values())


@dataclass
class SearchReport:
    predicate: str
    n_values: tuple[int, ...]
    mode: str
    instances_scanned: int
    witnesses: list[dict]
    elapsed: float
    seed: int | None
    status: str  # "witnesses-found" | "none-exhaustive" | "inconclusive"


# --- harness ---------------------------------------------------------------------

_WITNESS_CAP_PER_TASK = 25


def _census_task(args) -> dict:
    n, num_parts, idx = args
    return dict(alpha_census(n, (num_parts, idx)))


def _sample_task(args):
    """Scan sample indices [lo, hi): returns (profile counts, witnesses, gate_excluded).

    Keys are (alpha(S/I), principal); witnesses are produced by a fresh full
    evaluation of the failing sample's ideal.
    """
    n, seed, lo, hi, bias, names = args
    counts: dict[tuple, int] = {}
    memo: dict[tuple, tuple] = {}
    witnesses: list[dict] = []
    name_pos = {name: CHECK_ORDER.index(name) for name in names}
    for i in range(lo, hi):
        masks = random_gen_masks(n, sample_rng(seed, n, i), bias)
        if not masks or masks[0] == 0:
            continue  # unreachable: degrees >= 1 and no unit generator
        alpha_sf = tuple(b - a for b, a in zip(binom_row(n), alpha_counts_of_ideal(n, masks)))
        principal = len(masks) == 1
        key = (alpha_sf, principal)
        cached = memo.get(key)
        if cached is None:
            outcome = evaluate_profile(n, alpha_sf, principal)
            failing = tuple(name for name, pos in name_pos.items()
                            if outcome.flags[pos][0] and not outcome.flags[pos][1])
            cached = memo[key] = failing
        counts[key] = counts.get(key, 0) + 1
        if cached and len(witnesses) < _WITNESS_CAP_PER_TASK:
            ideal = Ideal(n, tuple(Monomial(m) for m in masks))
            for name in cached:
                w = witness_from_ideal(ideal, name)
                if w is not None:
                    w["sample_index"] = i
                    witnesses.append(w)
    return counts, witnesses, hi - lo


def _pool_map(workers: int, fn, tasks):
    if workers <= 1:
        for t in tasks:
            yield fn(t)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, tasks)


def _tally_profiles(n, profile_counts, names):
    """Aggregate per-profile counts into per-checker tallies."""
    tallies = {name: CheckerTally() for name in names}
    q_hist: dict[int, int] = {}
    gate_excluded = 0
    failing_keys: list[tuple] = []
    positions = [(name, CHECK_ORDER.index(name)) for name in names]
    for key, count in profile_counts.items():
        alpha_sf, principal = key
        outcome = evaluate_profile(n, alpha_sf, principal)
        q_hist[outcome.q] = q_hist.get(outcome.q, 0) + count
        if outcome.principal or not outcome.in_m2:
            gate_excluded += count
        bad = False
        for name, pos in positions:
            applicable, passed = outcome.flags[pos]
            if not applicable:
                continue
            t = tallies[name]
            t.applicable += count
            if passed:
                t.passed += count
            else:
                t.failed += count
                bad = True
        if bad:
            failing_keys.append(key)
    return tallies, q_hist, gate_excluded, failing_keys


def run_verification(plan: EnumerationPlan, check_names=VERIFY_CHECKS) -> VerifySummary:
    """Scan the planned corpus and tally every requested check.

    Exhaustive mode aggregates the alpha census; random mode draws the seeded
    samples.  Failing profiles are materialized into re-verified witnesses.
    """
    for name in check_names:
        if name not in CHECK_ORDER:
            raise ValueError(f"unknown check {name!r}")
    start = time.monotonic()
    witnesses: list[dict] = []

    if plan.mode == "exhaustive":
        if plan.partition is not None:
            census = alpha_census(plan.n, plan.partition)
        elif plan.workers > 1:
            num_parts = 8 * plan.workers
            merged: Counter = Counter()
            tasks = [(plan.n, num_parts, i) for i in range(num_parts)]
            for part in _pool_map(plan.workers, _census_task, tasks):
                merged.update(part)
            census = merged
        else:
            census = alpha_census(plan.n)
        profile_counts = {(alpha, None): c for alpha, c in census.items()}
        scanned = sum(census.values())
        tallies, q_hist, gate_excluded, failing = _tally_profiles(
            plan.n, profile_counts, check_names)
        for alpha, _ in failing:
            ideal = find_ideal_with_alpha(plan.n, alpha)
            if ideal is not None:
                for name in check_names:
                    w = witness_from_ideal(ideal, name)
                    if w is not None:
                        witnesses.append(w)
    else:
        chunk = 2000
        tasks = [(plan.n, plan.seed, lo, min(lo + chunk, plan.sample_count),
                  plan.degree_bias, tuple(check_names))
                 for lo in range(0, plan.sample_count, chunk)]
        merged_counts: dict[tuple, int] = {}
        scanned = 0
        for counts, task_witnesses, task_scanned in _pool_map(
                plan.workers, _sample_task, tasks):
            for key, c in counts.items():
                merged_counts[key] = merged_counts.get(key, 0) + c
            witnesses.extend(task_witnesses)
            scanned += task_scanned
        tallies, q_hist, gate_excluded, _ = _tally_profiles(
            plan.n, merged_counts, check_names)
        witnesses.sort(key=lambda w: w.get("sample_index", 0))
        profile_counts = merged_counts

    return VerifySummary(
        n=plan.n,
        mode=plan.mode,
        scanned=scanned,
        elapsed=time.monotonic() - start,
        seed=plan.seed,
        sample_count=plan.sample_count,
        workers=plan.workers,
        checks=tallies,
        witnesses=witnesses,
        distinct_profiles=len(profile_counts),
        q_histogram=dict(sorted(q_hist.items())),
        lem_gate_excluded=gate_excluded,
    )


def search_counterexample(plan: EnumerationPlan, predicate: str,
                          max_witnesses: int = 1) -> SearchReport:
    """Scan one corpus for failures of one named check.

    Random mode stops as soon as a chunk of samples has produced
    ``max_witnesses`` verified witnesses (the scanned count stays
    deterministic: whole chunks only).  Every witness re-verifies through a
    fresh full evaluation before being reported.
    """
    if predicate not in CHECK_ORDER:
        raise ValueError(f"unknown predicate {predicate!r}")
    start = time.monotonic()

    if plan.mode == "exhaustive":
        summary = run_verification(plan, check_names=(predicate,))
        status = "witnesses-found" if summary.witnesses else "none-exhaustive"
        return SearchReport(predicate, (plan.n,), plan.mode, summary.scanned,
                            summary.witnesses[:max_witnesses],
                            time.monotonic() - start, plan.seed, status)

    chunk = 2000
    tasks = [(plan.n, plan.seed, lo, min(lo + chunk, plan.sample_count),
              plan.degree_bias, (predicate,))
             for lo in range(0, plan.sample_count, chunk)]
    witnesses: list[dict] = []
    scanned = 0
    if plan.workers <= 1:
        for task in tasks:
            _, task_witnesses, task_scanned = _sample_task(task)
            scanned += task_scanned
            witnesses.extend(task_witnesses)
            if len(witnesses) >= max_witnesses:
                break
    else:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            window = plan.workers + 2
            futures = [pool.submit(_sample_task, t) for t in tasks[:window]]
            next_task = window
            done = False
            for fut_idx in range(len(tasks)):
                if fut_idx >= len(futures):
                    break
                _, task_witnesses, task_scanned = futures[fut_idx].result()
                scanned += task_scanned
                witnesses.extend(task_witnesses)
                if len(witnesses) >= max_witnesses:
                    done = True
                if not done and next_task < len(tasks):
                    futures.append(pool.submit(_sample_task, tasks[next_task]))
                    next_task += 1
                if done:
                    break
    witnesses.sort(key=lambda w: w.get("sample_index", 0))
    witnesses = witnesses[:max_witnesses]
    status = "witnesses-found" if witnesses else "inconclusive"
    return SearchReport(predicate, (plan.n,), plan.mode, scanned, witnesses,
                        time.monotonic() - start, plan.seed, status)
