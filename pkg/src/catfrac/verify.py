"""Exhaustive cross-checks: continued-fraction series against brute-force censuses.

Each check pairs two independent routes to the same numbers and compares them
exactly, reporting counterexamples in the canonical encodings.  Scans stop
early once a handful of failures have been collected.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .contfrac import LevelWeights, eval_cf
from .paths import area, area_via_levels, generate_paths, path_to_tree, tree_to_path
from .perms import (
    ConcatSplit,
    _contains_132,
    _all_permutation_words,
    count_increasing,
    enumerate_132_avoiders,
    format_perm,
    increasing_pattern_subsets,
    perm_to_tree,
    root_to_leaf_subset_count,
    root_to_leaf_subsets,
    tree_to_perm,
)
from .series import TruncSeries
from .trees import binom_level_sum, encode, generate_trees, level_profile
from .util import binom

_MAX_FAILURES = 5

# The factorial scan beyond this length is not desk-scale (11! = 39 916 800).
PERM_ORACLE_MAX = 10


@dataclass
class CheckResult:
    name: str
    params: dict
    ok: bool = True
    checked: int = 0
    detail_lines: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> bool:
        """Record a counterexample; returns True while more should be collected."""
        self.ok = False
        self.failures.append(message)
        return len(self.failures) < _MAX_FAILURES


# -- brute-force oracles ----------------------------------------------------


def area_polynomial(n: int) -> dict[int, int]:
    """{area: count} over all Dyck paths of semilength n, by direct enumeration."""
    return dict(Counter(area(p) for p in generate_paths(n)))


def pattern_polynomial_by_scan(n: int, k: int) -> dict[int, int]:
    """{pattern count: permutations} over the (132)-avoiders of length n.

    Scans all n! permutations, keeps the avoiders, and counts their length-k
    increasing patterns with the DP counter.  Entirely word-side: no trees.
    """
    counts: Counter[int] = Counter()
    for p in _all_permutation_words(n):
        if not _contains_132(p):
            counts[count_increasing(p, k)] += 1
    return dict(counts)


def level_profile_census(n: int) -> dict[tuple[int, ...], int]:
    """{level profile: trees} over all ordered trees on n edges."""
    return dict(Counter(level_profile(t) for t in generate_trees(n)))


# -- series slices ------------------------------------------------------------


def z_slice_q(series: TruncSeries, n: int) -> dict[int, int]:
    """The z^n coefficient as a {q exponent: coefficient} map (zq-mode series)."""
    out: dict[int, int] = {}
    for m, c in series.z_slice(n).items():
        if m.v_degs:
            raise ValueError("series has level variables; expected a z,q series")
        out[m.q_deg] = c
    return out


def z_slice_profiles(series: TruncSeries, n: int) -> dict[tuple[int, ...], int]:
    """The z^n coefficient as a {level profile: coefficient} map (multivariate)."""
    return {m.v_degs: c for m, c in series.z_slice(n).items()}


# -- checks -------------------------------------------------------------------


def check_level_census(max_edges: int) -> CheckResult:
    """Multivariate series coefficients == tree counts per level profile."""
    result = CheckResult("level census vs multivariate series", {"max_edges": max_edges})
    series = eval_cf(LevelWeights.multivariate(), max(max_edges, 1), max_edges)
    for n in range(max_edges + 1):
        census = level_profile_census(n)
        got = z_slice_profiles(series, n)
        result.checked += sum(census.values())
        if got != census:
            result.fail(f"n={n}: series slice {got} != census {census}")
        result.detail_lines.append(f"n={n} profiles={len(census)} trees={sum(census.values())}")
    return result


def check_area_formula(max_edges: int) -> CheckResult:
    """Per tree: path area == C(n+1,2) - level sum."""
    result = CheckResult("area vs level-sum formula", {"max_edges": max_edges})
    for n in range(max_edges + 1):
        for t in generate_trees(n):
            result.checked += 1
            if area(tree_to_path(t)) != area_via_levels(t):
                if not result.fail(
                    f"n={n} tree={encode(t)!r} area={area(tree_to_path(t))} "
                    f"formula={area_via_levels(t)}"
                ):
                    return result
        result.detail_lines.append(f"n={n} trees checked")
    return result


def check_area_series(max_edges: int) -> CheckResult:
    """Path-census area polynomial, exponent-reversed, == area-preset series."""
    result = CheckResult("area polynomial vs series", {"max_edges": max_edges})
    series = eval_cf(LevelWeights.area(), max(max_edges, 1), max_edges)
    for n in range(max_edges + 1):
        poly = area_polynomial(n)
        reversed_poly = {binom(n + 1, 2) - a: c for a, c in poly.items()}
        got = z_slice_q(series, n)
        result.checked += sum(poly.values())
        if got != reversed_poly:
            result.fail(f"n={n}: series slice {got} != reversed census {reversed_poly}")
        result.detail_lines.append(f"n={n} paths={sum(poly.values())}")
    return result


def check_word_concatenation(max_edges: int) -> CheckResult:
    """tree_to_perm == block-by-block reconstruction from the subtree words."""
    result = CheckResult("word concatenation recursion", {"max_edges": max_edges})
    for n in range(max_edges + 1):
        for t in generate_trees(n):
            result.checked += 1
            split = ConcatSplit.from_tree(t)
            if split.word() != tree_to_perm(t) or split.offsets[-1] != 0:
                if not result.fail(
                    f"n={n} tree={encode(t)!r} split={split.word()} "
                    f"direct={tree_to_perm(t)}"
                ):
                    return result
        result.detail_lines.append(f"n={n} trees checked")
    return result


def check_chain_subsets(max_edges: int, k_max: int = 4) -> CheckResult:
    """Increasing-pattern value sets == root-to-leaf label sets (as sets)."""
    result = CheckResult(
        "increasing subsets vs ancestor chains", {"max_edges": max_edges, "k_max": k_max}
    )
    for n in range(max_edges + 1):
        for t in generate_trees(n):
            word = tree_to_perm(t)
            for k in range(1, k_max + 1):
                result.checked += 1
                patterns = increasing_pattern_subsets(word, k)
                chains = root_to_leaf_subsets(t, k)
                if patterns != chains:
                    if not result.fail(
                        f"n={n} k={k} tree={encode(t)!r} patterns={sorted(map(sorted, patterns))} "
                        f"chains={sorted(map(sorted, chains))}"
                    ):
                        return result
        result.detail_lines.append(f"n={n} trees checked for k <= {k_max}")
    return result


def check_pattern_counts(max_edges: int, k_max: int = 5) -> CheckResult:
    """DP pattern count == level formula == ancestor-chain subset count."""
    result = CheckResult(
        "pattern counts vs level formula", {"max_edges": max_edges, "k_max": k_max}
    )
    for n in range(max_edges + 1):
        for t in generate_trees(n):
            word = tree_to_perm(t)
            for k in range(1, k_max + 1):
                result.checked += 1
                by_word = count_increasing(word, k)
                by_levels = binom_level_sum(t, k)
                by_chains = root_to_leaf_subset_count(t, k)
                if not (by_word == by_levels == by_chains):
                    if not result.fail(
                        f"n={n} k={k} tree={encode(t)!r} word={by_word} "
                        f"levels={by_levels} chains={by_chains}"
                    ):
                        return result
        result.detail_lines.append(f"n={n} trees checked for k <= {k_max}")
    return result


def check_pattern_series(max_edges: int, ks: tuple[int, ...] = (2, 3, 4)) -> CheckResult:
    """Tree census of the level formula == increasing-pattern preset series."""
    result = CheckResult(
        "pattern-count census vs series", {"max_edges": max_edges, "ks": list(ks)}
    )
    for k in ks:
        series = eval_cf(LevelWeights.increasing(k), max(max_edges, 1), max_edges)
        for n in range(max_edges + 1):
            census: Counter[int] = Counter()
            for t in generate_trees(n):
                census[binom_level_sum(t, k)] += 1
            got = z_slice_q(series, n)
            result.checked += sum(census.values())
            if got != dict(census):
                result.fail(f"k={k} n={n}: series slice {got} != census {dict(census)}")
        result.detail_lines.append(f"k={k} checked through n={max_edges}")
    return result


def check_bijections(max_edges: int) -> CheckResult:
    """Round trips tree<->path and tree<->perm, plus the avoider-set image.

    The factorial-scan image comparison is capped at n = PERM_ORACLE_MAX.
    """
    result = CheckResult("bijection round trips", {"max_edges": max_edges})
    for n in range(max_edges + 1):
        count = 0
        images: set = set()
        for t in generate_trees(n):
            count += 1
            path = tree_to_path(t)
            if path_to_tree(path) != t:
                if not result.fail(f"n={n} tree={encode(t)!r} path round trip broke"):
                    return result
            word = tree_to_perm(t)
            if perm_to_tree(word) != t:
                if not result.fail(f"n={n} tree={encode(t)!r} perm round trip broke"):
                    return result
            images.add(word)
        result.checked += count
        if len(images) != count:
            result.fail(f"n={n}: {count} trees but only {len(images)} distinct words")
        if n <= PERM_ORACLE_MAX:
            avoiders = enumerate_132_avoiders(n)
            if images != set(avoiders):
                extra = images - set(avoiders)
                missing = set(avoiders) - images
                result.fail(
                    f"n={n}: image != avoider set; extra={sorted(map(format_perm, extra))[:3]} "
                    f"missing={sorted(map(format_perm, missing))[:3]}"
                )
            for word in avoiders:
                if tree_to_perm(perm_to_tree(word)) != word:
                    if not result.fail(f"n={n} word={format_perm(word)} inverse round trip broke"):
                        return result
            result.detail_lines.append(f"n={n} trees={count} avoiders={len(avoiders)}")
        else:
            result.detail_lines.append(f"n={n} trees={count} (avoider scan skipped)")
    return result
