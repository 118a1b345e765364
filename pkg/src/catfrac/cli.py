"""Command-line front end.

Subcommands: series, enumerate, map, count, verify.  All take --json.
Exit codes: 0 success, 1 verification failure, 2 usage error.  Output is
deterministic: identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .contfrac import LevelWeights, eval_cf
from .paths import area, parse_path, path_to_tree, tree_to_path
from .perms import (
    Pattern132Error,
    count_increasing,
    format_perm,
    has_132,
    parse_perm,
    perm_to_tree,
    tree_to_perm,
)
from .series import TruncSeries, TruncationError
from .trees import OrderedTree, decode, encode, generate_trees, level_profile, level_sum
from . import verify as verify_mod

WEIGHT_TOKENS = "catalan|eq1|eq2|k=<int>|multivariate"


def _parse_weights(token: str) -> LevelWeights:
    if token == "catalan":
        return LevelWeights.catalan()
    if token == "eq1":
        return LevelWeights.increasing(3)
    if token == "eq2":
        return LevelWeights.area()
    if token == "multivariate":
        return LevelWeights.multivariate()
    if token.startswith("k="):
        try:
            k = int(token[2:])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad k in {token!r}") from None
        if k < 1:
            raise argparse.ArgumentTypeError("k must be at least 1")
        return LevelWeights.increasing(k)
    raise argparse.ArgumentTypeError(f"unknown weights {token!r}; expected {WEIGHT_TOKENS}")


# Stable check ids; each maps to a check routine and its default bounds.
CHECKS: dict[str, dict] = {
    "theorem1": {"run": lambda n, k: verify_mod.check_level_census(n), "max_edges": 7, "takes_k": False},
    "lemma2": {"run": lambda n, k: verify_mod.check_area_formula(n), "max_edges": 10, "takes_k": False},
    "theorem3": {"run": lambda n, k: verify_mod.check_area_series(n), "max_edges": 8, "takes_k": False},
    "lemma3": {"run": lambda n, k: verify_mod.check_word_concatenation(n), "max_edges": 8, "takes_k": False},
    "lemma4": {
        "run": lambda n, k: verify_mod.check_chain_subsets(n, k_max=k or 4),
        "max_edges": 7,
        "takes_k": True,
    },
    "theorem5": {
        "run": lambda n, k: verify_mod.check_pattern_counts(n, k_max=k or 5),
        "max_edges": 8,
        "takes_k": True,
    },
    "corollary6": {
        "run": lambda n, k: verify_mod.check_pattern_series(n, ks=(k,) if k else (2, 3, 4)),
        "max_edges": 8,
        "takes_k": True,
    },
    "bijections": {"run": lambda n, k: verify_mod.check_bijections(n), "max_edges": 8, "takes_k": False},
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catfrac",
        description="Continued-fraction generating functions for ordered trees, "
        "lattice paths, and (132)-avoiding permutations, with exact brute-force checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    p_series = sub.add_parser("series", help="evaluate a level-weighted continued fraction")
    p_series.add_argument("--weights", type=_parse_weights, required=True, metavar=WEIGHT_TOKENS)
    p_series.add_argument("--order", type=int, required=True, help="max z-degree retained")
    p_series.add_argument("--depth", type=int, default=None, help="levels to evaluate (default: order)")
    p_series.add_argument("--json", action="store_true")

    p_enum = sub.add_parser("enumerate", help="list ordered trees by edge count")
    p_enum.add_argument("--edges", type=int, required=True)
    p_enum.add_argument("--stats", action="store_true", help="add level profile, level sum, area, word")
    p_enum.add_argument("--json", action="store_true", help="one JSON object per line")

    p_map = sub.add_parser("map", help="convert between tree, path, and permutation encodings")
    p_map.add_argument("--from", dest="source", choices=("tree", "path", "perm"), required=True)
    p_map.add_argument("--to", dest="target", choices=("tree", "path", "perm"), required=True)
    p_map.add_argument("value", help="tree: parentheses; path: E/N word; perm: separated integers")
    p_map.add_argument("--json", action="store_true")

    p_count = sub.add_parser("count", help="increasing-pattern count and (132) status of a word")
    p_count.add_argument("--perm", required=True)
    p_count.add_argument("--k", type=int, required=True)
    p_count.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run an exhaustive cross-check")
    p_verify.add_argument("--check", choices=sorted(CHECKS), required=True)
    p_verify.add_argument("--max-edges", type=int, default=None)
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.epilog = "the avoider-set scan inside 'bijections' is capped at n=10"

    return parser


def _render_grouped(series: TruncSeries) -> str:
    """z-grouped rendering, e.g. ``1 + z*(1) + z^2*(2) + z^3*(4 + q)``."""
    groups: dict[int, list] = {}
    for m, c in series.terms():
        groups.setdefault(m.z_deg, []).append((m, c))
    parts: list[str] = []
    for z in sorted(groups):
        inner = _render_poly(groups[z])
        if z == 0:
            parts.append(inner if len(groups[z]) == 1 else f"({inner})")
        elif z == 1:
            parts.append(f"z*({inner})")
        else:
            parts.append(f"z^{z}*({inner})")
    return " + ".join(parts) if parts else "0"


def _render_poly(terms: list) -> str:
    pieces: list[str] = []
    for m, c in terms:
        body_parts = []
        if m.q_deg == 1:
            body_parts.append("q")
        elif m.q_deg:
            body_parts.append(f"q^{m.q_deg}")
        for i, a in enumerate(m.v_degs):
            if a == 1:
                body_parts.append(f"v{i + 1}")
            elif a:
                body_parts.append(f"v{i + 1}^{a}")
        body = "*".join(body_parts)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if c < 0 else text)
        else:
            pieces.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(pieces)


def cmd_series(args) -> int:
    if args.order < 0:
        raise ValueError("--order must be nonnegative")
    depth = args.depth if args.depth is not None else max(args.order, 1)
    if depth < 1:
        raise ValueError("--depth must be at least 1")
    series = eval_cf(args.weights, depth, args.order)
    if args.json:
        doc = {
            "weights": str(args.weights),
            "order": args.order,
            "depth": depth,
            "terms": series.term_records(),
        }
        print(json.dumps(doc))
    else:
        print(_render_grouped(series))
    return 0


def _tree_stats(t: OrderedTree) -> dict:
    profile = level_profile(t)
    return {
        "tree": encode(t),
        "profile": list(profile),
        "level_sum": level_sum(t),
        "area": area(tree_to_path(t)),
        "perm": list(tree_to_perm(t)),
    }


def cmd_enumerate(args) -> int:
    if args.edges < 0:
        raise ValueError("--edges must be nonnegative")
    for t in generate_trees(args.edges):
        if args.json:
            doc = _tree_stats(t) if args.stats else {"tree": encode(t)}
            print(json.dumps(doc))
        elif args.stats:
            s = _tree_stats(t)
            profile = ",".join(str(x) for x in s["profile"])
            print(
                f"{s['tree']}\tprofile=({profile})\tlevel_sum={s['level_sum']}"
                f"\tarea={s['area']}\tperm={format_perm(s['perm'])}"
            )
        else:
            print(encode(t))
    return 0


def _to_tree(kind: str, value: str) -> OrderedTree:
    if kind == "tree":
        return decode(value.strip())
    if kind == "path":
        return path_to_tree(parse_path(value))
    return perm_to_tree(parse_perm(value))


def _from_tree(kind: str, t: OrderedTree) -> str:
    if kind == "tree":
        return encode(t)
    if kind == "path":
        return tree_to_path(t).steps
    return format_perm(tree_to_perm(t))


def cmd_map(args) -> int:
    t = _to_tree(args.source, args.value)
    out = _from_tree(args.target, t)
    if args.json:
        print(json.dumps({"from": args.source, "to": args.target, "input": args.value, "output": out}))
    else:
        print(out)
    return 0


def cmd_count(args) -> int:
    word = parse_perm(args.perm)
    if args.k < 1:
        raise ValueError("--k must be at least 1")
    n_patterns = count_increasing(word, args.k)
    witness = has_132(word)
    if args.json:
        doc = {
            "perm": list(word),
            "n": len(word),
            "k": args.k,
            "increasing_patterns": n_patterns,
            "avoids_132": witness is None,
            "witness_132": list(witness) if witness else None,
        }
        print(json.dumps(doc))
    else:
        print(f"perm = {format_perm(word)}")
        print(f"n = {len(word)}")
        print(f"increasing_patterns(k={args.k}) = {n_patterns}")
        if witness is None:
            print("avoids_132 = yes")
        else:
            i, j, k = witness
            print(f"avoids_132 = no (witness i={i} j={j} k={k})")
    return 0


def cmd_verify(args) -> int:
    entry = CHECKS[args.check]
    if args.k is not None and not entry["takes_k"]:
        raise ValueError(f"check {args.check!r} does not take --k")
    if args.k is not None and args.k < 1:
        raise ValueError("--k must be at least 1")
    max_edges = args.max_edges if args.max_edges is not None else entry["max_edges"]
    if max_edges < 0:
        raise ValueError("--max-edges must be nonnegative")
    result = entry["run"](max_edges, args.k)
    if args.json:
        doc = {
            "check": args.check,
            "name": result.name,
            "params": result.params,
            "ok": result.ok,
            "checked": result.checked,
            "failures": result.failures,
        }
        print(json.dumps(doc))
    else:
        print(f"check = {args.check} ({result.name})")
        params = " ".join(f"{key}={value}" for key, value in sorted(result.params.items()))
        print(f"params: {params}")
        for line in result.detail_lines:
            print(f"  {line}")
        for failure in result.failures:
            print(f"  FAIL {failure}")
        print(f"{'PASS' if result.ok else 'FAIL'} {args.check} (checked {result.checked})")
    return 0 if result.ok else 1


_COMMANDS: dict[str, Callable] = {
    "series": cmd_series,
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "count": cmd_count,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TruncationError as exc:
        print(f"error: beyond truncation: {exc}", file=sys.stderr)
        return 2
    except Pattern132Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())
