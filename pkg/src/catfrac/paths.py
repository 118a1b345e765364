"""Diagonal-bounded lattice paths and the preorder bijection with ordered trees.

A path of semilength n runs from (0,0) to (n,n) in steps E=(1,0) and N=(0,1),
never rising above the diagonal y = x.  Traversing a tree edge downward emits
an E step, returning upward emits an N step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .trees import OrderedTree
from .util import binom


class PathParseError(ValueError):
    """Step word rejected; carries the index of the offending prefix."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at step {position}")
        self.position = position


@dataclass(frozen=True, slots=True)
class DyckPath:
    """Validated step word over {E, N}: balanced, with every prefix #E >= #N."""

    steps: str

    def __post_init__(self):
        height = 0
        for pos, ch in enumerate(self.steps):
            if ch == "E":
                height += 1
            elif ch == "N":
                height -= 1
                if height < 0:
                    raise PathParseError("path rises above the diagonal", pos)
            else:
                raise PathParseError(f"unexpected step {ch!r}", pos)
        if height != 0:
            raise PathParseError(
                f"unbalanced path: {height} more E than N steps", len(self.steps)
            )

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2


_STEP_ALIASES = {"E": "E", "N": "N", "R": "E", "U": "N", "1": "E", "0": "N"}


def parse_path(text: str) -> DyckPath:
    """Parse a step word, accepting the {U,R} and {1,0} aliases for {N,E}.

    Whitespace between steps is ignored; case is not significant.
    """
    out = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        step = _STEP_ALIASES.get(ch.upper())
        if step is None:
            raise PathParseError(f"unexpected step {ch!r}", pos)
        out.append(step)
    return DyckPath("".join(out))


def tree_to_path(t: OrderedTree) -> DyckPath:
    """Preorder traversal: descent -> E, ascent -> N."""
    parts: list[str] = []

    def walk(node: OrderedTree) -> None:
        for c in node.children:
            parts.append("E")
            walk(c)
            parts.append("N")

    walk(t)
    return DyckPath("".join(parts))


def path_to_tree(p: DyckPath) -> OrderedTree:
    """Inverse of tree_to_path (total on valid paths)."""
    stack: list[list[OrderedTree]] = [[]]
    for ch in p.steps:
        if ch == "E":
            stack.append([])
        else:
            kids = stack.pop()
            stack[-1].append(OrderedTree(tuple(kids)))
    return OrderedTree(tuple(stack[0]))


def area(p: DyckPath) -> int:
    """Unit squares below the path and above the x-axis.

    Each E step contributes its height, i.e. the number of N steps before it.
    """
    height = 0
    total = 0
    for ch in p.steps:
        if ch == "N":
            height += 1
        else:
            total += height
    return total


def area_via_levels(t: OrderedTree) -> int:
    """Area of the corresponding path computed from the tree's level sum alone."""
    from .trees import level_sum

    n = t.n_edges
    return binom(n + 1, 2) - level_sum(t)


def generate_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength n, generated directly from the step grammar.

    Independent of the tree generator: uses the first-return factorization
    word = E u N v with u, v smaller Dyck words.
    """
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    for word in _words(n):
        yield DyckPath(word)


def _words(n: int) -> Iterator[str]:
    if n == 0:
        yield ""
        return
    for i in range(n):
        for u in _words(i):
            for v in _words(n - 1 - i):
                yield "E" + u + "N" + v
