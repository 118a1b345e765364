"""The tree-to-permutation bijection and pattern statistics.

A tree on n edges becomes a permutation word: label the nonroot vertices
n, n-1, ..., 1 in preorder, then read the labels in postorder (each vertex
recorded at its last visit).  The image is exactly the set of permutations
with no (132) pattern, and the number of length-k increasing patterns in the
word equals the tree statistic sum over vertices of C(level-1, k-1).

Permutation words are plain tuples of ints; the unshifted form is a
permutation of 1..n.
"""

from __future__ import annotations

from itertools import combinations, permutations
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .trees import LEAF, OrderedTree

PermWord = tuple[int, ...]


class Pattern132Error(ValueError):
    """Input word contains a (132) pattern; carries a 1-based witnessing triple."""

    def __init__(self, triple: tuple[int, int, int]):
        i, j, k = triple
        super().__init__(f"word contains a (132) pattern at positions (i, j, k) = ({i}, {j}, {k})")
        self.triple = triple


def validate_perm(p: Sequence[int]) -> PermWord:
    """Require an unshifted permutation word, i.e. each of 1..n exactly once."""
    word = tuple(int(x) for x in p)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of 1..{len(word)}: {list(word)}")
    return word


def tree_to_perm(t: OrderedTree) -> PermWord:
    """Preorder-decreasing labels read in postorder; the bare root gives ()."""
    word: list[int] = []
    next_label = t.n_edges

    def walk(node: OrderedTree) -> None:
        nonlocal next_label
        for child in node.children:
            label = next_label
            next_label -= 1
            walk(child)
            word.append(label)

    walk(t)
    return tuple(word)


def shift(p: Sequence[int], k: int) -> PermWord:
    """The same word written on the numbers 1+k, ..., n+k."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return tuple(x + k for x in p)


def has_132(p: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """A 1-based triple i < j < k with p[i] < p[k] < p[j], or None.

    The returned i is always the position of the prefix minimum before j,
    which suffices: any witness can be improved to one of that form.
    """
    n = len(p)
    if n < 3:
        return None
    # premin[j] = index of the minimum among p[0..j-1]
    premin = [0] * n
    best = 0
    for j in range(1, n):
        premin[j] = best
        if p[j] < p[best]:
            best = j
    for j in range(1, n - 1):
        i = premin[j]
        lo, hi = p[i], p[j]
        if lo >= hi:
            continue
        for k in range(j + 1, n):
            if lo < p[k] < hi:
                return (i + 1, j + 1, k + 1)
    return None


def _contains_132(p: Sequence[int]) -> bool:
    """Existence-only (132) test, linear time; used for bulk filtering."""
    third = 0  # values are positive, 0 acts as minus infinity
    stack: list[int] = []
    for x in reversed(p):
        if x < third:
            return True
        while stack and stack[-1] < x:
            third = stack.pop()
        stack.append(x)
    return False


def enumerate_132_avoiders(n: int) -> list[PermWord]:
    """All (132)-avoiding permutations of 1..n by filtering the full symmetric group.

    Brute force by design: this is the oracle the tree bijection is checked
    against.  Lexicographic order.  Feasible through n = 10 or so.
    """
    return [p for p in permutations(range(1, n + 1)) if not _contains_132(p)]


def count_increasing(p: Sequence[int], k: int) -> int:
    """Number of strictly increasing subsequences of length k.

    Dynamic programming on (length, end position); independent of any tree
    machinery.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(p)
    if k == 1:
        return n
    ending = [1] * n  # subsequences of the current length ending at each index
    for _ in range(2, k + 1):
        nxt = [0] * n
        for i in range(n):
            pi = p[i]
            total = 0
            for h in range(i):
                if p[h] < pi:
                    total += ending[h]
            nxt[i] = total
        ending = nxt
    return sum(ending)


def count_increasing_via_tree(t: OrderedTree, k: int) -> int:
    """Increasing patterns of length k in tree_to_perm(t), read off the levels."""
    from .trees import binom_level_sum

    return binom_level_sum(t, k)


def _label_table(t: OrderedTree) -> tuple[list[int], dict[int, int]]:
    """Preorder labels with levels and parent labels (root = label 0).

    Returns (levels_by_label, parent_by_label) where levels_by_label[label]
    is the level of that vertex; index 0 is the root at level 0.
    """
    n = t.n_edges
    levels = [0] * (n + 1)
    parent = {0: 0}
    next_label = n

    def walk(node: OrderedTree, node_label: int, level: int) -> None:
        nonlocal next_label
        for child in node.children:
            label = next_label
            next_label -= 1
            levels[label] = level + 1
            parent[label] = node_label
            walk(child, label, level + 1)

    walk(t, 0, 0)
    return levels, parent


def root_to_leaf_subsets(t: OrderedTree, k: int) -> set[frozenset[int]]:
    """Label sets of k nonroot vertices lying along one root-to-leaf path.

    Checked directly from the ancestor relation: sorted by level, each
    consecutive pair must be ancestor and descendant.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    levels, parent = _label_table(t)
    n = t.n_edges
    ancestors: dict[int, set[int]] = {0: set()}
    # Labels in decreasing order follow preorder, so parents are processed first.
    for label in range(n, 0, -1):
        ancestors[label] = ancestors[parent[label]] | {parent[label]}
    out: set[frozenset[int]] = set()
    for combo in combinations(range(1, n + 1), k):
        chain = sorted(combo, key=lambda lab: levels[lab])
        if all(chain[i] in ancestors[chain[i + 1]] for i in range(k - 1)):
            out.add(frozenset(combo))
    return out


def root_to_leaf_subset_count(t: OrderedTree, k: int) -> int:
    """Number of k-subsets of nonroot vertices that are pairwise ancestor-related."""
    return len(root_to_leaf_subsets(t, k))


def increasing_pattern_subsets(p: Sequence[int], k: int) -> set[frozenset[int]]:
    """Value sets that occur as a length-k increasing pattern (naive subset scan)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(p)
    out: set[frozenset[int]] = set()
    for idxs in combinations(range(n), k):
        if all(p[idxs[i]] < p[idxs[i + 1]] for i in range(k - 1)):
            out.add(frozenset(p[i] for i in idxs))
    return out


def perm_to_tree(p: Sequence[int]) -> OrderedTree:
    """Inverse of tree_to_perm, total on (132)-avoiding permutations.

    Raises Pattern132Error (with a witnessing triple) on words containing a
    (132) pattern and ValueError on non-permutation input.

    Decoding: in an avoiding word on 1..m, everything before the maximum m is
    the first subtree's block, shifted by the count of what follows m; the
    part after m is again a word of the same shape on 1..(that count).
    """
    word = validate_perm(p)
    witness = has_132(word)
    if witness is not None:
        raise Pattern132Error(witness)
    return _decode_avoider(word)


def _decode_avoider(w: PermWord) -> OrderedTree:
    if not w:
        return LEAF
    children: list[OrderedTree] = []
    while w:
        pos = w.index(len(w))  # the maximum equals the length at every stage
        offset = len(w) - pos - 1
        children.append(_decode_avoider(tuple(x - offset for x in w[:pos])))
        w = w[pos + 1 :]
    return OrderedTree(tuple(children))


@dataclass(frozen=True)
class ConcatSplit:
    """Block decomposition of a tree's word along its root subtrees.

    For subtrees on n_1, ..., n_s edges, the offsets are N_0 = n and
    N_k = N_(k-1) - n_k - 1 (ending at N_s = 0); block k is the k-th
    subtree's word shifted by N_k, followed by the separator label N_(k-1),
    which the subtree's root receives.  Concatenating the blocks in order
    reconstitutes the tree's word.
    """

    offsets: tuple[int, ...]
    blocks: tuple[tuple[PermWord, int], ...]

    @classmethod
    def from_tree(cls, t: OrderedTree) -> "ConcatSplit":
        offsets = [t.n_edges]
        blocks: list[tuple[PermWord, int]] = []
        for sub in t.children:
            previous = offsets[-1]
            offsets.append(previous - sub.n_edges - 1)
            blocks.append((shift(tree_to_perm(sub), offsets[-1]), previous))
        return cls(tuple(offsets), tuple(blocks))

    def word(self) -> PermWord:
        out: list[int] = []
        for block, separator in self.blocks:
            out.extend(block)
            out.append(separator)
        return tuple(out)


def parse_perm(text: str) -> PermWord:
    """Parse a permutation word: separated integers, or contiguous digits for n <= 9."""
    s = text.strip()
    if not s:
        return ()
    normalized = s.replace(",", " ")
    if " " in normalized or "\t" in normalized:
        tokens = normalized.split()
    elif s.isdigit():
        tokens = list(s)
    else:
        tokens = [s]
    try:
        word = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise ValueError(f"cannot parse permutation word {text!r}") from None
    return validate_perm(word)


def format_perm(p: Sequence[int]) -> str:
    return " ".join(str(x) for x in p)


def _all_permutation_words(n: int) -> Iterator[PermWord]:
    """Every permutation of 1..n, lexicographically (the brute-force universe)."""
    return permutations(range(1, n + 1))
