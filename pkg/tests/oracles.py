"""Independent desk-scale oracles used by the tests.

Everything here recomputes expected values from first principles with
deliberately naive algorithms, separate from the package's implementations:
the Catalan recurrence, triple scans for patterns, subset scans for counts,
and a prefix-feasibility Dyck word generator (the package uses the
first-return factorization instead).
"""

from itertools import combinations


def catalan_table(max_n):
    """Catalan numbers through max_n via the convolution recurrence."""
    c = [1]
    for n in range(max_n):
        c.append(sum(c[i] * c[n - i] for i in range(n + 1)))
    return c


def naive_has_132(p):
    """Exhaustive triple scan for a (132) pattern; 1-based triple or None."""
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if p[i] < p[k] < p[j]:
                    return (i + 1, j + 1, k + 1)
    return None


def naive_count_increasing(p, k):
    """Increasing patterns of length k by scanning all index subsets."""
    return sum(
        1
        for idxs in combinations(range(len(p)), k)
        if all(p[idxs[i]] < p[idxs[i + 1]] for i in range(k - 1))
    )


def dyck_words(n):
    """All length-2n words over {E, N} whose prefixes keep #E >= #N."""

    def rec(e_left, n_left, prefix):
        if e_left == 0 and n_left == 0:
            yield prefix
            return
        if e_left > 0:
            yield from rec(e_left - 1, n_left, prefix + "E")
        if n_left > e_left:
            yield from rec(e_left, n_left - 1, prefix + "N")

    yield from rec(n, n, "")


def column_area(word):
    """Area under a step word: each E step sits at the height of prior N steps."""
    height = 0
    total = 0
    for ch in word:
        if ch == "N":
            height += 1
        else:
            total += height
    return total
