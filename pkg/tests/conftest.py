import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import strategies as st

from catfrac.series import Monomial, TruncSeries
from catfrac.trees import generate_trees
from oracles import catalan_table

_CATALAN = catalan_table(10)
_TREE_LISTS = {n: list(generate_trees(n)) for n in range(9)}


@st.composite
def small_trees(draw, max_edges=8):
    """A random ordered tree with at most max_edges edges."""
    n = draw(st.integers(min_value=0, max_value=max_edges))
    idx = draw(st.integers(min_value=0, max_value=_CATALAN[n] - 1))
    return _TREE_LISTS[n][idx]


@st.composite
def zq_monomials(draw, max_z=4, min_z=0):
    z = draw(st.integers(min_value=min_z, max_value=max_z))
    q = draw(st.integers(min_value=0, max_value=4))
    return Monomial(z, q, ())


@st.composite
def zq_series(draw, order_z=4, min_z=0):
    """A random sparse z,q series at a fixed order with smallish coefficients."""
    terms = draw(
        st.dictionaries(
            zq_monomials(max_z=order_z, min_z=min_z),
            st.integers(min_value=-5, max_value=5),
            max_size=6,
        )
    )
    return TruncSeries(order_z, terms)
