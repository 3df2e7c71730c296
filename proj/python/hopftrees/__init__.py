"""Exact Hopf algebra computations on rooted trees, forests, words and permutations.

Elements are passed as their canonical strings. Linear combinations come back
as dicts from basis string to ``Fraction``; tensor bases are ``(left, right)`` tuples.
"""

from fractions import Fraction

from . import _hopftrees as _core
from ._hopftrees import (
    DomainError,
    ParseError,
    canonical_tree,
    enumerate_trees,
    hot_to_perm,
    module_algebra_check,
    perm_to_hot,
    psi_apply,
    psi_conn_apply,
    relabel_rho,
)


def _lc(terms):
    return {tuple(basis) if isinstance(basis, (list, tuple)) else basis: Fraction(coeff) for coeff, basis in terms}


def gl_product(t1, t2, flavor="unordered"):
    return _lc(_core.gl_product(t1, t2, flavor))


def gl_coproduct(tree, flavor="unordered"):
    return _lc(_core.gl_coproduct(tree, flavor))


def gl_antipode(tree, flavor="unordered"):
    return _lc(_core.gl_antipode(tree, flavor))


def ck_coproduct(monomial):
    return _lc(_core.ck_coproduct(monomial))


def chi_pairing(tree, monomial):
    return Fraction(_core.chi_pairing(tree, monomial))


def shuffle_product(u, v):
    return _lc(_core.shuffle_product(u, v))


def deconcat_coproduct(word):
    return _lc(_core.deconcat_coproduct(word))


def heap_product(s, t):
    return _lc(_core.heap_product(s, t))


def perm_coproduct(p):
    return _lc(_core.perm_coproduct(p))


def expand_operator(words, env_json):
    """Returns (raw tree count, cancelled, surviving trees)."""
    raw, cancelled, surviving = _core.expand_operator(words, env_json)
    return Fraction(raw), Fraction(cancelled), surviving


def verify(algebra, max_degree, product_degree=None, family="rooted"):
    """Returns (passed, report text)."""
    return _core.verify(algebra, max_degree, max_degree if product_degree is None else product_degree, family)
