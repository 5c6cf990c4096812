"""Groebner bases in Q[x, y] under graded lexicographic order (x > y).

Plain Buchberger with the coprime-leading-term criterion and full
interreduction; two variables keep the pair sets small enough that no
further strategy is needed.
"""

from .rational import QONE
from . import _kernel as K
from .poly import BiPoly, DomainError, _grlex_key


def _lcm_exp(ea, eb):
    return (max(ea[0], eb[0]), max(ea[1], eb[1]))


def _divisible(exp, by):
    return exp[0] >= by[0] and exp[1] >= by[1]


def normal_form(p, basis):
    """Remainder of p on division by basis (every term fully reduced)."""
    if not basis:
        return p
    lead = [(g.leading_exp(), g.lc(), g.terms) for g in basis if not g.is_zero]
    rem = dict(p.terms)
    out = {}
    while rem:
        rexp = max(rem, key=_grlex_key)
        c = rem[rexp]
        for gexp, glc, gterms in lead:
            if _divisible(rexp, gexp):
                shift = (rexp[0] - gexp[0], rexp[1] - gexp[1])
                rem = K.ksub(rem, K.kmul_term(gterms, shift, c / glc))
                break
        else:
            out[rexp] = c
            del rem[rexp]
    return BiPoly._raw(out)


def s_polynomial(f, g):
    fe, ge = f.leading_exp(), g.leading_exp()
    l = _lcm_exp(fe, ge)
    tf = K.kmul_term(f.terms, (l[0] - fe[0], l[1] - fe[1]), QONE / f.lc())
    tg = K.kmul_term(g.terms, (l[0] - ge[0], l[1] - ge[1]), QONE / g.lc())
    return BiPoly._raw(K.ksub(tf, tg))


def buchberger(gens):
    """Reduced Groebner basis of the ideal generated by gens."""
    basis = [g.monic() for g in gens if not g.is_zero]
    if not basis:
        raise DomainError("the zero ideal has no Groebner basis here; give a nonzero generator")
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        fe, ge = f.leading_exp(), g.leading_exp()
        if _lcm_exp(fe, ge) == (fe[0] + ge[0], fe[1] + ge[1]):
            continue  # coprime leading terms
        r = normal_form(s_polynomial(f, g), basis)
        if not r.is_zero:
            basis.append(r.monic())
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimalize: drop generators whose leading term another divides
    basis.sort(key=lambda g: _grlex_key(g.leading_exp()))
    minimal = []
    for g in basis:
        ge = g.leading_exp()
        if not any(_divisible(ge, h.leading_exp()) for h in minimal):
            minimal.append(g)
    # reduce each generator by the others
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: _grlex_key(g.leading_exp()))
    return reduced


def in_ideal(p, gens):
    """Ideal membership via normal form against a Groebner basis."""
    return normal_form(p, buchberger(gens)).is_zero


def is_unit_ideal(gens):
    """True when the generators have no common zero over the algebraic
    closure, i.e. the ideal is all of Q[x, y]."""
    basis = buchberger(gens)
    return len(basis) == 1 and basis[0].is_constant and not basis[0].is_zero


def has_common_zero_with(gens, p):
    """True when p vanishes somewhere on the zero set of gens."""
    if p.is_zero:
        raise DomainError("the zero polynomial vanishes everywhere; give a nonzero p")
    return not is_unit_ideal(list(gens) + [p])
