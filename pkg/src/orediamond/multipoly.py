"""Sparse polynomials in an arbitrary number of variables.

Used internally wherever more than the two ring variables are in play:
auxiliary parameters in the Darboux search and the pencil parameter t in
elimination.  Shares the term-dict kernels with BiPoly.
"""

from .rational import QONE, QZERO, q
from . import _kernel as K
from .poly import DomainError, UniPoly, NEG_INF


class MPoly:
    """Sparse polynomial over Q in nvars variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        cleaned = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = q(coeff)
                if coeff:
                    cleaned[tuple(int(e) for e in exp)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = q(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars):
        return cls.const(nvars, 1)

    @classmethod
    def var(cls, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): QONE})

    @classmethod
    def monomial(cls, nvars, exp, c=1):
        c = q(c)
        return cls._raw(nvars, {tuple(exp): c} if c else {})

    @classmethod
    def from_bipoly(cls, p, nvars, ix=0, iy=1):
        out = {}
        for (i, j), c in p.terms.items():
            exp = [0] * nvars
            exp[ix] = i
            exp[iy] = j
            out[tuple(exp)] = c
        return cls._raw(nvars, out)

    def to_bipoly(self, ix=0, iy=1):
        from .poly import BiPoly

        out = {}
        for exp, c in self.terms.items():
            for k, e in enumerate(exp):
                if e and k not in (ix, iy):
                    raise DomainError("extra variables present")
            out[(exp[ix], exp[iy])] = c
        return BiPoly(out)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        z = (0,) * self.nvars
        return not self.terms or (len(self.terms) == 1 and z in self.terms)

    def constant_value(self):
        if not self.is_constant:
            raise DomainError("not a constant polynomial")
        return self.terms.get((0,) * self.nvars, QZERO)

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise DomainError("variable count mismatch")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        self._check(other)
        return MPoly._raw(self.nvars, K.kadd(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        self._check(other)
        return MPoly._raw(self.nvars, K.ksub(self.terms, other.terms))

    def __rsub__(self, other):
        return MPoly.const(self.nvars, other) - self

    def __neg__(self):
        return MPoly._raw(self.nvars, K.kneg(self.terms))

    def __mul__(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return MPoly._raw(self.nvars, K.kmul(self.terms, other.terms))
        return MPoly._raw(self.nvars, K.kscale(self.terms, q(other)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        out = MPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, type(QONE))):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def deriv(self, i):
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return MPoly._raw(self.nvars, out)

    def substitute(self, i, value):
        """Replace variable i by a rational value."""
        value = q(value)
        out = MPoly.zero(self.nvars)
        powers = {0: QONE}
        for exp, c in self.terms.items():
            k = exp[i]
            if k not in powers:
                powers[k] = value**k
            e = list(exp)
            e[i] = 0
            out = out + MPoly.monomial(self.nvars, e, c * powers[k])
        return out

    def substitute_poly(self, i, value):
        """Replace variable i by another MPoly (same arity)."""
        self._check(value)
        out = MPoly.zero(self.nvars)
        for exp, c in self.terms.items():
            e = list(exp)
            k = e[i]
            e[i] = 0
            out = out + MPoly.monomial(self.nvars, e, c) * value**k
        return out

    def coeffs_in(self, i):
        """Coefficients of powers of variable i, ascending, as MPoly with
        that exponent zeroed."""
        d = self.degree_in(i)
        if d is NEG_INF:
            return []
        buckets = [dict() for _ in range(int(d) + 1)]
        for exp, c in self.terms.items():
            e = list(exp)
            k = e[i]
            e[i] = 0
            buckets[k][tuple(e)] = c
        return [MPoly._raw(self.nvars, b) for b in buckets]

    def as_unipoly(self, i):
        """Dense univariate view in variable i; other variables must be
        absent."""
        cs = []
        for c in self.coeffs_in(i):
            if not c.is_constant:
                raise DomainError("other variables present")
            cs.append(c.constant_value())
        return UniPoly(cs)

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"v{k}" if e == 1 else f"v{k}^{e}"
                for k, e in enumerate(exp)
                if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return "MPoly(" + " + ".join(parts) + ")"


def mpoly_exact_divide(p, d):
    """Return h with p = d*h when d divides p exactly, else None."""
    if d.is_zero:
        raise DomainError("division by the zero polynomial")
    if p.is_zero:
        return MPoly.zero(p.nvars)
    p._check(d)

    def key(e):
        return (sum(e), e)

    dexp = max(d.terms, key=key)
    dlc = d.terms[dexp]
    rem = p.terms
    quot = {}
    while rem:
        rexp = max(rem, key=key)
        e = tuple(a - b for a, b in zip(rexp, dexp))
        if any(x < 0 for x in e):
            return None
        c = rem[rexp] / dlc
        quot[e] = c
        rem = K.ksub(rem, K.kmul_term(d.terms, e, c))
    return MPoly._raw(p.nvars, quot)


def mpoly_resultant(p, q_, i):
    """Sylvester resultant of p and q_ eliminating variable i."""
    if p.is_zero or q_.is_zero:
        raise DomainError("resultant of the zero polynomial")
    p._check(q_)
    cp, cq = p.coeffs_in(i), q_.coeffs_in(i)
    dp, dq = len(cp) - 1, len(cq) - 1
    if dp <= 0 and dq <= 0:
        raise DomainError("both inputs constant in the eliminated variable")
    if dp == 0:
        return cp[0] ** dq
    if dq == 0:
        return cq[0] ** dp
    n = dp + dq
    zero = MPoly.zero(p.nvars)
    rows = []
    for k in range(dq):
        row = [zero] * n
        for j, c in enumerate(cp):
            row[k + dp - j] = c
        rows.append(row)
    for k in range(dp):
        row = [zero] * n
        for j, c in enumerate(cq):
            row[k + dq - j] = c
        rows.append(row)
    return _mp_bareiss(rows, MPoly.one(p.nvars))


def _mp_bareiss(rows, one):
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero:
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(one.nvars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                quo = mpoly_exact_divide(num, prev)
                if quo is None:
                    raise DomainError("inexact division in determinant")
                m[i][j] = quo
            m[i][k] = MPoly.zero(one.nvars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det
