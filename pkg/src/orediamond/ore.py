"""The differential operator ring S = R[theta; delta].

Elements are stored in left-normal form sum a_i theta^i with a_i in R
(R is Q[x] or Q[x,y]; univariate coefficients are BiPoly values without
y).  Multiplication uses the closed binomial identity
theta^n a = sum C(n,i) delta^{n-i}(a) theta^i.
"""

from math import comb

from .rational import QZERO
from .poly import BiPoly, DomainError, NEG_INF, exact_divide
from .derivation import Derivation
from .unifactor import is_irreducible


class OreContext:
    """Ring tag plus derivation; fixes S = R[theta; delta]."""

    __slots__ = ("ring", "deriv")

    def __init__(self, ring, deriv):
        if ring not in ("poly1", "poly2"):
            raise DomainError("ring must be poly1 or poly2")
        if not isinstance(deriv, Derivation):
            raise DomainError("a Derivation is required")
        if ring == "poly1":
            if not deriv.dy.is_zero:
                raise DomainError("univariate context cannot move y")
            if deriv.dx.deg_y() > 0:
                raise DomainError("univariate context requires dx in Q[x]")
        self.ring = ring
        self.deriv = deriv

    def check_element(self, a):
        if self.ring == "poly1" and a.deg_y() > 0:
            raise DomainError("coefficient involves y in a univariate context")
        return a

    def delta(self, a):
        return self.deriv.apply(a)

    def delta_power(self, a, k):
        for _ in range(k):
            a = self.deriv.apply(a)
        return a


class OrePoly:
    """Left-normal Ore polynomial: coeffs[i] is the coefficient of theta^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, BiPoly) else BiPoly.const(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def from_ring(cls, a):
        return cls((a,))

    @classmethod
    def theta(cls, n=1, coeff=None):
        c = BiPoly.one() if coeff is None else coeff
        return cls((BiPoly.zero(),) * n + (c,))

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else BiPoly.zero()

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OrePoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return OrePoly([-c for c in self.coeffs])

    def scale_left(self, a):
        """Left multiplication by the ring element a."""
        return OrePoly([a * c for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, OrePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def render(self):
        if not self.coeffs:
            return "(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            if i == 0:
                parts.append(f"({c.render()})")
            elif i == 1:
                parts.append(f"({c.render()})t")
            else:
                parts.append(f"({c.render()})t^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"OrePoly({self.render()})"


def theta_pow_left(ctx, n, a):
    """Left-normal form of theta^n * a via the binomial identity."""
    if n < 0:
        raise DomainError("negative theta power")
    ctx.check_element(a)
    out = [BiPoly.zero()] * (n + 1)
    powers = [a]
    for _ in range(n):
        powers.append(ctx.delta(powers[-1]))
    for i in range(n + 1):
        out[i] = comb(n, i) * powers[n - i]
    return OrePoly(out)


def a_theta_pow_right(ctx, a, n):
    """Left-normal form of the right-side identity
    a*theta^n = sum (-1)^i C(n,i) theta^{n-i} delta^i(a)."""
    if n < 0:
        raise DomainError("negative theta power")
    ctx.check_element(a)
    total = OrePoly.zero()
    val = a
    for i in range(n + 1):
        term = theta_pow_left(ctx, n - i, val)
        sign = -1 if i % 2 else 1
        total = total + OrePoly([sign * comb(n, i) * c for c in term.coeffs])
        val = ctx.delta(val)
    return total


def mul(ctx, f, g):
    """Product in S, left-normal form."""
    if f.is_zero or g.is_zero:
        return OrePoly.zero()
    nf, ng = f.degree(), g.degree()
    out = [BiPoly.zero()] * (nf + ng + 1)
    # delta-power table for each coefficient of g
    for j, b in enumerate(g.coeffs):
        if b.is_zero:
            continue
        powers = [b]
        for _ in range(nf):
            powers.append(ctx.delta(powers[-1]))
        for i, a in enumerate(f.coeffs):
            if a.is_zero:
                continue
            for k in range(i + 1):
                term = powers[i - k]
                if not term.is_zero:
                    out[k + j] = out[k + j] + comb(i, k) * (a * term)
    return OrePoly(out)


def act(ctx, f, b):
    """The left S-module action (sum a_i theta^i) . b = sum a_i delta^i(b)."""
    ctx.check_element(b)
    total = BiPoly.zero()
    val = b
    for a in f.coeffs:
        total = total + a * val
        val = ctx.delta(val)
    return total


def phi(ctx, f):
    """phi(f) = f . 1 = constant theta-coefficient."""
    return f.coeff(0)


class WitnessCert:
    """The essential-extension witness x^(n+1) f = h*theta*x + r*x."""

    __slots__ = ("f", "x_elt", "h", "r")

    def __init__(self, ctx, f, x_elt, h, r):
        n = f.degree()
        lhs = f.scale_left(x_elt ** (n + 1))
        theta_x = mul(ctx, OrePoly.theta(), OrePoly.from_ring(x_elt))
        rhs = mul(ctx, h, theta_x) + OrePoly.from_ring(r * x_elt)
        if lhs != rhs:
            raise DomainError("witness identity failed verification")
        if r.is_zero:
            raise DomainError("witness requires a nonzero remainder")
        self.f = f
        self.x_elt = x_elt
        self.h = h
        self.r = r

    def verify(self, ctx):
        n = self.f.degree()
        lhs = self.f.scale_left(self.x_elt ** (n + 1))
        theta_x = mul(ctx, OrePoly.theta(), OrePoly.from_ring(self.x_elt))
        rhs = mul(ctx, self.h, theta_x) + OrePoly.from_ring(self.r * self.x_elt)
        return lhs == rhs and not self.r.is_zero

    def __repr__(self):
        return f"WitnessCert(h={self.h.render()}, r={self.r.render()})"


def _check_witness_preconditions(ctx, f, x_elt):
    if f.is_zero:
        raise DomainError("witness requires f != 0")
    if x_elt.is_zero:
        raise DomainError("witness requires a nonzero ring element")
    ctx.check_element(x_elt)
    if exact_divide(f.coeffs[-1], x_elt) is not None:
        raise DomainError("hypothesis failed: the element divides the leading coefficient of f")
    dxe = ctx.delta(x_elt)
    if dxe.is_constant and not dxe.is_zero:
        return  # the image of the element is a unit
    # otherwise the element must be irreducible and not Darboux-dividing
    if ctx.ring == "poly1":
        u = x_elt.as_unipoly("x")
        if u.degree() < 1:
            raise DomainError("hypothesis failed: the element is a unit")
        irr, certified = is_irreducible(u)
        if not irr:
            raise DomainError("hypothesis failed: the element is reducible")
        if not certified:
            raise DomainError("hypothesis failed: irreducibility could not be certified")
    else:
        if x_elt.total_degree() != 1:
            raise DomainError(
                "hypothesis failed: bivariate irreducibility is only certified in degree 1"
            )
    if exact_divide(dxe, x_elt) is not None:
        raise DomainError("hypothesis failed: the element divides its own image")


def _witness_recursion(ctx, f, x_elt):
    """(h, r) with x^(deg f + 1) f = h*theta*x + r*x, by the peeling
    recursion on the leading coefficient."""
    n = f.degree()
    if n == 0:
        return OrePoly.zero(), f.coeffs[0]
    a = f.coeffs
    top = a[n]
    dpow = [x_elt]
    for _ in range(n):
        dpow.append(ctx.delta(dpow[-1]))
    f1 = [BiPoly.zero()] * n
    for i in range(n):
        f1[i] = x_elt * a[i] - comb(n, i) * (top * dpow[n - i])
    f1 = OrePoly(f1)
    if f1.is_zero:
        raise DomainError("witness degenerated to a zero remainder")
    m = f1.degree()
    h1, r1 = _witness_recursion(ctx, f1, x_elt)
    scale = x_elt ** (n - 1 - m)
    h_top = OrePoly.theta(n - 1, x_elt**n * top)
    return h_top + h1.scale_left(scale), scale * r1


def essential_witness(ctx, f, x_elt):
    """Constructive witness that S/S*theta*x is an essential extension."""
    _check_witness_preconditions(ctx, f, x_elt)
    h, r = _witness_recursion(ctx, f, x_elt)
    return WitnessCert(ctx, f, x_elt, h, r)
