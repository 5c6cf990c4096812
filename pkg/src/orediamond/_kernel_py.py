"""Pure-Python term-dict kernels.

A polynomial is a dict mapping exponent tuples to nonzero rational
coefficients.  These functions are the hot inner loops shared by the
sparse polynomial types and the Groebner engine; _kernel_c.pyx is the
compiled twin with the same signatures.
"""

BACKEND = "py"


def kadd(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def ksub(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def kneg(a):
    return {e: -c for e, c in a.items()}


def kscale(a, c):
    if not c:
        return {}
    return {e: co * c for e, co in a.items()}


def kmul_term(a, exp, c):
    """Multiply by the single term c * X^exp."""
    if not c:
        return {}
    out = {}
    for e, co in a.items():
        out[tuple(x + y for x, y in zip(e, exp))] = co * c
    return out


def kmul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e)
            if s is None:
                s = ca * cb
            else:
                s = s + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out
