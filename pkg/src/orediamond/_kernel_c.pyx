# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-dict kernels; the API mirrors _kernel_py."""

BACKEND = "c"


cdef inline tuple _eadd(tuple ea, tuple eb):
    cdef Py_ssize_t n = len(ea)
    cdef Py_ssize_t i
    if n == 2:
        return (<object>ea[0] + <object>eb[0], <object>ea[1] + <object>eb[1])
    return tuple([ea[i] + eb[i] for i in range(n)])


cpdef dict kadd(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
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


cpdef dict ksub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
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


cpdef dict kneg(dict a):
    cdef dict out = {}
    cdef object e, c
    for e, c in a.items():
        out[e] = -c
    return out


cpdef dict kscale(dict a, object c):
    cdef dict out = {}
    cdef object e, co
    if not c:
        return out
    for e, co in a.items():
        out[e] = co * c
    return out


cpdef dict kmul_term(dict a, tuple exp, object c):
    cdef dict out = {}
    cdef object e, co
    if not c:
        return out
    for e, co in a.items():
        out[_eadd(<tuple>e, exp)] = co * c
    return out


cpdef dict kmul(dict a, dict b):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, s
    cdef tuple e
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _eadd(<tuple>ea, <tuple>eb)
            s = out.get(e)
            if s is None:
                s = ca * cb
            else:
                s = s + ca * cb
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out
