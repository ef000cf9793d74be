# cython: language_level=3
"""Compiled term-map kernels; mirrors ``_termops`` function for function.

Coefficients stay Python ``Fraction`` objects (exactness is the point);
the win comes from C-level loop and dict handling plus the same
accumulate-then-normalize trick used by the pure-Python multiply.
"""

from fractions import Fraction

BACKEND_NAME = "cython"


cdef inline tuple _add_exps(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    cdef list out = [0] * n
    cdef long s
    for i in range(n):
        s = <long> ea[i] + <long> eb[i]
        out[i] = s
    return tuple(out)


def add_terms(dict a, dict b):
    if not b:
        return dict(a)
    if not a:
        return dict(b)
    cdef dict out = dict(a)
    cdef object e, c, cur, s
    for e, c in b.items():
        cur = out.get(e)
        if cur is None:
            out[e] = c
        else:
            s = cur + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, cur, s
    for e, c in b.items():
        cur = out.get(e)
        if cur is None:
            out[e] = -c
        else:
            s = cur - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def neg_terms(dict a):
    cdef dict out = {}
    cdef object e, c
    for e, c in a.items():
        out[e] = -c
    return out


def scale_terms(dict a, c):
    if not c:
        return {}
    cdef dict out = {}
    cdef object e, v
    for e, v in a.items():
        out[e] = c * v
    return out


def mul_terms(dict a, dict b):
    if not a or not b:
        return {}
    cdef dict acc = {}
    cdef list b_items = []
    cdef object e, c
    for e, c in b.items():
        b_items.append((<tuple> e, c.numerator, c.denominator))
    cdef tuple ea, eb, key, item
    cdef object ca, na, da, nb, db, n, d, cur_obj
    cdef list cur
    cdef Py_ssize_t j, nb_items = len(b_items)
    for ea, ca in a.items():
        na = ca.numerator
        da = ca.denominator
        for j in range(nb_items):
            item = <tuple> b_items[j]
            eb = <tuple> item[0]
            nb = item[1]
            db = item[2]
            key = _add_exps(ea, eb)
            n = na * nb
            d = da * db
            cur_obj = acc.get(key)
            if cur_obj is None:
                acc[key] = [n, d]
            else:
                cur = <list> cur_obj
                cur[0] = cur[0] * d + n * cur[1]
                cur[1] = cur[1] * d
    cdef dict out = {}
    cdef object num
    for e, cur_obj in acc.items():
        cur = <list> cur_obj
        num = cur[0]
        if num:
            out[e] = Fraction(num, cur[1])
    return out


def iadd_scaled_terms(dict acc, dict src, c):
    """acc += c * src, in place; acc stays canonical."""
    if not c:
        return
    cdef object e, v, cur, nv
    for e, v in src.items():
        cur = acc.get(e)
        nv = c * v if cur is None else cur + c * v
        if nv:
            acc[e] = nv
        elif cur is not None:
            del acc[e]
