# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-map kernel: drop-in replacement for `_terms_py`.

Same representation and signatures; see `_terms_py` for the contract.
Coefficients stay Python objects (int / Fraction) because the arithmetic is
exact and unbounded; the speedup comes from compiled loop and tuple
handling.
"""


cdef inline tuple _tuple_trim(list exps):
    while exps and exps[len(exps) - 1] == 0:
        del exps[len(exps) - 1]
    return tuple(exps)


cpdef tuple mono_mul(tuple m1, tuple m2):
    """Product of two monomials: add exponent tuples, trim trailing zeros."""
    cdef Py_ssize_t n1 = len(m1)
    cdef Py_ssize_t n2 = len(m2)
    cdef Py_ssize_t i
    cdef list out
    if n1 == 0:
        return m2
    if n2 == 0:
        return m1
    if n1 < n2:
        out = list(m2)
        for i in range(n1):
            out[i] = out[i] + m1[i]
        return tuple(out)
    if n2 < n1:
        out = list(m1)
        for i in range(n2):
            out[i] = out[i] + m2[i]
        return tuple(out)
    out = [0] * n1
    for i in range(n1):
        out[i] = m1[i] + m2[i]
    return _tuple_trim(out)


def add_terms(dict a, dict b):
    cdef dict out
    cdef tuple m
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for m, c in b.items():
        c0 = out.get(m)
        if c0 is None:
            out[m] = c
        else:
            c0 = c0 + c
            if c0:
                out[m] = c0
            else:
                del out[m]
    return out


def sub_terms(dict a, dict b):
    cdef dict out
    cdef tuple m
    if not b:
        return dict(a)
    out = dict(a)
    for m, c in b.items():
        c0 = out.get(m)
        if c0 is None:
            out[m] = -c
        else:
            c0 = c0 - c
            if c0:
                out[m] = c0
            else:
                del out[m]
    return out


def neg_terms(dict a):
    cdef dict out = {}
    cdef tuple m
    for m, c in a.items():
        out[m] = -c
    return out


def scale_terms(dict a, c):
    """Multiply every coefficient by the nonzero scalar c."""
    cdef dict out = {}
    cdef tuple m
    for m, cc in a.items():
        out[m] = cc * c
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ma, mb, m
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mono_mul(ma, mb)
            c0 = out.get(m)
            if c0 is None:
                out[m] = ca * cb
            else:
                c0 = c0 + ca * cb
                if c0:
                    out[m] = c0
                else:
                    del out[m]
    return out


def mul_monomial(dict a, tuple mono, c):
    """a * c*z^mono for a single monomial with nonzero coefficient c."""
    cdef dict out = {}
    cdef tuple m
    if c == 1 and len(mono) == 0:
        return dict(a)
    for m, cc in a.items():
        out[mono_mul(m, mono)] = cc * c
    return out


def div_binomial(dict a, Py_ssize_t sa, Py_ssize_t sb):
    """Exact division of a by (v_sa - v_sb); ValueError when not exact."""
    cdef dict buckets = {}
    cdef dict out = {}
    cdef tuple mono, base_t
    cdef list base, mono_l, entries
    cdef Py_ssize_t w, width = (sa if sa > sb else sb) + 1
    cdef object ea, eb, s, d, prev, t, u
    if not a:
        return out
    for mono, c in a.items():
        w = len(mono)
        ea = mono[sa] if sa < w else 0
        eb = mono[sb] if sb < w else 0
        base = list(mono)
        if sa < w:
            base[sa] = 0
        if sb < w:
            base[sb] = 0
        while base and base[len(base) - 1] == 0:
            del base[len(base) - 1]
        key = (tuple(base), ea + eb)
        got = buckets.get(key)
        if got is None:
            buckets[key] = [(ea, c)]
        else:
            (<list> got).append((ea, c))
    for key, bucket in buckets.items():
        base_t = <tuple> (<tuple> key)[0]
        s = (<tuple> key)[1]
        entries = <list> bucket
        entries.sort()
        d = 0
        prev = 0
        for entry in entries:
            t = (<tuple> entry)[0]
            c = (<tuple> entry)[1]
            if d:
                u = prev
                while u < t:
                    mono_l = list(base_t)
                    if len(mono_l) < width:
                        mono_l.extend([0] * (width - len(mono_l)))
                    mono_l[sa] = u
                    mono_l[sb] = s - 1 - u
                    out[_tuple_trim(mono_l)] = d
                    u = u + 1
            d = d - c
            prev = t
        if d:
            raise ValueError("binomial division is not exact")
    return out


def permute_slots(dict a, tuple perm):
    """Move the exponent at slot s to slot perm[s], for a permutation perm."""
    cdef dict out = {}
    cdef tuple mono
    cdef list m
    cdef Py_ssize_t w, width, s, t, nperm = len(perm)
    for mono, c in a.items():
        w = len(mono)
        width = 0
        for s in range(w):
            if mono[s]:
                t = perm[s] if s < nperm else s
                if t + 1 > width:
                    width = t + 1
        m = [0] * width
        for s in range(w):
            e = mono[s]
            if e:
                m[perm[s] if s < nperm else s] = e
        out[tuple(m)] = c
    return out


def swap_z(dict a, Py_ssize_t sa, Py_ssize_t sb):
    """Exchange the exponents at slots sa and sb in every monomial."""
    cdef dict out = {}
    cdef tuple mono
    cdef list m
    cdef Py_ssize_t w, width
    cdef object ea, eb
    for mono, c in a.items():
        w = len(mono)
        ea = mono[sa] if sa < w else 0
        eb = mono[sb] if sb < w else 0
        if ea == eb:
            out[mono] = c
            continue
        width = w
        if sa + 1 > width:
            width = sa + 1
        if sb + 1 > width:
            width = sb + 1
        m = list(mono)
        if width > w:
            m.extend([0] * (width - w))
        m[sa] = eb
        m[sb] = ea
        out[_tuple_trim(m)] = c
    return out


def addmul_into(dict r, dict b, tuple mono, c):
    """In-place r += c * z^mono * b on fixed-width keys; returns created keys."""
    cdef list created = []
    cdef Py_ssize_t n = len(mono)
    cdef Py_ssize_t i
    cdef tuple mb, m
    cdef list m_l
    for mb, cb in b.items():
        m_l = [0] * n
        for i in range(n):
            m_l[i] = mb[i] + mono[i]
        m = tuple(m_l)
        c0 = r.get(m)
        if c0 is None:
            r[m] = cb * c
            created.append(m)
        else:
            c0 = c0 + cb * c
            if c0:
                r[m] = c0
            else:
                del r[m]
    return created
