# cython: language_level=3
"""Compiled twin of `_kernel`: same flat (num, den) tuple representation.

Coordinates are arbitrary-precision Python ints, so the win here is loop and
call overhead, not C arithmetic.  Keep this file line-for-line comparable
with `_kernel.py`; the test suite cross-checks the two backends on random
inputs.
"""

from math import gcd

BACKEND_NAME = "speed"


cpdef tuple rnorm(n, d):
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


cpdef tuple radd(an, ad, bn, bd):
    return rnorm(an * bd + bn * ad, ad * bd)


cpdef tuple rsub(an, ad, bn, bd):
    return rnorm(an * bd - bn * ad, ad * bd)


cpdef tuple rmul(an, ad, bn, bd):
    return rnorm(an * bn, ad * bd)


cpdef tuple v_zero(Py_ssize_t dim):
    return (0, 1) * dim


cpdef bint v_is_zero(tuple x):
    cdef Py_ssize_t i
    for i in range(0, len(x), 2):
        if x[i] != 0:
            return False
    return True


cpdef tuple v_add(tuple x, tuple y):
    cdef Py_ssize_t i
    cdef list out = []
    for i in range(0, len(x), 2):
        out.extend(radd(x[i], x[i + 1], y[i], y[i + 1]))
    return tuple(out)


cpdef tuple v_sub(tuple x, tuple y):
    cdef Py_ssize_t i
    cdef list out = []
    for i in range(0, len(x), 2):
        out.extend(rsub(x[i], x[i + 1], y[i], y[i + 1]))
    return tuple(out)


cpdef tuple v_neg(tuple x):
    cdef Py_ssize_t i
    cdef list out = list(x)
    for i in range(0, len(out), 2):
        out[i] = -out[i]
    return tuple(out)


cpdef tuple v_conj(tuple x):
    if len(x) == 2:
        return x
    cdef Py_ssize_t h = len(x) // 2
    return v_conj(x[:h]) + v_neg(x[h:])


cpdef tuple v_scale(tuple x, sn, sd):
    cdef Py_ssize_t i
    cdef list out = []
    for i in range(0, len(x), 2):
        out.extend(rmul(x[i], x[i + 1], sn, sd))
    return tuple(out)


cpdef tuple v_norm_sq(tuple x):
    cdef Py_ssize_t i
    n, d = 0, 1
    for i in range(0, len(x), 2):
        n, d = radd(n, d, x[i] * x[i], x[i + 1] * x[i + 1])
    return n, d


cpdef tuple v_inv(tuple x):
    n, d = v_norm_sq(x)
    if n == 0:
        raise ZeroDivisionError("inverse of zero element")
    return v_scale(v_conj(x), d, n)


cpdef tuple cd_mul(tuple x, tuple y):
    if len(x) == 2:
        return rmul(x[0], x[1], y[0], y[1])
    cdef Py_ssize_t h = len(x) // 2
    cdef tuple a = x[:h]
    cdef tuple b = x[h:]
    cdef tuple c = y[:h]
    cdef tuple d = y[h:]
    if v_is_zero(b):
        return cd_mul(a, c) + cd_mul(v_conj(a), d)
    cdef tuple first = v_sub(cd_mul(a, c), v_conj(cd_mul(b, v_conj(d))))
    cdef tuple bc = v_conj(b)
    cdef tuple ib_c = v_conj(v_inv(b))
    cdef tuple t = v_conj(cd_mul(ib_c, v_conj(d)))
    t = v_conj(cd_mul(v_conj(a), t))
    t = v_conj(cd_mul(bc, t))
    cdef tuple second = v_add(v_conj(cd_mul(bc, v_conj(c))), t)
    return first + second


cpdef tuple mul16_simplified(tuple x, tuple y):
    if len(x) != 32 or len(y) != 32:
        raise ValueError("mul16_simplified expects level-4 elements")
    cdef tuple a = x[:16]
    cdef tuple b = x[16:]
    cdef tuple c = y[:16]
    cdef tuple d = y[16:]
    if v_is_zero(b):
        return cd_mul(a, c) + cd_mul(v_conj(a), d)
    cdef tuple first = v_sub(cd_mul(a, c), cd_mul(d, v_conj(b)))
    cdef tuple second = v_add(cd_mul(c, b),
                              cd_mul(cd_mul(v_conj(a), v_inv(b)), cd_mul(b, d)))
    return first + second
