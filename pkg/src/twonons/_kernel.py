"""Pure-Python hot kernels: exact rational vectors and the doubling product.

An element of the level-n structure is a flat tuple of 2*2^n Python ints,
(n0, d0, n1, d1, ...), each (num, den) pair in lowest terms with den > 0.
Everything here is allocation-heavy by design: tuples in, tuples out, no
mutation.  The compiled backend (`_speed`) mirrors this module exactly.
"""

from math import gcd

BACKEND_NAME = "pure"


def rnorm(n, d):
    """Reduce n/d to lowest terms with positive denominator."""
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


def radd(an, ad, bn, bd):
    return rnorm(an * bd + bn * ad, ad * bd)


def rsub(an, ad, bn, bd):
    return rnorm(an * bd - bn * ad, ad * bd)


def rmul(an, ad, bn, bd):
    return rnorm(an * bn, ad * bd)


def v_zero(dim):
    return (0, 1) * dim


def v_is_zero(x):
    for i in range(0, len(x), 2):
        if x[i] != 0:
            return False
    return True


def v_add(x, y):
    out = []
    for i in range(0, len(x), 2):
        out.extend(radd(x[i], x[i + 1], y[i], y[i + 1]))
    return tuple(out)


def v_sub(x, y):
    out = []
    for i in range(0, len(x), 2):
        out.extend(rsub(x[i], x[i + 1], y[i], y[i + 1]))
    return tuple(out)


def v_neg(x):
    out = list(x)
    for i in range(0, len(out), 2):
        out[i] = -out[i]
    return tuple(out)


def v_conj(x):
    # level 0: identity; level n: (a, b) -> (conj(a), -b)
    if len(x) == 2:
        return x
    h = len(x) // 2
    return v_conj(x[:h]) + v_neg(x[h:])


def v_scale(x, sn, sd):
    out = []
    for i in range(0, len(x), 2):
        out.extend(rmul(x[i], x[i + 1], sn, sd))
    return tuple(out)


def v_norm_sq(x):
    n, d = 0, 1
    for i in range(0, len(x), 2):
        n, d = radd(n, d, x[i] * x[i], x[i + 1] * x[i + 1])
    return n, d


def v_inv(x):
    # x^{-1} = conj(x) / ||x||^2
    n, d = v_norm_sq(x)
    if n == 0:
        raise ZeroDivisionError("inverse of zero element")
    return v_scale(v_conj(x), d, n)


def cd_mul(x, y):
    """General doubling product, recursing to rational multiplication.

    (a,b)(c,d) = (ac - conj(b*conj(d)),
                  conj(conj(b)*conj(c))
                  + conj(conj(b)*conj(conj(a)*conj(conj(inv(b))*conj(d)))))
    with the b = 0 branch (a,0)(c,d) = (ac, conj(a)*d).
    """
    if len(x) == 2:
        return rmul(x[0], x[1], y[0], y[1])
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    if v_is_zero(b):
        return cd_mul(a, c) + cd_mul(v_conj(a), d)
    first = v_sub(cd_mul(a, c), v_conj(cd_mul(b, v_conj(d))))
    bc = v_conj(b)
    ib_c = v_conj(v_inv(b))
    t = v_conj(cd_mul(ib_c, v_conj(d)))
    t = v_conj(cd_mul(v_conj(a), t))
    t = v_conj(cd_mul(bc, t))
    second = v_add(v_conj(cd_mul(bc, v_conj(c))), t)
    return first + second


def mul16_simplified(x, y):
    """Level-4 shortcut: (a,b)(c,d) = (ac - d*conj(b), cb + (conj(a)*inv(b))*(bd)).

    Halves are level-3 elements multiplied with cd_mul.  The b = 0 branch is
    shared with the general rule.
    """
    if len(x) != 32 or len(y) != 32:
        raise ValueError("mul16_simplified expects level-4 elements")
    a, b = x[:16], x[16:]
    c, d = y[:16], y[16:]
    if v_is_zero(b):
        return cd_mul(a, c) + cd_mul(v_conj(a), d)
    first = v_sub(cd_mul(a, c), cd_mul(d, v_conj(b)))
    second = v_add(cd_mul(c, b), cd_mul(cd_mul(v_conj(a), v_inv(b)), cd_mul(b, d)))
    return first + second
