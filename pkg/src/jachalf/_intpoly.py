"""Dense polynomials over Z/p with plain integer coefficients.

Coefficient sequences are tuples, low-to-high, with no trailing zeros
(the zero polynomial is the empty tuple).  Used for modulus validation
and for exponentiation in quotient rings F_p[x]/(m(x)).
"""

from __future__ import annotations


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(a, b, p):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return trim((x + y) % p for x, y in zip(a, b))


def sub(a, b, p):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return trim((x - y) % p for x, y in zip(a, b))


def mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(v % p for v in out)


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    lcinv = pow(b[-1], p - 2, p)
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = (r[i + len(b) - 1] * lcinv) % p
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                r[i + j] = (r[i + j] - c * bc) % p
    return trim(q), trim(r[: len(b) - 1])


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    """Monic gcd."""
    while b:
        a, b = b, mod(a, b, p)
    if a:
        lcinv = pow(a[-1], p - 2, p)
        a = tuple((c * lcinv) % p for c in a)
    return a


def powmod(x, e, m, p):
    """x^e mod m over Z/p, by square and multiply."""
    result = (1,)
    x = mod(x, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, x, p), m, p)
        x = mod(mul(x, x, p), m, p)
        e >>= 1
    return result
