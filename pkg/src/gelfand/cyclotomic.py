"""Exact arithmetic with sums of roots of unity, plus the small number
theory needed by the modular character-table algorithm.

A value is represented sparsely as ``{k: c}`` meaning sum of c * zeta_e^k
with integer coefficients.  Canonicalization reduces the exponent set by
their gcd and then takes the remainder modulo the cyclotomic polynomial,
which decides exactly whether a value is a rational integer.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache


# -- primes and primitive roots --------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def modular_prime(exponent: int, order: int) -> int:
    """Smallest prime p with p = 1 (mod exponent) and p > 2*sqrt(order)."""
    bound = 2 * math.isqrt(order)
    p = exponent + 1
    while p <= bound or not is_prime(p):
        p += exponent
    return p


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    facs = prime_factors(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in facs):
            return g
        g += 1


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo the (small) prime p, by direct scan."""
    a %= p
    for r in range((p + 1) // 2 + 1):
        if r * r % p == a:
            return r
    raise ValueError(f"{a} is not a square mod {p}")


# -- integer polynomials (coefficient lists, low degree first) --------------


def _poly_trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic up to sign)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        q, r = divmod(num[i], lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i - dd] = q
        for j in range(dd + 1):
            num[i - dd + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return _poly_trim(out)


def _poly_mod(num: list[int], den: list[int]) -> list[int]:
    """Remainder of integer polynomials; den must be monic."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        q = num[i]
        if q:
            for j in range(dd + 1):
                num[i - dd + j] -= q * den[j]
    return _poly_trim(num[:dd] or [0])


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


# -- root-of-unity sums ------------------------------------------------------


def root_sum_eval(coeffs: dict[int, int], e: int) -> complex:
    return sum(c * cmath.exp(2j * cmath.pi * k / e) for k, c in coeffs.items())


def root_sum_canonical(coeffs: dict[int, int], e: int) -> tuple[int, tuple[int, ...]]:
    """Canonical form (e', poly) of sum c_k zeta_e^k.

    The exponents are compressed by their gcd with e, then reduced modulo
    the cyclotomic polynomial of the compressed order e'.  Two sums are
    equal iff their canonical forms are equal.
    """
    merged: dict[int, int] = {}
    for k, c in coeffs.items():
        if c:
            k %= e
            merged[k] = merged.get(k, 0) + c
    merged = {k: c for k, c in merged.items() if c}
    if not merged:
        return 1, (0,)
    g = e
    for k in merged:
        g = math.gcd(g, k)
    e2 = e // g
    poly = [0] * e2
    for k, c in merged.items():
        poly[k // g] += c
    rem = _poly_mod(poly, list(cyclotomic_poly(e2)))
    return e2, tuple(rem)


def root_sum_as_int(coeffs: dict[int, int], e: int) -> int | None:
    """The exact integer value of the sum, or None if it is irrational."""
    _, rem = root_sum_canonical(coeffs, e)
    if len(rem) == 1:
        return rem[0]
    return None
