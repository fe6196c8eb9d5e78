"""Index progressions of the divisors of a family E_c.

When an odd integer A divides some element of E_c it divides infinitely
many, and the indices at which it does form one or two arithmetic
progressions with a common difference dividing A.  For A coprime to c
the difference is A itself and the two residues pair up around the first
occurrence; the progressions merge into a single self-dual one exactly
when A divides c.  For prime powers p**a with p | c the difference can
drop below p**a, and divisibility can be decided on the reduced family
E_{c / p**nu}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import INT63_MAX, EcParams, is_prime, isqrt_floor, make_params

_SCAN_CHUNK = 4096


@dataclass(frozen=True)
class FirstHit:
    """First element of E_c divisible by modulus_a.

    x0 is the smallest abscissa of the family parity with
    modulus_a | x0**2 + c, j0 its index and cofactor_b the quotient
    (x0**2 + c) // modulus_a.
    """

    modulus_a: int
    x0: int
    j0: int
    cofactor_b: int


@dataclass(frozen=True)
class DualProgression:
    """Index progressions of the multiples of one odd prime power.

    The modulus divides the element at index j exactly when
    j % difference is in residues.  residues holds one entry when the
    two progressions coincide (self_dual) and two otherwise; distinct
    residues sum to difference - r modulo difference.
    """

    difference: int
    residues: tuple[int, ...]
    self_dual: bool


@dataclass(frozen=True)
class PowerPlan:
    """Valuation bookkeeping for the multiples of p**power_exp.

    val_x0 is the p-adic valuation of the first abscissa (math.inf when
    the abscissa is 0), val_c the valuation of c, and
    split = min(val_x0, power_exp // 2) the exponent by which the
    common difference of the index progressions drops below p**power_exp.
    """

    p: int
    power_exp: int
    val_x0: int | float
    split: int
    val_c: int


@dataclass(frozen=True)
class LiftSolutions:
    """Residues k (mod p) placing a factor p**(power_exp + 1).

    Each branch follows one of the two index progressions of
    p**power_exp: k_base counts steps along the progression through the
    first occurrence, k_offset along the progression through its dual.
    A branch is None when its linear congruence has no solution.
    """

    k_offset: int | None
    k_base: int | None


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def first_occurrence(params: EcParams, a: int) -> FirstHit | None:
    """Smallest element of E_c divisible by the odd modulus a, if any.

    Scans the abscissae of the family parity over [0, a]; the window is
    exhaustive, so None means a divides no element at all.
    """
    if a < 1 or a % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 1, got {a}")
    if a > INT63_MAX:
        raise OverflowError(f"modulus {a} exceeds the 63-bit range")
    c, r = params.c, params.r
    x_cap = isqrt_floor(INT63_MAX - c)
    hi = min(a, x_cap)
    found = None
    if (hi - r) // 2 < _SCAN_CHUNK:
        x = r
        while x <= hi:
            if (x * x + c) % a == 0:
                found = x
                break
            x += 2
    else:
        x = r
        while x <= hi:
            xs = np.arange(x, min(x + 2 * _SCAN_CHUNK, hi + 1), 2, dtype=np.int64)
            idx = np.flatnonzero((xs * xs + c) % a == 0)
            if idx.size:
                found = int(xs[idx[0]])
                break
            x = int(xs[-1]) + 2
    if found is None:
        if a > x_cap:
            raise OverflowError(f"scan for modulus {a} leaves the 63-bit range")
        return None
    return FirstHit(modulus_a=a, x0=found, j0=(found - r) // 2,
                    cofactor_b=(found * found + c) // a)


def sequence_exists(params: EcParams, a_divisor: int, hit: FirstHit) -> bool:
    """Whether the divisor pair (a_divisor, modulus_a/a_divisor) supports
    an index progression: gcd of the pair must divide the first abscissa."""
    if a_divisor < 1 or hit.modulus_a % a_divisor != 0:
        raise ValueError(f"{a_divisor} does not divide modulus {hit.modulus_a}")
    g = math.gcd(a_divisor, hit.modulus_a // a_divisor)
    return hit.x0 % g == 0


def _dual_from_hit(params: EcParams, modulus: int, hit: FirstHit) -> DualProgression:
    r1 = hit.j0 % modulus
    r2 = (modulus - params.r - hit.j0) % modulus
    if r1 == r2:
        return DualProgression(modulus, (r1,), True)
    return DualProgression(modulus, tuple(sorted((r1, r2))), False)


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def dual_for_prime(params: EcParams, p: int) -> DualProgression | None:
    """Index progressions of the multiples of an odd prime p, or None
    when p divides no element.  Self-dual exactly when p | c."""
    _check_odd_prime(p)
    hit = first_occurrence(params, p)
    if hit is None:
        return None
    return _dual_from_hit(params, p, hit)


def dual_for_prime_power(params: EcParams, p: int, power_exp: int) -> DualProgression | None:
    """Index progressions of the multiples of p**power_exp, or None.

    Writing nu for the valuation of c at p: for nu == 0 the difference
    is p**power_exp with two residues around the first occurrence; for
    power_exp <= nu a single self-dual progression with difference
    p**ceil(power_exp/2); for power_exp > nu the power divides elements
    only when nu is even and p divides some element of the reduced
    family E_{c // p**nu}, with difference p**(nu/2 + power_exp - nu).
    """
    _check_odd_prime(p)
    if power_exp < 1:
        raise ValueError(f"exponent must be >= 1, got {power_exp}")
    c, r = params.c, params.r
    nu = _valuation(c, p)
    if nu == 0:
        hit = first_occurrence(params, p**power_exp)
        if hit is None:
            return None
        return _dual_from_hit(params, p**power_exp, hit)
    if power_exp <= nu:
        half = p ** ((power_exp + 1) // 2)
        x0 = 0 if r == 0 else half
        return DualProgression(half, ((x0 - r) // 2 % half,), True)
    if nu % 2:
        return None
    reduced = make_params(c // p**nu)
    sub = first_occurrence(reduced, p ** (power_exp - nu))
    if sub is None:
        return None
    diff = p ** (nu // 2 + power_exp - nu)
    ax = p ** (nu // 2) * sub.x0 % diff
    inv2 = (diff + 1) // 2
    r1 = (ax - r) * inv2 % diff
    r2 = (-ax - r) * inv2 % diff
    if r1 == r2:
        return DualProgression(diff, (r1,), True)
    return DualProgression(diff, tuple(sorted((r1, r2))), False)


def power_plan(params: EcParams, p: int, power_exp: int) -> PowerPlan | None:
    """Valuation summary for p**power_exp, or None when it divides no
    element of E_c."""
    _check_odd_prime(p)
    if power_exp < 1:
        raise ValueError(f"exponent must be >= 1, got {power_exp}")
    hit = first_occurrence(params, p**power_exp)
    if hit is None:
        return None
    val_x0 = math.inf if hit.x0 == 0 else _valuation(hit.x0, p)
    return PowerPlan(p=p, power_exp=power_exp, val_x0=val_x0,
                     split=int(min(val_x0, power_exp // 2)),
                     val_c=_valuation(params.c, p))


def _solve_linear(const: int, slope: int, p: int) -> int | None:
    # slope * k + const == 0 (mod p)
    if slope == 0:
        return 0 if const == 0 else None
    return (-const) * pow(slope, -1, p) % p


def lift_solutions(params: EcParams, p: int, power_exp: int,
                   hit: FirstHit) -> LiftSolutions:
    """Where the next power p**(power_exp + 1) lands on each progression.

    hit must be the first occurrence of p**power_exp, and p**power_exp
    must not divide c.  On each of the two index progressions of
    p**power_exp the elements divisible by the next power sit at step
    counts k solving a linear congruence mod p; the returned residues
    identify them (None for an unsolvable branch).
    """
    _check_odd_prime(p)
    if power_exp < 1:
        raise ValueError(f"exponent must be >= 1, got {power_exp}")
    a = p**power_exp
    if hit.modulus_a != a:
        raise ValueError(f"hit describes modulus {hit.modulus_a}, expected {a}")
    if params.c % a == 0:
        raise ValueError(f"{p}**{power_exp} divides c = {params.c}; "
                         "the two branches degenerate")
    x0, b = hit.x0, hit.cofactor_b
    gamma = _valuation(x0, p)
    pg = p**gamma
    pad = a // pg
    shift = (-x0) % pad
    u = shift // pg
    k_offset = _solve_linear((b + 4 * u * ((x0 + shift) // pad)) % p, 4 * u % p, p)
    k_base = _solve_linear(b % p, 4 * (x0 // pg) % p, p)
    return LiftSolutions(k_offset=k_offset, k_base=k_base)
