"""Second-order sequence pairs certifying factorizations inside E_c.

A pair of sequences U_n = acc*n*(n-1) + step0*n + u0 and
Z_n = acc*n*(n-1) + (step0 - acc)*n + z0 with z0 = acc - step0/2 + u0
satisfies U_n**2 + c = Z_n * Z_{n+1} for every integer n exactly when
the coefficients close on c, meaning c = acc*u0 + acc*step0/2 -
step0**2/4.  Every factorization X**2 + c = A*B of an element produces
such a pair, and the terms of a pair factor one element of E_c per n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import INT63_MAX, EcParams
from .progressions import FirstHit


@dataclass(frozen=True)
class UZPair:
    """Coefficients of one (U, Z) pair over the family constant c.

    acc is the shared second-order coefficient, step0 the linear
    coefficient of U (always even), u0 the value U_0.  The Z side is
    derived: z_step = step0 - acc and z0 = acc - step0/2 + u0.
    Construction fails unless the coefficients close on c.
    """

    acc: int
    step0: int
    u0: int
    c: int
    z_step: int = field(init=False)
    z0: int = field(init=False)

    def __post_init__(self) -> None:
        if self.step0 % 2:
            raise ValueError(f"step0 must be even, got {self.step0}")
        if (self.u0 - self.c) % 2 == 0:
            raise ValueError(f"u0 = {self.u0} must have parity opposite to c = {self.c}")
        half = self.step0 // 2
        if self.acc * (self.u0 + half) - half * half != self.c:
            raise ValueError("coefficients do not close on c; the product "
                             "identity U_n**2 + c = Z_n * Z_{n+1} would fail")
        object.__setattr__(self, "z_step", self.step0 - self.acc)
        object.__setattr__(self, "z0", self.acc - half + self.u0)

    def terms(self, n: int) -> tuple[int, int]:
        """(U_n, Z_n) at any integer n; OverflowError past the 63-bit cap."""
        w = n * (n - 1)
        u = self.acc * w + self.step0 * n + self.u0
        z = self.acc * w + self.z_step * n + self.z0
        if max(abs(u), abs(z)) > INT63_MAX:
            raise OverflowError(f"pair terms at n = {n} exceed the 63-bit range")
        return u, z


def pair_from_factorization(params: EcParams, x: int, a: int) -> UZPair:
    """Pair whose n = 0 terms realize x**2 + c = a * b: U_0 = x, Z_0 = a,
    Z_1 = b."""
    if x < 0 or x % 2 != params.r:
        raise ValueError(f"abscissa {x} does not belong to E_{params.c}")
    n = x * x + params.c
    if a < 1 or n % a != 0:
        raise ValueError(f"{a} does not divide {n}")
    b = n // a
    return UZPair(acc=a + b - 2 * x, step0=2 * (b - x), u0=x, c=params.c)


def family_coeffs(params: EcParams, hit: FirstHit, base_j: int, k: int) -> UZPair:
    """Pair attached to step k along the index progression of
    hit.modulus_a through base_j.

    base_j is reduced modulo the modulus; it must lie on one of the
    divisor progressions, i.e. the modulus must divide the element at
    the reduced index.  Every returned pair keeps z0 equal to the
    modulus, so the Z side tracks its cofactors along the progression.
    """
    a = hit.modulus_a
    jb = base_j % a
    x0 = 2 * jb + params.r
    n0 = x0 * x0 + params.c
    if n0 % a != 0:
        raise ValueError(f"index {base_j} is not on a divisor progression of {a}")
    b = n0 // a
    acc = 4 * a * k * (k - 1) + 4 * x0 * k + (a + b - 2 * x0)
    step0 = 8 * a * k * (k - 1) + (8 * x0 + 4 * a) * k + 2 * (b - x0)
    return UZPair(acc=acc, step0=step0, u0=x0 + 2 * k * a, c=params.c)


def special_pair_one(params: EcParams) -> UZPair:
    """Distinguished pair read off the two-adic split c + 1 - r =
    2**t * (2y + 1); its z0 is the odd part 2y + 1."""
    c, r, t, y = params.c, params.r, params.t, params.y
    acc = 2 * (2 * r * (2 * y + 1) + 2 ** (t - 1))
    step0 = 2 * (2**t - 1 + r * (1 + 2 * (2 * y + 1)))
    u0 = 2 * y if r == 0 else -(2 * y + 1)
    return UZPair(acc=acc, step0=step0, u0=u0, c=c)


def special_pair_two(params: EcParams) -> UZPair | None:
    """Second distinguished pair, defined only when t >= 4 - r."""
    if params.t < 4 - params.r:
        return None
    c = params.c
    if params.r == 0:
        return UZPair(acc=(c + 1) // 2, step0=(3 * c - 1) // 2,
                      u0=3 * (c + 1) // 8, c=c)
    return UZPair(acc=4, step0=4, u0=c // 4 - 1, c=c)


def z_values_distinct(pair: UZPair) -> bool:
    """Whether n -> Z_n is injective over the integers: true exactly when
    acc does not divide step0."""
    if pair.acc == 0:
        raise ValueError("degenerate pair with acc == 0")
    return pair.step0 % pair.acc != 0


def appendix_pair(params: EcParams, j: int, k: int, variant: str = "a") -> UZPair:
    """Pair tied to N = (2j + r)**2 + c whose z0 equals N itself.

    variant "a" walks the index progression N - j - r + k*N, variant
    "b" the dual progression j + (k + 1)*N; both keep every Z term a
    cofactor of N against later elements.
    """
    if j < 0 or k < 0:
        raise ValueError(f"j and k must be >= 0, got j = {j}, k = {k}")
    v = variant.lower()
    if v not in ("a", "b"):
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    c, r = params.c, params.r
    n_val = (2 * j + r) ** 2 + c
    vk = 4 * k * (k - 1) + 12 * k + 2
    e = c + (1 - r)
    a1 = 4 * c * k * (k + 1) + e
    b1 = 4 * c * k * (k + 1) + c * vk + 2 * e
    a2 = (4 * j * (j - (1 - r)) + 24 * j * k + 32 * k * j * (j - 1)
          + 16 * j * (j - r) * k * (k - 1) + 4 * k * r * (8 * j + 8 * j * (k - 1) + k))
    b2 = (4 * j + 16 * j * (j - (1 - r)) + 64 * j * k + 80 * k * j * (j - 1)
          + 32 * j * (j - r) * k * (k - 1)
          + 4 * k * r * (20 * j + 16 * j * (k - 1) + 2 * k + 1))
    if v == "a":
        acc = a1 + a2
        step0 = b1 + b2
        u0 = 2 * ((n_val - j - r) + k * n_val) + r
    else:
        acc = a1 + 4 * r + a2 + 8 * (j + 2 * j * k) + 8 * k * r
        step0 = b1 + 12 * r + b2 + 8 * (3 * j + 4 * j * k) + 16 * k * r
        u0 = 2 * (j + (k + 1) * n_val) + r
    return UZPair(acc=acc, step0=step0, u0=u0, c=c)
