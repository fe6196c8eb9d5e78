"""Two-phase factorization sieve over E_c.

Elements are processed in index order.  Head indices, up to the
parameter threshold, are factored by trial division against a fixed
prime table.  Past the threshold each element is divided by exactly
those registered primes whose index progressions predict a hit at the
current index; the remaining cofactor is then 1 or a single new prime
to the first power, which gets registered in turn.  Every odd prime
ever seen keeps its one or two progressions live for the rest of the
run, so the table only grows and each step scans it once for hits.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import EcParams, element_at, is_prime, isqrt_floor
from .uz import special_pair_one, special_pair_two

_GROW = 1024


class SieveError(RuntimeError):
    """A factorization step contradicted the single-new-prime guarantee."""


@dataclass
class RegisteredPrime:
    """Live progression data for one discovered odd prime.

    residues lists the one or two index classes mod p whose elements p
    divides; next_hits gives, per residue, the next index at which the
    sieve will divide by p.
    """

    p: int
    residues: tuple[int, ...]
    next_hits: list[int]


@dataclass(frozen=True)
class FactorizationRecord:
    """Complete factorization of one element, factors ascending."""

    j: int
    x: int
    n: int
    factors: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Checkpoint:
    j: int
    p_count: int
    d_count: int
    elapsed_seconds: float


@dataclass
class SieveOutput:
    """Prime element values, prime divisors up to the run bound, the
    requested checkpoint rows and, when collected, every factorization."""

    p_set: list[int]
    d_set: list[int]
    checkpoints: list[Checkpoint]
    records: list[FactorizationRecord] | None


def atkin_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending, by the quadratic-form sieve."""
    if limit < 2:
        return []
    if limit < 5:
        return [2] if limit < 3 else [2, 3]
    counts = np.zeros(limit + 1, dtype=np.uint8)
    top = isqrt_floor(limit)
    for x in range(1, top + 1):
        x2 = x * x
        if 4 * x2 <= limit:
            y = np.arange(1, isqrt_floor(limit - 4 * x2) + 1)
            n = 4 * x2 + y * y
            np.add.at(counts, n[(n % 12 == 1) | (n % 12 == 5)], 1)
        if 3 * x2 <= limit:
            y = np.arange(1, isqrt_floor(limit - 3 * x2) + 1)
            n = 3 * x2 + y * y
            np.add.at(counts, n[n % 12 == 7], 1)
        if x >= 2:
            s = 3 * x2 - limit
            ylo = 1 if s <= 0 else isqrt_floor(s - 1) + 1
            if ylo <= x - 1:
                y = np.arange(ylo, x)
                n = 3 * x2 - y * y
                np.add.at(counts, n[n % 12 == 11], 1)
    flags = (counts & 1).astype(bool)
    flags[:5] = False
    for n in range(5, top + 1):
        if flags[n]:
            flags[n * n :: n * n] = False
    return [2, 3] + np.flatnonzero(flags).tolist()


class SieveState:
    """Mutable progression table for one run.

    Next-hit indices live in a flat int64 array so one vectorized
    comparison per element finds all due progressions; the parallel
    owner list maps array slots back to their registered primes.
    """

    def __init__(self, params: EcParams, j_max: int):
        self.params = params
        self.j_max = j_max
        self.registered: dict[int, RegisteredPrime] = {}
        self._next = np.empty(_GROW, dtype=np.int64)
        self._owner: list[tuple[RegisteredPrime, int]] = []

    def register_prime(self, p: int, j_found: int) -> RegisteredPrime:
        """Open the index progressions of a newly seen odd prime.

        The discovery index and its dual give the residues; scheduling
        starts strictly past both the discovery index and the trial
        division range, so nothing already factored is revisited.
        """
        if p in self.registered:
            raise ValueError(f"prime {p} is already registered")
        r1 = j_found % p
        r2 = (p - self.params.r - j_found) % p
        residues = (r1,) if r1 == r2 else tuple(sorted((r1, r2)))
        start = max(j_found, self.params.j_threshold) + 1
        next_hits = [start + (rho - start) % p for rho in residues]
        rec = RegisteredPrime(p=p, residues=residues, next_hits=next_hits)
        self.registered[p] = rec
        for slot, nh in enumerate(next_hits):
            i = len(self._owner)
            if i == len(self._next):
                grown = np.empty(2 * len(self._next), dtype=np.int64)
                grown[:i] = self._next
                self._next = grown
            self._next[i] = nh
            self._owner.append((rec, slot))
        return rec

    def _due_slots(self, j: int) -> np.ndarray:
        return np.flatnonzero(self._next[: len(self._owner)] == j)


def _crosscheck_pairs(params: EcParams) -> None:
    """Check the distinguished sequence pairs' product identity on a
    window of terms before trusting a verified run."""
    pairs = [special_pair_one(params)]
    two = special_pair_two(params)
    if two is not None:
        pairs.append(two)
    for pair in pairs:
        u_prev, z_prev = pair.terms(-5)
        for n in range(-4, 6):
            u, z = pair.terms(n)
            if u_prev * u_prev + params.c != z_prev * z:
                raise SieveError(
                    f"sequence pair identity fails at term {n - 1} for c = {params.c}"
                )
            u_prev, z_prev = u, z


def run_sieve(
    params: EcParams,
    j_max: int,
    checkpoint_js: list[int] | None = None,
    *,
    collect_records: bool = False,
    verify: bool = False,
) -> SieveOutput:
    """Factor every element with index <= j_max and accumulate P and D.

    checkpoint_js lists indices after which a (j, |P|, |D|, elapsed)
    row is taken; it defaults to [j_max].  |D| at a checkpoint counts
    the prime divisors seen so far that are <= that checkpoint's index.
    With verify on, the distinguished sequence pairs are cross-checked
    up front and every progression-phase cofactor is confirmed prime
    with a deterministic test; violations raise SieveError.
    """
    if j_max < 0:
        raise ValueError(f"j_max must be >= 0, got {j_max}")
    element_at(params, j_max)
    if checkpoint_js is None:
        checkpoint_js = [j_max]
    marks = sorted({int(j) for j in checkpoint_js})
    if marks and (marks[0] < 0 or marks[-1] > j_max):
        raise ValueError(f"checkpoints must lie in [0, {j_max}]")
    if verify:
        _crosscheck_pairs(params)

    c, r = params.c, params.r
    head_end = min(params.j_threshold, j_max)
    trial = [
        p
        for p in atkin_primes(isqrt_floor(element_at(params, head_end).n))
        if p != 2
    ]

    state = SieveState(params, j_max)
    p_set: list[int] = []
    d_seen: set[int] = set()
    records: list[FactorizationRecord] | None = [] if collect_records else None
    checkpoints: list[Checkpoint] = []
    mark_pos = 0
    t0 = time.perf_counter()

    for j in range(j_max + 1):
        x = 2 * j + r
        n = x * x + c
        factors: list[tuple[int, int]] = []
        rem = n
        if j <= head_end:
            for p in trial:
                if p * p > rem:
                    break
                if rem % p == 0:
                    e = 0
                    while rem % p == 0:
                        rem //= p
                        e += 1
                    factors.append((p, e))
                    if p not in state.registered:
                        state.register_prime(p, j)
            if rem > 1:
                factors.append((rem, 1))
                if rem not in state.registered:
                    state.register_prime(rem, j)
        else:
            for i in state._due_slots(j):
                rec, slot = state._owner[i]
                p = rec.p
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                if e == 0:
                    raise SieveError(
                        f"index {j}: progression for {p} predicted a hit "
                        f"but {p} does not divide {n}"
                    )
                factors.append((p, e))
                state._next[i] += p
                rec.next_hits[slot] = int(state._next[i])
            if rem > 1:
                if verify and not is_prime(rem):
                    raise SieveError(
                        f"index {j}: cofactor {rem} left after all predicted "
                        f"divisors of {n} is neither 1 nor prime"
                    )
                factors.append((rem, 1))
                state.register_prime(rem, j)
            factors.sort()
        if factors and factors[0][0] == n:
            p_set.append(n)
        for p, _ in factors:
            if p <= j_max:
                d_seen.add(p)
        if records is not None:
            records.append(FactorizationRecord(j=j, x=x, n=n, factors=tuple(factors)))
        while mark_pos < len(marks) and marks[mark_pos] == j:
            checkpoints.append(
                Checkpoint(
                    j=j,
                    p_count=len(p_set),
                    d_count=sum(1 for q in d_seen if q <= j),
                    elapsed_seconds=time.perf_counter() - t0,
                )
            )
            mark_pos += 1

    return SieveOutput(
        p_set=p_set,
        d_set=sorted(d_seen),
        checkpoints=checkpoints,
        records=records,
    )
