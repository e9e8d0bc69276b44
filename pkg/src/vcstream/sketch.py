"""Linear sketches over sparse integer vectors indexed by [1, N].

Three layers:

* ``OneSparseDetector`` -- (count, index-weighted sum, fingerprint) triple
  that recognises vectors with exactly one nonzero entry.
* ``L0Sampler`` -- level-sampling over one-sparse detectors; returns a
  uniform support element or Fail.
* ``SampleRecovery`` -- a bank of independent samplers plus a peelable
  bucket grid giving exact under-capacity support recovery.  The hot
  structure; its internals are flat numpy arrays so that one update is a
  handful of vectorised operations.

All structures are linear: the state after a sequence of updates depends
only on the net vector, never on update order.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np
from sympy import nextprime

# 31-bit Mersenne prime used by the level / bucket hashes.
HASH_P = (1 << 31) - 1


class RecoveryFail(Exception):
    """Peeling stalled before the grid emptied."""


def derive_seed(*parts) -> int:
    """Deterministic 63-bit seed from an arbitrary tuple of parts."""
    h = hashlib.blake2b(repr(parts).encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big") >> 1


_prime_cache: dict[int, int] = {}


def fingerprint_prime(lower: int) -> int:
    """Smallest prime strictly above ``lower`` (cached)."""
    if lower not in _prime_cache:
        _prime_cache[lower] = int(nextprime(lower))
    return _prime_cache[lower]


# ---------------------------------------------------------------------------
# Scalar detector and sampler


class OneSparseDetector:
    """Linear detector for one-sparse vectors over [1, N].

    Keeps count_sum, index_sum and a polynomial fingerprint
    sum_i c_i * r^i mod p for a prime p > N^2; a false one-sparse verdict
    needs a fingerprint collision, probability <= N/p per query.
    """

    def __init__(self, n_indices: int, seed: int, prime: int | None = None):
        self.n = n_indices
        self.p = prime if prime is not None else fingerprint_prime(
            max(n_indices * n_indices, 1 << 61))
        rng = np.random.default_rng(seed)
        self.r = int(rng.integers(1, self.p))
        self.count_sum = 0
        self.index_sum = 0
        self.fingerprint = 0

    def update(self, index: int, delta: int) -> None:
        self.count_sum += delta
        self.index_sum += delta * index
        self.fingerprint = (self.fingerprint
                            + delta * pow(self.r, index, self.p)) % self.p

    def is_zero(self) -> bool:
        return (self.count_sum == 0 and self.index_sum == 0
                and self.fingerprint == 0)

    def decode(self) -> tuple[int, int] | None:
        """(index, weight) when the state looks one-sparse, else None."""
        c = self.count_sum
        if c == 0 or self.index_sum % c != 0:
            return None
        i = self.index_sum // c
        if not 1 <= i <= self.n:
            return None
        if self.fingerprint != c * pow(self.r, i, self.p) % self.p:
            return None
        return i, c


@dataclass(frozen=True)
class SampleOutcome:
    kind: str  # "index" | "fail" | "empty"
    index: int = 0

    @property
    def is_index(self) -> bool:
        return self.kind == "index"


INDEX = "index"
FAIL = "fail"
EMPTY = "empty"


def _reps_for(fail_rate: float) -> int:
    # per-repetition success is >= 1/4 at some level; see L0Sampler docs
    return max(4, math.ceil(math.log(fail_rate) / math.log(0.75)))


class L0Sampler:
    """Level-sampling l0-sampler.

    Each repetition hashes indices into geometric levels (level l keeps an
    index with probability ~2^-l) and keeps a one-sparse detector per
    level.  Some level leaves around one survivor, so a repetition
    succeeds with constant probability; ``reps`` independent repetitions
    push Fail below ``fail_rate``.
    """

    def __init__(self, n_indices: int, seed: int, fail_rate: float = 0.01):
        self.n = n_indices
        self.levels = max(1, math.ceil(math.log2(max(n_indices, 2)))) + 1
        self.reps = _reps_for(fail_rate)
        self.fail_rate = fail_rate
        rng = np.random.default_rng(seed)
        self.a = [int(rng.integers(1, HASH_P)) for _ in range(self.reps)]
        self.b = [int(rng.integers(0, HASH_P)) for _ in range(self.reps)]
        prime = fingerprint_prime(max(n_indices * n_indices, 1 << 61))
        self.detectors = [
            [OneSparseDetector(n_indices, derive_seed(seed, rep, lvl), prime)
             for lvl in range(self.levels)]
            for rep in range(self.reps)
        ]

    def _deepest_level(self, rep: int, index: int) -> int:
        h = (self.a[rep] * index + self.b[rep]) % HASH_P
        if h == 0:
            return self.levels - 1
        return min(self.levels - 1, (HASH_P // h).bit_length() - 1)

    def update(self, index: int, delta: int) -> None:
        for rep in range(self.reps):
            top = self._deepest_level(rep, index)
            for lvl in range(top + 1):
                self.detectors[rep][lvl].update(index, delta)

    def sample(self) -> SampleOutcome:
        if self.detectors[0][0].is_zero():
            return SampleOutcome(EMPTY)
        for rep in range(self.reps):
            for lvl in range(self.levels):
                got = self.detectors[rep][lvl].decode()
                if got is not None:
                    return SampleOutcome(INDEX, got[0])
        return SampleOutcome(FAIL)


# ---------------------------------------------------------------------------
# s-sparse recovery


class SampleRecovery:
    """Hybrid sampler bank + peelable recovery grid, one linear structure.

    * ``n_samplers`` independent sampler instances (distinct seeds) give
      per-query sampling without replacement across sampler indices.
    * an R x B grid of one-sparse buckets (B = 2 * capacity,
      R ~ log2(N / delta)) is peeled for exact recovery whenever the net
      support fits within ``capacity``.
    * ``support`` is an exact signed counter of net insertions; it equals
      the l0 norm under valid +/-1 streams.

    One-sparse verification uses two independent 31-bit-prime
    fingerprints so that every array stays within int64 arithmetic.
    """

    def __init__(self, n_indices: int, capacity: int, n_samplers: int,
                 seed: int, delta: float = 0.01,
                 sampler_fail: float | None = None,
                 track_contents: bool = False):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.n = n_indices
        self.capacity = capacity
        self.n_samplers = n_samplers
        self.seed = seed
        self.support = 0

        self.levels = max(1, math.ceil(math.log2(max(n_indices, 2)))) + 1
        self.reps = _reps_for(sampler_fail if sampler_fail is not None
                              else delta)
        self.rows = max(1, math.ceil(math.log2(max(n_indices, 2) / delta)))
        self.buckets = 2 * capacity

        self.p1 = fingerprint_prime(max(n_indices * n_indices, 1 << 30))
        self.p2 = fingerprint_prime(self.p1)
        rng = np.random.default_rng(derive_seed(seed, "hashes"))
        r1 = int(rng.integers(1, self.p1))
        r2 = int(rng.integers(1, self.p2))
        idx = np.arange(n_indices + 1, dtype=np.int64)
        self.rpow1 = self._pow_table(r1, self.p1, idx)
        self.rpow2 = self._pow_table(r2, self.p2, idx)

        # sampler bank hash coefficients, one pair per (sampler, rep)
        shape = (n_samplers, self.reps)
        self.bank_a = rng.integers(1, HASH_P, size=shape, dtype=np.int64)
        self.bank_b = rng.integers(0, HASH_P, size=shape, dtype=np.int64)
        zeros = np.zeros(shape + (self.levels,), dtype=np.int64)
        self.bank_count = zeros.copy()
        self.bank_index = zeros.copy()
        self.bank_fp1 = zeros.copy()
        self.bank_fp2 = zeros.copy()

        # recovery grid, one bucket hash pair per row
        self.grid_a = rng.integers(1, HASH_P, size=self.rows, dtype=np.int64)
        self.grid_b = rng.integers(0, HASH_P, size=self.rows, dtype=np.int64)
        gz = np.zeros((self.rows, self.buckets), dtype=np.int64)
        self.grid_count = gz.copy()
        self.grid_index = gz.copy()
        self.grid_fp1 = gz.copy()
        self.grid_fp2 = gz.copy()

        self._rowidx = np.arange(self.rows)
        # exact mirror of net contents; diagnostic/test aid only
        self.mirror: dict[int, int] | None = {} if track_contents else None

    @staticmethod
    def _pow_table(r: int, p: int, idx: np.ndarray) -> np.ndarray:
        out = np.empty(len(idx), dtype=np.int64)
        acc = 1
        for i in range(len(idx)):
            out[i] = acc
            acc = acc * r % p
        return out

    # -- updates -----------------------------------------------------------

    def update(self, index: int, delta: int) -> None:
        if not 1 <= index <= self.n:
            raise ValueError(f"index {index} out of [1, {self.n}]")
        self.support += delta
        d = int(delta)

        if self.n_samplers:
            h = (self.bank_a * index + self.bank_b) % HASH_P
            lstar = np.clip(
                np.floor(np.log2(HASH_P / np.maximum(h, 1))), 0,
                self.levels - 1).astype(np.int64)
            lstar[h == 0] = self.levels - 1
            mask = np.arange(self.levels) <= lstar[:, :, None]
            self.bank_count += d * mask
            self.bank_index += d * index * mask
            self.bank_fp1 = (self.bank_fp1
                             + d * int(self.rpow1[index]) * mask) % self.p1
            self.bank_fp2 = (self.bank_fp2
                             + d * int(self.rpow2[index]) * mask) % self.p2

        buckets = (self.grid_a * index + self.grid_b) % HASH_P % self.buckets
        self.grid_count[self._rowidx, buckets] += d
        self.grid_index[self._rowidx, buckets] += d * index
        self.grid_fp1[self._rowidx, buckets] = (
            self.grid_fp1[self._rowidx, buckets]
            + d * int(self.rpow1[index])) % self.p1
        self.grid_fp2[self._rowidx, buckets] = (
            self.grid_fp2[self._rowidx, buckets]
            + d * int(self.rpow2[index])) % self.p2

        if self.mirror is not None:
            self.mirror[index] = self.mirror.get(index, 0) + delta
            if self.mirror[index] == 0:
                del self.mirror[index]

    # -- queries -----------------------------------------------------------

    def _verified(self, c: int, ix: int, f1: int, f2: int) -> int | None:
        if c == 0 or ix % c != 0:
            return None
        i = ix // c
        if not 1 <= i <= self.n:
            return None
        if f1 != c * int(self.rpow1[i]) % self.p1:
            return None
        if f2 != c * int(self.rpow2[i]) % self.p2:
            return None
        return i

    def sample(self, which: int) -> SampleOutcome:
        if not 0 <= which < self.n_samplers:
            raise IndexError(f"sampler {which} of {self.n_samplers}")
        if self.support == 0:
            return SampleOutcome(EMPTY)
        for rep in range(self.reps):
            for lvl in range(self.levels):
                i = self._verified(int(self.bank_count[which, rep, lvl]),
                                   int(self.bank_index[which, rep, lvl]),
                                   int(self.bank_fp1[which, rep, lvl]),
                                   int(self.bank_fp2[which, rep, lvl]))
                if i is not None:
                    return SampleOutcome(INDEX, i)
        return SampleOutcome(FAIL)

    def recover(self) -> set[int]:
        """Exact support set via grid peeling.

        Reliable when the true support fits in ``capacity``; beyond that
        the peeling either stalls (RecoveryFail) or yields a strict
        subset, so callers must gate on the support counter.
        """
        count = self.grid_count.copy()
        index = self.grid_index.copy()
        fp1 = self.grid_fp1.copy()
        fp2 = self.grid_fp2.copy()
        found: set[int] = set()

        for _ in range(self.buckets * self.rows + 1):
            if not count.any() and not index.any() and not fp1.any() \
                    and not fp2.any():
                return found
            # candidate one-sparse buckets: cheap filters first
            cand = count != 0
            safe = np.where(count == 0, 1, count)
            cand &= index % safe == 0
            peeled: dict[int, int] = {}
            rows, cols = np.nonzero(cand)
            for rr, cc in zip(rows, cols):
                c = int(count[rr, cc])
                i = self._verified(c, int(index[rr, cc]),
                                   int(fp1[rr, cc]), int(fp2[rr, cc]))
                if i is not None and i not in peeled and i not in found:
                    peeled[i] = c
            if not peeled:
                raise RecoveryFail(
                    f"peeling stalled with {int(np.abs(count).sum())} "
                    f"residual mass")
            for i, w in peeled.items():
                found.add(i)
                buckets = (self.grid_a * i + self.grid_b) % HASH_P \
                    % self.buckets
                count[self._rowidx, buckets] -= w
                index[self._rowidx, buckets] -= w * i
                fp1[self._rowidx, buckets] = (
                    fp1[self._rowidx, buckets]
                    - w * int(self.rpow1[i])) % self.p1
                fp2[self._rowidx, buckets] = (
                    fp2[self._rowidx, buckets]
                    - w * int(self.rpow2[i])) % self.p2
        raise RecoveryFail("peeling did not terminate")

    # -- comparison (linearity tests) -------------------------------------

    def state_equals(self, other: "SampleRecovery") -> bool:
        return (self.support == other.support
                and np.array_equal(self.bank_count, other.bank_count)
                and np.array_equal(self.bank_index, other.bank_index)
                and np.array_equal(self.bank_fp1, other.bank_fp1)
                and np.array_equal(self.bank_fp2, other.bank_fp2)
                and np.array_equal(self.grid_count, other.grid_count)
                and np.array_equal(self.grid_index, other.grid_index)
                and np.array_equal(self.grid_fp1, other.grid_fp1)
                and np.array_equal(self.grid_fp2, other.grid_fp2))

    def words(self) -> int:
        """Stored machine words, for space-census reports."""
        bank = 4 * self.bank_count.size + 2 * self.bank_a.size
        grid = 4 * self.grid_count.size + 2 * self.grid_a.size
        return bank + grid + 2 * (self.n + 1) + 4


def sk_update(s: SampleRecovery, index: int, delta: int) -> SampleRecovery:
    s.update(index, delta)
    return s


def sk_sample(s: SampleRecovery, which: int) -> SampleOutcome:
    return s.sample(which)


def sk_recover(s: SampleRecovery) -> set[int]:
    return s.recover()
