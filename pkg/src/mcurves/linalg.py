"""Ranks and kernels of integer matrices.

Two routes are kept deliberately separate:

* modular: Gaussian elimination over F_p in numpy ``int64``, with primes
  below 2**31 so that products of residues fit in 63 bits;
* exact: rank and nullspace over Z through FLINT (``python-flint``).

:class:`RankBackend` combines them.  In ``"modular"`` mode a rank is the
maximum over several seeded primes, and every rank flagged as critical is
recomputed exactly; in ``"exact"`` mode every rank is exact.  Modular ranks
never exceed the rational rank, so a disagreement is always resolved in
favour of the exact value and recorded.
"""
import random

import flint
import numpy as np
import sympy

PRIME_LOW = 2 ** 30
PRIME_HIGH = 2 ** 31 - 2 ** 16


def as_int_matrix(rows, ncols):
    """Integer matrix (object dtype) from a list of rows."""
    m = np.zeros((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        m[i, :] = row
    return m


def reduce_mod(matrix, p):
    m = np.asarray(matrix)
    if m.dtype != object and np.abs(m).max(initial=0) < 2 ** 62:
        return np.mod(m.astype(np.int64), p)
    return np.mod(m.astype(object), p).astype(np.int64)


def _eliminate_mod_p(a, p, reduced=False):
    """In-place row reduction over F_p; returns the pivot columns.

    With ``reduced`` the result is in reduced row echelon form.
    """
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        targets = r + 1 + np.flatnonzero(a[r + 1:, c])
        if reduced:
            targets = np.concatenate([np.flatnonzero(a[:r, c]), targets])
        if targets.size:
            a[targets, c:] = (a[targets, c:] - np.outer(a[targets, c], a[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    return pivots


def rank_mod_p(matrix, p):
    a = reduce_mod(matrix, p)
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = np.ascontiguousarray(a.T)
    return len(_eliminate_mod_p(a, p))


def nullspace_mod_p(matrix, p):
    """Basis of the right kernel over F_p, one vector per row."""
    a = reduce_mod(matrix, p)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    pivots = _eliminate_mod_p(a, p, reduced=True)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-a[row, fc]) % p
    return basis


def _to_fmpz(matrix):
    m = np.asarray(matrix)
    nrows, ncols = m.shape
    return flint.fmpz_mat(nrows, ncols, [int(v) for v in m.ravel()])


def exact_rank(matrix):
    m = np.asarray(matrix)
    if m.size == 0:
        return 0
    return _to_fmpz(m).rank()


def exact_nullspace(matrix):
    """Basis of the rational right kernel as integer vectors (rows)."""
    m = np.asarray(matrix)
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(ncols, dtype=object)
    x, nullity = _to_fmpz(m).nullspace()
    out = np.zeros((nullity, ncols), dtype=object)
    for j in range(nullity):
        for i in range(ncols):
            out[j, i] = int(x[i, j])
    return out


class RankBackend:
    """Rank oracle with a recorded seed.

    Per-tag prime choices are derived from ``seed`` so reruns are
    reproducible regardless of evaluation order.
    """

    def __init__(self, mode="modular", seed=0, n_primes=3):
        if mode not in ("modular", "exact"):
            raise ValueError(f"unknown rank mode {mode!r}")
        if n_primes < 3:
            raise ValueError("at least three primes are required")
        self.mode = mode
        self.seed = seed
        self.n_primes = n_primes
        self.primes_used = []
        self.exact_fallback_triggered = False
        self.exact_checks = 0

    def primes_for(self, tag):
        rng = random.Random(f"{self.seed}:{tag}")
        primes = []
        while len(primes) < self.n_primes:
            p = int(sympy.nextprime(rng.randrange(PRIME_LOW, PRIME_HIGH)))
            if p not in primes:
                primes.append(p)
        for p in primes:
            if p not in self.primes_used:
                self.primes_used.append(p)
        return primes

    def modular_rank(self, matrix, tag):
        return max(rank_mod_p(matrix, p) for p in self.primes_for(tag))

    def rank(self, matrix, tag, critical=False):
        m = np.asarray(matrix)
        if m.size == 0:
            return 0
        if self.mode == "exact":
            return exact_rank(m)
        r = self.modular_rank(m, tag)
        if critical:
            self.exact_checks += 1
            r_exact = exact_rank(m)
            if r_exact != r:
                self.exact_fallback_triggered = True
                r = r_exact
        return r

    def metadata(self):
        return {
            "mode": self.mode,
            "seed": self.seed,
            "primes_used": list(self.primes_used),
            "exact_fallback_triggered": self.exact_fallback_triggered,
        }
