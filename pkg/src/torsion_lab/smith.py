"""Exact integer linear algebra over Z and Z/L.

Provides the machinery behind cocycle solving and second-cohomology reports:

* ``howell_form``     -- canonical generating set for a row span in (Z/L)^n,
                         with optional tracking of combinations for witnesses;
* ``ModularSystem``   -- solve A x = b (mod L) for many right-hand sides;
* ``smith_normal_form`` -- integer SNF with optional transform matrices;
* ``kernel_lattice_mod`` -- basis of {x in Z^n : A x = 0 (mod L)};
* ``quotient_divisors`` -- elementary divisors and generators of a lattice
                         quotient, for finite-group cohomology.

Everything is exact.  numpy arrays hold bounded integers; Smith elimination
escalates from int64 to python ints if entries ever grow large.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

import numpy as np

_INT64_LIMIT = 1 << 42


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def unit_for(a: int, L: int) -> int:
    """A unit u mod L with (u * a) % L == gcd(a, L)."""
    a %= L
    g = gcd(a, L)
    c = a // g
    m = L // g
    u0 = pow(c, -1, m) if m > 1 else 1
    u = u0
    while gcd(u, L) != 1:
        u += m
    return u % L


class HowellForm:
    """Canonical row form of the submodule of (Z/L)^n spanned by given rows.

    Pivot heads divide L, entries above each pivot are reduced, and the form
    is saturated, so membership (and lexicographically minimal coset
    representatives) can be read off by a single reduction pass.  When
    ``track`` is set, every stored row carries the combination of input rows
    producing it.
    """

    def __init__(self, rows: Sequence[Sequence[int]], modulus: int, track: bool = False):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        rows = [list(r) for r in rows]
        self.modulus = modulus
        self.width = len(rows[0]) if rows else 0
        self.ngen = len(rows)
        self.track = track
        self._rows: list[np.ndarray] = []
        self._pivot_of: dict[int, int] = {}
        if modulus == 1 or self.width == 0:
            self.pivots: list[tuple[int, int]] = []
            return
        total = self.width + (self.ngen if track else 0)
        pending = []
        for i, r in enumerate(rows):
            v = np.zeros(total, dtype=np.int64)
            v[: self.width] = np.asarray(r, dtype=np.int64) % modulus
            if track:
                v[self.width + i] = 1
            pending.append(v)
        while pending:
            self._insert(pending.pop(), pending)
        self._reduce_above()
        order = sorted(self._pivot_of)
        self._rows = [self._rows[self._pivot_of[c]] for c in order]
        self._pivot_of = {c: i for i, c in enumerate(order)}
        self.pivots = [(c, int(self._rows[i][c])) for c, i in self._pivot_of.items()]

    def _insert(self, v: np.ndarray, pending: list) -> None:
        L = self.modulus
        while True:
            nz = np.nonzero(v[: self.width])[0]
            if len(nz) == 0:
                return
            c = int(nz[0])
            hit = self._pivot_of.get(c)
            if hit is None:
                a = int(v[c])
                u = unit_for(a, L)
                v = (u * v) % L
                head = int(v[c])
                self._pivot_of[c] = len(self._rows)
                self._rows.append(v)
                if head != 0 and L // head > 1:
                    sat = ((L // head) * v) % L
                    if sat[: self.width].any():
                        pending.append(sat)
                return
            h = self._rows[hit]
            a, b = int(h[c]), int(v[c])
            if b % a == 0:
                v = (v - (b // a) * h) % L
            else:
                g, u, w = xgcd(a, b)
                new_h = (u * h + w * v) % L
                v = ((a // g) * v - (b // g) * h) % L
                uu = unit_for(int(new_h[c]), L)
                new_h = (uu * new_h) % L
                self._rows[hit] = new_h
                head = int(new_h[c])
                if head != 0 and L // head > 1:
                    sat = ((L // head) * new_h) % L
                    if sat[: self.width].any():
                        pending.append(sat)

    def _reduce_above(self) -> None:
        L = self.modulus
        for c, i in sorted(self._pivot_of.items()):
            h = self._rows[i]
            a = int(h[c])
            for c2, j in self._pivot_of.items():
                if j == i:
                    continue
                r = self._rows[j]
                x = int(r[c])
                if x:
                    self._rows[j] = (r - (x // a) * h) % L

    @property
    def matrix(self) -> np.ndarray:
        if not self._rows:
            return np.zeros((0, self.width), dtype=np.int64)
        return np.array([r[: self.width] for r in self._rows], dtype=np.int64)

    def reduce(self, v: Sequence[int]) -> tuple[np.ndarray, Optional[np.ndarray]]:
        """Reduce v against the form; returns (residue, combination).

        The residue is the lexicographically minimal representative of
        v + span.  It is zero exactly when v lies in the span, in which case
        ``combination`` (when tracking) gives coefficients over the original
        generator rows with combination @ rows == v (mod L).
        """
        L = self.modulus
        r = np.asarray(list(v), dtype=np.int64) % L
        combo = np.zeros(self.ngen, dtype=np.int64) if self.track else None
        for c, i in self._pivot_of.items():
            x = int(r[c])
            if not x:
                continue
            h = self._rows[i]
            q = x // int(h[c])
            if q:
                r = (r - q * h[: self.width]) % L
                if combo is not None:
                    combo = (combo + q * h[self.width :]) % L
        return r, combo

    def contains(self, v: Sequence[int]) -> bool:
        residue, _ = self.reduce(v)
        return not residue.any()


class ModularSystem:
    """Solve A x = b (mod L) repeatedly for a fixed integer matrix A."""

    def __init__(self, a_matrix: Sequence[Sequence[int]], modulus: int):
        A = np.asarray(a_matrix, dtype=np.int64)
        if A.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        self.modulus = modulus
        self.nrows, self.ncols = A.shape
        gens = [A[:, j] for j in range(self.ncols)]
        gens += [modulus * e for e in np.eye(self.nrows, dtype=np.int64)]
        self._howell = HowellForm(gens, modulus, track=True)

    def solve(self, b: Sequence[int]) -> Optional[np.ndarray]:
        residue, combo = self._howell.reduce(b)
        if residue.any():
            return None
        return combo[: self.ncols] % self.modulus


@dataclass
class SmithForm:
    divisors: list[int]
    uinv: Optional[np.ndarray] = None
    v: Optional[np.ndarray] = None
    vinv: Optional[np.ndarray] = None


def _as_work_array(mat) -> np.ndarray:
    A = np.array(mat, dtype=np.int64, copy=True) if not isinstance(mat, np.ndarray) else mat.astype(np.int64, copy=True)
    return A


def smith_normal_form(
    mat,
    want_uinv: bool = False,
    want_v: bool = False,
    want_vinv: bool = False,
) -> SmithForm:
    """Integer Smith normal form with divisor chain d1 | d2 | ...

    Returns the positive diagonal entries, plus requested transforms for
    U A V = D: ``uinv`` (columns give preimages of the diagonal basis) and
    ``v`` / ``vinv`` (column operations and their inverse).
    """
    A = _as_work_array(np.asarray(mat))
    if A.ndim != 2:
        A = A.reshape((A.shape[0], -1)) if A.size else A.reshape((0, 0))
    m, n = A.shape
    uinv = np.eye(m, dtype=np.int64) if want_uinv else None
    v = np.eye(n, dtype=np.int64) if want_v else None
    vinv = np.eye(n, dtype=np.int64) if want_vinv else None
    obj = False

    def escalate():
        nonlocal A, uinv, v, vinv, obj
        if not obj:
            A = A.astype(object)
            uinv = uinv.astype(object) if uinv is not None else None
            v = v.astype(object) if v is not None else None
            vinv = vinv.astype(object) if vinv is not None else None
            obj = True

    def check_growth():
        if obj:
            return
        arrays = [A] + [x for x in (uinv, v, vinv) if x is not None]
        for x in arrays:
            if x.size and int(np.abs(x).max()) > _INT64_LIMIT:
                escalate()
                return

    def swap_rows(i, j):
        if i == j:
            return
        A[[i, j], :] = A[[j, i], :]
        if uinv is not None:
            uinv[:, [i, j]] = uinv[:, [j, i]]

    def swap_cols(i, j):
        if i == j:
            return
        A[:, [i, j]] = A[:, [j, i]]
        if v is not None:
            v[:, [i, j]] = v[:, [j, i]]
        if vinv is not None:
            vinv[[i, j], :] = vinv[[j, i], :]

    def negate_row(i):
        A[i, :] = -A[i, :]
        if uinv is not None:
            uinv[:, i] = -uinv[:, i]

    r = 0
    limit = min(m, n)
    while r < limit:
        sub = A[r:, r:]
        nz_mask = sub != 0
        if not nz_mask.any():
            break
        absub = np.abs(sub)
        big = absub.max() + 1
        masked = np.where(nz_mask, absub, big)
        flat = int(np.argmin(masked))
        i, j = divmod(flat, n - r)
        swap_rows(r, r + i)
        swap_cols(r, r + j)
        while True:
            # clear column r below the pivot
            progressed = True
            while progressed:
                progressed = False
                col = A[r + 1 :, r]
                if col.size and np.any(col != 0):
                    q = col // A[r, r]
                    if np.any(q != 0):
                        A[r + 1 :, :] -= np.outer(q, A[r, :])
                        if uinv is not None:
                            uinv[:, r] += uinv[:, r + 1 :] @ q
                    col = A[r + 1 :, r]
                    nz = np.nonzero(col)[0]
                    if nz.size:
                        k = int(nz[np.argmin(np.abs(col[nz]))])
                        swap_rows(r, r + 1 + k)
                        progressed = True
            # clear row r to the right of the pivot
            progressed = True
            while progressed:
                progressed = False
                row = A[r, r + 1 :]
                if row.size and np.any(row != 0):
                    q = row // A[r, r]
                    if np.any(q != 0):
                        A[:, r + 1 :] -= np.outer(A[:, r], q)
                        if v is not None:
                            v[:, r + 1 :] -= np.outer(v[:, r], q)
                        if vinv is not None:
                            vinv[r, :] += q @ vinv[r + 1 :, :]
                    row = A[r, r + 1 :]
                    nz = np.nonzero(row)[0]
                    if nz.size:
                        k = int(nz[np.argmin(np.abs(row[nz]))])
                        swap_cols(r, r + 1 + k)
                        progressed = True
            if not np.any(A[r + 1 :, r] != 0) and not np.any(A[r, r + 1 :] != 0):
                break
        check_growth()
        if A[r, r] < 0:
            negate_row(r)
        # enforce the divisibility chain
        if r + 1 < limit:
            rest = A[r + 1 :, r + 1 :]
            bad = np.nonzero(rest % A[r, r])
            if bad[0].size:
                i = int(bad[0][0])
                A[r, :] += A[r + 1 + i, :]
                if uinv is not None:
                    uinv[:, r + 1 + i] -= uinv[:, r]
                continue
        r += 1
    divisors = [int(A[i, i]) for i in range(r)]
    return SmithForm(divisors=divisors, uinv=uinv, v=v, vinv=vinv)


@dataclass
class KernelLattice:
    """Basis of {x in Z^n : A x = 0 (mod L)} in the factored form V * diag(t).

    V is unimodular (with inverse ``vinv``); the lattice is spanned by the
    columns of V scaled by t, and always contains L * Z^n.
    """

    v: np.ndarray
    vinv: np.ndarray
    scales: list[int]
    modulus: int

    @property
    def dim(self) -> int:
        return self.v.shape[0] if self.v.size else len(self.scales)

    @property
    def basis_matrix(self) -> np.ndarray:
        if not self.scales:
            return np.zeros((0, 0), dtype=np.int64)
        return self.v * np.asarray(self.scales, dtype=self.v.dtype)


def kernel_lattice_mod(rows, modulus: int) -> KernelLattice:
    """Lattice of integer solutions of (rows) x = 0 (mod ``modulus``)."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        rows = rows.reshape((0, 0))
    n = rows.shape[1] if rows.size else (rows.shape[1] if rows.ndim == 2 else 0)
    if n == 0:
        return KernelLattice(
            v=np.zeros((0, 0), dtype=np.int64), vinv=np.zeros((0, 0), dtype=np.int64),
            scales=[], modulus=modulus,
        )
    H = HowellForm(list(rows % modulus), modulus).matrix
    if H.shape[0] == 0:
        eye = np.eye(n, dtype=np.int64)
        return KernelLattice(v=eye, vinv=eye.copy(), scales=[1] * n, modulus=modulus)
    snf = smith_normal_form(H, want_v=True, want_vinv=True)
    scales = []
    for j in range(n):
        s = snf.divisors[j] if j < len(snf.divisors) else 0
        scales.append(modulus // gcd(s, modulus))
    return KernelLattice(v=snf.v, vinv=snf.vinv, scales=scales, modulus=modulus)


def quotient_divisors(
    lattice: KernelLattice, subgroup_cols, exponent: int
) -> tuple[list[int], list[np.ndarray]]:
    """Structure of lattice / column-span(subgroup_cols).

    The columns must span a finite-index subgroup of the lattice whose
    quotient has exponent dividing ``exponent``.  Returns the elementary
    divisors greater than one (ascending, so each divides the next) and, for
    each, an ambient generator vector of that cyclic factor.
    """
    n = lattice.dim
    if n == 0:
        return [], []
    M = np.asarray(subgroup_cols, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape((n, 0))
    VM = lattice.vinv @ M
    W = np.zeros_like(VM)
    for i, t in enumerate(lattice.scales):
        row = VM[i, :]
        if np.any(row % t):
            raise ArithmeticError("subgroup is not contained in the lattice")
        W[i, :] = row // t
    W = np.concatenate([W, exponent * np.eye(n, dtype=np.int64)], axis=1)
    snf = smith_normal_form(W, want_uinv=True)
    divisors: list[int] = []
    gens: list[np.ndarray] = []
    basis = lattice.basis_matrix
    for i, d in enumerate(snf.divisors):
        if d > 1:
            divisors.append(d)
            gens.append(basis @ snf.uinv[:, i])
    return divisors, gens
