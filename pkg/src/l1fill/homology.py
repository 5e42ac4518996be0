"""Exact reduced homology and cohomology of finite truncated complexes.

Homology uses an integer Smith normal form (captures torsion); cohomology
uses rational ranks of the transposed boundary matrices, a deliberately
separate code path.  Both work on the augmented complex: the boundary
leaving degree 0 is the augmentation row of ones, so H~_0 of a point is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import Chain, require_reduced_cycle
from .errors import TruncationTooShallow


@dataclass(frozen=True)
class HomologyResult:
    level: int
    betti: int
    torsion: tuple

    def is_trivial(self):
        return self.betti == 0 and not self.torsion


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple
    U: tuple
    V: tuple

    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)

    def invariant_factors(self):
        return tuple(d for d in self.diagonal if d > 1)


def boundary_matrix(X, p):
    """Matrix of the boundary leaving level p, rows indexed by level p-1.

    For p = 0 this is the 1 x n_0 augmentation row of ones.  Entries are
    plain ints.
    """
    if p == 0:
        return [[1] * X.n_simplices(0)]
    rows = X.n_simplices(p - 1)
    cols = X.n_simplices(p)
    mat = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        for i in range(p + 1):
            mat[X.face(p, i, j)][j] += 1 if i % 2 == 0 else -1
    return mat


def smith_normal_form(A):
    """Smith normal form with unimodular transforms, U A V = S.

    Pivoting picks the smallest absolute nonzero entry of the remaining
    block to bound coefficient growth; the divisibility chain d_1 | d_2 |
    ... is enforced before each pivot is finalized.  The reconstruction
    U A V = S is verified before returning.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [[int(x) for x in row] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in S:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def min_entry(k):
        best = None
        for i in range(k, m):
            for j in range(k, n):
                v = abs(S[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    k = 0
    while k < min(m, n):
        found = min_entry(k)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(k, pi)
        swap_cols(k, pj)
        while True:
            dirty = False
            for i in range(k + 1, m):
                if S[i][k]:
                    q = S[i][k] // S[k][k]
                    add_row(k, i, -q)
                    if S[i][k]:
                        dirty = True
            for j in range(k + 1, n):
                if S[k][j]:
                    q = S[k][j] // S[k][k]
                    add_col(k, j, -q)
                    if S[k][j]:
                        dirty = True
            if not dirty:
                break
            found = min_entry(k)
            _, pi, pj = found
            swap_rows(k, pi)
            swap_cols(k, pj)
        # make the pivot divide everything left in the block
        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if S[i][j] % S[k][k]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, k, 1)
            continue
        if S[k][k] < 0:
            S[k] = [-x for x in S[k]]
            U[k] = [-x for x in U[k]]
        k += 1

    diag = tuple(S[i][i] for i in range(min(m, n)))
    recon = linalg.mat_mul(linalg.mat_mul(U, [[int(x) for x in row] for row in A]), V)
    expected = [[diag[i] if i == j and i < len(diag) else 0 for j in range(n)] for i in range(m)]
    if [[int(x) for x in row] for row in recon] != expected:
        raise AssertionError("Smith reduction lost track of its transforms")
    return SmithForm(diag, tuple(tuple(r) for r in U), tuple(tuple(r) for r in V))


def _require_depth(X, p):
    if X.max_dim < p + 1:
        raise TruncationTooShallow(
            f"need levels up to {p + 1}, complex is truncated at {X.max_dim}"
        )


def reduced_homology(X, p) -> HomologyResult:
    """Reduced integral homology H~_p via Smith normal forms."""
    _require_depth(X, p)
    n_p = X.n_simplices(p)
    out_form = smith_normal_form(boundary_matrix(X, p))
    in_form = smith_normal_form(boundary_matrix(X, p + 1))
    betti = n_p - out_form.rank() - in_form.rank()
    return HomologyResult(p, betti, in_form.invariant_factors())


def cohomology_betti(X, p) -> int:
    """Dimension of degree-p reduced cohomology with rational coefficients.

    Computed on the dual complex: coboundaries are transposed boundary
    matrices and ranks are taken by fraction Gaussian elimination.  For a
    finite complex every cochain is bounded, so this is also the bounded
    cohomology dimension.
    """
    _require_depth(X, p)
    n_p = X.n_simplices(p)
    delta_out = linalg.transpose(boundary_matrix(X, p + 1))
    delta_in = linalg.transpose(boundary_matrix(X, p))
    kernel_dim = n_p - linalg.rank(delta_out)
    image_dim = linalg.rank(delta_in)
    return kernel_dim - image_dim


def is_boundary(X, z):
    """Decide whether a reduced cycle bounds, with an exact witness.

    Returns (True, filling_chain) or (False, functional), where the
    functional y satisfies y.B = 0 on the boundary matrix and y.z != 0,
    certifying a nonzero homology class.  Both certificates are verified
    before returning.
    """
    require_reduced_cycle(X, z)
    _require_depth(X, z.level)
    B = boundary_matrix(X, z.level + 1)
    rhs = [Fraction(0)] * X.n_simplices(z.level)
    for idx, c in z.coeffs.items():
        rhs[idx] = c
    status, payload = linalg.solve_with_certificate(B, rhs)
    if status == "solution":
        filling = Chain(z.level + 1, {j: c for j, c in enumerate(payload) if c != 0})
        if linalg.mat_vec(B, payload) != rhs:
            raise AssertionError("solver returned a bad filling")
        return True, filling
    y = payload
    yB = linalg.mat_vec(linalg.transpose(B), y)
    pairing = sum(a * b for a, b in zip(y, rhs))
    if any(v != 0 for v in yB) or pairing == 0:
        raise AssertionError("solver returned a bad infeasibility certificate")
    return False, y
