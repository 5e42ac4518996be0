"""Exact minimal l1 fillings and per-dimension uniform filling constants.

min_l1_fill solves  minimize ||c||_1  subject to  boundary(c) = z  as a
linear program over the rationals: c splits as c+ - c- with both parts
nonnegative, and a two-phase primal simplex with Bland's rule runs in exact
Fraction arithmetic.  Optimality is certified by an exact dual vector y with
y.z = ||c|| and ||B^T y||_inf <= 1.

The per-level constant K_p = sup_z min-fill(z)/||z|| is computed exactly by
enumerating the vertices of the cycle-space section of the unit l1 ball:
candidate vertex directions are nullspaces of (d-1)-subsets of the
coordinate rows of a cycle basis (the facet normals of the polar zonotope
are among them, and evaluating a convex positively homogeneous maximum at
extra boundary points is harmless).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from . import linalg
from .complexes import Chain, check_chain, require_reduced_cycle
from .errors import (
    DimensionCapExceeded,
    InputError,
    NotABoundary,
    TruncationTooShallow,
)
from .homology import boundary_matrix


class Infinite:
    """Sentinel for an unbounded filling constant (nonzero homology)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"


INFINITE = Infinite()


@dataclass(frozen=True)
class FillingCertificate:
    filling: Chain
    norm: Fraction
    ratio: Fraction
    optimal: bool
    dual: tuple = None


@dataclass(frozen=True)
class UniformConstantReport:
    level: int
    constant: object  # Fraction or INFINITE
    method: str
    witnesses: tuple
    lower_bound_only: bool


@dataclass(frozen=True)
class ConstantCheck:
    ok: bool
    bound: Fraction
    worst_ratio: Fraction
    worst_cycle: object
    cycles_checked: int


class _Unbounded(Exception):
    pass


def _simplex_minimize(A, b, c):
    """Two-phase primal simplex, Bland's rule, exact fractions.

    Minimizes c.x subject to A x = b, x >= 0.  Returns (x, y) where y is an
    exact optimal dual vector (one entry per row of A, redundant rows
    included): y.b equals the optimum and A^T y is bounded by c
    componentwise.  The dual is read off the artificial columns of the
    final tableau, which record the row operations even across redundant
    row deletions.  Raises ValueError("infeasible") when no feasible point
    exists (callers normally pre-check feasibility and never see it).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = [[Fraction(x) for x in row] for row in A]
    rhs = [Fraction(x) for x in b]
    sign = [Fraction(1)] * m
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
            sign[i] = Fraction(-1)
    # tableau over variables 0..n-1 (original) and n..n+m-1 (artificial)
    tab = [rows[i] + [Fraction(int(k == i)) for k in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    kept = list(range(m))

    def pivot(row_i, col_j):
        piv = tab[row_i][col_j]
        tab[row_i] = [x / piv for x in tab[row_i]]
        for r in range(len(tab)):
            if r != row_i and tab[r][col_j] != 0:
                f = tab[r][col_j]
                tab[r] = [x - f * y for x, y in zip(tab[r], tab[row_i])]
        basis[row_i] = col_j

    def run(cost, active_cols):
        while True:
            lam = {}
            for r, bv in enumerate(basis):
                if cost[bv] != 0:
                    lam[r] = cost[bv]
            entering = None
            for j in active_cols:
                if j in basis:
                    continue
                reduced = cost[j] - sum(f * tab[r][j] for r, f in lam.items())
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return
            leaving = None
            best = None
            for r in range(len(tab)):
                coeff = tab[r][entering]
                if coeff > 0:
                    ratio = tab[r][-1] / coeff
                    if best is None or ratio < best or (ratio == best and basis[r] < basis[leaving]):
                        best, leaving = ratio, r
            if leaving is None:
                raise _Unbounded
            pivot(leaving, entering)

    art_cost = [Fraction(0)] * n + [Fraction(1)] * m
    run(art_cost, range(n + m))
    if sum(tab[r][-1] for r, bv in enumerate(basis) if bv >= n) != 0:
        raise ValueError("infeasible")
    # drive leftover artificials out of the basis, dropping redundant rows
    for r in range(len(tab) - 1, -1, -1):
        if basis[r] >= n:
            col = next((j for j in range(n) if tab[r][j] != 0), None)
            if col is None:
                del tab[r], basis[r], kept[r]
            else:
                pivot(r, col)
    real_cost = [Fraction(x) for x in c] + [Fraction(0)] * m
    run(real_cost, range(n))
    x = [Fraction(0)] * n
    for r, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[r][-1]
    # y^T = c_B^T B^{-1}; the artificial block of the tableau is B^{-1}
    # applied to the (sign-normalized) original rows
    y = [
        sign[k] * sum(real_cost[bv] * tab[r][n + k] for r, bv in enumerate(basis))
        for k in range(m)
    ]
    return x, y


def min_l1_fill(X, z) -> FillingCertificate:
    """Minimal-norm exact filling of a reduced cycle, with dual certificate.

    Raises NotACycle when z is not a reduced cycle and NotABoundary (with a
    separating functional) when z represents a nonzero homology class.
    """
    check_chain(X, z)
    require_reduced_cycle(X, z)
    p = z.level
    if X.max_dim < p + 1:
        raise TruncationTooShallow(
            f"filling a level-{p} cycle needs level {p + 1}, complex stops at {X.max_dim}"
        )
    if z.is_zero():
        return FillingCertificate(Chain.zero(p + 1), Fraction(0), Fraction(0), True, ())
    B = boundary_matrix(X, p + 1)
    m = X.n_simplices(p)
    n = X.n_simplices(p + 1)
    rhs = [Fraction(0)] * m
    for idx, coeff in z.coeffs.items():
        rhs[idx] = coeff
    status, payload = linalg.solve_with_certificate(B, rhs)
    if status == "infeasible":
        y = payload
        pairing = sum(a * b for a, b in zip(y, rhs))
        raise NotABoundary(tuple(y), pairing)
    # LP over (c+, c-)
    A = [row + [-x for x in row] for row in B]
    cost = [Fraction(1)] * (2 * n)
    x, dual = _simplex_minimize(A, rhs, cost)
    coeffs = {}
    for j in range(n):
        v = x[j] - x[n + j]
        if v != 0:
            coeffs[j] = v
    filling = Chain(p + 1, coeffs)
    norm = filling.norm()
    objective = sum(x, Fraction(0))
    if objective != norm:
        raise AssertionError("optimal split has overlapping supports")
    pairing = sum(a * b for a, b in zip(dual, rhs))
    if pairing != norm:
        raise AssertionError("dual certificate fails strong duality")
    for col in range(n):
        against = sum(B[r][col] * dual[r] for r in range(m))
        if abs(against) > 1:
            raise AssertionError("dual certificate is infeasible")
    # exact residue check
    residue = [sum(B[r][j] * coeffs.get(j, 0) for j in coeffs) for r in range(m)]
    if residue != rhs:
        raise AssertionError("filling does not bound the cycle")
    zn = z.norm()
    return FillingCertificate(filling, norm, norm / zn, True, tuple(dual))


def cycle_space(X, p):
    """Integer-scaled basis of reduced cycles at level p."""
    return linalg.nullspace(boundary_matrix(X, p), X.n_simplices(p))


def _candidate_directions(basis_rows, d, budget):
    """Facet-normal candidates for the polar of the zonotope of the rows."""
    n = len(basis_rows)
    if d == 1:
        return [[Fraction(1)]]
    if comb(n, d - 1) > budget:
        raise DimensionCapExceeded(
            f"{comb(n, d - 1)} candidate subsets exceed the enumeration budget {budget}"
        )
    seen = set()
    out = []
    for subset in combinations(range(n), d - 1):
        sub = [basis_rows[i] for i in subset]
        kernel = linalg.nullspace(sub, d)
        if len(kernel) != 1:
            continue
        v = kernel[0]
        first = next((x for x in v if x != 0))
        if first < 0:
            v = [-x for x in v]
        key = tuple(v)
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def uniform_constant(
    X, p, method="vertex-enumeration", dim_cap=12, cycles=None, budget=200_000
) -> UniformConstantReport:
    """The exact constant K_p = sup over reduced cycles of min-fill ratio.

    vertex-enumeration computes the exact supremum (the sup of a convex
    positively homogeneous function over the unit-ball section is attained
    at a vertex); cycle-sample evaluates a caller-provided cycle list and is
    flagged as a lower bound only.  A NotABoundary anywhere means nonzero
    homology and the constant is Infinite.
    """
    if X.max_dim < p + 1:
        raise TruncationTooShallow(
            f"need level {p + 1}, complex stops at {X.max_dim}"
        )
    if method == "cycle-sample":
        if not cycles:
            raise InputError("cycle-sample needs a nonempty cycle list")
        best = Fraction(0)
        witnesses = []
        for z in cycles:
            try:
                cert = min_l1_fill(X, z)
            except NotABoundary:
                return UniformConstantReport(p, INFINITE, method, ((z, None),), False)
            if z.is_zero():
                continue
            if cert.ratio > best:
                best, witnesses = cert.ratio, [(z, cert)]
            elif cert.ratio == best and len(witnesses) < 4:
                witnesses.append((z, cert))
        return UniformConstantReport(p, best, method, tuple(witnesses), True)
    if method != "vertex-enumeration":
        raise InputError(f"unknown method {method!r}")
    basis = cycle_space(X, p)
    d = len(basis)
    if d == 0:
        return UniformConstantReport(p, Fraction(0), method, (), False)
    if d > dim_cap:
        raise DimensionCapExceeded(f"cycle space has dimension {d} > cap {dim_cap}")
    n = X.n_simplices(p)
    rows = [[basis[k][i] for k in range(d)] for i in range(n)]
    best = Fraction(0)
    witnesses = []
    for direction in _candidate_directions(rows, d, budget):
        vec = [sum(basis[k][i] * direction[k] for k in range(d)) for i in range(n)]
        z = Chain(p, {i: c for i, c in enumerate(vec) if c != 0})
        if z.is_zero():
            continue
        try:
            cert = min_l1_fill(X, z)
        except NotABoundary:
            return UniformConstantReport(p, INFINITE, method, ((z, None),), False)
        if cert.ratio > best:
            best, witnesses = cert.ratio, [(z, cert)]
        elif cert.ratio == best and len(witnesses) < 4:
            witnesses.append((z, cert))
    return UniformConstantReport(p, best, method, tuple(witnesses), False)


def verify_constant(X, p, K, cycles) -> ConstantCheck:
    """Check that every listed reduced cycle fills within K times its norm."""
    K = Fraction(K)
    worst = Fraction(0)
    worst_cycle = None
    count = 0
    for z in cycles:
        cert = min_l1_fill(X, z)  # NotABoundary propagates
        count += 1
        if z.is_zero():
            continue
        if cert.ratio > worst:
            worst, worst_cycle = cert.ratio, z
    return ConstantCheck(worst <= K, K, worst, worst_cycle, count)
