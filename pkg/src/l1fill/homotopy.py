"""Bounded chain homotopies with certified norms.

Three constructions, all exact:

  carrier_homotopy  inductive synthesis: given maps f, g carried by a
                    monotone carrier with acyclic values, degree p fills
                    (f - g - h d)(sigma) inside the carrier of sigma.
  order_homotopy    the prism homotopy between comparable poset-nerve maps
                    f <= g: h(sigma) = -sum_i (-1)^i
                    (fv_0,...,fv_i, gv_i,...,gv_p), giving dh + hd = f - g
                    with ||h_p|| <= p+1 <= 2(p+1) termwise.
  transfer_filling  a filling of f(z) plus a homotopy f ~ g yields the
                    filling c_f - h(z) of g(z), at cost ||h_p|| per unit of
                    ||z||.

w_pipeline chains everything: a W witness table for Q inside P gives the
lower-bound map f, f(z) cone-fills through the top witness, and the
transferred filling bounds the inclusion's filling ratio by 2p+3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import (
    Chain,
    SemisimplicialSet,
    SimplicialMap,
    boundary,
    nerve_of_poset,
    require_reduced_cycle,
)
from .errors import (
    CarrierViolation,
    FillerFailure,
    IdentityViolation,
    InputError,
    NotABoundary,
    NotComparable,
    TruncationTooShallow,
    WPropertyFailure,
)
from .filling import FillingCertificate, min_l1_fill
from .posets import find_witness_table


class SubComplex:
    """A face-closed set of simplices of an ambient complex."""

    def __init__(self, ambient, members):
        self.ambient = ambient
        cells = set()
        stack = list(members)
        while stack:
            p, j = stack.pop()
            if (p, j) in cells:
                continue
            cells.add((p, j))
            if p >= 1:
                stack.extend((p - 1, ambient.face(p, i, j)) for i in range(p + 1))
        self.cells = frozenset(cells)
        self._restricted = None

    def __contains__(self, cell):
        return cell in self.cells

    def __le__(self, other):
        return self.cells <= other.cells

    def contains_chain(self, z):
        return all((z.level, j) in self.cells for j in z.support())

    def restricted(self):
        """The sub-semisimplicial set on these cells, plus index transports."""
        if self._restricted is not None:
            return self._restricted
        X = self.ambient
        keep = [sorted(j for (q, j) in self.cells if q == p) for p in range(X.max_dim + 1)]
        to_sub = [{j: s for s, j in enumerate(level)} for level in keep]
        levels = [[X.label(p, j) for j in keep[p]] for p in range(X.max_dim + 1)]
        faces = {}
        for p in range(1, X.max_dim + 1):
            for i in range(p + 1):
                faces[(p, i)] = [to_sub[p - 1][X.face(p, i, j)] for j in keep[p]]
        Y = SemisimplicialSet(X.max_dim, levels, faces)
        self._restricted = (Y, keep, to_sub)
        return self._restricted

    def chain_to_sub(self, z):
        _, _, to_sub = self.restricted()
        return Chain(z.level, {to_sub[z.level][j]: a for j, a in z.items()})

    def chain_to_ambient(self, z):
        _, keep, _ = self.restricted()
        return Chain(z.level, {keep[z.level][s]: a for s, a in z.items()})


class Carrier:
    """Monotone assignment of target subcomplexes to source simplices."""

    def __init__(self, source, target, assign):
        self.source = source
        self.target = target
        self._assign = assign
        self._memo = {}

    def at(self, p, j):
        key = (p, j)
        if key not in self._memo:
            sub = self._assign(p, j)
            if sub.ambient is not self.target:
                raise InputError("carrier value lives in the wrong complex")
            self._memo[key] = sub
        return self._memo[key]

    def validate_monotone(self):
        X = self.source
        for p in range(1, X.max_dim + 1):
            for j in range(X.n_simplices(p)):
                big = self.at(p, j)
                for i in range(p + 1):
                    if not (self.at(p - 1, X.face(p, i, j)) <= big):
                        raise CarrierViolation(
                            f"carrier shrinks along face {i} of simplex {j} at level {p}"
                        )

    def carries(self, fmap, name="map"):
        X = self.source
        for p in range(X.max_dim + 1):
            for j in range(X.n_simplices(p)):
                if (p, fmap.apply_index(p, j)) not in self.at(p, j):
                    raise CarrierViolation(
                        f"{name} image of simplex {j} at level {p} leaves its carrier"
                    )


def whole_complex_carrier(source, target):
    full = SubComplex(
        target,
        [(p, j) for p in range(target.max_dim + 1) for j in range(target.n_simplices(p))],
    )
    return Carrier(source, target, lambda p, j: full)


def order_carrier(f, g):
    """Carrier for comparable nerve maps: the sub-nerve on f(sigma) u g(sigma)."""
    X, N = f.source, f.target
    by_vertexset = {}

    def assign(p, j):
        verts = frozenset(N.label(p, f.apply_index(p, j))) | frozenset(
            N.label(p, g.apply_index(p, j))
        )
        if verts not in by_vertexset:
            members = [
                (q, s)
                for q in range(N.max_dim + 1)
                for s in range(N.n_simplices(q))
                if set(N.label(q, s)) <= verts
            ]
            by_vertexset[verts] = SubComplex(N, members)
        return by_vertexset[verts]

    return Carrier(X, N, assign)


class HomotopyTables:
    """Per-level sparse homotopy operators h_p: C_p(source) -> C_{p+1}(target).

    Exposes the exact operator norms (max column l1 norm) and the claimed
    bounds they were synthesized against.
    """

    def __init__(self, f, g, tables, bounds=None):
        self.f = f
        self.g = g
        self.tables = tables  # list over p of {source index j: Chain at level p+1}
        self.bounds = bounds or [None] * len(tables)

    def levels(self):
        return len(self.tables)

    def column(self, p, j):
        return self.tables[p].get(j, Chain.zero(p + 1))

    def apply(self, z):
        p = z.level
        if p >= len(self.tables):
            raise InputError(f"homotopy has no level-{p} table")
        out = Chain.zero(p + 1)
        for j, a in z.items():
            out = out + self.column(p, j).scale(a)
        return out

    def norm(self, p):
        if p >= len(self.tables) or not self.tables[p]:
            return Fraction(0)
        return max(c.norm() for c in self.tables[p].values())

    def verify_identity(self):
        """Exact check of d h + h d = f - g on every basis simplex."""
        X, T = self.f.source, self.f.target
        for p in range(len(self.tables)):
            for j in range(X.n_simplices(p)):
                lhs = boundary(T, self.column(p, j))
                if p >= 1:
                    lhs = lhs + self.apply(X.boundary_of_simplex(p, j))
                rhs = self.f.apply(Chain.unit(p, j)) - self.g.apply(Chain.unit(p, j))
                if lhs != rhs:
                    raise IdentityViolation(
                        -1, -1, (p, j),
                        f"homotopy identity fails on simplex {j} at level {p}",
                    )

    def bound_violations(self):
        out = []
        for p, bound in enumerate(self.bounds):
            if bound is not None and self.norm(p) > bound:
                out.append((p, self.norm(p), bound))
        return out


def lp_filler(sub, z):
    """Fill z by the exact LP restricted to the subcomplex."""
    Y, _, _ = sub.restricted()
    try:
        cert = min_l1_fill(Y, sub.chain_to_sub(z))
    except NotABoundary as exc:
        raise FillerFailure(
            f"carrier value is not acyclic at level {z.level}: {exc}"
        ) from exc
    return sub.chain_to_ambient(cert.filling)


def bottom_vertex_filler(P):
    """Cone filler for sub-nerves of nerve(P) having a bottom vertex.

    Falls back to the LP when no bottom exists.  The left join through the
    bottom element m sends a reduced cycle z to a filling of norm ||z||.
    """

    def fill(sub, z):
        N = sub.ambient
        verts = [N.label(0, j)[0] for (q, j) in sub.cells if q == 0]
        bottoms = [m for m in verts if all(P.leq(m, v) for v in verts)]
        if not bottoms:
            return lp_filler(sub, z)
        m = bottoms[0]
        out = Chain.zero(z.level + 1)
        for j, a in z.items():
            joined = (m,) + N.label(z.level, j)
            out = out + Chain.unit(z.level + 1, N.index_of(z.level + 1, joined), a)
        return out

    return fill


def carrier_homotopy(f, g, carrier, filler=None, constants=None, assert_bounds=True):
    """Inductive homotopy synthesis along an acyclic carrier.

    constants is the per-level list K_p certifying the carrier values fill
    within ratio K_p (1 <= K_p <= K_{p+1}); the output norms are checked
    against 2(p+1) K_p^p when assert_bounds is set.
    """
    if f.source is not g.source or f.target is not g.target:
        raise InputError("f and g must share source and target")
    X, T = f.source, f.target
    if filler is None:
        filler = lp_filler
    top = min(X.max_dim, T.max_dim - 1)
    if constants is None:
        constants = [Fraction(1)] * (top + 1)
    constants = [Fraction(K) for K in constants]
    for a, b in zip(constants, constants[1:]):
        if not (1 <= a <= b):
            raise InputError("constants must satisfy 1 <= K_p <= K_{p+1}")
    if constants and constants[0] < 1:
        raise InputError("constants must satisfy 1 <= K_p")
    carrier.validate_monotone()
    carrier.carries(f, "f")
    carrier.carries(g, "g")
    tables = []
    bounds = []
    h = HomotopyTables(f, g, tables, bounds)
    for p in range(top + 1):
        prev = HomotopyTables(f, g, tables[:p], bounds[:p])
        table = {}
        tables.append(table)
        bounds.append(2 * (p + 1) * constants[p] ** p)
        for j in range(X.n_simplices(p)):
            e = Chain.unit(p, j)
            w = f.apply(e) - g.apply(e)
            if p >= 1:
                w = w - prev.apply(X.boundary_of_simplex(p, j))
            if w.is_zero():
                continue
            sub = carrier.at(p, j)
            if not sub.contains_chain(w):
                raise CarrierViolation(
                    f"defect of simplex {j} at level {p} leaves its carrier"
                )
            c = filler(sub, w)
            if boundary(T, c) != w:
                raise FillerFailure(
                    f"filler returned a non-filling at level {p}, simplex {j}"
                )
            if not sub.contains_chain(c):
                raise FillerFailure(
                    f"filler left the carrier at level {p}, simplex {j}"
                )
            table[j] = c
    h.verify_identity()
    if assert_bounds:
        bad = h.bound_violations()
        if bad:
            p, achieved, bound = bad[0]
            raise AssertionError(
                f"homotopy norm {achieved} exceeds 2(p+1)K^p = {bound} at level {p}"
            )
    return h


def order_homotopy(X, P, f, g):
    """Prism homotopy between nerve maps with f(x) <= g(x) on vertices.

    Exact output: d h + h d = f - g, every h-image lies in the sub-nerve on
    f(sigma) u g(sigma), and ||h_p|| <= p+1 <= 2(p+1).
    """
    if f.source is not g.source or f.target is not g.target:
        raise InputError("f and g must share source and target")
    if f.source is not X:
        raise InputError("X must be the source of f and g")
    N = f.target
    for v in range(X.n_simplices(0)):
        fx = N.label(0, f.apply_index(0, v))[0]
        gx = N.label(0, g.apply_index(0, v))[0]
        if not P.leq(fx, gx):
            raise NotComparable(X.label(0, v), fx, gx)
    top = min(X.max_dim, N.max_dim - 1)
    tables = []
    bounds = []
    for p in range(top + 1):
        table = {}
        for j in range(X.n_simplices(p)):
            a = N.label(p, f.apply_index(p, j))
            b = N.label(p, g.apply_index(p, j))
            col = Chain.zero(p + 1)
            sign = -1
            for i in range(p + 1):
                prism = a[: i + 1] + b[i:]
                col = col + Chain.unit(p + 1, N.index_of(p + 1, prism), sign)
                sign = -sign
            if not col.is_zero():
                table[j] = col
        tables.append(table)
        bounds.append(Fraction(2 * (p + 1)))
    h = HomotopyTables(f, g, tables, bounds)
    h.verify_identity()
    bad = h.bound_violations()
    if bad:
        raise AssertionError(f"prism norm exceeds 2(p+1): {bad[0]}")
    return h


def join_fill_right(N, z, apex):
    """Fill a reduced nerve cycle by appending a dominating apex.

    c = (-1)^(p+1) sum_j a_j (tuple_j, apex) satisfies boundary(c) = z and
    ||c|| <= ||z||; every entry of every tuple in z must be <= apex in the
    nerve's poset (the index lookup fails otherwise).
    """
    p = z.level
    if N.max_dim < p + 1:
        raise TruncationTooShallow(
            f"joining at level {p} needs level {p + 1}, complex stops at {N.max_dim}"
        )
    sign = (-1) ** (p + 1)
    out = Chain.zero(p + 1)
    for j, a in z.items():
        joined = N.label(p, j) + (apex,)
        try:
            idx = N.index_of(p + 1, joined)
        except KeyError:
            raise InputError(
                f"{joined!r} is not a simplex: apex fails to dominate"
            ) from None
        out = out + Chain.unit(p + 1, idx, sign * a)
    return out


@dataclass(frozen=True)
class PipelineResult:
    filling: Chain
    norm: Fraction
    ratio: Fraction
    bound: Fraction
    cycle_in_ambient: Chain
    nerve: object
    nerve_q: object
    table: object
    homotopy: HomotopyTables
    cone_part: Chain

    @property
    def optimal(self):
        return False


def transfer_filling(f_cert, h, z) -> FillingCertificate:
    """Convert a filling of f(z) into one of g(z) via the homotopy.

    c_g = c_f - h(z); exact postconditions asserted.
    """
    c_f = f_cert.filling if isinstance(f_cert, FillingCertificate) else f_cert
    T = h.f.target
    fz = h.f.apply(z)
    gz = h.g.apply(z)
    if boundary(T, c_f) != fz:
        raise InputError("supplied certificate does not fill f(z)")
    hz = h.apply(z)
    lhs = boundary(T, hz)
    if z.level >= 1:
        lhs = lhs + h.apply(boundary(h.f.source, z))
    if lhs != fz - gz:
        raise IdentityViolation(
            -1, -1, None, "homotopy identity fails on the given cycle"
        )
    c_g = c_f - hz
    if boundary(T, c_g) != gz:
        raise AssertionError("transferred chain does not fill g(z)")
    zn = z.norm()
    norm = c_g.norm()
    if zn == 0:
        return FillingCertificate(c_g, norm, Fraction(0), False, ())
    ratio = norm / zn
    k_f = f_cert.ratio if isinstance(f_cert, FillingCertificate) else c_f.norm() / zn
    if ratio > k_f + h.norm(z.level):
        raise AssertionError("transfer exceeded the K_f + ||h_p|| bound")
    return FillingCertificate(c_g, norm, ratio, False, ())


def _induced_nerve_map(NQ, NP, vmap):
    level_maps = []
    for p in range(NQ.max_dim + 1):
        level_maps.append(
            [NP.index_of(p, tuple(vmap(e) for e in NQ.label(p, j)))
             for j in range(NQ.n_simplices(p))]
        )
    return SimplicialMap(NQ, NP, level_maps)


def w_pipeline(P, Q, z, max_q=5, check_poset=True):
    """Constructive filling of a subposet-nerve cycle inside nerve(P).

    Requires the W property: refuses (WPropertyFailure) when P fails the
    subposet check or when Q itself has no witness table.  The output fills
    the image of z in nerve(P) with ratio <= 2p+3, asserted exactly, and is
    generally not optimal (compare min_l1_fill on the ambient nerve).
    """
    from .posets import check_w

    if check_poset:
        report = check_w(P, max_q)
        if not report.holds:
            raise WPropertyFailure(report.failure[0], report.failure[1])
    table, bad = find_witness_table(P, Q)
    if table is None:
        raise WPropertyFailure(tuple(Q), bad)
    table.validate(P)
    p = z.level
    D = p + 1
    PQ = P.restrict(Q)
    NQ = nerve_of_poset(PQ, D)
    NP = nerve_of_poset(P, D)
    require_reduced_cycle(NQ, z)
    witness = {}
    for x in PQ.elements:
        I = frozenset(i for i, m in enumerate(table.minimals, 1) if P.leq(m, x))
        witness[x] = table.witness[I]
    f = _induced_nerve_map(NQ, NP, witness.__getitem__)
    incl = _induced_nerve_map(NQ, NP, lambda e: e)
    apex = table.witness[frozenset(range(1, len(table.minimals) + 1))]
    c_f = join_fill_right(NP, f.apply(z), apex)
    if boundary(NP, c_f) != f.apply(z):
        raise AssertionError("join filling failed on f(z)")
    h = order_homotopy(NQ, P, f, incl)
    cycle_in_P = incl.apply(z)
    c = c_f - h.apply(z)
    if boundary(NP, c) != cycle_in_P:
        raise AssertionError("pipeline filling does not bound the cycle")
    zn = z.norm()
    bound = Fraction(2 * p + 3)
    ratio = c.norm() / zn if zn else Fraction(0)
    if ratio > bound:
        raise AssertionError(f"pipeline ratio {ratio} exceeds {bound}")
    return PipelineResult(
        c, c.norm(), ratio, bound, cycle_in_P, NP, NQ, table, h, c_f
    )
