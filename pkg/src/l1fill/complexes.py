"""Finite truncated semisimplicial sets and exact rational chains.

A complex holds, per dimension p <= max_dim, an ordered list of simplex
labels and total face maps d_i : level p -> level p-1 for 0 <= i <= p,
subject to d_i d_j = d_{j-1} d_i for i < j.  There are no degeneracy
operators, and degenerate simplices (such as the chain (a,a) in a poset
nerve) are honest basis elements: no normalization quotient is taken, which
keeps the l1 norm literal.

The boundary operator is fixed once and for all as

    boundary(z) = sum_i (-1)^i d_i(z),

and in degree 0 the augmentation (sum of coefficients) plays the role of the
boundary, so "reduced cycle" means boundary 0 in positive degrees and
coefficient sum 0 in degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DanglingFace,
    IdentityViolation,
    InputError,
    LevelMismatch,
    NoIdentity,
    NotACycle,
    NotAssociative,
)


@dataclass(frozen=True)
class SimplexId:
    level: int
    index: int


def parse_fraction(text):
    """Accept "num/den" strings, ints, and Fractions."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text))


def format_fraction(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


class Chain:
    """Sparse formal rational combination of same-level simplices.

    Zero coefficients are never stored.  The l1 norm is the exact sum of
    absolute values of the coefficients.
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs=None):
        self.level = level
        clean = {}
        for idx, c in (coeffs or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[idx] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, level):
        return cls(level, {})

    @classmethod
    def unit(cls, level, index, coeff=1):
        return cls(level, {index: Fraction(coeff)})

    def norm(self):
        return sum((abs(c) for c in self.coeffs.values()), Fraction(0))

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    def __add__(self, other):
        if self.level != other.level:
            raise LevelMismatch(f"cannot add levels {self.level} and {other.level}")
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = out.get(idx, Fraction(0)) + c
            if s == 0:
                out.pop(idx, None)
            else:
                out[idx] = s
        return Chain(self.level, out)

    def __neg__(self):
        return Chain(self.level, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = Fraction(factor)
        if factor == 0:
            return Chain.zero(self.level)
        return Chain(self.level, {i: c * factor for i, c in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.level == other.level
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.level, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        terms = ", ".join(f"{i}: {format_fraction(c)}" for i, c in self.items())
        return f"Chain(level={self.level}, {{{terms}}})"

    def to_dict(self):
        return {
            "level": self.level,
            "coeffs": [[i, format_fraction(c)] for i, c in self.items()],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            level = int(data["level"])
            coeffs = {}
            for idx, text in data["coeffs"]:
                coeffs[int(idx)] = coeffs.get(int(idx), Fraction(0)) + parse_fraction(text)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad chain data: {exc}") from exc
        return cls(level, coeffs)


class SemisimplicialSet:
    """Validated finite truncated semisimplicial set.

    levels[p] is the ordered list of labels at dimension p; faces[(p, i)] is
    the total map level p -> level p-1 as a list of target indices.  Labels
    must be unique within a level so that index lookup is well defined.
    Instances are immutable by convention once constructed.
    """

    def __init__(self, max_dim, levels, faces, validate=True):
        self.max_dim = max_dim
        self.levels = [list(l) for l in levels]
        self.faces = {k: list(v) for k, v in faces.items()}
        self._index = None
        if validate:
            self.validate()

    def n_simplices(self, p):
        if 0 <= p <= self.max_dim:
            return len(self.levels[p])
        return 0

    def total_simplices(self):
        return sum(len(l) for l in self.levels)

    def face(self, p, i, j):
        return self.faces[(p, i)][j]

    def label(self, p, j):
        return self.levels[p][j]

    def index_of(self, p, label):
        if self._index is None:
            self._index = [
                {lab: j for j, lab in enumerate(level)} for level in self.levels
            ]
        return self._index[p][label]

    def has_label(self, p, label):
        try:
            self.index_of(p, label)
            return True
        except KeyError:
            return False

    def validate(self):
        if self.max_dim < 0 or len(self.levels) != self.max_dim + 1:
            raise InputError("levels list does not match max_dim")
        for p, level in enumerate(self.levels):
            if len(set(level)) != len(level):
                raise InputError(f"duplicate labels at level {p}")
        for p in range(1, self.max_dim + 1):
            n_here, n_below = len(self.levels[p]), len(self.levels[p - 1])
            for i in range(p + 1):
                table = self.faces.get((p, i))
                if table is None:
                    if n_here:
                        raise InputError(f"missing face table d_{i} at level {p}")
                    continue
                if len(table) != n_here:
                    raise InputError(f"face table d_{i} at level {p} has wrong length")
                for j, target in enumerate(table):
                    if not 0 <= target < n_below:
                        raise DanglingFace(p, i, self.levels[p][j], target)
        for p in range(2, self.max_dim + 1):
            for j in range(len(self.levels[p])):
                for jj in range(1, p + 1):
                    for i in range(jj):
                        left = self.face(p - 1, i, self.face(p, jj, j))
                        right = self.face(p - 1, jj - 1, self.face(p, i, j))
                        if left != right:
                            raise IdentityViolation(i, jj, self.levels[p][j])

    def boundary_of_simplex(self, p, j):
        """The chain sum_i (-1)^i d_i of a single level-p simplex."""
        coeffs = {}
        for i in range(p + 1):
            t = self.face(p, i, j)
            c = coeffs.get(t, Fraction(0)) + (1 if i % 2 == 0 else -1)
            if c == 0:
                coeffs.pop(t, None)
            else:
                coeffs[t] = c
        return Chain(p - 1, coeffs)

    def vertex_tuple(self, p, j):
        """Vertices (v_0, ..., v_p) of a simplex, as level-0 indices.

        v_i is obtained by the face words d_1^{p-i} d_0^i; computed by the
        recursion: the first p vertices are those of d_p, the last is the
        final vertex of d_0.
        """
        if p == 0:
            return (j,)
        init = self.vertex_tuple(p - 1, self.face(p, p, j))
        last = self.vertex_tuple(p - 1, self.face(p, 0, j))[-1]
        return init + (last,)

    def to_dict(self):
        return {
            "max_dim": self.max_dim,
            "levels": [[_label_to_json(l) for l in level] for level in self.levels],
            "faces": {
                f"{p},{i}": list(table)
                for (p, i), table in sorted(self.faces.items())
            },
        }


def _label_to_json(label):
    if isinstance(label, tuple):
        return list(_label_to_json(x) for x in label)
    return label


def _label_from_json(label):
    if isinstance(label, list):
        return tuple(_label_from_json(x) for x in label)
    return label


def build_complex(data) -> SemisimplicialSet:
    """Build and validate a complex from its structured description.

    The description is the JSON-compatible dict
    {"max_dim": D, "levels": [[labels], ...], "faces": {"p,i": [indices]}}.
    Raises IdentityViolation or DanglingFace on a bad face table.
    """
    try:
        max_dim = int(data["max_dim"])
        levels = [[_label_from_json(l) for l in level] for level in data["levels"]]
        raw_faces = data.get("faces", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad complex data: {exc}") from exc
    faces = {}
    for key, table in raw_faces.items():
        if isinstance(key, tuple):
            p, i = key
        else:
            try:
                p_text, i_text = str(key).split(",")
                p, i = int(p_text), int(i_text)
            except ValueError as exc:
                raise InputError(f"bad face key {key!r}") from exc
        faces[(p, i)] = [int(t) for t in table]
    return SemisimplicialSet(max_dim, levels, faces)


def check_chain(X, z, expect_level=None):
    if expect_level is not None and z.level != expect_level:
        raise LevelMismatch(f"chain has level {z.level}, expected {expect_level}")
    if not 0 <= z.level <= X.max_dim:
        raise LevelMismatch(f"chain level {z.level} outside complex of dimension {X.max_dim}")
    n = X.n_simplices(z.level)
    for idx in z.coeffs:
        if not 0 <= idx < n:
            raise LevelMismatch(f"chain references index {idx} outside level {z.level}")


def boundary(X, z):
    """The boundary sum_i (-1)^i d_i(z); requires z.level >= 1."""
    check_chain(X, z)
    if z.level < 1:
        raise LevelMismatch("boundary needs level >= 1; use augment in degree 0")
    out = Chain.zero(z.level - 1)
    for j, c in z.coeffs.items():
        out = out + X.boundary_of_simplex(z.level, j).scale(c)
    return out


def augment(X, z):
    """Sum of coefficients of a degree-0 chain; zero iff z is a reduced cycle."""
    check_chain(X, z, expect_level=0)
    return sum(z.coeffs.values(), Fraction(0))


def is_reduced_cycle(X, z):
    check_chain(X, z)
    if z.level == 0:
        return augment(X, z) == 0
    return boundary(X, z).is_zero()


def require_reduced_cycle(X, z):
    check_chain(X, z)
    if z.level == 0:
        a = augment(X, z)
        if a != 0:
            raise NotACycle(f"augmentation is {format_fraction(a)}, not 0", residue=a)
    else:
        r = boundary(X, z)
        if not r.is_zero():
            raise NotACycle("boundary is nonzero", residue=r)


class SimplicialMap:
    """Level-wise total map between complexes commuting with every face map."""

    def __init__(self, source, target, level_maps, validate=True):
        self.source = source
        self.target = target
        self.level_maps = [list(m) for m in level_maps]
        if validate:
            self.validate()

    def validate(self):
        if len(self.level_maps) < self.source.max_dim + 1:
            raise InputError("map must cover every source level")
        for p in range(self.source.max_dim + 1):
            m = self.level_maps[p]
            if len(m) != self.source.n_simplices(p):
                raise InputError(f"level {p} map has wrong length")
            n_target = self.target.n_simplices(p)
            for img in m:
                if not 0 <= img < n_target:
                    raise InputError(f"level {p} image {img} out of range")
        for p in range(1, self.source.max_dim + 1):
            for j in range(self.source.n_simplices(p)):
                for i in range(p + 1):
                    via_source = self.level_maps[p - 1][self.source.face(p, i, j)]
                    via_target = self.target.face(p, i, self.level_maps[p][j])
                    if via_source != via_target:
                        raise IdentityViolation(
                            i, p, self.source.levels[p][j],
                            message=f"map fails to commute with d_{i} at level {p}",
                        )

    def apply_index(self, p, j):
        return self.level_maps[p][j]

    def apply(self, z):
        out = {}
        m = self.level_maps[z.level]
        for j, c in z.coeffs.items():
            t = m[j]
            s = out.get(t, Fraction(0)) + c
            if s == 0:
                out.pop(t, None)
            else:
                out[t] = s
        return Chain(z.level, out)

    @classmethod
    def identity(cls, X):
        return cls(X, X, [list(range(X.n_simplices(p))) for p in range(X.max_dim + 1)],
                   validate=False)


class Cone(SemisimplicialSet):
    """Cone CX over a complex X with a fresh apex vertex.

    Level p of CX lists the level-p simplices of X first, then the joins
    (apex, sigma) of the level-(p-1) simplices of X, in base order.  Face
    maps on joins: d_0(v, sigma) = sigma and d_i(v, sigma) = (v, d_{i-1}
    sigma), where the join of a vertex faces to the apex under d_1.
    """

    def __init__(self, base, apex_label):
        self.base = base
        self.apex_label = apex_label
        if base.levels and apex_label in base.levels[0]:
            raise InputError(f"apex label {apex_label!r} already present")
        levels = []
        faces = {}
        new_dim = base.max_dim + 1
        levels.append(list(base.levels[0]) + [apex_label])
        self.apex = len(base.levels[0])
        for p in range(1, new_dim + 1):
            base_here = base.levels[p] if p <= base.max_dim else []
            joins = [(apex_label, lab) for lab in base.levels[p - 1]]
            levels.append(list(base_here) + joins)
            n_base_here = len(base_here)
            for i in range(p + 1):
                table = []
                if p <= base.max_dim:
                    table.extend(base.faces.get((p, i), []))
                for j in range(len(base.levels[p - 1])):
                    if i == 0:
                        table.append(j)
                    elif p == 1:
                        table.append(self.apex)
                    else:
                        n_base_below = len(base.levels[p - 1])
                        table.append(n_base_below + base.face(p - 1, i - 1, j))
                faces[(p, i)] = table
            del n_base_here
        super().__init__(new_dim, levels, faces)

    def base_count(self, p):
        """Number of original simplices at level p of CX."""
        return self.base.n_simplices(p)

    def join_index(self, p, base_index):
        """Index in CX at level p+1 of the join with a base level-p simplex."""
        return self.base.n_simplices(p + 1) + base_index


def cone(X, apex_label="*"):
    """Cone over X, truncated one dimension higher."""
    return Cone(X, apex_label)


def cone_fill(CX, z):
    """Fill a reduced cycle of a cone by the cone contraction.

    Joins every original simplex in z with the apex and kills join
    simplices.  The output c always satisfies boundary(c) = z with
    norm(c) <= norm(z), and norm(c) = norm(z) exactly whenever z is
    supported on the original simplices (as in every corpus cycle fed to
    the acceptance checks).
    """
    if not isinstance(CX, Cone):
        raise InputError("cone_fill needs the cone structure; build the complex with cone()")
    require_reduced_cycle(CX, z)
    if z.is_zero():
        return Chain.zero(z.level + 1)
    p = z.level
    coeffs = {}
    n_base = CX.base_count(p)
    for j, c in z.coeffs.items():
        if j < n_base:
            coeffs[CX.join_index(p, j)] = c
    return Chain(p + 1, coeffs)


def nerve_of_poset(P, D):
    """Nerve of a finite poset truncated at dimension D.

    Level p enumerates all weakly increasing (p+1)-tuples of elements
    (repeats allowed), lexicographically in element order; d_i deletes
    entry i.  Labels are the tuples themselves.
    """
    if D < 0:
        raise InputError("truncation dimension must be >= 0")
    levels = [[(e,) for e in P.elements]]
    for p in range(1, D + 1):
        level = []
        for t in levels[p - 1]:
            last = t[-1]
            for e in P.elements:
                if P.leq(last, e):
                    level.append(t + (e,))
        levels.append(level)
    index = [{t: j for j, t in enumerate(level)} for level in levels]
    faces = {}
    for p in range(1, D + 1):
        for i in range(p + 1):
            faces[(p, i)] = [
                index[p - 1][t[:i] + t[i + 1:]] for t in levels[p]
            ]
    return SemisimplicialSet(D, levels, faces)


def nerve_of_monoid(elements, table, D):
    """Nerve of a finite monoid given by its composition table.

    elements is an ordered list of labels; table[(a, b)] is the label of the
    product a.b.  Level p lists all p-tuples (level 0 is a single point);
    d_0 drops the first entry, d_p the last, and an inner d_i multiplies the
    adjacent pair (g_i, g_{i+1}).
    """
    if D < 0:
        raise InputError("truncation dimension must be >= 0")
    elems = list(elements)
    prod = {}
    for a in elems:
        for b in elems:
            try:
                prod[(a, b)] = table[(a, b)]
            except KeyError as exc:
                raise InputError(f"composition table misses {(a, b)}") from exc
            if prod[(a, b)] not in elems:
                raise InputError(f"product {prod[(a, b)]!r} is not an element")
    identity = None
    for e in elems:
        if all(prod[(e, a)] == a and prod[(a, e)] == a for a in elems):
            identity = e
            break
    if identity is None:
        raise NoIdentity("composition table has no two-sided identity")
    for a in elems:
        for b in elems:
            for c in elems:
                if prod[(prod[(a, b)], c)] != prod[(a, prod[(b, c)])]:
                    raise NotAssociative(f"({a}.{b}).{c} != {a}.({b}.{c})")

    levels = [[()]]
    for p in range(1, D + 1):
        levels.append([t + (e,) for t in levels[p - 1] for e in elems])
    index = [{t: j for j, t in enumerate(level)} for level in levels]
    faces = {}
    for p in range(1, D + 1):
        for i in range(p + 1):
            col = []
            for t in levels[p]:
                if i == 0:
                    ft = t[1:]
                elif i == p:
                    ft = t[:-1]
                else:
                    ft = t[: i - 1] + (prod[(t[i - 1], t[i])],) + t[i + 1:]
                col.append(index[p - 1][ft])
            faces[(p, i)] = col
    return SemisimplicialSet(D, levels, faces)
