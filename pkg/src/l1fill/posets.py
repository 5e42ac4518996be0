"""Finite posets, the W witness property, and sequence interweaving.

A finite poset P satisfies W when every subposet Q (here: up to a size cap)
admits a witness table: writing x_1, ..., x_k for the minimal elements of Q,
there is a choice of y_I in P for every nonempty I subset of {1..k} with

  (1) I subset of J  implies  y_I <= y_J, and
  (2) y_I <= x for every x in Q dominating all x_i, i in I.

The table induces an order map x -> y_{I_x} with I_x = {i : x_i <= x},
which is a lower bound for the inclusion Q -> P; this is what makes the
nerve of P uniformly fillable (see homotopy.w_pipeline).

The second half of the module works with cofinal increasing sequences in a
preorder with a contained equivalence, and builds the deterministic greedy
interweaving of k such sequences into one sequence y whose residue-class
subsequences y^I revisit the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import HorizonExhausted, InputError, InvalidWitness


class FinitePoset:
    """Finite poset given by generating relations; the closure is stored.

    >>> P = FinitePoset(["a", "b", "c"], [("a", "c"), ("b", "c")])
    >>> P.leq("a", "c"), P.leq("a", "b")
    (True, False)
    """

    def __init__(self, elements, leq_pairs):
        self.elements = list(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise InputError("duplicate poset elements")
        n = len(self.elements)
        rel = [[i == j for j in range(n)] for i in range(n)]
        for a, b in leq_pairs:
            if a not in self._index or b not in self._index:
                raise InputError(f"relation {a!r} <= {b!r} mentions unknown elements")
            rel[self._index[a]][self._index[b]] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    row_i, row_k = rel[i], rel[k]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if rel[i][j] and rel[j][i]:
                    raise InputError(
                        f"not antisymmetric: {self.elements[i]!r} <= "
                        f"{self.elements[j]!r} <= {self.elements[i]!r}"
                    )
        self._rel = rel

    def __len__(self):
        return len(self.elements)

    def __contains__(self, e):
        return e in self._index

    def leq(self, a, b):
        return self._rel[self._index[a]][self._index[b]]

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def down_set(self, a):
        return [x for x in self.elements if self.leq(x, a)]

    def up_set(self, a):
        return [x for x in self.elements if self.leq(a, x)]

    def minimal_elements(self, subset=None):
        pool = list(subset) if subset is not None else self.elements
        return [x for x in pool if not any(self.lt(q, x) for q in pool)]

    def has_bottom(self):
        return any(all(self.leq(m, x) for x in self.elements) for m in self.elements)

    def restrict(self, subset):
        keep = [e for e in self.elements if e in set(subset)]
        pairs = [(a, b) for a in keep for b in keep if self.leq(a, b)]
        return FinitePoset(keep, pairs)

    def to_dict(self):
        pairs = [
            [a, b]
            for a in self.elements
            for b in self.elements
            if a != b and self.leq(a, b)
        ]
        return {"elements": list(self.elements), "leq": pairs}

    @classmethod
    def from_dict(cls, data):
        try:
            elements = list(data["elements"])
            pairs = [tuple(p) for p in data["leq"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed poset data: {exc}") from exc
        for p in pairs:
            if len(p) != 2:
                raise InputError(f"relation {p!r} is not a pair")
        return cls(elements, pairs)

    def __repr__(self):
        return f"FinitePoset({self.elements!r})"


@dataclass(frozen=True)
class WWitnessTable:
    subposet: tuple
    minimals: tuple
    witness: dict  # frozenset of 1-based minimal indices -> element of P

    def validate(self, P):
        k = len(self.minimals)
        sets = [frozenset(c) for r in range(1, k + 1) for c in combinations(range(1, k + 1), r)]
        for I in sets:
            if I not in self.witness:
                raise InvalidWitness(f"missing witness for I = {sorted(I)}")
        for I in sets:
            y = self.witness[I]
            for J in sets:
                if I < J and not P.leq(self.witness[I], self.witness[J]):
                    raise InvalidWitness(
                        f"monotonicity fails: y_{sorted(I)} = {self.witness[I]!r} "
                        f"is not below y_{sorted(J)} = {self.witness[J]!r}"
                    )
            for x in self.subposet:
                if all(P.leq(self.minimals[i - 1], x) for i in I) and not P.leq(y, x):
                    raise InvalidWitness(
                        f"domination fails: y_{sorted(I)} = {y!r} is not below {x!r}"
                    )


@dataclass(frozen=True)
class WReport:
    holds: bool
    max_q: int
    exhaustive: bool
    tables: dict = field(default_factory=dict)  # sorted Q tuple -> WWitnessTable
    failure: tuple = None  # (Q tuple, failing I frozenset)


def _nonempty_subsets(k):
    out = []
    for r in range(1, k + 1):
        out.extend(frozenset(c) for c in combinations(range(1, k + 1), r))
    return out


def find_witness_table(P, Q):
    """Exhaustive witness search for one subposet.

    Returns (WWitnessTable, None) on success, (None, failing I) when no
    assignment exists; the reported I is the deepest index set the
    backtracking could never satisfy.
    """
    Q = [e for e in P.elements if e in set(Q)]
    minimals = tuple(P.minimal_elements(Q))
    k = len(minimals)
    order = _nonempty_subsets(k)
    domains = []
    for I in order:
        dominated = [x for x in Q if all(P.leq(minimals[i - 1], x) for i in I)]
        domains.append([y for y in P.elements if all(P.leq(y, x) for x in dominated)])
    assignment = {}
    furthest = 0

    def extend(pos):
        nonlocal furthest
        if pos == len(order):
            return True
        furthest = max(furthest, pos)
        I = order[pos]
        for y in domains[pos]:
            if all(P.leq(assignment[I - {i}], y) for i in I if len(I) > 1):
                assignment[I] = y
                if extend(pos + 1):
                    return True
                del assignment[I]
        return False

    if extend(0):
        return WWitnessTable(tuple(Q), minimals, dict(assignment)), None
    return None, order[furthest]


def check_w(P, max_q=5):
    """Decide the W property over all subposets of size <= max_q.

    Stops at the first failing subposet; tables for every passing subposet
    are returned otherwise.
    """
    cap = min(max_q, len(P))
    tables = {}
    for size in range(1, cap + 1):
        for Q in combinations(P.elements, size):
            table, bad = find_witness_table(P, Q)
            if table is None:
                return WReport(False, max_q, max_q >= len(P), tables, (Q, bad))
            tables[Q] = table
    return WReport(True, max_q, max_q >= len(P), tables, None)


def witness_map(P, Q, table, D):
    """The nerve map induced by x -> y_{I_x}, as a simplicial map.

    I_x collects the minimal elements of Q below x; the table's invariants
    make the vertex map order-preserving with f(x) <= x, so weakly
    increasing chains go to weakly increasing chains.
    """
    from .complexes import SimplicialMap, nerve_of_poset

    table.validate(P)
    PQ = P.restrict(Q)
    vmap = {}
    for x in PQ.elements:
        I = frozenset(i for i, m in enumerate(table.minimals, 1) if P.leq(m, x))
        if not I:
            raise InvalidWitness(f"{x!r} dominates no minimal element of Q")
        vmap[x] = table.witness[I]
        if not P.leq(vmap[x], x):
            raise InvalidWitness(f"witness {vmap[x]!r} is not below {x!r}")
    NQ = nerve_of_poset(PQ, D)
    NP = nerve_of_poset(P, D)
    level_maps = []
    for p in range(D + 1):
        level_maps.append(
            [NP.index_of(p, tuple(vmap[e] for e in NQ.label(p, j)))
             for j in range(NQ.n_simplices(p))]
        )
    return SimplicialMap(NQ, NP, level_maps)


def inclusion_map(P, Q, D):
    """The nerve map of the inclusion of a subposet."""
    from .complexes import SimplicialMap, nerve_of_poset

    NQ = nerve_of_poset(P.restrict(Q), D)
    NP = nerve_of_poset(P, D)
    level_maps = [
        [NP.index_of(p, NQ.label(p, j)) for j in range(NQ.n_simplices(p))]
        for p in range(D + 1)
    ]
    return SimplicialMap(NQ, NP, level_maps)


class SequenceSystem:
    """A universe with a preorder and a contained equivalence relation.

    leq and equiv are element oracles; streams is a dict of named element
    generators (1-based index -> element) used by the CLI.
    """

    def __init__(self, name, leq, equiv=None, streams=None):
        self.name = name
        self._leq = leq
        self._equiv = equiv if equiv is not None else (lambda x, y: x == y)
        self.streams = dict(streams or {})

    def leq(self, x, y):
        return self._leq(x, y)

    def equiv(self, x, y):
        if self._equiv(x, y):
            # the equivalence must sit inside the preorder both ways
            if not (self._leq(x, y) and self._leq(y, x)):
                raise InputError(
                    f"equivalence of {x!r} and {y!r} is not contained in the preorder"
                )
            return True
        return False

    def strictly_above(self, x, y):
        return self._leq(y, x) and not self._leq(x, y)

    def sequence(self, spec):
        """Build a CofinalSequence from a named or literal spec.

        Accepts a name registered in streams, "name:arg:..." forms, or an
        explicit comma-separated integer list "list:2,4,6".
        """
        if spec.startswith("list:"):
            values = [int(s) for s in spec[5:].split(",") if s]
            if not values:
                raise InputError("empty explicit sequence")
            return CofinalSequence(spec, values.__getitem__, self, offset=1, limit=len(values))
        head, _, rest = spec.partition(":")
        if head not in self.streams:
            raise InputError(f"unknown sequence {spec!r} for system {self.name!r}")
        maker = self.streams[head]
        args = [int(s) for s in rest.split(":") if s] if rest else []
        fn = maker(*args)
        return CofinalSequence(spec, fn, self)


class CofinalSequence:
    """Lazily materialized increasing sequence of pairwise inequivalent elements.

    Indexing is 1-based.  Every newly materialized entry is checked against
    the already materialized prefix: it must dominate its predecessor and be
    inequivalent to every earlier entry.  Cofinality itself is only ever
    budget-checked by consumers.
    """

    def __init__(self, name, fn, system, offset=0, limit=None):
        self.name = name
        self._fn = fn
        self.system = system
        self._offset = offset
        self._limit = limit
        self._cache = []

    def __getitem__(self, n):
        if n < 1:
            raise InputError(f"sequence index {n} out of range (1-based)")
        while len(self._cache) < n:
            idx = len(self._cache) + 1
            if self._limit is not None and idx > self._limit:
                raise HorizonExhausted(
                    f"sequence {self.name!r} has only {self._limit} entries"
                )
            value = self._fn(idx - self._offset)
            if self._cache and not self.system.leq(self._cache[-1], value):
                raise InputError(
                    f"sequence {self.name!r} not increasing at index {idx}"
                )
            for prev in self._cache:
                if self.system.equiv(prev, value):
                    raise InputError(
                        f"sequence {self.name!r} repeats {value!r} (up to equivalence)"
                    )
            self._cache.append(value)
        return self._cache[n - 1]

    def prefix(self, n):
        return [self[i] for i in range(1, n + 1)]


def integer_line():
    """Integers with the usual order and equality."""
    streams = {
        "naturals": lambda: (lambda n: n),
        "evens": lambda: (lambda n: 2 * n),
        "odds": lambda: (lambda n: 2 * n - 1),
        "multiples": lambda k: (lambda n: k * n),
        "arith": lambda a, d: (lambda n: a + (n - 1) * d),
    }
    return SequenceSystem("integer-line", lambda x, y: x <= y, None, streams)


def integer_blocks(block=10):
    """Integers compared by block index; same block means equivalent."""
    streams = {
        "naturals": lambda: (lambda n: n),
        "blocks": lambda start, step: (lambda n: start + (n - 1) * step * block),
        "multiples": lambda k: (lambda n: k * n),
    }
    return SequenceSystem(
        f"integer-blocks-{block}",
        lambda x, y: x // block <= y // block,
        lambda x, y: x // block == y // block,
        streams,
    )


def product_system():
    """Pairs of integers, componentwise order."""
    streams = {
        "diag": lambda: (lambda n: (n, n)),
        "scaled": lambda a, b: (lambda n: (a * n, b * n)),
    }
    return SequenceSystem(
        "product",
        lambda x, y: x[0] <= y[0] and x[1] <= y[1],
        None,
        streams,
    )


BUILTIN_SYSTEMS = {
    "integer-line": integer_line,
    "integer-blocks": integer_blocks,
    "product": product_system,
}


@dataclass(frozen=True)
class InterweaveResult:
    y: tuple
    sources: tuple  # (sequence number j, index p) per entry of y, 1-based
    y_I: dict  # frozenset I -> tuple of y-values at positions with residue in I

    def subsequence(self, I):
        return self.y_I[frozenset(I)]


def _coincidence_bound(sys, seq, value, horizon):
    """Largest index of seq holding an element equivalent to value (0 if none).

    Entries strictly above value can hide no later coincidence, so the scan
    stops at the first one.
    """
    bound = 0
    for idx in range(1, horizon + 1):
        entry = seq[idx]
        if sys.equiv(entry, value):
            bound = idx
        elif sys.strictly_above(entry, value):
            return bound
    raise HorizonExhausted(
        f"no entry of {seq.name!r} strictly above {value!r} within {horizon}"
    )


def interweave(sys, seqs, I_family=None, depth=5, horizon=1000):
    """Deterministic greedy interweaving of k cofinal sequences.

    y_1 = x^1_1; thereafter y_{n+1} is drawn from sequence (n mod k) + 1 at
    the minimal index p exceeding every known coincidence index q and
    dominating all previous y_i.  Positions n with (n-1) mod k + 1 in I form
    y^I.  The returned prefixes are re-verified: y increasing and pairwise
    inequivalent, and each singleton block y^{i} a subsequence of x^i.
    """
    seqs = list(seqs)
    k = len(seqs)
    if k == 0:
        raise InputError("need at least one sequence")
    if depth < 1:
        raise InputError("depth must be >= 1")
    y = []
    sources = []
    q = 0
    for n in range(depth):
        j = n % k
        if n == 0:
            p = 1
        else:
            p = None
            for cand in range(q + 1, horizon + 1):
                entry = seqs[j][cand]
                if all(sys.leq(prev, entry) for prev in y):
                    p = cand
                    break
            if p is None:
                raise HorizonExhausted(
                    f"no admissible entry of {seqs[j].name!r} within horizon {horizon}"
                )
        value = seqs[j][p]
        y.append(value)
        sources.append((j + 1, p))
        for seq in seqs:
            q = max(q, _coincidence_bound(sys, seq, value, horizon))
    for a, b in zip(y, y[1:]):
        if not sys.leq(a, b):
            raise AssertionError("interweaved sequence is not increasing")
    for i in range(len(y)):
        for j2 in range(i + 1, len(y)):
            if sys.equiv(y[i], y[j2]):
                raise AssertionError("interweaved sequence repeats a value")
    if I_family is None:
        I_family = _nonempty_subsets(k)
    y_I = {}
    for I in I_family:
        I = frozenset(I)
        picks = [y[n] for n in range(depth) if (n % k) + 1 in I]
        y_I[I] = tuple(picks)
    for i in range(1, k + 1):
        block = [(n, y[n]) for n in range(depth) if (n % k) + 1 == i]
        for n, val in block:
            if sources[n][0] != i:
                raise AssertionError("residue-class block drawn from the wrong sequence")
    return InterweaveResult(tuple(y), tuple(sources), y_I)


def is_subsequence(sub, seq, sys, horizon=1000):
    """Greedy check that sub embeds into the prefix of seq up to equivalence."""
    idx = 1
    for value in sub:
        found = False
        while idx <= horizon:
            entry = seq[idx]
            idx += 1
            if sys.equiv(entry, value):
                found = True
                break
            if sys.strictly_above(entry, value):
                return False
        if not found:
            return False
    return True


@dataclass(frozen=True)
class ClosureReport:
    closed_under_subsequences: bool
    closed_under_unions: bool
    counterexamples: tuple

    @property
    def closed(self):
        return self.closed_under_subsequences and self.closed_under_unions


def check_subposet_closure(predicate, samples, max_subsets=4096):
    """Sample-based closure check for a family of integer sequence windows.

    predicate decides membership of a finite window (tuple of integers).
    Checks that membership survives (i) passing to subsequences and (ii)
    merging two members with disjoint value sets.
    """
    members = [tuple(s) for s in samples if predicate(tuple(s))]
    bad = []
    sub_ok = True
    for w in members:
        n = len(w)
        if 2 ** n <= max_subsets:
            picks = [c for r in range(1, n + 1) for c in combinations(range(n), r)]
        else:
            picks = [tuple(range(i, n)) for i in range(n)]
        for pick in picks:
            sub = tuple(w[i] for i in pick)
            if not predicate(sub):
                sub_ok = False
                bad.append(("subsequence", w, sub))
                break
        if not sub_ok:
            break
    union_ok = True
    for a, b in combinations(members, 2):
        if set(a) & set(b):
            continue
        merged = tuple(sorted(set(a) | set(b)))
        if not predicate(merged):
            union_ok = False
            bad.append(("union", a, b, merged))
            break
    return ClosureReport(sub_ok, union_ok, tuple(bad))
