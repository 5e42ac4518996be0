"""Order embeddings of the positive integers and subsequence chains.

The computable core is the submonoid of strictly increasing self-maps of
N* = {1, 2, ...} whose image misses only finitely many values: such a map
is determined by its missing set, composition is exact set algebra
(missing(eta zeta) = missing(zeta) u zeta(missing(eta)), where the product
applies eta first), and equality is decidable.  General embeddings (the
index map of the even numbers, say) only admit window-limited stream
representations, provided as a fallback with an explicit exactness flag.

A chain of subsequences x_0 <= x_1 <= ... <= x_p of a common ground
sequence is indexed by the tuple (eta_1, ..., eta_p) of relative position
embeddings: eta_i sends n to the position of x_{i-1}'s n-th entry inside
x_i.  Dropping x_0 or x_p drops the outer embedding; dropping an inner x_i
composes the adjacent pair, exactly the bar-construction face maps of the
embedding monoid.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import InputError, WindowTooShort


class CofiniteEmbedding:
    """Strictly increasing self-map of N* missing finitely many values."""

    __slots__ = ("missing",)

    def __init__(self, missing=()):
        vals = sorted(set(int(m) for m in missing))
        if vals and vals[0] < 1:
            raise InputError(f"missing values must be positive, got {vals[0]}")
        self.missing = tuple(vals)

    def __call__(self, n):
        if n < 1:
            raise InputError(f"embeddings act on positive integers, got {n}")
        r = n
        for m in self.missing:
            if m <= r:
                r += 1
            else:
                break
        return r

    def position_of(self, value):
        """The n with eta(n) = value, or None when value is missing."""
        if value < 1:
            raise InputError(f"positive integers only, got {value}")
        idx = bisect_right(self.missing, value)
        if idx and self.missing[idx - 1] == value:
            return None
        return value - idx

    def shift_amount(self):
        return len(self.missing)

    def is_identity(self):
        return not self.missing

    def __eq__(self, other):
        return isinstance(other, CofiniteEmbedding) and self.missing == other.missing

    def __hash__(self):
        return hash(("CofiniteEmbedding", self.missing))

    def __repr__(self):
        return f"CofiniteEmbedding(missing={list(self.missing)})"

    def to_dict(self):
        return {"missing": list(self.missing)}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["missing"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed embedding data: {exc}") from exc

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def shift(cls, s):
        if s < 0:
            raise InputError("shift must be nonnegative")
        return cls(range(1, s + 1))


def compose(eta, zeta):
    """The product: apply eta first, then zeta.

    >>> compose(CofiniteEmbedding([1]), CofiniteEmbedding([1])).missing
    (1, 2)
    """
    if isinstance(eta, CofiniteEmbedding) and isinstance(zeta, CofiniteEmbedding):
        return CofiniteEmbedding(set(zeta.missing) | {zeta(m) for m in eta.missing})
    window = min(_window_of(eta), _max_applicable(eta, zeta))
    if window < 1:
        raise WindowTooShort("composite is empty on the available window")
    return StreamEmbedding([_apply(zeta, _apply(eta, n)) for n in range(1, window + 1)])


class StreamEmbedding:
    """Window-limited strictly increasing map; equality only up to the window."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = [int(v) for v in values]
        if not vals:
            raise WindowTooShort("empty embedding window")
        if vals[0] < 1 or any(a >= b for a, b in zip(vals, vals[1:])):
            raise InputError("stream values must be strictly increasing and positive")
        self.values = tuple(vals)

    @property
    def window(self):
        return len(self.values)

    def __call__(self, n):
        if n < 1:
            raise InputError(f"embeddings act on positive integers, got {n}")
        if n > len(self.values):
            raise WindowTooShort(
                f"index {n} beyond the stored window {len(self.values)}"
            )
        return self.values[n - 1]

    def __repr__(self):
        head = ", ".join(str(v) for v in self.values[:6])
        tail = ", ..." if len(self.values) > 6 else ""
        return f"StreamEmbedding([{head}{tail}])"

    def agrees_with(self, other, upto=None):
        """Equality on the common window; never a proof of global equality."""
        w = min(_window_of(self), _window_of(other))
        if upto is not None:
            w = min(w, upto)
        if w < 1:
            raise WindowTooShort("no common window to compare on")
        return all(_apply(self, n) == _apply(other, n) for n in range(1, w + 1))


def _window_of(eta):
    return eta.window if isinstance(eta, StreamEmbedding) else float("inf")


def _max_applicable(eta, zeta):
    """Largest n with zeta(eta(n)) defined."""
    if not isinstance(zeta, StreamEmbedding):
        return float("inf")
    top = zeta.window
    n = 0
    while True:
        try:
            v = _apply(eta, n + 1)
        except WindowTooShort:
            return n
        if v > top:
            return n
        n += 1


def _apply(eta, n):
    return eta(n)


def embeddings_equal(a, b, window=None):
    """(equal, exact): exact set equality for co-finite pairs, else window test."""
    if isinstance(a, CofiniteEmbedding) and isinstance(b, CofiniteEmbedding):
        return a == b, True
    w = min(_window_of(a), _window_of(b))
    if window is not None:
        w = min(w, window)
    if w < 1:
        raise WindowTooShort("no common window to compare on")
    return all(_apply(a, n) == _apply(b, n) for n in range(1, int(w) + 1)), False


class IndexedSequence:
    """A subsequence of a ground stream, selected by an index embedding."""

    def __init__(self, ground, indices, name=None):
        self.ground = ground
        self.indices = indices
        self.name = name or f"sub-{indices!r}"

    def index(self, n):
        return _apply(self.indices, n)

    def entry(self, n):
        g = self.ground
        i = self.index(n)
        return g[i] if hasattr(g, "__getitem__") else g(i)


class SubsequenceChain:
    """x_0 <= x_1 <= ... <= x_p, each a subsequence of the next.

    Containment is certified exactly for co-finite index embeddings
    (missing sets shrink upward) and on the window otherwise.
    """

    def __init__(self, sequences, window=16):
        self.sequences = list(sequences)
        self.window = window
        if not self.sequences:
            raise InputError("a chain needs at least one sequence")
        for lo, hi in zip(self.sequences, self.sequences[1:]):
            _certify_containment(lo.indices, hi.indices, window)

    @property
    def p(self):
        return len(self.sequences) - 1

    def face(self, i):
        if not 0 <= i <= self.p:
            raise InputError(f"face index {i} out of range for p = {self.p}")
        rest = self.sequences[:i] + self.sequences[i + 1:]
        return SubsequenceChain(rest, self.window)


def _certify_containment(lo, hi, window):
    if isinstance(lo, CofiniteEmbedding) and isinstance(hi, CofiniteEmbedding):
        if not set(hi.missing) <= set(lo.missing):
            raise InputError(
                f"not a subsequence: {sorted(set(hi.missing) - set(lo.missing))} "
                "are hit below but missed above"
            )
        return
    w = min(_window_of(lo), _window_of(hi), window)
    if w < 1:
        raise WindowTooShort("cannot certify containment on an empty window")
    hi_vals = [_apply(hi, n) for n in range(1, int(w) + 1)]
    hi_set = set(hi_vals)
    for n in range(1, int(min(w, _window_of(lo))) + 1):
        v = _apply(lo, n)
        if v > hi_vals[-1]:
            break
        if v not in hi_set:
            raise InputError(f"not a subsequence: value {v} of the lower stream is skipped")


def relative_embedding(lo, hi, window=16):
    """eta with hi o eta = lo: the position of each lo-entry inside hi.

    Exact (co-finite) whenever both inputs are co-finite; otherwise a
    window-limited stream.  WindowTooShort when no position is certifiable.
    """
    if isinstance(lo, CofiniteEmbedding) and isinstance(hi, CofiniteEmbedding):
        _certify_containment(lo, hi, window)
        missing = []
        for v in set(lo.missing) - set(hi.missing):
            pos = hi.position_of(v)
            missing.append(pos)
        return CofiniteEmbedding(missing)
    _certify_containment(lo, hi, window)
    w_hi = int(min(_window_of(hi), window))
    positions = {_apply(hi, n): n for n in range(1, w_hi + 1)}
    out = []
    top = _apply(hi, w_hi)
    for n in range(1, int(min(_window_of(lo), window)) + 1):
        v = _apply(lo, n)
        if v > top:
            break
        out.append(positions[v])
    if not out:
        raise WindowTooShort("window too short to locate any entry")
    return StreamEmbedding(out)


def orbit_index(chain, window=None):
    """The tuple (eta_1, ..., eta_p) of relative position embeddings."""
    w = window if window is not None else chain.window
    return tuple(
        relative_embedding(lo.indices, hi.indices, w)
        for lo, hi in zip(chain.sequences, chain.sequences[1:])
    )


def bar_face(tup, i):
    """Face maps of the monoid nerve: drop an end or compose an inner pair."""
    p = len(tup)
    if not 0 <= i <= p:
        raise InputError(f"face index {i} out of range for a {p}-tuple")
    if i == 0:
        return tup[1:]
    if i == p:
        return tup[:-1]
    return tup[: i - 1] + (compose(tup[i - 1], tup[i]),) + tup[i + 1:]


@dataclass(frozen=True)
class FaceCommutationReport:
    p: int
    ok: bool
    exact: bool
    details: tuple  # per face index: (i, ok, exact)

    def first_failure(self):
        for i, ok, _ in self.details:
            if not ok:
                return i
        return None


def verify_face_commutation(chain, window=None):
    """Check orbit_index(d_i chain) = d_i(orbit_index chain) for every face."""
    w = window if window is not None else chain.window
    full = orbit_index(chain, w)
    details = []
    all_exact = True
    for i in range(chain.p + 1):
        lhs = orbit_index(chain.face(i), w)
        rhs = bar_face(full, i)
        ok = True
        exact = True
        for a, b in zip(lhs, rhs):
            eq, ex = embeddings_equal(a, b, w)
            ok = ok and eq
            exact = exact and ex
        details.append((i, ok, exact))
        all_exact = all_exact and exact
    return FaceCommutationReport(
        chain.p, all(ok for _, ok, _ in details), all_exact, tuple(details)
    )


@dataclass(frozen=True)
class MonoidFaceReport:
    tuples_checked: int
    identities_checked: int
    ok: bool
    failures: tuple


def monoid_simplicial_identities(tuples, pointwise_window=0):
    """Verify d_i d_j = d_{j-1} d_i for i < j on bar-construction tuples.

    Equality of embeddings is exact missing-set equality; a positive
    pointwise_window adds an evaluation cross-check on 1..window.
    """
    tuples = [tuple(t) for t in tuples]
    failures = []
    count = 0
    for tup in tuples:
        p = len(tup)
        for j in range(1, p + 1):
            for i in range(j):
                count += 1
                left = bar_face(bar_face(tup, j), i)
                right = bar_face(bar_face(tup, i), j - 1)
                same = len(left) == len(right)
                if same:
                    for a, b in zip(left, right):
                        eq, _ = embeddings_equal(a, b)
                        if not eq:
                            same = False
                            break
                        if pointwise_window:
                            for n in range(1, pointwise_window + 1):
                                if _apply(a, n) != _apply(b, n):
                                    same = False
                                    break
                if not same:
                    failures.append((tup, i, j))
    return MonoidFaceReport(len(tuples), count, not failures, tuple(failures))
