"""An eventually-constant lamplighter over Z and its binate structure.

Elements are pairs (shift, lamps) with lamps: Z -> Sym(Y_0) constant far to
the left and far to the right (finite exception window between).  The group
law twists by the shift:

    (s_a, phi_a) * (s_b, phi_b) = (s_a + s_b, i -> phi_a(i + s_b) o phi_b(i))

so the right factor acts first.  For a subgroup H of lamps concentrated at
level 0, the diagonal embedding psi(h) = "h at every level >= 1" and the
unit shift t satisfy the two binate identities exactly:

    [h, psi(h')] = 1   and   t^{-1} psi(h) t = h psi(h),

and both are checked by normal-form equality, not modulo anything.
Conjugation by t^p moves supports up by p, which makes the commuting
Z-conjugates check conclusive once p exceeds the support diameter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfiniteSupport, InputError


def perm_identity(m):
    return tuple(range(m))


def perm_compose(a, b):
    """(a o b)(x) = a(b(x)); b acts first."""
    return tuple(a[x] for x in b)


def perm_inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def validate_perm(perm, m):
    p = tuple(perm)
    if sorted(p) != list(range(m)):
        raise InputError(f"{p!r} is not a permutation of 0..{m - 1}")
    return p


class LampElement:
    """Normal-form element of the eventually-constant lamplighter.

    lamp(i) = left for i < lo, vals[i - lo] on the window, right after it.
    The stored form is shrunk so equal group elements have equal fields.
    """

    __slots__ = ("m", "shift", "lo", "vals", "left", "right")

    def __init__(self, m, shift=0, lo=0, vals=(), left=None, right=None):
        self.m = m
        self.shift = shift
        left = perm_identity(m) if left is None else validate_perm(left, m)
        right = perm_identity(m) if right is None else validate_perm(right, m)
        vals = [validate_perm(v, m) for v in vals]
        while vals and vals[0] == left:
            vals.pop(0)
            lo += 1
        while vals and vals[-1] == right:
            vals.pop()
        if not vals and left == right:
            lo = 0
        self.lo = lo
        self.vals = tuple(vals)
        self.left = left
        self.right = right

    @classmethod
    def identity(cls, m):
        return cls(m)

    @classmethod
    def shift_element(cls, m, s=1):
        return cls(m, shift=s)

    @classmethod
    def level_lamp(cls, m, perm, level=0):
        return cls(m, lo=level, vals=(perm,))

    @classmethod
    def tail_lamp(cls, m, perm, start=1):
        """perm at every level >= start, identity below."""
        return cls(m, lo=start, right=perm)

    def lamp(self, i):
        if i < self.lo:
            return self.left
        if i >= self.lo + len(self.vals):
            return self.right
        return self.vals[i - self.lo]

    def is_identity(self):
        return self.shift == 0 and not self.vals and self.left == self.right == perm_identity(self.m)

    def is_pure_shift(self):
        return not self.vals and self.left == self.right == perm_identity(self.m)

    def has_finite_support(self):
        ident = perm_identity(self.m)
        return self.shift == 0 and self.left == ident and self.right == ident

    def support(self):
        """Index range of nontrivial lamps, as (lo, hi) inclusive, or None.

        Only meaningful for finite-support elements; InfiniteSupport
        otherwise.
        """
        if not self.has_finite_support():
            raise InfiniteSupport(f"{self!r} has infinite support")
        ident = perm_identity(self.m)
        hot = [self.lo + k for k, v in enumerate(self.vals) if v != ident]
        if not hot:
            return None
        return hot[0], hot[-1]

    def inverse(self):
        return LampElement(
            self.m,
            shift=-self.shift,
            lo=self.lo + self.shift,
            vals=tuple(perm_inverse(v) for v in self.vals),
            left=perm_inverse(self.left),
            right=perm_inverse(self.right),
        )

    def __mul__(self, other):
        return lamp_compose(self, other)

    def __pow__(self, k):
        out = LampElement.identity(self.m)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LampElement)
            and self.m == other.m
            and self.shift == other.shift
            and self.lo == other.lo
            and self.vals == other.vals
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash((self.m, self.shift, self.lo, self.vals, self.left, self.right))

    def __repr__(self):
        return (
            f"LampElement(m={self.m}, shift={self.shift}, lo={self.lo}, "
            f"vals={self.vals}, left={self.left}, right={self.right})"
        )


def lamp_compose(a, b):
    """Product with the right factor acting first."""
    if a.m != b.m:
        raise InputError("base sets differ")
    lo = min(a.lo - b.shift, b.lo)
    hi = max(a.lo + len(a.vals) - b.shift, b.lo + len(b.vals))
    vals = [perm_compose(a.lamp(i + b.shift), b.lamp(i)) for i in range(lo, hi)]
    return LampElement(
        a.m,
        shift=a.shift + b.shift,
        lo=lo,
        vals=vals,
        left=perm_compose(a.left, b.left),
        right=perm_compose(a.right, b.right),
    )


def commutator(a, b):
    return a.inverse() * b.inverse() * a * b


@dataclass(frozen=True)
class BinateWitness:
    m: int
    generators: tuple  # level-0 LampElements
    t: LampElement
    psi_start: int = 1  # psi places the lamp at every level >= psi_start

    def psi(self, h):
        """Diagonal image of a level-0 lamp at levels >= psi_start."""
        if h.shift != 0:
            raise InputError("psi is defined on lamps, not shifts")
        return LampElement(self.m, lo=self.psi_start, right=h.lamp(0))


def make_binate_witness(base_size, gen_perms, psi_start=1):
    """Witness for the subgroup generated by level-0 lamps.

    psi_start = 1 is the honest construction; other values are negative
    controls expected to fail verify_binate.
    """
    gens = tuple(
        LampElement.level_lamp(base_size, validate_perm(p, base_size))
        for p in gen_perms
    )
    t = LampElement.shift_element(base_size, 1)
    return BinateWitness(base_size, gens, t, psi_start)


@dataclass(frozen=True)
class BinateReport:
    ok: bool
    elements_checked: int
    words_enumerated: int
    psi_consistent: bool
    first_failure: tuple = None  # (kind, word, detail)


def verify_binate(w, word_cap=4):
    """Check both binate identities on all generator words up to word_cap.

    Words are reduced by normal form, so each subgroup element is tested
    once; psi is simultaneously checked to be well defined (word products
    landing on the same element must have the same psi image).
    """
    letters = []
    for idx, g in enumerate(w.generators):
        letters.append((f"g{idx + 1}", g, w.psi(g)))
        letters.append((f"g{idx + 1}^-1", g.inverse(), w.psi(g).inverse()))
    ident = LampElement.identity(w.m)
    elements = {ident: ((), ident)}
    frontier = [(ident, (), ident)]
    words = 1
    consistent = True
    failure = None
    for _ in range(word_cap):
        new_frontier = []
        for elem, word, psi_img in frontier:
            for name, letter, psi_letter in letters:
                words += 1
                nxt = elem * letter
                nxt_psi = psi_img * psi_letter
                if nxt in elements:
                    if elements[nxt][1] != nxt_psi and consistent:
                        consistent = False
                        failure = failure or (
                            "psi-ill-defined",
                            word + (name,),
                            elements[nxt][0],
                        )
                    continue
                elements[nxt] = (word + (name,), nxt_psi)
                new_frontier.append((nxt, word + (name,), nxt_psi))
        frontier = new_frontier
    t_inv = w.t.inverse()
    for h, (word, psi_h) in elements.items():
        conjugated = t_inv * psi_h * w.t
        if conjugated != h * psi_h:
            failure = failure or ("conjugation", word, (conjugated, h * psi_h))
            break
    if failure is None or failure[0] == "psi-ill-defined":
        for h, (word_h, _) in elements.items():
            for hp, (word_hp, psi_hp) in elements.items():
                if not commutator(h, psi_hp).is_identity():
                    failure = failure or ("commutator", (word_h, word_hp), None)
                    break
            else:
                continue
            break
    ok = failure is None and consistent
    return BinateReport(ok, len(elements), words, consistent, failure)


@dataclass(frozen=True)
class ConjugatesReport:
    ok: bool
    checked_up_to: int
    conclusive_at: int = None  # None: the finite check proves nothing beyond P
    first_failure: tuple = None  # (p, i, j)

    @property
    def conclusive(self):
        return (
            self.ok
            and self.conclusive_at is not None
            and self.conclusive_at <= self.checked_up_to
        )


def verify_commuting_conjugates(gens, t, P):
    """Check [g_i, t^p g_j t^-p] = 1 for 1 <= p <= P on generator pairs.

    Generators must have finite support (shift 0, trivial tails).  When t
    is a nonzero pure shift, the check is conclusive for the generated
    subgroups once p * |shift| exceeds the union support diameter, and the
    report says where that happens.
    """
    gens = list(gens)
    for g in gens:
        if not g.has_finite_support():
            raise InfiniteSupport(f"generator {g!r} has infinite support")
    if P < 1:
        raise InputError("need P >= 1")
    spans = [s for g in gens if (s := g.support()) is not None]
    conclusive_at = None
    if t.is_pure_shift() and t.shift != 0:
        if not spans:
            conclusive_at = 1
        else:
            diameter = max(hi for _, hi in spans) - min(lo for lo, _ in spans)
            conclusive_at = diameter // abs(t.shift) + 1
    failure = None
    t_pow = LampElement.identity(t.m)
    t_inv_pow = LampElement.identity(t.m)
    for p in range(1, P + 1):
        t_pow = t_pow * t
        t_inv_pow = t_inv_pow * t.inverse()
        for i, g in enumerate(gens):
            for j, g2 in enumerate(gens):
                conj = t_pow * g2 * t_inv_pow
                if not commutator(g, conj).is_identity():
                    failure = (p, i, j)
                    break
            if failure:
                break
        if failure:
            break
    return ConjugatesReport(failure is None, P, conclusive_at, failure)
