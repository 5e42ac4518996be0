"""Exception hierarchy shared by all modules.

Validation failures (malformed input data) derive from InputError; failed
mathematical preconditions or certificates derive from CheckError.  The
command line maps InputError to exit code 2 and assertion failures to 1.
"""


class L1FillError(Exception):
    pass


class InputError(L1FillError):
    """Malformed or inconsistent input data."""


class CheckError(L1FillError):
    """A mathematical precondition or certificate failed."""


class IdentityViolation(InputError):
    """d_i d_j != d_{j-1} d_i on some simplex, or a homotopy identity failed."""

    def __init__(self, i, j, simplex, message=None):
        self.i, self.j, self.simplex = i, j, simplex
        super().__init__(message or f"d_{i} d_{j} != d_{j-1} d_{i} at {simplex}")


class DanglingFace(InputError):
    def __init__(self, level, face_index, simplex, target):
        self.level, self.face_index, self.simplex, self.target = level, face_index, simplex, target
        super().__init__(
            f"face d_{face_index} of simplex {simplex} at level {level} "
            f"points at missing index {target}"
        )


class LevelMismatch(InputError):
    pass


class NotACycle(CheckError):
    def __init__(self, message, residue=None):
        self.residue = residue
        super().__init__(message)


class NotABoundary(CheckError):
    """Infeasible filling; carries a separating functional y with y.B = 0, y.z != 0."""

    def __init__(self, functional, pairing):
        self.functional = functional
        self.pairing = pairing
        super().__init__(f"cycle is not a boundary (separating functional pairs to {pairing})")


class NotAssociative(InputError):
    pass


class NoIdentity(InputError):
    pass


class TruncationTooShallow(InputError):
    pass


class DimensionCapExceeded(InputError):
    pass


class HorizonExhausted(CheckError):
    pass


class WindowTooShort(InputError):
    pass


class InvalidWitness(CheckError):
    pass


class CarrierViolation(CheckError):
    pass


class FillerFailure(CheckError):
    pass


class NotComparable(CheckError):
    def __init__(self, vertex, fx, gx):
        self.vertex, self.fx, self.gx = vertex, fx, gx
        super().__init__(f"f({vertex}) = {fx} is not below g({vertex}) = {gx}")


class WPropertyFailure(CheckError):
    """A poset failed the witness search; carries the failing subposet and index set."""

    def __init__(self, subposet, index_set):
        self.subposet = tuple(subposet)
        self.index_set = frozenset(index_set)
        super().__init__(
            f"no witness family for subposet {self.subposet} at I = {sorted(self.index_set)}"
        )


class InfiniteSupport(InputError):
    pass
