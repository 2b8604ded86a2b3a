"""Exception hierarchy shared by all ordergap modules.

Every error carries an ``exit_code`` so the CLI can map failures onto its
documented contract: 2 for malformed or contract-violating input, 3 for an
exceeded bound or search budget.  Refutations (a property that simply does
not hold) are ordinary return values, except for the two precondition
failures that come with a refuting witness (``NotAPregap``,
``FamiliesIntersect``), which map to exit code 1.
"""

from __future__ import annotations


class OrderGapError(Exception):
    exit_code = 2


class InputError(OrderGapError):
    """Malformed input or violated operation contract."""

    exit_code = 2


class DuplicateLabel(InputError):
    pass


class UnknownLabel(InputError):
    pass


class CycleDetected(InputError):
    """The given covers force x <= y <= x for distinct x, y."""


class EmptyPoset(InputError):
    """Posets must have at least one element."""


class HostMismatch(InputError):
    """An element set was used with a poset other than its host."""


class UnknownElement(InputError):
    pass


class NotAGap(InputError):
    """A gap-only operation was applied to a separable pair."""


class MonotonicityViolation(InputError):
    def __init__(self, x, y):
        super().__init__(f"map is not order-preserving: {x} <= {y} but images are not")
        self.pair = (x, y)


class NotStrictlyIncreasing(InputError):
    pass


class NotAPermutation(InputError):
    pass


class EmptyInput(InputError):
    pass


class NotAMember(InputError):
    pass


class EmptyFamily(InputError):
    pass


class EqualBranches(InputError):
    """Two branch arguments denote the same infinite word."""


class NotAPregap(OrderGapError):
    """The pregap precondition fails; carries the refuting witness."""

    exit_code = 1

    def __init__(self, message, witness=None, difference=None):
        super().__init__(message)
        self.witness = witness
        self.difference = difference


class FamiliesIntersect(OrderGapError):
    """Branch families that must be disjoint share a branch."""

    exit_code = 1

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundExceeded(OrderGapError):
    """An exhaustive mode was asked to sweep past its configured bound."""

    exit_code = 3


class BudgetExceeded(OrderGapError):
    """A backtracking search ran out of node budget before exhausting."""

    exit_code = 3


class SizeOverflow(OrderGapError):
    """A constructed relation would exceed the configured cell cap."""

    exit_code = 3
