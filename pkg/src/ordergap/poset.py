"""Finite posets as bit-mask relations, plus the elementary order operations.

A poset stores its ground set as a label tuple and its order as one ``up``
mask per element: bit j of ``up[i]`` is set iff element i <= element j.
Element identity is the positional index; labels are presentation only.
All values are immutable and hashable, so they can be shared freely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptyPoset,
    HostMismatch,
    InputError,
    SizeOverflow,
    UnknownElement,
    UnknownLabel,
)

# Hard cap on relation cells (n*n) for constructed posets, chiefly products.
DEFAULT_MAX_CELLS = 1 << 20


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def set_key(mask: int) -> tuple[int, ...]:
    """Canonical sort key for bit sets: the ascending index tuple."""
    return tuple(bits(mask))


@dataclass(frozen=True)
class Poset:
    labels: tuple[str, ...]
    up: tuple[int, ...]  # up[i] = mask of {j : i <= j}

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise EmptyPoset("posets must have at least one element")
        if len(set(self.labels)) != n:
            raise DuplicateLabel(f"duplicate labels in {self.labels!r}")
        if len(self.up) != n:
            raise InputError("relation size does not match label count")
        full = (1 << n) - 1
        for i, row in enumerate(self.up):
            if row & ~full:
                raise InputError(f"relation row {i} references unknown elements")
            if not row >> i & 1:
                raise InputError(f"relation is not reflexive at {self.labels[i]}")
        for i in range(n):
            for j in bits(self.up[i]):
                if i != j and self.up[j] >> i & 1:
                    raise InputError(
                        f"relation is not antisymmetric on "
                        f"({self.labels[i]}, {self.labels[j]})"
                    )
                if self.up[j] & ~self.up[i]:
                    raise InputError(
                        f"relation is not transitive through "
                        f"({self.labels[i]}, {self.labels[j]})"
                    )

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[j] = mask of {i : i <= j}."""
        cols = [0] * self.n
        for i, row in enumerate(self.up):
            for j in bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def label_list(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    # -- element sets ------------------------------------------------------

    def subset(self, labels: Iterable[str]) -> "ElementSet":
        return ElementSet(self, mask_of(self.index(lbl) for lbl in labels))

    def subset_mask(self, mask: int) -> "ElementSet":
        if mask & ~self.full_mask:
            raise UnknownElement("mask references elements outside the poset")
        return ElementSet(self, mask)

    # -- elementary operations --------------------------------------------

    def upper_bounds_mask(self, mask: int) -> int:
        out = self.full_mask
        for i in bits(mask):
            out &= self.up[i]
        return out

    def lower_bounds_mask(self, mask: int) -> int:
        out = self.full_mask
        for i in bits(mask):
            out &= self.down[i]
        return out

    def upper_bounds(self, c: "ElementSet") -> "ElementSet":
        self._check_host(c)
        return ElementSet(self, self.upper_bounds_mask(c.mask))

    def lower_bounds(self, c: "ElementSet") -> "ElementSet":
        self._check_host(c)
        return ElementSet(self, self.lower_bounds_mask(c.mask))

    def principal_ideal(self, label: str) -> "ElementSet":
        return ElementSet(self, self.down[self.index(label)])

    def principal_filter(self, label: str) -> "ElementSet":
        return ElementSet(self, self.up[self.index(label)])

    def _check_host(self, s: "ElementSet") -> None:
        if s.host != self:
            raise HostMismatch("element set belongs to a different poset")

    def join(self, mask: int) -> int | None:
        """Index of the least upper bound of the set, or None."""
        ub = self.upper_bounds_mask(mask)
        for i in bits(ub):
            if ub & ~self.up[i] == 0:
                return i
        return None

    def meet(self, mask: int) -> int | None:
        lb = self.lower_bounds_mask(mask)
        best = None
        for i in bits(lb):
            if lb & ~self.down[i] == 0:
                best = i
        return best

    @cached_property
    def lattice_witness(self) -> tuple[int, int] | None:
        """A pair lacking a join or meet; None when the poset is a lattice."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                pair = 1 << i | 1 << j
                if self.join(pair) is None or self.meet(pair) is None:
                    return (i, j)
        return None

    def is_lattice(self) -> bool:
        return self.lattice_witness is None

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction: pairs (i, j) with j covering i."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            for j in bits(strict):
                between = strict & self.down[j] & ~(1 << j)
                if between == 0:
                    out.append((i, j))
        return tuple(out)

    def dual(self) -> "Poset":
        return Poset(self.labels, self.down)

    def __repr__(self):
        hasse = [(self.labels[i], self.labels[j]) for i, j in self.covers]
        return f"Poset({list(self.labels)!r}, covers={hasse!r})"


@dataclass(frozen=True)
class ElementSet:
    """A subset of a specific poset's elements, bit-set semantics."""

    host: Poset
    mask: int

    def __post_init__(self):
        if self.mask & ~self.host.full_mask:
            raise UnknownElement("element set exceeds its host")

    @property
    def labels(self) -> list[str]:
        return self.host.label_list(self.mask)

    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.host.index(label) & 1)


# -- constructors -----------------------------------------------------------


def from_covers(
    labels: Sequence[str],
    covers: Iterable[tuple[str, str]],
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> Poset:
    """Reflexive-transitive closure of a Hasse diagram.

    Fails with CycleDetected when the closure would break antisymmetry.
    """
    labels = tuple(str(lbl) for lbl in labels)
    n = len(labels)
    if n == 0:
        raise EmptyPoset("posets must have at least one element")
    if len(set(labels)) != n:
        raise DuplicateLabel(f"duplicate labels in {labels!r}")
    if n * n > max_cells:
        raise SizeOverflow(f"{n}x{n} relation exceeds the {max_cells}-cell cap")
    index = {lbl: i for i, lbl in enumerate(labels)}
    up = [1 << i for i in range(n)]
    for a, b in covers:
        for lbl in (a, b):
            if str(lbl) not in index:
                raise UnknownLabel(f"cover references unknown label {lbl!r}")
        up[index[str(a)]] |= 1 << index[str(b)]
    # Warshall closure on the mask rows.
    for k in range(n):
        row_k = up[k]
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= row_k
    for i in range(n):
        for j in bits(up[i]):
            if i != j and up[j] >> i & 1:
                raise CycleDetected(
                    f"covers force {labels[i]} <= {labels[j]} <= {labels[i]}"
                )
    return Poset(labels, tuple(up))


def chain(k: int) -> Poset:
    """The k-element total order with labels '0'..'k-1'."""
    if k < 1:
        raise EmptyPoset("chain size must be at least 1")
    full = (1 << k) - 1
    return Poset(tuple(str(i) for i in range(k)), tuple(full >> i << i for i in range(k)))


def antichain(k: int, labels: Sequence[str] | None = None) -> Poset:
    if k < 1:
        raise EmptyPoset("antichain size must be at least 1")
    lbls = tuple(labels) if labels is not None else tuple(str(i) for i in range(k))
    return Poset(lbls, tuple(1 << i for i in range(k)))


def product(p: Poset, q: Poset, *, max_cells: int = DEFAULT_MAX_CELLS) -> Poset:
    """Componentwise order on pairs; labels are '(a,b)'."""
    n = p.n * q.n
    if n * n > max_cells:
        raise SizeOverflow(f"product relation would need {n * n} cells (cap {max_cells})")
    labels = tuple(f"({a},{b})" for a in p.labels for b in q.labels)
    up = []
    for i in range(p.n):
        prow = p.up[i]
        for j in range(q.n):
            qrow = q.up[j]
            row = 0
            for i2 in bits(prow):
                row |= qrow << i2 * q.n
            up.append(row)
    return Poset(labels, tuple(up))


# -- JSON poset documents ----------------------------------------------------


def from_json_doc(doc: dict, *, max_cells: int = DEFAULT_MAX_CELLS) -> Poset:
    """Parse {"elements": [...], "covers": [[a,b], ...]}."""
    if not isinstance(doc, dict):
        raise InputError("poset document must be a JSON object")
    try:
        elements = doc["elements"]
        covers = doc.get("covers", [])
    except (TypeError, KeyError) as exc:
        raise InputError(f"poset document missing field: {exc}") from None
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputError('"elements" must be a list of strings')
    pairs = []
    for entry in covers:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise InputError('"covers" entries must be [lower, upper] pairs')
        pairs.append((str(entry[0]), str(entry[1])))
    return from_covers(elements, pairs, max_cells=max_cells)


def to_json_doc(p: Poset) -> dict:
    return {
        "elements": list(p.labels),
        "covers": [[p.labels[i], p.labels[j]] for i, j in p.covers],
    }


def loads(text: str) -> Poset:
    return from_json_doc(json.loads(text))
