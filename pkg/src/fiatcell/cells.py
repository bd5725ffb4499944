"""Green's relations, cells and cell modules for shadows.

The order convention makes bigger principal ideals smaller elements:
a <= b iff the principal ideal generated by b is contained in the one
generated by a. Identities are minimal for their own object, and in the
divided-power families the cell of the identity at object 0 comes out
maximal. Cells are the equivalence classes of mutual comparability.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .shadow import (
    ConsistencyError,
    Element,
    InputError,
    Shadow,
    compose,
)

KINDS = ("left", "right", "two-sided")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise InputError(f"kind must be one of {KINDS}, got {kind!r}")


def principal_ideal(s: Shadow, a: Element, kind: str) -> frozenset[Element]:
    """Elements reachable from a by composing on the given side(s).

    One round of products suffices: the result of composing into a product
    is again a product, so the set below is already an ideal.
    """
    _check_kind(kind)
    if not s.has_element(a):
        raise InputError(f"unknown element id {a.name!r}")
    if kind == "left":
        out = {a}
        for x in s.elements:
            if x.source == a.target:
                out.update(compose(s, x, a).support())
        return frozenset(out)
    if kind == "right":
        out = {a}
        for y in s.elements:
            if a.source == y.target:
                out.update(compose(s, a, y).support())
        return frozenset(out)
    right_part = {a}
    for y in s.elements:
        if a.source == y.target:
            right_part.update(compose(s, a, y).support())
    out = set(right_part)
    for b in right_part:
        for x in s.elements:
            if x.source == b.target:
                out.update(compose(s, x, b).support())
    return frozenset(out)


def _all_ideals(s: Shadow, kind: str) -> dict[Element, frozenset[Element]]:
    return {a: principal_ideal(s, a, kind) for a in s.elements}


def leq(s: Shadow, a: Element, b: Element, kind: str) -> bool:
    """a <= b iff principal_ideal(b) is contained in principal_ideal(a)."""
    return principal_ideal(s, b, kind) <= principal_ideal(s, a, kind)


@dataclass(frozen=True)
class CellPartition:
    kind: str
    classes: tuple[frozenset, ...]

    def class_of(self, member) -> frozenset:
        for cls in self.classes:
            if member in cls:
                return cls
        raise InputError(f"{member!r} is not in any class")


def cell_partition(s: Shadow, kind: str) -> CellPartition:
    """Equivalence classes of mutual ideal containment, in canonical order.

    Classes are ordered by their smallest member in canonical element order;
    the partition is deterministic for a given shadow.
    """
    _check_kind(kind)
    ideals = _all_ideals(s, kind)
    seen: set[Element] = set()
    classes: list[frozenset[Element]] = []
    for a in s.elements:
        if a in seen:
            continue
        cls = frozenset(b for b in s.elements if ideals[b] == ideals[a])
        seen.update(cls)
        classes.append(cls)
    classes.sort(key=lambda cls: min(s.index_of(e) for e in cls))
    return CellPartition(kind=kind, classes=tuple(classes))


@dataclass(frozen=True)
class CellPoset:
    """Two-sided cells with the induced order; cells indexed canonically."""

    cells: tuple[frozenset[Element], ...]
    relation: frozenset[tuple[int, int]]  # (i, j) with cell i <= cell j
    covers: tuple[tuple[int, int], ...]

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.relation

    def cell_index(self, e: Element) -> int:
        for i, cls in enumerate(self.cells):
            if e in cls:
                return i
        raise InputError(f"{e.name!r} is not in any cell")


def cell_poset(s: Shadow, partition: CellPartition | None = None) -> CellPoset:
    if partition is None:
        partition = cell_partition(s, "two-sided")
    ideals = _all_ideals(s, "two-sided")
    cells = partition.classes
    reps = [min(cls, key=s.index_of) for cls in cells]
    relation = set()
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            if ideals[b] <= ideals[a]:
                relation.add((i, j))
    covers = []
    for i, j in sorted(relation):
        if i == j:
            continue
        if any(
            k != i and k != j and (i, k) in relation and (k, j) in relation
            for k in range(len(cells))
        ):
            continue
        covers.append((i, j))
    return CellPoset(cells=cells, relation=frozenset(relation), covers=tuple(covers))


def poset_to_dot(s: Shadow, poset: CellPoset) -> str:
    """Graphviz source: one node per cell, edges are covering relations.

    An edge a -> b means cell a is strictly below cell b.
    """
    lines = ["digraph cell_poset {", "  rankdir=BT;"]
    for i, cls in enumerate(poset.cells):
        label = " | ".join(e.name for e in sorted(cls, key=s.index_of))
        label = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  c{i} [label="{label}"];')
    for i, j in poset.covers:
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RegularityResult:
    ok: bool
    witness: tuple | None = None


def is_strongly_regular(s: Shadow, two_sided_cell: frozenset[Element]) -> RegularityResult:
    """Check one two-sided cell: its left cells are pairwise incomparable and
    every left-right intersection inside it is a singleton."""
    left = [
        cls & two_sided_cell
        for cls in cell_partition(s, "left").classes
        if cls & two_sided_cell
    ]
    right = [
        cls & two_sided_cell
        for cls in cell_partition(s, "right").classes
        if cls & two_sided_cell
    ]
    ideals = _all_ideals(s, "left")
    for i, li in enumerate(left):
        for j, lj in enumerate(left):
            if i == j:
                continue
            a = min(li, key=s.index_of)
            b = min(lj, key=s.index_of)
            if ideals[b] <= ideals[a]:
                return RegularityResult(
                    ok=False, witness=("comparable-left-cells", a.name, b.name)
                )
    for li in left:
        for rj in right:
            inter = li & rj
            if len(inter) != 1:
                return RegularityResult(
                    ok=False,
                    witness=(
                        "intersection-size",
                        sorted(e.name for e in li),
                        sorted(e.name for e in rj),
                        len(inter),
                    ),
                )
    return RegularityResult(ok=True)


def m_values(s: Shadow, two_sided_cell: frozenset[Element]) -> tuple[dict[Element, int], bool]:
    """The multiplicity statistic on a strongly regular two-sided cell.

    For each f in the cell, h is the unique element in the left cell of f
    intersected with the right cell of f*, and m_f is the multiplicity of h
    in f* after f. Returns the value map together with a flag asserting
    constancy on right cells.
    """
    if s.involution is None:
        raise InputError("m_values requires an involution")
    cell_names = sorted(e.name for e in two_sided_cell)
    reg = is_strongly_regular(s, two_sided_cell)
    if not reg.ok:
        raise InputError(
            f"cell {{{', '.join(cell_names)}}} is not strongly regular: {reg.witness}"
        )
    left = cell_partition(s, "left")
    right = cell_partition(s, "right")
    values: dict[Element, int] = {}
    for f in sorted(two_sided_cell, key=s.index_of):
        fstar = s.involution[f]
        candidates = left.class_of(f) & right.class_of(fstar)
        if len(candidates) != 1:
            raise ConsistencyError(
                f"left/right intersection for {f.name} has size {len(candidates)}"
            )
        (h,) = candidates
        values[f] = compose(s, fstar, f).mult(h)
    constant = True
    for cls in right.classes:
        inside = cls & two_sided_cell
        if inside and len({values[f] for f in inside}) > 1:
            constant = False
    return values, constant


@dataclass(frozen=True)
class CellModuleMatrices:
    left_cell: frozenset[Element]
    basis: tuple[Element, ...]
    matrices: dict[Element, np.ndarray]


def cell_module(s: Shadow, left_cell: frozenset[Element]) -> CellModuleMatrices:
    """Integer matrices of the action on a left cell, truncated to the cell.

    The matrix of a has (h, f) entry the multiplicity of h in a after f,
    for h, f in the cell. Truncation is exact here: a term of a product
    landing above the cell can never fall back in, so matrix products agree
    with composition (checked exhaustively in tests).
    """
    partition = cell_partition(s, "left")
    if left_cell not in partition.classes:
        raise InputError("the given set is not a left cell of this shadow")
    basis = tuple(sorted(left_cell, key=s.index_of))
    pos = {e: i for i, e in enumerate(basis)}
    matrices = {}
    for a in s.elements:
        mat = np.zeros((len(basis), len(basis)), dtype=np.int64)
        for f in basis:
            if a.source != f.target:
                continue
            for h, m in compose(s, a, f).items():
                if h in pos:
                    mat[pos[h], pos[f]] = m
        matrices[a] = mat
    return CellModuleMatrices(left_cell=left_cell, basis=basis, matrices=matrices)


def decomposition_matrix_identity(
    s: Shadow, cm: CellModuleMatrices, a: Element, b: Element
) -> bool:
    """M_a M_b equals the multiplicity-weighted sum of M_c over a after b."""
    lhs = cm.matrices[a] @ cm.matrices[b]
    rhs = np.zeros_like(lhs)
    if a.source == b.target:
        for c, m in compose(s, a, b).items():
            rhs = rhs + m * cm.matrices[c]
    return bool(np.array_equal(lhs, rhs))
