"""Stack-sorting of words and its lift to partition diagrams.

The classical map sends a word w = L n R (n the largest letter) to
sort(L) sort(R) n.  The diagram version repeatedly splits off the
propagating block holding the largest bottom node, sorts what lies to its
left, across it, and to its right, and reassembles the sorted factors with
fresh consecutive top labels while every bottom label stays put.  On
diagrams of permutations it reproduces the word map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .core import (
    PartitionDiagram,
    _bits,
    _max_bit,
    _min_bit,
    _pad_blocks,
)

__all__ = [
    "sort_word",
    "FactorTag",
    "Decomposition",
    "TraceEvent",
    "decompose",
    "odot_assemble",
    "sort_diagram",
    "sort_diagram_traced",
]


def sort_word(word: Sequence[int]) -> tuple[int, ...]:
    """One pass of stack-sorting on a word of distinct positive letters.

    >>> sort_word((2, 3, 1))
    (2, 1, 3)
    >>> sort_word((5, 4, 3, 2, 1, 6))
    (1, 2, 3, 4, 5, 6)
    """
    w = tuple(word)
    if len(set(w)) != len(w):
        raise ValueError("letters must be distinct")
    if any(x < 1 for x in w):
        raise ValueError("letters must be positive")
    out: list[int] = []
    work: list[tuple[bool, tuple[int, ...] | int]] = [(False, w)]
    while work:
        emit, item = work.pop()
        if emit:
            out.append(item)  # type: ignore[arg-type]
            continue
        seg: tuple[int, ...] = item  # type: ignore[assignment]
        if not seg:
            continue
        i = seg.index(max(seg))
        work.append((True, seg[i]))
        work.append((False, seg[i + 1 :]))
        work.append((False, seg[:i]))
    return tuple(out)


class FactorTag(NamedTuple):
    """Where a block landed in one decomposition step.

    ``kind`` is "L", "M", or "R"; ``group`` is the 1-based middle group
    index and is 0 for the side factors.
    """

    kind: str
    group: int = 0

    def rank(self) -> tuple[int, int]:
        return {"L": 0, "M": 1, "R": 2}[self.kind], self.group


@dataclass(frozen=True)
class Decomposition:
    """One splitting step around the chosen propagating block.

    ``block`` is the propagating block holding the largest bottom node, as
    a frozenset of signed nodes.  ``left``, ``middles``, and ``right`` are
    diagrams of the original order carrying the blocks that lie strictly
    left of, across, and strictly right of the chosen block (everything
    else padded to singletons); ``padded_block`` carries the chosen block
    alone.
    """

    block: frozenset[int]
    left: PartitionDiagram
    middles: tuple[PartitionDiagram, ...]
    right: PartitionDiagram
    padded_block: PartitionDiagram


@dataclass(frozen=True)
class TraceEvent:
    """Record of one decomposition step during a traced sort.

    ``bottom`` holds the bottom indices of the chosen block.
    ``assignment`` maps every other non-singleton block present at the
    step (as a frozenset of signed nodes) to its factor tag.
    """

    bottom: frozenset[int]
    assignment: Mapping[frozenset[int], FactorTag]


def _signed(block: tuple[int, int]) -> frozenset[int]:
    t, b = block
    return frozenset(i for i in _bits(t)) | frozenset(-i for i in _bits(b))


def _is_singleton(block: tuple[int, int]) -> bool:
    t, b = block
    return (t | b).bit_count() == 1 and (t == 0 or b == 0)


def _group_middle(blocks: list[tuple[int, int]], order: int) -> list[list[tuple[int, int]]]:
    """Group straddling blocks whose extents intersect; order groups by least node.

    The extent of a block is the interval its nodes span in the order
    1' < 2' < ... < n' < 1 < 2 < ... < n.  Blocks are related when extents
    intersect, and groups are the connected components of that relation.
    """
    items = []
    for blk in blocks:
        t, b = blk
        lo = _min_bit(b) if b else order + _min_bit(t)
        hi = order + _max_bit(t) if t else _max_bit(b)
        items.append((lo, hi, blk))
    items.sort(key=lambda x: (x[0], x[1]))
    groups: list[list[tuple[int, int]]] = []
    reach = -1
    for lo, hi, blk in items:
        if not groups or lo > reach:
            groups.append([])
            reach = hi
        else:
            reach = max(reach, hi)
        groups[-1].append(blk)
    return groups


def decompose(diagram: PartitionDiagram) -> Decomposition:
    """Split a diagram around the propagating block with the largest bottom node.

    Every other non-singleton block goes left, right, or into a middle
    group: a block with top nodes goes left (right) when they all lie
    strictly left (right) of the chosen block's top nodes, a bottom-only
    block when it lies strictly left (right) of the chosen block's bottom
    nodes, and whatever straddles goes to the middle.
    """
    props = [blk for blk in diagram.blocks if blk[0] and blk[1]]
    if not props:
        raise ValueError("diagram has no propagating block")
    chosen = max(props, key=lambda blk: _max_bit(blk[1]))
    top_lo, top_hi = _min_bit(chosen[0]), _max_bit(chosen[0])
    bot_lo, bot_hi = _min_bit(chosen[1]), _max_bit(chosen[1])

    left: list[tuple[int, int]] = []
    middle: list[tuple[int, int]] = []
    right: list[tuple[int, int]] = []
    for blk in diagram.blocks:
        if blk == chosen or _is_singleton(blk):
            continue
        t, b = blk
        if t:
            if _max_bit(t) < top_lo:
                left.append(blk)
            elif _min_bit(t) > top_hi:
                right.append(blk)
            else:
                middle.append(blk)
        else:
            if _max_bit(b) < bot_lo:
                left.append(blk)
            elif _min_bit(b) > bot_hi:
                right.append(blk)
            else:
                middle.append(blk)

    n = diagram.order
    as_diagram = lambda blks: PartitionDiagram(n, _pad_blocks(blks, n))
    return Decomposition(
        block=_signed(chosen),
        left=as_diagram(left),
        middles=tuple(as_diagram(g) for g in _group_middle(middle, n)),
        right=as_diagram(right),
        padded_block=as_diagram([chosen]),
    )


def _event(dec: Decomposition) -> TraceEvent:
    assignment: dict[frozenset[int], FactorTag] = {}
    for blk in dec.left.blocks:
        if not _is_singleton(blk):
            assignment[_signed(blk)] = FactorTag("L")
    for j, mid in enumerate(dec.middles, start=1):
        for blk in mid.blocks:
            if not _is_singleton(blk):
                assignment[_signed(blk)] = FactorTag("M", j)
    for blk in dec.right.blocks:
        if not _is_singleton(blk):
            assignment[_signed(blk)] = FactorTag("R")
    bottom = frozenset(-x for x in dec.block if x < 0)
    return TraceEvent(bottom=bottom, assignment=assignment)


def _expand(diagram: PartitionDiagram, events: list[TraceEvent] | None) -> list[PartitionDiagram]:
    """Flatten the recursion into the ordered factor list, depth first.

    Factors are diagrams of the original order: either non-propagating
    remainders, or a single already-resolved propagating block padded with
    singletons.  Resolved factors are never split again.
    """
    out: list[PartitionDiagram] = []
    work: list[tuple[bool, PartitionDiagram]] = [(False, diagram)]
    while work:
        resolved, cur = work.pop()
        if resolved or cur.propagation_number() == 0:
            out.append(cur)
            continue
        dec = decompose(cur)
        if events is not None:
            events.append(_event(dec))
        work.append((True, dec.padded_block))
        work.append((False, dec.right))
        for mid in reversed(dec.middles):
            work.append((False, mid))
        work.append((False, dec.left))
    return out


def odot_assemble(factors: Iterable[PartitionDiagram], order: int) -> PartitionDiagram:
    """Relabeling product of factor diagrams.

    Each factor must either be non-propagating or consist of one
    propagating block plus singletons.  Top nodes of the propagating
    blocks receive consecutive labels starting from 1 in factor order,
    then the non-propagating top-row blocks of size > 1 continue the
    count in factor order (leftmost block first within a factor).  Bottom
    nodes keep their labels, so the factors' non-singleton bottom sets
    must be pairwise disjoint.  Unused top labels become singletons.
    """
    fs = list(factors)
    for f in fs:
        if f.order != order:
            raise ValueError("factor order mismatch")
        p = f.propagation_number()
        if p > 1 or (p == 1 and any(not _is_singleton(b) for b in f.blocks if not (b[0] and b[1]))):
            raise ValueError("factor must be non-propagating or one propagating block plus singletons")

    blocks: list[tuple[int, int]] = []
    seen_bottom = 0
    next_top = 0  # 0-based bit position of the next fresh top label

    def fresh(width: int) -> int:
        nonlocal next_top
        if next_top + width > order:
            raise ValueError("factors consume more top labels than the order allows")
        mask = ((1 << width) - 1) << next_top
        next_top += width
        return mask

    for f in fs:
        for t, b in f.blocks:
            if t and b:
                if b & seen_bottom:
                    raise ValueError("bottom-label collision between factors")
                seen_bottom |= b
                blocks.append((fresh(t.bit_count()), b))
    for f in fs:
        if f.propagation_number():
            continue
        # canonical block order already lists top-row blocks by least top node
        for t, b in f.blocks:
            if t and not b and t.bit_count() > 1:
                blocks.append((fresh(t.bit_count()), 0))
    for f in fs:
        if f.propagation_number():
            continue
        for t, b in f.blocks:
            if b and not t and b.bit_count() > 1:
                if b & seen_bottom:
                    raise ValueError("bottom-label collision between factors")
                seen_bottom |= b
                blocks.append((0, b))
    return PartitionDiagram(order, _pad_blocks(blocks, order))


def sort_diagram(diagram: PartitionDiagram) -> PartitionDiagram:
    """The stack-sorting image of a diagram.

    A diagram without propagating blocks is returned unchanged.  On
    diagrams of permutations this agrees with :func:`sort_word` through
    the permutation embedding.
    """
    if diagram.propagation_number() == 0:
        return diagram
    return odot_assemble(_expand(diagram, None), diagram.order)


def sort_diagram_traced(diagram: PartitionDiagram) -> tuple[PartitionDiagram, tuple[TraceEvent, ...]]:
    """Like :func:`sort_diagram`, also returning one event per split step."""
    if diagram.propagation_number() == 0:
        return diagram, ()
    events: list[TraceEvent] = []
    result = odot_assemble(_expand(diagram, events), diagram.order)
    return result, tuple(events)
