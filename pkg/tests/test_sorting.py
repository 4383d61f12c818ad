"""Word sorting, diagram decomposition, assembly, and the lift property."""

from __future__ import annotations

import random
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given

from conftest import diagrams, random_diagram
from diagramsort.core import (
    canonicalize,
    embed_permutation,
    enumerate_diagrams,
    format_diagram,
    identity_diagram,
    parse_diagram,
)
from diagramsort.sorting import (
    FactorTag,
    decompose,
    odot_assemble,
    sort_diagram,
    sort_diagram_traced,
    sort_word,
)

EX5_IN = "{1,2|3,5,7,2',4',6'|4,3'|6,7'|8|1'|5',8'}"
EX5_OUT = "{1,3'|2,3,4,2',4',6'|5,7'|6,7|8|1'|5',8'}"
EX18_IN = "{1,2,3,4',5',6'|4,6,7,1',2',3'|5,8,9,7',8',9'}"
EX18_OUT = "{1,2,3,4',5',6'|4,5,6,1',2',3'|7,8,9,7',8',9'}"


def _stack_pass(word):
    # Independent oracle: simulate the single pass through a stack.
    stack, out = [], []
    for x in word:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def _non_singleton_sets(d):
    return {block for block in d.block_sets() if len(block) > 1}


# --- sort_word -------------------------------------------------------------


def test_sort_word_examples():
    assert sort_word((5, 4, 3, 2, 1, 6)) == (1, 2, 3, 4, 5, 6)
    assert sort_word(()) == ()
    assert sort_word((2, 3, 1)) == (2, 1, 3)


def test_sort_word_rejects_repeats():
    with pytest.raises(ValueError):
        sort_word((1, 2, 1))


def test_sort_word_keeps_letter_set():
    assert sort_word((9, 2, 7)) == (2, 7, 9)


def test_sort_word_matches_stack_oracle():
    for n in range(8):
        for p in permutations(range(1, n + 1)):
            assert sort_word(p) == _stack_pass(p)


# --- decompose -------------------------------------------------------------


def test_decompose_eight_node_example():
    dec = decompose(parse_diagram(EX5_IN, 8))
    assert dec.block == frozenset({6, -7})
    assert _non_singleton_sets(dec.left) == {frozenset({1, 2}), frozenset({4, -3})}
    assert len(dec.middles) == 1
    assert _non_singleton_sets(dec.middles[0]) == {
        frozenset({3, 5, 7, -2, -4, -6}),
        frozenset({-5, -8}),
    }
    assert _non_singleton_sets(dec.right) == set()
    assert dec.padded_block == canonicalize([{6, -7}], 8)


def test_decompose_embedded_231():
    dec = decompose(embed_permutation((2, 3, 1)))
    assert dec.block == frozenset({2, -3})
    assert _non_singleton_sets(dec.left) == {frozenset({1, -2})}
    assert _non_singleton_sets(dec.right) == {frozenset({3, -1})}
    assert dec.middles == ()


def test_decompose_identity_one():
    dec = decompose(identity_diagram(1))
    assert dec.block == frozenset({1, -1})
    assert _non_singleton_sets(dec.left) == set()
    assert _non_singleton_sets(dec.right) == set()
    assert dec.middles == ()


def test_decompose_requires_propagating_block():
    with pytest.raises(ValueError):
        decompose(parse_diagram("{}", 2))


@given(diagrams(max_order=4, min_order=1))
def test_decompose_partitions_the_non_singleton_blocks(d):
    if d.propagation_number() == 0:
        return
    dec = decompose(d)
    pieces = [dec.left, *dec.middles, dec.right]
    assert all(p.order == d.order for p in pieces)
    scattered = [s for p in pieces for s in _non_singleton_sets(p)]
    assert len(scattered) == len(set(scattered))
    assert set(scattered) | {dec.block} == _non_singleton_sets(d) | {dec.block}


# --- odot_assemble ---------------------------------------------------------


def test_assemble_eight_node_factor_list():
    n = 8
    factors = [
        canonicalize([{1, 2}], n),
        canonicalize([], n),
        canonicalize([], n),
        canonicalize([{4, -3}], n),
        canonicalize([], n),
        canonicalize([{-5, -8}], n),
        canonicalize([], n),
        canonicalize([{3, 5, 7, -2, -4, -6}], n),
        canonicalize([], n),
        canonicalize([{6, -7}], n),
    ]
    assert format_diagram(odot_assemble(factors, n)) == EX5_OUT


def test_assemble_single_factor_gets_fresh_top_labels():
    factor = canonicalize([{3, -2}], 3)
    assert odot_assemble([factor], 3) == canonicalize([{1, -2}], 3)
    trivial = canonicalize([{1, -1}], 1)
    assert odot_assemble([trivial], 1) == trivial


def test_assemble_bottom_only_factor():
    got = odot_assemble([canonicalize([{-5, -8}], 8)], 8)
    assert got == canonicalize([{-5, -8}], 8)


def test_assemble_rejects_bottom_collision():
    b = canonicalize([{1, -1}], 2)
    with pytest.raises(ValueError):
        odot_assemble([b, b], 2)


def test_assemble_rejects_multi_propagating_factor():
    with pytest.raises(ValueError):
        odot_assemble([identity_diagram(2)], 2)
    with pytest.raises(ValueError):
        odot_assemble([canonicalize([{1, -1}, {2, 3}], 3)], 3)


def test_assemble_rejects_top_overflow():
    f1 = canonicalize([{1, 2, -1}], 2)
    f2 = canonicalize([{1, 2, -2}], 2)
    with pytest.raises(ValueError):
        odot_assemble([f1, f2], 2)


def test_assemble_rejects_order_mismatch():
    with pytest.raises(ValueError):
        odot_assemble([identity_diagram(1)], 2)


# --- sort_diagram ----------------------------------------------------------


def test_sort_eight_node_example():
    assert format_diagram(sort_diagram(parse_diagram(EX5_IN, 8))) == EX5_OUT


def test_sort_embedded_312_gives_identity():
    assert sort_diagram(embed_permutation((3, 1, 2))) == identity_diagram(3)


def test_sort_four_node_example():
    d = parse_diagram("{1,4'|2,1'|3,4,2',3'}", 4)
    assert format_diagram(sort_diagram(d)) == "{1,1'|2,3,2',3'|4,4'}"


def test_sort_nine_node_example():
    assert format_diagram(sort_diagram(parse_diagram(EX18_IN, 9))) == EX18_OUT


def test_sort_fixes_identity():
    for n in range(6):
        assert sort_diagram(identity_diagram(n)) == identity_diagram(n)


def test_sort_fixes_non_propagating_diagrams():
    for n in range(4):
        for d in enumerate_diagrams(n):
            if d.propagation_number() == 0:
                assert sort_diagram(d) == d


def test_lift_agrees_with_word_sort():
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            assert sort_diagram(embed_permutation(p)) == embed_permutation(sort_word(p))


def test_sort_structure_exhaustive_small():
    signature = lambda d: Counter((t.bit_count(), b.bit_count()) for t, b in d.blocks)
    for n in range(5):
        for d in enumerate_diagrams(n):
            s = sort_diagram(d)
            assert s.order == d.order
            assert signature(s) == signature(d)
            bottoms = {b for _, b in d.blocks}
            for t, b in s.blocks:
                if (t | b).bit_count() > 1 and b:
                    assert b in bottoms


@given(diagrams(max_order=4))
def test_sort_is_idempotent_on_its_fixpoints_signature(d):
    # The image always sorts to a diagram with the same signature again.
    once = sort_diagram(d)
    twice = sort_diagram(once)
    signature = lambda dd: Counter((t.bit_count(), b.bit_count()) for t, b in dd.blocks)
    assert signature(once) == signature(twice)


# --- traces ----------------------------------------------------------------


def test_traced_result_matches_plain_sort():
    rng = random.Random(3)
    for _ in range(200):
        d = random_diagram(rng, rng.randint(0, 4))
        result, trace = sort_diagram_traced(d)
        assert result == sort_diagram(d)
        if d.propagation_number() == 0:
            assert trace == ()


def test_trace_of_identity_two():
    # Two split steps; the first still classifies {1,1'} as a left block,
    # the second has nothing left to classify.
    _, trace = sort_diagram_traced(identity_diagram(2))
    assert len(trace) == 2
    assert trace[0].bottom == frozenset({2})
    assert trace[0].assignment == {frozenset({1, -1}): FactorTag("L")}
    assert trace[1].bottom == frozenset({1})
    assert trace[1].assignment == {}


def test_trace_first_event_eight_node_example():
    _, trace = sort_diagram_traced(parse_diagram(EX5_IN, 8))
    first = trace[0]
    assert first.bottom == frozenset({7})
    assert first.assignment == {
        frozenset({1, 2}): FactorTag("L"),
        frozenset({4, -3}): FactorTag("L"),
        frozenset({3, 5, 7, -2, -4, -6}): FactorTag("M", 1),
        frozenset({-5, -8}): FactorTag("M", 1),
    }


def test_trace_first_event_nine_node_example():
    _, trace = sort_diagram_traced(parse_diagram(EX18_IN, 9))
    first = trace[0]
    assert first.bottom == frozenset({7, 8, 9})
    assert first.assignment[frozenset({1, 2, 3, -4, -5, -6})] == FactorTag("L")
    assert first.assignment[frozenset({4, 6, 7, -1, -2, -3})] == FactorTag("M", 1)
