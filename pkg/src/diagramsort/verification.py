"""Self-contained invariant suite behind the ``verify`` command.

Every check recomputes its expected values from scratch (closed-form
counts, independent oracles, or frozen hand-checked literals), so a green
run certifies the library against data it did not produce itself.  The
stretch-stack-sortable census has no published ground truth; its pinned
counts are regression constants computed by this package and labeled as
such.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial
from typing import Callable, Iterable

from .core import (
    PartitionDiagram,
    _diagram_from_rgs,
    compose,
    embed_permutation,
    enumerate_diagrams,
    format_diagram,
    identity_diagram,
    parse_diagram,
)
from .sorting import sort_diagram, sort_diagram_traced, sort_word
from .stretch import SetComposition, is_stretch_of_identity, stretch_map
from .analysis import (
    census_stretch_sortable,
    contains_231,
    count_t_stack_sortable,
    is_sss_direct,
    is_sss_theorem,
    is_t_stack_sortable,
)

__all__ = ["CheckResult", "run_checks", "SORTABLE_COUNTS"]

# Stretch-stack-sortable counts per order: regression constants,
# computed (by this package's exhaustive census), not from paper.
SORTABLE_COUNTS = {0: 1, 1: 1, 2: 3, 3: 12, 4: 56}
SORTABLE_COUNTS_DEEP = {5: 297}


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def _random_diagram(rng: random.Random, order: int) -> PartitionDiagram:
    rgs = []
    high = 0
    for _ in range(2 * order):
        v = rng.randint(0, high)
        rgs.append(v)
        high = max(high, v + 1)
    return _diagram_from_rgs(order, tuple(rgs))


def _check_golden_examples() -> str:
    """Hand-checked evaluations with zero tolerance."""
    d1 = parse_diagram("{1,4|2,3,4',5'|5|1',3'|2'}", 5)
    d2 = parse_diagram("{1,3|2,4,3'|5,4',5'}", 5)
    product, middle = compose(d1, d2)
    _require(product == parse_diagram("{1,4|2,3,3',4',5'}", 5), "composition product wrong")
    _require(middle == 1, "middle component count wrong")

    big = parse_diagram("{1,2|3,5,7,2',4',6'|4,3'|6,7'|5',8'}", 8)
    _require(
        sort_diagram(big) == parse_diagram("{1,3'|2,3,4,2',4',6'|5,7'|6,7|5',8'}", 8),
        "eight-node sort image wrong",
    )

    _require(sort_diagram(embed_permutation((3, 1, 2))) == identity_diagram(3), "312 must sort to the identity")

    four = parse_diagram("{1,4'|2,1'|3,4,2',3'}", 4)
    _require(sort_diagram(four) == parse_diagram("{1,1'|2,3,2',3'|4,4'}", 4), "four-node sort image wrong")

    sortable = parse_diagram("{1,3,2',3'|2,1'}", 3)
    _require(is_sss_direct(sortable) and is_sss_theorem(sortable), "three-node diagram must be sortable")

    nine = parse_diagram("{1,2,3,4',5',6'|4,6,7,1',2',3'|5,8,9,7',8',9'}", 9)
    _require(
        sort_diagram(nine) == parse_diagram("{1,2,3,4',5',6'|4,5,6,1',2',3'|7,8,9,7',8',9'}", 9),
        "nine-node sort image wrong",
    )
    _require(not is_sss_direct(nine) and not is_sss_theorem(nine), "nine-node diagram must not be sortable")

    alpha = SetComposition.parse("1,2|3|5,6,7|4")
    image = stretch_map(alpha, 7, identity_diagram(4))
    _require(
        image == parse_diagram("{1,2,1',2'|3,3'|4,4'|5,6,7,5',6',7'}", 7),
        "stretch image wrong",
    )
    return "7 golden evaluations"


def _stack_pass(word: tuple[int, ...]) -> tuple[int, ...]:
    stack: list[int] = []
    out: list[int] = []
    for x in word:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def _check_word_sort_oracle() -> str:
    total = 0
    for n in range(8):
        for p in permutations(range(1, n + 1)):
            _require(sort_word(p) == _stack_pass(p), f"sort_word disagrees with stack pass on {p}")
            total += 1
    _require(sort_word((5, 4, 3, 2, 1, 6)) == (1, 2, 3, 4, 5, 6), "543216 must sort to 123456")
    return f"{total} words against the one-pass stack"


def _check_lift_of_word_sort() -> str:
    total = 0
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            _require(
                sort_diagram(embed_permutation(p)) == embed_permutation(sort_word(p)),
                f"diagram sort disagrees with word sort on {p}",
            )
            total += 1
    return f"{total} permutations, n <= 6"


def _check_knuth_catalan() -> str:
    for n in range(1, 8):
        count = 0
        for p in permutations(range(1, n + 1)):
            one_pass = is_t_stack_sortable(p, 1)
            _require(one_pass == (not contains_231(p)), f"231 avoidance mismatch on {p}")
            count += one_pass
        _require(count == comb(2 * n, n) // (n + 1), f"one-pass count at n={n} is not Catalan")
    return "one-pass sortable == 231-avoiding == Catalan, n <= 7"


def _check_two_stack_counts() -> str:
    values = []
    for n in range(1, 8):
        expected = 2 * factorial(3 * n) // (factorial(n + 1) * factorial(2 * n + 1))
        got = count_t_stack_sortable(n, 2)
        _require(got == expected, f"two-pass count at n={n}: {got} != {expected}")
        values.append(got)
    return f"two-pass sortable counts {values}"


def _check_predicates_agree(deep: bool) -> str:
    top = 5 if deep else 4
    total = 0
    for n in range(top + 1):
        for d in enumerate_diagrams(n):
            _require(
                is_sss_direct(d) == is_sss_theorem(d),
                f"sortability predicates disagree on {format_diagram(d)} at order {n}",
            )
            total += 1
    return f"{total} diagrams, n <= {top}"


def _check_identity_laws() -> str:
    total = 0
    for n in range(4):
        ident = identity_diagram(n)
        for d in enumerate_diagrams(n):
            _require(compose(ident, d) == (d, 0), f"left identity fails on {format_diagram(d)}")
            _require(compose(d, ident) == (d, 0), f"right identity fails on {format_diagram(d)}")
            total += 1
    return f"{total} diagrams, n <= 3"


def _check_associativity(rng: random.Random) -> str:
    samples = 1000
    for _ in range(samples):
        n = rng.randint(0, 4)
        a, b, c = (_random_diagram(rng, n) for _ in range(3))
        ab, l_ab = compose(a, b)
        bc, l_bc = compose(b, c)
        left, l_left = compose(ab, c)
        right, l_right = compose(a, bc)
        _require(left == right, "composition is not associative")
        _require(l_ab + l_left == l_bc + l_right, "middle-component exponents do not balance")
    return f"{samples} random triples, n <= 4"


def _signature(d: PartitionDiagram) -> Counter:
    return Counter((t.bit_count(), b.bit_count()) for t, b in d.blocks)


def _check_sort_structure() -> str:
    total = 0
    for n in range(5):
        for d in enumerate_diagrams(n):
            s = sort_diagram(d)
            _require(s.order == d.order, "sort changed the order")
            _require(_signature(s) == _signature(d), f"block signatures changed on {format_diagram(d)}")
            bottoms = {b for _, b in d.blocks}
            for t, b in s.blocks:
                if (t | b).bit_count() > 1 and b:
                    _require(b in bottoms, f"bottom labels moved on {format_diagram(d)}")
            if d.propagation_number() == 0:
                _require(s == d, f"non-propagating diagram moved: {format_diagram(d)}")
            total += 1
    return f"{total} diagrams, n <= 4"


def _check_embedding() -> str:
    for n in range(7):
        seen = set()
        for p in permutations(range(1, n + 1)):
            d = embed_permutation(p)
            _require(d.propagation_number() == n, "embedded permutation must fully propagate")
            seen.add(d)
        _require(len(seen) == factorial(n), "embedding is not injective")
    return "injective with full propagation, n <= 6"


def _bell(m: int) -> int:
    # Bell triangle: next row starts with the previous row's last entry.
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _check_enumeration() -> str:
    counts = []
    for n in range(5):
        seen = set(enumerate_diagrams(n))
        _require(len(seen) == _bell(2 * n), f"enumeration at n={n} misses diagrams")
        counts.append(len(seen))
    return f"distinct counts {counts} match the Bell triangle"


def _check_stretch_round_trip(rng: random.Random) -> str:
    samples = 1000
    for _ in range(samples):
        universe = [x for x in range(1, 7) if rng.random() < 0.7]
        rng.shuffle(universe)
        parts = []
        i = 0
        while i < len(universe):
            j = min(len(universe), i + rng.randint(1, 3))
            parts.append(universe[i:j])
            i = j
        alpha = SetComposition(parts)
        k = max(alpha.support, default=0) + rng.randint(0, 2)
        image = stretch_map(alpha, k, identity_diagram(len(alpha)))
        _require(is_stretch_of_identity(image), f"round trip failed for {alpha!r}")
    return f"{samples} random set compositions"


def _set_partitions(items: tuple[int, ...]) -> Iterable[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _check_stretch_characterization() -> str:
    total = 0
    for n in range(4):
        comps = [
            SetComposition(ordering)
            for size in range(n + 1)
            for subset in combinations(range(1, n + 1), size)
            for part in _set_partitions(subset)
            for ordering in permutations(part)
        ]
        singles = SetComposition([{i} for i in range(1, n + 1)])
        for d in enumerate_diagrams(n):
            found = any(stretch_map(a, n, identity_diagram(len(a))) == d for a in comps)
            _require(
                found == is_stretch_of_identity(d),
                f"characterization fails on {format_diagram(d)}",
            )
            _require(stretch_map(singles, n, d) == d, "singleton composition must act as identity")
            total += 1
    return f"{total} diagrams against brute-force search, n <= 3"


def _check_monotone() -> str:
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            for t in range(3):
                if is_t_stack_sortable(p, t):
                    _require(is_t_stack_sortable(p, t + 1), f"sortability not monotone on {p}")
    return "t-sortable implies (t+1)-sortable, n <= 6"


def _check_restriction() -> str:
    total = 0
    for n in range(1, 6):
        for p in permutations(range(1, n + 1)):
            _require(
                is_sss_direct(embed_permutation(p)) == is_t_stack_sortable(p, 1),
                f"diagram and word sortability disagree on {p}",
            )
            total += 1
    return f"{total} permutations, n <= 5"


def _check_parser_round_trip(rng: random.Random) -> str:
    total = 0
    for n in range(6):
        for _ in range(1000):
            d = _random_diagram(rng, n)
            _require(parse_diagram(format_diagram(d), n) == d, f"round trip failed on {format_diagram(d)}")
            total += 1
    return f"{total} random diagrams, n <= 5"


def _check_census_regression(deep: bool) -> str:
    expected = dict(SORTABLE_COUNTS)
    if deep:
        expected.update(SORTABLE_COUNTS_DEEP)
    rows = []
    for n, want in sorted(expected.items()):
        row = census_stretch_sortable(n)
        _require(row.total == _bell(2 * n), f"census total at n={n} is not Bell(2n)")
        _require(
            row.sortable == want,
            f"census at n={n}: {row.sortable} != pinned {want} (computed, not from paper)",
        )
        rows.append(row.sortable)
    return f"sortable counts {rows} (computed, not from paper)"


def run_checks(deep: bool = False, seed: int = 2024) -> list[CheckResult]:
    """Run the whole suite; ``deep`` extends the exhaustive scans to order 5."""
    rng = random.Random(seed)
    suite: list[tuple[str, Callable[[], str]]] = [
        ("golden-examples", _check_golden_examples),
        ("word-sort-oracle", _check_word_sort_oracle),
        ("lift-of-word-sort", _check_lift_of_word_sort),
        ("knuth-catalan", _check_knuth_catalan),
        ("two-stack-counts", _check_two_stack_counts),
        ("predicates-agree", lambda: _check_predicates_agree(deep)),
        ("compose-identity-laws", _check_identity_laws),
        ("compose-associativity", lambda: _check_associativity(rng)),
        ("sort-structure", _check_sort_structure),
        ("embedding", _check_embedding),
        ("enumeration-counts", _check_enumeration),
        ("stretch-round-trip", lambda: _check_stretch_round_trip(rng)),
        ("stretch-characterization", _check_stretch_characterization),
        ("t-sortable-monotone", _check_monotone),
        ("restriction-to-permutations", _check_restriction),
        ("parser-round-trip", lambda: _check_parser_round_trip(rng)),
        ("census-regression", lambda: _check_census_regression(deep)),
    ]
    results = []
    for name, fn in suite:
        start = time.perf_counter()
        try:
            detail = fn()
            ok = True
        except Exception as exc:  # noqa: BLE001 - a failing check must not stop the suite
            detail = str(exc)
            ok = False
        results.append(CheckResult(name, ok, detail, time.perf_counter() - start))
    return results
