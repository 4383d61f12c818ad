"""Partition diagrams and the partition monoid/algebra.

A partition diagram of order n is a set-partition of the 2n nodes
{1, ..., n, 1', ..., n'}, drawn with 1..n on a top row and the primed
copies 1'..n' on a bottom row.  The parts of the set-partition are called
blocks.  Two diagrams are equal exactly when they induce the same
set-partition; no drawing data is kept.

Node convention used throughout the package: a node is a nonzero integer,
where +i means top node i and -i means bottom node i'.  So the block
{2, 3, 4', 5'} is written in Python as {2, 3, -4, -5}.  The text format
writes bottom nodes with a trailing apostrophe, e.g. "{1,4|2,3,4',5'}",
and the parser accepts "-4" as a synonym for "4'".

Internally a block is a pair of bit masks (top_mask, bottom_mask), bit i-1
set when index i belongs to the block.  This caps the order at 64 in
spirit, though Python integers do not actually enforce it; the point is
that composition and exhaustive enumeration stay cheap.  Blocks are kept
in a canonical order (sorted by least node, all top nodes before all
bottom nodes), so equal diagrams compare and hash equal.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

__all__ = [
    "PartitionDiagram",
    "canonicalize",
    "compose",
    "identity_diagram",
    "embed_permutation",
    "propagation_number",
    "enumerate_diagrams",
    "parse_diagram",
    "format_diagram",
    "to_dot",
    "XiPoly",
    "AlgebraElement",
    "algebra_multiply",
]


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def _bits(mask: int) -> Iterator[int]:
    """Yield the 1-based indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def _min_bit(mask: int) -> int:
    return (mask & -mask).bit_length()


def _max_bit(mask: int) -> int:
    return mask.bit_length()


def _block_key(block: tuple[int, int]) -> tuple[int, int]:
    # Canonical node order is top 1 < ... < top n < bottom 1 < ... < bottom n.
    t, b = block
    return (0, _min_bit(t)) if t else (1, _min_bit(b))


def _pad_blocks(blocks: Iterable[tuple[int, int]], order: int) -> list[tuple[int, int]]:
    """Extend a partial block list with singletons for every uncovered node."""
    out = list(blocks)
    seen_t = seen_b = 0
    for t, b in out:
        seen_t |= t
        seen_b |= b
    full = (1 << order) - 1
    for i in _bits(full & ~seen_t):
        out.append((1 << (i - 1), 0))
    for i in _bits(full & ~seen_b):
        out.append((0, 1 << (i - 1)))
    return out


class PartitionDiagram:
    """An immutable partition diagram of a fixed order.

    ``blocks`` is a tuple of (top_mask, bottom_mask) pairs in canonical
    order.  Construct diagrams through :func:`canonicalize`,
    :func:`parse_diagram`, or the generators in this module rather than
    assembling masks by hand.
    """

    __slots__ = ("order", "blocks", "_hash")

    def __init__(self, order: int, blocks: Iterable[tuple[int, int]]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        full = (1 << order) - 1
        blist = sorted(blocks, key=_block_key)
        seen_t = seen_b = 0
        for t, b in blist:
            if t == 0 and b == 0:
                raise ValueError("empty block")
            if t & ~full or b & ~full:
                raise ValueError(f"node index out of range 1..{order}")
            if t & seen_t or b & seen_b:
                raise ValueError("blocks overlap")
            seen_t |= t
            seen_b |= b
        if seen_t != full or seen_b != full:
            raise ValueError("blocks do not cover all 2n nodes")
        self.order = order
        self.blocks = tuple(blist)
        self._hash = hash((order, self.blocks))

    def block_sets(self) -> tuple[frozenset[int], ...]:
        """Blocks as frozensets of signed nodes (+i top, -i bottom)."""
        return tuple(
            frozenset(i for i in _bits(t)) | frozenset(-i for i in _bits(b))
            for t, b in self.blocks
        )

    def propagation_number(self) -> int:
        """Number of blocks containing nodes of both rows."""
        return sum(1 for t, b in self.blocks if t and b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionDiagram):
            return NotImplemented
        return self.order == other.order and self.blocks == other.blocks

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return format_diagram(self)

    def __repr__(self) -> str:
        return f"parse_diagram({format_diagram(self)!r}, order={self.order})"


def canonicalize(raw_blocks: Iterable[Iterable[int]], order: int) -> PartitionDiagram:
    """Build the canonical diagram from blocks of signed nodes.

    Nodes not mentioned by any block become singletons.  Raises
    ``ValueError`` if a node repeats, is zero, or lies outside 1..order.

    >>> canonicalize([{2, -1}, {1, 2}], 2)
    Traceback (most recent call last):
        ...
    ValueError: blocks overlap
    """
    blocks = []
    for raw in raw_blocks:
        t = b = 0
        count = 0
        for node in raw:
            if node == 0:
                raise ValueError("node 0 is not valid; nodes are +i (top) or -i (bottom)")
            i = abs(node)
            if i > order:
                raise ValueError(f"node index {i} out of range 1..{order}")
            bit = 1 << (i - 1)
            if node > 0:
                if t & bit:
                    raise ValueError(f"duplicate node {i} in block")
                t |= bit
            else:
                if b & bit:
                    raise ValueError(f"duplicate node {i}' in block")
                b |= bit
            count += 1
        if count == 0:
            raise ValueError("empty block")
        blocks.append((t, b))
    return PartitionDiagram(order, _pad_blocks(blocks, order))


def identity_diagram(order: int) -> PartitionDiagram:
    """The diagram with blocks {i, i'} for every i."""
    bit = [1 << i for i in range(order)]
    return PartitionDiagram(order, [(m, m) for m in bit])


def embed_permutation(word: Iterable[int]) -> PartitionDiagram:
    """Diagram of a permutation p: blocks {i, p(i)'} for i = 1..n."""
    w = tuple(word)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError("word is not a permutation of 1..n")
    return PartitionDiagram(n, [(1 << i, 1 << (w[i] - 1)) for i in range(n)])


def propagation_number(diagram: PartitionDiagram) -> int:
    return diagram.propagation_number()


def compose(d1: PartitionDiagram, d2: PartitionDiagram) -> tuple[PartitionDiagram, int]:
    """Monoid product d1 after stacking on top of d2.

    d1's bottom row is identified with d2's top row, connected components
    are read off, and the middle row is discarded.  Returns the resulting
    diagram together with the number of components lying entirely in the
    middle row (the exponent of the parameter in the algebra product).
    """
    if d1.order != d2.order:
        raise ValueError("diagrams must have the same order")
    n = d1.order
    # Union-find over 3n nodes: 0..n-1 top of d1, n..2n-1 middle, 2n..3n-1 bottom of d2.
    parent = list(range(3 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union_block(nodes: list[int]) -> None:
        first = find(nodes[0])
        for x in nodes[1:]:
            r = find(x)
            if r != first:
                parent[r] = first

    for t, b in d1.blocks:
        union_block([i - 1 for i in _bits(t)] + [n + i - 1 for i in _bits(b)])
    for t, b in d2.blocks:
        union_block([n + i - 1 for i in _bits(t)] + [2 * n + i - 1 for i in _bits(b)])

    tops: dict[int, int] = {}
    bottoms: dict[int, int] = {}
    middle_roots: set[int] = set()
    for x in range(n):
        tops.setdefault(find(x), 0)
        tops[find(x)] |= 1 << x
    for x in range(2 * n, 3 * n):
        bottoms.setdefault(find(x), 0)
        bottoms[find(x)] |= 1 << (x - 2 * n)
    for x in range(n, 2 * n):
        middle_roots.add(find(x))

    blocks = []
    for root in tops.keys() | bottoms.keys():
        blocks.append((tops.get(root, 0), bottoms.get(root, 0)))
        middle_roots.discard(root)
    return PartitionDiagram(n, blocks), len(middle_roots)


def _rgs_strings(length: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of the given length extending ``prefix``.

    A restricted growth string satisfies a[0] == 0 and
    a[i] <= max(a[:i]) + 1; each one encodes a set-partition of
    {0, ..., length-1} by assigning every element its class id.
    """
    p = len(prefix)
    if p > length:
        raise ValueError("prefix longer than the string")
    high = 0
    for i, v in enumerate(prefix):
        if v < 0 or v > high:
            raise ValueError("invalid restricted growth prefix")
        high = max(high, v + 1)
    if length == 0:
        yield ()
        return
    if p == length:
        yield tuple(prefix)
        return
    a = list(prefix) + [0] * (length - p)
    floor = max(1, p)
    while True:
        yield tuple(a)
        i = length - 1
        while i >= floor:
            mx = 0
            for j in range(i):
                if a[j] > mx:
                    mx = a[j]
            if a[i] <= mx:
                a[i] += 1
                for j in range(i + 1, length):
                    a[j] = 0
                break
            i -= 1
        else:
            return


def _diagram_from_rgs(order: int, rgs: tuple[int, ...]) -> PartitionDiagram:
    t_masks: list[int] = []
    b_masks: list[int] = []
    for pos, cls in enumerate(rgs):
        if cls == len(t_masks):
            t_masks.append(0)
            b_masks.append(0)
        if pos < order:
            t_masks[cls] |= 1 << pos
        else:
            b_masks[cls] |= 1 << (pos - order)
    return PartitionDiagram(order, zip(t_masks, b_masks))


def enumerate_diagrams(order: int, prefix: tuple[int, ...] = ()) -> Iterator[PartitionDiagram]:
    """Yield every diagram of the order exactly once.

    Enumeration runs over restricted growth strings on the 2n nodes taken
    in canonical order (top 1..n, then bottom 1..n), so there are
    Bell(2n) diagrams in total.  ``prefix`` restricts the run to strings
    extending it, which partitions the space for parallel scans.
    """
    for rgs in _rgs_strings(2 * order, prefix):
        yield _diagram_from_rgs(order, rgs)


# --- text format ----------------------------------------------------------
#
#   diagram  ::=  "{" "}"  |  "{" block ("|" block)* "}"
#   block    ::=  node ("," node)*
#   node     ::=  INT  |  INT "'"  |  "-" INT
#
# Whitespace is ignored everywhere.  "{}" denotes the all-singleton
# diagram; singleton blocks may be omitted and are restored on parse.


def parse_diagram(text: str, order: int) -> PartitionDiagram:
    """Parse the text form of a diagram at the given order.

    >>> parse_diagram("{1,2 | 2'}", 2) == parse_diagram("{1,2|1'|2'}", 2)
    True
    """
    compact = "".join(text.split())
    if not (compact.startswith("{") and compact.endswith("}")):
        raise ValueError("diagram text must be enclosed in braces")
    body = compact[1:-1]
    if not body:
        return canonicalize([], order)
    blocks = []
    for part in body.split("|"):
        if not part:
            raise ValueError("empty block in diagram text")
        nodes = []
        for token in part.split(","):
            if token.endswith("'"):
                digits, sign = token[:-1], -1
            elif token.startswith("-"):
                digits, sign = token[1:], -1
            else:
                digits, sign = token, 1
            if not digits.isdigit():
                raise ValueError(f"bad node token {token!r}")
            nodes.append(sign * int(digits))
        blocks.append(nodes)
    return canonicalize(blocks, order)


def format_diagram(diagram: PartitionDiagram) -> str:
    """Canonical text form; inverse of :func:`parse_diagram` on its output."""
    if not diagram.blocks:
        return "{}"
    parts = []
    for t, b in diagram.blocks:
        names = [str(i) for i in _bits(t)] + [f"{i}'" for i in _bits(b)]
        parts.append(",".join(names))
    return "{" + "|".join(parts) + "}"


def to_dot(diagram: PartitionDiagram) -> str:
    """Graphviz source: two ranked rows, each block drawn as a chain."""
    n = diagram.order
    lines = [
        "graph diagram {",
        "  node [shape=circle];",
        "  edge [dir=none];",
    ]
    tops = " ".join(f't{i} [label="{i}"];' for i in range(1, n + 1))
    bots = " ".join(f"b{i} [label=\"{i}'\"];" for i in range(1, n + 1))
    lines.append("  { rank=source; " + tops + " }")
    lines.append("  { rank=sink; " + bots + " }")
    if n > 1:
        order_top = " -- ".join(f"t{i}" for i in range(1, n + 1))
        order_bot = " -- ".join(f"b{i}" for i in range(1, n + 1))
        lines.append(f"  {order_top} [style=invis];")
        lines.append(f"  {order_bot} [style=invis];")
    for t, b in diagram.blocks:
        chain = [f"t{i}" for i in _bits(t)] + [f"b{i}" for i in _bits(b)]
        if len(chain) > 1:
            lines.append("  " + " -- ".join(chain) + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"


class XiPoly:
    """A polynomial in the algebra parameter xi, exact integer coefficients.

    ``coeffs[k]`` is the coefficient of xi**k; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def xi_power(cls, exponent: int) -> "XiPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [1])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "XiPoly") -> "XiPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return XiPoly(out)

    def __mul__(self, other: "XiPoly") -> "XiPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XiPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return XiPoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XiPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                base = "xi" if k == 1 else f"xi^{k}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms)


def _as_poly(coeff: "XiPoly | int") -> XiPoly:
    if isinstance(coeff, XiPoly):
        return coeff
    return XiPoly([coeff])


class AlgebraElement:
    """A finite xi-polynomial combination of diagrams of one order.

    The product of two diagrams is xi**l times their monoid composite,
    where l counts the components removed from the middle row; it extends
    bilinearly to sums.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Mapping[PartitionDiagram, "XiPoly | int"]):
        clean: dict[PartitionDiagram, XiPoly] = {}
        for diagram, coeff in terms.items():
            if diagram.order != order:
                raise ValueError("term order does not match element order")
            poly = _as_poly(coeff)
            if poly:
                clean[diagram] = poly
        self.order = order
        self.terms = clean

    @classmethod
    def from_diagram(cls, diagram: PartitionDiagram, coeff: "XiPoly | int" = 1) -> "AlgebraElement":
        return cls(diagram.order, {diagram: coeff})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.order != other.order:
            raise ValueError("elements must have the same order")
        merged = dict(self.terms)
        for diagram, poly in other.terms.items():
            merged[diagram] = merged.get(diagram, XiPoly()) + poly
        return AlgebraElement(self.order, merged)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return algebra_multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return f"AlgebraElement({self.order}, {{}})"
        parts = [
            f"({poly})*{format_diagram(d)}"
            for d, poly in sorted(self.terms.items(), key=lambda kv: format_diagram(kv[0]))
        ]
        return " + ".join(parts)


def algebra_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the diagram product xi**l * (d1 composed d2)."""
    if a.order != b.order:
        raise ValueError("elements must have the same order")
    out: dict[PartitionDiagram, XiPoly] = {}
    for d1, p1 in a.terms.items():
        for d2, p2 in b.terms.items():
            composite, middle = compose(d1, d2)
            contribution = p1 * p2 * XiPoly.xi_power(middle)
            if composite in out:
                out[composite] = out[composite] + contribution
            else:
                out[composite] = contribution
    return AlgebraElement(a.order, out)
