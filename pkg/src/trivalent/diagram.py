"""Diagrams as finite sets of arcs with two permutations acting on them.

A diagram is a set of n arcs (numbered 0..n-1) together with a rotation
permutation `rot` (one step of the cyclic orientation around a vertex) and an
involution `inv` (reversal of an arc).  Vertices are the rot-orbits, edges
the inv-orbits; an inv-fixed arc is a folded (external) edge.  A diagram is
*trivalent* when rot has order dividing 3, i.e. every vertex has degree 1
or 3.

Connected diagrams pointed at a base arc classify finite-index subgroups of
the group generated by one element of infinite order and one involution
(with the trivalence constraint: of the modular group); forgetting the base
point classifies subgroups up to conjugacy.  This module implements the
decision procedures that make those classifications effective:

- existence of a base-point-preserving equivariant map, decided by closing
  the pair (base, base') under both generators and watching for conflicts;
- isomorphism and conjugacy via canonical relabeling;
- normality as arc-transitivity of the automorphism group.

The canonical relabeling traverses arcs breadth-first from a base arc,
applying generators in the fixed order [rot, rot^-1, inv] (for trivalent
diagrams rot^-1 = rot^2, so this matches the declared trivalent order
[rot, rot^2, inv]).  That order is normative for the text format: codes are
comparable across implementations only if the order matches.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional


def _check_permutation(name: str, images, n: int) -> tuple:
    images = tuple(int(x) for x in images)
    if len(images) != n:
        raise ValueError("%s must have %d entries, got %d" % (name, n, len(images)))
    seen = [False] * n
    for x in images:
        if not 0 <= x < n:
            raise ValueError("%s image %d out of range 0..%d" % (name, x, n - 1))
        if seen[x]:
            raise ValueError("%s is not a permutation: image %d repeated" % (name, x))
        seen[x] = True
    return images


class Diagram:
    """A set of arcs with a rotation permutation and an arc involution."""

    __slots__ = ("n", "rot", "inv", "_rot_inverse", "_connected")

    def __init__(self, rot, inv, require_trivalent: bool = False):
        rot = tuple(int(x) for x in rot)
        n = len(rot)
        if n < 1:
            raise ValueError("a diagram needs at least one arc")
        rot = _check_permutation("rot", rot, n)
        inv = _check_permutation("inv", inv, n)
        for a in range(n):
            if inv[inv[a]] != a:
                raise ValueError("inv is not an involution (at arc %d)" % a)
        if require_trivalent:
            for a in range(n):
                if rot[rot[rot[a]]] != a:
                    raise ValueError(
                        "not trivalent: rot^3 != id (at arc %d)" % a
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rot", rot)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "_rot_inverse", None)
        object.__setattr__(self, "_connected", None)

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    @property
    def rot_inverse(self) -> tuple:
        cached = self._rot_inverse
        if cached is None:
            cached = [0] * self.n
            for a, b in enumerate(self.rot):
                cached[b] = a
            cached = tuple(cached)
            object.__setattr__(self, "_rot_inverse", cached)
        return cached

    @property
    def trivalent(self) -> bool:
        rot = self.rot
        return all(rot[rot[rot[a]]] == a for a in range(self.n))

    def is_connected(self) -> bool:
        """True iff rot and inv together act transitively on the arcs."""
        cached = self._connected
        if cached is None:
            seen = [False] * self.n
            seen[0] = True
            stack = [0]
            count = 1
            rot, inv = self.rot, self.inv
            while stack:
                a = stack.pop()
                for b in (rot[a], inv[a]):
                    if not seen[b]:
                        seen[b] = True
                        count += 1
                        stack.append(b)
            cached = count == self.n
            object.__setattr__(self, "_connected", cached)
        return cached

    def vertices(self) -> list:
        """The rot-orbits, each a list of arcs in cycle order."""
        return _orbits_in_cycle_order(self.rot)

    def edges(self) -> list:
        """The inv-orbits: folded edges are singletons, plain edges pairs."""
        return _orbits_in_cycle_order(self.inv)

    def relabel(self, perm) -> "Diagram":
        """Conjugate both permutations by `perm` (arc i becomes perm[i])."""
        perm = _check_permutation("perm", perm, self.n)
        rot = [0] * self.n
        inv = [0] * self.n
        for a in range(self.n):
            rot[perm[a]] = perm[self.rot[a]]
            inv[perm[a]] = perm[self.inv[a]]
        return Diagram(rot, inv)

    def to_text(self) -> str:
        return "n=%d; rot=[%s]; inv=[%s]" % (
            self.n,
            ",".join(map(str, self.rot)),
            ",".join(map(str, self.inv)),
        )

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.rot == other.rot and self.inv == other.inv

    def __hash__(self):
        return hash((self.rot, self.inv))

    def __repr__(self):
        return "Diagram(rot=%r, inv=%r)" % (list(self.rot), list(self.inv))


class PointedDiagram:
    """A connected diagram with a distinguished base arc."""

    __slots__ = ("diagram", "base")

    def __init__(self, diagram: Diagram, base: int):
        if not 0 <= base < diagram.n:
            raise ValueError("base arc %d out of range 0..%d" % (base, diagram.n - 1))
        if not diagram.is_connected():
            raise ValueError("pointed diagrams must be connected")
        object.__setattr__(self, "diagram", diagram)
        object.__setattr__(self, "base", base)

    def __setattr__(self, name, value):
        raise AttributeError("PointedDiagram is immutable")

    def to_text(self) -> str:
        return "%s; base=%d" % (self.diagram.to_text(), self.base)

    def __eq__(self, other):
        if not isinstance(other, PointedDiagram):
            return NotImplemented
        return self.diagram == other.diagram and self.base == other.base

    def __hash__(self):
        return hash((self.diagram, self.base))

    def __repr__(self):
        return "PointedDiagram(%r, base=%d)" % (self.diagram, self.base)


def _orbits_in_cycle_order(perm) -> list:
    n = len(perm)
    seen = [False] * n
    orbits = []
    for a in range(n):
        if seen[a]:
            continue
        orbit = []
        b = a
        while not seen[b]:
            seen[b] = True
            orbit.append(b)
            b = perm[b]
        orbits.append(orbit)
    return orbits


# ---------------------------------------------------------------------------
# text format


class DiagramParseError(ValueError):
    """Raised on malformed diagram text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


def _text_position(text: str, offset: int) -> tuple:
    while offset < len(text) and text[offset].isspace():
        offset += 1
    prefix = text[:offset]
    line = prefix.count("\n") + 1
    column = offset - (prefix.rfind("\n") + 1) + 1
    return line, column


def parse_diagram_text(text: str, require_trivalent: bool = False):
    """Parse the normative text format.

    ``n=<int>; rot=[i0,...]; inv=[j0,...]`` with an optional ``; base=<int>``;
    whitespace is insignificant everywhere.  Returns (Diagram, base or None).
    """
    fields = {}
    offset = 0
    for segment in text.split(";"):
        seg_offset = offset
        offset += len(segment) + 1
        if not segment.strip():
            continue
        if "=" not in segment:
            line, col = _text_position(text, seg_offset)
            raise DiagramParseError("expected key=value, got %r" % segment.strip(),
                                    line, col)
        key, _, value = segment.partition("=")
        key = key.strip()
        value = "".join(value.split())
        if key in fields:
            line, col = _text_position(text, seg_offset)
            raise DiagramParseError("duplicate field %r" % key, line, col)
        if key not in ("n", "rot", "inv", "base"):
            line, col = _text_position(text, seg_offset)
            raise DiagramParseError("unknown field %r" % key, line, col)
        fields[key] = (value, seg_offset)

    for required in ("n", "rot", "inv"):
        if required not in fields:
            line, col = _text_position(text, len(text))
            raise DiagramParseError("missing field %r" % required, line, col)

    def parse_int(key):
        value, seg_offset = fields[key]
        try:
            return int(value)
        except ValueError:
            line, col = _text_position(text, seg_offset)
            raise DiagramParseError("field %r is not an integer: %r" % (key, value),
                                    line, col) from None

    def parse_list(key):
        value, seg_offset = fields[key]
        if not (value.startswith("[") and value.endswith("]")):
            line, col = _text_position(text, seg_offset)
            raise DiagramParseError("field %r must be a bracketed list" % key,
                                    line, col)
        body = value[1:-1]
        if not body:
            return []
        try:
            return [int(x) for x in body.split(",")]
        except ValueError:
            line, col = _text_position(text, seg_offset)
            raise DiagramParseError("field %r has a non-integer entry" % key,
                                    line, col) from None

    n = parse_int("n")
    rot = parse_list("rot")
    inv = parse_list("inv")
    base = parse_int("base") if "base" in fields else None
    if len(rot) != n or len(inv) != n:
        line, col = _text_position(text, fields["n"][1])
        raise DiagramParseError(
            "n=%d but rot has %d entries and inv has %d" % (n, len(rot), len(inv)),
            line, col)
    try:
        diagram = Diagram(rot, inv, require_trivalent=require_trivalent)
    except ValueError as exc:
        line, col = _text_position(text, fields["rot"][1])
        raise DiagramParseError(str(exc), line, col) from None
    if base is not None and not 0 <= base < n:
        line, col = _text_position(text, fields["base"][1])
        raise DiagramParseError("base=%d out of range 0..%d" % (base, n - 1),
                                line, col)
    return diagram, base


# ---------------------------------------------------------------------------
# pointed morphisms via closure


class MorphismConflict(NamedTuple):
    """Evidence that no pointed morphism exists.

    Applying `generator` to `arc` forces the image of `target_arc` to be
    `required`, but the closure had already fixed it to `existing`.  Together
    with the partial map this is checkable directly against the two inputs.
    """

    arc: int
    generator: str
    target_arc: int
    existing: int
    required: int
    partial_map: tuple


def _close(src: Diagram, a: int, dst: Diagram, b: int):
    """Close (a, b) under both generators.

    Returns (mapping, None) when a full equivariant map exists, else
    (None, MorphismConflict).  Touches each src arc a bounded number of
    times, so it runs in O(src.n) generator applications.
    """
    m = [-1] * src.n
    m[a] = b
    queue = deque((a,))
    gens = (("rot", src.rot, dst.rot), ("inv", src.inv, dst.inv))
    while queue:
        x = queue.popleft()
        mx = m[x]
        for name, g_src, g_dst in gens:
            y = g_src[x]
            image = g_dst[mx]
            if m[y] < 0:
                m[y] = image
                queue.append(y)
            elif m[y] != image:
                return None, MorphismConflict(
                    arc=x,
                    generator=name,
                    target_arc=y,
                    existing=m[y],
                    required=image,
                    partial_map=tuple(m),
                )
    return tuple(m), None


def pointed_morphism(src: PointedDiagram, dst: PointedDiagram) -> Optional[tuple]:
    """The unique pointed equivariant map src -> dst as an image tuple,
    or None when the base pair is critical (no such map exists)."""
    m, _ = _close(src.diagram, src.base, dst.diagram, dst.base)
    return m


def pointed_morphism_conflict(src: PointedDiagram, dst: PointedDiagram):
    """The MorphismConflict witnessing non-existence, or None if a map exists."""
    _, conflict = _close(src.diagram, src.base, dst.diagram, dst.base)
    return conflict


def pointed_isomorphic(p1: PointedDiagram, p2: PointedDiagram) -> bool:
    """Base-point-preserving isomorphism.

    Morphisms both ways are automatically mutually inverse, and for equal arc
    counts a single morphism is already bijective, so one closure suffices.
    """
    if p1.diagram.n != p2.diagram.n:
        return False
    return pointed_morphism(p1, p2) is not None


def subgroup_includes(p_big: PointedDiagram, p_small: PointedDiagram) -> bool:
    """True iff the subgroup classified by `p_big` is contained in the one
    classified by `p_small` (the morphism runs from larger index to smaller)."""
    return pointed_morphism(p_big, p_small) is not None


# ---------------------------------------------------------------------------
# canonical codes, automorphisms, normality


def _relabeling_from(d: Diagram, base: int) -> list:
    """Labels arcs by breadth-first discovery from `base`, applying
    generators in the order [rot, rot^-1, inv].  Returns the label array."""
    rot, rot_inv, inv = d.rot, d.rot_inverse, d.inv
    label = [-1] * d.n
    label[base] = 0
    order = [base]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for g in (rot, rot_inv, inv):
            y = g[x]
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
    return label


def _code_tuple(d: Diagram, base: int) -> tuple:
    label = _relabeling_from(d, base)
    n = d.n
    rot_new = [0] * n
    inv_new = [0] * n
    for a in range(n):
        rot_new[label[a]] = label[d.rot[a]]
        inv_new[label[a]] = label[d.inv[a]]
    return tuple(rot_new), tuple(inv_new)


def _encode(n: int, rot: tuple, inv: tuple) -> bytes:
    return ("%d;%s;%s" % (n, ",".join(map(str, rot)), ",".join(map(str, inv)))).encode("ascii")


def canonical_code(d: Diagram) -> bytes:
    """A complete isomorphism invariant of connected diagrams.

    Every base arc induces one relabeling (pointed diagrams are rigid, so it
    is well defined); the code is the lexicographically least serialization
    over all base arcs.  Two connected diagrams are isomorphic iff their
    codes are equal.
    """
    if not d.is_connected():
        raise ValueError("canonical codes are defined for connected diagrams only")
    best = min(_code_tuple(d, base) for base in range(d.n))
    return _encode(d.n, *best)


def canonical_representative(d: Diagram) -> Diagram:
    """The canonically relabeled isomorphic copy of `d` (same code)."""
    if not d.is_connected():
        raise ValueError("canonical form is defined for connected diagrams only")
    rot, inv = min(_code_tuple(d, base) for base in range(d.n))
    return Diagram(rot, inv)


def conjugate_subgroups(p1: PointedDiagram, p2: PointedDiagram) -> bool:
    """True iff the two classified subgroups are conjugate, i.e. the diagrams
    with base points forgotten are isomorphic."""
    return canonical_code(p1.diagram) == canonical_code(p2.diagram)


def automorphisms(d: Diagram) -> list:
    """All automorphisms of a connected diagram, as image tuples.

    Each arc a with a pointed morphism (d, 0) -> (d, a) contributes exactly
    one; such a self-map is automatically bijective.
    """
    if not d.is_connected():
        raise ValueError("automorphisms computed for connected diagrams only")
    maps = []
    for a in range(d.n):
        m, _ = _close(d, 0, d, a)
        if m is not None:
            maps.append(m)
    return maps


def automorphism_order(d: Diagram) -> int:
    """|Aut(d)| for connected d; equals the number of arcs a with
    (d, 0) = (d, a) as pointed diagrams, because pointed maps are unique."""
    return len(automorphisms(d))


def is_normal(d: Diagram) -> bool:
    """True iff Aut(d) is transitive on arcs = the classified conjugacy class
    consists of a single normal subgroup."""
    if not d.is_connected():
        raise ValueError("normality is decided for connected diagrams only")
    for a in range(d.n):
        m, _ = _close(d, 0, d, a)
        if m is None:
            return False
    return True


# ---------------------------------------------------------------------------
# barycentric subdivision export


@dataclass(frozen=True)
class BicoloredGraph:
    """A bipartite graph with black vertices (from diagram vertices) and
    white vertices (from edges), one graph edge per arc."""

    black_count: int
    white_count: int
    edges: tuple  # (black_index, white_index) per arc, in arc order

    def white_degrees(self) -> list:
        deg = [0] * self.white_count
        for _, w in self.edges:
            deg[w] += 1
        return deg

    def is_clean(self) -> bool:
        """White degrees must be 1 (folded edge) or 2; the coloring is proper
        by construction."""
        return all(1 <= deg <= 2 for deg in self.white_degrees())

    def to_dot(self) -> str:
        lines = ["graph barycentric {"]
        for i in range(self.black_count):
            lines.append(
                '  b%d [shape=circle, style=filled, fillcolor=black, label=""];' % i
            )
        for j in range(self.white_count):
            lines.append('  w%d [shape=circle, label=""];' % j)
        for b, w in self.edges:
            lines.append("  b%d -- w%d;" % (b, w))
        lines.append("}")
        return "\n".join(lines) + "\n"


def barycentric_graph(d: Diagram) -> BicoloredGraph:
    """Insert a white vertex in the middle of every edge: black vertices are
    the rot-orbits, white vertices the inv-orbits, one edge per arc."""
    black_of = [0] * d.n
    for i, orbit in enumerate(d.vertices()):
        for a in orbit:
            black_of[a] = i
    white_of = [0] * d.n
    white_count = 0
    for orbit in d.edges():
        for a in orbit:
            white_of[a] = white_count
        white_count += 1
    return BicoloredGraph(
        black_count=len(d.vertices()),
        white_count=white_count,
        edges=tuple((black_of[a], white_of[a]) for a in range(d.n)),
    )
