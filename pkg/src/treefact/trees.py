"""Labeled trees, plane (rotation-system) trees, and their walks.

A plane tree is a labeled tree on ``1..n`` together with a cyclic ordering of
the neighbors of every vertex and a marked edge at the top vertex ``n``.  The
clockwise walk around a plane tree visits every edge twice; reading the walk
yields a minimal reflection factorization of the long translation, and the
run-leaf labels along the walk yield a maximal subword.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Mapping, Sequence

from .affine import DomainError, InvariantViolation, Reflection
from .factorization import (Factorization, chain_reflections, is_minimal,
                            is_tree_like, neighbor_sequences)
from .subwords import Subword, is_maximal_distinguished, skip_reflections


@dataclass(frozen=True)
class LabeledTree:
    """A tree on vertices ``1..n`` stored as sorted edge pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 2:
            raise DomainError(f"tree must have at least 2 vertices, got n={n!r}")
        norm = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in self.edges))
        object.__setattr__(self, "edges", norm)
        if len(norm) != n - 1:
            raise DomainError(f"tree on {n} vertices needs {n - 1} edges, "
                              f"got {len(norm)}")
        if len(set(norm)) != len(norm):
            raise DomainError(f"duplicate edges: {norm}")
        for a, b in norm:
            if not (1 <= a <= n and 1 <= b <= n):
                raise DomainError(f"edge {(a, b)} leaves the vertex range 1..{n}")
            if a == b:
                raise DomainError(f"self-loop at {a}")
        # Connectivity: n-1 distinct edges + connected <=> tree.
        adj = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != n:
            raise DomainError(f"edges do not form a connected tree: {norm}")

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: sorted(u) for v, u in adj.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex must be in 1..{self.n}, got {v}")
        return tuple(self.adjacency()[v])

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def parents_toward_top(self) -> dict[int, int]:
        """For each vertex except ``n``, its neighbor on the path to ``n``."""
        adj = self.adjacency()
        parent: dict[int, int] = {}
        stack = [self.n]
        seen = {self.n}
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    parent[u] = v
                    seen.add(u)
                    stack.append(u)
        return parent

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "LabeledTree":
        try:
            return cls(int(data["n"]),
                       tuple((int(a), int(b)) for a, b in data["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"malformed tree record: {data!r}") from exc

    @classmethod
    def from_sequence(cls, seq: Sequence[int], n: int) -> "LabeledTree":
        """Decode a length ``n - 2`` vertex sequence into a tree (each vertex
        ``v`` appears ``deg(v) - 1`` times)."""
        if len(seq) != n - 2:
            raise DomainError(f"sequence must have length {n - 2}, got {len(seq)}")
        if any(not 1 <= v <= n for v in seq):
            raise DomainError(f"sequence entries must be in 1..{n}: {seq}")
        degree = {v: 1 for v in range(1, n + 1)}
        for v in seq:
            degree[v] += 1
        leaves = [v for v in range(1, n + 1) if degree[v] == 1]
        heapq.heapify(leaves)
        edges = []
        for v in seq:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(leaves, v)
        edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
        return cls(n, tuple(edges))


def all_labeled_trees(n: int) -> Iterator[LabeledTree]:
    """All ``n^(n-2)`` labeled trees, in sequence-code order."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield LabeledTree.from_sequence(seq, n)


def _anchor(cyc: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic tuple so its smallest entry comes first."""
    cyc = tuple(cyc)
    i = cyc.index(min(cyc))
    return cyc[i:] + cyc[:i]


@dataclass(frozen=True)
class PlaneTree:
    """A labeled tree with cyclic neighbor orders and a marked edge at ``n``.

    ``rotations[v - 1]`` lists the neighbors of ``v`` in clockwise order,
    anchor-normalized to start at the smallest neighbor, so structural
    equality of plane trees is plain dataclass equality.
    """

    n: int
    rotations: tuple[tuple[int, ...], ...]
    marked: tuple[int, int]

    def __post_init__(self) -> None:
        n = self.n
        object.__setattr__(self, "rotations",
                           tuple(tuple(r) for r in self.rotations))
        object.__setattr__(self, "marked", tuple(self.marked))
        if len(self.rotations) != n:
            raise DomainError(f"need one rotation per vertex 1..{n}")
        edges = []
        for v, rot in enumerate(self.rotations, start=1):
            if len(set(rot)) != len(rot):
                raise DomainError(f"rotation of {v} repeats a neighbor: {rot}")
            if rot and rot[0] != min(rot):
                raise DomainError(
                    f"rotation of {v} is not anchored at its smallest entry: {rot}"
                )
            for u in rot:
                if u < v:
                    edges.append((u, v))
        tree = LabeledTree(n, tuple(edges))
        adj = tree.adjacency()
        for v, rot in enumerate(self.rotations, start=1):
            if sorted(rot) != adj[v]:
                raise DomainError(
                    f"rotation of {v} is {rot}, expected a cyclic order of "
                    f"{adj[v]}"
                )
        if self.marked[0] != n or self.marked[1] not in adj[n]:
            raise DomainError(
                f"marked edge {self.marked} must join {n} to one of its "
                f"neighbors {adj[n]}"
            )

    @classmethod
    def from_rotations(cls, n: int, rotations: Mapping[int, Sequence[int]],
                       marked: tuple[int, int]) -> "PlaneTree":
        rows = []
        for v in range(1, n + 1):
            rot = rotations.get(v, ())
            rows.append(_anchor(rot) if rot else ())
        return cls(n, tuple(rows), (int(marked[0]), int(marked[1])))

    def tree(self) -> LabeledTree:
        edges = [(u, v) for v, rot in enumerate(self.rotations, start=1)
                 for u in rot if u < v]
        return LabeledTree(self.n, tuple(edges))

    def rotation(self, v: int) -> tuple[int, ...]:
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex must be in 1..{self.n}, got {v}")
        return self.rotations[v - 1]

    def next_after(self, v: int, u: int) -> int:
        """The neighbor of ``v`` immediately after ``u`` in clockwise order."""
        rot = self.rotation(v)
        try:
            i = rot.index(u)
        except ValueError as exc:
            raise DomainError(f"{u} is not a neighbor of {v}") from exc
        return rot[(i + 1) % len(rot)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.tree().edges],
            "rotation": {str(v): list(self.rotations[v - 1])
                         for v in range(1, self.n + 1)},
            "marked": list(self.marked),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PlaneTree":
        try:
            n = int(data["n"])
            rotations = {int(v): [int(u) for u in rot]
                         for v, rot in data["rotation"].items()}
            marked = (int(data["marked"][0]), int(data["marked"][1]))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise DomainError(f"malformed plane-tree record: {data!r}") from exc
        plane = cls.from_rotations(n, rotations, marked)
        if "edges" in data:
            declared = LabeledTree(n, tuple((int(a), int(b))
                                            for a, b in data["edges"]))
            if declared != plane.tree():
                raise DomainError("edge list disagrees with the rotations")
        return plane


def cyclic_embedding(tree: LabeledTree) -> PlaneTree:
    """The vertex-anchored plane structure of a labeled tree.

    Neighbors of each vertex ``v != n`` are sorted increasingly after the
    neighbor toward ``n`` is re-keyed as ``v`` itself; neighbors of ``n`` are
    sorted increasingly.  The marked edge joins ``n`` to its smallest
    neighbor.
    """
    parent = tree.parents_toward_top()
    rotations: dict[int, tuple[int, ...]] = {}
    for v in range(1, tree.n + 1):
        nbrs = tree.neighbors(v)
        if v == tree.n:
            rotations[v] = tuple(sorted(nbrs))
        else:
            rotations[v] = tuple(sorted(
                nbrs, key=lambda u: v if u == parent[v] else u))
    marked = (tree.n, min(tree.neighbors(tree.n)))
    return PlaneTree.from_rotations(tree.n, rotations, marked)


def all_plane_trees(n: int) -> Iterator[PlaneTree]:
    """Every plane tree on ``1..n``: all labeled trees, all cyclic neighbor
    orders, all marked edges at ``n``."""
    for tree in all_labeled_trees(n):
        adj = tree.adjacency()
        per_vertex = []
        for v in range(1, n + 1):
            nbrs = adj[v]
            anchored = [tuple([nbrs[0]] + list(rest))
                        for rest in permutations(nbrs[1:])]
            per_vertex.append(anchored)
        for rows in product(*per_vertex):
            for mark in adj[n]:
                yield PlaneTree(n, tuple(rows), (n, mark))


@dataclass(frozen=True)
class WalkSequence:
    """The closed clockwise walk of a plane tree (``2n - 1`` vertices)."""

    n: int
    vertices: tuple[int, ...]

    def steps(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))


def clockwise_walk(plane: PlaneTree) -> WalkSequence:
    """Walk the tree clockwise from the marked edge back to the top vertex.

    Each undirected edge is traversed exactly twice (once per direction).
    """
    n = plane.n
    verts = [n, plane.marked[1]]
    while len(verts) < 2 * n - 1:
        prev, cur = verts[-2], verts[-1]
        verts.append(plane.next_after(cur, prev))
    if verts[-1] != n:
        raise InvariantViolation(
            f"clockwise walk did not return to {n}: {verts}"
        )
    step_counts: dict[tuple[int, int], int] = {}
    for a, b in zip(verts, verts[1:]):
        key = (min(a, b), max(a, b))
        step_counts[key] = step_counts.get(key, 0) + 1
    if (set(step_counts) != set(plane.tree().edges)
            or any(c != 2 for c in step_counts.values())):
        raise InvariantViolation(
            f"clockwise walk does not cover each edge twice: {verts}"
        )
    return WalkSequence(n, tuple(verts))


def factorization_from_tree(plane: PlaneTree) -> Factorization:
    """Read the walk as reflections: step ``(a, b)`` becomes ``((a, b))`` when
    ``a < b`` and ``((a - n, b))`` otherwise.

    The result is asserted to be a tree-like minimal factorization of the
    long translation.
    """
    n = plane.n
    walk = clockwise_walk(plane)
    refs = []
    for a, b in walk.steps():
        refs.append(Reflection(n, a, b) if a < b else Reflection(n, a - n, b))
    fact = Factorization(n, tuple(refs))
    if not is_minimal(fact):
        raise InvariantViolation(
            f"walk of {plane.to_dict()} does not factor the long translation"
        )
    if not is_tree_like(fact):
        raise InvariantViolation(
            f"walk of {plane.to_dict()} yields a non-tree-like factorization"
        )
    return fact


def tree_from_factorization(fact: Factorization) -> PlaneTree:
    """Rebuild the plane tree of a tree-like factorization.

    Edges are the canonical factors lying inside ``1..n``; rotations are the
    neighbor sequences; the marked edge comes from the first factor.
    """
    if not is_tree_like(fact):
        raise DomainError("expected a tree-like factorization")
    n = fact.n
    chained = chain_reflections(fact)
    edge_refs = [r for r in fact.canonical_refs() if r.lo >= 1]
    if len(edge_refs) != n - 1:
        raise InvariantViolation(
            f"expected {n - 1} factors with canonical form inside 1..{n}, "
            f"got {len(edge_refs)}"
        )
    tree = LabeledTree(n, tuple((r.lo, r.hi) for r in edge_refs))
    seqs = neighbor_sequences(fact)
    adj = tree.adjacency()
    for v in range(1, n + 1):
        if sorted(seqs[v]) != adj[v]:
            raise InvariantViolation(
                f"neighbor sequence of {v} is {seqs[v]}, expected a cyclic "
                f"order of {adj[v]}"
            )
    marked = (n, chained.refs[0].hi_residue)
    return PlaneTree.from_rotations(n, seqs, marked)


@dataclass(frozen=True)
class RunLeafLabels:
    """Run-leaf labels along the walk: one label before, between, and after
    the ``2n - 2`` steps (``2n - 1`` labels), attached at the walk vertices."""

    n: int
    labels: tuple[int, ...]
    at_vertices: tuple[int, ...]


def _require_vertex_anchored(plane: PlaneTree) -> None:
    if plane != cyclic_embedding(plane.tree()):
        raise DomainError(
            "run-leaf labels are only defined on the vertex-anchored "
            "embedding of the underlying tree"
        )


def run_leaf_labels(plane: PlaneTree) -> RunLeafLabels:
    """Labels ``l_0 .. l_{2n-2}`` along the clockwise walk.

    The general rule re-keys a walk neighbor as the current vertex whenever it
    lies toward the top vertex, then takes the difference of the two re-keyed
    neighbors mod ``n - 1`` (0 is rendered as ``n - 1``).  The equivalent
    case-by-case rule is computed too, and the two are asserted to agree, as
    are the per-vertex label sums.
    """
    _require_vertex_anchored(plane)
    n = plane.n
    walk = clockwise_walk(plane)
    verts = walk.vertices
    parent = plane.tree().parents_toward_top()

    def norm(x: int) -> int:
        d = x % (n - 1)
        return d if d else n - 1

    labels = [verts[1]]
    for k in range(1, 2 * n - 3 + 1):
        vp, v, vn = verts[k - 1], verts[k], verts[k + 1]
        prev_is_parent = v != n and vp == parent[v]
        next_is_parent = v != n and vn == parent[v]
        a = v if prev_is_parent else vp
        b = v if next_is_parent else vn
        value = norm(b - a)

        if vp == vn:
            by_cases = n - 1
        elif prev_is_parent and next_is_parent:
            raise InvariantViolation(
                f"walk neighbors of {v} at step {k} both point toward the top"
            )
        elif prev_is_parent:
            by_cases = norm(vn - v)
        elif next_is_parent:
            by_cases = norm(v - vp)
        else:
            by_cases = norm(vn - vp)
        if value != by_cases:
            raise InvariantViolation(
                f"general and case-by-case run-leaf rules disagree at step {k}: "
                f"{value} vs {by_cases}"
            )
        labels.append(value)
    labels.append((n - 1) - verts[2 * n - 3])

    if sum(labels) != n * (n - 1):
        raise InvariantViolation(
            f"run-leaf labels sum to {sum(labels)}, expected {n * (n - 1)}"
        )
    per_vertex: dict[int, int] = {v: 0 for v in range(1, n + 1)}
    for value, v in zip(labels, verts):
        per_vertex[v] += value
    bad = {v: s for v, s in per_vertex.items() if s != n - 1}
    if bad:
        raise InvariantViolation(
            f"per-vertex run-leaf sums must equal {n - 1}, got {bad}"
        )
    return RunLeafLabels(n, tuple(labels), verts)


def subword_from_tree(plane: PlaneTree) -> Subword:
    """Emit the maximal subword of a vertex-anchored plane tree.

    Each of the first ``2n - 2`` run-leaf labels ``l`` emits ``l - 1`` taken
    letters and one skip; the final label emits that many taken letters.  The
    result is asserted to be maximal with skip reflections matching the
    walk's factorization.
    """
    rl = run_leaf_labels(plane)
    n = plane.n
    bits: list[int] = []
    for value in rl.labels[:-1]:
        bits.extend([1] * (value - 1))
        bits.append(0)
    bits.extend([1] * rl.labels[-1])
    if len(bits) != n * (n - 1):
        raise InvariantViolation(
            f"emitted {len(bits)} positions, expected {n * (n - 1)}"
        )
    u = Subword(n, tuple(bits))
    if not is_maximal_distinguished(u):
        raise InvariantViolation(
            f"subword of {plane.to_dict()} is not maximal: {u.indicator}"
        )
    got = skip_reflections(u).canonical_refs()
    want = factorization_from_tree(plane).canonical_refs()
    if got != want:
        raise InvariantViolation(
            "skip reflections of the emitted subword do not match the walk: "
            f"{[str(r) for r in got]} vs {[str(r) for r in want]}"
        )
    return u


def tree_from_subword(u: Subword) -> PlaneTree:
    """Rebuild the plane tree of a maximal subword from its skip reflections."""
    if not is_maximal_distinguished(u):
        raise DomainError("expected a maximal subword")
    fact = skip_reflections(u)
    if not is_tree_like(fact):
        raise InvariantViolation(
            f"skip reflections of a maximal subword are not tree-like: "
            f"{[str(r) for r in fact.refs]}"
        )
    return tree_from_factorization(fact)


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------


def export_dot(plane: PlaneTree) -> str:
    """Graphviz source for a plane tree; the marked edge is drawn bold and
    the clockwise neighbor orders are recorded as comments."""
    lines = ["graph tree {"]
    lines.append(f"  // marked edge: {plane.marked[0]} -- {plane.marked[1]}")
    for v in range(1, plane.n + 1):
        order = ", ".join(str(u) for u in plane.rotation(v))
        lines.append(f"  // clockwise at {v}: {order}")
    lines.append("  node [shape=circle];")
    mark = (min(plane.marked), max(plane.marked))
    for a, b in plane.tree().edges:
        style = " [penwidth=2]" if (a, b) == mark else ""
        lines.append(f"  {a} -- {b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_tikz(plane: PlaneTree) -> str:
    """TikZ source for a plane tree with vertices placed on a circle."""
    n = plane.n
    lines = ["\\begin{tikzpicture}[every node/.style={circle, draw}]"]
    for v in range(1, n + 1):
        angle = 90 - 360 * (v - 1) / n
        lines.append(f"  \\node (v{v}) at ({angle:.1f}:2) {{{v}}};")
    mark = (min(plane.marked), max(plane.marked))
    for a, b in plane.tree().edges:
        style = "[very thick] " if (a, b) == mark else ""
        lines.append(f"  \\draw {style}(v{a}) -- (v{b});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, n: int | None = None) -> LabeledTree:
    """Parse a whitespace edge list (one ``a b`` pair per line).

    Blank lines and ``#`` comments are ignored; the vertex count defaults to
    the largest label mentioned.
    """
    edges = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise DomainError(
                f"line {line_no}: expected two vertex labels, got {line!r}"
            )
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise DomainError(
                f"line {line_no}: vertex labels must be integers: {line!r}"
            ) from exc
        edges.append((a, b))
    if not edges:
        raise DomainError("edge list is empty")
    size = n if n is not None else max(max(e) for e in edges)
    return LabeledTree(size, tuple(edges))
