"""Combinatorial search engines.

Connection graphs are weighted bipartite trees encoding genus-zero flat
surfaces with one cone point and only half-infinite cylinders; they serve
both as a brute-force oracle against the closed-form decider and as the
witness source for collinear residue tuples.  Stable configurations extend
the picture to several zeros (trees of single-zero pieces joined at simple
poles with opposite residues) and, with arbitrary component genera and
multigraphs, to disjoint-cylinder questions on holomorphic strata.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .core import (
    NON_COLLINEAR,
    PrimitiveRay,
    QQi,
    Rat,
    StratumSignature,
    collinear_normal_form,
    validate_residues,
    validate_stratum,
)
from . import decide

Vertex = tuple[str, int]  # ("+", k) or ("-", k), k an index within its side


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before concluding."""


@dataclass(frozen=True)
class ConnectionGraph:
    """A weighted bipartite tree with positive weights on both sides.

    Edges join plus-side to minus-side vertices.  Vertices keep stable
    identities across leaf removals, so weights are stored per vertex id.
    """

    vertices: tuple[Vertex, ...]
    weights: tuple[Fraction, ...]
    edges: tuple[tuple[Vertex, Vertex], ...]

    @classmethod
    def from_sides(
        cls,
        plus: Sequence[Rat],
        minus: Sequence[Rat],
        edge_pairs: Sequence[tuple[int, int]],
    ) -> "ConnectionGraph":
        """Build from plus/minus weight lists and (plus index, minus index) edges."""
        vertices = tuple(("+", i) for i in range(len(plus))) + tuple(
            ("-", j) for j in range(len(minus))
        )
        weights = tuple(Fraction(w) for w in plus) + tuple(Fraction(w) for w in minus)
        edges = tuple((("+", i), ("-", j)) for i, j in edge_pairs)
        return cls(vertices, weights, edges)

    def weight(self, v: Vertex) -> Fraction:
        return self.weights[self.vertices.index(v)]

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(out)

    def leaves(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if len(self.neighbors(v)) == 1)

    def side_total(self, side: str) -> Fraction:
        return sum(
            (w for v, w in zip(self.vertices, self.weights) if v[0] == side),
            Fraction(0),
        )

    def is_tree(self) -> bool:
        if len(self.edges) != len(self.vertices) - 1:
            return False
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            v = frontier.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(self.vertices)

    def is_bipartite(self) -> bool:
        return all(a[0] == "+" and b[0] == "-" for a, b in self.edges)


def leaf_removal(graph: ConnectionGraph, leaf: Vertex) -> ConnectionGraph:
    """Remove a leaf and subtract its weight from its unique neighbor.

    The resulting weight may be zero or negative; it is the connection-graph
    test, not this operation, that demands positivity.
    """
    nbs = graph.neighbors(leaf)
    if len(nbs) != 1:
        raise ValueError(f"{leaf} is not a leaf (degree {len(nbs)})")
    nb = nbs[0]
    w_leaf = graph.weight(leaf)
    vertices = []
    weights = []
    for v, w in zip(graph.vertices, graph.weights):
        if v == leaf:
            continue
        vertices.append(v)
        weights.append(w - w_leaf if v == nb else w)
    edges = tuple(e for e in graph.edges if leaf not in e)
    return ConnectionGraph(tuple(vertices), tuple(weights), edges)


def is_connection_graph(graph: ConnectionGraph, *, mode: str = "universal") -> bool:
    """Test the leaf-removal condition.

    A valid graph keeps all weights strictly positive through leaf removals:
    in ``universal`` mode through *every* sequence of 1..A-1 removals (A the
    edge count), in ``existential`` mode through at least one full-length
    sequence.  Balanced side totals are required in both modes.  Raises
    ValueError for inputs that are not bipartite trees.
    """
    if mode not in ("universal", "existential"):
        raise ValueError(f"unknown mode {mode!r}")
    if not graph.is_tree():
        raise ValueError("connection graphs must be trees")
    if not graph.is_bipartite():
        raise ValueError("edges must join the plus side to the minus side")
    if any(w <= 0 for w in graph.weights):
        return False
    if graph.side_total("+") != graph.side_total("-"):
        return False
    depth = len(graph.edges) - 1
    memo: dict[tuple, bool] = {}
    return _removals_ok(graph, depth, mode == "universal", memo)


def _graph_key(graph: ConnectionGraph, depth: int) -> tuple:
    return (
        tuple(sorted(zip(graph.vertices, graph.weights))),
        tuple(sorted(graph.edges)),
        depth,
    )


def _removals_ok(graph: ConnectionGraph, depth: int, universal: bool, memo: dict) -> bool:
    if depth <= 0:
        return True
    key = _graph_key(graph, depth)
    if key in memo:
        return memo[key]
    outcome = universal
    for leaf in graph.leaves():
        smaller = leaf_removal(graph, leaf)
        ok = all(w > 0 for w in smaller.weights) and _removals_ok(
            smaller, depth - 1, universal, memo
        )
        if universal and not ok:
            outcome = False
            break
        if not universal and ok:
            outcome = True
            break
    memo[key] = outcome
    return outcome


def _prufer_decode(seq: tuple[int, ...], m: int) -> tuple[tuple[int, int], ...]:
    # Standard decode: repeatedly attach the smallest available leaf.
    import heapq

    avail = [1] * m
    for x in seq:
        avail[x] += 1
    edges = []
    heap = [v for v in range(m) if avail[v] == 1]
    heapq.heapify(heap)
    for x in seq:
        v = heapq.heappop(heap)
        edges.append((min(v, x), max(v, x)))
        avail[x] -= 1
        if avail[x] == 1:
            heapq.heappush(heap, x)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((min(u, v), max(u, v)))
    return tuple(edges)


@lru_cache(maxsize=None)
def _labeled_trees(m: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All labeled trees on m vertices, in lexicographic Prüfer order."""
    if m == 1:
        return ((),)
    if m == 2:
        return (((0, 1),),)
    out = []
    for seq in itertools.product(range(m), repeat=m - 2):
        out.append(_prufer_decode(tuple(seq), m))
    return tuple(out)


@lru_cache(maxsize=None)
def _bipartite_trees(s1: int, s2: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Spanning trees of the complete bipartite graph on (s1, s2) vertices.

    Vertices 0..s1-1 are the plus side, s1..s1+s2-1 the minus side; edges are
    returned as (plus index, minus index) pairs.
    """
    m = s1 + s2
    out = []
    for tree in _labeled_trees(m):
        pairs = []
        for u, v in tree:
            if (u < s1) == (v < s1):
                break
            lo, hi = (u, v) if u < s1 else (v, u)
            pairs.append((lo, hi - s1))
        else:
            out.append(tuple(pairs))
    return tuple(out)


def _signed_values(entries: Sequence[Rat] | PrimitiveRay) -> tuple[Fraction, ...]:
    if isinstance(entries, PrimitiveRay):
        return tuple(Fraction(m) for m in entries.integers)
    return tuple(Fraction(x) for x in entries)


def find_connection_graph(
    entries: Sequence[Rat] | PrimitiveRay, *, mode: str = "universal"
) -> ConnectionGraph | None:
    """Exhaustively search for a connection graph with the given weights.

    ``entries`` is a signed real tuple (or a primitive ray) summing to zero
    with no zero entries; positive entries weight the plus side, negatives
    the minus side.  All spanning trees of the complete bipartite support are
    tried in Prüfer order and the first valid graph is returned, so the
    result is deterministic.
    """
    values = _signed_values(entries)
    if not values or any(v == 0 for v in values):
        raise ValueError("entries must be nonzero")
    if sum(values) != 0:
        raise ValueError("entries must sum to zero")
    plus = [v for v in values if v > 0]
    minus = [-v for v in values if v < 0]
    for pairs in _bipartite_trees(len(plus), len(minus)):
        graph = ConnectionGraph.from_sides(plus, minus, pairs)
        if is_connection_graph(graph, mode=mode):
            return graph
    return None


def removal_order(graph: ConnectionGraph) -> tuple[tuple[Vertex, Vertex, Fraction], ...]:
    """Deterministic gluing schedule: (leaf, neighbor, length) per edge.

    Repeatedly removes the smallest leaf until one vertex remains; the final
    edge is listed with the surviving pair and their common weight.  All
    lengths are positive for a valid connection graph.
    """
    g = graph
    steps: list[tuple[Vertex, Vertex, Fraction]] = []
    while len(g.vertices) > 2:
        leaf = min(g.leaves())
        nb = g.neighbors(leaf)[0]
        steps.append((leaf, nb, g.weight(leaf)))
        g = leaf_removal(g, leaf)
    if len(g.vertices) == 2:
        a, b = g.vertices
        wa, wb = g.weights
        if wa != wb:
            raise ValueError("final weights differ; not a balanced graph")
        steps.append((a, b, wa))
    for _, _, length in steps:
        if length <= 0:
            raise ValueError("nonpositive gluing length; not a connection graph")
    return tuple(steps)


# ---------------------------------------------------------------------------
# Stable configurations for several zeros, all poles simple, genus zero.


@dataclass(frozen=True)
class StableComponent:
    zero_order: int
    pole_indices: tuple[int, ...]  # positions into the input residue tuple
    node_edges: tuple[tuple[int, QQi], ...]  # (other component, residue on this side)


@dataclass(frozen=True)
class StableConfigTree:
    components: tuple[StableComponent, ...]
    edges: tuple[tuple[int, int], ...]


def _component_realizable(zero_order: int, residues: tuple[QQi, ...]) -> bool:
    """Single-zero, simple-poles-only criterion for one component."""
    form = collinear_normal_form(residues)
    if form is NON_COLLINEAR:
        return True
    if isinstance(form, PrimitiveRay):
        return form.positive_sum > zero_order
    return True


def _index_subsets(indices: tuple[int, ...], sizes: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not sizes:
        if not indices:
            yield ()
        return
    k = sizes[0]
    for chosen in itertools.combinations(indices, k):
        rest = tuple(i for i in indices if i not in chosen)
        for tail in _index_subsets(rest, sizes[1:]):
            yield (chosen,) + tail


def find_stable_config(
    sig: StratumSignature,
    residues: Sequence[QQi],
    *,
    budget: int = 2_000_000,
) -> StableConfigTree | None:
    """Search for a tree of single-zero components realizing (sig, residues).

    The signature must be genus zero with only simple poles.  Components are
    the zeros; simple poles are distributed among them and each tree edge
    carries a pair of opposite node residues, forced by the residue theorem
    (the node residue toward a subtree is minus the sum of the smooth
    residues inside it).  A configuration is accepted when every component
    passes the single-zero criterion.  Returns None when the exhausted space
    holds no witness; raises SearchBudgetExceeded past the budget.
    """
    bad = validate_residues(sig, residues)
    if bad:
        raise ValueError("; ".join(bad))
    if sig.genus != 0 or sig.p != 0:
        raise ValueError("stable configurations apply to genus 0, simple poles only")
    residues = tuple(residues)
    n = sig.n
    if n == 1:
        # Single component: the question is exactly the connection-graph one.
        form = collinear_normal_form(residues)
        if isinstance(form, PrimitiveRay) and find_connection_graph(form) is None:
            return None
        comp = StableComponent(sig.zeros[0], tuple(range(len(residues))), ())
        return StableConfigTree((comp,), ())

    spent = 0
    all_poles = tuple(range(len(residues)))
    for tree in _labeled_trees(n):
        deg = [0] * n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        sizes = [sig.zeros[c] + 2 - deg[c] for c in range(n)]
        if any(k < 0 for k in sizes):
            continue
        if sum(sizes) != len(residues):
            continue
        adjacency = {c: [] for c in range(n)}
        for u, v in tree:
            adjacency[u].append(v)
            adjacency[v].append(u)
        for assignment in _index_subsets(all_poles, sizes):
            spent += 1
            if spent > budget:
                raise SearchBudgetExceeded(
                    f"stable-config search exceeded budget of {budget} assignments"
                )
            smooth_sum = [sum((residues[i] for i in assignment[c]), QQi(0)) for c in range(n)]
            node_res = _solve_node_residues(n, tree, adjacency, smooth_sum)
            if node_res is None:
                continue
            ok = True
            for c in range(n):
                comp_res = tuple(residues[i] for i in assignment[c]) + tuple(
                    node_res[(c, d)] for d in sorted(adjacency[c])
                )
                if not _component_realizable(sig.zeros[c], comp_res):
                    ok = False
                    break
            if not ok:
                continue
            components = tuple(
                StableComponent(
                    sig.zeros[c],
                    assignment[c],
                    tuple((d, node_res[(c, d)]) for d in sorted(adjacency[c])),
                )
                for c in range(n)
            )
            return StableConfigTree(components, tree)
    return None


def _solve_node_residues(
    n: int,
    tree: tuple[tuple[int, int], ...],
    adjacency: dict[int, list[int]],
    smooth_sum: list[QQi],
) -> dict[tuple[int, int], QQi] | None:
    """Node residues forced by per-component zero sums; None when one vanishes.

    For the edge (u, v), the residue on u's half is minus the total smooth
    residue of the subtree containing u.
    """
    out: dict[tuple[int, int], QQi] = {}
    for u, v in tree:
        side = _subtree_vertices(n, tree, u, v)
        total = QQi(0)
        for c in side:
            total = total + smooth_sum[c]
        if total.is_zero():
            return None
        out[(u, v)] = -total
        out[(v, u)] = total
    return out


def _subtree_vertices(
    n: int, tree: tuple[tuple[int, int], ...], root: int, banned: int
) -> tuple[int, ...]:
    seen = {root}
    frontier = [root]
    while frontier:
        x = frontier.pop()
        for u, v in tree:
            if u == x and v != banned and v not in seen:
                seen.add(v)
                frontier.append(v)
            elif v == x and u != banned and u not in seen:
                seen.add(u)
                frontier.append(u)
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# Stable configurations for disjoint cylinders on holomorphic strata.


@dataclass(frozen=True)
class CylinderComponent:
    genus: int
    zero_indices: tuple[int, ...]


@dataclass(frozen=True)
class CylinderConfig:
    components: tuple[CylinderComponent, ...]
    #: (component a, component b, residue entering a); a == b encodes a loop.
    edges: tuple[tuple[int, int, QQi], ...]


def _partitions_of_set(items: tuple[int, ...], blocks: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Partitions of items into `blocks` nonempty blocks, canonical order."""
    if blocks == 0:
        if not items:
            yield ()
        return
    if len(items) < blocks:
        return
    first, rest = items[0], items[1:]

    def rec(remaining: tuple[int, ...], blocks_open: tuple[tuple[int, ...], ...]):
        if not remaining:
            if all(blocks_open) and len(blocks_open) == blocks:
                yield tuple(tuple(b) for b in blocks_open)
            return
        x, tail = remaining[0], remaining[1:]
        for k in range(len(blocks_open)):
            yield from rec(tail, blocks_open[:k] + (blocks_open[k] + (x,),) + blocks_open[k + 1 :])
        if len(blocks_open) < blocks:
            yield from rec(tail, blocks_open + ((x,),))

    yield from rec(rest, ((first,),))


def _connected(k: int, pairs: Sequence[tuple[int, int]]) -> bool:
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in range(k)}) == 1


def find_cylinder_config(
    sig: StratumSignature,
    circumferences: Sequence[QQi],
    *,
    budget: int = 2_000_000,
) -> CylinderConfig | None:
    """Search for a stable configuration carrying the given disjoint cylinders.

    Components carry at least one zero each (curve stability forces this);
    each cylinder becomes a node joining two components, or one component to
    itself, with residues plus/minus the circumference at its two branches.
    Component genera are forced by the degree identity; a component is
    acceptable when its residue tuple sums to zero and its own stratum
    admits it (closed form: always for positive genus, the primitive-ray
    criterion for genus zero).
    """
    bad = validate_stratum(sig)
    if bad:
        raise ValueError("; ".join(bad))
    if sig.p != 0 or sig.s != 0:
        raise ValueError("cylinder configurations require a holomorphic stratum")
    lam = tuple(circumferences)
    t = len(lam)
    n = sig.n
    spent = 0
    pair_space = None
    for k in range(1, min(n, t + 1) + 1):
        if t - k + 1 < 0:
            continue
        pair_space = [(a, b) for a in range(k) for b in range(a, k)]
        for blocks in _partitions_of_set(tuple(range(n)), k):
            for ends in itertools.product(pair_space, repeat=t):
                spent += 1
                if spent > budget:
                    raise SearchBudgetExceeded(
                        f"cylinder search exceeded budget of {budget} candidates"
                    )
                half = [0] * k
                for a, b in ends:
                    half[a] += 1
                    half[b] += 1
                genera = []
                ok = True
                for c in range(k):
                    num = sum(sig.zeros[i] for i in blocks[c]) - half[c] + 2
                    if num < 0 or num % 2:
                        ok = False
                        break
                    genera.append(num // 2)
                if not ok:
                    continue
                if not _connected(k, ends):
                    continue
                nonloop = [j for j, (a, b) in enumerate(ends) if a != b]
                for signs in itertools.product((1, -1), repeat=len(nonloop)):
                    sign_of = dict(zip(nonloop, signs))
                    comp_res: list[list[QQi]] = [[] for _ in range(k)]
                    for j, (a, b) in enumerate(ends):
                        if a == b:
                            comp_res[a].extend((lam[j], -lam[j]))
                        else:
                            eps = sign_of[j]
                            comp_res[a].append(lam[j] * eps)
                            comp_res[b].append(-(lam[j] * eps))
                    if any(
                        sum(rs, QQi(0)) != QQi(0) or not rs for rs in map(tuple, comp_res)
                    ):
                        continue
                    if all(
                        _cylinder_component_ok(genera[c], tuple(sig.zeros[i] for i in blocks[c]), tuple(comp_res[c]))
                        for c in range(k)
                    ):
                        edges = []
                        for j, (a, b) in enumerate(ends):
                            res_at_a = lam[j] if a == b else lam[j] * sign_of[j]
                            edges.append((a, b, res_at_a))
                        comps = tuple(
                            CylinderComponent(genera[c], blocks[c]) for c in range(k)
                        )
                        return CylinderConfig(comps, tuple(edges))
    return None


def _cylinder_component_ok(
    genus: int, zeros: tuple[int, ...], residues: tuple[QQi, ...]
) -> bool:
    comp_sig = StratumSignature(genus, zeros, (), len(residues))
    if validate_residues(comp_sig, residues):
        return False
    return decide.decide_realizable(comp_sig, residues).realizable
