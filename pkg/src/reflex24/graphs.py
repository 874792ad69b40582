"""Small metric graphs: girth-style CAT(1) test and brute-force isomorphism."""
from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional

# link edge weights are integer multiples of pi/3; 2*pi is 6 units
UNITS_PER_2PI = 6


@dataclass
class MetricGraph:
    nodes: list
    edges: dict = field(default_factory=dict)  # frozenset({u, v}) -> weight in pi/3 units

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], nodes: Optional[Iterable] = None,
                   weight: int = 1) -> "MetricGraph":
        es = {}
        ns = list(nodes) if nodes is not None else []
        seen = set(ns)
        for e in edges:
            u, v = e[0], e[1]
            w = e[2] if len(e) > 2 else weight
            if u == v:
                raise ValueError("loops are not allowed")
            if w <= 0:
                raise ValueError("edge weights must be positive")
            es[frozenset((u, v))] = w
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    ns.append(x)
        return cls(ns, es)

    def adjacency(self) -> dict:
        adj = {n: {} for n in self.nodes}
        for e, w in self.edges.items():
            u, v = tuple(e)
            adj[u][v] = w
            adj[v][u] = w
        return adj

    def degrees(self) -> dict:
        return {n: len(nb) for n, nb in self.adjacency().items()}

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_regular(self, k: int) -> bool:
        return all(d == k for d in self.degrees().values())

    def relabeled(self) -> "MetricGraph":
        """Same graph on nodes 0..n-1 (in node order)."""
        idx = {n: t for t, n in enumerate(self.nodes)}
        return MetricGraph(list(range(len(self.nodes))),
                           {frozenset(idx[x] for x in e): w for e, w in self.edges.items()})

    def without_edges(self, drop: Iterable) -> "MetricGraph":
        drop = {frozenset(e) for e in drop}
        return MetricGraph(list(self.nodes), {e: w for e, w in self.edges.items() if e not in drop})


def _dijkstra(adj, src, dst, banned_edge):
    dist = {src: 0}
    prev = {}
    heap = [(0, 0, src)]
    tie = itertools.count(1)
    while heap:
        d, _, u = heapq.heappop(heap)
        if d > dist.get(u, d):
            continue
        if u == dst:
            path = [dst]
            while path[-1] != src:
                path.append(prev[path[-1]])
            return d, path[::-1]
        for v, w in adj[u].items():
            if frozenset((u, v)) == banned_edge:
                continue
            nd = d + w
            if nd < dist.get(v, nd + 1):
                dist[v] = nd
                prev[v] = u
                heapq.heappush(heap, (nd, next(tie), v))
    return None, None


@dataclass(frozen=True)
class Cat1Result:
    passed: bool
    min_cycle_units: Optional[int]  # None when the graph has no cycle
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.passed


def shortest_cycle(g: MetricGraph) -> tuple[Optional[int], Optional[list]]:
    """Length and node sequence of a minimum-weight simple cycle."""
    adj = g.adjacency()
    best, best_cycle = None, None
    for e, w in sorted(g.edges.items(), key=lambda kv: kv[1]):
        u, v = sorted(e, key=g.nodes.index)
        if best is not None and w >= best:
            continue
        d, path = _dijkstra(adj, u, v, e)
        if d is not None and (best is None or d + w < best):
            best, best_cycle = d + w, path
    return best, best_cycle


def cat1_check(g: MetricGraph) -> Cat1Result:
    """Pass iff every simple loop has length >= 2*pi (6 units of pi/3)."""
    length, cycle = shortest_cycle(g)
    if length is None or length >= UNITS_PER_2PI:
        return Cat1Result(True, length)
    return Cat1Result(False, length, tuple(cycle))


def is_connected(g: MetricGraph) -> bool:
    if not g.nodes:
        return True
    adj = g.adjacency()
    seen = {g.nodes[0]}
    todo = deque(seen)
    while todo:
        u = todo.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return len(seen) == len(g.nodes)


def is_biconnected(g: MetricGraph) -> bool:
    if len(g.nodes) < 3 or not is_connected(g):
        return False
    for n in g.nodes:
        rest = [x for x in g.nodes if x != n]
        sub = MetricGraph(rest, {e: w for e, w in g.edges.items() if n not in e})
        if not is_connected(sub):
            return False
    return True


def bipartition(g: MetricGraph) -> Optional[tuple[set, set]]:
    adj = g.adjacency()
    color = {}
    for s in g.nodes:
        if s in color:
            continue
        color[s] = 0
        todo = deque([s])
        while todo:
            u = todo.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    todo.append(v)
                elif color[v] == color[u]:
                    return None
    return ({n for n, c in color.items() if c == 0}, {n for n, c in color.items() if c == 1})


def is_subdivided_theta(g: MetricGraph, arc_edges: int = 3) -> bool:
    """Two degree-3 nodes joined by three internally disjoint paths of arc_edges edges."""
    deg = g.degrees()
    hubs = [n for n, d in deg.items() if d == 3]
    if len(hubs) != 2 or any(d not in (2, 3) for d in deg.values()):
        return False
    if not is_connected(g):
        return False
    adj = g.adjacency()
    a, b = hubs
    lengths = []
    for start in adj[a]:
        prev, cur, n = a, start, 1
        while cur not in hubs:
            nxt = [x for x in adj[cur] if x != prev]
            prev, cur = cur, nxt[0]
            n += 1
        if cur != b:
            return False
        lengths.append(n)
    return sorted(lengths) == [arc_edges] * 3


def find_isomorphism(g1: MetricGraph, g2: MetricGraph) -> Optional[dict]:
    """Backtracking search for a weight-preserving isomorphism g1 -> g2.

    Nodes are refined by (degree, sorted neighbour degrees) before the
    search; fine for the 16-node graphs here, exponential in general.
    """
    if g1.n_nodes != g2.n_nodes or g1.n_edges != g2.n_edges:
        return None
    a1, a2 = g1.adjacency(), g2.adjacency()

    def signature(adj, n):
        return (len(adj[n]), tuple(sorted(len(adj[m]) for m in adj[n])),
                tuple(sorted(adj[n].values())))

    s1 = {n: signature(a1, n) for n in g1.nodes}
    s2 = {n: signature(a2, n) for n in g2.nodes}
    if sorted(s1.values()) != sorted(s2.values()):
        return None

    # visit g1 in BFS order so each new node has mapped neighbours to constrain it
    order = []
    seen = set()
    for root in g1.nodes:
        if root in seen:
            continue
        seen.add(root)
        todo = deque([root])
        while todo:
            u = todo.popleft()
            order.append(u)
            for v in a1[u]:
                if v not in seen:
                    seen.add(v)
                    todo.append(v)

    mapping, used = {}, set()

    def extend(k):
        if k == len(order):
            return True
        u = order[k]
        mapped_nb = [(mapping[v], w) for v, w in a1[u].items() if v in mapping]
        if mapped_nb:
            cands = set(a2[mapped_nb[0][0]])
        else:
            cands = set(g2.nodes)
        for c in sorted(cands - used, key=g2.nodes.index):
            if s2[c] != s1[u]:
                continue
            if any(a2[c].get(x) != w for x, w in mapped_nb):
                continue
            # non-edges must map to non-edges among already placed nodes
            if sum(1 for v in a2[c] if v in used) != len(mapped_nb):
                continue
            mapping[u] = c
            used.add(c)
            if extend(k + 1):
                return True
            del mapping[u]
            used.discard(c)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(g1: MetricGraph, g2: MetricGraph) -> bool:
    return find_isomorphism(g1, g2) is not None


def generalized_petersen(n: int, k: int) -> MetricGraph:
    """GP(n, k): outer n-cycle, spokes, inner star polygon with step k."""
    edges = []
    for t in range(n):
        edges.append((("o", t), ("o", (t + 1) % n)))
        edges.append((("o", t), ("s", t)))
        edges.append((("s", t), ("s", (t + k) % n)))
    nodes = [("o", t) for t in range(n)] + [("s", t) for t in range(n)]
    return MetricGraph.from_edges(edges, nodes)


def hypercube(dim: int) -> MetricGraph:
    nodes = list(itertools.product((0, 1), repeat=dim))
    edges = []
    for v in nodes:
        for t in range(dim):
            if v[t] == 0:
                w = v[:t] + (1,) + v[t + 1:]
                edges.append((v, w))
    return MetricGraph.from_edges(edges, nodes)


def cycle_graph(n: int) -> MetricGraph:
    return MetricGraph.from_edges([(t, (t + 1) % n) for t in range(n)])


def subdivided_theta(arc_edges: int = 3) -> MetricGraph:
    edges = []
    for arc in range(3):
        path = ["a"] + [(arc, t) for t in range(arc_edges - 1)] + ["b"]
        edges += list(zip(path, path[1:]))
    return MetricGraph.from_edges(edges)


def to_json(g: MetricGraph) -> dict:
    idx = {n: t for t, n in enumerate(g.nodes)}
    return {
        "nodes": [str(n) for n in g.nodes],
        "edges": sorted([sorted(idx[x] for x in e) + [w] for e, w in g.edges.items()]),
    }
