"""Explicit graph model of aligned cubic trees.

Vertices are integers. ``adj[v]`` lists the neighbours of ``v`` in
counterclockwise order and ``dirs[(v, w)]`` is the direction of the edge
from ``v`` to ``w``: residue ``d`` means the angle 270 + 60 d degrees, so 0
points South, 2 points at 30 degrees and 3 points North. Reversing an edge
adds 3; the three edges at a node point in directions ``d, d+2, d+4``
in counterclockwise order.
"""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations

from .codec import CtreeCode, canonical, validate

# Unit steps on the triangular lattice in the basis (1, 0), (1/2, sqrt(3)/2),
# indexed by direction; each has Euclidean length sqrt(3).
STEP = ((1, -2), (2, -1), (1, 1), (-1, 2), (-2, 1), (-1, -1))


class InvalidCodeError(ValueError):
    pass


class AmbiguousCenterError(ValueError):
    """The maximal-depth nodes are neither a single node nor an adjacent pair."""

    def __init__(self, nodes, depth):
        super().__init__(f"nodes {sorted(nodes)} all have maximal depth {depth} "
                         f"but do not form a node or an edge")
        self.nodes = sorted(nodes)
        self.depth = depth


class NodeClass(enum.Enum):
    LEAF = "Leaf"
    HIDDEN = "Hidden"
    EXPOSED = "Exposed"
    NAKED = "Naked"
    STARK_NAKED = "StarkNaked"

    def __str__(self):
        return self.value


NODE_CLASSES = (NodeClass.HIDDEN, NodeClass.EXPOSED, NodeClass.NAKED, NodeClass.STARK_NAKED)
_BY_LEAF_COUNT = NODE_CLASSES


@dataclass(frozen=True)
class CenterRef:
    node: int | None = None
    edge: tuple[int, int] | None = None

    @classmethod
    def of_edge(cls, v, w):
        return cls(edge=(min(v, w), max(v, w)))

    @property
    def is_edge(self) -> bool:
        return self.edge is not None


def edge_key(v, w):
    return (v, w) if v < w else (w, v)


def propagate_directions(adj, v, w, d) -> dict:
    """Directions of every edge, given that the edge ``v -> w`` points at ``d``."""
    dirs = {}
    stack = [(v, w, d % 6), (w, v, (d + 3) % 6)]
    while stack:
        a, b, dd = stack.pop()
        if (a, b) in dirs:
            continue
        dirs[(a, b)] = dd
        dirs[(b, a)] = (dd + 3) % 6
        nbrs = adj[a]
        if len(nbrs) == 3:
            i = nbrs.index(b)
            for t in (1, 2):
                c = nbrs[(i + t) % 3]
                if (a, c) not in dirs:
                    stack.append((a, c, (dd + 2 * t) % 6))
        nbrs = adj[b]
        if len(nbrs) == 3:
            i = nbrs.index(a)
            for t in (1, 2):
                c = nbrs[(i + t) % 3]
                if (b, c) not in dirs:
                    stack.append((b, c, (dd + 3 + 2 * t) % 6))
    return dirs


class Ctree:
    """An aligned cubic tree with an optional designated root leaf."""

    __slots__ = ("adj", "dirs", "root")

    def __init__(self, adj, dirs, root=None):
        self.adj = tuple(tuple(a) for a in adj)
        self.dirs = dict(dirs)
        self.root = root

    @classmethod
    def from_planar(cls, adj, v, w, d, root=None):
        return cls(adj, propagate_directions(adj, v, w, d), root)

    def __len__(self):
        return len(self.adj)

    @property
    def n(self) -> int:
        return sum(1 for a in self.adj if len(a) == 3)

    def is_leaf(self, v) -> bool:
        return len(self.adj[v]) == 1

    def leaves(self) -> list[int]:
        return [v for v, a in enumerate(self.adj) if len(a) == 1]

    def nodes(self) -> list[int]:
        return [v for v, a in enumerate(self.adj) if len(a) == 3]

    def edges(self) -> list[tuple[int, int]]:
        return sorted({edge_key(v, w) for v, a in enumerate(self.adj) for w in a})

    def worm(self, start):
        """Directed edges of the counterclockwise contour walk from leaf ``start``."""
        prev, cur = start, self.adj[start][0]
        yield prev, cur
        for _ in range(2 * (len(self.adj) - 1) - 1):
            nbrs = self.adj[cur]
            nxt = nbrs[(nbrs.index(prev) + 1) % len(nbrs)]
            prev, cur = cur, nxt
            yield prev, cur

    def check(self) -> list[str]:
        """Structural invariant violations (empty when the tree is well formed)."""
        problems = []
        nv = len(self.adj)
        n = self.n
        if any(len(a) not in (1, 3) for a in self.adj):
            problems.append("vertex of degree other than 1 or 3")
        if nv != 2 * n + 2:
            problems.append(f"{nv} vertices, expected {2 * n + 2}")
        if len(self.edges()) != 2 * n + 1:
            problems.append("edge count is not 2n+1")
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != nv:
            problems.append("not connected")
        for (v, w), d in self.dirs.items():
            if self.dirs.get((w, v)) != (d + 3) % 6:
                problems.append(f"edge {v}-{w}: reverse direction mismatch")
        for v in self.nodes():
            ds = [self.dirs[(v, w)] for w in self.adj[v]]
            if [(x - ds[0]) % 6 for x in ds] != [0, 2, 4]:
                problems.append(f"node {v}: fan {ds} is not 120 degrees counterclockwise")
        return problems


def from_code(code: CtreeCode) -> Ctree:
    """Build the rooted tree whose worm walk from the root reproduces ``code``."""
    if not 0 <= code.r <= 5:
        raise InvalidCodeError(f"rotation {code.r} not in 0..5")
    if not code.u:
        return Ctree([[1], [0]], {(0, 1): code.r, (1, 0): (code.r + 3) % 6}, root=0)
    trace = validate(code.u)
    if not trace.valid:
        raise InvalidCodeError(f"{code}: {trace.reason}")
    adj = [[1, 2, 3], [0], [0], [0]]
    order = [1, 2, 3]
    for i in reversed(trace.positions):
        m = len(order) + 1
        x, y = len(adj), len(adj) + 1
        leaf = order[0] if i == m - 1 else order[i]
        adj[leaf] = [adj[leaf][0], x, y]
        adj.extend([[leaf], [leaf]])
        if i == m - 1:
            order = [y] + order[1:] + [x]
        else:
            order[i:i + 1] = [x, y]
    root = order[0]
    return Ctree.from_planar(adj, root, adj[root][0], code.r, root=root)


def to_code(tree: Ctree, root_leaf: int) -> CtreeCode:
    if not tree.is_leaf(root_leaf):
        raise ValueError(f"vertex {root_leaf} is not a leaf")
    r = tree.dirs[(root_leaf, tree.adj[root_leaf][0])]
    if len(tree.adj) == 2:
        return CtreeCode(r, ())
    gaps = []
    count = 0
    for _, cur in tree.worm(root_leaf):
        count += 1
        if tree.is_leaf(cur):
            gaps.append(count - 2)
            count = 0
    return CtreeCode(r, tuple(gaps))


def preorder_leaves(tree: Ctree, root_leaf: int) -> list[int]:
    out = [root_leaf]
    for _, cur in tree.worm(root_leaf):
        if tree.is_leaf(cur) and cur != root_leaf:
            out.append(cur)
    return out


def canonical_code(tree: Ctree) -> CtreeCode:
    leaf = tree.root if tree.root is not None else tree.leaves()[0]
    return canonical(to_code(tree, leaf))


def canonical_root(tree: Ctree) -> int:
    """The leaf at which the tree's code is its canonical form."""
    return min(tree.leaves(), key=lambda v: to_code(tree, v))


def classify(tree: Ctree, v: int) -> NodeClass:
    nbrs = tree.adj[v]
    if len(nbrs) == 1:
        return NodeClass.LEAF
    return _BY_LEAF_COUNT[sum(1 for w in nbrs if len(tree.adj[w]) == 1)]


def class_census(tree: Ctree) -> dict[NodeClass, int]:
    counts = Counter(classify(tree, v) for v in tree.nodes())
    return {c: counts.get(c, 0) for c in NODE_CLASSES}


def hidden_count(tree: Ctree) -> int:
    return sum(1 for v in tree.nodes() if classify(tree, v) is NodeClass.HIDDEN)


def _naked_depths(tree: Ctree) -> dict[int, int]:
    dist = {}
    queue = deque()
    for v in tree.nodes():
        if classify(tree, v) is NodeClass.NAKED:
            dist[v] = 0
            queue.append(v)
    while queue:
        v = queue.popleft()
        for w in tree.adj[v]:
            if w not in dist and len(tree.adj[w]) == 3:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def node_depth(tree: Ctree, v: int) -> int:
    """Number of edges from node ``v`` to the nearest naked node."""
    if tree.n < 2:
        raise ValueError("depth is only defined for n >= 2")
    if tree.is_leaf(v):
        raise ValueError(f"vertex {v} is a leaf")
    return _naked_depths(tree)[v]


def center(tree: Ctree) -> CenterRef:
    """Center via maximal depth to a naked node.

    Raises :class:`AmbiguousCenterError` when the maximal-depth nodes are not
    one node or two adjacent nodes; this happens for some trees with n >= 6.
    """
    n = tree.n
    if n == 0:
        return CenterRef.of_edge(0, 1)
    if n == 1:
        return CenterRef(node=tree.nodes()[0])
    depth = _naked_depths(tree)
    top = max(depth.values())
    deepest = [v for v, d in depth.items() if d == top]
    if len(deepest) == 1:
        return CenterRef(node=deepest[0])
    if len(deepest) == 2 and deepest[1] in tree.adj[deepest[0]]:
        return CenterRef.of_edge(*deepest)
    raise AmbiguousCenterError(deepest, top)


def center_by_pruning(tree: Ctree) -> CenterRef:
    """Center via repeated deletion of the leaves hanging off naked nodes."""
    adj = {v: set(a) for v, a in enumerate(tree.adj)}
    while True:
        nodes = [v for v, a in adj.items() if len(a) == 3]
        if not nodes:
            v, w = list(adj)
            return CenterRef.of_edge(v, w)
        if len(nodes) == 1:
            return CenterRef(node=nodes[0])
        doomed = []
        for v in nodes:
            leafy = [w for w in adj[v] if len(adj[w]) == 1]
            if len(leafy) == 2:
                doomed.extend((v, w) for w in leafy)
        for v, w in doomed:
            adj[v].discard(w)
            del adj[w]


def _heights(tree: Ctree, root: int) -> dict[int, int]:
    """Height of the subtree hanging below each vertex when rooted at ``root``."""
    parent = {root: None}
    order = [root]
    for v in order:
        for w in tree.adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    height = {}
    for v in reversed(order):
        kids = [w for w in tree.adj[v] if w != parent[v]]
        height[v] = 1 + max(height[w] for w in kids) if kids else 0
    return height


def embed(tree: Ctree, base: int = 3) -> dict[int, tuple[int, int]]:
    """Integer lattice coordinates for a crossing-free aligned drawing.

    The layout hangs from the center. Each edge has length ``base ** h`` (in
    unit lattice steps) where ``h`` is the height of the subtree hanging
    below it, so every subtree stays inside a disk that its parent edge
    separates from its siblings. If a check ever found a crossing the base
    would be raised and the layout redone.
    """
    c = center_by_pruning(tree)
    root = c.node if c.node is not None else c.edge[0]
    while True:
        height = _heights(tree, root)
        pos = {root: (0, 0)}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in tree.adj[v]:
                if w in pos:
                    continue
                step = STEP[tree.dirs[(v, w)]]
                length = base ** height[w]
                pos[w] = (pos[v][0] + length * step[0], pos[v][1] + length * step[1])
                stack.append(w)
        if not crossing_pairs(tree, pos):
            return pos
        base += 1


def _orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r):
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test with exact integer arithmetic.

    Orientation signs are invariant under the (orientation preserving)
    change of basis to lattice coordinates, so no conversion is needed.
    """
    o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and _on_segment(p1, p2, q1)) or (o2 == 0 and _on_segment(p1, p2, q2))
            or (o3 == 0 and _on_segment(q1, q2, p1)) or (o4 == 0 and _on_segment(q1, q2, p2)))


def crossing_pairs(tree: Ctree, pos) -> list:
    """Pairs of edges that meet anywhere other than at a shared endpoint."""
    bad = []
    for e, f in combinations(tree.edges(), 2):
        shared = set(e) & set(f)
        if shared:
            (s,) = shared
            a = e[0] if e[1] == s else e[1]
            b = f[0] if f[1] == s else f[1]
            va = (pos[a][0] - pos[s][0], pos[a][1] - pos[s][1])
            vb = (pos[b][0] - pos[s][0], pos[b][1] - pos[s][1])
            # two segments from one point overlap iff they point the same way
            if va[0] * vb[1] - va[1] * vb[0] == 0 and va[0] * vb[0] + va[1] * vb[1] > 0:
                bad.append((e, f))
        elif segments_intersect(pos[e[0]], pos[e[1]], pos[f[0]], pos[f[1]]):
            bad.append((e, f))
    return bad


def edge_direction_from_vector(vec) -> int | None:
    """Direction index of a lattice vector, or None if it is not aligned."""
    for d, (a, b) in enumerate(STEP):
        # vec must be a positive multiple of STEP[d]
        if vec[0] * b - vec[1] * a == 0 and vec[0] * a + vec[1] * b > 0:
            return d
    return None


def _planted_children(tree: Ctree, v: int, parent: int):
    nbrs = tree.adj[v]
    i = nbrs.index(parent)
    return nbrs[(i + 1) % 3], nbrs[(i + 2) % 3]


def _planted_tree(tree_or_code):
    if isinstance(tree_or_code, CtreeCode):
        if tree_or_code.r != 0:
            raise ValueError("walk_around needs a planted code (r = 0)")
        return from_code(tree_or_code)
    tree = tree_or_code
    if tree.root is None or tree.dirs[(tree.root, tree.adj[tree.root][0])] != 0:
        raise ValueError("walk_around needs a planted tree (root edge pointing South)")
    return tree


def walk_around(planted) -> str:
    """Dyck path of the full binary tree obtained by removing the planting edge.

    Each edge is recorded when the worm leaves it for the last time: U for a
    left child edge, D for a right child edge. Left is the first child
    counterclockwise after the parent edge, i.e. the lower-left child in
    the South-pointing planted drawing.
    """
    tree = _planted_tree(planted)
    root = tree.root
    top = tree.adj[root][0]
    if tree.is_leaf(top):
        return ""
    out = []
    # iterative postorder: (vertex, parent, stage)
    stack = [(top, root, 0)]
    while stack:
        v, p, stage = stack.pop()
        if tree.is_leaf(v):
            continue
        left, right = _planted_children(tree, v, p)
        if stage == 0:
            stack.append((v, p, 1))
            stack.append((left, v, 0))
        elif stage == 1:
            out.append("U")
            stack.append((v, p, 2))
            stack.append((right, v, 0))
        else:
            out.append("D")
    return "".join(out)


def deep_interior_count(planted) -> int:
    """Internal vertices of the unplanted binary tree with no leaf neighbour."""
    tree = _planted_tree(planted)
    root = tree.root
    count = 0
    for v in tree.nodes():
        nbrs = [w for w in tree.adj[v] if w != root]
        if len(nbrs) >= 2 and all(not tree.is_leaf(w) for w in nbrs):
            count += 1
    return count
