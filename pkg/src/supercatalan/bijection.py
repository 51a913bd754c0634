"""(n, k)-configurations and their bijection onto n-ctrees with k hidden nodes.

A configuration is a k-ctree (the base) whose 2k+1 edges carry strips of
labelled squares, n-2-2k squares in all. Squares are ``L`` or ``R``, except
that when the base has a center edge carrying an odd number of squares, the
first square on that edge is ``T`` or ``B``.

:func:`forward` works outward from the base center. Every square becomes an
exposed node whose leaf sits on the labelled side, each base node becomes a
hidden node and each base leaf a naked node. :func:`inverse` recovers the
base by contracting chains of exposed nodes.

Strip order conventions:

* non-center edge: squares are listed from the far endpoint toward the
  center, and L/R is relative to travel away from the center;
* center edge, even length: squares are listed from the bottom endpoint to
  the top one; L/R is relative to travel away from the middle edge;
* center edge, odd length: the first square is T or B, the next half are
  listed outward along the left branch (seen from the new leaf), the rest
  outward along the right branch.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .codec import CtreeCode, canonical, enumerate_unrooted, format_code, is_valid_code, parse_code
from .numbers import hidden_class_count
from .tree import (
    CenterRef,
    Ctree,
    NodeClass,
    canonical_root,
    center_by_pruning,
    classify,
    edge_key,
    from_code,
    hidden_count,
    to_code,
)

LABELS = "LRTB"
_UP = (2, 3, 4)
_FLIP = {"L": "R", "R": "L"}


class InvalidConfigError(ValueError):
    def __init__(self, problems):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


@dataclass(frozen=True, order=True)
class Configuration:
    n: int
    base: CtreeCode
    strips: tuple[str, ...]

    @property
    def k(self) -> int:
        return self.base.n

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "base": format_code(self.base), "strips": list(self.strips)})

    @classmethod
    def from_json(cls, text: str) -> "Configuration":
        data = json.loads(text)
        return cls(int(data["n"]), parse_code(data["base"]), tuple(data["strips"]))


def worm_edge_order(tree: Ctree, root: int) -> list[tuple[int, int]]:
    seen = []
    marked = set()
    for v, w in tree.worm(root):
        e = edge_key(v, w)
        if e not in marked:
            marked.add(e)
            seen.append(e)
    return seen


def base_edge_order(base: CtreeCode) -> list[tuple[int, int]]:
    """Edges of ``from_code(base)`` in order of first traversal by the worm."""
    tree = from_code(base)
    return worm_edge_order(tree, tree.root)


def _center_edge_index(tree: Ctree, order) -> int | None:
    c = center_by_pruning(tree)
    return order.index(c.edge) if c.is_edge else None


def validate_config(cfg: Configuration) -> list[str]:
    """Rule violations of ``cfg``; an empty list means it is valid."""
    problems = []
    if not is_valid_code(cfg.base):
        return [f"base {format_code(cfg.base)} is not a valid code"]
    if canonical(cfg.base) != cfg.base:
        problems.append(f"base {format_code(cfg.base)} is not in canonical form")
    k = cfg.base.n
    if len(cfg.strips) != 2 * k + 1:
        problems.append(f"{len(cfg.strips)} strips for a {k}-ctree base (need {2 * k + 1})")
        return problems
    bad = sorted({ch for s in cfg.strips for ch in s if ch not in LABELS})
    if bad:
        problems.append(f"unknown labels {bad}")
    total = sum(len(s) for s in cfg.strips)
    if total != cfg.n - 2 - 2 * k:
        problems.append(f"{total} squares, expected n-2-2k = {cfg.n - 2 - 2 * k}")
    tree = from_code(cfg.base)
    ci = _center_edge_index(tree, worm_edge_order(tree, tree.root))
    for i, s in enumerate(cfg.strips):
        tweak = i == ci and len(s) % 2 == 1
        for j, ch in enumerate(s):
            if tweak and j == 0:
                if ch not in "TB":
                    problems.append(f"strip {i} is the odd center strip; first square must be T or B")
            elif ch in "TB":
                problems.append(f"strip {i}, square {j}: T/B only allowed first on an odd center strip")
    return problems


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_configs(n: int, k: int) -> list[Configuration]:
    if n < 2 or k < 0 or 2 * k > n - 2:
        raise ValueError(f"no (n, k)-configurations for n={n}, k={k}")
    squares = n - 2 - 2 * k
    out = []
    for base in enumerate_unrooted(k):
        tree = from_code(base)
        ci = _center_edge_index(tree, worm_edge_order(tree, tree.root))
        for sizes in _compositions(squares, 2 * k + 1):
            alphabets = []
            for i, size in enumerate(sizes):
                for j in range(size):
                    alphabets.append("TB" if (i == ci and size % 2 and j == 0) else "LR")
            for labels in product(*alphabets):
                strips, pos = [], 0
                for size in sizes:
                    strips.append("".join(labels[pos:pos + size]))
                    pos += size
                out.append(Configuration(n, base, tuple(strips)))
    return out


def _distances_from_center(adj, c: CenterRef):
    """BFS parent map of the base rooted at its center (node or edge)."""
    sources = [c.node] if c.node is not None else list(c.edge)
    parent = {s: None for s in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return parent


class _Builder:
    """Planar adjacency under construction for the output tree."""

    def __init__(self, base: Ctree):
        self.base = base
        self.adj = {v: list(a) for v, a in enumerate(base.adj)}
        self.next_id = len(base.adj)

    def new(self):
        v = self.next_id
        self.next_id += 1
        return v

    def chain(self, x, y, sides):
        """Replace base edge x-y by exposed nodes with leaves on ``sides``.

        ``sides`` lists one L/R per node from x to y, relative to travel
        from x to y. Returns the chain's vertex ids in that order.
        """
        ids = [self.new() for _ in sides]
        full = [x] + ids + [y]
        for t, side in enumerate(sides, start=1):
            leaf = self.new()
            prev, nxt = full[t - 1], full[t + 1]
            # the first edge counterclockwise after the arrival edge is a right turn
            self.adj[full[t]] = [prev, leaf, nxt] if side == "R" else [prev, nxt, leaf]
            self.adj[leaf] = [full[t]]
        if ids:
            self.adj[x] = [ids[0] if w == y else w for w in self.adj[x]]
            self.adj[y] = [ids[-1] if w == x else w for w in self.adj[y]]
        return ids

    def finish(self):
        for v, a in enumerate(self.base.adj):
            if len(a) == 1:
                l1, l2 = self.new(), self.new()
                self.adj[v] = [self.adj[v][0], l1, l2]
                self.adj[l1] = [v]
                self.adj[l2] = [v]
        return [self.adj[v] for v in range(self.next_id)]


def _flip(sides):
    return [_FLIP[s] for s in sides]


def forward_tree(cfg: Configuration) -> Ctree:
    problems = validate_config(cfg)
    if problems:
        raise InvalidConfigError(problems)
    base = from_code(cfg.base)
    order = worm_edge_order(base, base.root)
    strip_of = dict(zip(order, cfg.strips))
    c = center_by_pruning(base)
    parent = _distances_from_center(base.adj, c)
    b = _Builder(base)

    if c.is_edge:
        x, y = c.edge
        if base.dirs[(x, y)] in _UP:
            bottom, top = x, y
        else:
            bottom, top = y, x
        up = base.dirs[(bottom, top)]
        s = strip_of[c.edge]
        if len(s) % 2 == 0:
            j = len(s) // 2
            sides = _flip(s[:j]) + list(s[j:])
            ids = b.chain(bottom, top, sides)
            full = [bottom] + ids + [top]
            anchor = (full[j], full[j + 1], up)
        else:
            j = len(s) // 2
            leaf_side, other = (top, bottom) if s[0] == "T" else (bottom, top)
            left, right = list(s[1:j + 1]), list(s[j + 1:])
            # from the leaf-side subtree to the other: left branch reversed, the
            # middle node (leaf on the right of this travel), then the right branch
            sides = _flip(left)[::-1] + ["R"] + right
            ids = b.chain(leaf_side, other, sides)
            f = ids[j]
            h = b.adj[f][1]
            anchor = (f, h, up if s[0] == "T" else (up + 3) % 6)
    else:
        a = c.node
        anchor = (a, base.adj[a][0], base.dirs[(a, base.adj[a][0])])

    for e, s in strip_of.items():
        if c.is_edge and e == c.edge:
            continue
        v, w = e
        near, far = (v, w) if parent[w] == v else (w, v)
        ids = b.chain(near, far, list(reversed(s)))
        if anchor[0] == near and anchor[1] == far and ids:
            anchor = (near, ids[0], anchor[2])

    adj = b.finish()
    return Ctree.from_planar(adj, *anchor)


def forward(cfg: Configuration) -> CtreeCode:
    """Canonical code of the n-ctree corresponding to ``cfg``."""
    tree = forward_tree(cfg)
    return canonical(to_code(tree, tree.leaves()[0]))


def _side(tree: Ctree, e, prev):
    """L or R: the side of exposed node ``e``'s leaf for travel arriving from ``prev``."""
    nbrs = tree.adj[e]
    after = nbrs[(nbrs.index(prev) + 1) % 3]
    return "R" if tree.is_leaf(after) else "L"


def _chain_from(tree: Ctree, v, w):
    """Exposed nodes met walking from base vertex ``v`` via ``w``, and the end vertex."""
    chain = []
    prev, cur = v, w
    while classify(tree, cur) is NodeClass.EXPOSED:
        chain.append(cur)
        nxt = [z for z in tree.adj[cur] if z != prev and not tree.is_leaf(z)][0]
        prev, cur = cur, nxt
    return chain, cur


def _sides_along(tree: Ctree, start, chain):
    out = []
    prev = start
    for e in chain:
        out.append(_side(tree, e, prev))
        prev = e
    return out


def inverse_tree(tree: Ctree, n_check: int | None = None) -> Configuration:
    n = tree.n
    if n < 2:
        raise ValueError("inverse needs an n-ctree with n >= 2")
    problems = tree.check()
    if problems:
        raise ValueError("not a valid ctree: " + "; ".join(problems))
    classes = {v: classify(tree, v) for v in tree.nodes()}
    base_vs = sorted(v for v, c in classes.items() if c in (NodeClass.HIDDEN, NodeClass.NAKED))
    index = {v: i for i, v in enumerate(base_vs)}
    chains = {}
    s_adj = []
    for v in base_vs:
        row = []
        for w in tree.adj[v]:
            if tree.is_leaf(w):
                continue
            chain, end = _chain_from(tree, v, w)
            chains[(v, end)] = chain
            row.append(index[end])
        s_adj.append(row)
    shape = Ctree(s_adj, {})
    c = center_by_pruning(shape)
    parent = _distances_from_center(shape.adj, c)

    strips = {}
    if c.is_edge:
        x, y = base_vs[c.edge[0]], base_vs[c.edge[1]]
        chain = chains[(x, y)]
        full = [x] + chain + [y]
        i = len(chain)
        if i % 2 == 0:
            j = i // 2
            d = tree.dirs[(full[j], full[j + 1])]
            if d in _UP:
                bottom, top, up = x, y, d
            else:
                bottom, top, up = y, x, (d + 3) % 6
            ch = chains[(bottom, top)]
            sides = _sides_along(tree, bottom, ch)
            label = "".join(_flip(sides[:j]) + sides[j:])
        else:
            j = i // 2
            f = chain[j]
            nbrs = tree.adj[f]
            h = [z for z in nbrs if tree.is_leaf(z)][0]
            left_first = nbrs[(nbrs.index(h) + 2) % 3]
            leaf_side, other = (x, y) if left_first == full[j] else (y, x)
            delta = tree.dirs[(f, h)]
            if delta in _UP:
                tb, bottom, top, up = "T", other, leaf_side, delta
            else:
                tb, bottom, top, up = "B", leaf_side, other, (delta + 3) % 6
            ch = chains[(leaf_side, other)]
            sides = _sides_along(tree, leaf_side, ch)
            left = _flip(sides[:j])[::-1]
            label = tb + "".join(left + sides[j + 1:])
        strips[edge_key(index[bottom], index[top])] = label
        shape = Ctree.from_planar(s_adj, index[bottom], index[top], up)
    else:
        a = base_vs[c.node]
        first = tree.adj[a][0]
        shape = Ctree.from_planar(s_adj, c.node, s_adj[c.node][0], tree.dirs[(a, first)])

    for (v, w), chain in chains.items():
        e = edge_key(index[v], index[w])
        if e in strips or parent[index[w]] != index[v]:
            continue
        strips[e] = "".join(reversed(_sides_along(tree, v, chain)))

    root = canonical_root(shape)
    base = to_code(shape, root)
    order = worm_edge_order(shape, root)
    return Configuration(n, base, tuple(strips[e] for e in order))


def inverse(code: CtreeCode) -> Configuration:
    """The configuration whose image under :func:`forward` is ``code``."""
    if not is_valid_code(code):
        raise ValueError(f"{format_code(code)} is not a valid code")
    return inverse_tree(from_code(code))


@dataclass
class BijectionRow:
    k: int
    configs: int
    formula: int
    census: int
    injective: bool
    image_is_class: bool
    inverse_forward: bool
    forward_inverse: bool

    @property
    def ok(self) -> bool:
        return (self.configs == self.formula == self.census and self.injective
                and self.image_is_class and self.inverse_forward and self.forward_inverse)


@dataclass
class BijectionReport:
    n: int
    rows: list[BijectionRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def census_by_hidden(n: int) -> dict[int, list[CtreeCode]]:
    classes: dict[int, list[CtreeCode]] = {}
    for code in enumerate_unrooted(n):
        classes.setdefault(hidden_count(from_code(code)), []).append(code)
    return classes


def verify_bijection(n: int) -> BijectionReport:
    if n < 2:
        raise ValueError("verify_bijection needs n >= 2")
    classes = census_by_hidden(n)
    report = BijectionReport(n)
    for k in range((n - 2) // 2 + 1):
        configs = enumerate_configs(n, k)
        images = [forward(cfg) for cfg in configs]
        trees = classes.get(k, [])
        report.rows.append(BijectionRow(
            k=k,
            configs=len(configs),
            formula=int(hidden_class_count(n, k)),
            census=len(trees),
            injective=len(set(images)) == len(images),
            image_is_class=set(images) == set(trees),
            inverse_forward=all(inverse(t) == cfg for cfg, t in zip(configs, images)),
            forward_inverse=all(forward(inverse(t)) == t for t in trees),
        ))
    return report
