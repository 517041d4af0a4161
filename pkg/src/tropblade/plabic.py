"""Bipartite plabic structures built from the labels of a maximal collection, and their boundary.

Nothing is embedded in the plane. A black node is a ``(k+1)``-set ``B`` whose
subsets in ``W`` number at least three; a white node is a ``(k-1)``-set
contained in at least three members of ``W``. The faces around a node are
ordered by the label that is removed (black) or added (white), read
cyclically. Two faces ``Wt + x`` and ``Wt + y`` form a tiling edge when they
are consecutive around both ``Wt + x + y`` and ``Wt``; a tiling edge whose
other side has only these two faces ends on the boundary.

Boundary vertex ``j`` sits between the interval ending just before ``j``
and the interval ending at ``j``; these are the two faces that merge under
the boundary map at ``j``.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations

from .cyclic import CyclicGround, KSubset, drop_successor, format_labels, labels_of, mask_of
from .errors import PreconditionError, StructureError
from .separation import WCollection, boundary_collection, is_maximal

BLACK = "black"
WHITE = "white"


def _cyclic_key(ground: CyclicGround):
    els = ground.elements
    pos = {e: i for i, e in enumerate(els)}
    return lambda x: pos[x]


def _m2(mask: int, j: int, ground: CyclicGround) -> int:
    """The two members of ``mask`` met first when walking the ground from ``j``."""
    els = ground.elements
    start = next(i for i, e in enumerate(els) if e >= j) if any(e >= j for e in els) else 0
    out = 0
    count = 0
    for step in range(len(els)):
        e = els[(start + step) % len(els)]
        if (mask >> (e - 1)) & 1:
            out |= 1 << (e - 1)
            count += 1
            if count == 2:
                return out
    raise StructureError(f"{labels_of(mask)} has fewer than two members")


@dataclass
class PlabicStructure:
    """Labelled bipartite structure. Node ids are stable integers; labels are bitmasks."""

    ground: CyclicGround
    k: int
    nodes: dict[int, tuple[str, int]] = field(default_factory=dict)
    faces: frozenset[KSubset] = frozenset()
    edges: dict[frozenset[int], tuple[KSubset, KSubset]] = field(default_factory=dict)
    boundary: dict[int, tuple[int, tuple[KSubset, KSubset]]] = field(default_factory=dict)
    orders: dict[int, tuple[KSubset, ...]] = field(default_factory=dict)

    def degree(self, node: int) -> int:
        d = sum(1 for e in self.edges if node in e)
        return d + sum(1 for nid, _ in self.boundary.values() if nid == node)

    def neighbours(self, node: int) -> list[int]:
        return [next(iter(e - {node})) for e in self.edges if node in e]

    def color(self, node: int) -> str:
        return self.nodes[node][0]

    def label(self, node: int) -> int:
        return self.nodes[node][1]

    def black_labels(self) -> list[tuple[int, ...]]:
        return sorted(labels_of(m) for c, m in self.nodes.values() if c == BLACK)

    def white_labels(self) -> list[tuple[int, ...]]:
        return sorted(labels_of(m) for c, m in self.nodes.values() if c == WHITE)

    def canonical(self) -> tuple:
        """Everything that is compared for isomorphism, with node ids replaced by labels."""

        def name(nid):
            c, m = self.nodes[nid]
            return (c, labels_of(m))

        edges = sorted(tuple(sorted(name(n) for n in e)) for e in self.edges)
        bnd = sorted((j, name(nid)) for j, (nid, _) in self.boundary.items())
        return (
            self.ground,
            self.k,
            tuple(self.black_labels()),
            tuple(self.white_labels()),
            tuple(sorted(s.mask for s in self.faces)),
            tuple(edges),
            tuple(bnd),
        )

    def euler_characteristic(self) -> int:
        return len(self.faces) - len(self.edges) - len(self.boundary) + len(self.nodes)

    def to_json(self) -> dict:
        def name(nid):
            c, m = self.nodes[nid]
            return {"color": c, "label": list(labels_of(m))}

        return {
            "ground": list(self.ground.elements),
            "k": self.k,
            "faces": [list(s.members) for s in sorted(self.faces, key=lambda s: s.mask)],
            "black": [list(x) for x in self.black_labels()],
            "white": [list(x) for x in self.white_labels()],
            "edges": sorted(
                ([name(n) for n in sorted(e, key=lambda n: self.nodes[n])] for e in self.edges),
                key=lambda pair: json.dumps(pair),
            ),
            "boundary": [
                {"vertex": j, "node": name(nid)} for j, (nid, _) in sorted(self.boundary.items())
            ],
        }

    def to_dot(self) -> str:
        lines = ["graph plabic {"]
        for nid, (c, m) in sorted(self.nodes.items()):
            fill = "black" if c == BLACK else "white"
            font = "white" if c == BLACK else "black"
            lines.append(
                f'  n{nid} [label="{format_labels(labels_of(m))}", shape=circle, style=filled, '
                f'fillcolor={fill}, fontcolor={font}];'
            )
        for j in sorted(self.boundary):
            lines.append(f'  b{j} [label="{j}", shape=plaintext];')
        for e in sorted(tuple(sorted(e)) for e in self.edges):
            lines.append(f"  n{e[0]} -- n{e[1]};")
        for j, (nid, _) in sorted(self.boundary.items()):
            lines.append(f"  b{j} -- n{nid};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _clique_order(node_mask: int, members: list[KSubset], color: str, ground: CyclicGround) -> tuple[KSubset, ...]:
    key = _cyclic_key(ground)
    if color == BLACK:
        return tuple(sorted(members, key=lambda s: key(labels_of(node_mask & ~s.mask)[0])))
    return tuple(sorted(members, key=lambda s: key(labels_of(s.mask & ~node_mask)[0])))


def _consecutive(order: tuple[KSubset, ...], x: KSubset, y: KSubset) -> bool:
    if len(order) <= 2:
        return True
    i, j = order.index(x), order.index(y)
    return (i - j) % len(order) in (1, len(order) - 1)


def _interval_ending_at(ground: CyclicGround, last: int, size: int) -> KSubset:
    els = ground.elements
    p = els.index(last)
    return KSubset(ground, mask_of(els[(p - t) % len(els)] for t in range(size)))


def build_tiling(W: WCollection) -> PlabicStructure:
    if not is_maximal(W):
        raise PreconditionError("plabic structures are built from maximal collections")
    ground, k = W.ground, W.k
    black_members: dict[int, list[KSubset]] = defaultdict(list)
    white_members: dict[int, list[KSubset]] = defaultdict(list)
    others = ground.elements
    for s in W.sorted():
        for x in others:
            if x not in s:
                black_members[s.mask | mask_of((x,))].append(s)
        for x in s.members:
            white_members[s.mask & ~mask_of((x,))].append(s)

    P = PlabicStructure(ground, k, faces=W.sets)
    ids: dict[tuple[str, int], int] = {}
    for color, table in ((BLACK, black_members), (WHITE, white_members)):
        for mask in sorted(table):
            if len(table[mask]) >= 3:
                nid = len(ids)
                ids[(color, mask)] = nid
                P.nodes[nid] = (color, mask)
                P.orders[nid] = _clique_order(mask, table[mask], color, ground)

    bnd_pairs = {}
    for j in ground.elements:
        f1 = _interval_ending_at(ground, ground.predecessor(j), k)
        f2 = _interval_ending_at(ground, j, k)
        bnd_pairs[frozenset((f1.mask, f2.mask))] = j

    for x, y in combinations(W.sorted(), 2):
        if (x.mask & y.mask).bit_count() != k - 1:
            continue
        b, w = x.mask | y.mask, x.mask & y.mask
        bo = _clique_order(b, black_members[b], BLACK, ground)
        wo = _clique_order(w, white_members[w], WHITE, ground)
        real_b, real_w = len(bo) >= 3, len(wo) >= 3
        if not (real_b or real_w):
            continue
        on_b, on_w = _consecutive(bo, x, y), _consecutive(wo, x, y)
        if real_b and real_w and on_b != on_w:
            raise StructureError(f"faces {x} and {y} are consecutive around only one of their cliques")
        if not (on_b and on_w):
            continue
        bid, wid = ids.get((BLACK, b)), ids.get((WHITE, w))
        if bid is not None and wid is not None:
            P.edges[frozenset((bid, wid))] = (x, y)
            continue
        j = bnd_pairs.get(frozenset((x.mask, y.mask)))
        inner = bid if bid is not None else wid
        if j is None or inner is None:
            raise StructureError(f"tiling edge {x}|{y} has a degenerate side away from the boundary")
        P.boundary[j] = (inner, (x, y))
    if len(P.boundary) != len(ground):
        raise StructureError(f"found {len(P.boundary)} boundary attachments, expected {len(ground)}")
    return P


def _image(mask: int, j: int, n: int) -> int:
    return drop_successor(mask, j, n)


def plabic_boundary(P: PlabicStructure, j: int) -> PlabicStructure:
    """Delete the edges ``(B, Wt)`` with ``B - Wt`` the two members of ``B`` first reached from ``j``,
    relabel by the boundary map, then clean up isolated and bivalent nodes.

    Removing boundary vertex ``j`` is the same deletion applied to the
    degenerate clique on the outside, so it is handled by the same rule.
    """
    if j not in P.ground:
        raise PreconditionError(f"label {j} is not in {P.ground!r}")
    if P.k < 2:
        raise PreconditionError("boundary needs k >= 2")
    n = P.ground.n
    ground = P.ground.without(j)

    # step 2: find deleted edges; check each black node loses at most one
    deleted_per_black: dict[int, int] = defaultdict(int)
    kept_edges: dict[frozenset[int], tuple[KSubset, KSubset]] = {}
    merged: list[tuple[KSubset, KSubset]] = []
    for e, faces in P.edges.items():
        bid = next(v for v in e if P.color(v) == BLACK)
        wid = next(v for v in e if P.color(v) == WHITE)
        bm, wm = P.label(bid), P.label(wid)
        if bm & ~wm == _m2(bm, j, P.ground):
            deleted_per_black[bid] += 1
            merged.append(faces)
        else:
            kept_edges[e] = faces
    if any(v > 1 for v in deleted_per_black.values()):
        raise StructureError("a black node lost more than one edge")
    if j not in P.boundary:
        raise StructureError(f"no boundary attachment at {j}")
    kept_boundary = {}
    for i, (nid, faces) in P.boundary.items():
        if i == j:
            merged.append(faces)
        else:
            kept_boundary[i] = (nid, faces)

    # step 3: relabel; faces joined across deleted edges must share an image
    parent = {s: s for s in P.faces}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for x, y in merged:
        parent[find(x)] = find(y)
    relabel = {s: KSubset(ground, _image(s.mask, j, n)) for s in P.faces}
    for s in P.faces:
        if relabel[s] != relabel[find(s)]:
            raise StructureError(f"merged faces {s} and {find(s)} have different images")
    Q = PlabicStructure(ground, P.k - 1, faces=frozenset(relabel.values()))
    Q.nodes = {nid: (c, _image(m, j, n)) for nid, (c, m) in P.nodes.items()}
    Q.edges = {e: (relabel[a], relabel[b]) for e, (a, b) in kept_edges.items()}
    Q.boundary = {i: (nid, (relabel[a], relabel[b])) for i, (nid, (a, b)) in kept_boundary.items()}
    Q.orders = {}
    _cleanup(Q)
    _refresh_orders(Q)
    return Q


def _cleanup(Q: PlabicStructure) -> None:
    """Drop isolated nodes, dissolve bivalent ones, and contract same-colour edges."""
    changed = True
    while changed:
        changed = False
        for nid in sorted(Q.nodes):
            if Q.degree(nid) == 0:
                del Q.nodes[nid]
                changed = True
        for nid in sorted(Q.nodes):
            if Q.degree(nid) != 2:
                continue
            inc = [e for e in Q.edges if nid in e]
            bnd = [i for i, (v, _) in Q.boundary.items() if v == nid]
            if len(inc) == 2:
                (a,), (b,) = (e - {nid} for e in inc)
                if a == b:
                    raise StructureError("bivalent node with a doubled edge")
                faces = Q.edges[inc[0]]
                del Q.edges[inc[0]], Q.edges[inc[1]]
                del Q.nodes[nid]
                _contract(Q, a, b, faces)
            elif len(inc) == 1:
                (a,) = inc[0] - {nid}
                i = bnd[0]
                del Q.edges[inc[0]]
                Q.boundary[i] = (a, Q.boundary[i][1])
                del Q.nodes[nid]
            else:
                raise StructureError(f"node joins boundary vertices {bnd} directly")
            changed = True
            break


def _contract(Q: PlabicStructure, a: int, b: int, faces) -> None:
    """Join ``a`` and ``b`` (now both neighbours of a removed bivalent node)."""
    if Q.color(a) != Q.color(b):
        Q.edges[frozenset((a, b))] = faces
        return
    if Q.label(a) != Q.label(b):
        raise StructureError(
            f"same-colour nodes {labels_of(Q.label(a))} and {labels_of(Q.label(b))} would merge with different labels"
        )
    for e in [e for e in Q.edges if b in e]:
        other = next(iter(e - {b}))
        faces_e = Q.edges.pop(e)
        if other == a:
            continue
        key = frozenset((a, other))
        if key in Q.edges:
            raise StructureError("contraction created a doubled edge")
        Q.edges[key] = faces_e
    for i, (v, f) in list(Q.boundary.items()):
        if v == b:
            Q.boundary[i] = (a, f)
    del Q.nodes[b]


def _refresh_orders(Q: PlabicStructure) -> None:
    by_node: dict[int, set[KSubset]] = defaultdict(set)
    for e, (x, y) in Q.edges.items():
        for v in e:
            by_node[v].update((x, y))
    for v, (x, y) in Q.boundary.values():
        by_node[v].update((x, y))
    for nid, (c, m) in Q.nodes.items():
        Q.orders[nid] = _clique_order(m, sorted(by_node[nid], key=lambda s: s.mask), c, Q.ground)


def structures_isomorphic(P1: PlabicStructure, P2: PlabicStructure) -> bool:
    """Labels are canonical, so isomorphism is equality of the labelled data."""
    return P1.canonical() == P2.canonical()


def tiling_adjacency(P: PlabicStructure) -> dict[KSubset, set[KSubset]]:
    adj: dict[KSubset, set[KSubset]] = {s: set() for s in P.faces}
    pairs = list(P.edges.values()) + [f for _, f in P.boundary.values()]
    for x, y in pairs:
        adj[x].add(y)
        adj[y].add(x)
    return adj


def fiber(W: WCollection, j: int, target: KSubset) -> list[KSubset]:
    return [I for I in W.sorted() if _image(I.mask, j, W.n) == target.mask]


def fiber_connected(W: WCollection, j: int, target: KSubset) -> bool:
    """The members of ``W`` sent to ``target`` form a connected piece of the tiling."""
    members = fiber(W, j, target)
    if not members:
        raise PreconditionError(f"no member of the collection maps to {target} at {j}")
    adj = tiling_adjacency(build_tiling(W))
    inside = set(members)
    seen = {members[0]}
    queue = deque([members[0]])
    while queue:
        s = queue.popleft()
        for t in adj[s]:
            if t in inside and t not in seen:
                seen.add(t)
                queue.append(t)
    return len(seen) == len(inside)


def forbidden_structure_absent(P: PlabicStructure, j: int | None = None) -> bool:
    """No deletable edge ``(B, Wt)`` between internal nodes of degree at least 3 separates faces
    ``B - a`` and ``B - c`` that are not neighbours in the stored cyclic order around ``B``.

    ``j`` defaults to the largest ground label.
    """
    if j is None:
        j = P.ground.elements[-1]
    for e, (x, y) in P.edges.items():
        bid = next(v for v in e if P.color(v) == BLACK)
        wid = next(v for v in e if P.color(v) == WHITE)
        bm, wm = P.label(bid), P.label(wid)
        if bm & ~wm != _m2(bm, j, P.ground):
            continue
        if P.degree(bid) < 3 or P.degree(wid) < 3:
            continue
        order = P.orders.get(bid, ())
        if x not in order or y not in order or not _consecutive(order, x, y):
            return False
    return True


def boundary_pipeline(W: WCollection, j: int) -> tuple[PlabicStructure, PlabicStructure]:
    """``(plabic_boundary(build_tiling(W), j), build_tiling(boundary_collection(W, j)))``."""
    return plabic_boundary(build_tiling(W), j), build_tiling(boundary_collection(W, j))
