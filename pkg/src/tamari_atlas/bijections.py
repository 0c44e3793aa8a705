r"""
The four transformations between bipartite maps, degree trees and new
intervals, plus their composites.

Both map/tree directions run on a single tagged working map: edges are
tagged 'M' (still part of the map) or 'T' (part of the tree under
construction), and tree edges carry their integer label. Moving an edge
between the two structures is a tag flip plus surgery, never a copy.

map_to_tree explores the map from the root corner, converting one map
edge per advance step: a bridge to a degree-1 vertex becomes a labelled-0
leaf edge in place (A1); a bridge to a larger vertex is replaced by a
tree edge to the vertex behind it (A2); a non-bridge triggers a vertex
split, with the half holding the unexplored map edges becoming the new
leftmost child and the merged face's half-degree becoming the edge label
(A3). tree_to_map runs the exact inverse cases in postorder.

The interval side goes through certificates: nodes are processed in
reverse preorder, and a node with leftmost edge label r sends its
certificate forward past r not-yet-consumed nodes; the lower path is the
concatenation of u d^(multiplicity) over the preorder, the upper path
wraps the plane-tree Dyck word in one extra up/down pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dyck import DyckPath, NewInterval
from .maps import BLACK, PlanarMap, edgeless_map
from .trees import (DegreeTree, PlaneTree, dyck_to_plane_tree, find_violation,
                    plane_tree_to_dyck)


@dataclass
class TraceStep:
    """One recorded step of a map/tree transformation."""

    kind: str                 # A1, A2, A3, A1', A2', A3', prepare, backtrack
    map: PlanarMap            # snapshot of the tagged working map
    current: int | None       # current vertex (map-to-tree only)
    root: int                 # root vertex of the (partial) tree
    tree_children: dict[int, tuple[int, ...]] = field(default_factory=dict)


def _snapshot(trace, kind, w, current, root, kids):
    if trace is not None:
        trace.append(TraceStep(kind, w.copy(), current, root,
                               {v: tuple(c) for v, c in kids.items()}))


def _check_map(m: PlanarMap):
    bad = m.find_violation()
    if bad is not None:
        raise ValueError(f"invalid input map: {bad}")


def _check_tree(dt: DegreeTree):
    bad = find_violation(dt)
    if bad is not None:
        raise ValueError(f"invalid degree tree: {bad}")


def map_to_tree(m: PlanarMap, trace: list[TraceStep] | None = None
                ) -> DegreeTree:
    """Transform a rooted bipartite planar map into a degree tree."""
    _check_map(m)
    if m.edge_count == 0:
        return DegreeTree(PlaneTree(((),)), ())
    w = m.copy()
    for d in w.darts():
        w.set_tag(d, 'M')
    root = w.root_vertex()
    kids: dict[int, list[int]] = {root: []}
    labels: dict[int, int] = {}
    cur = root
    pend = w.root_corner
    stack: list[int] = []   # parent-side tree darts along the descent path

    def first_map_dart(vertex: int, after: int) -> int | None:
        for x in w.vertex_darts(vertex, start=after)[1:]:
            if w.tag_of(x) == 'M':
                return x
        return None

    while True:
        d = pend
        across = w.vertex_of(w.mate(d))
        if w.is_bridge(d):
            if w.degree(across) == 1:
                # A1: leaf edge, converted in place
                w.set_tag(d, 'T', 0)
                assert across not in kids
                kids[across] = []
                kids[cur].insert(0, across)
                labels[across] = 0
                scan_from = d
                _snapshot(trace, 'A1', w, cur, root, kids)
            else:
                # A2: bridge into a bigger component; hop over it
                e1 = w.next_cw(w.mate(d))
                behind = w.vertex_of(w.mate(e1))
                a, b = w.add_edge(('corner', d), ('after', w.mate(e1)))
                w.set_tag(a, 'T', 0)
                w.delete_edge(d)
                assert behind not in kids
                kids[behind] = []
                kids[cur].insert(0, behind)
                labels[behind] = 0
                stack.append(a)
                cur = behind
                scan_from = b
                _snapshot(trace, 'A2', w, cur, root, kids)
        else:
            # A3: split off the unexplored edges as the new leftmost child
            inner = w.face_of(w.mate(d))
            assert len(inner) % 2 == 0
            half_deg = len(inner) // 2
            rotated = w.vertex_darts(cur, start=d)
            arc = []
            for x in rotated:
                if w.tag_of(x) != 'M':
                    break
                arc.append(x)
            assert all(w.tag_of(x) == 'T' for x in rotated[len(arc):]), \
                "map darts are not contiguous at the current vertex"
            child_v = w.split_vertex(cur, arc, w.color(cur))
            place_tree = (('corner', rotated[len(arc)])
                          if len(arc) < len(rotated) else ('vertex', cur))
            t_dart, m_dart = w.add_edge(place_tree, ('corner', d))
            w.set_tag(t_dart, 'T', half_deg)
            w.delete_edge(d)
            kids[child_v] = []
            kids[cur].insert(0, child_v)
            labels[child_v] = half_deg
            stack.append(t_dart)
            cur = child_v
            scan_from = m_dart
            _snapshot(trace, 'A3', w, cur, root, kids)

        # prepare: next pending edge, backtracking along the tree if needed
        pend = first_map_dart(cur, scan_from)
        while pend is None and stack:
            t = stack.pop()
            cur = w.vertex_of(t)
            pend = first_map_dart(cur, t)
            if pend is None:
                _snapshot(trace, 'backtrack', w, cur, root, kids)
        _snapshot(trace, 'prepare', w, cur, root, kids)
        if pend is None:
            break

    assert all(w.tag_of(d) == 'T' for d in w.darts())

    # flatten the vertex-keyed tree into preorder indexing
    children: list[tuple[int, ...]] = []
    edge_labels: list[int] = []

    def emit(v: int) -> int:
        idx = len(children)
        children.append(())
        out = []
        for c in kids[v]:
            ci = emit(c)
            edge_labels_by_node[ci] = labels[c]
            out.append(ci)
        children[idx] = tuple(out)
        return idx

    edge_labels_by_node: dict[int, int] = {}
    emit(root)
    edge_labels = [edge_labels_by_node[i] for i in range(1, len(children))]
    dt = DegreeTree(PlaneTree(tuple(children)), tuple(edge_labels))
    assert find_violation(dt) is None
    return dt


def tree_to_map(dt: DegreeTree, trace: list[TraceStep] | None = None
                ) -> PlanarMap:
    """Transform a degree tree into a rooted bipartite planar map."""
    _check_tree(dt)
    if dt.size == 0:
        return edgeless_map()

    # embed the tree: clockwise rotation at each node is
    # [parent, rightmost child, ..., leftmost child]
    w = PlanarMap()
    tree = dt.tree
    vert: dict[int, int] = {0: 0}
    up_dart: dict[int, int] = {}    # node -> dart at node toward its parent

    def build(node: int):
        prev_parent_dart = None
        for child in tree.children[node]:
            cv = w.new_vertex(BLACK)
            if prev_parent_dart is not None:
                place = ('corner', prev_parent_dart)
            elif node == 0:
                place = ('vertex', vert[node])
            else:
                place = ('after', up_dart[node])
            p_dart, c_dart = w.add_edge(place, ('vertex', cv))
            w.set_tag(p_dart, 'T', dt.label_of(child))
            vert[child] = cv
            up_dart[child] = c_dart
            prev_parent_dart = p_dart
            build(child)
        if node == 0:
            w.root_corner = prev_parent_dart

    build(0)
    kids_snapshot = {vert[v]: tuple(vert[c] for c in tree.children[v])
                     for v in range(tree.node_count)}
    _snapshot(trace, 'embed', w, None, 0, kids_snapshot)

    for node in tree.postorder():
        if node == 0:
            continue
        q = up_dart[node]
        p = w.mate(q)
        r = w.edge_label(q)
        if not tree.children[node]:
            # A1': leaf edge moves to the map in place
            assert r == 0
            w.set_tag(q, 'M')
            _snapshot(trace, "A1'", w, None, 0, kids_snapshot)
        elif r == 0:
            # A2': close a triangle over the neighbouring component edge
            e_prime = w.prev_cw(q)
            assert e_prime != q
            a, _ = w.add_edge(('after', p), ('corner', w.mate(e_prime)))
            w.set_tag(a, 'M')
            w.delete_edge(q)
            _snapshot(trace, "A2'", w, None, 0, kids_snapshot)
        else:
            # A3': cut a face of half-degree r out of the outer face,
            # then contract the tree edge
            d0 = w.next_cw(q)
            assert d0 != q
            target = w.corner_walk_cw(d0, 2 * r - 1)
            a, _ = w.add_edge(('corner', d0), ('corner', target))
            w.set_tag(a, 'M')
            assert len(w.face_of(d0)) == 2 * r, \
                "new face does not close at the stated half-degree"
            w.contract_edge(p)
            _snapshot(trace, "A3'", w, None, 0, kids_snapshot)

    assert all(w.tag_of(d) == 'M' for d in w.darts())
    w.clear_tags()
    w.recolor_bipartite()
    assert w.find_violation() is None, w.find_violation()
    return w


@dataclass(frozen=True)
class CertificateAssignment:
    """Certificate per node (by preorder index) and per-node multiplicity
    c(w) = number of nodes certified by w."""

    certificate: tuple[int, ...]
    multiplicity: tuple[int, ...]


def certificates(dt: DegreeTree) -> CertificateAssignment:
    """Reverse-preorder certificate assignment.

    Nodes start black; a node whose leftmost edge label is r re-colors the
    next r still-black nodes red and takes as certificate the node just
    before the (r+1)-st black one. Leaves and label-0 nodes certify
    themselves.
    """
    _check_tree(dt)
    tree = dt.tree
    n1 = tree.node_count
    black = [True] * n1
    cert = [0] * n1
    for v in range(n1 - 1, -1, -1):
        kids = tree.children[v]
        r = dt.label_of(kids[0]) if kids else 0
        if r == 0:
            cert[v] = v
            continue
        seen = 0
        stop = v
        j = v + 1
        while True:
            assert j < n1, "certificate search ran off the tree"
            if black[j]:
                if seen == r:
                    break
                seen += 1
                black[j] = False
            stop = j
            j += 1
        cert[v] = stop
    mult = [0] * n1
    for wv in cert:
        mult[wv] += 1
    return CertificateAssignment(tuple(cert), tuple(mult))


def tree_to_interval(dt: DegreeTree) -> NewInterval:
    """Degree tree of size n to new interval of size n + 1."""
    mult = certificates(dt).multiplicity
    lower = ''.join('u' + 'd' * mult[v] for v in range(dt.tree.node_count))
    upper = 'u' + plane_tree_to_dyck(dt.tree).steps + 'd'
    return NewInterval(DyckPath(lower), DyckPath(upper))


def interval_to_tree(interval: NewInterval) -> DegreeTree:
    """New interval of size n + 1 to degree tree of size n.

    The tree is read off the upper path with its outer up/down pair
    stripped; the label of each leftmost edge is the number of rising
    contacts of the lower-path factor at the parent's preorder index.
    """
    from .dyck import factor_between, rising_contacts

    tree = dyck_to_plane_tree(DyckPath(interval.upper.steps[1:-1]))
    labels = [0] * tree.size
    for node in range(tree.node_count):
        kids = tree.children[node]
        if kids:
            labels[kids[0] - 1] = rising_contacts(
                factor_between(interval.lower, node + 1))
    dt = DegreeTree(tree, tuple(labels))
    _check_tree(dt)
    return dt


def map_to_interval(m: PlanarMap) -> NewInterval:
    return tree_to_interval(map_to_tree(m))


def interval_to_map(interval: NewInterval) -> PlanarMap:
    return tree_to_map(interval_to_tree(interval))
