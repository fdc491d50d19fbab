"""Disc and annular diagrams over a graph product presentation.

A diagram is an oriented combinatorial map stored faces-first: `darts` maps
dart ids to (opposite, vertex, element) and `faces` partitions the darts
into cyclic orbits. The vertex permutation is derived (sigma = phi after
alpha), so Euler's formula and connectivity pin down planarity. One face is
the designated outer boundary; an optional second designated face makes the
diagram annular. Every other face must be a relator tile:

  * triangle: three darts on one graph vertex, labels multiplying to the
    identity in orbit order;
  * square: darts alternating over two adjacent graph vertices with the
    third and fourth labels inverting the first and second.

Tiles meet edges; dual curves connect edge midpoints through tiles (squares
join opposite edges, triangles join all three edges through a singular
center) and are the geometry behind the word-problem facts the tests lean
on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    BadFaceSize,
    BadSquareRelator,
    BadTriangleRelator,
    GraphProductError,
    IdentityEdgeLabel,
    IllegalSwap,
    NotPlanar,
    PatternMismatch,
    WrongBoundaryCount,
)
from .specfile import GroupSpec, parse_spec, spec_to_data
from .words import Syllable, Word, check_word


@dataclass(frozen=True)
class Dart:
    opposite: int
    vertex: int
    elem: object


@dataclass(frozen=True, eq=False)
class Diagram:
    spec: GroupSpec
    darts: dict
    faces: tuple
    outer: int
    inner: int | None = None
    basepoints: dict = field(default_factory=dict)

    @cached_property
    def face_of(self) -> dict:
        out = {}
        for idx, orbit in enumerate(self.faces):
            for d in orbit:
                out[d] = idx
        return out

    @cached_property
    def next_in_face(self) -> dict:
        out = {}
        for orbit in self.faces:
            for k, d in enumerate(orbit):
                out[d] = orbit[(k + 1) % len(orbit)]
        return out

    def alpha(self, d: int) -> int:
        return self.darts[d].opposite

    def sigma(self, d: int) -> int:
        """Next dart counterclockwise around the map vertex of d."""
        return self.next_in_face[self.darts[d].opposite]

    @property
    def is_empty(self) -> bool:
        return not self.darts

    def boundary_faces(self) -> tuple:
        return (self.outer,) if self.inner is None else (self.outer, self.inner)

    def interior_faces(self) -> tuple:
        skip = set(self.boundary_faces())
        return tuple(i for i in range(len(self.faces)) if i not in skip)


def empty_diagram(spec: GroupSpec) -> Diagram:
    return Diagram(spec, {}, ((),), 0, None, {})


# ---------------------------------------------------------------------------
# validation


def _check_tile(spec: GroupSpec, diagram: Diagram, orbit) -> None:
    labels = [diagram.darts[d] for d in orbit]
    if len(orbit) == 3:
        v = labels[0].vertex
        if any(l.vertex != v for l in labels):
            raise BadTriangleRelator("triangle darts must share one graph vertex")
        g = spec.groups[v].compose(
            spec.groups[v].compose(labels[0].elem, labels[1].elem), labels[2].elem
        )
        if not spec.groups[v].is_identity(g):
            raise BadTriangleRelator("triangle labels do not multiply to the identity")
    elif len(orbit) == 4:
        u, v = labels[0].vertex, labels[1].vertex
        if u == v or not spec.graph.adjacent(u, v):
            raise BadSquareRelator("square must alternate two adjacent graph vertices")
        if labels[2].vertex != u or labels[3].vertex != v:
            raise BadSquareRelator("square must alternate two adjacent graph vertices")
        if labels[2].elem != spec.groups[u].invert(labels[0].elem) or (
            labels[3].elem != spec.groups[v].invert(labels[1].elem)
        ):
            raise BadSquareRelator("square labels are not a commutation relator")
    else:
        raise BadFaceSize(f"interior face of size {len(orbit)}")


def validate_diagram(diagram: Diagram) -> None:
    """Raise the first structural problem found; silence means valid."""
    spec = diagram.spec
    if diagram.is_empty:
        if diagram.faces != ((),) or diagram.outer != 0 or diagram.inner is not None:
            raise GraphProductError("empty diagram must have a single empty face")
        return

    seen = set()
    for orbit in diagram.faces:
        for d in orbit:
            if d in seen:
                raise GraphProductError(f"dart {d} appears in two face positions")
            seen.add(d)
    if seen != set(diagram.darts):
        raise GraphProductError("faces do not partition the darts")

    for d, dart in diagram.darts.items():
        if dart.opposite == d or dart.opposite not in diagram.darts:
            raise GraphProductError(f"dart {d} has no proper opposite")
        opp = diagram.darts[dart.opposite]
        if opp.opposite != d:
            raise GraphProductError(f"opposite pairing at dart {d} is not an involution")
        if opp.vertex != dart.vertex:
            raise GraphProductError(f"edge of dart {d} changes graph vertex")
        if not 0 <= dart.vertex < spec.graph.n:
            raise GraphProductError(f"dart {d} has an unknown graph vertex")
        spec.groups[dart.vertex].check(dart.elem)
        if spec.groups[dart.vertex].is_identity(dart.elem):
            raise IdentityEdgeLabel(f"dart {d} is labelled by the identity")
        if opp.elem != spec.groups[dart.vertex].invert(dart.elem):
            raise GraphProductError(f"edge of dart {d} has inconsistent labels")

    # connectivity under alpha and phi
    start = next(iter(diagram.darts))
    stack, comp = [start], {start}
    while stack:
        d = stack.pop()
        for e in (diagram.darts[d].opposite, diagram.next_in_face[d]):
            if e not in comp:
                comp.add(e)
                stack.append(e)
    if comp != set(diagram.darts):
        raise NotPlanar("diagram is not connected")

    # Euler characteristic via derived vertex orbits
    unvisited = set(diagram.darts)
    v_count = 0
    while unvisited:
        d = next(iter(unvisited))
        v_count += 1
        e = d
        while True:
            unvisited.discard(e)
            e = diagram.sigma(e)
            if e == d:
                break
            if e not in unvisited:
                raise NotPlanar("vertex rotation is not a permutation")
    euler = v_count - len(diagram.darts) // 2 + len(diagram.faces)
    if euler != 2:
        raise NotPlanar(f"Euler characteristic {euler}, expected 2")

    nfaces = len(diagram.faces)
    if not 0 <= diagram.outer < nfaces:
        raise WrongBoundaryCount("outer face index out of range")
    if diagram.inner is not None:
        if not 0 <= diagram.inner < nfaces or diagram.inner == diagram.outer:
            raise WrongBoundaryCount("inner face index invalid")
    expected = set(diagram.boundary_faces())
    if set(diagram.basepoints) != expected:
        raise WrongBoundaryCount("each designated boundary face needs one basepoint")
    for f, d in diagram.basepoints.items():
        if d not in diagram.faces[f]:
            raise WrongBoundaryCount(f"basepoint {d} does not lie on its face")

    for idx in diagram.interior_faces():
        _check_tile(spec, diagram, diagram.faces[idx])


def boundary_label(diagram: Diagram, which: str = "outer") -> Word:
    """The boundary word read from the basepoint along the face orbit."""
    if diagram.is_empty:
        return ()
    if which == "outer":
        f = diagram.outer
    elif which == "inner":
        if diagram.inner is None:
            raise WrongBoundaryCount("diagram has no inner boundary")
        f = diagram.inner
    else:
        raise GraphProductError(f"unknown boundary {which!r}")
    orbit = diagram.faces[f]
    start = orbit.index(diagram.basepoints[f])
    rotated = orbit[start:] + orbit[:start]
    return tuple(
        Syllable(diagram.darts[d].vertex, diagram.darts[d].elem) for d in rotated
    )


# ---------------------------------------------------------------------------
# construction by stacking relator tiles on a path


def stack_diagram(spec: GroupSpec, word, ops) -> Diagram:
    """Grow a disc diagram over `word` by stacking tiles on the frontier.

    Ops are ("swap", i), gluing a commutation square that exchanges the
    frontier syllables at i and i+1, and ("merge", i), gluing a triangle
    that multiplies two same-vertex frontier syllables into one. The outer
    boundary reads word * result^-1 from the basepoint.
    """
    word = check_word(spec, word)
    for v, g in word:
        if spec.groups[v].is_identity(g):
            raise IdentityEdgeLabel("cannot draw an identity syllable")
    if not word:
        if ops:
            raise IllegalSwap("no positions on an empty word")
        return empty_diagram(spec)

    darts: dict[int, Dart] = {}
    counter = 0

    def new_edge(vertex, elem):
        nonlocal counter
        d, dbar = counter, counter + 1
        counter += 2
        darts[d] = Dart(dbar, vertex, elem)
        darts[dbar] = Dart(d, vertex, spec.groups[vertex].invert(elem))
        return d

    bottom = [new_edge(v, g) for v, g in word]
    frontier = list(bottom)
    interior = []

    for op in ops:
        kind, i = op
        if not 0 <= i < len(frontier) - 1:
            raise IllegalSwap(f"no adjacent pair at position {i}")
        a, b = darts[frontier[i]], darts[frontier[i + 1]]
        if kind == "swap":
            if a.vertex == b.vertex or not spec.graph.adjacent(a.vertex, b.vertex):
                raise IllegalSwap(
                    f"syllables at {i} sit on non-adjacent graph vertices"
                )
            ma = new_edge(b.vertex, b.elem)
            mb = new_edge(a.vertex, a.elem)
            interior.append((ma, mb, darts[frontier[i + 1]].opposite,
                             darts[frontier[i]].opposite))
            frontier[i], frontier[i + 1] = ma, mb
        elif kind == "merge":
            if a.vertex != b.vertex:
                raise IllegalSwap(f"syllables at {i} sit on different vertices")
            g = spec.groups[a.vertex].compose(a.elem, b.elem)
            if spec.groups[a.vertex].is_identity(g):
                raise IdentityEdgeLabel("merged syllables cancel; no edge to draw")
            m = new_edge(a.vertex, g)
            interior.append((m, darts[frontier[i + 1]].opposite,
                             darts[frontier[i]].opposite))
            frontier[i : i + 2] = [m]
        else:
            raise GraphProductError(f"unknown op {kind!r}")

    outer = tuple(bottom) + tuple(darts[t].opposite for t in reversed(frontier))
    faces = tuple(interior) + (outer,)
    diagram = Diagram(spec, darts, faces, len(interior), None, {len(interior): bottom[0]})
    validate_diagram(diagram)
    return diagram


def shuffle_diagram(spec: GroupSpec, word, swaps) -> Diagram:
    """Disc diagram witnessing a sequence of adjacent swaps on `word`."""
    return stack_diagram(spec, word, [("swap", i) for i in swaps])


# ---------------------------------------------------------------------------
# dual curves


@dataclass(frozen=True)
class DualCurve:
    edges: tuple            # edge ids (lower dart id of each edge)
    vertex: object          # common graph vertex, or None if mixed
    classification: str     # "circle" | "tree" | "other"
    singular: bool          # passes through a triangle center
    boundary_darts: tuple   # designated-boundary darts lying on this curve


def _edge_of(diagram: Diagram, d: int) -> int:
    return min(d, diagram.darts[d].opposite)


def dual_curves(diagram: Diagram) -> tuple:
    """Connected components of the edge-midpoint incidence structure."""
    if diagram.is_empty:
        return ()
    nodes = {("e", _edge_of(diagram, d)) for d in diagram.darts}
    adjacency = {n: [] for n in nodes}
    for idx in diagram.interior_faces():
        orbit = diagram.faces[idx]
        if len(orbit) == 4:
            for a, c in ((0, 2), (1, 3)):
                na = ("e", _edge_of(diagram, orbit[a]))
                nc = ("e", _edge_of(diagram, orbit[c]))
                adjacency[na].append(nc)
                adjacency[nc].append(na)
        else:
            center = ("t", idx)
            adjacency[center] = []
            for d in orbit:
                ne = ("e", _edge_of(diagram, d))
                adjacency[center].append(ne)
                adjacency[ne].append(center)

    boundary = [d for f in diagram.boundary_faces() for d in diagram.faces[f]]
    curves = []
    left = set(adjacency)
    for seed in sorted(adjacency):
        if seed not in left:
            continue
        comp = {seed}
        stack = [seed]
        while stack:
            n = stack.pop()
            for m in adjacency[n]:
                if m not in comp:
                    comp.add(m)
                    stack.append(m)
        left -= comp
        edges = tuple(sorted(e for kind, e in comp if kind == "e"))
        passages = sum(len(adjacency[n]) for n in comp) // 2
        verts = {diagram.darts[e].vertex for e in edges}
        degrees = [len(adjacency[n]) for n in comp]
        if degrees and all(deg == 2 for deg in degrees) and passages == len(comp):
            cls = "circle"
        elif passages == len(comp) - 1:
            cls = "tree"
        else:
            cls = "other"
        curves.append(
            DualCurve(
                edges=edges,
                vertex=verts.pop() if len(verts) == 1 else None,
                classification=cls,
                singular=any(kind == "t" for kind, _ in comp),
                boundary_darts=tuple(
                    d for d in boundary if _edge_of(diagram, d) in set(edges)
                ),
            )
        )
    return tuple(curves)


@dataclass(frozen=True)
class CurveReport:
    curves: tuple
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def check_curve_laws(diagram: Diagram, reduced_segments=None) -> CurveReport:
    """Check the geometric laws dual curves obey in valid diagrams.

    Mixed labels on one curve, a curve crossing itself or a non-adjacent
    curve inside a square, broken label transport across a tile, a
    non-tree/non-circle curve in a disc diagram, and a curve meeting a
    given reduced boundary segment more than once are each reported as a
    violation string. `reduced_segments` is an iterable of dart-id
    sequences along designated boundaries; the caller asserts those
    segments carry graphically reduced words.
    """
    spec = diagram.spec
    curves = dual_curves(diagram)
    violations = []
    curve_of_edge = {}
    for ci, curve in enumerate(curves):
        for e in curve.edges:
            curve_of_edge[e] = ci
        if curve.vertex is None:
            violations.append(f"curve {ci} mixes graph vertices")

    for idx in diagram.interior_faces():
        orbit = diagram.faces[idx]
        labels = [diagram.darts[d] for d in orbit]
        if len(orbit) == 4:
            c1 = curve_of_edge[_edge_of(diagram, orbit[0])]
            c2 = curve_of_edge[_edge_of(diagram, orbit[1])]
            if c1 == c2:
                violations.append(f"curve {c1} crosses itself at face {idx}")
            else:
                v1, v2 = curves[c1].vertex, curves[c2].vertex
                if v1 is not None and v2 is not None and not spec.graph.adjacent(v1, v2):
                    violations.append(
                        f"curves {c1} and {c2} cross at face {idx} without adjacency"
                    )
            if labels[2].elem != spec.groups[labels[0].vertex].invert(labels[0].elem) \
               or labels[3].elem != spec.groups[labels[1].vertex].invert(labels[1].elem):
                violations.append(f"label transport broken across face {idx}")
        else:
            v = labels[0].vertex
            g = spec.groups[v].compose(
                spec.groups[v].compose(labels[0].elem, labels[1].elem), labels[2].elem
            )
            if any(l.vertex != v for l in labels) or not spec.groups[v].is_identity(g):
                violations.append(f"label transport broken across face {idx}")

    if diagram.inner is None:
        for ci, curve in enumerate(curves):
            if curve.classification == "other":
                violations.append(f"curve {ci} is neither tree nor circle in a disc")

    if reduced_segments:
        for si, segment in enumerate(reduced_segments):
            hits: dict[int, int] = {}
            for d in segment:
                ci = curve_of_edge[_edge_of(diagram, d)]
                hits[ci] = hits.get(ci, 0) + 1
            for ci, count in hits.items():
                if count > 1:
                    violations.append(
                        f"curve {ci} meets reduced segment {si} {count} times"
                    )
    return CurveReport(curves, tuple(violations))


# ---------------------------------------------------------------------------
# elementary moves


MOVES = ("inversion", "flip", "pentagon", "pentagon-back", "hexagon", "square-reduce")


def _rotate(orbit, d):
    k = orbit.index(d)
    return orbit[k:] + orbit[:k]


def _fresh_ids(diagram, count):
    start = max(diagram.darts) + 1
    return list(range(start, start + count))


def _rebuild(diagram, drop_faces=(), replace_faces=None, add_faces=(),
             drop_darts=(), add_darts=None, relink=None):
    replace_faces = replace_faces or {}
    add_darts = add_darts or {}
    relink = relink or {}
    drop_darts = set(drop_darts)
    darts = {}
    for i, dart in diagram.darts.items():
        if i in drop_darts:
            continue
        if i in relink:
            darts[i] = Dart(relink[i], dart.vertex, dart.elem)
        else:
            darts[i] = dart
    darts.update(add_darts)
    faces = []
    remap = {}
    dropset = set(drop_faces)
    for idx, orbit in enumerate(diagram.faces):
        if idx in dropset:
            continue
        remap[idx] = len(faces)
        faces.append(tuple(replace_faces.get(idx, orbit)))
    for orbit in add_faces:
        faces.append(tuple(orbit))
    inner = None if diagram.inner is None else remap[diagram.inner]
    basepoints = {remap[f]: d for f, d in diagram.basepoints.items()}
    return Diagram(diagram.spec, darts, tuple(faces), remap[diagram.outer],
                   inner, basepoints)


def _require(cond, why):
    if not cond:
        raise PatternMismatch(why)


def _interior(diagram, f):
    return f not in diagram.boundary_faces()


def _move_inversion(diagram, at):
    _require(at in diagram.darts, f"no dart {at}")
    # Re-reading the edge from its other side; the representation already
    # carries both darts, so this is the identity surgery.
    return _rebuild(diagram)


def _move_flip(diagram, at):
    spec = diagram.spec
    _require(at in diagram.darts, f"no dart {at}")
    f1 = diagram.face_of[at]
    at2 = diagram.alpha(at)
    f2 = diagram.face_of[at2]
    _require(f1 != f2, "flip needs two distinct triangles")
    _require(_interior(diagram, f1) and _interior(diagram, f2),
             "flip diagonal must be interior")
    _require(len(diagram.faces[f1]) == 3 and len(diagram.faces[f2]) == 3,
             "flip needs two triangles")
    _, x_d, y_d = _rotate(diagram.faces[f1], at)
    _, z_d, w_d = _rotate(diagram.faces[f2], at2)
    u = diagram.darts[at].vertex
    q = spec.groups[u].compose(diagram.darts[y_d].elem, diagram.darts[z_d].elem)
    _require(not spec.groups[u].is_identity(q),
             "flip would label the diagonal with the identity")
    n1, n2 = _fresh_ids(diagram, 2)
    return _rebuild(
        diagram,
        replace_faces={f1: (y_d, z_d, n1), f2: (w_d, x_d, n2)},
        drop_darts=(at, at2),
        add_darts={
            n1: Dart(n2, u, spec.groups[u].invert(q)),
            n2: Dart(n1, u, q),
        },
    )


def _move_pentagon(diagram, at):
    spec = diagram.spec
    _require(at in diagram.darts, f"no dart {at}")
    ft = diagram.face_of[at]
    at2 = diagram.alpha(at)
    fs = diagram.face_of[at2]
    _require(_interior(diagram, ft) and _interior(diagram, fs),
             "pentagon faces must be interior")
    _require(len(diagram.faces[ft]) == 3 and len(diagram.faces[fs]) == 4,
             "pentagon needs the dart's face a triangle and its opposite a square")
    _, p_d, q_d = _rotate(diagram.faces[ft], at)
    _, x_d, m_d, y_d = _rotate(diagram.faces[fs], at2)
    u = diagram.darts[at].vertex
    v = diagram.darts[x_d].vertex
    gu = spec.groups[u]
    ids = _fresh_ids(diagram, 6)
    n1, n1b, n2, n2b, n3, n3b = ids
    x_elem = diagram.darts[x_d].elem
    p_elem = diagram.darts[p_d].elem
    q_elem = diagram.darts[q_d].elem
    return _rebuild(
        diagram,
        replace_faces={
            ft: (p_d, n1, n2, y_d),
            fs: (q_d, x_d, n3, n1b),
        },
        add_faces=((m_d, n2b, n3b),),
        drop_darts=(at, at2),
        add_darts={
            n1: Dart(n1b, v, x_elem),
            n1b: Dart(n1, v, spec.groups[v].invert(x_elem)),
            n2: Dart(n2b, u, gu.invert(p_elem)),
            n2b: Dart(n2, u, p_elem),
            n3: Dart(n3b, u, gu.invert(q_elem)),
            n3b: Dart(n3, u, q_elem),
        },
    )


def _vertex_orbit(diagram, d):
    orbit = [d]
    e = diagram.sigma(d)
    while e != d:
        orbit.append(e)
        e = diagram.sigma(e)
        if len(orbit) > len(diagram.darts):
            raise PatternMismatch("vertex rotation did not close")
    return orbit


def _move_pentagon_back(diagram, at):
    spec = diagram.spec
    _require(at in diagram.darts, f"no dart {at}")
    out = _vertex_orbit(diagram, at)
    _require(len(out) == 3, "pentagon-back needs an interior vertex of degree 3")
    outset = set(out)
    faces = [diagram.face_of[d] for d in out]
    _require(len(set(faces)) == 3, "degree-3 vertex must meet three distinct faces")
    _require(all(_interior(diagram, f) for f in faces),
             "pentagon-back vertex must not touch a boundary face")
    sizes = sorted(len(diagram.faces[f]) for f in faces)
    _require(sizes == [3, 4, 4], "pentagon-back needs one triangle and two squares")

    ft = next(f for f in faces if len(diagram.faces[f]) == 3)
    tri = diagram.faces[ft]
    o3 = next(d for d in tri if d in outset)
    rot = _rotate(tri, o3)
    m_d, i2 = rot[1], rot[2]
    _require(diagram.alpha(i2) in outset, "triangle does not close onto the vertex")

    n2 = diagram.alpha(i2)
    f1 = diagram.face_of[n2]
    _require(len(diagram.faces[f1]) == 4, "expected a square across the triangle")
    r1 = _rotate(diagram.faces[f1], n2)
    # (n2, y_d, p_d, n1) once n2 is first: square orbit is (p_d, n1, n2, y_d)
    y_d, p_d, n1 = r1[1], r1[2], r1[3]
    _require(diagram.alpha(n1) in outset, "first square does not close onto the vertex")

    n1b = diagram.alpha(n1)
    f2 = diagram.face_of[n1b]
    _require(f2 != f1 and len(diagram.faces[f2]) == 4, "expected a second square")
    r2 = _rotate(diagram.faces[f2], n1b)
    # square orbit (q_d, x_d, n3, n1b) rotated to (n1b, q_d, x_d, n3)
    q_d, x_d, n3 = r2[1], r2[2], r2[3]
    _require(diagram.alpha(n3) == o3, "squares do not chain back to the triangle")
    _require({ft, f1, f2} == set(faces), "faces around the vertex do not match")

    u = diagram.darts[m_d].vertex
    gu = spec.groups[u]
    label = gu.invert(gu.compose(diagram.darts[p_d].elem, diagram.darts[q_d].elem))
    _require(not gu.is_identity(label), "pentagon-back would need an identity diagonal")
    t, tb = _fresh_ids(diagram, 2)
    return _rebuild(
        diagram,
        drop_faces=(ft, f1, f2),
        add_faces=((t, p_d, q_d), (tb, x_d, m_d, y_d)),
        drop_darts=(i2, n2, n1, n1b, n3, o3),
        add_darts={
            t: Dart(tb, u, label),
            tb: Dart(t, u, gu.invert(label)),
        },
    )


def _move_hexagon(diagram, at):
    spec = diagram.spec
    _require(at in diagram.darts, f"no dart {at}")
    out = _vertex_orbit(diagram, at)
    _require(len(out) == 3, "hexagon needs an interior vertex of degree 3")
    outset = set(out)
    faces = [diagram.face_of[d] for d in out]
    _require(len(set(faces)) == 3, "degree-3 vertex must meet three distinct faces")
    _require(all(_interior(diagram, f) for f in faces),
             "hexagon vertex must not touch a boundary face")
    _require(all(len(diagram.faces[f]) == 4 for f in faces),
             "hexagon needs three squares")

    # Chain the squares: each, rotated to put its out-dart last, reads
    # (h_a, h_b, in, out) and alpha(in) is the next square's out-dart.
    chain = []
    f = diagram.face_of[at]
    for _ in range(3):
        od = next(d for d in diagram.faces[f] if d in outset)
        rot = _rotate(diagram.faces[f], od)       # (out, h_a, h_b, in)
        h_a, h_b, in_d = rot[1], rot[2], rot[3]
        _require(diagram.alpha(in_d) in outset, "squares do not chain around the vertex")
        chain.append((f, h_a, h_b, in_d, od))
        f = diagram.face_of[diagram.alpha(in_d)]
    _require(f == chain[0][0], "squares do not close into a cycle")
    _require({c[0] for c in chain} == set(faces), "faces around the vertex do not match")

    (f0, a0, b0, i0, o0), (f1, a1, b1, i1, o1), (f2, a2, b2, i2, o2) = chain
    h1, h2, h3, h4, h5, h6 = b0, a1, b1, a2, b2, a0
    g = diagram.darts[h1]
    hh = diagram.darts[h2]
    kk = diagram.darts[h3]
    ids = _fresh_ids(diagram, 6)
    r1, r1b, r3, r3b, r5, r5b = ids
    return _rebuild(
        diagram,
        replace_faces={
            f0: (h1, h2, r3, r1b),
            f1: (h3, h4, r5, r3b),
            f2: (h5, h6, r1, r5b),
        },
        drop_darts=(i0, o0, i1, o1, i2, o2),
        add_darts={
            r1: Dart(r1b, hh.vertex, hh.elem),
            r1b: Dart(r1, hh.vertex, spec.groups[hh.vertex].invert(hh.elem)),
            r3: Dart(r3b, g.vertex, spec.groups[g.vertex].invert(g.elem)),
            r3b: Dart(r3, g.vertex, g.elem),
            r5: Dart(r5b, kk.vertex, spec.groups[kk.vertex].invert(kk.elem)),
            r5b: Dart(r5, kk.vertex, kk.elem),
        },
    )


def _move_square_reduce(diagram, at):
    _require(at in diagram.darts, f"no dart {at}")
    f1 = diagram.face_of[at]
    at2 = diagram.alpha(at)
    f2 = diagram.face_of[at2]
    _require(f1 != f2, "square reduction needs two distinct squares")
    _require(_interior(diagram, f1) and _interior(diagram, f2),
             "square reduction faces must be interior")
    _require(len(diagram.faces[f1]) == 4 and len(diagram.faces[f2]) == 4,
             "square reduction needs two squares")
    d2 = diagram.next_in_face[at]
    _require(diagram.face_of[diagram.alpha(d2)] == f2,
             "squares share only one edge here")
    _require(diagram.next_in_face[diagram.alpha(d2)] == at2,
             "shared edges are not consecutive in the second square")
    _, _, s1, s2 = _rotate(diagram.faces[f1], at)
    _, _, s3, s4 = _rotate(diagram.faces[f2], diagram.alpha(d2))
    deleted = {at, d2, at2, diagram.alpha(d2), s1, s2, s3, s4}
    for s in (s1, s2, s3, s4):
        _require(diagram.alpha(s) not in deleted,
                 "square pair folds onto itself; nothing left to glue")
    return _rebuild(
        diagram,
        drop_faces=(f1, f2),
        drop_darts=deleted,
        relink={
            diagram.alpha(s1): diagram.alpha(s4),
            diagram.alpha(s4): diagram.alpha(s1),
            diagram.alpha(s2): diagram.alpha(s3),
            diagram.alpha(s3): diagram.alpha(s2),
        },
    )


_MOVE_TABLE = {
    "inversion": _move_inversion,
    "flip": _move_flip,
    "pentagon": _move_pentagon,
    "pentagon-back": _move_pentagon_back,
    "hexagon": _move_hexagon,
    "square-reduce": _move_square_reduce,
}


def apply_move(diagram: Diagram, move: str, at: int) -> Diagram:
    """Apply an elementary move at a dart, returning a new valid diagram.

    Face count shifts by the move's nature: 0 for inversion, flip and
    hexagon, +1 for pentagon, -1 for pentagon-back, -2 for square-reduce.
    Boundary faces and basepoints are never touched, so boundary labels are
    invariant. Raises PatternMismatch when the location does not match the
    move or the surgery would not leave a valid diagram.
    """
    if move not in _MOVE_TABLE:
        raise GraphProductError(f"unknown move {move!r}; choose from {MOVES}")
    if diagram.is_empty:
        raise PatternMismatch("no darts in an empty diagram")
    result = _MOVE_TABLE[move](diagram, at)
    try:
        validate_diagram(result)
    except GraphProductError as exc:
        raise PatternMismatch(f"move would break the diagram: {exc}") from exc
    return result


# ---------------------------------------------------------------------------
# files


def diagram_to_data(diagram: Diagram) -> dict:
    darts = [
        {
            "id": d,
            "opposite": dart.opposite,
            "next": diagram.sigma(d) if diagram.darts else None,
            "vertex": diagram.spec.vertices[dart.vertex],
            "element": diagram.spec.groups[dart.vertex].atom(dart.elem),
        }
        for d, dart in sorted(diagram.darts.items())
    ]

    def face_ref(f):
        orbit = diagram.faces[f]
        return {
            "face": min(orbit) if orbit else None,
            "basepoint": diagram.basepoints.get(f),
        }

    return {
        "spec": spec_to_data(diagram.spec),
        "darts": darts,
        "outer": face_ref(diagram.outer),
        "inner": None if diagram.inner is None else face_ref(diagram.inner),
    }


def parse_diagram(data, spec: GroupSpec | None = None) -> Diagram:
    if not isinstance(data, dict) or "darts" not in data or "outer" not in data:
        raise GraphProductError("diagram file needs 'spec', 'darts' and 'outer'")
    if "spec" not in data:
        if spec is None:
            raise GraphProductError("diagram file has no embedded spec")
        embedded = spec
    else:
        embedded = parse_spec(data["spec"])
        if spec is not None:
            mine, given = spec_to_data(embedded), spec_to_data(spec)
            mine.pop("limits", None), given.pop("limits", None)
            if mine != given:
                raise GraphProductError("--spec disagrees with the embedded spec")
            embedded = spec

    raw = data["darts"]
    if not isinstance(raw, list):
        raise GraphProductError("'darts' must be a list")
    if not raw:
        diagram = empty_diagram(embedded)
        validate_diagram(diagram)
        return diagram

    darts = {}
    nxt_vertex = {}
    for entry in raw:
        try:
            i = entry["id"]
            opp = entry["opposite"]
            nxt = entry["next"]
            vname = entry["vertex"]
            atom = entry["element"]
        except (TypeError, KeyError) as exc:
            raise GraphProductError(f"malformed dart entry: {entry!r}") from exc
        if i in darts:
            raise GraphProductError(f"dart id {i} repeated")
        v = embedded.graph.index(vname)
        darts[i] = Dart(opp, v, embedded.groups[v].parse_atom(atom))
        nxt_vertex[i] = nxt
    for i, dart in darts.items():
        if dart.opposite not in darts or nxt_vertex[i] not in darts:
            raise GraphProductError(f"dart {i} references a missing dart")

    # phi = next-around-vertex composed with alpha
    phi = {i: nxt_vertex[darts[i].opposite] for i in darts}
    if sorted(phi.values()) != sorted(darts):
        raise GraphProductError("next-around-vertex is not a permutation")
    faces = []
    left = set(darts)
    while left:
        d = min(left)
        orbit = [d]
        left.discard(d)
        e = phi[d]
        while e != d:
            orbit.append(e)
            left.discard(e)
            e = phi[e]
        faces.append(tuple(orbit))
    face_by_dart = {d: k for k, orbit in enumerate(faces) for d in orbit}

    def resolve(ref, name):
        if not isinstance(ref, dict) or "face" not in ref or "basepoint" not in ref:
            raise GraphProductError(f"'{name}' needs 'face' and 'basepoint'")
        if ref["face"] not in face_by_dart:
            raise WrongBoundaryCount(f"{name} face dart {ref['face']!r} unknown")
        return face_by_dart[ref["face"]], ref["basepoint"]

    outer, outer_bp = resolve(data["outer"], "outer")
    basepoints = {outer: outer_bp}
    inner = None
    if data.get("inner") is not None:
        inner, inner_bp = resolve(data["inner"], "inner")
        basepoints[inner] = inner_bp
    diagram = Diagram(embedded, darts, tuple(faces), outer, inner, basepoints)
    validate_diagram(diagram)
    return diagram


def load_diagram(path, spec: GroupSpec | None = None) -> Diagram:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise GraphProductError(f"cannot read diagram file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphProductError(f"diagram file is not valid JSON: {exc}") from exc
    return parse_diagram(data, spec)


def save_diagram(diagram: Diagram, path) -> None:
    with open(path, "w") as fh:
        json.dump(diagram_to_data(diagram), fh, indent=1)
        fh.write("\n")
