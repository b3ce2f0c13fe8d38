"""Decorated plane maps: the decidable model of "isotopic in the plane".

A diagram word is compiled to a combinatorial arrangement:

* each crossing becomes a 4-valent vertex carrying four darts in fixed
  counterclockwise rotation order (NE, NW, SW, SE), decorated with
  over/under/virtual layer and strand direction;
* the edge involution pairs darts along strand arcs;
* complement regions are computed by sweeping the word and merging strip
  regions, giving every dart the global face on its left and every
  crossing its four quadrant faces;
* crossing-free components are recorded as oriented circles between an
  inside and an outside face.

Two diagrams are plane-isotopic (by an orientation-preserving ambient
isotopy of the plane) exactly when their arrangements are isomorphic
respecting all decorations, the face incidences, and the unbounded face.
That is decided by comparing canonical keys built from a recursive
encoding of the nesting forest, with each connected piece canonicalized
by a minimal rooted dart traversal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Diagram, Segment, SliceKind

NE, NW, SW, SE = 0, 1, 2, 3
_CORNER_FACE = ("N", "W", "S", "E")   # face to the left of each dart


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def fresh(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class Circle:
    """A crossing-free component: inside face, outside face, orientation."""
    inside: int
    outside: int
    ccw: bool
    component: int


class PlaneMap:
    """The arrangement of a diagram, with a canonical isotopy key."""

    def __init__(self, d: Diagram):
        self.diagram = d
        self.vertices = [k for k, sl in enumerate(d.slices) if sl.is_crossing()]
        self._vertex_index = {k: i for i, k in enumerate(self.vertices)}
        n = len(self.vertices)
        self.ndarts = 4 * n
        self._build_faces(d)
        self._build_roles(d)
        self._build_alpha(d)
        self._build_circles(d)
        self._key = None

    # -- construction -------------------------------------------------------

    def _build_faces(self, d: Diagram) -> None:
        uf = _UnionFind()
        region = [uf.fresh()]           # regions at gap 0 (width 0): one
        quad: list[tuple[int, int, int, int]] = []   # (N, E, S, W) per vertex
        region_at: list[list[int]] = [list(region)]
        for k, sl in enumerate(d.slices):
            i = sl.pos
            if sl.kind is SliceKind.CUP:
                fresh = uf.fresh()
                region = region[:i] + [fresh] + region[i - 1:]
            elif sl.kind is SliceKind.CAP:
                uf.union(region[i - 1], region[i + 1])
                region = region[:i] + region[i + 2:]
            else:
                fresh = uf.fresh()
                quad.append((fresh, region[i + 1], region[i], region[i - 1]))
                region = region[:i] + [fresh] + region[i + 1:]
            region_at.append(list(region))
        self._uf = uf
        self._region_at = region_at
        self.f_infinity = uf.find(0)
        self._quad = quad
        self.nfaces = len({uf.find(r) for r in range(len(uf.parent))})
        # left face per dart: NE->N, NW->W, SW->S, SE->E
        self.left_face = []
        for q in quad:
            qn, qe, qs, qw = (uf.find(x) for x in q)
            self.left_face.extend([qn, qw, qs, qe])

    def _build_roles(self, d: Diagram) -> None:
        roles = []
        for k in self.vertices:
            sl = d.slices[k]
            i = sl.pos
            ne_dir = d.direction_of((k, i))        # "/" strand
            nw_dir = d.direction_of((k, i + 1))    # "\" strand
            if sl.kind is SliceKind.V:
                ne_layer = nw_layer = "V"
            elif sl.kind is SliceKind.XP:
                ne_layer, nw_layer = "O", "U"
            else:
                ne_layer, nw_layer = "U", "O"
            roles.append(ne_layer + ("+" if ne_dir > 0 else "-"))   # NE out iff up
            roles.append(nw_layer + ("+" if nw_dir > 0 else "-"))   # NW out iff up
            roles.append(ne_layer + ("-" if ne_dir > 0 else "+"))   # SW out iff down
            roles.append(nw_layer + ("-" if nw_dir > 0 else "+"))   # SE out iff down
        self.roles = roles

    def _corner_start(self, k: int, corner: int) -> tuple[Segment, int]:
        """Segment and walking direction (+1 up / -1 down) leaving a corner."""
        i = self.diagram.slices[k].pos
        if corner == NE:
            return (k + 1, i + 1), 1
        if corner == NW:
            return (k + 1, i), 1
        if corner == SW:
            return (k, i), -1
        return (k, i + 1), -1

    def _walk_to_corner(self, seg: Segment, up: int):
        """Follow a strand until it enters a crossing; return (slice, corner)."""
        d = self.diagram
        g, p = seg
        while True:
            if up > 0:
                sl = d.slices[g]
                i = sl.pos
                if sl.kind is SliceKind.CUP:
                    g, p = g + 1, (p if p < i else p + 2)
                elif sl.kind is SliceKind.CAP:
                    if p == i:
                        p, up = i + 1, -1
                    elif p == i + 1:
                        p, up = i, -1
                    else:
                        g, p = g + 1, (p if p < i else p - 2)
                else:
                    if p == i:
                        return g, SW
                    if p == i + 1:
                        return g, SE
                    g = g + 1
            else:
                sl = d.slices[g - 1]
                i = sl.pos
                if sl.kind is SliceKind.CAP:
                    g, p = g - 1, (p if p < i else p + 2)
                elif sl.kind is SliceKind.CUP:
                    if p == i:
                        p, up = i + 1, 1
                    elif p == i + 1:
                        p, up = i, 1
                    else:
                        g, p = g - 1, (p if p < i else p - 2)
                else:
                    if p == i:
                        return g - 1, NW
                    if p == i + 1:
                        return g - 1, NE
                    g = g - 1

    def _build_alpha(self, d: Diagram) -> None:
        alpha = [-1] * self.ndarts
        for vi, k in enumerate(self.vertices):
            for corner in range(4):
                dart = 4 * vi + corner
                if alpha[dart] >= 0:
                    continue
                seg, up = self._corner_start(k, corner)
                k2, corner2 = self._walk_to_corner(seg, up)
                other = 4 * self._vertex_index[k2] + corner2
                alpha[dart] = other
                alpha[other] = dart
        self.alpha = alpha

    def _build_circles(self, d: Diagram) -> None:
        crossing_comps = set()
        for k in self.vertices:
            i = d.slices[k].pos
            crossing_comps.add(d.component_of((k, i)))
            crossing_comps.add(d.component_of((k, i + 1)))
        circles = []
        for c in range(d.ncomponents):
            if c in crossing_comps:
                continue
            g0, p0 = d.strands.base[c]
            inside = self._region_id(g0, p0)
            outside = self._region_id(g0, p0 - 1)
            ccw = d.direction_of((g0, p0)) > 0
            circles.append(Circle(inside, outside, ccw, c))
        self.circles = circles

    def _region_id(self, gap: int, index: int) -> int:
        return self._uf.find(self._region_at[gap][index])

    # -- derived structure ---------------------------------------------------

    def sigma(self, dart: int) -> int:
        return (dart & ~3) | ((dart + 1) & 3)

    def pieces(self) -> list[list[int]]:
        """Vertex-connected components, as sorted dart lists."""
        seen = set()
        out = []
        for start in range(self.ndarts):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in (self.sigma(x), self.alpha[x]):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def piece_ambient_face(self, piece: list[int]) -> int:
        """The face just below the piece's lowest point."""
        d = self.diagram
        comps = set()
        for dart in piece:
            k = self.vertices[dart // 4]
            i = d.slices[k].pos
            comps.add(d.component_of((k, i)))
            comps.add(d.component_of((k, i + 1)))
        g0, p0 = min(d.strands.base[c] for c in comps)
        return self._region_id(g0, p0 - 1)

    def euler_checks(self) -> list[tuple[int, int, int]]:
        """(V, E, F_local) per piece; each satisfies V - E + F = 2."""
        out = []
        for piece in self.pieces():
            verts = {dart // 4 for dart in piece}
            edges = {frozenset((x, self.alpha[x])) for x in piece}
            faces = set()
            seen = set()
            for x in piece:
                if x in seen:
                    continue
                cur = x
                while cur not in seen:
                    seen.add(cur)
                    cur = self.sigma(self.alpha[cur])
                faces.add(min(self._face_orbit(x)))
            out.append((len(verts), len(edges), len(faces)))
        return out

    def _face_orbit(self, dart: int) -> list[int]:
        orbit = []
        cur = dart
        while True:
            orbit.append(cur)
            cur = self.sigma(self.alpha[cur])
            if cur == dart:
                return orbit

    # -- canonical key -------------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = _canonical_key(self)
        return self._key

    def dump(self) -> str:
        lines = [f"vertices: {len(self.vertices)} darts: {self.ndarts} "
                 f"faces: {self.nfaces} circles: {len(self.circles)}"]
        for vi, k in enumerate(self.vertices):
            lines.append(
                f"  v{vi} slice {k} {self.diagram.slices[k]} roles "
                f"{self.roles[4 * vi:4 * vi + 4]} alpha "
                f"{[self.alpha[4 * vi + c] for c in range(4)]} faces "
                f"{[self.left_face[4 * vi + c] for c in range(4)]}")
        for c in self.circles:
            lines.append(f"  circle comp {c.component} inside f{c.inside} "
                         f"outside f{c.outside} {'ccw' if c.ccw else 'cw'}")
        lines.append(f"  unbounded: f{self.f_infinity}")
        return "\n".join(lines)


# -- canonicalization ---------------------------------------------------------

def _piece_traversal(pm: PlaneMap, root: int, darts: list[int]):
    """Deterministic labelling of a piece's darts from a root."""
    labels = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in (pm.sigma(x), pm.alpha[x]):
            if y not in labels:
                labels[y] = len(order)
                order.append(y)
    enc = tuple((pm.roles[x], labels[pm.sigma(x)], labels[pm.alpha[x]])
                for x in order)
    return enc, order


def _piece_encoding(pm: PlaneMap, darts: list[int]):
    """Minimal traversal encoding and the roots achieving it."""
    best = None
    best_roots = []
    for root in darts:
        enc, _ = _piece_traversal(pm, root, darts)
        if best is None or enc < best:
            best, best_roots = enc, [root]
        elif enc == best:
            best_roots.append(root)
    return best, best_roots


def _canonical_key(pm: PlaneMap):
    pieces = pm.pieces()
    objects = []   # (ambient_face, encoder) per object
    # face -> owning object index (the object whose bounded side is the face)
    face_objects: dict[int, list[int]] = {}

    infos = []
    for piece in pieces:
        enc, roots = _piece_encoding(pm, piece)
        ambient = pm.piece_ambient_face(piece)
        faces = {pm.left_face[x] for x in piece}
        infos.append(("p", piece, enc, roots, ambient, faces))
    for c in pm.circles:
        infos.append(("c", c, None, None, c.outside, {c.inside, c.outside}))

    for idx, info in enumerate(infos):
        for f in info[5]:
            face_objects.setdefault(f, []).append(idx)

    # children of object idx grouped by which of its faces they live in
    children: dict[int | None, list[int]] = {}
    for idx, info in enumerate(infos):
        ambient = info[4]
        parent = None
        for other in face_objects.get(ambient, []):
            if other != idx and infos[other][4] != ambient:
                parent = other
                break
        children.setdefault(parent, []).append(idx)

    def encode(idx: int):
        info = infos[idx]
        kids = children.get(idx, [])
        if info[0] == "c":
            kid_encs = tuple(sorted(encode(k) for k in kids))
            return ("c", info[1].ccw, kid_encs)
        _, piece, enc, roots, ambient, _faces = info
        kid_data = [(infos[k][4], encode(k)) for k in kids]
        best = None
        for root in roots:
            _, order = _piece_traversal(pm, root, piece)
            face_label = {}
            face_seq = []
            for x in order:
                f = pm.left_face[x]
                if f not in face_label:
                    face_label[f] = len(face_label)
                face_seq.append(face_label[f])
            cand = ("p", enc, tuple(face_seq), face_label[ambient],
                    tuple(sorted((face_label[f], e) for f, e in kid_data)))
            if best is None or cand < best:
                best = cand
        return best

    roots = children.get(None, [])
    return (pm.nfaces, tuple(sorted(encode(r) for r in roots)))


def to_plane_map(d: Diagram) -> PlaneMap:
    memo = d.memo()
    if "planemap" not in memo:
        memo["planemap"] = PlaneMap(d)
    return memo["planemap"]


def plane_key(d: Diagram):
    return to_plane_map(d).key()


def plane_isotopic(d1: Diagram, d2: Diagram) -> bool:
    """Orientation-preserving ambient isotopy of the plane, decided exactly."""
    return plane_key(d1) == plane_key(d2)
