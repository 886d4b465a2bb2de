"""Doubly periodic lattices drawn on the integer grid.

A lattice representation is a finite description of an infinite graph: vertices
placed in one C x C fundamental domain, edges given as (v, u, tx, ty) meaning
``v`` in cell (0,0) is adjacent to ``u`` in cell (tx, ty).  Horizontally
compacted drawings (ratio 2) store ``floor(x/2)`` in place of ``x``; the parity
field says which sublattice of Z^2 the uncompacted drawing lives on.

Faces, when present, let us build the planar dual (one vertex per face) and the
matching graph (all chords added inside every face).  Dual representations
shipped as data files carry their own drawing; the computed dual is an abstract
periodic graph used to validate them by isomorphism.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Optional

import numpy as np

Coord = tuple[int, int]


class LatticeError(ValueError):
    """A lattice file violated a structural invariant."""


class LatticeParseError(LatticeError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _norm_edge(i: int, j: int, tx: int, ty: int) -> tuple[int, int, int, int]:
    """Canonical orientation of an undirected periodic edge."""
    a = (i, j, tx, ty)
    b = (j, i, -tx, -ty)
    return a if a <= b else b


@dataclass(frozen=True)
class PeriodicGraph:
    """Abstract quotient of a doubly periodic graph: no drawing, offsets only."""

    n: int
    edges: tuple[tuple[int, int, int, int], ...]

    def degree_counter(self) -> Counter:
        deg = Counter()
        for i, j, tx, ty in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def edge_multiset(self) -> Counter:
        return Counter(_norm_edge(*e) for e in self.edges)

    def blow_up(self, k: int) -> "PeriodicGraph":
        """Replace the unit cell by a k x k block of cells."""
        if k == 1:
            return self

        def vid(v: int, cx: int, cy: int) -> int:
            return v * k * k + cx * k + cy

        out = []
        for i, j, tx, ty in self.edges:
            for cx in range(k):
                for cy in range(k):
                    nx, ny = cx + tx, cy + ty
                    out.append(
                        _norm_edge(vid(i, cx, cy), vid(j, nx % k, ny % k), nx // k, ny // k)
                    )
        return PeriodicGraph(self.n * k * k, tuple(sorted(out)))


def _unimodular_candidates(max_entry: int = 2):
    rng = range(-max_entry, max_entry + 1)
    for a, b, c, d in product(rng, rng, rng, rng):
        if a * d - b * c in (1, -1):
            yield (a, b, c, d)


def _gauge_match(g1: PeriodicGraph, g2: PeriodicGraph, A) -> bool:
    """Search a translation-equivariant isomorphism with cell-basis change A.

    phi maps each quotient vertex of g1 to (image vertex, gauge cell); found
    mappings are verified against the full edge multiset, so a True answer is
    exact.  Backtracking is over the image choices vertex by vertex.
    """
    a, b, c, d = A
    adj1: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for i, j, tx, ty in g1.edges:
        ux, uy = a * tx + b * ty, c * tx + d * ty
        adj1[i].append((j, ux, uy))
        adj1[j].append((i, -ux, -uy))
    adj2: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    edges2 = Counter()
    for i, j, tx, ty in g2.edges:
        adj2[i].append((j, tx, ty))
        adj2[j].append((i, -tx, -ty))
        edges2[_norm_edge(i, j, tx, ty)] += 1
    adj2_set: dict[int, Counter] = {v: Counter(items) for v, items in adj2.items()}

    n = g1.n
    # BFS order with an anchor edge into the already-assigned part
    order = [0]
    anchor = {}
    seen = {0}
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for v, tx, ty in adj1[u]:
            if v not in seen:
                seen.add(v)
                anchor[v] = (u, tx, ty)
                order.append(v)
    if len(order) != n:
        return False  # disconnected quotient: not handled (never shipped)

    def consistent(v, cand, phi):
        w2, gx, gy = cand
        for u, tx, ty in adj1[v]:
            if u in phi:
                wu, gux, guy = phi[u]
                need = (wu, gux + tx - gx, guy + ty - gy)
                if adj2_set[w2][need] == 0:
                    return False
        return True

    def extend(k, phi, used):
        if k == n:
            mapped = Counter()
            for i, j, tx, ty in g1.edges:
                ux, uy = a * tx + b * ty, c * tx + d * ty
                wi, gxi, gyi = phi[i]
                wj, gxj, gyj = phi[j]
                mapped[_norm_edge(wi, wj, ux + gxj - gxi, uy + gyj - gyi)] += 1
            return mapped == edges2
        v = order[k]
        u, tx, ty = anchor[v]
        wu, gux, guy = phi[u]
        tried = set()
        for w2, sx, sy in adj2[wu]:
            cand = (w2, gux + sx - tx, guy + sy - ty)
            if cand in tried or w2 in used:
                continue
            tried.add(cand)
            if len(adj2[w2]) != len(adj1[v]):
                continue
            if consistent(v, cand, phi):
                phi[v] = cand
                used.add(w2)
                if extend(k + 1, phi, used):
                    return True
                del phi[v]
                used.discard(w2)
        return False

    for root_img in range(g2.n):
        if len(adj2[root_img]) != len(adj1[0]):
            continue
        if extend(1, {0: (root_img, 0, 0)}, {root_img}):
            return True
    return False


def periodic_isomorphic(g1: PeriodicGraph, g2: PeriodicGraph, max_entry: int = 2) -> bool:
    """True if the two periodic graphs are isomorphic as doubly periodic graphs.

    The search covers unimodular changes of the cell basis with entries up to
    ``max_entry`` and, when the per-cell vertex counts differ, small k x k
    blow-ups that equalise them.  A positive answer is verified exactly; a
    negative answer only means the bounded search failed.
    """
    pairs = []
    if g1.n == g2.n:
        pairs.append((g1, g2))
    for k1 in range(1, 5):
        for k2 in range(1, 5):
            if (k1, k2) != (1, 1) and g1.n * k1 * k1 == g2.n * k2 * k2:
                pairs.append((g1.blow_up(k1), g2.blow_up(k2)))
    if not pairs:
        return False
    for h1, h2 in pairs:
        if len(h1.edges) != len(h2.edges):
            continue
        if sorted(h1.degree_counter().values()) != sorted(h2.degree_counter().values()):
            continue
        for A in _unimodular_candidates(max_entry):
            if _gauge_match(h1, h2, A):
                return True
    return False


@dataclass(frozen=True)
class LatticeRep:
    """One periodic grid drawing; immutable, safe to share between threads."""

    name: str
    mode_hint: str
    period: int
    ratio: int
    parity: str
    symmetric: bool
    vertices: tuple[Coord, ...]
    edges: tuple[tuple[int, int, int, int], ...]
    faces: Optional[tuple[tuple[tuple[int, Coord], ...], ...]] = None

    # -- geometry helpers -------------------------------------------------

    @property
    def cols_per_cell(self) -> int:
        return self.period // self.ratio

    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def uncompact(self, cx: int, y: int) -> Coord:
        if self.ratio == 1:
            return cx, y
        if self.parity == "even":
            return 2 * cx + (y & 1), y
        return 2 * cx + ((y + 1) & 1), y

    def compact(self, x: int, y: int) -> Coord:
        if self.ratio == 1:
            return x, y
        return x // 2, y

    def degree_of(self, i: int) -> int:
        d = 0
        for a, b, _, _ in self.edges:
            d += (a == i) + (b == i)
        return d

    def degrees(self) -> list[int]:
        return [self.degree_of(i) for i in range(len(self.vertices))]

    @property
    def strip_width(self) -> int:
        """Max horizontal extent of an edge, in compact columns (at least 1)."""
        w = 1
        cpc = self.cols_per_cell
        for i, j, tx, ty in self.edges:
            w = max(w, abs(self.vertices[j][0] + tx * cpc - self.vertices[i][0]))
        return w

    def periodic_graph(self) -> PeriodicGraph:
        return PeriodicGraph(len(self.vertices), tuple(sorted(_norm_edge(*e) for e in self.edges)))

    # -- uncompacted instance view ---------------------------------------

    def uncompacted_vertices(self) -> list[Coord]:
        return [self.uncompact(cx, y) for cx, y in self.vertices]

    def edge_instances_uncompacted(self) -> list[tuple[Coord, Coord]]:
        """Each edge class as a pair of absolute uncompacted endpoints."""
        out = []
        C = self.period
        pos = self.uncompacted_vertices()
        for i, j, tx, ty in self.edges:
            p = pos[i]
            q = (pos[j][0] + tx * C, pos[j][1] + ty * C)
            out.append((p, q))
        return out


# ---------------------------------------------------------------------------
# parsing / serialisation
# ---------------------------------------------------------------------------

_MODES = ("site", "bond", "both")
_PARITIES = ("any", "even", "odd")


def parse_lattice(text: str, source: str = "<string>") -> LatticeRep:
    """Parse and fully validate one lattice file."""
    header: dict[str, str] = {}
    vertices: list[Coord] = []
    edges_raw: list[tuple[Coord, Coord, int, int, int]] = []
    faces_raw: list[tuple[list[tuple[Coord, Coord]], int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        if key in ("name", "mode", "period", "ratio", "parity", "symmetric"):
            if len(args) != 1:
                raise LatticeParseError(line_no, f"{key} takes exactly one value")
            if key in header:
                raise LatticeParseError(line_no, f"duplicate {key}")
            header[key] = args[0]
        elif key == "vertex":
            if len(args) != 2:
                raise LatticeParseError(line_no, "vertex takes <x> <y>")
            try:
                vertices.append((int(args[0]), int(args[1])))
            except ValueError:
                raise LatticeParseError(line_no, "vertex coordinates must be integers")
        elif key == "edge":
            if len(args) != 6:
                raise LatticeParseError(line_no, "edge takes <x1> <y1> <x2> <y2> <tx> <ty>")
            try:
                x1, y1, x2, y2, tx, ty = map(int, args)
            except ValueError:
                raise LatticeParseError(line_no, "edge fields must be integers")
            edges_raw.append(((x1, y1), (x2, y2), tx, ty, line_no))
        elif key == "face":
            if not args:
                raise LatticeParseError(line_no, "face needs a length")
            try:
                k = int(args[0])
                rest = list(map(int, args[1:]))
            except ValueError:
                raise LatticeParseError(line_no, "face fields must be integers")
            if k < 3 or len(rest) != 4 * k:
                raise LatticeParseError(line_no, f"face {k} needs {4 * int(args[0])} more integers")
            cyc = []
            for m in range(k):
                x, y, tx, ty = rest[4 * m : 4 * m + 4]
                cyc.append(((x, y), (tx, ty)))
            faces_raw.append((cyc, line_no))
        else:
            raise LatticeParseError(line_no, f"unknown directive {key!r}")

    for req in ("name", "mode", "period", "ratio", "parity", "symmetric"):
        if req not in header:
            raise LatticeError(f"{source}: missing header field {req!r}")
    name = header["name"]
    mode = header["mode"]
    if mode not in _MODES:
        raise LatticeError(f"{source}: mode must be one of {_MODES}")
    try:
        period = int(header["period"])
        ratio = int(header["ratio"])
    except ValueError:
        raise LatticeError(f"{source}: period/ratio must be integers")
    parity = header["parity"]
    if header["symmetric"] not in ("true", "false"):
        raise LatticeError(f"{source}: symmetric must be true or false")
    symmetric = header["symmetric"] == "true"

    if period < 1:
        raise LatticeError(f"{source}: period must be positive")
    if ratio not in (1, 2):
        raise LatticeError(f"{source}: ratio must be 1 or 2")
    if parity not in _PARITIES:
        raise LatticeError(f"{source}: parity must be one of {_PARITIES}")
    if ratio == 2 and parity == "any":
        raise LatticeError(f"{source}: ratio 2 requires a definite parity")
    if ratio == 2 and period % 2:
        raise LatticeError(f"{source}: ratio 2 requires an even period")
    if not vertices:
        raise LatticeError(f"{source}: no vertices declared")

    cols = period // ratio
    seen = set()
    for cx, y in vertices:
        if not (0 <= cx < cols and 0 <= y < period):
            raise LatticeError(
                f"{source}: vertex ({cx},{y}) outside the fundamental domain "
                f"[0,{cols})x[0,{period})"
            )
        if (cx, y) in seen:
            raise LatticeError(f"{source}: duplicate vertex ({cx},{y})")
        seen.add((cx, y))

    lat0 = LatticeRep(name, mode, period, ratio, parity, symmetric, tuple(vertices), ())
    if parity in ("even", "odd"):
        want = 0 if parity == "even" else 1
        for cx, y in vertices:
            x, _ = lat0.uncompact(cx, y)
            if (x + y) % 2 != want:
                raise LatticeError(f"{source}: vertex ({cx},{y}) violates parity {parity}")

    vindex = {v: i for i, v in enumerate(vertices)}
    edges: list[tuple[int, int, int, int]] = []
    edge_set = set()
    for p1, p2, tx, ty, line_no in edges_raw:
        if p1 not in vindex:
            raise LatticeParseError(line_no, f"edge references undeclared vertex {p1}")
        if p2 not in vindex:
            raise LatticeParseError(line_no, f"edge references undeclared vertex {p2}")
        if not (-1 <= tx <= 1 and -1 <= ty <= 1):
            raise LatticeParseError(line_no, "edge cell offset components must be in {-1,0,1}")
        i, j = vindex[p1], vindex[p2]
        if i == j and tx == 0 and ty == 0:
            raise LatticeParseError(line_no, "self-loop")
        ne = _norm_edge(i, j, tx, ty)
        if ne in edge_set:
            raise LatticeParseError(line_no, "duplicate edge under periodic identification")
        edge_set.add(ne)
        edges.append(ne)
    edges.sort()

    faces = None
    if faces_raw:
        face_list = []
        cover = Counter()
        for cyc, line_no in faces_raw:
            inst = []
            for (pv, (tx, ty)) in cyc:
                if pv not in vindex:
                    raise LatticeParseError(line_no, f"face references undeclared vertex {pv}")
                inst.append((vindex[pv], (tx, ty)))
            if len(set(inst)) != len(inst):
                raise LatticeParseError(line_no, "face visits a vertex instance twice")
            k = len(inst)
            for m in range(k):
                (i, (ax, ay)) = inst[m]
                (j, (bx, by)) = inst[(m + 1) % k]
                ne = _norm_edge(i, j, bx - ax, by - ay)
                if ne not in edge_set:
                    raise LatticeParseError(
                        line_no, f"face walk step {m} is not an edge of the lattice"
                    )
                cover[ne] += 1
            face_list.append(_canonical_face(inst))
        for ne in edge_set:
            if cover[ne] != 2:
                raise LatticeError(
                    f"{source}: edge {ne} lies on {cover[ne]} faces, expected exactly 2"
                )
        faces = tuple(face_list)

    lat = LatticeRep(
        name, mode, period, ratio, parity, symmetric,
        tuple(vertices), tuple(edges), faces,
    )
    if symmetric and diagonal_symmetry_offset(lat) is None:
        raise LatticeError(f"{source}: symmetric=true but no diagonal reflection symmetry found")
    return lat


def _canonical_face(inst: list[tuple[int, Coord]]):
    """Rotation / direction / base-cell invariant form of a face cycle."""
    best = None
    k = len(inst)
    for seq in (inst, [inst[0]] + inst[1:][::-1]):
        for r in range(k):
            rot = seq[r:] + seq[:r]
            bx, by = rot[0][1]
            shifted = tuple((i, (tx - bx, ty - by)) for i, (tx, ty) in rot)
            if best is None or shifted < best:
                best = shifted
    return best


def serialize_lattice(lat: LatticeRep) -> str:
    lines = [
        f"name {lat.name}",
        f"mode {lat.mode_hint}",
        f"period {lat.period}",
        f"ratio {lat.ratio}",
        f"parity {lat.parity}",
        f"symmetric {'true' if lat.symmetric else 'false'}",
    ]
    for cx, y in lat.vertices:
        lines.append(f"vertex {cx} {y}")
    for i, j, tx, ty in sorted(_norm_edge(*e) for e in lat.edges):
        (x1, y1), (x2, y2) = lat.vertices[i], lat.vertices[j]
        lines.append(f"edge {x1} {y1} {x2} {y2} {tx} {ty}")
    if lat.faces:
        for face in sorted(lat.faces):
            parts = [f"face {len(face)}"]
            for i, (tx, ty) in face:
                x, y = lat.vertices[i]
                parts.append(f"{x} {y} {tx} {ty}")
            lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# diagonal reflection
# ---------------------------------------------------------------------------


def reflect_diagonal(lat: LatticeRep, name: Optional[str] = None) -> LatticeRep:
    """The drawing reflected in the line x = y (compaction undone and redone)."""
    C = lat.period
    pos = lat.uncompacted_vertices()
    swapped = [(y, x) for x, y in pos]
    new_fd = sorted({(x % C, y % C) for x, y in swapped})
    tmp = LatticeRep(
        "tmp", lat.mode_hint, C, lat.ratio, lat.parity, lat.symmetric,
        tuple(lat.compact(x, y) for x, y in new_fd), (),
    )
    vindex = {v: i for i, v in enumerate(tmp.vertices)}

    def reduce(px: int, py: int):
        rx, ry = px % C, py % C
        return vindex[lat.compact(rx, ry)], (px - rx) // C, (py - ry) // C

    edges = set()
    for i, j, tx, ty in lat.edges:
        p = swapped[i]
        qx = swapped[j][0] + ty * C
        qy = swapped[j][1] + tx * C
        vi, c1x, c1y = reduce(*p)
        vj, c2x, c2y = reduce(qx, qy)
        edges.add(_norm_edge(vi, vj, c2x - c1x, c2y - c1y))

    faces = None
    if lat.faces is not None:
        faces = []
        for face in lat.faces:
            inst = []
            for i, (tx, ty) in face:
                px = swapped[i][0] + ty * C
                py = swapped[i][1] + tx * C
                vi, cx, cy = reduce(px, py)
                inst.append((vi, (cx, cy)))
            faces.append(_canonical_face(inst))
        faces = tuple(faces)

    return LatticeRep(
        name or lat.name + "-reflected", lat.mode_hint, C, lat.ratio, lat.parity,
        lat.symmetric, tmp.vertices, tuple(sorted(edges)), faces,
    )


def _uncompacted_edge_set(lat: LatticeRep) -> frozenset:
    C = lat.period
    out = set()
    pos = lat.uncompacted_vertices()
    for i, j, tx, ty in lat.edges:
        p = pos[i]
        q = (pos[j][0] + tx * C, pos[j][1] + ty * C)
        d = (q[0] - p[0], q[1] - p[1])
        base = (p[0] % C, p[1] % C)
        a = (base, d)
        b = (((p[0] + d[0]) % C, (p[1] + d[1]) % C), (-d[0], -d[1]))
        out.add(min(a, b))
    return frozenset(out)


def diagonal_symmetry_offset(lat: LatticeRep):
    """Offset (dx, dy, kind) making a 45-degree reflection an automorphism, or None.

    kind 'main' is (x,y) -> (y+dx, x+dy); kind 'anti' is (x,y) -> (-y+dx, -x+dy).
    """
    C = lat.period
    base = _uncompacted_edge_set(lat)
    pos = lat.uncompacted_vertices()
    for kind in ("main", "anti"):
        for dx in range(C):
            for dy in range(C):
                ok = True
                mapped = set()
                for (bx, by), (ddx, ddy) in base:
                    if kind == "main":
                        p = ((by + dx) % C, (bx + dy) % C)
                        d = (ddy, ddx)
                    else:
                        p = ((-by + dx) % C, (-bx + dy) % C)
                        d = (-ddy, -ddx)
                    q = ((p[0] + d[0]) % C, (p[1] + d[1]) % C)
                    a = (p, d)
                    b = (q, (-d[0], -d[1]))
                    mapped.add(min(a, b))
                if mapped == base:
                    # vertex set must map onto itself as well
                    vset = {(x % C, y % C) for x, y in pos}
                    for x, y in pos:
                        if kind == "main":
                            im = ((y + dx) % C, (x + dy) % C)
                        else:
                            im = ((-y + dx) % C, (-x + dy) % C)
                        if im not in vset:
                            ok = False
                            break
                    if ok:
                        return (dx, dy, kind)
    return None


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------


def bond_dual(lat: LatticeRep) -> PeriodicGraph:
    """Planar dual as an abstract periodic graph: a vertex per face, an edge per edge.

    Raises LatticeError when faces are missing (they are required data) or when
    some edge is not bounded by exactly two face instances.
    """
    if not lat.faces:
        raise LatticeError(f"{lat.name}: bond dual requires authored faces")
    coverage: dict[tuple, list[tuple[int, Coord]]] = defaultdict(list)
    for fi, face in enumerate(lat.faces):
        k = len(face)
        for m in range(k):
            i, (ax, ay) = face[m]
            j, (bx, by) = face[(m + 1) % k]
            ne = _norm_edge(i, j, bx - ax, by - ay)
            # base cell of this edge instance relative to the face's base cell:
            # the canonical orientation starts at ne[0]; find its cell.
            if (i, j, bx - ax, by - ay) == ne:
                cell = (ax, ay)
            else:
                cell = (bx, by)
            coverage[ne].append((fi, cell))
    edges = []
    for ne, faces in coverage.items():
        if len(faces) != 2:
            raise LatticeError(
                f"{lat.name}: edge {ne} bounded by {len(faces)} faces, expected 2"
            )
        (f1, (a1x, a1y)), (f2, (a2x, a2y)) = faces
        # face f covering the instance at cell a sits at dual cell -a
        edges.append(_norm_edge(f1, f2, a1x - a2x, a1y - a2y))
    return PeriodicGraph(len(lat.faces), tuple(sorted(edges)))


def site_dual(lat: LatticeRep, name: Optional[str] = None) -> LatticeRep:
    """The matching graph: the lattice plus all chords inside every face."""
    if not lat.faces:
        raise LatticeError(f"{lat.name}: site dual requires authored faces")
    edges = set(_norm_edge(*e) for e in lat.edges)
    for face in lat.faces:
        k = len(face)
        for m in range(k):
            for m2 in range(m + 2, k):
                if m == 0 and m2 == k - 1:
                    continue  # consecutive around the cycle
                i, (ax, ay) = face[m]
                j, (bx, by) = face[m2]
                ne = _norm_edge(i, j, bx - ax, by - ay)
                edges.add(ne)
    return LatticeRep(
        name or lat.name + "-site-dual", "site", lat.period, lat.ratio, lat.parity,
        lat.symmetric, lat.vertices, tuple(sorted(edges)), None,
    )


# ---------------------------------------------------------------------------
# rectangle induction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RectGeometry:
    """Scale and orientation of the rectangle R_e = S_u union S_v."""

    s: int
    orientation: str = "horizontal"

    def __post_init__(self):
        if self.orientation not in ("horizontal", "vertical"):
            raise ValueError("orientation must be horizontal or vertical")
        if self.s < 1:
            raise ValueError("scale must be positive")

    def validate_for(self, lat: LatticeRep) -> None:
        if self.s % lat.period:
            raise ValueError(
                f"scale {self.s} must be a multiple of the period {lat.period} "
                f"of lattice {lat.name}"
            )


@dataclass(frozen=True)
class RectGraph:
    """Finite induced subgraph on the sites of R_e, in compact storage.

    Sites are numbered column-major (compact column ascending, then row), which
    is also the order in which site states are drawn.  Edges appear in
    fundamental-domain scan order (the order bond states are drawn in, with
    interface bonds moved to the end of the stream).
    """

    lat: LatticeRep
    s: int
    orientation: str
    cols: int
    rows: int
    site_grid: np.ndarray      # int32 [cols, rows] site id or -1
    site_col: np.ndarray       # int32 [n_sites]
    site_row: np.ndarray       # int32 [n_sites]
    edge_a: np.ndarray         # int32 [n_edges] site id
    edge_b: np.ndarray         # int32 [n_edges]
    edge_interface: np.ndarray  # bool  [n_edges]

    @property
    def n_sites(self) -> int:
        return int(self.site_col.shape[0])

    @property
    def n_edges(self) -> int:
        return int(self.edge_a.shape[0])

    @property
    def n_interface(self) -> int:
        return int(self.edge_interface.sum())

    @property
    def half_cols(self) -> int:
        return self.cols // 2

    @property
    def strip_width(self) -> int:
        return self.lat.strip_width

    def site_half(self, sid: int) -> str:
        return "left" if self.site_col[sid] < self.half_cols else "right"


def induce_rectangle(lat: LatticeRep, geom: RectGeometry) -> RectGraph:
    """Cut the rectangle [0,2s) x [0,s) (uncompacted units) out of the lattice.

    A vertical-orientation rectangle is realised by running the same cut on the
    diagonally reflected drawing.
    """
    geom.validate_for(lat)
    if geom.orientation == "vertical":
        base = induce_rectangle(reflect_diagonal(lat), RectGeometry(geom.s))
        return RectGraph(
            lat, geom.s, "vertical", base.cols, base.rows, base.site_grid,
            base.site_col, base.site_row, base.edge_a, base.edge_b, base.edge_interface,
        )

    s = geom.s
    C = lat.period
    r = lat.ratio
    cols = 2 * s // r
    rows = s
    cpc = lat.cols_per_cell

    vindex = lat.vertex_index()
    site_grid = np.full((cols, rows), -1, dtype=np.int32)
    sid = 0
    site_cols = []
    site_rows = []
    for cx in range(cols):
        vx = cx % cpc
        for y in range(rows):
            if (vx, y % C) in vindex:
                site_grid[cx, y] = sid
                site_cols.append(cx)
                site_rows.append(y)
                sid += 1

    pos_unc = lat.uncompacted_vertices()

    ea, eb, eint = [], [], []
    for a in range(2 * s // C):
        for b in range(s // C):
            for (i, j, tx, ty) in lat.edges:
                x1 = pos_unc[i][0] + a * C
                y1 = pos_unc[i][1] + b * C
                x2 = pos_unc[j][0] + (a + tx) * C
                y2 = pos_unc[j][1] + (b + ty) * C
                if not (0 <= x1 < 2 * s and 0 <= y1 < s and 0 <= x2 < 2 * s and 0 <= y2 < s):
                    continue
                c1 = lat.compact(x1, y1)
                c2 = lat.compact(x2, y2)
                s1 = site_grid[c1[0], c1[1]]
                s2 = site_grid[c2[0], c2[1]]
                ea.append(s1)
                eb.append(s2)
                eint.append((x1 < s) != (x2 < s))

    return RectGraph(
        lat, s, "horizontal", cols, rows, site_grid,
        np.asarray(site_cols, dtype=np.int32), np.asarray(site_rows, dtype=np.int32),
        np.asarray(ea, dtype=np.int32), np.asarray(eb, dtype=np.int32),
        np.asarray(eint, dtype=bool),
    )


# ---------------------------------------------------------------------------
# shipped data registry
# ---------------------------------------------------------------------------

PRIMAL_NAMES = (
    "square",
    "triangular",
    "hexagonal",
    "kagome",
    "3.12.12",
    "3.4.6.4",
    "3.3.3.4.4",
    "3.3.4.3.4",
    "3.3.3.3.6-horizontal",
    "3.3.3.3.6-vertical",
    "4.6.12",
    "4.8.8",
)

BOND_DUAL_NAMES = tuple(
    f"{n}-bond-dual"
    for n in (
        "kagome",
        "3.3.3.3.6-horizontal",
        "3.3.3.3.6-vertical",
        "3.12.12",
        "3.3.3.4.4",
        "3.3.4.3.4",
        "4.8.8",
        "3.4.6.4",
        "4.6.12",
    )
)

SITE_DUAL_NAMES = tuple(
    f"{n}-site-dual"
    for n in (
        "square",
        "hexagonal",
        "3.4.6.4",
        "3.3.3.4.4",
        "3.3.4.3.4",
        "3.3.3.3.6-horizontal",
        "3.3.3.3.6-vertical",
        "4.6.12",
        "4.8.8",
    )
)

# expected uniform degrees of the primal Archimedean representations
PRIMAL_DEGREES = {
    "square": 4,
    "triangular": 6,
    "hexagonal": 3,
    "kagome": 4,
    "3.12.12": 3,
    "3.4.6.4": 4,
    "3.3.3.4.4": 5,
    "3.3.4.3.4": 5,
    "3.3.3.3.6-horizontal": 5,
    "3.3.3.3.6-vertical": 5,
    "4.6.12": 3,
    "4.8.8": 3,
}

# primal partner for every shipped dual file
DUAL_OF = {f"{n}-bond-dual": n.replace("-bond-dual", "") for n in ()}  # filled below
DUAL_OF = {name: name.replace("-bond-dual", "") for name in BOND_DUAL_NAMES}
DUAL_OF.update({name: name.replace("-site-dual", "") for name in SITE_DUAL_NAMES})


def shipped_names() -> tuple[str, ...]:
    return PRIMAL_NAMES + BOND_DUAL_NAMES + SITE_DUAL_NAMES


def _data_root():
    return resources.files("perccert").joinpath("data")


def load_lattice(source: str) -> LatticeRep:
    """Load a lattice by shipped name, or from a path to a lattice file."""
    import os

    if source in shipped_names():
        text = _data_root().joinpath(source + ".lat").read_text()
        return parse_lattice(text, source=source)
    if os.path.exists(source):
        with open(source) as f:
            return parse_lattice(f.read(), source=source)
    raise LatticeError(f"unknown lattice {source!r} (not shipped, not a file)")
