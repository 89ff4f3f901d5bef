"""Monotone graph surgeries and the pendant-removal procedure.

Two average-eccentricity-monotone operations are provided: ``pi_transform``
moves one vertex from a shorter pendant path onto a longer one sharing the
same anchor and strictly increases the average eccentricity;
``sigma_transform`` contracts a bridge and reattaches the absorbed endpoint
as a pendant, strictly decreasing it.  ``removable_pendant`` finds a leaf of
a non-path tree whose removal changes no other vertex's eccentricity.
``majorizes`` supplies the partition order under which starlike-tree average
eccentricity is monotone.
"""

from dataclasses import dataclass

from .graph import bfs_distances, bridges, distance_stats, from_edges


class TransformPreconditionError(ValueError):
    """A surgery was requested on a graph that does not admit it."""


@dataclass(frozen=True)
class PendantPath:
    """A maximal pendant path: ``vertices`` runs from the anchor's neighbor
    to the leaf; interior vertices have degree 2 and the last has degree 1."""

    anchor: int
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 1:
            raise ValueError("pendant path must contain at least one vertex")

    @property
    def length(self):
        return len(self.vertices)

    @property
    def leaf(self):
        return self.vertices[-1]


def _is_pendant_path_of(g, path):
    """True when ``path`` describes an actual pendant path of ``g``."""
    verts = path.vertices
    if path.anchor in verts or len(set(verts)) != len(verts):
        return False
    if not g.has_edge(path.anchor, verts[0]):
        return False
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            return False
    if any(g.degree(v) != 2 for v in verts[:-1]):
        return False
    return g.degree(verts[-1]) == 1


def pendant_paths_at(g, w):
    """All maximal pendant paths anchored at ``w``, longest first."""
    paths = []
    for start in g.neighbors(w):
        if g.degree(start) > 2:
            continue
        walk = [start]
        prev, cur = w, start
        while g.degree(cur) == 2:
            nxt = next(x for x in g.neighbors(cur) if x != prev)
            if nxt == w:  # walked around a cycle back to the anchor
                walk = None
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        if walk is not None and g.degree(walk[-1]) == 1:
            paths.append(PendantPath(w, tuple(walk)))
    paths.sort(key=lambda p: (-p.length, p.vertices))
    return paths


def pi_transform(g, w, longer, shorter):
    """Move the shorter pendant path's leaf onto the end of the longer one.

    Both paths must be pendant paths anchored at ``w``, disjoint, with
    ``longer.length >= shorter.length >= 1``, and ``w`` must keep at least
    one neighbor outside the two paths (otherwise the whole graph is a
    single path through ``w`` and the move is a relabeling, not a change).
    The result has the same vertex set; only two edges differ.
    """
    for name, path in (("longer", longer), ("shorter", shorter)):
        if path.anchor != w:
            raise TransformPreconditionError(f"{name} path is not anchored at {w}")
        if not _is_pendant_path_of(g, path):
            raise TransformPreconditionError(f"{name} path is not a pendant path of the graph")
    if set(longer.vertices) & set(shorter.vertices):
        raise TransformPreconditionError("pendant paths are not disjoint")
    if longer.length < shorter.length:
        raise TransformPreconditionError(
            f"longer path has length {longer.length} < shorter {shorter.length}"
        )
    used = set(longer.vertices) | set(shorter.vertices)
    if all(x in used for x in g.neighbors(w)):
        raise TransformPreconditionError(
            "trivial residual: anchor has no neighbor outside the two paths"
        )
    moved = shorter.leaf
    detach_from = shorter.vertices[-2] if shorter.length >= 2 else w
    a, b = min(detach_from, moved), max(detach_from, moved)
    edges = [e for e in g.edges() if e != (a, b)]
    edges.append((longer.leaf, moved))
    return from_edges(g.n, edges)


def sigma_transform(g, bridge):
    """Contract a bridge and reattach the absorbed endpoint as a pendant.

    ``bridge = (u, v)`` must be a bridge with at least two vertices on each
    side.  Vertex ``u`` absorbs all of ``v``'s neighbors; ``v`` keeps its
    index but is reduced to a fresh pendant attached to ``u``.
    """
    u, v = bridge
    key = (min(u, v), max(u, v))
    if key not in set(bridges(g)):
        raise TransformPreconditionError(f"edge {bridge} is not a bridge")
    # size of v's side of the cut
    seen = {u, v}
    stack = [v]
    side = 0
    while stack:
        x = stack.pop()
        side += 1
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if side < 2 or g.n - side < 2:
        raise TransformPreconditionError(
            "trivial component: both sides of the bridge need >= 2 vertices"
        )
    edges = [(u, v)]
    for a, b in g.edges():
        if (a, b) == key:
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        edges.append((a2, b2))
    return from_edges(g.n, edges)


@dataclass(frozen=True)
class IntegerPartitionPair:
    """Two nonincreasing positive partitions of the same total and length."""

    x: tuple
    y: tuple

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        y = tuple(int(v) for v in self.y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        for name, arr in (("x", x), ("y", y)):
            if not arr or any(v <= 0 for v in arr):
                raise ValueError(f"{name} must be a nonempty positive-integer array")
            if any(a < b for a, b in zip(arr, arr[1:])):
                raise ValueError(f"{name} must be nonincreasing: {arr}")
        if len(x) != len(y):
            raise ValueError(f"arrays differ in length: {len(x)} vs {len(y)}")
        if sum(x) != sum(y):
            raise ValueError(f"arrays differ in total: {sum(x)} vs {sum(y)}")


def majorizes(pair):
    """True when every prefix sum of ``pair.x`` dominates that of ``pair.y``."""
    acc_x = acc_y = 0
    for a, b in zip(pair.x, pair.y):
        acc_x += a
        acc_y += b
        if acc_x < acc_y:
            return False
    return True


def _is_tree(g):
    return g.connected and g.m == g.n - 1


def removable_pendant(t):
    """A leaf of a non-path tree whose removal preserves every other
    eccentricity.

    Build the digraph on leaves with an edge p -> q when q is the *unique*
    vertex farthest from p; a leaf of indegree zero qualifies.  Smallest
    index wins for determinism.  If every leaf has positive indegree the
    result is found by directly re-profiling each candidate removal.
    """
    if not _is_tree(t):
        raise ValueError("input is not a tree")
    if all(t.degree(v) <= 2 for v in range(t.n)):
        raise ValueError("path excluded: every leaf removal changes eccentricities")
    pendants = [v for v in range(t.n) if t.degree(v) == 1]
    indegree = {p: 0 for p in pendants}
    rows = {p: bfs_distances(t, p) for p in pendants}
    for p in pendants:
        dist = rows[p]
        far = max(dist)
        witnesses = [v for v, d in enumerate(dist) if d == far]
        if len(witnesses) == 1 and witnesses[0] in indegree:
            indegree[witnesses[0]] += 1
    roots = [p for p in pendants if indegree[p] == 0]
    if roots:
        return min(roots)
    ecc, _ = distance_stats(t)
    for p in pendants:
        if _removal_preserves(t, p, ecc):
            return p
    raise RuntimeError("no removable pendant found; input was not a valid tree")


def _removal_preserves(t, p, ecc):
    keep = [v for v in range(t.n) if v != p]
    index = {v: i for i, v in enumerate(keep)}
    sub = from_edges(
        t.n - 1,
        [(index[a], index[b]) for a, b in t.edges() if a != p and b != p],
    )
    sub_ecc, _ = distance_stats(sub)
    return all(sub_ecc[index[v]] == ecc[v] for v in keep)
