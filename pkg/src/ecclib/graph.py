"""Immutable simple undirected graphs with exact eccentricity machinery.

The :class:`Graph` carrier stores a sorted adjacency structure over vertices
``0..n-1``.  Distance work (BFS, eccentricities, distance row sums) is
delegated to the :mod:`ecclib.kernels` backends; averages are exact
:class:`fractions.Fraction` values throughout, floats never enter the
eccentricity arithmetic.

Also here: the graph6 codec (bit-exact, column-major upper triangle), a plain
edge-list text format, and the structural predicates (connectivity, tree,
unicyclic, bridges, pendant vertices).
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels


class DisconnectedGraphError(ValueError):
    """Raised when a distance-based operation receives a disconnected graph."""


class Graph6DecodeError(ValueError):
    """Raised on malformed graph6 input."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Instances are normalised (no loops, no parallel edges, sorted neighbor
    lists) and record at construction time whether the graph is connected.
    Create them with :func:`from_edges` or the codecs; do not mutate.
    """

    __slots__ = (
        "n",
        "m",
        "connected",
        "had_duplicate_edges",
        "_adj",
        "_hash",
        "_csr",
        "_stats",
        "_profile",
    )

    def __init__(self, n, adjacency, m, connected, had_duplicate_edges=False):
        self.n = n
        self._adj = adjacency
        self.m = m
        self.connected = connected
        self.had_duplicate_edges = had_duplicate_edges
        self._hash = None
        self._csr = None
        self._stats = None
        self._profile = None

    @property
    def adjacency(self):
        """Tuple of sorted neighbor tuples, indexed by vertex."""
        return self._adj

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def degrees(self):
        return tuple(len(nb) for nb in self._adj)

    def edges(self):
        """Sorted list of edges as (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def has_edge(self, u, v):
        nb = self._adj[u]
        lo, hi = 0, len(nb)
        while lo < hi:
            mid = (lo + hi) // 2
            if nb[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nb) and nb[lo] == v

    def csr(self):
        """CSR arrays ``(indptr, indices)`` shared with the kernels."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self._adj[v])
            indices = np.fromiter(
                (u for nb in self._adj for u in nb), dtype=np.int64, count=2 * self.m
            )
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, connected={self.connected})"


@dataclass(frozen=True)
class EccentricityProfile:
    """Per-vertex eccentricities with the derived summary values.

    ``average * n`` equals ``sum(ecc_per_vertex)`` exactly; ``center`` holds
    the vertices attaining the radius, sorted ascending.
    """

    ecc_per_vertex: tuple
    radius: int
    diameter: int
    center: tuple
    average: Fraction


def from_edges(n, edges):
    """Build a normalized :class:`Graph` on ``n`` vertices from index pairs.

    Duplicate edges (in either orientation) are collapsed and flagged via
    ``had_duplicate_edges``.  Raises ``ValueError`` for out-of-range indices
    or self-loops.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    seen = set()
    duplicates = False
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates = True
        else:
            seen.add(key)
    neighbor_lists = [[] for _ in range(n)]
    for u, v in seen:
        neighbor_lists[u].append(v)
        neighbor_lists[v].append(u)
    adjacency = tuple(tuple(sorted(nb)) for nb in neighbor_lists)
    connected = _is_connected_adj(n, adjacency)
    return Graph(n, adjacency, len(seen), connected, duplicates)


def _is_connected_adj(n, adjacency):
    if n <= 1:
        return True
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if not seen[u]:
                seen[u] = 1
                count += 1
                stack.append(u)
    return count == n


def relabel(g, perm):
    """Image of ``g`` under the vertex bijection ``perm`` (old -> new)."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a bijection on the vertex set")
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def bfs_distances(g, source):
    """Distances from ``source``; unreachable vertices get the sentinel -1."""
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range for n={g.n}")
    indptr, indices = g.csr()
    return [int(d) for d in kernels.sssp(indptr, indices, source)]


def distance_stats(g):
    """Cached per-vertex (eccentricity, distance row sum) arrays.

    Requires a connected graph; this is the single all-pairs BFS pass that
    the profile, Wiener index and eccentric connectivity index all share.
    """
    if g._stats is None:
        indptr, indices = g.csr()
        ecc, rowsum, all_reached = kernels.all_pairs_stats(indptr, indices)
        if not all_reached:
            raise DisconnectedGraphError(
                "distance statistics require a connected graph"
            )
        g._stats = (tuple(int(e) for e in ecc), tuple(int(s) for s in rowsum))
    return g._stats


def eccentricity_profile(g):
    """Exact eccentricity profile of a connected graph."""
    if g._profile is None:
        if not g.connected:
            raise DisconnectedGraphError("eccentricity profile of a disconnected graph")
        ecc, _ = distance_stats(g)
        radius = min(ecc)
        diameter = max(ecc)
        center = tuple(v for v in range(g.n) if ecc[v] == radius)
        average = Fraction(sum(ecc), g.n)
        g._profile = EccentricityProfile(ecc, radius, diameter, center, average)
    return g._profile


def average_eccentricity(g):
    """Shorthand for ``eccentricity_profile(g).average``."""
    return eccentricity_profile(g).average


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


def is_connected(g):
    return g.connected


def is_tree(g):
    return g.connected and g.m == g.n - 1


def is_unicyclic(g):
    return g.connected and g.m == g.n


def pendant_vertices(g):
    """Vertices of degree one, ascending."""
    return [v for v in range(g.n) if len(g._adj[v]) == 1]


def bridges(g):
    """All bridge edges as sorted (u, v) pairs, via iterative DFS low-links."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # stack entries: (vertex, parent-edge partner, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack.pop()
            if i == 0:
                disc[v] = low[v] = timer
                timer += 1
            nb = g._adj[v]
            advanced = False
            while i < len(nb):
                u = nb[i]
                i += 1
                if disc[u] == -1:
                    stack.append((v, parent, i))
                    stack.append((u, v, 0))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if not advanced and stack:
                # v is finished; propagate to its DFS parent on the stack
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] > disc[pv]:
                    out.append((min(pv, v), max(pv, v)))
    return sorted(out)


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

_G6_MAX_N = 68719476735  # 2**36 - 1


def _g6_header(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)])


def encode_graph6(g):
    """graph6 text for ``g`` (column-major upper-triangle bit order)."""
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"graph6 cannot encode n={n}")
    out = bytearray(_g6_header(n))
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(0, v):
            acc = (acc << 1) | (1 if g.has_edge(u, v) else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(text):
    """Decode one graph6 line; strict about length, byte range and padding."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6DecodeError(f"non-ASCII byte in graph6 input: {exc}") from None
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6DecodeError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6DecodeError("non-ASCII character in graph6 input") from None
    for b in data:
        if not (63 <= b <= 126):
            raise Graph6DecodeError(f"byte {b} outside printable graph6 range 63..126")
    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6DecodeError("truncated 3-byte vertex-count header")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
        if n < 63:
            raise Graph6DecodeError("non-minimal vertex-count header")
    else:
        if len(data) < 8:
            raise Graph6DecodeError("truncated 6-byte vertex-count header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
        if n < 258048:
            raise Graph6DecodeError("non-minimal vertex-count header")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6DecodeError(
            f"expected {need} payload bytes for n={n}, got {len(body)}"
        )
    edges = []
    bit = 0
    for v in range(1, n):
        for u in range(0, v):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((u, v))
            bit += 1
    if need:
        tail = body[-1] - 63
        pad = need * 6 - nbits
        if pad and (tail & ((1 << pad) - 1)):
            raise Graph6DecodeError("nonzero padding bits")
    if n == 0:
        raise Graph6DecodeError("graph6 with zero vertices is not supported")
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# plain edge-list text format: first line "n m", then m lines "u v"
# ---------------------------------------------------------------------------


def parse_edge_list(text):
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def format_edge_list(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
