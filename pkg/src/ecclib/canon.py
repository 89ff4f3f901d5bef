"""Canonical certificates for isomorphism rejection.

The certificate of a graph is the graph6 encoding (as bytes) of a canonically
relabeled copy: the labeling whose column-major upper-triangle adjacency
bit-string is lexicographically minimal over an individualization-refinement
search tree.  Equal certificates <=> isomorphic graphs, and every certificate
decodes back to a member of the class it names.

The search keeps the standard two prunings: iterated neighborhood-count
refinement (1-WL) to shrink cells, and orbit pruning by the automorphisms
discovered at tying leaves.  Practical through n around 12-14, which covers
every enumeration and membership check in this library.
"""

from .graph import encode_graph6, from_edges


def _refine(cells, adj):
    """Stable fixpoint of neighborhood-count splitting on an ordered partition."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets = {}
            for v in cell:
                av = adj[v]
                sig = tuple((av & mk).bit_count() for mk in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) > 1:
                changed = True
            for sig in sorted(buckets):
                new_cells.append(buckets[sig])
        cells = new_cells
        if not changed:
            return cells


def _columns(leaf, adj):
    """Upper-triangle columns of the relabeled adjacency, one int per column.

    Within column j the bit for row i sits at weight 2**(j-1-i), so tuple
    comparison is exactly lexicographic comparison of the graph6 bit-string.
    """
    n = len(leaf)
    cols = []
    for j in range(1, n):
        aj = adj[leaf[j]]
        c = 0
        for i in range(j):
            c = (c << 1) | ((aj >> leaf[i]) & 1)
        cols.append(c)
    return tuple(cols)


def _orbit_hits(u, tried, base, autos):
    """True if some product of base-fixing automorphisms maps u into tried."""
    gens = [phi for phi in autos if all(phi[b] == b for b in base)]
    if not gens:
        return False
    tried_set = set(tried)
    orbit = {u}
    frontier = [u]
    while frontier:
        v = frontier.pop()
        for phi in gens:
            w = phi[v]
            if w in tried_set:
                return True
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return False


class _Search:
    __slots__ = ("adj", "n", "best", "best_leaf", "autos")

    def __init__(self, adj, n):
        self.adj = adj
        self.n = n
        self.best = None
        self.best_leaf = None
        self.autos = []

    def run(self, cells, base):
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            leaf = [cell[0] for cell in cells]
            cols = _columns(leaf, self.adj)
            if self.best is None or cols < self.best:
                self.best = cols
                self.best_leaf = leaf
            elif cols == self.best:
                phi = [0] * self.n
                for b, l in zip(self.best_leaf, leaf):
                    phi[b] = l
                self.autos.append(tuple(phi))
            return
        cell = cells[target]
        tried = []
        for u in cell:
            if tried and _orbit_hits(u, tried, base, self.autos):
                continue
            rest = [w for w in cell if w != u]
            child = cells[:target] + [[u], rest] + cells[target + 1 :]
            self.run(_refine(child, self.adj), base + [u])
            tried.append(u)


def canonical_certificate(g):
    """Byte-string certificate; equal iff the graphs are isomorphic."""
    n = g.n
    if n == 1 or g.m == 0 or g.m == n * (n - 1) // 2:
        # vertex-transitive trivia: any labeling is already minimal
        return encode_graph6(g).encode("ascii")
    adj = [0] * n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    search = _Search(adj, n)
    search.run(_refine([list(range(n))], adj), [])
    leaf = search.best_leaf
    edges = []
    for j in range(1, n):
        aj = adj[leaf[j]]
        for i in range(j):
            if (aj >> leaf[i]) & 1:
                edges.append((i, j))
    return encode_graph6(from_edges(n, edges)).encode("ascii")
