"""Isomorph-free exhaustive generation of small graph classes.

Four classes are generated, one representative per isomorphism class, in a
deterministic order:

* free trees via the level-sequence successor algorithm for rooted trees,
  filtered to free trees by centroid rooting;
* connected graphs via edge augmentation level-by-level from the spanning
  trees, deduplicated by canonical certificate;
* unicyclic graphs via a cycle of rooted trees, deduplicated by taking the
  lexicographically minimal necklace under the dihedral group;
* starlike trees via integer partitions of n-1 into k parts.

Feasibility caps live in the mutable module-level ``CAPS`` dict so callers
can raise them knowingly; the defaults keep the full verification suite at
desk scale.
"""

import io
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from pathlib import Path

from .canon import canonical_certificate
from .graph import Graph6DecodeError, decode_graph6, from_edges

CAPS = {
    "trees": 18,
    "connected_graphs": 9,
    "unicyclic": 11,
    "starlike": 20,
}

_CLASS_MINIMUM = {
    "trees": 1,
    "connected_graphs": 1,
    "unicyclic": 3,
    "starlike": 4,
}


@dataclass(frozen=True)
class EnumerationQuery:
    """A graph class together with an order range and optional degree filters."""

    klass: str
    n_min: int
    n_max: int
    max_degree: int = None
    chemical: bool = False

    def __post_init__(self):
        if self.klass not in CAPS:
            raise ValueError(
                f"unknown class {self.klass!r}; choose from {sorted(CAPS)}"
            )
        lo, hi = _CLASS_MINIMUM[self.klass], CAPS[self.klass]
        if not (lo <= self.n_min <= self.n_max):
            raise ValueError(
                f"need {lo} <= n_min <= n_max for class {self.klass}, "
                f"got {self.n_min}..{self.n_max}"
            )
        if self.n_max > hi:
            raise ValueError(
                f"n={self.n_max} exceeds the {self.klass} cap {hi}; raise "
                f"ecclib.enumeration.CAPS[{self.klass!r}] to go bigger"
            )
        if self.max_degree is not None and self.max_degree < 1:
            raise ValueError(f"max_degree must be >= 1, got {self.max_degree}")


def _check_cap(klass, n):
    cap = CAPS[klass]
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the {klass} cap {cap}; raise "
            f"ecclib.enumeration.CAPS[{klass!r}] to go bigger"
        )


# ---------------------------------------------------------------------------
# rooted and free trees (level-sequence successor generation)
# ---------------------------------------------------------------------------


def _rooted_level_sequences(n):
    """All canonical level sequences of rooted trees on n vertices.

    Starts from the path (1, 2, ..., n) and repeatedly applies the
    successor rule: find the last position p with level > 2, the last
    position q < p at level[p]-1, then repeat the q..p-1 block out to the
    end.  The star (1, 2, 2, ..., 2) terminates the run.
    """
    seq = list(range(1, n + 1))
    while True:
        yield tuple(seq)
        p = max((i for i in range(n) if seq[i] > 2), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def _parents(seq):
    """Parent position of every non-root position of a level sequence."""
    last_at = {1: 0}
    par = [0] * len(seq)
    for j in range(1, len(seq)):
        par[j] = last_at[seq[j] - 1]
        last_at[seq[j]] = j
    return par


def _tree_from_sequence(seq):
    par = _parents(seq)
    return from_edges(len(seq), [(par[j], j) for j in range(1, len(seq))])


def _centroids(n, par):
    if n == 1:
        return [0]
    size = [1] * n
    children = [[] for _ in range(n)]
    for j in range(n - 1, 0, -1):
        size[par[j]] += size[j]
        children[par[j]].append(j)
    best, cents = n + 1, []
    for v in range(n):
        heaviest = max((size[c] for c in children[v]), default=0)
        heaviest = max(heaviest, n - size[v])
        if heaviest < best:
            best, cents = heaviest, [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _ahu_key(adj, root, forbidden):
    """Canonical nested-tuple key of the subtree at root, not crossing forbidden."""
    kids = sorted(
        _ahu_key(adj, c, root) for c in adj[root] if c != forbidden
    )
    return tuple(kids)


def enumerate_trees(n):
    """One representative per isomorphism class of free trees on n vertices.

    Rooted trees are generated canonically; a rooted tree is kept when its
    root is the centroid (unique-centroid case) or the heavier half of the
    central edge (bicentroid case, ties kept), which selects each free tree
    exactly once.
    """
    _check_cap("trees", n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    for seq in _rooted_level_sequences(n):
        par = _parents(seq)
        cents = _centroids(n, par)
        if 0 not in cents:
            continue
        if len(cents) == 2:
            other = cents[0] if cents[1] == 0 else cents[1]
            adj = [[] for _ in range(n)]
            for j in range(1, n):
                adj[par[j]].append(j)
                adj[j].append(par[j])
            if _ahu_key(adj, 0, other) < _ahu_key(adj, other, 0):
                continue
        yield _tree_from_sequence(seq)


# ---------------------------------------------------------------------------
# connected graphs (edge augmentation with certificate dedup)
# ---------------------------------------------------------------------------


def _augment_level(n, certs):
    """Certificates of all one-edge extensions of the given certificates."""
    out = set()
    for cert in certs:
        g = decode_graph6(cert.decode("ascii"))
        edges = g.edges()
        for u in range(n):
            for v in range(u + 1, n):
                if not g.has_edge(u, v):
                    out.add(canonical_certificate(from_edges(n, edges + [(u, v)])))
    return sorted(out)


def enumerate_connected_graphs(n):
    """One representative per isomorphism class of connected graphs.

    Works level-by-level in the edge count: level n-1 is the set of trees;
    every connected graph with one more edge is reached by adding a single
    edge to some connected spanning subgraph, so augmenting each level and
    deduplicating by certificate covers every class exactly once.
    """
    _check_cap("connected_graphs", n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    certs = sorted(canonical_certificate(t) for t in enumerate_trees(n))
    top = n * (n - 1) // 2
    m = n - 1
    while True:
        for cert in certs:
            yield decode_graph6(cert.decode("ascii"))
        if m >= top or not certs:
            return
        certs = _augment_level(n, certs)
        m += 1


# ---------------------------------------------------------------------------
# unicyclic graphs (cycle of rooted trees, dihedral dedup)
# ---------------------------------------------------------------------------


def _dihedral_minimal(tup):
    c = len(tup)
    doubled = tup + tup
    rev = tup[::-1] + tup[::-1]
    for s in range(c):
        if doubled[s : s + c] < tup or rev[s : s + c] < tup:
            return False
    return True


@lru_cache(maxsize=None)
def _rooted_catalog(s):
    return tuple(_rooted_level_sequences(s))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def enumerate_unicyclic(n):
    """One representative per isomorphism class of unicyclic graphs.

    A unicyclic graph is its unique cycle plus a rooted tree hanging at
    each cycle vertex; isomorphism classes correspond to necklaces of
    rooted trees up to rotation and reflection, so only the
    lexicographically minimal necklace of canonical level sequences is
    built.
    """
    _check_cap("unicyclic", n)
    if n < 3:
        raise ValueError(f"need n >= 3 for a cycle, got {n}")
    for c in range(3, n + 1):
        for sizes in _compositions(n, c):
            for tup in product(*(_rooted_catalog(s) for s in sizes)):
                if not _dihedral_minimal(tup):
                    continue
                edges = [(i, (i + 1) % c) for i in range(c)]
                nxt = c
                for i, seq in enumerate(tup):
                    ids = [i] + list(range(nxt, nxt + len(seq) - 1))
                    par = _parents(seq)
                    edges += [(ids[par[j]], ids[j]) for j in range(1, len(seq))]
                    nxt += len(seq) - 1
                yield from_edges(n, edges)


# ---------------------------------------------------------------------------
# starlike trees (partitions of n-1 into k parts)
# ---------------------------------------------------------------------------


def _partitions(total, parts, cap):
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for head in range(min(total - parts + 1, cap), 0, -1):
        for rest in _partitions(total - head, parts - 1, head):
            yield (head,) + rest


def enumerate_starlike(n, k):
    """One starlike tree per partition of n-1 into exactly k positive parts."""
    _check_cap("starlike", n)
    if k < 3:
        raise ValueError(f"a starlike tree needs k >= 3 pendant paths, got k={k}")
    if n - 1 < k:
        raise ValueError(f"infeasible: cannot split n-1={n - 1} into {k} parts")
    from .families import make_starlike

    for parts in _partitions(n - 1, k, n - 1):
        yield make_starlike(*parts)


# ---------------------------------------------------------------------------
# graph6 ingestion and materialized class lists
# ---------------------------------------------------------------------------


def read_graph6_stream(source):
    """Decode a line-oriented graph6 source lazily.

    ``source`` may be a path, an open text file, or any iterable of lines;
    blank lines are skipped and malformed lines raise with their position.
    """
    opened = None
    if isinstance(source, (str, Path)):
        opened = open(source, "r", encoding="ascii")
        lines = opened
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        lines = source
    else:
        lines = iter(source)
    try:
        for lineno, raw in enumerate(lines, 1):
            text = raw.strip()
            if not text:
                continue
            try:
                yield decode_graph6(text)
            except Graph6DecodeError as exc:
                raise Graph6DecodeError(f"line {lineno}: {exc}") from exc
    finally:
        if opened is not None:
            opened.close()


@lru_cache(maxsize=None)
def trees_list(n):
    return tuple(enumerate_trees(n))


@lru_cache(maxsize=None)
def connected_list(n):
    return tuple(enumerate_connected_graphs(n))


@lru_cache(maxsize=None)
def unicyclic_list(n):
    return tuple(enumerate_unicyclic(n))


@lru_cache(maxsize=None)
def starlike_list(n):
    """All starlike trees of order n (every branching number k >= 3)."""
    _check_cap("starlike", n)
    out = []
    for k in range(3, n):
        out.extend(enumerate_starlike(n, k))
    return tuple(out)


_CLASS_LISTS = {
    "trees": trees_list,
    "connected_graphs": connected_list,
    "unicyclic": unicyclic_list,
    "starlike": starlike_list,
}


def graphs_for(query):
    """Yield (n, graph) over the query's range with degree filters applied."""
    for n in range(query.n_min, query.n_max + 1):
        for g in _CLASS_LISTS[query.klass](n):
            if query.max_degree is not None and max(g.degrees()) > query.max_degree:
                continue
            if query.chemical and max(g.degrees()) > 4:
                continue
            yield n, g
