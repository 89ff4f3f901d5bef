"""Named graph families: constructors and closed-form average eccentricities.

Every family used by the bound registry or the extremal scans is built here
with a fixed, documented vertex numbering so that graph6 output is
reproducible.  Closed forms are exact Fractions and are tested elsewhere
against BFS recomputation on full parameter grids.

Families and parameters:

====================  ==========================  =================================
kind                  params                      structure
====================  ==========================  =================================
path                  (n,)                        P_n, vertices in line order
cycle                 (n,)                        C_n
star                  (n,)                        center 0, leaves 1..n-1
complete              (n,)                        K_n
complete_bipartite    (a, b)                      sides 0..a-1 and a..a+b-1
hypercube             (d,)                        Q_d on 2**d vertices (bit labels)
broom                 (n, delta)                  center 0, leaves 1..delta-1,
                                                  chain delta..n-1 hanging off 0
starlike              (n1, ..., nk)               center 0, pendant paths of the
                                                  given lengths (k >= 2)
balanced_starlike     (n, k)                      starlike, lengths near-equal
double_broom          (d, a, b)                   spine of d-1 vertices, a+1 leaves
                                                  at one end, b+1 at the other;
                                                  diameter d, order d+a+b+1
lollipop              (n, k)                      clique 0..k-1, chain k..n-1
                                                  hanging off clique vertex 0
star_plus_edge        (n,)                        star plus edge between leaves 1,2
dn_tree               (n,)                        path 0..n-2 plus pendant n-1 at
                                                  vertex 2 (third path vertex)
complete_minus_matching (n,)                      K_n minus (2i, 2i+1) pairs; odd n
                                                  additionally drops (n-1, 0)
pc_graph              (k, delta)                  chain of k near-clique blocks,
                                                  see make_pc_graph
dumbbell              (k1, k2, path)              cliques 0..k1-1 and k1..k1+k2-1
                                                  linked through `path` internal
                                                  vertices (0 = direct edge)
====================  ==========================  =================================
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import from_edges

PARAM_NAMES = {
    "path": ("n",),
    "cycle": ("n",),
    "star": ("n",),
    "complete": ("n",),
    "complete_bipartite": ("n", "m"),
    "hypercube": ("d",),
    "broom": ("n", "delta"),
    "starlike": None,  # variable-length part list
    "balanced_starlike": ("n", "k"),
    "double_broom": ("d", "a", "b"),
    "lollipop": ("n", "k"),
    "star_plus_edge": ("n",),
    "dn_tree": ("n",),
    "complete_minus_matching": ("n",),
    "pc_graph": ("k", "delta"),
    "dumbbell": ("k1", "k2", "path"),
}


@dataclass(frozen=True)
class FamilySpec:
    """Tagged parameter tuple naming one concrete family member."""

    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in PARAM_NAMES:
            raise ValueError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        names = PARAM_NAMES[self.kind]
        if names is not None and len(self.params) != len(names):
            raise ValueError(
                f"{self.kind} expects parameters {names}, got {self.params}"
            )


def spec(kind, *params):
    return FamilySpec(kind, tuple(params))


def _require(cond, message):
    if not cond:
        raise ValueError(message)


def make_path(n):
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n):
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(n):
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return from_edges(n, [(0, i) for i in range(1, n)])


def make_complete(n):
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def make_complete_bipartite(a, b):
    _require(a >= 1 and b >= 1, f"complete bipartite needs both sides >= 1, got {a},{b}")
    return from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def make_hypercube(d):
    _require(d >= 0, f"hypercube needs dimension >= 0, got {d}")
    n = 1 << d
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    return from_edges(n, edges)


def make_broom(n, delta):
    """Star with delta-1 pure leaves plus a pendant chain, center 0.

    delta is the maximum degree; delta = 2 degenerates to the path and
    delta = n-1 to the star, so the admissible range is 2 <= delta <= n-1.
    """
    _require(n >= 3, f"broom needs n >= 3, got {n}")
    _require(2 <= delta <= n - 1, f"broom needs 2 <= delta <= n-1, got delta={delta}")
    edges = [(0, i) for i in range(1, delta + 1)]
    edges += [(i, i + 1) for i in range(delta, n - 1)]
    return from_edges(n, edges)


def make_starlike(*parts):
    _require(len(parts) >= 2, f"starlike needs at least 2 pendant paths, got {parts}")
    _require(all(p >= 1 for p in parts), f"starlike path lengths must be >= 1: {parts}")
    ordered = sorted(parts, reverse=True)
    n = 1 + sum(ordered)
    edges = []
    nxt = 1
    for length in ordered:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edges(n, edges)


def balanced_parts(n, k):
    _require(k >= 2, f"balanced starlike needs k >= 2, got {k}")
    _require(n - 1 >= k, f"balanced starlike needs n-1 >= k, got n={n}, k={k}")
    q, r = divmod(n - 1, k)
    return tuple([q + 1] * r + [q] * (k - r))


def make_balanced_starlike(n, k):
    return make_starlike(*balanced_parts(n, k))


def make_double_broom(d, a, b):
    """Spine of d-1 vertices with a+1 leaves at one end and b+1 at the other.

    Diameter d, order d+a+b+1.  d = 2 collapses the spine to one vertex and
    the graph to a star.
    """
    _require(d >= 2, f"double broom needs diameter d >= 2, got {d}")
    _require(a >= 0 and b >= 0, f"double broom needs a, b >= 0, got {a},{b}")
    spine = d - 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for _ in range(a + 1):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(b + 1):
        edges.append((spine - 1, nxt))
        nxt += 1
    return from_edges(nxt, edges)


def make_lollipop(n, k):
    _require(2 <= k <= n - 1, f"lollipop needs 2 <= k <= n-1, got n={n}, k={k}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges.append((0, k))
    edges += [(i, i + 1) for i in range(k, n - 1)]
    return from_edges(n, edges)


def make_star_plus_edge(n):
    _require(n >= 3, f"star plus edge needs n >= 3, got {n}")
    return from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def make_dn_tree(n):
    """Path 0..n-2 with one extra pendant attached at vertex 2."""
    _require(n >= 5, f"dn tree needs n >= 5, got {n}")
    edges = [(i, i + 1) for i in range(n - 2)]
    edges.append((2, n - 1))
    return from_edges(n, edges)


def make_complete_minus_matching(n):
    _require(n >= 4, f"complete minus matching needs n >= 4, got {n}")
    removed = {(2 * i, 2 * i + 1) for i in range(n // 2)}
    if n % 2 == 1:
        removed.add((0, n - 1))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in removed
    ]
    return from_edges(n, edges)


def make_pc_graph(k, delta):
    """Chain of k near-clique blocks joined by single edges.

    Interior block i is K_{delta+1} minus the edge (u_i, v_i); the two end
    blocks are K_{delta+2} minus that edge.  Block-major numbering with
    u_i first and v_i second inside each block; blocks i and i+1 are joined
    by the edge (u_i, v_{i+1}).  Order n = k(delta+1)+2, minimum degree delta.
    """
    _require(k >= 2, f"pc graph needs k >= 2 blocks, got {k}")
    _require(delta >= 2, f"pc graph needs delta >= 2, got {delta}")
    edges = []
    offsets = []
    nxt = 0
    for i in range(k):
        size = delta + 2 if i in (0, k - 1) else delta + 1
        offsets.append(nxt)
        u, v = nxt, nxt + 1
        for x in range(nxt, nxt + size):
            for y in range(x + 1, nxt + size):
                if (x, y) != (u, v):
                    edges.append((x, y))
        nxt += size
    for i in range(k - 1):
        edges.append((offsets[i], offsets[i + 1] + 1))  # (u_i, v_{i+1})
    return from_edges(nxt, edges)


def make_dumbbell(k1, k2, path):
    """Two cliques joined through ``path`` internal path vertices."""
    _require(k1 >= 1 and k2 >= 1, f"dumbbell cliques must be nonempty, got {k1},{k2}")
    _require(path >= 0, f"dumbbell path length must be >= 0, got {path}")
    edges = [(u, v) for u in range(k1) for v in range(u + 1, k1)]
    edges += [(k1 + u, k1 + v) for u in range(k2) for v in range(u + 1, k2)]
    if path == 0:
        edges.append((0, k1))
    else:
        first = k1 + k2
        edges.append((0, first))
        edges += [(i, i + 1) for i in range(first, first + path - 1)]
        edges.append((first + path - 1, k1))
    return from_edges(k1 + k2 + path, edges)


_BUILDERS = {
    "path": make_path,
    "cycle": make_cycle,
    "star": make_star,
    "complete": make_complete,
    "complete_bipartite": make_complete_bipartite,
    "hypercube": make_hypercube,
    "broom": make_broom,
    "starlike": make_starlike,
    "balanced_starlike": make_balanced_starlike,
    "double_broom": make_double_broom,
    "lollipop": make_lollipop,
    "star_plus_edge": make_star_plus_edge,
    "dn_tree": make_dn_tree,
    "complete_minus_matching": make_complete_minus_matching,
    "pc_graph": make_pc_graph,
    "dumbbell": make_dumbbell,
}


def make(family_spec):
    """Build the graph named by ``family_spec``."""
    return _BUILDERS[family_spec.kind](*family_spec.params)


# ---------------------------------------------------------------------------
# closed forms (exact Fractions)
# ---------------------------------------------------------------------------


def path_ecc(n):
    return Fraction((3 * n * n - 2 * n) // 4, n)


def star_ecc(n):
    if n == 1:
        return Fraction(0)
    if n == 2:
        return Fraction(1)
    return 2 - Fraction(1, n)


def broom_ecc(n, delta):
    """Exact average eccentricity of the broom, 2 <= delta <= n-1."""
    _require(n >= 3, f"broom needs n >= 3, got {n}")
    _require(2 <= delta <= n - 1, f"broom needs 2 <= delta <= n-1, got delta={delta}")
    s = n - delta + 2
    return Fraction((s * (3 * s - 2)) // 4 + (n - delta + 1) * (delta - 2), n)


def pc_graph_ecc(k, delta):
    _require(k >= 2 and k % 2 == 0, f"pc closed form needs even k >= 2, got {k}")
    _require(delta >= 2, f"pc graph needs delta >= 2, got {delta}")
    return Fraction(9 * k, 4) - Fraction(1, 2) + Fraction(
        3 * (k - 2), 2 * (k * delta + k + 2)
    )


def closed_form_ecc(family_spec):
    """Exact average eccentricity for kinds that admit a closed form."""
    kind = family_spec.kind
    p = family_spec.params
    if kind == "path":
        _require(p[0] >= 1, f"path needs n >= 1, got {p[0]}")
        return path_ecc(p[0])
    if kind == "cycle":
        _require(p[0] >= 3, f"cycle needs n >= 3, got {p[0]}")
        return Fraction(p[0] // 2)
    if kind == "star":
        _require(p[0] >= 1, f"star needs n >= 1, got {p[0]}")
        return star_ecc(p[0])
    if kind == "complete":
        _require(p[0] >= 1, f"complete needs n >= 1, got {p[0]}")
        return Fraction(0) if p[0] == 1 else Fraction(1)
    if kind == "complete_bipartite":
        a, b = p
        _require(a >= 1 and b >= 1, f"complete bipartite sides must be >= 1: {a},{b}")
        if a >= 2 and b >= 2:
            return Fraction(2)
        return star_ecc(a + b)
    if kind == "hypercube":
        _require(p[0] >= 0, f"hypercube needs d >= 0, got {p[0]}")
        return Fraction(p[0])
    if kind == "broom":
        return broom_ecc(*p)
    if kind == "lollipop":
        n, k = p
        _require(2 <= k <= n - 1, f"lollipop needs 2 <= k <= n-1, got n={n}, k={k}")
        return broom_ecc(n, k)
    if kind == "pc_graph":
        return pc_graph_ecc(*p)
    raise ValueError(f"family kind {kind!r} has no closed-form average eccentricity")


def broom_independence(n, delta):
    """Exact independence number of the broom B(n, delta)."""
    _require(2 <= delta <= n - 1, f"broom needs 2 <= delta <= n-1, got delta={delta}")
    return -((n - delta + 2) // -2) + (delta - 2)


def broom_alpha_plus_ecc(n, delta):
    """Closed form for independence number plus average eccentricity of a broom."""
    _require(2 <= delta <= n - 1, f"broom needs 2 <= delta <= n-1, got delta={delta}")
    base = Fraction(5 * n, 4) - Fraction(delta * (delta - 2), 4 * n)
    if (n - delta) % 2 == 0:
        return base - Fraction(1, 2)
    return base - Fraction(1, 4 * n)


def lollipop_product(n, k):
    """Exact clique number times average eccentricity of the lollipop."""
    _require(2 <= k <= n - 1, f"lollipop needs 2 <= k <= n-1, got n={n}, k={k}")
    return Fraction(k, n) * ((-k * k - 2 * k * (n - 1) + n * (2 + 3 * n)) // 4)


@dataclass(frozen=True)
class KStarResult:
    """Real maximizer of the lollipop clique-size product and the integer argmax."""

    k_star: float
    argmax: tuple


def lollipop_kstar(n):
    """Real root maximizing the lollipop product plus the brute-force argmax set."""
    _require(n >= 4, f"lollipop k* needs n >= 4, got {n}")
    k_star = (2 - 2 * n + math.sqrt(13 * n * n - 2 * n + 4)) / 3
    values = {k: lollipop_product(n, k) for k in range(2, n)}
    top = max(values.values())
    argmax = tuple(k for k, v in values.items() if v == top)
    return KStarResult(k_star, argmax)
