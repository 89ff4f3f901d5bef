"""Exact graph invariants paired with average eccentricity in bound checks.

Polynomial invariants (eccentric connectivity, Wiener) ride on the shared
all-pairs BFS pass.  The NP-hard ones (independence, clique, domination,
chromatic number) are exact bitmask branch-and-bound solvers sized for the
n <= ~60 instances this library works with -- conjecture checking tolerates
no approximation.  Floats appear only for the Randić index (pairwise/fsum
summation) and the spectral radius (shifted power iteration); everything
else is integer or Fraction arithmetic.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import DisconnectedGraphError, distance_stats, eccentricity_profile


class SpectralConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap; the tolerance is too tight."""


def eccentric_connectivity_index(g):
    """Sum over vertices of degree times eccentricity (exact integer)."""
    ecc, _ = distance_stats(g)
    return sum(len(g.adjacency[v]) * ecc[v] for v in range(g.n))


def wiener_index(g):
    """Sum of distances over unordered vertex pairs (exact integer)."""
    _, rowsum = distance_stats(g)
    total = sum(rowsum)
    assert total % 2 == 0
    return total // 2


def randic_index(g, exponent=-0.5):
    """Sum over edges of (deg u * deg v) ** exponent.

    Accumulated with ``math.fsum`` so the result is correctly rounded from
    the exact sum of the per-edge terms.  Isolated vertices are rejected.
    """
    deg = g.degrees()
    if any(d == 0 for d in deg) and g.n > 1:
        raise ValueError("Randić index undefined with isolated vertices")
    return math.fsum((deg[u] * deg[v]) ** exponent for u, v in g.edges())


def _adj_masks(g):
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _max_independent(adj, n):
    """Exact maximum independent set size over bitmask adjacency."""
    full = (1 << n) - 1
    best = 0

    def clique_cover_bound(avail):
        # number of greedy cliques covering avail; an upper bound on alpha
        count = 0
        rem = avail
        while rem:
            v = (rem & -rem).bit_length() - 1
            clique_candidates = rem & adj[v]
            rem &= ~(1 << v)
            while clique_candidates:
                u = (clique_candidates & -clique_candidates).bit_length() - 1
                clique_candidates &= adj[u]
                rem &= ~(1 << u)
            count += 1
        return count

    def solve(avail, size):
        nonlocal best
        # take degree<=1 vertices outright: always part of some maximum set
        changed = True
        while changed and avail:
            changed = False
            rem = avail
            while rem:
                v = (rem & -rem).bit_length() - 1
                rem &= rem - 1
                nb = adj[v] & avail
                if nb.bit_count() <= 1:
                    avail &= ~(nb | (1 << v))
                    size += 1
                    changed = True
                    break
        if not avail:
            if size > best:
                best = size
            return
        if size + clique_cover_bound(avail) <= best:
            return
        # branch on a maximum-degree vertex
        v_best, d_best = -1, -1
        rem = avail
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            d = (adj[v] & avail).bit_count()
            if d > d_best:
                v_best, d_best = v, d
        solve(avail & ~(adj[v_best] | (1 << v_best)), size + 1)
        solve(avail & ~(1 << v_best), size)

    solve(full, 0)
    return best


def independence_number(g):
    """Exact maximum size of an independent set."""
    return _max_independent(_adj_masks(g), g.n)


def clique_number(g):
    """Exact maximum clique size, via independence in the complement."""
    n = g.n
    full = (1 << n) - 1
    masks = _adj_masks(g)
    comp = [full & ~(masks[v] | (1 << v)) for v in range(n)]
    return _max_independent(comp, n)


def domination_number(g):
    """Exact minimum dominating set size (set cover over closed neighborhoods)."""
    if not g.connected:
        raise DisconnectedGraphError("domination number of a disconnected graph")
    n = g.n
    masks = _adj_masks(g)
    closed = [masks[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1

    # greedy cover seeds the incumbent
    greedy = 0
    uncovered = full
    while uncovered:
        v = max(range(n), key=lambda w: (closed[w] & uncovered).bit_count())
        uncovered &= ~closed[v]
        greedy += 1
    best = greedy

    def solve(uncovered, used):
        nonlocal best
        if not uncovered:
            if used < best:
                best = used
            return
        if used + 1 >= best:
            return
        max_cover = 0
        rem_count = uncovered.bit_count()
        for v in range(n):
            c = (closed[v] & uncovered).bit_count()
            if c > max_cover:
                max_cover = c
        if used + (rem_count + max_cover - 1) // max_cover >= best:
            return
        # branch on dominators of the most constrained uncovered vertex
        u_pick, fewest = -1, n + 1
        rem = uncovered
        while rem:
            u = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            c = closed[u].bit_count()
            if c < fewest:
                u_pick, fewest = u, c
        cands = []
        rem = closed[u_pick]
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            cands.append(v)
        cands.sort(key=lambda v: -(closed[v] & uncovered).bit_count())
        for v in cands:
            solve(uncovered & ~closed[v], used + 1)

    solve(full, 0)
    return best


def chromatic_number(g):
    """Exact chromatic number: iterative k with saturation-ordered backtracking."""
    n = g.n
    if g.m == 0:
        return 1
    masks = _adj_masks(g)
    lower = clique_number(g)

    # greedy upper bound, largest degree first
    order = sorted(range(n), key=lambda v: -masks[v].bit_count())
    color = {}
    upper = 0
    for v in order:
        taken = {color[u] for u in color if (masks[v] >> u) & 1}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        upper = max(upper, c + 1)
    if lower == upper:
        return lower

    def colorable(k):
        colors = [-1] * n
        neighbor_used = [0] * n  # bitmask of colors seen next door

        def bt(done, palette_used):
            if done == n:
                return True
            # most saturated uncolored vertex; ties by degree
            v_pick, sat_pick, deg_pick = -1, -1, -1
            for v in range(n):
                if colors[v] >= 0:
                    continue
                sat = neighbor_used[v].bit_count()
                d = masks[v].bit_count()
                if sat > sat_pick or (sat == sat_pick and d > deg_pick):
                    v_pick, sat_pick, deg_pick = v, sat, d
            limit = min(k, palette_used + 1)
            for c in range(limit):
                if (neighbor_used[v_pick] >> c) & 1:
                    continue
                colors[v_pick] = c
                touched = []
                rem = masks[v_pick]
                while rem:
                    u = (rem & -rem).bit_length() - 1
                    rem &= rem - 1
                    if not (neighbor_used[u] >> c) & 1:
                        neighbor_used[u] |= 1 << c
                        touched.append(u)
                if bt(done + 1, max(palette_used, c + 1)):
                    return True
                colors[v_pick] = -1
                for u in touched:
                    neighbor_used[u] &= ~(1 << c)
            return False

        return bt(0, 0)

    for k in range(lower, upper):
        if colorable(k):
            return k
    return upper


def spectral_radius(g, tol=1e-10):
    """Largest adjacency eigenvalue by power iteration on A + I.

    The identity shift keeps the dominant eigenvalue strictly largest in
    magnitude (plain iteration on A oscillates on bipartite graphs), while
    leaving eigenvectors untouched.  The all-ones start overlaps the Perron
    vector of any connected graph.  Stops when the residual ||(A+I)x - r x||
    with ||x|| = 1 drops to ``tol``, which bounds the eigenvalue error.
    """
    if not g.connected:
        raise DisconnectedGraphError("spectral radius of a disconnected graph")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = g.n
    if n == 1:
        return 0.0
    a = np.zeros((n, n), dtype=np.float64)
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    np.fill_diagonal(a, 1.0)
    x = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(10**6):
        y = a @ x
        r = float(x @ y)
        if float(np.linalg.norm(y - r * x)) <= tol:
            return r - 1.0
        x = y / np.linalg.norm(y)
    raise SpectralConvergenceError(
        f"power iteration did not reach tol={tol} within 10^6 iterations"
    )


REPORT_FIELDS = (
    "n",
    "m",
    "min_degree",
    "max_degree",
    "average_eccentricity",
    "eccentric_connectivity",
    "wiener",
    "randic",
    "independence",
    "clique",
    "domination",
    "chromatic",
    "spectral_radius",
)


@dataclass(frozen=True)
class InvariantReport:
    """One row of every invariant this library combines with eccentricity."""

    n: int
    m: int
    min_degree: int
    max_degree: int
    average_eccentricity: Fraction
    eccentric_connectivity: int
    wiener: int
    randic: float
    independence: int
    clique: int
    domination: int
    chromatic: int
    spectral_radius: float

    def to_dict(self):
        out = {}
        for name in REPORT_FIELDS:
            value = getattr(self, name)
            if isinstance(value, Fraction):
                out[name] = f"{value.numerator}/{value.denominator}"
                out[name + "_float"] = float(value)
            else:
                out[name] = value
        return out

    def to_json(self):
        return json.dumps(self.to_dict())

    @staticmethod
    def csv_header():
        return ",".join(REPORT_FIELDS)

    def to_csv_row(self):
        cells = []
        for name in REPORT_FIELDS:
            value = getattr(self, name)
            if isinstance(value, Fraction):
                cells.append(f"{value.numerator}/{value.denominator}")
            elif isinstance(value, float):
                cells.append(repr(value))
            else:
                cells.append(str(value))
        return ",".join(cells)


def invariant_report(g, tol=1e-10):
    """Compute the full :class:`InvariantReport` for a connected graph."""
    profile = eccentricity_profile(g)
    deg = g.degrees()
    return InvariantReport(
        n=g.n,
        m=g.m,
        min_degree=min(deg),
        max_degree=max(deg),
        average_eccentricity=profile.average,
        eccentric_connectivity=eccentric_connectivity_index(g),
        wiener=wiener_index(g),
        randic=randic_index(g) if g.n > 1 else 0.0,
        independence=independence_number(g),
        clique=clique_number(g),
        domination=domination_number(g),
        chromatic=chromatic_number(g),
        spectral_radius=spectral_radius(g, tol),
    )
