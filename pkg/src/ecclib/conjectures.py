"""Catalog of AutoGraphiX average-eccentricity conjectures and their checkers.

Thirteen catalog entries pair the average eccentricity with a second
invariant (independence, Randić, spectral radius, clique, chromatic,
minimum degree, domination) under a sum, product, or ratio, and either
state a closed-form bound in n or claim that the per-n extremum is attained
inside a named family.  This module holds the machine-readable registry,
per-graph evaluation with exact arithmetic where both invariants are
rational, class-wide scans with deterministic parallel sharding, and the
dedicated minimum-degree-product refutation search over the chained
near-clique family.

The two catalog entries that share the printed label ``A.464-L`` get
internal ids ``A.464-L-randic`` and ``A.464-L-domination-*``.  The
domination entries are printed as lower bounds in the source catalog, but
the star already sits far below the displayed right-hand side while the
claimed equality trees sit exactly on it from below, so the displayed
expression is in fact the claimed *maximum* of domination number plus
average eccentricity; both entries are therefore registered as upper
bounds.
"""

import json
import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .canon import canonical_certificate
from .enumeration import graphs_for
from .families import make_dumbbell, make_lollipop, make_pc_graph, pc_graph_ecc
from .graph import average_eccentricity, decode_graph6, encode_graph6
from .invariants import (
    chromatic_number,
    clique_number,
    domination_number,
    independence_number,
    randic_index,
    spectral_radius,
)

TOLERANCE = 1e-9
NEAR_TOLERANCE = 1e-6


def _min_degree(g):
    return min(g.degrees())


_INVARIANTS = {
    "average_eccentricity": average_eccentricity,
    "independence_number": independence_number,
    "randic_index": randic_index,
    "spectral_radius": spectral_radius,
    "clique_number": clique_number,
    "chromatic_number": chromatic_number,
    "min_degree": _min_degree,
    "domination_number": domination_number,
}


# ---------------------------------------------------------------------------
# bound functions (module level so worker processes can import them by name)
# ---------------------------------------------------------------------------


def _ra_path(n):
    """Randić index of the n-vertex path (n >= 3)."""
    return (n - 3 + 2 * math.sqrt(2)) / 2


def _bound_a478_u(n):
    if n % 2:
        return Fraction(3 * n * n - 2 * n - 1, 4 * n) + Fraction(n + 1, 2)
    return Fraction(3 * n * n - 4 * n - 4, 4 * n) + Fraction(n + 2, 2)


def _bound_a462_u(n):
    if n % 2:
        return _ra_path(n) + (3 * n + 1) * (n - 1) / (4 * n)
    return _ra_path(n) + (3 * n - 2) / 4


def _bound_a462_l(n):
    return math.sqrt(n - 1) + 2 - 1 / n


def _bound_a464_u(n):
    if n % 2:
        return _ra_path(n) * ((3 * n + 1) * (n - 1) / (4 * n))
    return _ra_path(n) * ((3 * n - 2) / 4)


def _bound_a464_l_randic(n):
    if n <= 13:
        return n / 2
    return math.sqrt(n - 1) * (2 - 1 / n)


def _bound_a458_l(n):
    return math.sqrt(n - 1) + (2 - 1 / n)


def _bound_a460_l(n):
    return math.sqrt(n - 1) * (2 - 1 / n)


def _bound_a100_u(n):
    if n % 2:
        raise ValueError(
            "the minimum-degree product bound is evaluated for even n only; "
            "the odd-n case of the catalog entry is not a usable expression"
        )
    return Fraction(2 * n - 2)


def _bound_domination_original(n):
    if n % 3 != 1:
        if n % 2:
            return (n + 1) // 3 + Fraction((3 * n + 1) * n, 4 * (n - 1))
        return (n + 1) // 3 + Fraction(3 * n - 2, 4)
    if n % 2:
        return Fraction(13 * n - 16, 12) - Fraction(3, 4 * n)
    return Fraction(13 * n - 16, 12) - Fraction(1, n)


def _bound_domination_corrected(n):
    if n % 3 != 0:
        return -(n // -3) + Fraction((3 * n * n - 2 * n) // 4, n)
    m = n - 1
    return Fraction(n, 3) + 2 - Fraction(3, n) + Fraction((3 * m * m - 2 * m) // 4, n)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureSpec:
    """One catalog entry: invariant pair, combiner, direction, and bound."""

    id: str
    paper_label: str
    combiner: str  # sum | product | ratio
    invariants: tuple  # pair of _INVARIANTS keys, display order
    direction: str  # upper | lower | extremal-family
    bound: object  # callable n -> Fraction | float, or None
    bound_kind: str  # rational | real | none
    claimed_extremal: str
    checkable: str  # closed-bound | extremal-family-only
    paper_status: str  # proved | open | refuted | corrected
    membership_family: str = None  # lollipop | dumbbell (family scans only)


_REGISTRY = (
    ConjectureSpec(
        id="A.478-U",
        paper_label="A.478-U",
        combiner="sum",
        invariants=("independence_number", "average_eccentricity"),
        direction="upper",
        bound=_bound_a478_u,
        bound_kind="rational",
        claimed_extremal="P_n for odd n; B(n,3) for even n",
        checkable="closed-bound",
        paper_status="proved",
    ),
    ConjectureSpec(
        id="A.462-U",
        paper_label="A.462-U",
        combiner="sum",
        invariants=("randic_index", "average_eccentricity"),
        direction="upper",
        bound=_bound_a462_u,
        bound_kind="real",
        claimed_extremal="P_n",
        checkable="closed-bound",
        paper_status="proved",
    ),
    ConjectureSpec(
        id="A.462-L",
        paper_label="A.462-L",
        combiner="sum",
        invariants=("randic_index", "average_eccentricity"),
        direction="lower",
        bound=_bound_a462_l,
        bound_kind="real",
        claimed_extremal="S_n",
        checkable="closed-bound",
        paper_status="open",
    ),
    ConjectureSpec(
        id="A.464-U",
        paper_label="A.464-U",
        combiner="product",
        invariants=("randic_index", "average_eccentricity"),
        direction="upper",
        bound=_bound_a464_u,
        bound_kind="real",
        claimed_extremal="P_n",
        checkable="closed-bound",
        paper_status="proved",
    ),
    ConjectureSpec(
        id="A.464-L-randic",
        paper_label="A.464-L",
        combiner="product",
        invariants=("randic_index", "average_eccentricity"),
        direction="lower",
        bound=_bound_a464_l_randic,
        bound_kind="real",
        claimed_extremal="K_n for n <= 13; S_n for n > 13",
        checkable="closed-bound",
        paper_status="open",
    ),
    ConjectureSpec(
        id="A.458-L",
        paper_label="A.458-L",
        combiner="sum",
        invariants=("spectral_radius", "average_eccentricity"),
        direction="lower",
        bound=_bound_a458_l,
        bound_kind="real",
        claimed_extremal="S_n",
        checkable="closed-bound",
        paper_status="open",
    ),
    ConjectureSpec(
        id="A.460-L",
        paper_label="A.460-L",
        combiner="product",
        invariants=("spectral_radius", "average_eccentricity"),
        direction="lower",
        bound=_bound_a460_l,
        bound_kind="real",
        claimed_extremal="S_n",
        checkable="closed-bound",
        paper_status="open",
    ),
    ConjectureSpec(
        id="A.488-U",
        paper_label="A.488-U",
        combiner="product",
        invariants=("average_eccentricity", "clique_number"),
        direction="extremal-family",
        bound=None,
        bound_kind="none",
        claimed_extremal="lollipop LP(n,k)",
        checkable="extremal-family-only",
        paper_status="proved",
        membership_family="lollipop",
    ),
    ConjectureSpec(
        id="A.479-U",
        paper_label="A.479-U",
        combiner="ratio",
        invariants=("average_eccentricity", "independence_number"),
        direction="extremal-family",
        bound=None,
        bound_kind="none",
        claimed_extremal="two cliques linked by a path",
        checkable="extremal-family-only",
        paper_status="open",
        membership_family="dumbbell",
    ),
    ConjectureSpec(
        id="A.492-U",
        paper_label="A.492-U",
        combiner="product",
        invariants=("average_eccentricity", "chromatic_number"),
        direction="extremal-family",
        bound=None,
        bound_kind="none",
        claimed_extremal="lollipop LP(n,k)",
        checkable="extremal-family-only",
        paper_status="open",
        membership_family="lollipop",
    ),
    ConjectureSpec(
        id="A.100-U",
        paper_label="A.100-U",
        combiner="product",
        invariants=("min_degree", "average_eccentricity"),
        direction="upper",
        bound=_bound_a100_u,
        bound_kind="rational",
        claimed_extremal="K_n minus a perfect matching (claimed; refuted)",
        checkable="closed-bound",
        paper_status="refuted",
    ),
    ConjectureSpec(
        id="A.464-L-domination-original",
        paper_label="A.464-L",
        combiner="sum",
        invariants=("domination_number", "average_eccentricity"),
        direction="upper",
        bound=_bound_domination_original,
        bound_kind="rational",
        claimed_extremal=(
            "P_n for n != 1 (mod 3); diameter-(n-2) trees with "
            "domination number floor((n+1)/3) for n = 1 (mod 3)"
        ),
        checkable="closed-bound",
        paper_status="refuted",
    ),
    ConjectureSpec(
        id="A.464-L-domination-corrected",
        paper_label="A.464-L",
        combiner="sum",
        invariants=("domination_number", "average_eccentricity"),
        direction="upper",
        bound=_bound_domination_corrected,
        bound_kind="rational",
        claimed_extremal="P_n for n != 0 (mod 3); D_n for n = 0 (mod 3)",
        checkable="closed-bound",
        paper_status="corrected",
    ),
)

_BY_ID = {s.id: s for s in _REGISTRY}


def registry():
    """All thirteen catalog entries, in catalog order."""
    return list(_REGISTRY)


def get(conjecture_id):
    try:
        return _BY_ID[conjecture_id]
    except KeyError:
        raise ValueError(
            f"no conjecture {conjecture_id!r}; known ids: {', '.join(_BY_ID)}"
        ) from None


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureEvaluation:
    conjecture_id: str
    graph6: str
    n: int
    value: object
    bound: object
    slack: object
    status: str  # satisfied | equality | near-equality | violated
    exact: bool

    def to_dict(self):
        return {
            "conjecture": self.conjecture_id,
            "graph6": self.graph6,
            "n": self.n,
            "value": _num_text(self.value),
            "value_float": float(self.value),
            "bound": _num_text(self.bound),
            "bound_float": float(self.bound),
            "slack": _num_text(self.slack),
            "slack_float": float(self.slack),
            "status": self.status,
            "exact": self.exact,
        }


def _num_text(v):
    return str(v) if isinstance(v, (Fraction, int)) else repr(float(v))


def combined_value(spec, g):
    """The conjecture's left-hand side on one graph (exact when possible)."""
    a = _INVARIANTS[spec.invariants[0]](g)
    b = _INVARIANTS[spec.invariants[1]](g)
    if spec.combiner == "sum":
        return a + b
    if spec.combiner == "product":
        return a * b
    if spec.combiner == "ratio":
        return Fraction(a, b) if isinstance(a, (int, Fraction)) else a / b
    raise ValueError(f"unknown combiner {spec.combiner!r}")


def evaluate(spec, g, tolerance=TOLERANCE, near_tolerance=NEAR_TOLERANCE):
    """Evaluate one closed-bound conjecture on one connected graph."""
    if spec.checkable != "closed-bound":
        raise ValueError(
            f"{spec.id} has no closed bound; scan it for family membership instead"
        )
    if not g.connected:
        raise ValueError("conjectures are stated for connected graphs")
    if g.n < 4:
        raise ValueError(f"every catalog bound assumes n >= 4, got n={g.n}")
    value = combined_value(spec, g)
    bound = spec.bound(g.n)
    if spec.direction == "upper":
        slack = bound - value
    else:
        slack = value - bound
    exact = isinstance(value, (Fraction, int)) and isinstance(bound, (Fraction, int))
    if exact:
        if slack < 0:
            status = "violated"
        elif slack == 0:
            status = "equality"
        else:
            status = "satisfied"
    else:
        slack = float(slack)
        if slack < -tolerance:
            status = "violated"
        elif abs(slack) <= tolerance:
            status = "equality"
        elif abs(slack) <= near_tolerance:
            status = "near-equality"
        else:
            status = "satisfied"
    return ConjectureEvaluation(
        conjecture_id=spec.id,
        graph6=encode_graph6(g),
        n=g.n,
        value=value,
        bound=bound,
        slack=slack,
        status=status,
        exact=exact,
    )


# ---------------------------------------------------------------------------
# family membership (for extremal-family-only scans)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _lollipop_certs(n):
    return frozenset(
        canonical_certificate(make_lollipop(n, k)) for k in range(2, n)
    )


@lru_cache(maxsize=None)
def _dumbbell_certs(n):
    out = set()
    for k1 in range(1, n):
        for k2 in range(k1, n - k1 + 1):
            out.add(canonical_certificate(make_dumbbell(k1, k2, n - k1 - k2)))
    return frozenset(out)


_FAMILY_CERTS = {"lollipop": _lollipop_certs, "dumbbell": _dumbbell_certs}


def in_claimed_family(spec, g):
    if spec.membership_family is None:
        raise ValueError(f"{spec.id} does not claim a membership family")
    return canonical_certificate(g) in _FAMILY_CERTS[spec.membership_family](g.n)


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    value: object
    graph6: tuple  # every graph attaining the per-n extremum, sorted
    in_claimed_family: object  # bool for family scans, None otherwise

    def to_dict(self):
        return {
            "n": self.n,
            "value": _num_text(self.value),
            "value_float": float(self.value),
            "graph6": list(self.graph6),
            "in_claimed_family": self.in_claimed_family,
        }


@dataclass(frozen=True)
class ScanReport:
    conjecture_id: str
    paper_label: str
    klass: str
    n_min: int
    n_max: int
    graphs_scanned: int
    violations: tuple
    equalities: tuple
    near_equalities: tuple
    extremal: tuple

    def to_dict(self):
        return {
            "conjecture": self.conjecture_id,
            "paper_label": self.paper_label,
            "class": self.klass,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "graphs_scanned": self.graphs_scanned,
            "violations": [e.to_dict() for e in self.violations],
            "equalities": [e.to_dict() for e in self.equalities],
            "near_equalities": [e.to_dict() for e in self.near_equalities],
            "extremal": [r.to_dict() for r in self.extremal],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self):
        """Notable rows only: violations, equalities, near-equalities, extrema."""
        lines = [
            "conjecture,paper_label,class,n,role,graph6,value,value_float,"
            "slack,status,in_claimed_family"
        ]
        for role, rows in (
            ("violation", self.violations),
            ("equality", self.equalities),
            ("near-equality", self.near_equalities),
        ):
            for e in rows:
                lines.append(
                    f"{self.conjecture_id},{self.paper_label},{self.klass},"
                    f"{e.n},{role},{e.graph6},{_num_text(e.value)},"
                    f"{float(e.value)!r},{_num_text(e.slack)},{e.status},"
                )
        for r in self.extremal:
            fam = "" if r.in_claimed_family is None else str(r.in_claimed_family)
            for g6 in r.graph6:
                lines.append(
                    f"{self.conjecture_id},{self.paper_label},{self.klass},"
                    f"{r.n},extremal,{g6},{_num_text(r.value)},"
                    f"{float(r.value)!r},,,{fam}"
                )
        return "\n".join(lines) + "\n"

    def summary_text(self):
        head = (
            f"{self.conjecture_id} [{self.paper_label}] over {self.klass} "
            f"n={self.n_min}..{self.n_max}: {self.graphs_scanned} graphs, "
            f"{len(self.violations)} violations, {len(self.equalities)} "
            f"equalities, {len(self.near_equalities)} near-equalities"
        )
        lines = [head]
        for e in self.violations:
            lines.append(
                f"  VIOLATION n={e.n} {e.graph6} value={_num_text(e.value)} "
                f"bound={_num_text(e.bound)} slack={_num_text(e.slack)}"
            )
        for e in self.equalities:
            lines.append(f"  equality n={e.n} {e.graph6} value={_num_text(e.value)}")
        for r in self.extremal:
            fam = (
                ""
                if r.in_claimed_family is None
                else f" in_claimed_family={r.in_claimed_family}"
            )
            lines.append(
                f"  extremal n={r.n} value={_num_text(r.value)} "
                f"graphs={','.join(r.graph6)}{fam}"
            )
        return "\n".join(lines) + "\n"


def _eval_block(args):
    spec_id, items, tolerance, near_tolerance = args
    spec = get(spec_id)
    return [
        evaluate(spec, decode_graph6(g6), tolerance, near_tolerance)
        for g6 in items
    ]


def _value_block(args):
    spec_id, items = args
    spec = get(spec_id)
    return [combined_value(spec, decode_graph6(g6)) for g6 in items]


def _map_blocks(worker, blocks, jobs):
    if jobs <= 1 or len(blocks) <= 1:
        return [worker(b) for b in blocks]
    with multiprocessing.get_context("fork").Pool(processes=jobs) as pool:
        return pool.map(worker, blocks)


def _chunk(seq, size):
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def scan(spec, query, jobs=1, tolerance=TOLERANCE, near_tolerance=NEAR_TOLERANCE):
    """Evaluate one conjecture over an enumerated class, in deterministic order.

    Work is sharded into fixed blocks processed left to right (optionally by
    a process pool), so the report is identical for every ``jobs`` value.
    """
    if query.n_min < 4:
        raise ValueError("catalog bounds assume n >= 4; start the range there")
    items = []  # graph6 strings in enumeration order
    for n, g in graphs_for(query):
        if spec.id == "A.100-U" and n % 2:
            continue  # the odd-n expression is unusable; even n only
        items.append(encode_graph6(g))
    return _scan_items(
        spec, items, query.klass, query.n_min, query.n_max, jobs, tolerance,
        near_tolerance,
    )


def scan_stream(
    spec,
    graphs,
    klass="graph6-stream",
    jobs=1,
    tolerance=TOLERANCE,
    near_tolerance=NEAR_TOLERANCE,
):
    """Scan an externally supplied graph iterable (e.g. a trusted catalog).

    Graphs below the conjectures' stated scope (n < 4) are skipped, as are
    odd orders for the minimum-degree product entry.
    """
    items, n_seen = [], []
    for g in graphs:
        if isinstance(g, str):
            g = decode_graph6(g)
        if g.n < 4 or (spec.id == "A.100-U" and g.n % 2):
            continue
        items.append(encode_graph6(g))
        n_seen.append(g.n)
    n_min = min(n_seen) if n_seen else 0
    n_max = max(n_seen) if n_seen else 0
    return _scan_items(spec, items, klass, n_min, n_max, jobs, tolerance, near_tolerance)


def _scan_items(spec, items, klass, n_min, n_max, jobs, tolerance, near_tolerance):
    blocks = _chunk(items, 256)
    best = {}  # n -> (value, [graph6])
    violations, equalities, nears = [], [], []
    if spec.checkable == "closed-bound":
        work = [(spec.id, b, tolerance, near_tolerance) for b in blocks]
        for chunk in _map_blocks(_eval_block, work, jobs):
            for ev in chunk:
                if ev.status == "violated":
                    violations.append(ev)
                elif ev.status == "equality":
                    equalities.append(ev)
                elif ev.status == "near-equality":
                    nears.append(ev)
                _track_extremum(best, ev.n, ev.value, ev.graph6, spec.direction)
    else:
        work = [(spec.id, b) for b in blocks]
        for block, values in zip(blocks, _map_blocks(_value_block, work, jobs)):
            for g6, value in zip(block, values):
                _track_extremum(best, decode_graph6(g6).n, value, g6, "upper")
    extremal = []
    for n in sorted(best):
        value, g6s = best[n]
        member = None
        if spec.membership_family is not None:
            certs = _FAMILY_CERTS[spec.membership_family](n)
            member = any(
                canonical_certificate(decode_graph6(g6)) in certs for g6 in g6s
            )
        extremal.append(
            ExtremalRecord(
                n=n, value=value, graph6=tuple(sorted(g6s)), in_claimed_family=member
            )
        )
    return ScanReport(
        conjecture_id=spec.id,
        paper_label=spec.paper_label,
        klass=klass,
        n_min=n_min,
        n_max=n_max,
        graphs_scanned=len(items),
        violations=tuple(violations),
        equalities=tuple(equalities),
        near_equalities=tuple(nears),
        extremal=tuple(extremal),
    )


def _track_extremum(best, n, value, graph6, direction):
    if n not in best:
        best[n] = (value, [graph6])
        return
    cur, holders = best[n]
    if value == cur:
        holders.append(graph6)
    elif (direction == "lower") == (value < cur):
        best[n] = (value, [graph6])


# ---------------------------------------------------------------------------
# the dedicated minimum-degree-product refutation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CounterexampleRow:
    k: int
    delta: int
    n: int
    product: Fraction
    bound: Fraction
    margin: Fraction  # product - bound; positive means the bound fails
    violated: bool
    criterion: int  # k(delta-8) - 2*delta; > 0 is the sufficient condition

    def to_dict(self):
        return {
            "k": self.k,
            "delta": self.delta,
            "n": self.n,
            "product": _num_text(self.product),
            "product_float": float(self.product),
            "bound": _num_text(self.bound),
            "margin": _num_text(self.margin),
            "margin_float": float(self.margin),
            "violated": self.violated,
            "criterion": self.criterion,
        }


@dataclass(frozen=True)
class CounterexampleReport:
    rows: tuple
    bfs_checked: bool

    @property
    def violations(self):
        return tuple(r for r in self.rows if r.violated)

    def to_dict(self):
        return {
            "conjecture": "A.100-U",
            "bfs_checked": self.bfs_checked,
            "rows": [r.to_dict() for r in self.rows],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self):
        lines = ["k,delta,n,product,product_float,bound,margin,margin_float,violated,criterion"]
        for r in self.rows:
            lines.append(
                f"{r.k},{r.delta},{r.n},{_num_text(r.product)},"
                f"{float(r.product)!r},{_num_text(r.bound)},{_num_text(r.margin)},"
                f"{float(r.margin)!r},{r.violated},{r.criterion}"
            )
        return "\n".join(lines) + "\n"

    def summary_text(self):
        head = (
            f"minimum-degree product vs 2n-2 over {len(self.rows)} (k, delta) "
            f"pairs; {len(self.violations)} violations"
        )
        if self.bfs_checked:
            head += " (closed forms BFS-checked)"
        lines = [head]
        for r in self.rows:
            mark = "VIOLATED" if r.violated else "ok"
            lines.append(
                f"  k={r.k} delta={r.delta} n={r.n} product={_num_text(r.product)}"
                f" bound={_num_text(r.bound)} margin={_num_text(r.margin)}"
                f" criterion={r.criterion} {mark}"
            )
        return "\n".join(lines) + "\n"


def refute_a100(k_range, delta_range, bfs_check=True):
    """Tabulate delta * ecc over the chained near-clique family against 2n-2.

    ``k_range`` must contain even block counts only (the closed form covers
    even k); every row is recomputed by BFS when ``bfs_check`` is set, and a
    disagreement raises.
    """
    ks = sorted(set(int(k) for k in k_range))
    deltas = sorted(set(int(d) for d in delta_range))
    for k in ks:
        if k % 2 or k < 2:
            raise ValueError(f"odd k rejected: the closed form covers even k >= 2, got {k}")
    for d in deltas:
        if d < 2:
            raise ValueError(f"need delta >= 2, got {d}")
    rows = []
    for k in ks:
        for delta in deltas:
            n = k * (delta + 1) + 2
            product = delta * pc_graph_ecc(k, delta)
            bound = Fraction(2 * n - 2)
            if bfs_check:
                g = make_pc_graph(k, delta)
                recomputed = _min_degree(g) * average_eccentricity(g)
                if recomputed != product:
                    raise RuntimeError(
                        f"closed form {product} disagrees with BFS {recomputed} "
                        f"at (k={k}, delta={delta})"
                    )
            rows.append(
                CounterexampleRow(
                    k=k,
                    delta=delta,
                    n=n,
                    product=product,
                    bound=bound,
                    margin=product - bound,
                    violated=product > bound,
                    criterion=k * (delta - 8) - 2 * delta,
                )
            )
    return CounterexampleReport(rows=tuple(rows), bfs_checked=bfs_check)
