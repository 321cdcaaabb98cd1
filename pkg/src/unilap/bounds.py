"""Lower-bound formulas, exact domination number, per-graph verdicts.

The headline inequality for a connected unicyclic graph with diameter d and
girth r is

    count[0,1) >= ceil(d/3) + ceil(r/6) - 1,

sandwiched from above by the domination number. Refinements exist for
lollipop cores (r not divisible by 6 improves the bound by one in the
diameter term) and for a narrow compass case. analyze() measures everything
on the input graph itself and never trusts the core reduction as the sole
certificate.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameterError, SizeCapExceededError
from .graphs import (
    CompassParams,
    CoreClassification,
    Graph,
    diameter_and_path,
    reduce_to_core,
    unicyclic_decompose,
)
from .spectra import count_interval, multiplicity

GAMMA_CAP_DEFAULT = 32


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def main_lower_bound(d: int, r: int) -> int:
    """ceil(d/3) + ceil(r/6) - 1, valid for every connected unicyclic graph."""
    if d < 1 or r < 3:
        raise InvalidParameterError(f"need d >= 1 and r >= 3, got d={d} r={r}")
    return ceil_div(d, 3) + ceil_div(r, 6) - 1


def refined_lollipop_bound(d: int, r: int) -> int:
    """Lollipop bound, one better in the diameter term unless 6 | r."""
    if d < 1 or r < 3:
        raise InvalidParameterError(f"need d >= 1 and r >= 3, got d={d} r={r}")
    if r % 6 != 0:
        return ceil_div(d + 1, 3) + ceil_div(r, 6) - 1
    return main_lower_bound(d, r)


def lollipop_exact_count(n: int, r: int) -> int | None:
    """Exact count d/3 + ceil(r/6) when 3 | d and r is not divisible by 6."""
    if not 3 <= r < n:
        raise InvalidParameterError(f"need 3 <= r < n, got n={n} r={r}")
    d = n - ceil_div(r, 2)
    if d % 3 == 0 and r % 6 != 0:
        return d // 3 + ceil_div(r, 6)
    return None


def compass_bounds(p: CompassParams) -> tuple[int, int | None]:
    """Base bound for every valid compass, plus the strengthened one.

    The strengthened value ceil(d/3) + ceil(r/6) applies exactly when
    3 | n, 6 | r, r' = r/2 and t = 1 (mod 3); otherwise None.
    """
    p.validate()
    base = main_lower_bound(p.d, p.r)
    strengthened = None
    if p.n % 3 == 0 and p.r % 6 == 0 and p.r_prime == p.r // 2 and p.t % 3 == 1:
        strengthened = ceil_div(p.d, 3) + ceil_div(p.r, 6)
    return base, strengthened


# ---------------------------------------------------------------------------
# domination number


def _greedy_dominating_size(closed: list[int], full: int) -> int:
    dominated = 0
    size = 0
    while dominated != full:
        gain, pick = 0, -1
        for v, mask in enumerate(closed):
            g = (mask & ~dominated).bit_count()
            if g > gain:
                gain, pick = g, v
        dominated |= closed[pick]
        size += 1
    return size


def domination_number(g: Graph, cap: int = GAMMA_CAP_DEFAULT) -> int:
    """Exact domination number by branch and bound over closed neighborhoods.

    Prunes with a greedy upper bound, the per-node coverage lower bound, and
    the diameter bound ceil((d+1)/3) <= gamma.
    """
    if g.n > cap:
        raise SizeCapExceededError(f"n={g.n} exceeds domination cap {cap}")
    n = g.n
    closed = [(1 << v) | sum(1 << w for w in g.adj[v]) for v in range(n)]
    full = (1 << n) - 1

    best = _greedy_dominating_size(closed, full)
    if g.is_connected():
        d, _ = diameter_and_path(g)
        if best == ceil_div(d + 1, 3):
            return best

    def search(dominated: int, chosen: int) -> None:
        nonlocal best
        if dominated == full:
            best = min(best, chosen)
            return
        remaining = n - dominated.bit_count()
        max_gain = max((closed[v] & ~dominated).bit_count() for v in range(n))
        if chosen + ceil_div(remaining, max_gain) >= best:
            return
        # every dominating set meets the closed neighborhood of any
        # undominated vertex; branch on the one with fewest options
        u = min(
            (v for v in range(n) if not (dominated >> v) & 1),
            key=lambda v: closed[v].bit_count(),
        )
        candidates = sorted(
            (w for w in range(n) if (closed[u] >> w) & 1),
            key=lambda w: -(closed[w] & ~dominated).bit_count(),
        )
        for w in candidates:
            search(dominated | closed[w], chosen + 1)

    search(0, 0)
    return best


# ---------------------------------------------------------------------------
# per-graph report


@dataclass
class BoundReport:
    """Everything measured and asserted about one connected unicyclic graph."""

    n: int
    girth: int
    diameter: int
    count01: int
    mult1: int
    gamma: int | None
    main_bound: int
    refined_bound: int | None
    alpha: int | None
    k: int
    verdicts: dict[str, bool]
    core: CoreClassification

    @property
    def all_ok(self) -> bool:
        return all(self.verdicts.values())


def analyze(g: Graph, gamma_cap: int = GAMMA_CAP_DEFAULT) -> BoundReport:
    """Measure g exactly and check every applicable inequality on g itself."""
    dec = unicyclic_decompose(g)
    r = dec.girth
    d, _ = diameter_and_path(g)
    count01 = count_interval(g, 0, 1).count
    mult1 = multiplicity(g, 1)
    gamma = domination_number(g, cap=gamma_cap) if g.n <= gamma_cap else None
    core = reduce_to_core(g)

    main = main_lower_bound(d, r)
    refined: int | None = None
    alpha: int | None = None
    if core.kind == "lollipop":
        refined = refined_lollipop_bound(d, r)
    elif core.kind == "compass":
        cn, cr, crp, ct = core.params
        alpha = cr // 2 - crp
        # swapping the two tails is an isomorphism, so the strengthened
        # bound applies if either orientation meets its hypotheses
        for t in (ct, cn - cr - ct):
            strengthened = compass_bounds(CompassParams(cn, cr, crp, t))[1]
            if strengthened is not None:
                refined = strengthened
                break
    k = max(main, refined) if refined is not None else main

    verdicts = {"main_bound": count01 >= main}
    if refined is not None:
        verdicts["refined_bound"] = count01 >= refined
    if gamma is not None:
        verdicts["hedetniemi"] = count01 <= gamma
        if r >= 7:
            verdicts["chain"] = (
                Fraction(d + 1, 3) <= main and main <= count01 and count01 <= gamma
            )
    return BoundReport(
        n=g.n,
        girth=r,
        diameter=d,
        count01=count01,
        mult1=mult1,
        gamma=gamma,
        main_bound=main,
        refined_bound=refined,
        alpha=alpha,
        k=k,
        verdicts=verdicts,
        core=core,
    )
