"""Sector length distributions: brute force, combination, decay, thresholds.

The SLD of an n-qubit graph state counts stabilizer elements by
symplectic weight: A_k = #{r : swt(r, adjacency*r) = k}.  The counts
are produced by the enumeration kernel (see :mod:`gsv.kernel`)
component by component and merged by discrete convolution, which keeps
the cost bound by the largest connected component.

All counts are exact Python integers, so convolutions of many
components stay exact beyond 2^53.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import kernel
from .errors import AutoLimitExceeded, DomainError, HardCapExceeded
from .graph import Graph, SldType

HARD_CAP = 28
AUTO_LIMIT = 16

# brute-force invocation counter, for cache instrumentation in tests
_brute_force_calls = 0


def brute_force_call_count() -> int:
    return _brute_force_calls


def reset_brute_force_call_count() -> None:
    global _brute_force_calls
    _brute_force_calls = 0


class ComputePolicy(Enum):
    AUTO = "auto"
    REQUIRES_FORCE = "requires_force"


@dataclass(frozen=True)
class SLD:
    """Integer sector lengths A_0..A_n of an n-qubit state."""

    n: int
    A: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"qubit count must be nonnegative, got {self.n}")
        if len(self.A) != self.n + 1:
            raise DomainError(f"expected {self.n + 1} sector lengths, got {len(self.A)}")
        if any(a < 0 for a in self.A):
            raise DomainError("sector lengths must be nonnegative")
        if self.A[0] != 1:
            raise DomainError(f"A_0 must be 1, got {self.A[0]}")
        if sum(self.A) != 1 << self.n:
            raise DomainError(f"sector lengths must sum to 2^{self.n}, got {sum(self.A)}")

    @property
    def sld_type(self) -> SldType:
        if all(a == 0 for a in self.A[1::2]):
            return SldType.TYPE_II
        return SldType.TYPE_I

    def to_json(self) -> dict:
        return {"n": self.n, "A": list(self.A), "type": self.sld_type.value}


@dataclass(frozen=True)
class DecayedSLD:
    """Sector lengths after n single-qubit depolarizing channels."""

    n: int
    p: float
    values: tuple[float, ...]

    def to_json(self) -> dict:
        return {"p": self.p, "values": list(self.values)}


@dataclass(frozen=True)
class ThresholdReport:
    """Three lower bounds on the entanglement-loss probability."""

    n_sector: float
    majorization: float
    distillation: float

    def to_json(self) -> dict:
        return {
            "nSector": self.n_sector,
            "majorization": self.majorization,
            "distillation": self.distillation,
        }


# -- computation -------------------------------------------------------------


def sld_bruteforce_connected(g: Graph, workers: int = 1) -> SLD:
    """Whole-graph enumeration of all 2^n index vectors.

    Callers normally pass a connected component; any graph is accepted.
    With workers > 1 the rank space is split into contiguous chunks
    whose partial histograms are summed, so the result is bit-identical
    for every worker count.
    """
    if g.n > HARD_CAP:
        raise HardCapExceeded(
            f"brute-force SLD is capped at {HARD_CAP} vertices, got {g.n}",
            size=g.n,
            limit=HARD_CAP,
        )
    global _brute_force_calls
    _brute_force_calls += 1
    total = 1 << g.n
    if workers <= 1:
        hist = kernel.histogram_range(g.rows, g.n, 0, total)
    else:
        bounds = [total * w // workers for w in range(workers + 1)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    lambda se: kernel.histogram_range(g.rows, g.n, se[0], se[1]),
                    zip(bounds, bounds[1:]),
                )
            )
        hist = [sum(col) for col in zip(*parts)]
    return SLD(g.n, tuple(hist))


def sld_combine(a: SLD, b: SLD) -> SLD:
    """SLD of a tensor product: discrete convolution of the two vectors."""
    n = a.n + b.n
    out = [0] * (n + 1)
    for j, aj in enumerate(a.A):
        if aj == 0:
            continue
        for k, bk in enumerate(b.A):
            out[j + k] += aj * bk
    return SLD(n, tuple(out))


def largest_component_size(g: Graph) -> int:
    return max(len(members) for members, _ in g.components())


def auto_compute_policy(g: Graph) -> ComputePolicy:
    """AUTO iff the largest connected component has at most 16 vertices."""
    if largest_component_size(g) <= AUTO_LIMIT:
        return ComputePolicy.AUTO
    return ComputePolicy.REQUIRES_FORCE


def ensure_computable(g: Graph, force: bool = False) -> None:
    """Enforce the compute policy: raise unless the SLD may be computed.

    Components above the hard cap are always refused; components above
    the auto limit are refused unless force is set.
    """
    largest = largest_component_size(g)
    if largest > HARD_CAP:
        raise HardCapExceeded(
            f"largest connected component has {largest} vertices, above the "
            f"hard cap of {HARD_CAP}; force cannot override this",
            size=largest,
            limit=HARD_CAP,
        )
    if largest > AUTO_LIMIT and not force:
        raise AutoLimitExceeded(
            f"largest connected component has {largest} vertices, above the "
            f"automatic limit of {AUTO_LIMIT}; pass force to compute anyway",
            size=largest,
            limit=AUTO_LIMIT,
        )


def sld_of_graph(g: Graph, workers: int = 1) -> SLD:
    """SLD via per-component enumeration folded with sld_combine."""
    result = SLD(0, (1,))
    for members, comp in g.components():
        if comp.n > HARD_CAP:
            raise HardCapExceeded(
                f"largest connected component has {comp.n} vertices, "
                f"above the hard cap of {HARD_CAP}",
                size=comp.n,
                limit=HARD_CAP,
            )
        result = sld_combine(result, sld_bruteforce_connected(comp, workers=workers))
    return result


# -- noise decay and thresholds ----------------------------------------------


def decay(sld: SLD, p: float) -> DecayedSLD:
    """Apply n depolarizing channels: values[k] = (1-p)^(2k) * A_k."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"depolarizing probability must be in [0,1], got {p!r}")
    factor = (1.0 - p) ** 2
    values = []
    scale = 1.0
    for a in sld.A:
        values.append(scale * a)
        scale *= factor
    return DecayedSLD(n=sld.n, p=p, values=tuple(values))


def threshold_n_sector(sld: SLD) -> float:
    """Largest p with (1-p)^(2n) * A_n > 1; zero when A_n <= 1."""
    if sld.n == 0 or sld.A[sld.n] <= 1:
        return 0.0
    return 1.0 - sld.A[sld.n] ** (-1.0 / (2 * sld.n))


def _majorization_poly(sld: SLD):
    coeffs = [(2 * k - sld.n) * a for k, a in enumerate(sld.A)]

    def g(x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    return g


def threshold_majorization(sld: SLD) -> float:
    """Largest p with sum_k (2k-n) (1-p)^(2k) A_k > 0.

    With x = (1-p)^2 the criterion is a polynomial g(x); g(0) = -n < 0,
    so when g(1) > 0 the largest root in [0,1] is bracketed by a
    downward sign scan (step 1e-3) and pinned by bisection to 1e-12.
    """
    if sld.n == 0:
        return 0.0
    g = _majorization_poly(sld)
    if g(1.0) <= 0.0:
        return 0.0
    step = 1e-3
    hi = 1.0
    lo = hi - step
    while lo > 0.0 and g(lo) > 0.0:
        hi = lo
        lo -= step
    lo = max(lo, 0.0)
    # bisection: g(lo) <= 0 < g(hi)
    while hi - lo > 1e-12:
        mid = (hi + lo) / 2
        if g(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    x_root = (hi + lo) / 2
    return 1.0 - math.sqrt(x_root)


def threshold_distillation(g: Graph) -> float:
    """1 - 2^(-2/(2 + max over edges of deg(i)+deg(j))); zero if edgeless."""
    pair = g.distillation_pair()
    if pair is None:
        return 0.0
    i, j = pair
    deg_sum = g.degree(i) + g.degree(j)
    return 1.0 - 2.0 ** (-2.0 / (2.0 + deg_sum))


def threshold_report(g: Graph, sld: SLD) -> ThresholdReport:
    return ThresholdReport(
        n_sector=threshold_n_sector(sld),
        majorization=threshold_majorization(sld),
        distillation=threshold_distillation(g),
    )


# -- closed forms and reference distributions --------------------------------


def edgeless_sld(n: int) -> SLD:
    """SLD of a fully separable (product) state: binomial coefficients."""
    if n < 0:
        raise DomainError(f"qubit count must be nonnegative, got {n}")
    return SLD(n, tuple(math.comb(n, k) for k in range(n + 1)))


def closed_form_ghz(n: int) -> SLD:
    """Sector lengths of the n-qubit GHZ class: binomials on even k plus
    2^(n-1) at k = n."""
    if n < 2:
        raise DomainError(f"GHZ closed form needs n >= 2, got {n}")
    a = [math.comb(n, k) if k % 2 == 0 else 0 for k in range(n + 1)]
    a[n] += 1 << (n - 1)
    return SLD(n, tuple(a))


def closed_form_ghz_tensor_zero(n: int, m: int) -> SLD:
    """Sector lengths of an m-qubit GHZ state padded with n-m fresh qubits."""
    if not 2 <= m <= n:
        raise DomainError(f"need 2 <= m <= n, got m={m}, n={n}")
    a = []
    for k in range(n + 1):
        val = (1 << (m - 1)) * math.comb(n - m, k - m) if k >= m else 0
        val += sum(
            math.comb(m, 2 * j) * math.comb(n - m, k - 2 * j)
            for j in range(k // 2 + 1)
        )
        a.append(val)
    return SLD(n, tuple(a))


def approximate_sld(n: int, isolated: int) -> tuple[float, ...]:
    """Binomial approximation 2^n C(n,k) p^k (1-p)^(n-k), p = (3n-I)/(4n)."""
    if n < 1:
        raise DomainError(f"qubit count must be positive, got {n}")
    if not 0 <= isolated <= n:
        raise DomainError(f"isolated-vertex count must be in 0..{n}, got {isolated}")
    p = (3 * n - isolated) / (4 * n)
    return tuple(
         2**n * math.comb(n, k) * p**k * (1 - p) ** (n - k) for k in range(n + 1)
    )


class WeightDistribution(Enum):
    TPB = "TPB"
    PAULI_GROUP = "PauliGroup"


def weight_probability(kind: WeightDistribution | str, n: int, k: int) -> Fraction:
    """Probability of drawing a weight-k operator uniformly from a tensor
    product basis (C(n,k)/2^n) or from the full Pauli group (C(n,k) 3^k/4^n)."""
    if isinstance(kind, str):
        try:
            kind = WeightDistribution(kind)
        except ValueError:
            raise DomainError(f"unknown weight distribution {kind!r}") from None
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    if kind is WeightDistribution.TPB:
        return Fraction(math.comb(n, k), 2**n)
    return Fraction(math.comb(n, k) * 3**k, 4**n)
