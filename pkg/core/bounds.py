# core/bounds.py
"""Quadratic RTD bound machinery and the constructive teaching-set descent.

Notation follows the (x, y)-class language: a class is an (x, y)-class when every
projection on at most ``x`` coordinates shows at most ``y`` patterns. With
``y = floor(alpha**x)`` for a fixed ``alpha`` in (1, 2), one step of the recursion
fixes ``k`` coordinates to their rarest nonempty pattern and lands in an
(x - 1, floor(alpha**(x - 1)))-class.
"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field

from .concepts import InstanceSet, Pattern, extract, restrict
from .exceptions import ConvergenceError, InputError, InvariantError, ParameterError
from .measures import TeachingSet, is_teaching_set, is_xy_class, vc_dimension

logger = logging.getLogger(__name__)

DEFAULT_LAMBDA_STAR = 4.71607
DEFAULT_ALPHA = (math.e * DEFAULT_LAMBDA_STAR) ** (1 / DEFAULT_LAMBDA_STAR)

# Coefficients of the closed-form quadratic bound 39.3752 d^2 - 3.6330 d.
QUADRATIC_COEFFICIENT = 39.3752
LINEAR_COEFFICIENT = -3.6330

LAMBDA_TOLERANCE = 1e-9
LAMBDA_CEILING = 200.0
PARAMS_TOLERANCE = 1e-9


def _check_alpha(alpha):
    if not 1 < alpha < 2:
        raise ParameterError(f"alpha must lie in (1, 2), got {alpha}")


def _lambda_gap(lam, alpha):
    return lam * math.log(alpha) - math.log(lam) - 1


def chain_y(x, alpha):
    return math.floor(alpha ** x)


@dataclass(frozen=True)
class BoundParams:
    alpha: float
    lambda_star: float
    d: int
    x: int

    def __post_init__(self):
        _check_alpha(self.alpha)
        if self.lambda_star < 1:
            raise ParameterError(f"lambda* must be at least 1, got {self.lambda_star}")
        if _lambda_gap(self.lambda_star, self.alpha) < -PARAMS_TOLERANCE:
            raise ParameterError(
                f"lambda*={self.lambda_star} does not satisfy "
                f"lambda*ln(alpha) - ln(lambda*) - 1 >= 0 for alpha={self.alpha}"
            )
        if self.d < 1:
            raise ParameterError(f"d must be at least 1, got {self.d}")
        if self.x < self.lambda_star * self.d:
            raise ParameterError(f"x={self.x} is below lambda*·d={self.lambda_star * self.d}")

    @classmethod
    def for_alpha(cls, d, alpha=None, x=None):
        alpha = DEFAULT_ALPHA if alpha is None else alpha
        lam = lambda_star(alpha)
        if x is None:
            x = xy_threshold(d, alpha)
        return cls(alpha=alpha, lambda_star=lam, d=d, x=x)


@dataclass(frozen=True)
class ChainStep:
    x: int
    y: int
    k: int | None = None
    added: int | None = None
    restriction_size: int | None = None


@dataclass
class BoundReport:
    d: int
    alpha: float
    lambda_star: float
    x_start: int
    f_bound: float
    rtd_bound: float
    chain: list = field(default_factory=list)
    ts_size: int | None = None

    @property
    def k_values(self):
        return [step.k for step in self.chain]


@dataclass(frozen=True)
class MinRestriction:
    instances: InstanceSet
    pattern: Pattern
    size: int


@dataclass(frozen=True)
class ConstructiveResult:
    concept: int
    teaching_set: TeachingSet
    trace: BoundReport


def xy_increment(x, y, z):
    """Coordinates fixed by one recursion step: ceil(((y+1)(x-1)+1) / (2y-z+2))."""
    if min(x, y, z) < 1:
        raise ParameterError(f"x, y, z must be positive integers, got ({x}, {y}, {z})")
    if y > 2 ** x - 1:
        raise ParameterError(f"y={y} exceeds 2^x - 1 = {2 ** x - 1}")
    if z > 2 * y + 1:
        raise ParameterError(f"z={z} exceeds 2y + 1 = {2 * y + 1}")
    numerator = (y + 1) * (x - 1) + 1
    denominator = 2 * y - z + 2
    return -(-numerator // denominator)


# Name under which the increment is documented.
lemma2_increment = xy_increment


def f_quadratic_bound(x, alpha):
    """Upper bound on the best-case teaching dimension of (x, floor(alpha^x))-classes."""
    _check_alpha(alpha)
    if x < 1:
        raise ParameterError(f"x must be a positive integer, got {x}")
    u = x - 1
    return u * u / (4 - 2 * alpha) + (3 - 2 * alpha) / (4 - 2 * alpha) * u


def lambda_star(alpha, tol=LAMBDA_TOLERANCE):
    """Smallest lambda >= 1 with lambda·ln(alpha) - ln(lambda) - 1 >= 0, by bisection.

    The gap is negative at 1 for alpha < e and crosses zero once beyond its minimum,
    so doubling finds a bracket and bisection keeps the nonnegative end.
    """
    _check_alpha(alpha)
    if tol <= 0:
        raise ParameterError(f"tolerance must be positive, got {tol}")
    lo, hi = 1.0, 2.0
    while _lambda_gap(hi, alpha) < 0:
        if hi >= LAMBDA_CEILING:
            raise ConvergenceError(
                f"no root of the lambda* condition below {LAMBDA_CEILING} for alpha={alpha}"
            )
        lo, hi = hi, min(2 * hi, LAMBDA_CEILING)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _lambda_gap(mid, alpha) >= 0:
            hi = mid
        else:
            lo = mid
    return hi


def xy_threshold(d, alpha):
    """Smallest integer x >= lambda*·d; classes of VC dimension d are (x, floor(alpha^x))-classes."""
    if d < 1:
        raise ParameterError(f"d must be at least 1, got {d}")
    x = math.ceil(lambda_star(alpha) * d)
    if not sauer_exponential_fits(x, d, alpha):
        raise InvariantError(f"(e·{x}/{d})^{d} exceeds alpha^{x} for alpha={alpha}")
    return x


def sauer_exponential_fits(x, d, alpha):
    """(e·x/d)^d <= alpha^x, compared in log space."""
    return d * (1 + math.log(x / d)) <= x * math.log(alpha) + 1e-12


def rtd_upper_bound(d, params=None):
    if d < 1:
        raise ParameterError(f"d must be at least 1, got {d}")
    if params is None:
        alpha, lam = DEFAULT_ALPHA, DEFAULT_LAMBDA_STAR
        u = lam * d
        return u * u / (4 - 2 * alpha) + (3 - 2 * alpha) / (4 - 2 * alpha) * u
    if params.d != d:
        raise ParameterError(f"params were built for d={params.d}, not d={d}")
    return f_quadratic_bound(params.x, params.alpha)


def sauer_bound(m, d):
    if m < 1 or d < 0:
        raise ParameterError(f"need m >= 1 and d >= 0, got m={m}, d={d}")
    return sum(math.comb(m, k) for k in range(min(d, m) + 1))


def sauer_exp_bound(m, d):
    if d < 1 or m <= d:
        raise ParameterError(f"the closed form needs d >= 1 and m > d, got m={m}, d={d}")
    return (math.e * m / d) ** d


def bound_chain(d, alpha=None):
    """The (x, floor(alpha^x)) chain from the threshold down to 2 with each step's k."""
    params = BoundParams.for_alpha(d, alpha)
    chain = []
    for x in range(params.x, 1, -1):
        chain.append(ChainStep(
            x=x,
            y=chain_y(x, params.alpha),
            k=xy_increment(x - 1, chain_y(x - 1, params.alpha), chain_y(x, params.alpha)),
        ))
    f_bound = f_quadratic_bound(params.x, params.alpha)
    return BoundReport(
        d=d,
        alpha=params.alpha,
        lambda_star=params.lambda_star,
        x_start=params.x,
        f_bound=f_bound,
        rtd_bound=rtd_upper_bound(d) if alpha is None else rtd_upper_bound(d, params),
        chain=chain,
    )


def find_min_restriction(concept_class, k, free=None):
    """Among |Y| = k and realized patterns b, the smallest nonempty ``C^{Y,b}``.

    ``free`` limits Y to a subset of coordinates (default: all of [n]). Ties go to
    the lexicographically smallest (Y, b): Y compared as increasing coordinate
    tuples, b as a label string.
    """
    n = concept_class.n
    if not concept_class.concepts:
        raise InputError("cannot restrict the empty class")
    free = InstanceSet.full(n) if free is None else free
    if not 1 <= k <= len(free):
        raise ParameterError(f"k={k} must lie in [1, {len(free)}]")
    best = None
    for coordinates in itertools.combinations(free.coordinates(), k):
        mask = 0
        for i in coordinates:
            mask |= 1 << (n - i)
        counts = Counter(c & mask for c in concept_class.concepts)
        value, size = min(counts.items(), key=lambda item: (item[1], item[0]))
        if best is None or size < best[2]:
            best = (mask, value, size)
    mask, value, size = best
    return MinRestriction(
        instances=InstanceSet(n, mask),
        pattern=Pattern(k, extract(value, mask)),
        size=size,
    )


def constructive_teaching_set(concept_class, alpha=None):
    """Descend through minimum restrictions until a single concept remains.

    Starting from x = xy_threshold(d, alpha), each step fixes the k coordinates of
    the smallest nonempty restriction, asserts the result is an
    (x - 1, floor(alpha^(x - 1)))-class and continues with x - 1. The fixed
    coordinates, labelled by the surviving concept, teach it.
    """
    if not concept_class.concepts:
        raise InputError("cannot teach from the empty class")
    if alpha is not None:
        _check_alpha(alpha)
    n = concept_class.n
    d = vc_dimension(concept_class)
    if len(concept_class) == 1:
        concept = concept_class.concepts[0]
        trace = BoundReport(d=0, alpha=alpha or DEFAULT_ALPHA, lambda_star=0.0, x_start=0,
                            f_bound=0.0, rtd_bound=0.0, ts_size=0)
        return ConstructiveResult(concept, TeachingSet(InstanceSet(n, 0), Pattern(0)), trace)

    params = BoundParams.for_alpha(d, alpha)
    alpha = params.alpha
    x = params.x
    if not is_xy_class(concept_class, x, chain_y(x, alpha)):
        raise InvariantError(f"class of VC dimension {d} is not an ({x}, {chain_y(x, alpha)})-class")

    current = concept_class
    free = InstanceSet.full(n)
    chain = []
    while len(current) > 1 and x >= 2:
        y, z = chain_y(x - 1, alpha), chain_y(x, alpha)
        k = xy_increment(x - 1, y, z)
        step = min(k, len(free))
        best = find_min_restriction(current, step, free=free)
        current = restrict(current, best.instances, best.pattern)
        if not is_xy_class(current, x - 1, y):
            raise InvariantError(f"restriction at x={x} is not an ({x - 1}, {y})-class")
        free = InstanceSet(n, free.mask & ~best.instances.mask)
        chain.append(ChainStep(x=x, y=z, k=k, added=step, restriction_size=best.size))
        logger.debug(f"x={x}: fixed {step} coordinates, {best.size} concepts remain")
        x -= 1

    if len(current) != 1:
        raise InvariantError(f"descent stopped at x={x} with {len(current)} concepts")
    concept = current.concepts[0]
    taught = InstanceSet(n, InstanceSet.full(n).mask & ~free.mask)
    teaching_set = TeachingSet(taught, Pattern(len(taught), extract(concept, taught.mask)))
    if not is_teaching_set(concept, concept_class, taught):
        raise InvariantError("constructed instances do not distinguish the surviving concept")

    trace = BoundReport(
        d=d,
        alpha=alpha,
        lambda_star=params.lambda_star,
        x_start=params.x,
        f_bound=f_quadratic_bound(params.x, alpha),
        rtd_bound=rtd_upper_bound(d) if alpha == DEFAULT_ALPHA else rtd_upper_bound(d, params),
        chain=chain,
        ts_size=len(teaching_set),
    )
    if len(teaching_set) > trace.rtd_bound:
        raise InvariantError(f"teaching set of size {len(teaching_set)} exceeds {trace.rtd_bound}")
    logger.info(f"Constructed a teaching set of size {len(teaching_set)} for d={d} in {len(chain)} steps")
    return ConstructiveResult(concept, teaching_set, trace)
