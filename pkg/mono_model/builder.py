"""
Relative model of Mono(m-planes, n-planes) over BSO(m) x BSO(n).

The base is the polynomial algebra on the Pontrjagin classes of BSO(n)
(`alpha_i`), of BSO(m) (`beta_j`) and the Euler classes that exist (`euler`
for n even, `euler_m` for m even). The fibre is the homogeneous space
SO(n)/SO(n-m), with exterior generators `gamma_k` of degree 4k - 1 and, for n
even, `sigma` of degree n - 1.
"""

from dataclasses import dataclass
from typing import Sequence

from app_settings import DifferentialMode
from decider_errors import InputError, ScopeError
from definitions import STEP_BY_KEY
from decider_logging import get_decider_logger, log_pipeline_step
from cdga import Element, FreeCDGA, GeneratorSet
from lift_solver import RelativeModel


@dataclass(frozen=True)
class MonoModelSpec:
    """
    Dimensions of the immersion problem M^m -> N^n.
    Attributes:
        m (int): Dimension of the source manifold, >= 1.
        n (int): Dimension of the target, n > m with n - m odd.
        differential_mode (DifferentialMode): How d(gamma_k) is chosen.
    """
    m: int
    n: int
    differential_mode: DifferentialMode = DifferentialMode.DUAL_CLASS

    def __post_init__(self):
        object.__setattr__(self, "differential_mode", DifferentialMode(self.differential_mode))
        if self.m < 1:
            raise InputError(f"The source dimension must be at least 1, got m = {self.m}")
        if self.n <= self.m:
            raise ScopeError(f"Need n > m, got m = {self.m}, n = {self.n}")
        if (self.n - self.m) % 2 == 0:
            raise ScopeError(f"Codimension n - m = {self.n - self.m} is even")
        if self.n == 2:
            raise ScopeError("n must be at least 3: for n = 2 the fibre is a circle, which is not simply "
                             "connected, and sigma would have degree 1", note=None)

    @property
    def n_even(self) -> bool:
        """Parity case: n even exactly when m is odd."""
        return self.n % 2 == 0

    @property
    def m_even(self) -> bool:
        return self.m % 2 == 0

    @property
    def alpha_count(self) -> int:
        return (self.n - 1) // 2

    @property
    def beta_count(self) -> int:
        return (self.m - 1) // 2


def fiber_range(spec: MonoModelSpec) -> range:
    """Indices k of the gamma_k generators: (n - m + 1)/2 through K."""
    return range((spec.n - spec.m + 1) // 2, spec.alpha_count + 1)


def base_generators(spec: MonoModelSpec) -> GeneratorSet:
    pairs = [(f"alpha_{i}", 4 * i) for i in range(1, spec.alpha_count + 1)]
    pairs += [(f"beta_{j}", 4 * j) for j in range(1, spec.beta_count + 1)]
    if spec.n_even:
        pairs.append(("euler", spec.n))
    if spec.m_even:
        pairs.append(("euler_m", spec.m))
    return GeneratorSet.of(pairs)


def fiber_generators(spec: MonoModelSpec) -> GeneratorSet:
    pairs = [(f"gamma_{k}", 4 * k - 1) for k in fiber_range(spec)]
    if spec.n_even:
        pairs.append(("sigma", spec.n - 1))
    return GeneratorSet.of(pairs)


def dual_class(k: int, alphas: Sequence[Element], betas: Sequence[Element],
               *, generators: GeneratorSet | None = None) -> Element:
    """
    Degree-4k part of (1 + alpha_1 + alpha_2 + ...) / (1 + beta_1 + beta_2 + ...).

    Computed term by term as p_k = alpha_k - sum_{i >= 1} beta_i p_{k-i} with
    p_0 = 1; entries beyond the end of either list count as zero.
    Args:
        k (int): Index, >= 1.
        alphas (Sequence[Element]): alpha_1, alpha_2, ... as elements.
        betas (Sequence[Element]): beta_1, beta_2, ... as elements.
        generators (GeneratorSet | None): Generator set to use when both lists are empty.
    Returns:
        Element: The dual class p_k.
    """
    if k <= 0:
        raise InputError(f"Dual classes are indexed from 1, got k = {k}")
    sample = next(iter(alphas), None) or next(iter(betas), None)
    gens = generators if generators is not None else (sample.gens if sample is not None else None)
    if gens is None:
        raise InputError("Pass `generators` when there are no alpha or beta classes")

    terms = [Element.one(gens)]
    for index in range(1, k + 1):
        current = alphas[index - 1] if index <= len(alphas) else Element.zero(gens)
        for i in range(1, min(index, len(betas)) + 1):
            current = current - betas[i - 1] * terms[index - i]
        terms.append(current)
    return terms[k]


def _pontrjagin_lists(spec: MonoModelSpec, base: FreeCDGA) -> tuple[list[Element], list[Element]]:
    alphas = [base.generator(f"alpha_{i}") for i in range(1, spec.alpha_count + 1)]
    betas = [base.generator(f"beta_{j}") for j in range(1, spec.beta_count + 1)]
    if spec.m_even:
        euler_m = base.generator("euler_m")
        betas.append(euler_m * euler_m)
    return alphas, betas


@log_pipeline_step(STEP_BY_KEY["BUILD_MODEL"])
def build_mono_model(spec: MonoModelSpec) -> RelativeModel:
    """
    Build the relative model (B ⊗ ΛV_F, d) for the given dimensions.

    In dual-class mode d(gamma_k) is the dual class p_k. In paper-literal mode
    it is beta_k - alpha_k for k <= (m - 1)/2 and alpha_k above. In both modes
    d(sigma) = euler. Every image is a closed base element.
    """
    log = get_decider_logger()
    base = FreeCDGA.with_zero_differential(base_generators(spec))
    fibre = fiber_generators(spec)
    alphas, betas = _pontrjagin_lists(spec, base)

    differentials: dict[str, Element] = {}
    for k in fiber_range(spec):
        if spec.differential_mode is DifferentialMode.DUAL_CLASS:
            image = dual_class(k, alphas, betas, generators=base.gens)
        elif k <= spec.beta_count:
            image = betas[k - 1] - alphas[k - 1]
        else:
            image = alphas[k - 1]
        differentials[f"gamma_{k}"] = image
    if spec.n_even:
        differentials["sigma"] = base.generator("euler")

    log.debug(f"Mono model for m = {spec.m}, n = {spec.n}: base {list(base.gens.names)}, "
              f"fibre {list(fibre.names)}")
    return RelativeModel.build(base, fibre, differentials, linear_through=max(
        (g.degree for g in fibre), default=0))


def obstruction_degrees(spec: MonoModelSpec) -> list[int]:
    """Degrees where exactness is tested: 4k per gamma_k, plus n for sigma when n is even."""
    degrees = [4 * k for k in fiber_range(spec)]
    if spec.n_even:
        degrees.append(spec.n)
    return sorted(degrees)


def model_cohomology_dimensions(model: RelativeModel, through: int) -> list[int]:
    """Dimensions of H^k of the total algebra for k = 0..through."""
    total = model.total
    return [total.cohomology_dimension(k) for k in range(through + 1)]
