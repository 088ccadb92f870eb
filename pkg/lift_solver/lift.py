"""
Decide whether a map from a base model extends over a relative model.

Given a relative model (B ⊗ ΛW_F, d), a target model X and a dga map
phi: B -> X, look for psi: B ⊗ ΛW_F -> X restricting to phi. Optionally a
square is imposed as well: maps f: B ⊗ ΛW_F -> A and i: X -> A, and psi must
satisfy f = i∘psi on the fibre generators.

Every fibre generator whose obstruction degree |w| + 1 is within the degree
cutoff contributes one linear equation `d psi(w) = phi(m) + sum phi(m_l) psi(w_l)`;
above the cutoff the input model vanishes, so those generators are left
unconstrained and sent to zero.
"""

from dataclasses import dataclass, field
from typing import Any

from decider_errors import InputError, InternalError, UnsupportedInputError
from definitions import STEP_BY_KEY
from decider_logging import get_decider_logger, log_pipeline_step
from exact_linalg import (AffineSubspaceQ, RationalMatrix, Vector, intersect_affine, solve_affine,
                          zero_vector)
from cdga import CdgaMorphism, FinitePresentation, FreeCDGA
from .linear_system import LinearDgaSystem, solve_linear_dga_system
from .relative_model import AffineDifferential, RelativeModel


@dataclass(frozen=True)
class GeneratorLift:
    """
    Outcome for one fibre generator w.
    Attributes:
        name (str): Generator name.
        degree (int): |w|.
        obstruction_degree (int): |w| + 1, the degree of phi(dw).
        obstruction (tuple[Fraction, ...]): Coordinates of phi applied to the base part of dw.
        exact (bool): Whether the equation for w can be solved (True above the cutoff).
        witness (tuple[Fraction, ...] | None): Coordinates of psi(w) when a lift exists.
        above_cutoff (bool): The equation for w was not imposed.
    """
    name: str
    degree: int
    obstruction_degree: int
    obstruction: Vector
    exact: bool
    witness: Vector | None
    above_cutoff: bool


@dataclass(frozen=True)
class LiftResult:
    """
    Verdict of `decide_dga_lift`.
    Attributes:
        exists (bool): Whether psi exists.
        cutoff (int): Degree cutoff used.
        generators (tuple[GeneratorLift, ...]): Per-generator records, in fibre order.
            A coupled system stops at the first generator whose equation fails.
        witness (dict[str, Any]): psi(w) for every fibre generator when the lift exists.
        solutions (AffineSubspaceQ | None): All admissible values of the unknowns from the
            coupled solver (None on the per-generator path);
            empty when no lift exists.
        failing_generator (str | None): The generator blamed for a failure.
        diagnostic (str | None): One-line reason for a failure.
    """
    exists: bool
    cutoff: int
    generators: tuple[GeneratorLift, ...]
    witness: dict[str, Any] = field(default_factory=dict)
    solutions: AffineSubspaceQ | None = None
    failing_generator: str | None = None
    diagnostic: str | None = None

    def record(self, name: str) -> GeneratorLift:
        for entry in self.generators:
            if entry.name == name:
                return entry
        raise KeyError(name)


def default_cutoff(mx: Any, max_degree: int | None) -> int:
    """
    `max_degree` when given, else one above the top degree of a finite model.

    Classes above the cutoff are treated as zero, so a finite model may not be
    cut below its top degree.
    """
    if max_degree is not None:
        if max_degree < 1:
            raise InputError(f"Degree cutoff must be positive, got {max_degree}")
        if isinstance(mx, FinitePresentation) and max_degree < mx.top_degree:
            raise InputError(
                f"Degree cutoff {max_degree} is below the top degree {mx.top_degree} of the target model")
        return max_degree
    if isinstance(mx, FinitePresentation):
        return mx.top_degree + 1
    raise InputError("A degree cutoff is required when the target model is a free CDGA")


def _degree_matrix(morphism: CdgaMorphism, degree: int) -> RationalMatrix:
    """Matrix of a morphism out of a free CDGA on one degree, in monomial bases."""
    source: FreeCDGA = morphism.source
    columns = [
        morphism.target.vector(morphism.apply(source.element(degree, unit)), degree)
        for unit in RationalMatrix.identity(source.dimension(degree)).rows
    ]
    return RationalMatrix.from_columns(columns, morphism.target.dimension(degree))


def _check_inputs(model: RelativeModel, mx: Any, phi: CdgaMorphism,
                  ma: Any, f_constraint: CdgaMorphism | None, i: CdgaMorphism | None) -> bool:
    if phi.source.gens != model.base.gens:
        raise InputError("phi must be defined on the base of the relative model")
    if phi.target is not mx and phi.target != mx:
        raise InputError("phi must land in the target model")
    present = [value is not None for value in (ma, f_constraint, i)]
    if any(present) and not all(present):
        raise InputError("The constraint needs all of ma, f_constraint and i, or none of them")
    if not any(present):
        return False
    if f_constraint.source.gens != model.total_gens:
        raise InputError("f_constraint must be defined on the total relative model")
    if not isinstance(mx, FreeCDGA) or i.source.gens != mx.gens:
        raise InputError("i must be a morphism out of the target model, which must then be a free CDGA")
    if f_constraint.target != ma or i.target != ma:
        raise InputError("f_constraint and i must both land in ma")
    for gen in model.base.gens:
        lhs = f_constraint.image_of(gen.name)
        rhs = i.apply(phi.image_of(gen.name))
        if ma.vector(lhs, gen.degree) != ma.vector(rhs, gen.degree):
            raise InputError(f"f_constraint and i∘phi differ on the base generator {gen.name}")
    return True


def _constraint_space(mx: FreeCDGA, ma: Any, f_constraint: CdgaMorphism, i: CdgaMorphism,
                      name: str, degree: int) -> AffineSubspaceQ:
    """Values of psi(w) in X^|w| with i(psi(w)) = f(w)."""
    image = f_constraint.image_of(name)
    return solve_affine(_degree_matrix(i, degree), ma.vector(image, degree))


@log_pipeline_step(STEP_BY_KEY["DECIDE_LIFT"])
def decide_dga_lift(
    model: RelativeModel,
    mx: Any,
    phi: CdgaMorphism,
    ma: Any = None,
    f_constraint: CdgaMorphism | None = None,
    i: CdgaMorphism | None = None,
    max_degree: int | None = None,
) -> LiftResult:
    """
    Decide whether phi: B -> X extends to psi: B ⊗ ΛW_F -> X.

    Args:
        model (RelativeModel): The relative model.
        mx (GradedAlgebra): Target model X, a FreeCDGA or FinitePresentation.
        phi (CdgaMorphism): A validated map from the base to X.
        ma (GradedAlgebra | None): Model A of the constraint square.
        f_constraint (CdgaMorphism | None): f: B ⊗ ΛW_F -> A.
        i (CdgaMorphism | None): i: X -> A.
        max_degree (int | None): Degree cutoff; defaults to top degree + 1 for a finite X.
    Returns:
        LiftResult: The verdict with per-generator records and, when it exists, psi.
    Raises:
        InputError: Mismatched inputs or a partial constraint triple.
        UnsupportedInputError: A fibre differential below the cutoff that is not linear.
        InternalError: The computed witness fails re-validation.
    """
    log = get_decider_logger()
    cutoff = default_cutoff(mx, max_degree)
    constrained = _check_inputs(model, mx, phi, ma, f_constraint, i)

    gens = list(model.fiber_gens)
    parts: dict[str, AffineDifferential] = {}
    for gen in gens:
        if gen.degree + 1 > cutoff:
            continue
        part = model.decompose(gen.name)
        if part is None:
            raise UnsupportedInputError(
                f"d({gen.name}) is not linear in the fibre generators below the degree cutoff {cutoff}")
        parts[gen.name] = part

    # unknowns: generators of degree <= cutoff, sorted by degree; only those with an equation are constrained
    unknowns = sorted((g for g in gens if g.degree <= cutoff), key=lambda g: g.degree)
    position = {g.name: idx for idx, g in enumerate(unknowns)}
    obstructions = {
        name: phi.apply(part.constant) for name, part in parts.items()
    }
    decoupled = all(part.is_constant for part in parts.values())
    log.debug(f"{len(parts)} constrained fibre generators, cutoff {cutoff}, "
              f"{'decoupled' if decoupled else 'coupled'} system")

    if decoupled and not constrained:
        return _decide_decoupled(model, mx, phi, cutoff, parts, obstructions)

    constants = tuple(
        obstructions[g.name] if g.name in parts else mx.zero(g.degree + 1) for g in unknowns
    )
    coefficients = []
    for g in unknowns:
        row: list[Any] = [None] * len(unknowns)
        for other, coefficient in (parts[g.name].linear if g.name in parts else ()):
            row[position[other]] = phi.apply(coefficient)
        coefficients.append(tuple(row))
    system = LinearDgaSystem(
        ambient=mx,
        degrees=tuple(g.degree for g in unknowns),
        constants=constants,
        coefficients=tuple(coefficients),
        labels=tuple(g.name for g in unknowns),
        bound=cutoff,
    )

    restriction = AffineSubspaceQ.full(0)
    if constrained:
        for g in unknowns:
            space = _constraint_space(mx, ma, f_constraint, i, g.name, g.degree)
            if space.is_empty:
                log.info(f"No value of {g.name} is compatible with f = i∘psi")
                return _failure(model, mx, cutoff, obstructions, g.name,
                                diagnostic=f"i*^-1(f*({g.name})) is empty")
            restriction = restriction.direct_sum(space)
    else:
        restriction = AffineSubspaceQ.full(system.ambient_dim)

    solutions = intersect_affine(solve_linear_dga_system(system), restriction)
    if solutions.is_empty:
        failing = _first_failing(system, restriction)
        name = system.label(failing)
        log.info(f"The lifting equations first become inconsistent at {name}")
        return _failure(model, mx, cutoff, obstructions, name,
                        diagnostic=f"no solution of the equation for d({name})",
                        order=[g.name for g in unknowns], solutions=solutions)

    blocks = dict(zip((g.name for g in unknowns), system.split(solutions.point)))
    witness = {
        g.name: mx.element(g.degree, blocks[g.name]) if g.name in blocks else mx.zero(g.degree)
        for g in gens
    }
    _revalidate(model, mx, phi, witness, cutoff)
    if constrained:
        for g in unknowns:
            if not _constraint_space(mx, ma, f_constraint, i, g.name, g.degree).contains(blocks[g.name]):
                raise InternalError(f"Witness for {g.name} violates f = i∘psi")

    records = tuple(
        _record(mx, g, cutoff, obstructions.get(g.name), True, witness[g.name])
        for g in gens
    )
    return LiftResult(True, cutoff, records, witness, solutions)


def _decide_decoupled(model: RelativeModel, mx: Any, phi: CdgaMorphism, cutoff: int,
                      parts: dict[str, AffineDifferential], obstructions: dict[str, Any]) -> LiftResult:
    """Every d(w) lies in the base: the lift exists iff each phi(dw) is exact."""
    records = []
    witness: dict[str, Any] = {}
    failing = None
    for gen in model.fiber_gens:
        if gen.name not in parts:
            witness[gen.name] = mx.zero(gen.degree)
            records.append(_record(mx, gen, cutoff, None, True, witness[gen.name]))
            continue
        primitive = mx.is_exact(obstructions[gen.name])
        if primitive is None:
            failing = failing or gen.name
            records.append(_record(mx, gen, cutoff, obstructions[gen.name], False, None))
            continue
        witness[gen.name] = primitive if not _is_zero(primitive) else mx.zero(gen.degree)
        records.append(_record(mx, gen, cutoff, obstructions[gen.name], True, witness[gen.name]))

    if failing is not None:
        return LiftResult(False, cutoff, tuple(records),
                          solutions=AffineSubspaceQ.empty(0),
                          failing_generator=failing,
                          diagnostic=f"phi(d({failing})) is not exact")
    _revalidate(model, mx, phi, witness, cutoff)
    return LiftResult(True, cutoff, tuple(records), witness)


def _first_failing(system: LinearDgaSystem, restriction: AffineSubspaceQ) -> int:
    """Index of the first equation whose prefix has no solution."""
    for count in range(1, system.size + 1):
        if not system.constrains(count - 1):
            continue
        if intersect_affine(solve_linear_dga_system(system, count), restriction).is_empty:
            return count - 1
    raise InternalError("The full system is inconsistent but every prefix is solvable")


def _failure(model: RelativeModel, mx: Any, cutoff: int, obstructions: dict[str, Any],
             name: str, diagnostic: str,
             order: list[str] | None = None,
             solutions: AffineSubspaceQ | None = None) -> LiftResult:
    """Records up to and including the failing generator, in system order."""
    records = []
    by_name = {g.name: g for g in model.fiber_gens}
    for entry in order or [name]:
        gen = by_name[entry]
        failed = entry == name
        records.append(_record(mx, gen, cutoff, obstructions.get(entry), not failed, None))
        if failed:
            break
    return LiftResult(False, cutoff, tuple(records),
                      solutions=solutions if solutions is not None else AffineSubspaceQ.empty(0),
                      failing_generator=name, diagnostic=diagnostic)


def _record(mx: Any, gen: Any, cutoff: int, obstruction: Any, exact: bool, image: Any) -> GeneratorLift:
    degree = gen.degree + 1
    above = degree > cutoff
    if above:
        obstruction_vector: Vector = ()
    elif obstruction is None:
        obstruction_vector = zero_vector(mx.dimension(degree))
    else:
        obstruction_vector = mx.vector(obstruction, degree)
    witness = mx.vector(image, gen.degree) if image is not None else None
    return GeneratorLift(gen.name, gen.degree, degree, obstruction_vector,
                         exact or above, witness, above)


def _revalidate(model: RelativeModel, mx: Any, phi: CdgaMorphism,
                witness: dict[str, Any], cutoff: int) -> None:
    """Re-check the chain condition of psi independently of how it was found."""
    images = {g.name: phi.image_of(g.name) for g in model.base.gens}
    images.update(witness)
    try:
        CdgaMorphism.build(model.total, mx, images, validate_through=cutoff)
    except InputError as exc:
        raise InternalError(f"Lift failed re-validation: {exc}") from exc


def _is_zero(value: Any) -> bool:
    return bool(value.is_zero)

