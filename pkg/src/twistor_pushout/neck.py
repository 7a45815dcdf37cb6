"""Circle-bundle arithmetic for the fixed-phase boundary of the local model t = uv.

Near the double locus the degeneration looks like {uv = t}; as |t| -> 0 the
two branch phases survive subject to rho1 * rho2 = e^{i theta}, and the locus
of compatible phase pairs over the quadric is a principal circle bundle.
After choosing the first branch, it is the unit circle bundle of the normal
line bundle of the quadric, whose class is z = b - w (bidegree (1, -1); see
the discussion in :mod:`twistor_pushout.pushout`).  Restricting to a fibre of
the contraction gives the Hopf bundle, and character quotients of torus
bundles produce the familiar lens-space tags.

Phases are exact unit Gaussian rationals; moduli are carried as squared
moduli so every identity is checked with exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gaussian import GaussianScalar
from .quadric import Bidegree, QuadricClass, class_z

QUADRIC = "quadric"
RULING_FIBRE = "ruling_fibre"
CURVE = "curve_on_quadric"


@dataclass(frozen=True)
class CircleBundleClass:
    """A circle bundle recorded by its base tag and first Chern class."""

    base: str
    c1_class: QuadricClass | None = None
    c1_int: int | None = None
    curve: Bidegree | None = None

    def __post_init__(self) -> None:
        if self.base == QUADRIC:
            if self.c1_class is None or self.c1_int is not None:
                raise ValueError("quadric-based bundles carry a quadric class")
        elif self.base == RULING_FIBRE:
            if self.c1_int is None or self.c1_class is not None:
                raise ValueError("fibre-based bundles carry an integer class")
        elif self.base == CURVE:
            if self.c1_int is None or self.curve is None:
                raise ValueError("curve-based bundles carry an integer class and a bidegree")
        else:
            raise ValueError(f"unknown base tag {self.base!r}")

    @classmethod
    def over_quadric(cls, c1: QuadricClass) -> "CircleBundleClass":
        return cls(QUADRIC, c1_class=c1)

    @classmethod
    def over_fibre(cls, c1: int) -> "CircleBundleClass":
        return cls(RULING_FIBRE, c1_int=int(c1))

    @classmethod
    def over_curve(cls, c1: int, curve: Bidegree) -> "CircleBundleClass":
        return cls(CURVE, c1_int=int(c1), curve=curve)


def kn_fixed_phase_bundle() -> CircleBundleClass:
    """The fixed-phase circle bundle over the quadric: the unit normal circle
    bundle of the first branch, with class z = b - w."""
    return CircleBundleClass.over_quadric(class_z())


def raw_fibre_pairing(bundle: CircleBundleClass) -> int:
    """Signed pairing of the bundle class with the contraction-fibre class b."""
    if bundle.base != QUADRIC:
        raise ValueError("only quadric-based bundles restrict to a ruling fibre")
    b_coeff, w_coeff = bundle.c1_class.coeffs_bw()
    return w_coeff  # (m*b + n*w) . b = n


def restrict_to_ruling_fibre_bundle(bundle: CircleBundleClass) -> CircleBundleClass:
    """Restrict to a contraction fibre, with the orientation convention that
    makes the fixed-phase bundle's value +1 (its raw pairing is -1)."""
    return CircleBundleClass.over_fibre(-raw_fibre_pairing(bundle))


def restrict_to_curve(bundle: CircleBundleClass, curve: Bidegree) -> CircleBundleClass:
    """Restrict to a curve of the given bidegree; the class is the intersection
    pairing of the bundle class with a*b + b*w."""
    if bundle.base != QUADRIC:
        raise ValueError("only quadric-based bundles restrict to curves")
    m, n = bundle.c1_class.coeffs_bw()
    degree = m * curve.n + n * curve.m
    return CircleBundleClass.over_curve(degree, curve)


def character_quotient(chern_vector: tuple[int, int], character: tuple[int, int]) -> int:
    """First Chern class of the circle bundle associated to a torus bundle by
    the character (a, b): a*c1_first + b*c1_second."""
    a, b = character
    c1, c2 = chern_vector
    return a * c1 + b * c2


def lens_space_of(c1: int) -> str:
    """Total space of the circle bundle over the 2-sphere with the given class."""
    n = abs(int(c1))
    if n == 0:
        return "S2xS1"
    if n == 1:
        return "S3"
    if n == 2:
        return "RP3"
    return f"L({n},1)"


def antidiagonal_quotient_over_fibre(
    character: tuple[int, int] = (1, 1),
    chern_vector: tuple[int, int] | None = None,
) -> str:
    """Quotient of the fibrewise torus bundle (fixed-phase circle x Hopf) by a character.

    The default anti-diagonal character on the Chern vector (1, 1) gives class
    2, hence the three-manifold RP3; the diagonal character gives 0, hence
    S2 x S1.
    """
    if chern_vector is None:
        kn_on_fibre = restrict_to_ruling_fibre_bundle(kn_fixed_phase_bundle())
        chern_vector = (kn_on_fibre.c1_int, 1)  # second factor: the Hopf bundle
    return lens_space_of(character_quotient(chern_vector, character))


@dataclass(frozen=True)
class PhasePair:
    """Compatible branch phases: rho1 * rho2 = e^{i theta}, all of unit modulus."""

    rho1: GaussianScalar
    rho2: GaussianScalar
    theta_unit: GaussianScalar

    def __post_init__(self) -> None:
        for name, value in (("rho1", self.rho1), ("rho2", self.rho2), ("theta", self.theta_unit)):
            if not value.is_unit():
                raise ValueError(f"{name} must have unit squared modulus")
        if self.rho1 * self.rho2 != self.theta_unit:
            raise ValueError("phase pair must satisfy rho1 * rho2 = theta")

    def to_json_dict(self) -> dict:
        return {"rho1": self.rho1.to_json_dict(), "rho2": self.rho2.to_json_dict()}


def phase_solve(theta_unit: GaussianScalar, rho2: GaussianScalar) -> PhasePair:
    """Solve rho1 * rho2 = theta for rho1 by exact division."""
    if not theta_unit.is_unit() or not rho2.is_unit():
        raise ValueError("phase_solve requires unit inputs")
    return PhasePair(theta_unit / rho2, rho2, theta_unit)


@dataclass(frozen=True)
class BranchCoordinate:
    """One branch coordinate of a neck point: squared modulus and phase."""

    modulus_sq: Fraction
    phase: GaussianScalar


def neck_point(
    rho_sq: Fraction | int, theta_unit: GaussianScalar, eta: GaussianScalar
) -> tuple[BranchCoordinate, BranchCoordinate]:
    """The point u = sqrt(rho) theta/eta, v = sqrt(rho) eta of the equal-modulus neck.

    Returned symbolically as (squared modulus, phase) per branch, so the
    identities |u|^2 = |v|^2 = rho and phase(u)*phase(v) = theta are exact.
    The phases do not depend on rho: the neck retracts onto the fixed-phase
    circle without moving them.
    """
    rho_sq = Fraction(rho_sq)
    if rho_sq < 0:
        raise ValueError("squared modulus must be non-negative")
    if not theta_unit.is_unit() or not eta.is_unit():
        raise ValueError("neck_point requires unit phases")
    u = BranchCoordinate(rho_sq, theta_unit / eta)
    v = BranchCoordinate(rho_sq, eta)
    if u.phase * v.phase != theta_unit:
        raise AssertionError("phase product invariant violated")
    return u, v


@dataclass(frozen=True)
class PhaseDecoration:
    """A compatible phase pair for each point of a finite subscheme of the
    double locus, at a fixed angle."""

    theta_unit: GaussianScalar
    points: tuple[tuple[str, PhasePair], ...]

    def to_json_dict(self) -> dict:
        return {
            "theta": self.theta_unit.to_json_dict(),
            "points": [
                {"id": point_id, **pair.to_json_dict()} for point_id, pair in self.points
            ],
        }


def phase_decoration(
    point_ids: list[str],
    theta_unit: GaussianScalar,
    eta_choices: list[GaussianScalar],
) -> PhaseDecoration:
    """Decorate each listed point with the phase pair solved from its eta."""
    if len(point_ids) != len(eta_choices):
        raise ValueError("need exactly one eta per point")
    pairs = tuple(
        (str(point_id), phase_solve(theta_unit, eta))
        for point_id, eta in zip(point_ids, eta_choices)
    )
    return PhaseDecoration(theta_unit, pairs)
