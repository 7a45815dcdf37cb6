"""The smooth quadric surface P1 x P1: divisor classes, ruling swap, cohomology.

The intersection ring has one generator per ruling, written ``b`` (fibre of
the projection to the blown-up line) and ``w`` (fibre of the other ruling),
with b^2 = w^2 = 0 and b.w = [pt].  The alternative presentation basis uses
z := b - w, so b = z + w; classes can be displayed in either basis but are
stored internally in (b, w) coordinates.

Line-bundle cohomology on the quadric is a product of P1 factors, so the
dimensions come in closed form rather than from complexes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .rings import DegreeError, GradedMap, GradedRing, RingElement

BW = "bw"
ZW = "zw"

_QUADRIC_PRODUCTS = {
    (1, 0, 1, 0): (0,),  # b.b
    (1, 0, 1, 1): (1,),  # b.w = [pt]
    (1, 1, 1, 1): (0,),  # w.w
}


def quadric_ring() -> GradedRing:
    """The intersection ring of P1 x P1 with its degree functional."""
    return GradedRing(
        top_degree=2,
        basis_labels=[["1"], ["b", "w"], ["pt"]],
        products=_QUADRIC_PRODUCTS,
        degree_functional=[1],
        name="CH(P1xP1)",
    )


_RING = quadric_ring()


def ruling_swap_map(ring: GradedRing | None = None) -> GradedMap:
    """The ring isomorphism exchanging the two rulings (b <-> w, fixing 1 and pt).

    The two exceptional quadrics of a glued pair are identified through this
    swap; since it is an involution, pushforward and pullback coincide.
    """
    ring = ring if ring is not None else _RING
    return GradedMap(
        ring,
        ring,
        shift=0,
        matrices={0: [[1]], 1: [[0, 1], [1, 0]], 2: [[1]]},
        is_ring_hom=True,
        name="ruling swap",
    )


_SWAP = ruling_swap_map(_RING)


@dataclass(frozen=True)
class Bidegree:
    """A divisor class m*b + n*w recorded by its pair of integers."""

    m: int
    n: int

    def as_class(self) -> "QuadricClass":
        return QuadricClass.from_bw(self.m, self.n)


@dataclass(frozen=True)
class QuadricClass:
    """An element of the quadric ring, displayable in the (b,w) or (z,w) basis.

    ``basis_mode`` is presentation only: equality and arithmetic ignore it, and
    the round trip between the two bases is the identity.
    """

    element: RingElement
    basis_mode: str = BW

    def __post_init__(self) -> None:
        if self.basis_mode not in (BW, ZW):
            raise ValueError(f"unknown basis mode {self.basis_mode!r}")
        if self.element.ring != _RING:
            raise ValueError("QuadricClass elements must live in the quadric ring")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "QuadricClass":
        return cls(_RING.zero())

    @classmethod
    def one(cls) -> "QuadricClass":
        return cls(_RING.one())

    @classmethod
    def point(cls, multiplicity: int = 1) -> "QuadricClass":
        return cls(_RING.homogeneous(2, [multiplicity]))

    @classmethod
    def from_bw(cls, b: int = 0, w: int = 0) -> "QuadricClass":
        return cls(_RING.homogeneous(1, [b, w]))

    @classmethod
    def from_zw(cls, z: int = 0, w: int = 0) -> "QuadricClass":
        # z = b - w, so  z*z_coeff + w*w_coeff = z_coeff*b + (w_coeff - z_coeff)*w.
        return cls(_RING.homogeneous(1, [z, w - z]), basis_mode=ZW)

    # -- presentation ----------------------------------------------------------

    def coeffs_bw(self) -> tuple[int, int]:
        b, w = self.element.degree_part(1)
        return b, w

    def coeffs_zw(self) -> tuple[int, int]:
        b, w = self.coeffs_bw()
        return b, b + w

    def in_mode(self, mode: str) -> "QuadricClass":
        if mode not in (BW, ZW):
            raise ValueError(f"unknown basis mode {mode!r}")
        return replace(self, basis_mode=mode)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "QuadricClass") -> "QuadricClass":
        return QuadricClass(self.element + other.element, self.basis_mode)

    def __sub__(self, other: "QuadricClass") -> "QuadricClass":
        return QuadricClass(self.element - other.element, self.basis_mode)

    def __neg__(self) -> "QuadricClass":
        return QuadricClass(-self.element, self.basis_mode)

    def __mul__(self, other):
        if isinstance(other, QuadricClass):
            return QuadricClass(self.element * other.element, self.basis_mode)
        if isinstance(other, int):
            return QuadricClass(self.element * other, self.basis_mode)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadricClass):
            return NotImplemented
        return self.element == other.element  # basis mode is cosmetic

    def __hash__(self) -> int:
        return hash(self.element.coeffs)

    def is_zero(self) -> bool:
        return self.element.is_zero()

    def __str__(self) -> str:
        if self.basis_mode == BW:
            return str(self.element)
        unit = self.element.degree_part(0)[0]
        z, w = self.coeffs_zw()
        pt = self.element.degree_part(2)[0]
        terms = []
        if unit:
            terms.append(str(unit))
        for c, label in ((z, "z"), (w, "w"), (pt, "zw")):
            if c == 1:
                terms.append(label)
            elif c == -1:
                terms.append(f"-{label}")
            elif c:
                terms.append(f"{c}*{label}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def class_b() -> QuadricClass:
    return QuadricClass.from_bw(1, 0)


def class_w() -> QuadricClass:
    return QuadricClass.from_bw(0, 1)


def class_z() -> QuadricClass:
    return QuadricClass.from_bw(1, -1)


def hyperplane_class() -> QuadricClass:
    """The class b + w of the (1,1) polarization (a generic twistor-line section)."""
    return QuadricClass.from_bw(1, 1)


def ruling_swap_pushforward(x: QuadricClass) -> QuadricClass:
    """Push a class through the ruling-exchanging identification (b <-> w)."""
    return QuadricClass(_SWAP.apply(x.element), x.basis_mode)


def ruling_swap_pullback(x: QuadricClass) -> QuadricClass:
    """Inverse of :func:`ruling_swap_pushforward`; the swap is an involution."""
    return ruling_swap_pushforward(x)


def intersection_number(x: QuadricClass, y: QuadricClass) -> int:
    """Coefficient of [pt] in the product of two degree-1 classes."""
    for cls in (x, y):
        if not cls.is_zero() and cls.element.homogeneous_degree() != 1:
            raise DegreeError("intersection numbers are defined for degree-1 classes")
    return _RING.zero_cycle_degree(x.element * y.element)


def arithmetic_genus(divisor: Bidegree) -> int:
    """Arithmetic genus of a curve of class m*b + n*w: (m-1)(n-1) by adjunction."""
    return (divisor.m - 1) * (divisor.n - 1)


def canonical_class() -> QuadricClass:
    return QuadricClass.from_bw(-2, -2)


def restrict_to_ruling_fibre(divisor: Bidegree, ruling: str) -> int:
    """Degree of O(m, n) on a fibre of the selected ruling.

    ``"g"`` selects fibres of the projection to the blown-up line (class b,
    where the restriction has degree n); ``"other"`` selects the opposite
    ruling (degree m).
    """
    if ruling == "g":
        return divisor.n
    if ruling == "other":
        return divisor.m
    raise ValueError(f"unknown ruling selector {ruling!r}")


def line_bundle_cohomology(a: int, b: int) -> tuple[int, int, int]:
    """(h0, h1, h2) of O(a, b) on the quadric, via the product of P1 factors."""
    def p(n: int) -> int:
        return max(0, n + 1)

    def q(n: int) -> int:
        return max(0, -n - 1)

    return (p(a) * p(b), p(a) * q(b) + q(a) * p(b), q(a) * q(b))
