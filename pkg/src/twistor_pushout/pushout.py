"""Blow-up of a twistor space along a twistor line, and the glued double ring.

Blowing up a compact twistor threefold along a twistor line (normal bundle
O(1)+O(1)) replaces the line with a quadric P1 x P1 and extends the
intersection ring by two exceptional generators: the divisor class ``Q`` of
the quadric and the pushed-forward fibre class ``j*b``.  The full product
table is determined by the base ring, the class of the blown-up line, and the
twistor degrees of the degree-1 generators.

One point deserves emphasis because the literature sometimes gets it wrong.
With centre normal bundle O(1)+O(1), the restriction O(Q)|_Q has bidegree
(1, -1), with degree -1 on the fibres of the contraction and degree +1 on
the sections, as adjunction forces:

    K_Q = (f*K_Z + 2Q)|_Q  =>  -2b - 2w = -4b + 2*c1(O(Q)|_Q).

Consequently Q restricts to z = b - w on the quadric (not to -(b + w)), the
self-intersection is Q^2 = 2*j*b - f*[line], and the compatible operational
pair built from the two exceptional divisors is ([Q1], -[Q2]).  With these
values the restriction map is a ring homomorphism, the projection formula
holds on all basis pairs, and the glued equalizer below is closed under
products; the (-(b+w)) convention breaks all three.

Two blown-up branches glue along their quadrics through the ruling swap, and
the operational classes of the glued space are the pairs whose restrictions
match; they form, degree by degree, a saturated integer lattice computed by
an exact kernel, with componentwise product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlin import Vector, hermite_row_basis, kernel_basis, lattice_contains, mat_mul
from .quadric import QuadricClass, quadric_ring, ruling_swap_map
from .rings import (
    DegreeError,
    GradedMap,
    GradedRing,
    RingElement,
    RingMismatchError,
    ring_from_json_dict,
)

TWISTOR_TOP = 3


@dataclass(frozen=True)
class TwistorChow:
    """Intersection ring of a compact twistor threefold plus blow-up data.

    ``twistor_degrees`` lists, per degree-1 basis class, its degree on the
    blown-up line; consistency with ``line_class`` under the degree functional
    is enforced because the blown-up product table is associative only then.
    """

    ring: GradedRing
    line_class: RingElement
    twistor_degrees: tuple[int, ...]
    point_class: RingElement

    def __post_init__(self) -> None:
        ring = self.ring
        if ring.top_degree != TWISTOR_TOP:
            raise ValueError("twistor base rings have top degree 3")
        if ring.degree_functional is None:
            raise ValueError("twistor base rings need a degree functional")
        if self.line_class.ring != ring or self.point_class.ring != ring:
            raise RingMismatchError("line and point classes must live in the base ring")
        if self.line_class.homogeneous_degree() != 2 or self.line_class.is_zero():
            raise ValueError("line_class must be a nonzero degree-2 class")
        if self.point_class.homogeneous_degree() != TWISTOR_TOP:
            raise ValueError("point_class must be a degree-3 class")
        if ring.zero_cycle_degree(self.point_class) != 1:
            raise ValueError("point_class must have degree 1")
        if len(self.twistor_degrees) != ring.rank(1):
            raise ValueError("one twistor degree per degree-1 basis class")
        for i, d in enumerate(self.twistor_degrees):
            alpha = ring.basis_element(1, i)
            if ring.zero_cycle_degree(alpha * self.line_class) != d:
                raise ValueError(
                    f"twistor degree of {ring.basis_labels[1][i]} is inconsistent "
                    f"with the line class"
                )

    def to_json_dict(self) -> dict:
        doc = self.ring.to_json_dict()
        doc["line_class"] = list(self.line_class.degree_part(2))
        doc["twistor_degrees"] = list(self.twistor_degrees)
        doc["point_class"] = list(self.point_class.degree_part(TWISTOR_TOP))
        return doc


def twistor_base_from_json_dict(doc: dict) -> TwistorChow:
    ring = ring_from_json_dict(doc)
    for key in ("line_class", "twistor_degrees", "point_class"):
        if key not in doc:
            raise ValueError(f"twistor base document is missing field {key!r}")
    return TwistorChow(
        ring=ring,
        line_class=ring.homogeneous(2, doc["line_class"]),
        twistor_degrees=tuple(int(d) for d in doc["twistor_degrees"]),
        point_class=ring.homogeneous(TWISTOR_TOP, doc["point_class"]),
    )


def projective_space_base() -> TwistorChow:
    """CH(P3) = Z[h]/h^4 with a line as blow-up centre (twistor space of S^4)."""
    ring = GradedRing(
        top_degree=3,
        basis_labels=[["1"], ["h"], ["h2"], ["h3"]],
        products={
            (1, 0, 1, 0): (1,),  # h.h = h2
            (1, 0, 2, 0): (1,),  # h.h2 = h3
        },
        degree_functional=[1],
        name="CH(P3)",
    )
    return TwistorChow(
        ring=ring,
        line_class=ring.homogeneous(2, [1]),
        twistor_degrees=(1,),
        point_class=ring.homogeneous(3, [1]),
    )


def flag_threefold_base() -> TwistorChow:
    """The flag threefold (twistor space of the reversed-orientation CP^2).

    Generators x, y are the two hyperplane pullbacks, with x^2 - xy + y^2 = 0
    and x^3 = 0; degree-2 basis {xy, y^2}, point class x*y^2.  Twistor fibres
    have bidegree (1,1), so the line class is xy and both twistor degrees are 1.
    """
    ring = GradedRing(
        top_degree=3,
        basis_labels=[["1"], ["x", "y"], ["xy", "y2"], ["xy2"]],
        products={
            (1, 0, 1, 0): (1, -1),  # x.x = xy - y2
            (1, 0, 1, 1): (1, 0),   # x.y = xy
            (1, 1, 1, 1): (0, 1),   # y.y = y2
            (1, 0, 2, 0): (1,),     # x.xy = x2y = xy2
            (1, 0, 2, 1): (1,),     # x.y2 = xy2
            (1, 1, 2, 0): (1,),     # y.xy = xy2
            (1, 1, 2, 1): (0,),     # y.y2 = y3 = 0
        },
        degree_functional=[1],
        name="CH(Flag)",
    )
    return TwistorChow(
        ring=ring,
        line_class=ring.homogeneous(2, [1, 0]),
        twistor_degrees=(1, 1),
        point_class=ring.homogeneous(3, [1]),
    )


BUILTIN_BASES = {
    "p3": projective_space_base,
    "flag": flag_threefold_base,
}


def builtin_base(name: str) -> TwistorChow:
    try:
        return BUILTIN_BASES[name]()
    except KeyError:
        raise ValueError(f"unknown built-in base {name!r}; choose from {sorted(BUILTIN_BASES)}")


@dataclass(frozen=True)
class BlownUpChow:
    """The intersection ring of a blow-up along a twistor line, with both maps.

    ``restriction_to_quadric`` is the ring-homomorphic pullback to the
    exceptional quadric; ``pushforward_from_quadric`` shifts degrees by one
    (the codimension of the quadric's classes in the threefold).
    """

    base: TwistorChow
    ring: GradedRing
    quadric: GradedRing
    restriction_to_quadric_map: GradedMap
    pushforward_from_quadric: GradedMap

    # -- distinguished elements -------------------------------------------------

    def exceptional_class(self) -> RingElement:
        return self.ring.basis_element(1, self.ring.rank(1) - 1)

    def pushed_fibre_class(self) -> RingElement:
        return self.ring.basis_element(2, self.ring.rank(2) - 1)

    def pulled_back(self, x: RingElement) -> RingElement:
        """Embed a base-ring class into the blown-up ring (the map f*)."""
        if x.ring != self.base.ring:
            raise RingMismatchError("element does not live in the base ring")
        coeffs = {}
        for d in range(TWISTOR_TOP + 1):
            vec = list(x.degree_part(d))
            extra = self.ring.rank(d) - len(vec)
            coeffs[d] = vec + [0] * extra
        return self.ring.element(coeffs)

    def pulled_back_line(self) -> RingElement:
        return self.pulled_back(self.base.line_class)

    def point(self) -> RingElement:
        return self.pulled_back(self.base.point_class)

    def restrict_to_quadric(self, x: RingElement) -> QuadricClass:
        return QuadricClass(self.restriction_to_quadric_map.apply(x))

    def zero_cycle_degree(self, x: RingElement) -> int:
        return self.ring.zero_cycle_degree(x)

    # -- structural checks --------------------------------------------------------

    def check_projection_formula(self) -> None:
        """j_*(j^*(x) . g) = x . j_*(g) on all basis pairs; raises on failure."""
        push = self.pushforward_from_quadric
        restrict = self.restriction_to_quadric_map
        for d1 in range(self.ring.top_degree + 1):
            for i1 in range(self.ring.rank(d1)):
                x = self.ring.basis_element(d1, i1)
                jx = restrict.apply(x)
                for d2 in range(self.quadric.top_degree + 1):
                    for i2 in range(self.quadric.rank(d2)):
                        g = self.quadric.basis_element(d2, i2)
                        if push.apply(jx * g) != x * push.apply(g):
                            raise ValueError(
                                f"projection formula fails on "
                                f"({self.ring.basis_labels[d1][i1]}, "
                                f"{self.quadric.basis_labels[d2][i2]})"
                            )


def blow_up(base: TwistorChow) -> BlownUpChow:
    """Blow up the base along the chosen twistor line and build the full table."""
    R = base.ring
    quad = quadric_ring()
    labels = [
        list(R.basis_labels[0]),
        [f"f.{s}" for s in R.basis_labels[1]] + ["Q"],
        [f"f.{s}" for s in R.basis_labels[2]] + ["j.b"],
        [f"f.{s}" for s in R.basis_labels[3]],
    ]
    r1, r2 = R.rank(1), R.rank(2)
    q_idx, jb_idx = r1, r2  # positions of the exceptional generators
    line_vec = base.line_class.degree_part(2)
    point_vec = base.point_class.degree_part(3)

    def lift(d: int, vec: Vector) -> tuple[int, ...]:
        extra = len(labels[d]) - len(vec)
        return tuple(vec) + (0,) * extra

    products: dict[tuple[int, int, int, int], tuple[int, ...]] = {}

    # pulled-back classes multiply as in the base
    for d1 in range(1, TWISTOR_TOP + 1):
        for d2 in range(d1, TWISTOR_TOP + 1 - d1):
            for i1 in range(R.rank(d1)):
                for i2 in range(R.rank(d2)):
                    products[(d1, i1, d2, i2)] = lift(d1 + d2, R.table_entry(d1, i1, d2, i2))

    # Q . f*a = (twistor degree of a) . j*b   for degree-1 a
    for i, deg in enumerate(base.twistor_degrees):
        out = [0] * len(labels[2])
        out[jb_idx] = deg
        products[(1, q_idx, 1, i)] = tuple(out)

    # Q^2 = 2 j*b - f*[line]   (self-intersection through O(Q)|_Q of bidegree (1,-1))
    q_square = [-c for c in line_vec] + [2]
    products[(1, q_idx, 1, q_idx)] = tuple(q_square)

    # Q . f*b = 0 for degree-2 b (the line has no degree-2 classes)
    for i in range(r2):
        products[(1, q_idx, 2, i)] = tuple([0] * len(labels[3]))

    # Q . j*b = -[pt]
    products[(1, q_idx, 2, jb_idx)] = tuple(-c for c in point_vec)

    # f*a . j*b = 0 for degree-1 a
    for i in range(r1):
        products[(1, i, 2, jb_idx)] = tuple([0] * len(labels[3]))

    ring = GradedRing(
        top_degree=TWISTOR_TOP,
        basis_labels=labels,
        products=products,
        degree_functional=list(R.degree_functional or ()),
        name=f"CH(Bl {R.name or 'base'})",
    )

    # restriction to the quadric: f*a -> deg(a) b, Q -> b - w, f*b -> 0, j*b -> -pt
    restrict_d1 = [
        list(base.twistor_degrees) + [1],   # b row
        [0] * r1 + [-1],                    # w row
    ]
    restrict_d2 = [[0] * r2 + [-1]]         # pt row
    restriction = GradedMap(
        ring,
        quad,
        shift=0,
        matrices={0: [[1]], 1: restrict_d1, 2: restrict_d2},
        is_ring_hom=True,
        name="restriction to exceptional quadric",
    )

    # pushforward: 1 -> Q, b -> j*b, w -> f*[line] - j*b, pt -> f*[point]
    push_d0 = [[1] if k == q_idx else [0] for k in range(len(labels[1]))]
    push_d1 = []
    for k in range(len(labels[2])):
        b_col = 1 if k == jb_idx else 0
        if k == jb_idx:
            w_col = -1
        elif k < r2:
            w_col = line_vec[k]
        else:
            w_col = 0
        push_d1.append([b_col, w_col])
    push_d2 = [[point_vec[k]] for k in range(len(labels[3]))]
    pushforward = GradedMap(
        quad,
        ring,
        shift=1,
        matrices={0: push_d0, 1: push_d1, 2: push_d2},
        name="pushforward from exceptional quadric",
    )

    blown = BlownUpChow(
        base=base,
        ring=ring,
        quadric=quad,
        restriction_to_quadric_map=restriction,
        pushforward_from_quadric=pushforward,
    )
    blown.check_projection_formula()
    # pushforward of the hyperplane class b + w is the pulled-back line class
    xi = quad.homogeneous(1, [1, 1])
    if pushforward.apply(xi) != blown.pulled_back_line():
        raise ValueError("pushforward of b + w must equal the pulled-back line class")
    return blown


@dataclass(frozen=True)
class ComponentPair:
    """A pair of classes with equal degree support, one on each blown-up branch.

    Cycle pairs are homogeneous of one codimension; polynomial lifting also
    produces honest mixed-degree pairs, so only equality of the two supports
    is enforced here, and a single codimension where a caller needs one.
    """

    first: RingElement
    second: RingElement

    def supported_degrees(self) -> tuple[int, ...]:
        """Degrees in which either component is nonzero."""
        return tuple(
            d
            for d in range(self.first.ring.top_degree + 1)
            if any(self.first.degree_part(d)) or any(self.second.degree_part(d))
        )

    def codimension(self) -> int | None:
        """The common codimension of a homogeneous pair (None for the zero pair)."""
        degrees = []
        for element in (self.first, self.second):
            if element.is_zero():
                continue
            degree = element.homogeneous_degree()
            if degree is None:
                raise DegreeError("pair components must be homogeneous")
            degrees.append(degree)
        if not degrees:
            return None
        if len(set(degrees)) > 1:
            raise DegreeError("pair components have different codimension")
        return degrees[0]

    def __neg__(self) -> "ComponentPair":
        return ComponentPair(-self.first, -self.second)


class PushoutPair:
    """Two blown-up branches glued along their quadrics through the ruling swap.

    A pair of branch classes defines a class on the glued space exactly when
    the two restrictions to the double locus agree after transporting the
    second branch through the swap.
    """

    def __init__(self, branch1: BlownUpChow, branch2: BlownUpChow) -> None:
        if branch1.quadric != branch2.quadric:
            raise RingMismatchError("branches must share the quadric ring")
        self.branch1 = branch1
        self.branch2 = branch2
        self.quadric = branch1.quadric
        self.swap = ruling_swap_map(self.quadric)

    def pair(self, first: RingElement, second: RingElement) -> ComponentPair:
        if first.ring != self.branch1.ring or second.ring != self.branch2.ring:
            raise RingMismatchError("pair components must live on the two branches")
        return ComponentPair(first, second)

    def matching_defect(self, pair: ComponentPair) -> RingElement:
        """Restriction of branch 1 minus swapped restriction of branch 2."""
        r1 = self.branch1.restriction_to_quadric_map.apply(pair.first)
        r2 = self.branch2.restriction_to_quadric_map.apply(pair.second)
        return r1 - self.swap.apply(r2)

    def is_matched(self, pair: ComponentPair) -> bool:
        """Whether the two restrictions agree on the double locus, degree by degree."""
        return self.matching_defect(pair).is_zero()

    def exceptional_pair(self) -> ComponentPair:
        """The compatible operational divisor class carried by the double locus.

        Both exceptional divisors restrict to z on the quadric and the swap
        negates z, so the matched pair is ([Q1], -[Q2]).
        """
        return ComponentPair(
            self.branch1.exceptional_class(), -self.branch2.exceptional_class()
        )

    def matching_matrix(self, degree: int) -> list[list[int]]:
        """Matrix of (a1, a2) -> j1*(a1) - swap(j2*(a2)) on the degree-k bases."""
        if not 0 <= degree <= TWISTOR_TOP:
            raise DegreeError(f"degree {degree} out of range")
        rows = self.quadric.rank(degree) if degree <= self.quadric.top_degree else 0
        if rows == 0:
            return []
        j1 = self.branch1.restriction_to_quadric_map.matrix(degree)
        j2 = self.branch2.restriction_to_quadric_map.matrix(degree)
        swapped = mat_mul(self.swap.matrix(degree), j2)
        return [list(j1[r]) + [-c for c in swapped[r]] for r in range(rows)]

    def equalizer(self) -> "EqualizerRing":
        lattices = []
        for degree in range(TWISTOR_TOP + 1):
            n1 = self.branch1.ring.rank(degree)
            n2 = self.branch2.ring.rank(degree)
            matrix = self.matching_matrix(degree)
            if not matrix:
                basis = [
                    tuple(int(k == i) for k in range(n1 + n2)) for i in range(n1 + n2)
                ]
            else:
                basis = kernel_basis(matrix, ncols=n1 + n2)
            lattices.append(tuple(basis))
        return EqualizerRing(self, tuple(lattices))


@dataclass(frozen=True)
class EqualizerRing:
    """Per-degree lattices of matched pairs, with componentwise product.

    Pairs are stored as concatenated coefficient vectors (branch 1 followed by
    branch 2).  The lattices are saturated integer kernels, so membership is
    exact lattice membership, and closure under the componentwise product is a
    checkable theorem rather than an assumption.
    """

    geometry: PushoutPair
    lattices: tuple[tuple[Vector, ...], ...]

    def rank(self, degree: int) -> int:
        return len(self.lattices[degree])

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(basis) for basis in self.lattices)

    def _split(self, degree: int, vec: Vector) -> ComponentPair:
        n1 = self.geometry.branch1.ring.rank(degree)
        return ComponentPair(
            self.geometry.branch1.ring.homogeneous(degree, vec[:n1]),
            self.geometry.branch2.ring.homogeneous(degree, vec[n1:]),
        )

    def _concat(self, degree: int, pair: ComponentPair) -> Vector:
        return tuple(pair.first.degree_part(degree)) + tuple(pair.second.degree_part(degree))

    def basis_pairs(self, degree: int) -> list[ComponentPair]:
        return [self._split(degree, vec) for vec in self.lattices[degree]]

    def contains(self, pair: ComponentPair) -> bool:
        return all(
            lattice_contains(self.lattices[degree], self._concat(degree, pair))
            for degree in pair.supported_degrees()
        )

    def product(self, a: ComponentPair, b: ComponentPair) -> ComponentPair:
        return ComponentPair(a.first * b.first, a.second * b.second)

    def check_product_closure(self) -> None:
        """Verify products of lattice basis pairs stay matched and in the lattice."""
        for d1 in range(TWISTOR_TOP + 1):
            for d2 in range(d1, TWISTOR_TOP + 1 - d1):
                for u in self.basis_pairs(d1):
                    for v in self.basis_pairs(d2):
                        uv = self.product(u, v)
                        if not self.geometry.is_matched(uv):
                            raise ValueError(
                                f"product of matched pairs is unmatched in degree {d1 + d2}"
                            )
                        if not self.contains(uv):
                            raise ValueError(
                                f"product of lattice pairs leaves the lattice in degree {d1 + d2}"
                            )


def brute_force_matched_lattice(
    geometry: PushoutPair, degree: int, bound: int = 3
) -> list[Vector]:
    """Canonical basis of the lattice generated by all matched pairs with
    coefficients in [-bound, bound]; an independent oracle for the kernel."""
    from itertools import product as iter_product

    n1 = geometry.branch1.ring.rank(degree)
    n2 = geometry.branch2.ring.rank(degree)
    matrix = geometry.matching_matrix(degree)
    solutions = []
    for coeffs in iter_product(range(-bound, bound + 1), repeat=n1 + n2):
        if not matrix:
            solutions.append(coeffs)
            continue
        if all(sum(r * c for r, c in zip(row, coeffs)) == 0 for row in matrix):
            solutions.append(coeffs)
    return hermite_row_basis(solutions)
