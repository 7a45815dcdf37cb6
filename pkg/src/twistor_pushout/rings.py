"""Graded commutative rings over the integers, presented by finite tables.

Every ring handled here has a small, fixed basis in each degree and an
explicit multiplication table; a product whose degree exceeds the top degree
is zero and is simply absent from the table.  This keeps commutativity and
associativity finitely checkable, and both checks run at construction time.
Elements carry exact (unbounded) integer coefficients, one vector per degree.

Graded maps are families of integer matrices, one per source degree, with an
optional degree shift: pullbacks shift by 0, pushforwards by the codimension.
A map flagged as a ring homomorphism is verified to be multiplicative on all
basis pairs and to preserve the unit.

All values are immutable after construction and all operations are pure, so
the module is safe for unrestricted concurrent read-only use.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .intlin import Vector, kernel_basis, lattice_contains, mat_vec

TableKey = tuple[int, int, int, int]


class RingMismatchError(ValueError):
    """Raised when an operation mixes elements of different rings."""


class DegreeError(ValueError):
    """Raised when an element has the wrong degree for an operation."""


def _as_vec(values: Sequence[int], length: int, what: str) -> Vector:
    vec = tuple(int(v) for v in values)
    if len(vec) != length:
        raise ValueError(f"{what}: expected length {length}, got {len(vec)}")
    return vec


class GradedRing:
    """A graded commutative ring over ZZ with unit, given by a multiplication table.

    Parameters
    ----------
    top_degree:
        Largest degree carrying a nonzero group.
    basis_labels:
        One ordered tuple of labels per degree ``0..top_degree``; degree 0 must
        have rank one (the unit).  Label order is part of the data.
    products:
        Map ``(d1, i1, d2, i2) -> coefficient vector`` in degree ``d1+d2``.
        Entries may be given in either argument order; missing in-range entries
        mean the product is zero, and products beyond ``top_degree`` are always
        zero.  Unit products are filled in automatically.
    degree_functional:
        Optional integer row vector on the top degree; the degree of a
        zero-cycle is its pairing with this vector.
    """

    def __init__(
        self,
        top_degree: int,
        basis_labels: Sequence[Sequence[str]],
        products: Mapping[TableKey, Sequence[int]],
        degree_functional: Sequence[int] | None = None,
        name: str = "",
    ) -> None:
        if top_degree < 0:
            raise ValueError("top_degree must be non-negative")
        if len(basis_labels) != top_degree + 1:
            raise ValueError("need one label list per degree 0..top_degree")
        self.top_degree = top_degree
        self.basis_labels = tuple(tuple(str(s) for s in labels) for labels in basis_labels)
        if len(self.basis_labels[0]) != 1:
            raise ValueError("degree 0 must have rank one (the unit)")
        self.name = name
        self.degree_functional = (
            None
            if degree_functional is None
            else _as_vec(degree_functional, self.rank(top_degree), "degree_functional")
        )
        self._table = self._build_table(products)
        self._check_unit()
        self._check_associativity()

    # -- construction helpers -------------------------------------------------

    def _build_table(self, products: Mapping[TableKey, Sequence[int]]) -> dict[TableKey, Vector]:
        table: dict[TableKey, Vector] = {}
        for (d1, i1, d2, i2), out in products.items():
            if not (0 <= d1 <= self.top_degree and 0 <= d2 <= self.top_degree):
                raise ValueError(f"table degree out of range: {(d1, i1, d2, i2)}")
            if not (0 <= i1 < self.rank(d1) and 0 <= i2 < self.rank(d2)):
                raise ValueError(f"table index out of range: {(d1, i1, d2, i2)}")
            if d1 + d2 > self.top_degree:
                if any(out):
                    raise ValueError(f"product {(d1, i1, d2, i2)} lands above top degree")
                continue
            vec = _as_vec(out, self.rank(d1 + d2), f"product {(d1, i1, d2, i2)}")
            for key in ((d1, i1, d2, i2), (d2, i2, d1, i1)):
                if key in table and table[key] != vec:
                    raise ValueError(f"conflicting table entries for {key}")
                table[key] = vec
        # The unit acts as the identity; fill or verify its row.
        for d in range(self.top_degree + 1):
            for i in range(self.rank(d)):
                unit_vec = tuple(int(k == i) for k in range(self.rank(d)))
                for key in ((0, 0, d, i), (d, i, 0, 0)):
                    if table.setdefault(key, unit_vec) != unit_vec:
                        raise ValueError(f"unit does not act as identity on {key}")
        return table

    def _check_unit(self) -> None:
        if self._table[(0, 0, 0, 0)] != (1,):
            raise ValueError("unit square must be the unit")

    def _check_associativity(self) -> None:
        for d1 in range(self.top_degree + 1):
            for d2 in range(self.top_degree + 1 - d1):
                for d3 in range(self.top_degree + 1 - d1 - d2):
                    for i1 in range(self.rank(d1)):
                        x = self.basis_element(d1, i1)
                        for i2 in range(self.rank(d2)):
                            y = self.basis_element(d2, i2)
                            xy = x * y
                            for i3 in range(self.rank(d3)):
                                z = self.basis_element(d3, i3)
                                if xy * z != x * (y * z):
                                    raise ValueError(
                                        f"associativity fails on "
                                        f"({self.basis_labels[d1][i1]}, "
                                        f"{self.basis_labels[d2][i2]}, "
                                        f"{self.basis_labels[d3][i3]})"
                                    )

    # -- basic queries ---------------------------------------------------------

    def rank(self, degree: int) -> int:
        if not 0 <= degree <= self.top_degree:
            return 0
        return len(self.basis_labels[degree])

    def table_entry(self, d1: int, i1: int, d2: int, i2: int) -> Vector:
        if d1 + d2 > self.top_degree:
            return ()
        return self._table.get((d1, i1, d2, i2), tuple([0] * self.rank(d1 + d2)))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, GradedRing):
            return NotImplemented
        return (
            self.top_degree == other.top_degree
            and self.basis_labels == other.basis_labels
            and self._table == other._table
            and self.degree_functional == other.degree_functional
        )

    def __hash__(self) -> int:  # value semantics
        return hash((self.top_degree, self.basis_labels, self.degree_functional))

    def __repr__(self) -> str:
        label = self.name or "GradedRing"
        ranks = ",".join(str(self.rank(d)) for d in range(self.top_degree + 1))
        return f"<{label} ranks=({ranks})>"

    # -- element constructors --------------------------------------------------

    def zero(self) -> "RingElement":
        return RingElement(self, tuple(tuple([0] * self.rank(d)) for d in range(self.top_degree + 1)))

    def one(self) -> "RingElement":
        return self.basis_element(0, 0)

    def basis_element(self, degree: int, index: int) -> "RingElement":
        if not 0 <= degree <= self.top_degree or not 0 <= index < self.rank(degree):
            raise ValueError(f"no basis element at degree {degree}, index {index}")
        coeffs = [
            tuple(int(d == degree and k == index) for k in range(self.rank(d)))
            for d in range(self.top_degree + 1)
        ]
        return RingElement(self, tuple(coeffs))

    def element(self, coeffs_by_degree: Mapping[int, Sequence[int]]) -> "RingElement":
        coeffs = []
        for d in range(self.top_degree + 1):
            given = coeffs_by_degree.get(d)
            coeffs.append(
                tuple([0] * self.rank(d)) if given is None else _as_vec(given, self.rank(d), f"degree {d}")
            )
        return RingElement(self, tuple(coeffs))

    def homogeneous(self, degree: int, coeffs: Sequence[int]) -> "RingElement":
        return self.element({degree: coeffs})

    # -- ring operations --------------------------------------------------------

    def multiply(self, x: "RingElement", y: "RingElement") -> "RingElement":
        if x.ring != self or y.ring != self:
            raise RingMismatchError("elements live in different rings")
        out = [[0] * self.rank(d) for d in range(self.top_degree + 1)]
        for d1, v1 in enumerate(x.coeffs):
            for i1, c1 in enumerate(v1):
                if not c1:
                    continue
                for d2, v2 in enumerate(y.coeffs):
                    if d1 + d2 > self.top_degree:
                        break
                    for i2, c2 in enumerate(v2):
                        if not c2:
                            continue
                        entry = self.table_entry(d1, i1, d2, i2)
                        row = out[d1 + d2]
                        for k, e in enumerate(entry):
                            row[k] += c1 * c2 * e
        return RingElement(self, tuple(tuple(row) for row in out))

    def zero_cycle_degree(self, x: "RingElement") -> int:
        if self.degree_functional is None:
            raise ValueError("ring has no degree functional")
        if x.ring != self:
            raise RingMismatchError("element lives in a different ring")
        return sum(a * b for a, b in zip(self.degree_functional, x.coeffs[self.top_degree]))

    # -- verification -----------------------------------------------------------

    def check_commutativity(self) -> None:
        for (d1, i1, d2, i2), vec in self._table.items():
            if self._table[(d2, i2, d1, i1)] != vec:
                raise ValueError(f"commutativity fails on {(d1, i1, d2, i2)}")

    # -- serialization ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        mult = []
        for (d1, i1, d2, i2), out in sorted(self._table.items()):
            if (d1, i1) > (d2, i2) or (d1, i1) == (0, 0):
                continue  # store one orientation, skip auto-filled unit rows
            mult.append({"d1": d1, "i1": i1, "d2": d2, "i2": i2, "out": list(out)})
        doc = {
            "top_degree": self.top_degree,
            "basis": [list(labels) for labels in self.basis_labels],
            "mult": mult,
        }
        if self.degree_functional is not None:
            doc["degree_functional"] = list(self.degree_functional)
        if self.name:
            doc["name"] = self.name
        return doc


def ring_from_json_dict(doc: Mapping) -> GradedRing:
    try:
        top = int(doc["top_degree"])
        basis = doc["basis"]
        mult = doc.get("mult", [])
    except KeyError as exc:
        raise ValueError(f"ring document is missing field {exc}") from exc
    products: dict[TableKey, Sequence[int]] = {}
    for entry in mult:
        key = (int(entry["d1"]), int(entry["i1"]), int(entry["d2"]), int(entry["i2"]))
        products[key] = entry["out"]
    return GradedRing(
        top,
        basis,
        products,
        degree_functional=doc.get("degree_functional"),
        name=str(doc.get("name", "")),
    )


@dataclass(frozen=True)
class RingElement:
    """An element of a :class:`GradedRing`, one integer vector per degree."""

    ring: GradedRing
    coeffs: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.ring.top_degree + 1:
            raise ValueError("coefficient vectors must cover degrees 0..top_degree")
        for d, vec in enumerate(self.coeffs):
            if len(vec) != self.ring.rank(d):
                raise ValueError(f"degree {d}: expected {self.ring.rank(d)} coefficients")

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.ring != other.ring:
            raise RingMismatchError("elements live in different rings")
        return RingElement(
            self.ring,
            tuple(tuple(a + b for a, b in zip(u, v)) for u, v in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, tuple(tuple(-a for a in v) for v in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return self.ring.multiply(self, other)
        if isinstance(other, int):
            return RingElement(self.ring, tuple(tuple(other * a for a in v) for v in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return all(not a for v in self.coeffs for a in v)

    def degree_part(self, degree: int) -> Vector:
        if not 0 <= degree <= self.ring.top_degree:
            return ()
        return self.coeffs[degree]

    def homogeneous_degree(self) -> int | None:
        """The single degree in which the element is supported, or None."""
        degrees = [d for d, v in enumerate(self.coeffs) if any(v)]
        if len(degrees) != 1:
            return None
        return degrees[0]

    def __str__(self) -> str:
        terms = []
        for d, vec in enumerate(self.coeffs):
            for i, c in enumerate(vec):
                if not c:
                    continue
                label = self.ring.basis_labels[d][i]
                if label == "1":
                    terms.append(str(c))
                elif c == 1:
                    terms.append(label)
                elif c == -1:
                    terms.append(f"-{label}")
                else:
                    terms.append(f"{c}*{label}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


class GradedMap:
    """A graded additive map between two :class:`GradedRing` values.

    ``matrices[d]`` sends the degree-``d`` component of the source into degree
    ``d + shift`` of the target (rows indexed by target basis, columns by
    source basis).  A missing matrix is the zero map; source degrees landing
    outside the target's range map into the zero group.
    """

    def __init__(
        self,
        source: GradedRing,
        target: GradedRing,
        shift: int,
        matrices: Mapping[int, Sequence[Sequence[int]]],
        is_ring_hom: bool = False,
        name: str = "",
    ) -> None:
        self.source = source
        self.target = target
        self.shift = shift
        self.name = name
        mats: dict[int, tuple[Vector, ...]] = {}
        for d, matrix in matrices.items():
            if not 0 <= d <= source.top_degree:
                raise ValueError(f"matrix for out-of-range source degree {d}")
            td = d + shift
            if not 0 <= td <= target.top_degree:
                if any(any(row) for row in matrix):
                    raise ValueError(f"nonzero matrix into missing target degree {td}")
                continue
            rows = tuple(_as_vec(row, source.rank(d), f"matrix[{d}] row") for row in matrix)
            if len(rows) != target.rank(td):
                raise ValueError(f"matrix[{d}] must have {target.rank(td)} rows")
            mats[d] = rows
        self.matrices = mats
        self.is_ring_hom = bool(is_ring_hom)
        if self.is_ring_hom:
            self._check_ring_hom()

    def matrix(self, degree: int) -> tuple[Vector, ...]:
        td = degree + self.shift
        if degree in self.matrices:
            return self.matrices[degree]
        rows = self.target.rank(td) if 0 <= td <= self.target.top_degree else 0
        return tuple(tuple([0] * self.source.rank(degree)) for _ in range(rows))

    def apply(self, x: RingElement) -> RingElement:
        if x.ring != self.source:
            raise RingMismatchError("element does not live in the source ring")
        out: dict[int, Vector] = {}
        for d, vec in enumerate(x.coeffs):
            td = d + self.shift
            if not 0 <= td <= self.target.top_degree:
                continue  # lands in the zero group
            image = mat_vec(self.matrix(d), vec)
            if td in out:
                image = tuple(a + b for a, b in zip(out[td], image))
            out[td] = image
        return self.target.element(out)

    def __call__(self, x: RingElement) -> RingElement:
        return self.apply(x)

    def _check_ring_hom(self) -> None:
        if self.shift != 0:
            raise ValueError("a ring homomorphism cannot shift degrees")
        if self.apply(self.source.one()) != self.target.one():
            raise ValueError("ring homomorphism must preserve the unit")
        for d1 in range(self.source.top_degree + 1):
            for i1 in range(self.source.rank(d1)):
                x = self.source.basis_element(d1, i1)
                fx = self.apply(x)
                for d2 in range(d1, self.source.top_degree + 1):
                    for i2 in range(self.source.rank(d2)):
                        y = self.source.basis_element(d2, i2)
                        if self.apply(x * y) != fx * self.apply(y):
                            raise ValueError(
                                f"multiplicativity fails on "
                                f"({self.source.basis_labels[d1][i1]}, "
                                f"{self.source.basis_labels[d2][i2]})"
                            )

    def to_json_dict(self) -> dict:
        return {
            "shift": self.shift,
            "matrices": {str(d): [list(row) for row in rows] for d, rows in sorted(self.matrices.items())},
            "is_ring_hom": self.is_ring_hom,
            "name": self.name,
        }


def map_from_json_dict(source: GradedRing, target: GradedRing, doc: Mapping) -> GradedMap:
    matrices = {int(d): rows for d, rows in doc.get("matrices", {}).items()}
    return GradedMap(
        source,
        target,
        int(doc.get("shift", 0)),
        matrices,
        is_ring_hom=bool(doc.get("is_ring_hom", False)),
        name=str(doc.get("name", "")),
    )


def kernel_lattice(f: GradedMap, degree: int) -> list[Vector]:
    """Saturated basis of the integer kernel of ``f`` in one source degree."""
    if not 0 <= degree <= f.source.top_degree:
        raise DegreeError(f"degree {degree} is out of range for the source ring")
    n = f.source.rank(degree)
    matrix = f.matrix(degree)
    if not matrix:  # map into the zero group: kernel is everything
        return [tuple(int(k == i) for k in range(n)) for i in range(n)]
    return kernel_basis(matrix, ncols=n)


def lattice_membership(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """True iff ``vec`` lies in the integer span of ``basis`` (any spanning set)."""
    from .intlin import hermite_row_basis

    return lattice_contains(hermite_row_basis(basis), vec)
