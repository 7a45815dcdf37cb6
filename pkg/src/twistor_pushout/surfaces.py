"""Traces of surfaces on the exceptional quadric and the rigid gluing dichotomy.

A surface of twistor degree d meets the exceptional quadric in d fibres of the
contraction when it misses the blown-up line, and in a rational section of
class (d-1)*b + w when it contains the line (smoothness along the line is
assumed in that case).  Requiring the two traces to agree under the ruling
swap pins the configuration down to three cases, independently of how large
the degrees are allowed to be.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quadric import (
    Bidegree,
    QuadricClass,
    class_b,
    intersection_number,
    ruling_swap_pushforward,
)


@dataclass(frozen=True)
class SurfaceData:
    """Twistor degree of a surface and whether it contains the blown-up line."""

    twistor_degree: int
    contains_line: bool

    def __post_init__(self) -> None:
        if self.twistor_degree < 1:
            raise ValueError("twistor degree must be at least 1")


def trace_class(surface: SurfaceData) -> QuadricClass:
    """Class of the strict transform's intersection with the exceptional quadric."""
    d = surface.twistor_degree
    if surface.contains_line:
        return QuadricClass.from_bw(d - 1, 1)
    return QuadricClass.from_bw(d, 0)


def trace_bidegree(surface: SurfaceData) -> Bidegree:
    b, w = trace_class(surface).coeffs_bw()
    return Bidegree(b, w)


def glue_check(s1: SurfaceData, s2: SurfaceData) -> bool:
    """True iff the two traces agree after the ruling-swap identification."""
    return ruling_swap_pushforward(trace_class(s1)) == trace_class(s2)


Configuration = tuple[int, str, int, str]


def classify_all(d_max: int) -> list[Configuration]:
    """All (d1, flag1, d2, flag2) with 1 <= d <= d_max passing the glue check."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    configs = []
    for d1 in range(1, d_max + 1):
        for f1 in (True, False):
            for d2 in range(1, d_max + 1):
                for f2 in (True, False):
                    if glue_check(SurfaceData(d1, f1), SurfaceData(d2, f2)):
                        configs.append((d1, "in" if f1 else "out", d2, "in" if f2 else "out"))
    return configs


def section_degree_over_ruling(surface: SurfaceData) -> int:
    """Degree of the swapped trace over the second branch's contraction: d - 1."""
    if not surface.contains_line:
        raise ValueError("only surfaces containing the line trace out sections")
    return intersection_number(ruling_swap_pushforward(trace_class(surface)), class_b())
