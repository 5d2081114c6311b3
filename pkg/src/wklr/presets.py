"""Worked examples with fixed data, used by ``--example`` and by the tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partition import Multipartition, Weighting
from .tableau import Loading

# the five bipartitions of size 2, most dominant first for theta_1 << theta_2
SIZE_TWO = (((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1)))


@dataclass(frozen=True)
class Preset:
    name: str
    weighting: Weighting
    shapes: tuple[Multipartition, ...]
    loadings: tuple[Loading, ...] | None = None  # None: canonical loadings of the shapes
    d_sets: tuple[tuple[Fraction, ...], ...] | None = None
    summary: str = ""


def _ex1(theta, label) -> Preset:
    return Preset(
        f"big-example-1{label}",
        Weighting.make(-4, theta, (0, 1), 2),
        SIZE_TWO,
        d_sets=((Fraction(1), Fraction(3)), (Fraction(2), Fraction(7)), (Fraction(8), Fraction(10))),
        summary=f"kappa=-4, theta={tuple(str(t) for t in theta)}, D-sets {{1,3}}, {{2,7}}, {{8,10}}",
    )


def _loads(pairs) -> tuple[Loading, ...]:
    # (a, b): a carries residue 0 and b residue 1
    return tuple(Loading.of([(a, 0), (b, 1)]) for a, b in pairs)


_K2 = Fraction(-9, 2)

PRESETS: dict[str, Preset] = {}
for _p in (
    _ex1((0, 9), ""),
    _ex1((0, Fraction(3, 2)), "-case2"),
    _ex1((0, -9), "-case3"),
    Preset(
        "big-example-2-case1",
        Weighting.make(_K2, (0, 9), (0, 1), 2),
        SIZE_TWO,
        _loads([(1, -1), (1, 6), (1, 10), (8, 10), (15, 10)]),
        summary="kappa=-9/2, theta=(0,9), loadings i_(1,-1), i_(1,6), i_(1,10), i_(8,10), i_(15,10)",
    ),
    Preset(
        "big-example-2-case2",
        Weighting.make(_K2, (0, Fraction(3, 2)), (0, 1), 2),
        SIZE_TWO,
        summary="kappa=-9/2, theta=(0,3/2), canonical loadings",
    ),
    Preset(
        "big-example-2-case3",
        Weighting.make(_K2, (0, -9), (0, 1), 2),
        SIZE_TWO,
        summary="kappa=-9/2, theta=(0,-9), canonical loadings",
    ),
):
    PRESETS[_p.name] = _p


def get(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(PRESETS)}") from None
