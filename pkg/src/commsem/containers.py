"""Containers: one-parameter bundles of commutation maps and their calculus.

The container with scale A and stride d holds the maps {(A, y) : y in d*Z_m};
d is always a positive divisor of m (the gcd of the generating shift with m),
which makes container equality O(1).  Containers multiply coordinatewise,
are disjoint as function sets exactly when their scales differ, and the right
and left commutation semigroups decompose into finite disjoint unions of
them: the zero-scale container plus successive powers of the base container
with scale -2 (right side) or 2 (left side).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .central_series import center_order
from .dihedral import GroupParams
from .errors import ParameterError
from .modular import orbit_profile
from .mumaps import AffineMap, CanonicalMap

SIDES = ("right", "left")


def check_side(side: str) -> str:
    if side not in SIDES:
        raise ParameterError(f"side must be one of {SIDES}, got {side!r}")
    return side


@dataclass(frozen=True, slots=True, order=True)
class Container:
    """Canonical container key: scale, stride (a divisor of m), modulus."""

    scale: int
    stride: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 3:
            raise ParameterError(f"container modulus must be at least 3, got {self.modulus}")
        if not 0 <= self.scale < self.modulus:
            raise ParameterError(f"container scale {self.scale} out of range")
        if self.stride < 1 or self.modulus % self.stride:
            raise ParameterError(
                f"container stride {self.stride} must divide the modulus {self.modulus}"
            )

    @classmethod
    def from_pair(cls, scale: int, shift: int, g: GroupParams) -> "Container":
        """The container generated by the parameter pair (scale, shift)."""
        return cls(scale % g.m, math.gcd(shift % g.m, g.m), g.m)


def container_members(c: Container) -> frozenset[CanonicalMap]:
    """The distinct functions the container holds."""
    return frozenset(
        AffineMap(c.scale, k * c.stride, c.modulus).canonical()
        for k in range(c.modulus // c.stride)
    )


def container_product(c1: Container, c2: Container) -> Container:
    """Elementwise composition set: strides and scales multiply coordinatewise."""
    if c1.modulus != c2.modulus:
        raise ParameterError("cannot multiply containers over different moduli")
    m = c1.modulus
    return Container(c1.scale * c2.scale % m, math.gcd(c1.stride * c2.scale, m), m)


def containers_disjoint(c1: Container, c2: Container) -> bool:
    """Function sets are disjoint exactly when the scales differ; containers
    with equal scales always share the zero-shift map."""
    if c1.modulus != c2.modulus:
        raise ParameterError("cannot compare containers over different moduli")
    return c1.scale != c2.scale


def cardinality_detail(
    c: Container, g: GroupParams, series_index: int | None = None
) -> tuple[int, str]:
    """Container size and the path that produced it.

    With a central-series position u >= 1 whose centre lies in the rotation
    subgroup (always true except for powers of two with u >= ell), the size
    is m / |Z_u|; the zero-scale container uses u = 1.  Outside that
    hypothesis, or with no position given, members are counted directly.
    """
    if c.modulus != g.m:
        raise ParameterError("container modulus does not match group modulus")
    if series_index is not None and series_index >= 1 and not (
        g.n == 1 and series_index >= g.ell
    ):
        return g.m // center_order(series_index, g), "central-series"
    return len(container_members(c)), "direct-count"


def container_cardinality(
    c: Container, g: GroupParams, series_index: int | None = None
) -> int:
    """Number of distinct functions in the container."""
    return cardinality_detail(c, g, series_index)[0]


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Pairwise-disjoint container cover of one commutation semigroup.

    parts[0] is the zero-scale container and parts[i] is the i-th power of
    the base container; t = len(parts) - 1 counts the power containers.
    """

    parts: tuple[Container, ...]
    side: str
    t: int

    @property
    def modulus(self) -> int:
        return self.parts[0].modulus

    def part_sizes(self, g: GroupParams) -> tuple[int, ...]:
        return tuple(
            container_cardinality(part, g, series_index=max(i, 1))
            for i, part in enumerate(self.parts)
        )

    def total_size(self, g: GroupParams) -> int:
        return sum(self.part_sizes(g))

    def member_union(self) -> frozenset[CanonicalMap]:
        out: set[CanonicalMap] = set()
        for part in self.parts:
            out |= container_members(part)
        return frozenset(out)


def decompose(side: str, g: GroupParams) -> Decomposition:
    """Cover the chosen commutation semigroup by disjoint containers.

    The number of power containers follows the orbit profile of the base
    scale x (-2 right, 2 left): ord(x) when m is odd, ell + period(x) - 1
    when m is even with odd part > 1, and ell - 1 when m is a power of two.
    """
    check_side(side)
    base = (-2 if side == "right" else 2) % g.m
    prof = orbit_profile(base, g.m)
    if g.ell == 0:
        t = prof.order
    elif g.n > 1:
        t = g.ell + prof.period - 1
    else:
        t = g.ell - 1
    parts = [Container.from_pair(0, 1, g)]
    scale_pow, shift_pow = base, 1
    for _ in range(t):
        parts.append(Container.from_pair(scale_pow, shift_pow, g))
        shift_pow = scale_pow
        scale_pow = scale_pow * base % g.m
    return Decomposition(tuple(parts), side, t)
