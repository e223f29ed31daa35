"""Exact arithmetic in the dihedral group of order 2m.

The group is presented as <a, b; a^m = 1, b^2 = 1, b^-1 a b = a^-1> with
m >= 3, and every element is kept in the unique canonical form a^i b^j with
0 <= i < m and j in {0, 1}.  All values are immutable and all operations are
pure functions, so they are safe to share across threads.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True, slots=True)
class GroupParams:
    """Modulus m together with its splitting m = 2**ell * n, n odd."""

    m: int
    ell: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ParameterError(f"dihedral modulus must be at least 3, got m={self.m}")
        if self.ell < 0 or self.n < 1 or self.n % 2 == 0:
            raise ParameterError(
                f"need m = 2**ell * n with n odd: ell={self.ell}, n={self.n}"
            )
        if self.m != (1 << self.ell) * self.n:
            raise ParameterError(f"m={self.m} is not 2**{self.ell} * {self.n}")

    @classmethod
    def from_modulus(cls, m: int) -> "GroupParams":
        if m < 3:
            raise ParameterError(f"dihedral modulus must be at least 3, got m={m}")
        ell, n = 0, m
        while n % 2 == 0:
            n //= 2
            ell += 1
        return cls(m, ell, n)

    @property
    def group_order(self) -> int:
        return 2 * self.m

    def element(self, i: int, j: int) -> "DihedralElement":
        return DihedralElement(i % self.m, j % 2, self.m)

    def identity(self) -> "DihedralElement":
        return DihedralElement(0, 0, self.m)


@dataclass(frozen=True, slots=True, order=True)
class DihedralElement:
    """The element a^i b^j, in canonical form."""

    i: int
    j: int
    m: int

    def __post_init__(self) -> None:
        if not 0 <= self.i < self.m:
            raise ParameterError(f"rotation exponent {self.i} out of range for m={self.m}")
        if self.j not in (0, 1):
            raise ParameterError(f"reflection exponent must be 0 or 1, got {self.j}")

    @property
    def is_rotation(self) -> bool:
        return self.j == 0


def _check_moduli(g: GroupParams, *xs: DihedralElement) -> None:
    for x in xs:
        if x.m != g.m:
            raise ParameterError(
                f"element modulus {x.m} does not match group modulus {g.m}"
            )


def multiply(x: DihedralElement, y: DihedralElement, g: GroupParams) -> DihedralElement:
    """(a^i b^j)(a^r b^s) = a^{i + (-1)^j r} b^{j + s}."""
    _check_moduli(g, x, y)
    i = (x.i + y.i) % g.m if x.j == 0 else (x.i - y.i) % g.m
    return DihedralElement(i, (x.j + y.j) % 2, g.m)


def inverse(x: DihedralElement, g: GroupParams) -> DihedralElement:
    _check_moduli(g, x)
    if x.j == 1:
        return x
    return DihedralElement(-x.i % g.m, 0, g.m)


def conjugate(x: DihedralElement, y: DihedralElement, g: GroupParams) -> DihedralElement:
    """y^-1 x y."""
    return multiply(multiply(inverse(y, g), x, g), y, g)


def commutator(x: DihedralElement, y: DihedralElement, g: GroupParams) -> DihedralElement:
    """[x, y] = x^-1 y^-1 x y.  Always a rotation."""
    return multiply(multiply(inverse(x, g), inverse(y, g), g), multiply(x, y, g), g)


def left_normed_commutator(
    x: DihedralElement, entries: Iterable[DihedralElement], g: GroupParams
) -> DihedralElement:
    """[x, e_1, e_2, ...], associating leftward: [[x, e_1], e_2], ..."""
    acc = x
    count = 0
    for e in entries:
        acc = commutator(acc, e, g)
        count += 1
    if count == 0:
        raise ParameterError("left-normed commutator needs at least one entry")
    return acc


def enumerate_elements(g: GroupParams) -> tuple[DihedralElement, ...]:
    """All 2m elements: rotations first, exponents ascending within each layer."""
    return tuple(DihedralElement(i, j, g.m) for j in (0, 1) for i in range(g.m))


def element_index(x: DihedralElement) -> int:
    """Position of x in the enumerate_elements order: j*m + i."""
    return x.j * x.m + x.i
