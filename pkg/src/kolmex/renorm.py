"""Minimal-subtraction algebras, convolution of characters and the
Birkhoff/BPHZ decomposition.

The target algebra is Laurent-style: a finite polar part (powers t^-1,
t^-2, ... with no constant term) plus a regular power series truncated at
a pinned order (default 16), all coefficients exact rationals.  The single
variable t covers both interpretations -- germs at zero (t = z) and the
disc-algebra coordinates (t = 1 - z); only documentation differs.

Truncation is a hard contract: every element tracks the regular order up
to which its coefficients are exact, operations propagate that window
(a polar factor of depth P consumes P orders of its partner's window),
and comparisons beyond the window raise TruncationError instead of
answering from garbage.

Characters are multiplicative maps from the graph bialgebra into this
algebra, stored on connected generators; convolution, the geometric-series
inverse and the BPHZ recursion work on arbitrary unit-preserving linear
maps, evaluated monomial by monomial with per-object caches.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .hopf import (
    UNIT_MONOMIAL,
    Monomial,
    coproduct_of_monomial,
    monomial_degree,
    monomial_vertices,
    reduced_coproduct_of_monomial,
)

DEFAULT_TRUNC = 16


class TruncationError(ArithmeticError):
    pass


class RenormError(ValueError):
    pass


class MSElement:
    """polar + regular with an explicit validity window on the regular part."""

    __slots__ = ("polar", "regular")

    def __init__(self, polar: Iterable = (), regular: Iterable = ()):
        polar = [Fraction(c) for c in polar]
        while polar and polar[-1] == 0:
            polar.pop()
        self.polar = tuple(polar)  # index i -> coefficient of t^-(i+1)
        self.regular = tuple(Fraction(c) for c in regular)  # index j -> t^j
        if not self.regular:
            raise TruncationError("element carries no valid regular window")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, trunc: int = DEFAULT_TRUNC) -> "MSElement":
        return cls((), (Fraction(0),) * (trunc + 1))

    @classmethod
    def one(cls, trunc: int = DEFAULT_TRUNC) -> "MSElement":
        return cls((), (Fraction(1),) + (Fraction(0),) * trunc)

    @classmethod
    def from_coeffs(cls, coeffs: dict, trunc: int = DEFAULT_TRUNC) -> "MSElement":
        """Build from {power: coefficient}; negative powers are polar."""
        depth = max((-p for p in coeffs if p < 0), default=0)
        polar = [coeffs.get(-(i + 1), Fraction(0)) for i in range(depth)]
        regular = [coeffs.get(j, Fraction(0)) for j in range(trunc + 1)]
        if any(p > trunc for p in coeffs):
            raise TruncationError("coefficient beyond the truncation order")
        return cls(polar, regular)

    # -- inspection -----------------------------------------------------------

    @property
    def polar_depth(self) -> int:
        return len(self.polar)

    @property
    def valid_order(self) -> int:
        return len(self.regular) - 1

    def coeff(self, power: int) -> Fraction:
        if power < 0:
            idx = -power - 1
            return self.polar[idx] if idx < len(self.polar) else Fraction(0)
        if power > self.valid_order:
            raise TruncationError(
                f"t^{power} lies beyond the valid window (order {self.valid_order})"
            )
        return self.regular[power]

    def augmentation(self) -> Fraction:
        return self.regular[0]

    def is_polar_only(self) -> bool:
        return not any(self.regular)

    def is_regular_only(self) -> bool:
        return not self.polar

    # -- the minimal-subtraction split ---------------------------------------

    def polar_part(self) -> "MSElement":
        return MSElement(self.polar, (Fraction(0),) * len(self.regular))

    def regular_part(self) -> "MSElement":
        return MSElement((), self.regular)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "MSElement") -> "MSElement":
        depth = max(len(self.polar), len(other.polar))
        polar = [
            (self.polar[i] if i < len(self.polar) else 0)
            + (other.polar[i] if i < len(other.polar) else 0)
            for i in range(depth)
        ]
        window = min(len(self.regular), len(other.regular))
        regular = [self.regular[j] + other.regular[j] for j in range(window)]
        return MSElement(polar, regular)

    def __neg__(self) -> "MSElement":
        return MSElement([-c for c in self.polar], [-c for c in self.regular])

    def __sub__(self, other: "MSElement") -> "MSElement":
        return self + (-other)

    def _is_zero(self) -> bool:
        return not self.polar and not any(self.regular)

    def __mul__(self, other: "MSElement") -> "MSElement":
        """Laurent convolution; the result window is
        min(Vx - Py, Vy - Px) as in the module docstring."""
        if not isinstance(other, MSElement):
            return NotImplemented
        if self._is_zero() or other._is_zero():
            # an exact zero factor gives an exact zero at every order
            return MSElement.zero(max(self.valid_order, other.valid_order))
        px, py = self.polar_depth, other.polar_depth
        window = min(self.valid_order - py, other.valid_order - px)
        if window < 0:
            raise TruncationError("truncated windows too short for this product")
        acc: dict = {}
        for i, ci in self._items():
            if ci:
                for j, cj in other._items():
                    if cj:
                        acc[i + j] = acc.get(i + j, Fraction(0)) + ci * cj
        polar = [acc.get(-(i + 1), Fraction(0)) for i in range(px + py)]
        regular = [acc.get(j, Fraction(0)) for j in range(window + 1)]
        return MSElement(polar, regular)

    def __rmul__(self, scalar) -> "MSElement":
        scalar = Fraction(scalar)
        return MSElement(
            [scalar * c for c in self.polar], [scalar * c for c in self.regular]
        )

    def _items(self):
        for i, c in enumerate(self.polar):
            yield -(i + 1), c
        for j, c in enumerate(self.regular):
            yield j, c

    # -- comparison -----------------------------------------------------------

    def eq_through(self, other: "MSElement", order: int) -> bool:
        """Exact equality of all powers up to t^order (polar included)."""
        if order > min(self.valid_order, other.valid_order):
            raise TruncationError(
                f"cannot compare through t^{order}: windows are "
                f"{self.valid_order} and {other.valid_order}"
            )
        if self.polar != other.polar:
            return False
        return all(
            self.regular[j] == other.regular[j] for j in range(order + 1)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MSElement):
            return NotImplemented
        return self.eq_through(other, min(self.valid_order, other.valid_order))

    def __repr__(self):
        bits = [
            f"{c}*t^{p}" for p, c in self._items() if c
        ]
        return "MS(" + (" + ".join(bits) if bits else "0") + f" |{self.valid_order})"


def polar_split(x: MSElement) -> tuple[MSElement, MSElement]:
    """(pi(x), (id - pi)(x)); the two parts sum back to x."""
    return x.polar_part(), x.regular_part()


# ---------------------------------------------------------------------------
# maps from the bialgebra into A
# ---------------------------------------------------------------------------

class GMap:
    """Linear map H -> A determined by its values on monomials.

    Values get cached per map; `degree_bound` guards against silently
    running past the region the map was built for.  The function decides
    its own unit value (intermediate maps like e - phi vanish there).
    """

    def __init__(self, fn: Callable[[Monomial], MSElement], degree_bound: int,
                 trunc: int = DEFAULT_TRUNC, name: str = "map"):
        self._fn = fn
        self.degree_bound = degree_bound
        self.trunc = trunc
        self.name = name
        self._cache: dict = {}

    def __call__(self, mono: Monomial) -> MSElement:
        if monomial_degree(mono) > self.degree_bound:
            raise RenormError(
                f"{self.name}: monomial degree {monomial_degree(mono)} "
                f"exceeds bound {self.degree_bound}"
            )
        if mono not in self._cache:
            self._cache[mono] = self._fn(mono)
        return self._cache[mono]

    def preserves_unit(self) -> bool:
        return self(UNIT_MONOMIAL) == MSElement.one(self.trunc)


def identity_map(degree_bound: int, trunc: int = DEFAULT_TRUNC) -> GMap:
    """e = unit . counit: 1 on the unit monomial, 0 elsewhere."""
    return GMap(
        lambda mono: MSElement.one(trunc) if mono == UNIT_MONOMIAL
        else MSElement.zero(trunc),
        degree_bound, trunc, "e",
    )


class Character(GMap):
    """Multiplicative map: a value per connected generator, extended by
    products over the monomial's components."""

    def __init__(self, generator_values: dict, degree_bound: int,
                 trunc: int = DEFAULT_TRUNC, name: str = "phi"):
        self.generator_values = dict(generator_values)

        def fn(mono: Monomial) -> MSElement:
            acc = None
            for label in mono:
                if label not in self.generator_values:
                    raise RenormError(f"{name}: no value for generator {label}")
                value = self.generator_values[label]
                acc = value if acc is None else acc * value
            return MSElement.one(trunc) if acc is None else acc

        super().__init__(fn, degree_bound, trunc, name)


def convolution(phi: GMap, psi: GMap, degree_bound: Optional[int] = None) -> GMap:
    """(phi * psi)(x) = m_A (phi x psi) Delta(x)."""
    bound = min(phi.degree_bound, psi.degree_bound)
    if degree_bound is not None:
        bound = min(bound, degree_bound)
    trunc = min(phi.trunc, psi.trunc)

    def fn(mono: Monomial) -> MSElement:
        acc = MSElement.zero(trunc)
        for (left, right), c in coproduct_of_monomial(mono).items():
            acc = acc + c * (phi(left) * psi(right))
        return acc

    return GMap(fn, bound, trunc, f"({phi.name}*{psi.name})")


def conv_inverse(phi: GMap) -> GMap:
    """phi^(*-1)(x) = e(x) + sum_{m>=1} (e - phi)^(*m)(x).

    On a fixed x the sum is finite: (e - phi) vanishes on the unit, so the
    m-th convolution power involves m-fold reduced coproducts and dies once
    m exceeds the vertex count of x.
    """
    trunc = phi.trunc
    e = identity_map(phi.degree_bound, trunc)
    diff = GMap(lambda m: e(m) - phi(m), phi.degree_bound, trunc, "(e-phi)")
    powers = [diff]  # powers[i] = (e - phi)^(*(i+1))

    def fn(mono: Monomial) -> MSElement:
        acc = e(mono)
        need = monomial_vertices(mono)
        while len(powers) < need:
            powers.append(convolution(powers[-1], diff))
        for m in range(need):
            acc = acc + powers[m](mono)
        return acc

    return GMap(fn, phi.degree_bound, trunc, f"{phi.name}^-1")


def birkhoff(phi: Character) -> tuple[GMap, GMap]:
    """The BPHZ recursion.  On ker eps:

        phi_minus(x) = -pi(phi(x) + sum phi_minus(x') phi(x''))
        phi_plus(x)  = (id - pi)(same bracket),

    the sum running over the reduced coproduct.  phi_minus lands in the
    polar subalgebra on ker eps, phi_plus in the regular one, and
    phi = phi_minus^(*-1) * phi_plus exactly.

    Requires a character: the factors are multiplicative (and the
    decomposition unique) only for multiplicative phi.
    """
    if not isinstance(phi, Character):
        raise RenormError("birkhoff needs a character (multiplicative map)")
    trunc = phi.trunc
    minus_cache: dict = {}

    def bracket(mono: Monomial) -> MSElement:
        acc = phi(mono)
        for (left, right), c in reduced_coproduct_of_monomial(mono).items():
            acc = acc + c * (minus_value(left) * phi(right))
        return acc

    def minus_value(mono: Monomial) -> MSElement:
        if mono == UNIT_MONOMIAL:
            return MSElement.one(trunc)
        if mono not in minus_cache:
            minus_cache[mono] = -(bracket(mono).polar_part())
        return minus_cache[mono]

    phi_minus = GMap(minus_value, phi.degree_bound, trunc, f"{phi.name}-")
    phi_plus = GMap(
        lambda mono: bracket(mono).regular_part(),
        phi.degree_bound,
        trunc,
        f"{phi.name}+",
    )
    return phi_minus, phi_plus


# ---------------------------------------------------------------------------
# JSON interface
# ---------------------------------------------------------------------------

def character_to_json(chi: Character) -> str:
    doc = {
        "degree_bound": chi.degree_bound,
        "truncation": chi.trunc,
        "values": [
            {
                "graph": label,
                "value": {
                    "polar": [str(c) for c in val.polar],
                    "regular": [str(c) for c in val.regular],
                },
            }
            for label, val in sorted(chi.generator_values.items())
        ],
    }
    return json.dumps(doc, indent=1)


def character_from_json(text: str) -> Character:
    doc = json.loads(text)
    trunc = doc.get("truncation", DEFAULT_TRUNC)
    values = {}
    for entry in doc["values"]:
        val = entry["value"]
        regular = [Fraction(c) for c in val["regular"]]
        regular += [Fraction(0)] * (trunc + 1 - len(regular))
        values[entry["graph"]] = MSElement(
            [Fraction(c) for c in val["polar"]], regular
        )
    return Character(values, doc["degree_bound"], trunc)
