"""Contains prime fields, monomial orders, polynomial rings and termwise operations.

Polynomials are sympy ``PolyElement`` objects, i.e. sparse dictionaries from exponent
tuples to coefficients in ``FiniteField(p)``. The helpers in this module add the
operations that only make sense in characteristic p: the termwise Frobenius power
and the monomial tests against the bracket power of a variable-generated ideal.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses
import functools
import re
from typing import Iterable, Literal, Mapping, Sequence

from sympy.ntheory import isprime
from sympy.polys import orderings
from sympy.polys.domains import FF, ZZ
from sympy.polys.rings import PolyElement, PolyRing

from froblink.algebra.params import DEFAULT_BUDGETS, Budgets
from froblink.errors import RingMismatchError

Poly = PolyElement
Monomial = tuple[int, ...]
MonomialOrderKind = Literal["grevlex", "lex", "elimination"]

_VARIABLE_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_MAX_PRIME = 2**31


@dataclasses.dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime 2 <= p < 2^31."""

    p: int

    def __post_init__(self):
        """Reject composite and out of range characteristics."""
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise ValueError(f"Characteristic must be an integer, got {self.p!r}.")
        if not 2 <= self.p < _MAX_PRIME or not isprime(self.p):
            raise ValueError(f"Characteristic {self.p} is not a prime below 2^31.")

    @property
    def domain(self):
        """The sympy ground domain, with residues 0..p-1."""
        return _finite_field(self.p)


@functools.lru_cache(maxsize=64)
def _finite_field(p: int):
    return FF(p, symmetric=False)


class BlockOrder(orderings.MonomialOrder):
    """Elimination order: grevlex on the first ``split`` variables, then grevlex on the rest."""

    alias = "elim"
    is_global = True
    is_default = False

    def __init__(self, split: int):
        """Create the order eliminating the first ``split`` variables."""
        self.split = split

    def __call__(self, monomial):
        return (
            orderings.grevlex(monomial[: self.split]),
            orderings.grevlex(monomial[self.split :]),
        )

    def __repr__(self):
        return f"{self.__class__.__name__}({self.split})"

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and other.split == self.split

    def __hash__(self):
        return hash((self.__class__, self.split))

    def __getnewargs__(self):
        return (self.split,)


@dataclasses.dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order on exponent vectors."""

    kind: MonomialOrderKind = "grevlex"
    # Number of leading variables eliminated by an elimination order.
    split: int = 0

    def __post_init__(self):
        """Validate the order description."""
        if self.kind not in ("grevlex", "lex", "elimination"):
            raise ValueError(f"Unsupported monomial order: {self.kind}.")
        if self.kind == "elimination" and self.split < 1:
            raise ValueError("Elimination orders need split >= 1.")
        if self.kind != "elimination" and self.split != 0:
            raise ValueError(f"Order {self.kind} takes no split.")

    @property
    def key(self) -> orderings.MonomialOrder:
        """The sympy order object used as a sort key."""
        if self.kind == "grevlex":
            return orderings.grevlex
        if self.kind == "lex":
            return orderings.lex
        return BlockOrder(self.split)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(split: int) -> MonomialOrder:
    """Order that eliminates the first ``split`` variables."""
    return MonomialOrder("elimination", split)


@functools.lru_cache(maxsize=256)
def _sympy_ring(variables: tuple[str, ...], p: int, order: MonomialOrder) -> PolyRing:
    return PolyRing(list(variables), _finite_field(p), order.key)


@dataclasses.dataclass(frozen=True)
class PolynomialRing:
    """The ring F_p[x_1, ..., x_n] with a fixed monomial order.

    Two descriptors with equal fields describe the same ring, so rings compare by
    value and can be passed between processes.
    """

    variables: tuple[str, ...]
    field: PrimeField
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        """Validate variable names and the order."""
        if not self.variables:
            raise ValueError("A polynomial ring needs at least one variable.")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"Duplicate variables in {self.variables}.")
        for name in self.variables:
            if not _VARIABLE_RE.fullmatch(name):
                raise ValueError(f"Invalid variable name: {name!r}.")
        if self.order.kind == "elimination" and self.order.split >= len(self.variables):
            raise ValueError("Elimination order must leave at least one variable.")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def sympy_ring(self) -> PolyRing:
        """The underlying sympy ring (cached per descriptor)."""
        return _sympy_ring(self.variables, self.field.p, self.order)

    @property
    def gens(self) -> tuple[Poly, ...]:
        return tuple(self.sympy_ring.gens)

    @property
    def zero(self) -> Poly:
        return self.sympy_ring.zero

    @property
    def one(self) -> Poly:
        return self.sympy_ring.one

    def index(self, name: str) -> int:
        """Position of variable ``name``."""
        try:
            return self.variables.index(name)
        except ValueError as exc:
            raise KeyError(f"Unknown variable {name!r} in ring {self}.") from exc

    def gen(self, name: str) -> Poly:
        """The generator called ``name``."""
        return self.gens[self.index(name)]

    def from_terms(self, terms: Mapping[Monomial, int]) -> Poly:
        """Build a polynomial from integer coefficients, reduced mod p."""
        return self.sympy_ring.from_dict(
            {monom: int(coeff) % self.p for monom, coeff in terms.items() if int(coeff) % self.p}
        )

    def owns(self, f: Poly) -> bool:
        """Whether ``f`` is an element of exactly this ring."""
        return f.ring == self.sympy_ring

    def convert(self, f: Poly) -> Poly:
        """Bring ``f`` into this ring.

        ``f`` may come from any ring over the same variables, with any order or
        with integer coefficients, or from a ring whose variables differ as long as
        every variable occurring in ``f`` exists here.

        Raises:
            RingMismatchError: if ``f`` lives over a finite field of another
                characteristic, or uses a variable missing here.
        """
        if self.owns(f):
            return f
        if f.ring.domain.is_FiniteField and characteristic(f) != self.p:
            raise RingMismatchError(f"Cannot move {f} from {f.ring.domain} into {self}.")
        source = tuple(str(s) for s in f.ring.symbols)
        if source == self.variables:
            if f.ring.domain == self.field.domain:
                return f.set_ring(self.sympy_ring)
            return self.from_terms({monom: int(coeff) for monom, coeff in f.items()})
        mapping = []
        for i, name in enumerate(source):
            mapping.append(self.variables.index(name) if name in self.variables else None)
        terms: dict[Monomial, int] = {}
        for monom, coeff in f.items():
            exponents = [0] * self.ngens
            for i, a in enumerate(monom):
                if a == 0:
                    continue
                if mapping[i] is None:
                    raise RingMismatchError(
                        f"Variable {source[i]} does not exist in ring with {self.variables}."
                    )
                exponents[mapping[i]] = a
            terms[tuple(exponents)] = int(coeff)
        return self.from_terms(terms)

    def with_order(self, order: MonomialOrder) -> PolynomialRing:
        """Same variables and field, another order."""
        return dataclasses.replace(self, order=order)

    def extend(
        self,
        names: Sequence[str],
        prepend: bool = False,
        order: MonomialOrder | None = None,
    ) -> PolynomialRing:
        """Ring with the extra variables ``names`` appended (or prepended)."""
        clashes = set(names) & set(self.variables)
        if clashes:
            raise ValueError(f"Variables {sorted(clashes)} already exist in {self.variables}.")
        variables = (*names, *self.variables) if prepend else (*self.variables, *names)
        return PolynomialRing(tuple(variables), self.field, order or GREVLEX)

    def __str__(self):
        return f"F_{self.p}[{', '.join(self.variables)}]"


def level_q(p: int, e: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Return q = p^e after checking the level against the budget."""
    if e < 0:
        raise ValueError(f"Frobenius level must be non-negative, got {e}.")
    q = p**e
    budgets.check("max_q", q)
    return q


def characteristic(f: Poly) -> int:
    """Characteristic of the coefficient field of ``f``."""
    return int(f.ring.domain.characteristic())


def check_same_ring(*polys: Poly) -> None:
    """Raise RingMismatchError unless all polynomials share one ring."""
    rings = {f.ring for f in polys}
    if len(rings) > 1:
        raise RingMismatchError("Polynomials belong to different rings.")


def poly_add(f: Poly, g: Poly) -> Poly:
    """Sum of two polynomials of the same ring."""
    check_same_ring(f, g)
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    """Product of two polynomials of the same ring."""
    check_same_ring(f, g)
    return f * g


def poly_frobenius_pow(f: Poly, e: int) -> Poly:
    """Return f^{p^e}.

    Over F_p every coefficient is fixed by Frobenius, so the power just multiplies
    each exponent vector by q. No expansion takes place.
    """
    if e < 0:
        raise ValueError(f"Frobenius level must be non-negative, got {e}.")
    if e == 0 or not f:
        return f
    q = characteristic(f) ** e
    return f.ring.from_dict({tuple(a * q for a in monom): c for monom, c in f.items()})


def monomial_in_bracket_max(
    monom: Monomial, q: int, variables: Iterable[int] | None = None
) -> bool:
    """Whether x^monom lies in (x_i^q : i in variables)."""
    indices = range(len(monom)) if variables is None else variables
    return any(monom[i] >= q for i in indices)


def poly_in_bracket_max(f: Poly, q: int, variables: Iterable[int] | None = None) -> bool:
    """Whether ``f`` lies in the bracket power m^{[q]} of the variable ideal m.

    The bracket power of a variable-generated ideal is a monomial ideal, so the test
    is termwise. The zero polynomial is contained.
    """
    indices = tuple(range(f.ring.ngens) if variables is None else variables)
    return all(monomial_in_bracket_max(monom, q, indices) for monom in f.keys())


def truncate_bracket(f: Poly, q: int, variables: Sequence[int] | None = None) -> Poly:
    """Image of ``f`` in R/m^{[q]}: drop every term lying in m^{[q]}."""
    indices = tuple(range(f.ring.ngens) if variables is None else variables)
    kept = {m: c for m, c in f.items() if not monomial_in_bracket_max(m, q, indices)}
    if len(kept) == len(f):
        return f
    return f.ring.from_dict(kept)


def lowest_degree(f: Poly, variables: Sequence[int] | None = None) -> int:
    """Smallest total degree in ``variables`` of a term of ``f`` (order of vanishing)."""
    if not f:
        raise ValueError("The zero polynomial has no lowest degree.")
    indices = tuple(range(f.ring.ngens) if variables is None else variables)
    return min(sum(monom[i] for i in indices) for monom in f.keys())


def grevlex_descending(monoms: Iterable[Monomial]) -> list[Monomial]:
    """Sort exponent vectors from largest to smallest in grevlex."""
    return sorted(monoms, key=orderings.grevlex, reverse=True)


def _coefficient(f: Poly, c) -> int:
    if f.ring.domain == ZZ:
        return int(c)
    return int(c) % characteristic(f)


def format_monomial(monom: Monomial, symbols: Sequence[str]) -> str:
    """Render an exponent vector as ``x^a*y^b`` (empty for the constant monomial)."""
    factors = []
    for name, a in zip(symbols, monom):
        if a == 1:
            factors.append(name)
        elif a > 1:
            factors.append(f"{name}^{a}")
    return "*".join(factors)


def format_poly(f: Poly) -> str:
    """Canonical text of ``f``: descending grevlex, residues 0..p-1 over F_p."""
    if not f:
        return "0"
    symbols = [str(s) for s in f.ring.symbols]
    parts = []
    for monom in grevlex_descending(f.keys()):
        coeff = _coefficient(f, f[monom])
        body = format_monomial(monom, symbols)
        magnitude = abs(coeff)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if not parts:
            parts.append(f"-{text}" if coeff < 0 else text)
        else:
            parts.append(f"- {text}" if coeff < 0 else f"+ {text}")
    return " ".join(parts)
