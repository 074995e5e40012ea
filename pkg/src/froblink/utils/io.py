"""Contains reading, writing and reduction of integer ideal files.

An ideal file looks like::

    # comments start with a hash
    label: cusp
    ring: x, y
    gens: x^2 + y^3
    height: 1

Generators are separated by commas or newlines and may continue on the lines
after ``gens:``. A term is ``c*x1^a1*...*xn^an`` where the ``*`` between the
coefficient and the first variable may be omitted.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import re
from pathlib import Path
from typing import Iterator, NamedTuple

from sympy.ntheory import primefactors
from sympy.polys.domains import ZZ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from froblink.algebra.ffpoly import PolynomialRing, PrimeField, format_poly
from froblink.algebra.ideal import Ideal
from froblink.errors import BadPrimeError, IdealSyntaxError

LOGGER = logging.getLogger(__name__)

_KEY_RE = re.compile(r"\s*([A-Za-z_]+)\s*:")
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_KEYS = ("ring", "gens", "label", "height")


@dataclasses.dataclass(frozen=True)
class IntegerIdealSpec:
    """An ideal of Z[variables] as read from an ideal file."""

    variables: tuple[str, ...]
    generators: tuple[PolyElement, ...]
    label: str | None = None
    # Height declared in the file, if any.
    height: int | None = None


@functools.lru_cache(maxsize=64)
def integer_ring(variables: tuple[str, ...]) -> PolyRing:
    """The ring Z[variables] with grevlex order."""
    return PolyRing(list(variables), ZZ, grevlex)


class _Token(NamedTuple):
    kind: str
    text: str
    column: int


def _tokenize(text: str, line: int, column: int) -> Iterator[_Token]:
    position = 0
    while position < len(text):
        char = text[position]
        if char.isspace():
            position += 1
            continue
        if char.isdigit():
            end = position
            while end < len(text) and text[end].isdigit():
                end += 1
            yield _Token("number", text[position:end], column + position)
            position = end
            continue
        match = _NAME_RE.match(text, position)
        if match:
            yield _Token("name", match.group(), column + position)
            position = match.end()
            continue
        if char in "+-*^":
            yield _Token(char, char, column + position)
            position += 1
            continue
        raise IdealSyntaxError(f"unexpected character {char!r}", line, column + position)


class _PolynomialParser:
    """Recursive descent over the tokens of one generator."""

    def __init__(self, text: str, ring: PolyRing, line: int, column: int):
        self.tokens = list(_tokenize(text, line, column))
        self.ring = ring
        self.line = line
        self.end_column = column + len(text)
        self.position = 0
        self.index = {str(s): i for i, s in enumerate(ring.symbols)}

    def _peek(self) -> _Token | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _error(self, message: str, token: _Token | None) -> IdealSyntaxError:
        column = token.column if token is not None else self.end_column
        return IdealSyntaxError(message, self.line, column)

    def _expect(self, kind: str) -> _Token:
        token = self._peek()
        if token is None or token.kind != kind:
            raise self._error(f"expected {kind}", token)
        self.position += 1
        return token

    def parse(self) -> PolyElement:
        if not self.tokens:
            raise self._error("empty generator", None)
        result = self.ring.zero
        sign = 1
        token = self._peek()
        if token.kind in "+-":
            sign = -1 if token.kind == "-" else 1
            self.position += 1
        result += sign * self._term()
        while (token := self._peek()) is not None:
            if token.kind not in "+-":
                raise self._error(f"unexpected {token.text!r}", token)
            self.position += 1
            sign = -1 if token.kind == "-" else 1
            result += sign * self._term()
        return result

    def _term(self) -> PolyElement:
        coefficient = 1
        exponents = [0] * self.ring.ngens
        token = self._peek()
        if token is None:
            raise self._error("expected a term", None)
        seen_factor = False
        if token.kind == "number":
            coefficient = int(token.text)
            self.position += 1
            seen_factor = True
            following = self._peek()
            if following is not None and following.kind == "*":
                self.position += 1
                self._variable_power(exponents)
            elif following is not None and following.kind == "name":
                self._variable_power(exponents)
        else:
            self._variable_power(exponents)
            seen_factor = True
        while seen_factor and (token := self._peek()) is not None and token.kind == "*":
            self.position += 1
            following = self._peek()
            if following is not None and following.kind == "number":
                coefficient *= int(following.text)
                self.position += 1
            else:
                self._variable_power(exponents)
        return self.ring.from_dict({tuple(exponents): coefficient})

    def _variable_power(self, exponents: list[int]) -> None:
        token = self._peek()
        if token is None or token.kind != "name":
            raise self._error("expected a variable", token)
        if token.text not in self.index:
            raise self._error(f"unknown variable {token.text!r}", token)
        self.position += 1
        power = 1
        following = self._peek()
        if following is not None and following.kind == "^":
            self.position += 1
            power = int(self._expect("number").text)
        exponents[self.index[token.text]] += power


def parse_polynomial(text: str, variables: tuple[str, ...], line: int = 1) -> PolyElement:
    """Parse one integer polynomial in the ideal file syntax."""
    return _PolynomialParser(text, integer_ring(variables), line, 1).parse()


def _split_generators(text: str, column: int) -> Iterator[tuple[str, int]]:
    start = 0
    for piece in text.split(","):
        yield piece, column + start
        start += len(piece) + 1


def parse_ideal_file(text: str) -> IntegerIdealSpec:
    """Parse the text of an ideal file.

    Raises:
        IdealSyntaxError: with the line and column of the first problem.
    """
    variables: tuple[str, ...] | None = None
    label = None
    height = None
    generators: list[PolyElement] = []
    in_gens = False
    last_line = 1

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        key_match = _KEY_RE.match(content)
        body_column = 1
        body = content
        if key_match and key_match.group(1) in _KEYS:
            key = key_match.group(1)
            body = content[key_match.end() :]
            body_column = key_match.end() + 1
            in_gens = False
            if key == "ring":
                names = [name.strip() for name in body.split(",")]
                for name in names:
                    if not _NAME_RE.fullmatch(name):
                        column = body_column + body.find(name) if name else body_column
                        raise IdealSyntaxError(f"invalid variable {name!r}", line_number, column)
                if len(set(names)) != len(names):
                    raise IdealSyntaxError("duplicate variable", line_number, body_column)
                variables = tuple(names)
                continue
            if key == "label":
                label = body.strip()
                continue
            if key == "height":
                if not body.strip().isdigit():
                    raise IdealSyntaxError("height must be an integer", line_number, body_column)
                height = int(body.strip())
                continue
            in_gens = True
            if variables is None:
                raise IdealSyntaxError("'gens:' before 'ring:'", line_number, 1)
            if not body.strip():
                continue
        elif key_match:
            raise IdealSyntaxError(f"unknown key {key_match.group(1)!r}", line_number, 1)
        elif not in_gens:
            raise IdealSyntaxError("expected 'ring:' or 'gens:'", line_number, 1)

        for piece, column in _split_generators(body, body_column):
            if not piece.strip():
                raise IdealSyntaxError("empty generator", line_number, column)
            f = _PolynomialParser(piece, integer_ring(variables), line_number, column).parse()
            if not f:
                first = column + len(piece) - len(piece.lstrip())
                raise IdealSyntaxError("generator is zero", line_number, first)
            generators.append(f)

    if variables is None:
        raise IdealSyntaxError("missing 'ring:' line", last_line, 1)
    if not generators:
        raise IdealSyntaxError("no generators", last_line, 1)
    return IntegerIdealSpec(variables, tuple(generators), label, height)


def load_ideal_spec(path: Path) -> IntegerIdealSpec:
    """Read and parse an ideal file."""
    LOGGER.debug("Reading ideal file %s", path)
    return parse_ideal_file(Path(path).read_text(encoding="utf-8"))


def format_ideal_spec(spec: IntegerIdealSpec) -> str:
    """Canonical text of an ideal file; parsing it gives back ``spec``."""
    lines = []
    if spec.label:
        lines.append(f"label: {spec.label}")
    lines.append(f"ring: {', '.join(spec.variables)}")
    if spec.height is not None:
        lines.append(f"height: {spec.height}")
    lines.append("gens:")
    lines.extend(f"  {format_poly(f)}" for f in spec.generators)
    return "\n".join(lines) + "\n"


def bad_prime_bound(spec: IntegerIdealSpec) -> int:
    """Largest prime dividing a coefficient of a generator (1 if there is none)."""
    bound = 1
    for f in spec.generators:
        for coeff in f.values():
            factors = primefactors(abs(int(coeff)))
            if factors:
                bound = max(bound, max(factors))
    return bound


def reduce_mod_p(spec: IntegerIdealSpec, p: int) -> Ideal:
    """Image of the ideal in F_p[variables].

    Raises:
        ValueError: if p is not prime.
        BadPrimeError: if a generator vanishes mod p.
    """
    ring = PolynomialRing(spec.variables, PrimeField(p))
    images = []
    for index, f in enumerate(spec.generators, start=1):
        image = ring.convert(f)
        if not image:
            raise BadPrimeError(p, f"generator {index} ({format_poly(f)}) vanishes mod {p}")
        images.append(image)
    return Ideal(ring, images)
