"""Exact rotation angles.

An angle is a point of the circle group R/Z written as

    rational  +  sum_i  c_i * g_i      (mod 1)

with a reduced rational part, finitely many nonzero rational
coefficients c_i, and declared generators g_i that stand for irrational
reals assumed rationally independent of 1 and of each other.  Under
that assumption equality, rationality and vanishing are all decidable
by comparing coefficients, which is what makes the exact verdicts in
the rest of the package possible.

Angles are immutable.  Arithmetic canonicalizes eagerly: the rational
part is reduced into [0, 1) and zero coefficients are dropped, so
structural equality is semantic equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    AngleSyntaxError,
    ContextMismatch,
    MissingGeneratorValue,
)

__all__ = [
    "GeneratorContext",
    "ExactAngle",
    "parse_angle",
    "EMPTY_CONTEXT",
    "DEFAULT_GENERATOR_VALUE",
]

# (sqrt(5) - 1) / 2, truncated to 15 digits.  Used as the numeric stand-in
# for a generator whenever no explicit value is supplied.
DEFAULT_GENERATOR_VALUE = 0.618033988749894

_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


@dataclass(frozen=True)
class GeneratorContext:
    """Ordered list of declared irrational generators.

    ``values`` carries optional numeric stand-ins used only by the
    floating-point oracles; exact arithmetic never looks at them.
    """

    ids: tuple[str, ...]
    values: tuple[float | None, ...] = field(default=())

    def __post_init__(self):
        if len(set(self.ids)) != len(self.ids):
            raise ValueError(f"duplicate generator ids: {self.ids}")
        for name in self.ids:
            if not _IDENT_RE.match(name):
                raise ValueError(f"bad generator id {name!r}")
        if self.values and len(self.values) != len(self.ids):
            raise ValueError("generator value list does not match ids")

    def index(self, name: str) -> int:
        return self.ids.index(name)

    def float_values(self, overrides: Mapping[str, float] | None = None) -> dict[str, float]:
        """Numeric stand-ins for every generator, falling back to the default."""
        out: dict[str, float] = {}
        for i, name in enumerate(self.ids):
            if overrides and name in overrides:
                out[name] = float(overrides[name])
            elif self.values and self.values[i] is not None:
                out[name] = float(self.values[i])
            else:
                out[name] = DEFAULT_GENERATOR_VALUE
        return out


EMPTY_CONTEXT = GeneratorContext(())


def _merge_contexts(a: GeneratorContext, b: GeneratorContext) -> GeneratorContext:
    if a.ids == b.ids:
        return a if a.values else b
    if not a.ids:
        return b
    if not b.ids:
        return a
    raise ContextMismatch(f"cannot combine angles over generators {a.ids} and {b.ids}")


@dataclass(frozen=True)
class ExactAngle:
    """A circle-group element with decidable rationality.

    Do not call the constructor with unreduced data; use :meth:`make`,
    :meth:`rational_angle` or :func:`parse_angle`.
    """

    context: GeneratorContext
    rational: Fraction
    coefficients: tuple[tuple[str, Fraction], ...]

    # -- construction -------------------------------------------------

    @classmethod
    def make(
        cls,
        context: GeneratorContext,
        rational: Fraction | int = 0,
        coefficients: Mapping[str, Fraction] | Iterable[tuple[str, Fraction]] = (),
    ) -> "ExactAngle":
        items = dict(coefficients)
        for name in items:
            if name not in context.ids:
                raise ContextMismatch(f"generator {name!r} not declared in context {context.ids}")
        ordered = tuple(
            (name, Fraction(items[name]))
            for name in context.ids
            if name in items and items[name] != 0
        )
        return cls(context, Fraction(rational) % 1, ordered)

    @classmethod
    def rational_angle(cls, value: Fraction | int, context: GeneratorContext = EMPTY_CONTEXT) -> "ExactAngle":
        return cls.make(context, Fraction(value))

    @classmethod
    def zero(cls, context: GeneratorContext = EMPTY_CONTEXT) -> "ExactAngle":
        return cls.make(context, 0)

    # -- group structure ----------------------------------------------

    def __add__(self, other: "ExactAngle") -> "ExactAngle":
        ctx = _merge_contexts(self.context, other.context)
        coeffs = dict(self.coefficients)
        for name, c in other.coefficients:
            coeffs[name] = coeffs.get(name, Fraction(0)) + c
        return ExactAngle.make(ctx, self.rational + other.rational, coeffs)

    def __neg__(self) -> "ExactAngle":
        return ExactAngle.make(
            self.context, -self.rational, {n: -c for n, c in self.coefficients}
        )

    def __sub__(self, other: "ExactAngle") -> "ExactAngle":
        return self + (-other)

    def scale(self, k: int) -> "ExactAngle":
        """Integer multiple of the angle (k may be negative)."""
        return ExactAngle.make(
            self.context, self.rational * k, {n: c * k for n, c in self.coefficients}
        )

    # -- decidable predicates -----------------------------------------

    def is_rational(self) -> bool:
        """True iff the angle lies in Q/Z, i.e. all generator terms cancel."""
        return not self.coefficients

    def is_zero(self) -> bool:
        """True iff the angle is an integer, i.e. trivial in R/Z."""
        return self.rational == 0 and not self.coefficients

    def rational_denominator(self) -> int:
        """Denominator of the rational part (1 for an integer angle)."""
        return self.rational.denominator

    # -- numeric evaluation -------------------------------------------

    def to_float(self, values: Mapping[str, float] | None = None) -> float:
        """Approximate the angle in [0, 1) using numeric generator values.

        Values default to the ones attached to the context, then to
        DEFAULT_GENERATOR_VALUE.  Raises MissingGeneratorValue only if a
        generator is absent from the supplied mapping when one is given
        explicitly without covering it.
        """
        if values is None:
            values = self.context.float_values()
        x = float(self.rational)
        for name, c in self.coefficients:
            if name not in values:
                raise MissingGeneratorValue(name)
            x += float(c) * values[name]
        return x % 1.0

    # -- presentation ---------------------------------------------------

    def __str__(self) -> str:
        parts = [str(self.rational)]
        for name, c in self.coefficients:
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {abs(c)}*{name}")
        return " ".join(parts)


def _parse_rat(chunk: str, whole: str) -> Fraction:
    try:
        return Fraction(chunk)
    except ZeroDivisionError:
        raise AngleSyntaxError(f"zero denominator in {chunk!r} (in {whole!r})") from None


def parse_angle(text: str, context: GeneratorContext = EMPTY_CONTEXT) -> ExactAngle:
    """Parse an angle expression.

    Grammar (whitespace-insensitive)::

        angle  :=  rat
                |  rat (('+' | '-') rat '*' ident)+
                |  rat? (('+' | '-')? rat '*' ident)+
        rat    :=  int | int '/' posint

    Every identifier must be declared in ``context``.
    """
    stripped = text.strip()
    if not stripped:
        raise AngleSyntaxError("empty angle expression")
    # split into signed chunks; signs only occur between terms or leading
    chunks = re.findall(r"[+-]?[^+-]+", stripped.replace(" ", "").replace("\t", ""))
    if not chunks or "".join(chunks) != stripped.replace(" ", "").replace("\t", ""):
        raise AngleSyntaxError(f"cannot tokenize angle expression {text!r}")
    rational = Fraction(0)
    seen_rational = False
    coeffs: dict[str, Fraction] = {}
    for chunk in chunks:
        if "*" in chunk:
            coef_text, _, ident = chunk.partition("*")
            if not _RAT_RE.match(coef_text):
                raise AngleSyntaxError(f"bad coefficient {coef_text!r} in {text!r}")
            if not _IDENT_RE.match(ident):
                raise AngleSyntaxError(f"bad generator name {ident!r} in {text!r}")
            if ident not in context.ids:
                raise ContextMismatch(f"generator {ident!r} not declared (have {context.ids})")
            coeffs[ident] = coeffs.get(ident, Fraction(0)) + _parse_rat(coef_text, text)
        else:
            if seen_rational:
                raise AngleSyntaxError(f"two rational terms in angle expression {text!r}")
            if not _RAT_RE.match(chunk):
                raise AngleSyntaxError(f"bad rational term {chunk!r} in {text!r}")
            rational = _parse_rat(chunk, text)
            seen_rational = True
    return ExactAngle.make(context, rational, coeffs)
