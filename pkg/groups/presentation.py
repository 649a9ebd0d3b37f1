"""
groups.presentation
-------------------
Finitely presented base groups: words, presentations, builders and the text format.

Presentation file format::

    # comment lines and blank lines are ignored
    x0 x1 x2                                  <- generator names
    x0 x1^-1 x0^-1 x1 x2^-1 x1^-1 x2 x0^-1 x2^-1   <- one relator per line

A letter is a generator name with an optional integer exponent ``^k``; ``x^k`` expands
to |k| letters of exponent sign(k).
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Sequence

from common.errors import ParseError, PreconditionError, ShapeError

logger = logging.getLogger(__name__)

_LETTER = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Word:
    """A word as (generator index, exponent +-1) letters."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for gen, exp in self.letters:
            if exp not in (1, -1):
                raise PreconditionError(f"letter exponents must be +1 or -1, got {exp}")
            if gen < 0:
                raise PreconditionError(f"negative generator index {gen}")

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> Word:
        return Word(tuple((gen, -exp) for gen, exp in reversed(self.letters)))

    def max_generator(self) -> int:
        return max((gen for gen, _ in self.letters), default=-1)


def commutator(a: int, b: int) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    return Word(((a, 1), (b, 1), (a, -1), (b, -1)))


@dataclass(frozen=True)
class Presentation:
    """<generators | relators>, plus caller-supplied Euler characteristic metadata."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]
    euler_characteristic: Optional[int] = None
    label: str = "custom"
    is_torus: bool = False
    boundary_genus: Optional[int] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.generator_names:
            raise ShapeError("a presentation needs at least one generator")
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ParseError(f"duplicate generator names in {self.generator_names}")
        for r in self.relators:
            if r.max_generator() >= self.generator_count:
                raise ShapeError(f"relator uses generator {r.max_generator()} of {self.generator_count}")

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def with_euler_characteristic(self, chi: int) -> Presentation:
        return replace(self, euler_characteristic=chi)

    def describe(self) -> str:
        if self.is_torus:
            return f"T^{self.generator_count}"
        if self.boundary_genus is not None:
            return f"{self.label} (genus {self.boundary_genus} boundary)"
        return self.label

    def format_word(self, w: Word) -> str:
        return " ".join(
            self.generator_names[gen] if exp == 1 else f"{self.generator_names[gen]}^-1" for gen, exp in w.letters
        )


def exponent_sum_vector(w: Word, P: Presentation) -> tuple[int, ...]:
    """Signed occurrence count of each generator (the image of w in the abelianization)."""
    counts = [0] * P.generator_count
    for gen, exp in w.letters:
        if gen >= P.generator_count:
            raise ShapeError(f"generator index {gen} out of range for {P.generator_count} generators")
        counts[gen] += exp
    return tuple(counts)


def surface_presentation(g: int) -> Presentation:
    """pi_1 of the closed orientable genus-g surface: <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>."""
    if g < 2:
        raise PreconditionError(f"surface genus must be at least 2, got {g}")
    names = tuple(name for i in range(1, g + 1) for name in (f"a{i}", f"b{i}"))
    relator = Word()
    for i in range(g):
        relator = relator + commutator(2 * i, 2 * i + 1)
    return Presentation(names, (relator,), euler_characteristic=2 - 2 * g, label=f"surface g={g}")


def pz_presentation(n: int = 3, ell: int = 1) -> Presentation:
    """The hyperbolic 3-manifold group G_{n,l} with totally geodesic genus n-1 boundary.

    Relator: prod_{i=0}^{n-1} x_{i(2-l)} x_{i(2-l)+1}^-1 x_{(i+1)(2-l)-1}^-1, indices mod n.
    The Euler characteristic is left unset.
    """
    if n < 3 or not 0 <= ell < n or math.gcd(n, 2 - ell) != 1:
        raise PreconditionError(f"G_(n,l) needs n >= 3, 0 <= l < n and gcd(n, 2-l) = 1; got n={n}, l={ell}")
    step = 2 - ell
    letters = []
    for i in range(n):
        letters += [((i * step) % n, 1), ((i * step + 1) % n, -1), (((i + 1) * step - 1) % n, -1)]
    names = tuple(f"x{i}" for i in range(n))
    return Presentation(names, (Word(tuple(letters)),), label=f"G_{n},{ell}", boundary_genus=n - 1)


def torus_presentation(r: int) -> Presentation:
    """Z^r = <t1..tr | [ti, tj], i < j>, Euler characteristic 0."""
    if r < 1:
        raise PreconditionError(f"torus rank must be positive, got {r}")
    names = tuple(f"t{i}" for i in range(1, r + 1))
    relators = tuple(commutator(i, j) for i in range(r) for j in range(i + 1, r))
    return Presentation(names, relators, euler_characteristic=0, label=f"torus r={r}", is_torus=True)


def parse_word(text: str, names: Sequence[str]) -> Word:
    index = {name: i for i, name in enumerate(names)}
    letters: list[tuple[int, int]] = []
    for token in text.split():
        match = _LETTER.match(token)
        if not match or match.group(1) not in index:
            raise ParseError(f"unknown letter {token!r} (generators: {' '.join(names)})")
        power = int(match.group(2)) if match.group(2) is not None else 1
        if power == 0:
            raise ParseError(f"zero exponent in {token!r}")
        sign = 1 if power > 0 else -1
        letters += [(index[match.group(1)], sign)] * abs(power)
    return Word(tuple(letters))


def parse_presentation(text: str, euler_characteristic: Optional[int] = None, label: str = "custom") -> Presentation:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise ParseError("presentation text has no generator line")
    names = tuple(lines[0].split())
    relators = tuple(parse_word(line, names) for line in lines[1:])
    logger.debug("parsed presentation with %d generators and %d relators", len(names), len(relators))
    return Presentation(names, relators, euler_characteristic, label)


def load_presentation(path: str | Path, euler_characteristic: Optional[int] = None) -> Presentation:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read presentation file {path}: {exc}") from exc
    return parse_presentation(text, euler_characteristic, label=path.stem)


__all__ = [
    "Presentation",
    "Word",
    "commutator",
    "exponent_sum_vector",
    "load_presentation",
    "parse_presentation",
    "parse_word",
    "pz_presentation",
    "surface_presentation",
    "torus_presentation",
]
