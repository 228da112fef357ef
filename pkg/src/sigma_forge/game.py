"""Sigma-game specifications on d-dimensional grids.

A game is a grid shape plus a set of exponent tuples; each tuple
(i_1, ..., i_d) contributes J^{i_1} (x) ... (x) J^{i_d} to the
generalized adjacency matrix, where J is the path adjacency matrix per
axis.  The four standard neighborhoods are presets:

    sigma-:box       the d unit tuples
    sigma+:box       unit tuples plus the all-zero tuple
    sigma-:boxtimes  all 0/1 tuples except all-zero
    sigma+:boxtimes  all 0/1 tuples

Cells are 1-based as usual, (j_1, ..., j_d) flattening row-major with
axis 1 slowest, the same convention as the tensor algebra.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from . import gf2
from .algebra import QuotientShape, TensorElement
from .gf2 import BitMatrix, BitVector

PRESET_NAMES = ("sigma+:box", "sigma-:box", "sigma+:boxtimes", "sigma-:boxtimes")


@dataclass(frozen=True)
class GridShape:
    dims: Tuple[int, ...]

    def __post_init__(self):
        if not self.dims:
            raise ValueError("grid needs at least one axis")
        if any(n < 1 for n in self.dims):
            raise ValueError(f"axis sizes must be >= 1, got {self.dims}")

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def total(self) -> int:
        t = 1
        for n in self.dims:
            t *= n
        return t

    def flat_index(self, cell: Sequence[int]) -> int:
        """Flat index of a 1-based cell (j_1, ..., j_d)."""
        if len(cell) != self.d:
            raise ValueError(f"cell {cell} has wrong arity for {self}")
        j = 0
        for c, n in zip(cell, self.dims):
            if not 1 <= c <= n:
                raise ValueError(f"cell coordinate {c} outside 1..{n}")
            j = j * n + (c - 1)
        return j

    def cells(self) -> Iterator[Tuple[int, ...]]:
        """All cells in flat order, 1-based."""
        return itertools.product(*(range(1, n + 1) for n in self.dims))

    def __str__(self) -> str:
        return "x".join(map(str, self.dims))


@dataclass(frozen=True)
class GameSpec:
    shape: GridShape
    terms: frozenset

    def __post_init__(self):
        for t in self.terms:
            if len(t) != self.shape.d:
                raise ValueError(f"term {t} has wrong arity for shape {self.shape}")
            if any(e < 0 for e in t):
                raise ValueError(f"term {t} has a negative exponent")

    @classmethod
    def preset(cls, name: str, shape: GridShape) -> "GameSpec":
        return cls(shape, preset_terms(name, shape.d))

    def label(self) -> str:
        """Canonical game string: a preset name when the terms match one."""
        for name in PRESET_NAMES:
            if self.terms == preset_terms(name, self.shape.d):
                return name
        parts = sorted(self.terms)
        return "custom:" + ";".join(",".join(map(str, t)) for t in parts)


def preset_terms(name: str, d: int) -> frozenset:
    units = {tuple(1 if i == k else 0 for i in range(d)) for k in range(d)}
    zero = tuple([0] * d)
    hypercube = set(itertools.product((0, 1), repeat=d))
    table = {
        "sigma-:box": units,
        "sigma+:box": units | {zero},
        "sigma-:boxtimes": hypercube - {zero},
        "sigma+:boxtimes": hypercube,
    }
    if name not in table:
        raise ValueError(f"unknown preset {name!r}; expected one of {PRESET_NAMES}")
    return frozenset(table[name])


def parse_shape(text: str) -> GridShape:
    """Shape grammar: '5x5', '3x4x5'."""
    if not re.fullmatch(r"\d+(x\d+)*", text):
        raise ValueError(f"bad shape {text!r}; expected e.g. '3x4x5'")
    return GridShape(tuple(int(p) for p in text.split("x")))


def parse_game(text: str, shape: GridShape) -> GameSpec:
    """Game grammar: a preset name, or 'custom:<tuple>;<tuple>;...'."""
    if text in PRESET_NAMES:
        return GameSpec.preset(text, shape)
    if text.startswith("custom:"):
        body = text[len("custom:"):]
        if not body:
            raise ValueError("custom game needs at least one exponent tuple")
        terms = []
        for part in body.split(";"):
            try:
                t = tuple(int(p) for p in part.split(","))
            except ValueError:
                raise ValueError(f"bad exponent tuple {part!r} in {text!r}") from None
            terms.append(t)
        return GameSpec(shape, frozenset(terms))
    raise ValueError(f"bad game {text!r}; expected a preset or 'custom:...'")


def make_j(n: int) -> BitMatrix:
    """Path adjacency matrix: ones directly above and below the diagonal."""
    if n < 1:
        raise ValueError(f"make_j needs n >= 1, got {n}")
    ints = []
    for i in range(n):
        v = 0
        if i > 0:
            v |= 1 << (i - 1)
        if i + 1 < n:
            v |= 1 << (i + 1)
        ints.append(v)
    return BitMatrix.from_row_ints(n, n, ints, symmetric=True, _trusted=True)


@lru_cache(maxsize=None)
def _j_power(n: int, e: int) -> BitMatrix:
    return make_j(n).pow(e)


@lru_cache(maxsize=None)
def _j_power_bits(n: int, e: int):
    bits = _j_power(n, e).to_bit_array()
    bits.flags.writeable = False
    return bits


@lru_cache(maxsize=512)
def adjacency_matrix(g: GameSpec) -> BitMatrix:
    """Sum over terms of Kronecker products of path-matrix powers."""
    total = g.shape.total
    acc = np.zeros((total, total), dtype=np.uint8)
    for term in sorted(g.terms):
        factors = [_j_power_bits(n, e) for n, e in zip(g.shape.dims, term)]
        acc ^= reduce(gf2._kron_bits, factors)
    return BitMatrix._from_bit_array(acc, symmetric=True, _trusted=True)


def is_sigma_plus(g: GameSpec) -> bool:
    """Whether every push toggles its own cell (all-ones diagonal)."""
    return adjacency_matrix(g).diagonal() == BitVector.ones(g.shape.total)


def quotient_shape(shape: GridShape) -> QuotientShape:
    return QuotientShape.chebyshev(shape.dims)


def u_element(g: GameSpec) -> TensorElement:
    """The algebra element whose multiplication operator is the game."""
    qs = quotient_shape(g.shape)
    acc = TensorElement.zero(qs)
    for term in sorted(g.terms):
        acc = acc + TensorElement.monomial(qs, term)
    return acc


def _axis_j_matrices(shape: GridShape) -> list:
    out = []
    for i in range(shape.d):
        factors = [BitMatrix.identity(n) for n in shape.dims]
        factors[i] = make_j(shape.dims[i])
        out.append(reduce(gf2.kronecker, factors))
    return out


def check_commutes(target: Union[GameSpec, BitMatrix],
                   shape: Optional[GridShape] = None) -> bool:
    """Whether the matrix commutes with every elementary axis game.

    Structurally true for GameSpec-built matrices; the matrix form exists
    for externally loaded matrices.
    """
    if isinstance(target, GameSpec):
        m = adjacency_matrix(target)
        shape = target.shape
    else:
        m = target
        if shape is None:
            raise ValueError("a raw matrix needs an explicit grid shape")
        if m.rows != shape.total or m.cols != shape.total:
            raise ValueError(f"matrix is {m.rows}x{m.cols}, shape wants {shape.total}")
    return all(m @ e == e @ m for e in _axis_j_matrices(shape))
