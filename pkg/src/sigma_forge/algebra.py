"""Tensor products of GF(2) polynomial quotient rings.

A shape fixes moduli M_1, ..., M_d and the algebra
F2[X_1]/M_1 (x) ... (x) F2[X_d]/M_d; elements are coefficient vectors
over the monomial basis {x_1^{k_1} ... x_d^{k_d}}, flattened row-major
with axis 1 slowest.  That flat order matches the Kronecker-product
index convention in :mod:`.gf2`, so the multiplication operator of x_i
is I (x) ... (x) C_i (x) ... (x) I with C_i the companion matrix of
M_i, with no basis permutation.

For grid games the moduli are the Chebyshev-type Q_n and phi /
phi_inverse translate between the monomial basis and the standard grid
basis (grid basis vector i pulls back to Q_i(x), with phi(1) the
index-0 grid vector).

Divisibility is decided by linear algebra: u divides t iff t lies in
the image of the multiplication-by-u operator.
"""
from __future__ import annotations

from functools import lru_cache, reduce
from typing import Optional, Sequence

import numpy as np

from . import gf2, poly2
from .gf2 import BitMatrix, BitVector
from .poly2 import Poly2, chebyshev_q


class QuotientShape:
    """Moduli (M_1, ..., M_d), each of degree >= 1."""

    def __init__(self, moduli: Sequence[Poly2]):
        moduli = tuple(moduli)
        if not moduli:
            raise ValueError("need at least one modulus")
        for m in moduli:
            if m.degree < 1:
                raise ValueError(f"modulus {m!r} must have degree >= 1")
        self.moduli = moduli
        self.dims = tuple(m.degree for m in moduli)
        self.total = 1
        for n in self.dims:
            self.total *= n
        strides = []
        acc = 1
        for n in reversed(self.dims):
            strides.append(acc)
            acc *= n
        self.strides = tuple(reversed(strides))
        self.is_chebyshev = all(m == chebyshev_q(n) for m, n in zip(self.moduli, self.dims))
        self._axis_ops: Optional[list] = None
        self._phi: Optional[BitMatrix] = None
        self._phi_inv: Optional[BitMatrix] = None

    @classmethod
    def chebyshev(cls, dims: Sequence[int]) -> "QuotientShape":
        """The grid-game algebra: modulus Q_n per axis of size n."""
        return cls([chebyshev_q(n) for n in dims])

    @classmethod
    def monomial(cls, powers: Sequence[int]) -> "QuotientShape":
        """Local algebras k[X]/X^p per axis (powers >= 1)."""
        return cls([Poly2.x_power(p) for p in powers])

    @property
    def d(self) -> int:
        return len(self.dims)

    def flat_index(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.d:
            raise ValueError(f"expected {self.d} exponents, got {len(exponents)}")
        j = 0
        for e, n in zip(exponents, self.dims):
            if not 0 <= e < n:
                raise ValueError(f"exponent {e} out of range for axis size {n}")
            j = j * n + e
        return j

    def exponents_of(self, flat: int) -> tuple:
        out = []
        for s, n in zip(self.strides, self.dims):
            out.append((flat // s) % n)
        return tuple(out)

    def axis_mult_ops(self) -> list:
        """Multiplication-by-x_i operators, one full-size matrix per axis."""
        if self._axis_ops is None:
            ops = []
            for i in range(self.d):
                factors = [BitMatrix.identity(n) for n in self.dims]
                factors[i] = _companion(self.moduli[i])
                ops.append(reduce(gf2.kronecker, factors))
            self._axis_ops = ops
        return self._axis_ops

    def phi_matrix(self) -> BitMatrix:
        self._require_chebyshev()
        if self._phi is None:
            self._phi = reduce(gf2.kronecker, [_phi_axis(n) for n in self.dims])
        return self._phi

    def phi_inverse_matrix(self) -> BitMatrix:
        self._require_chebyshev()
        if self._phi_inv is None:
            self._phi_inv = reduce(gf2.kronecker, [_phi_inv_axis(n) for n in self.dims])
        return self._phi_inv

    def _require_chebyshev(self):
        if not self.is_chebyshev:
            raise ValueError("operation requires Chebyshev moduli (grid context)")

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientShape):
            return NotImplemented
        return self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return f"QuotientShape({', '.join(map(str, self.moduli))})"


def _companion(m: Poly2) -> BitMatrix:
    """Companion matrix of m acting on the monomial basis of k[X]/m."""
    n = m.degree
    low = m.value ^ (1 << n)  # x^n reduces to the low-order part of m
    cols = [BitVector.from_indices(n, [k + 1]) for k in range(n - 1)]
    cols.append(BitVector.from_int(n, low))
    return BitMatrix.from_columns(cols)


@lru_cache(maxsize=None)
def _phi_axis(n: int) -> BitMatrix:
    """Matrix of phi on one axis: column i is J_n^i applied to e_0."""
    cols = []
    bits = np.zeros(n, dtype=np.uint8)
    bits[0] = 1
    for _ in range(n):
        cols.append(BitVector.from_bits(bits))
        nxt = np.zeros(n, dtype=np.uint8)
        nxt[1:] ^= bits[:-1]
        nxt[:-1] ^= bits[1:]
        bits = nxt
    return BitMatrix.from_columns(cols)


@lru_cache(maxsize=None)
def _phi_inv_axis(n: int) -> BitMatrix:
    """Inverse axis matrix: column i holds the coefficients of Q_i."""
    cols = [BitVector.from_int(n, chebyshev_q(i).value) for i in range(n)]
    return BitMatrix.from_columns(cols)


class TensorElement:
    """An element of the quotient tensor algebra, in the monomial basis."""

    def __init__(self, shape: QuotientShape, coeffs: BitVector):
        if coeffs.n != shape.total:
            raise ValueError(f"coefficient length {coeffs.n} != algebra dimension {shape.total}")
        self.shape = shape
        self.coeffs = coeffs

    @classmethod
    def zero(cls, shape: QuotientShape) -> "TensorElement":
        return cls(shape, BitVector.zeros(shape.total))

    @classmethod
    def one(cls, shape: QuotientShape) -> "TensorElement":
        return cls.from_axis_polys(shape, [poly2.ONE] * shape.d)

    @classmethod
    def variable(cls, shape: QuotientShape, axis: int) -> "TensorElement":
        """The class of X_axis (reduced, so it may collapse when n=1)."""
        polys = [poly2.ONE] * shape.d
        polys[axis] = poly2.X
        return cls.from_axis_polys(shape, polys)

    @classmethod
    def monomial(cls, shape: QuotientShape, exponents: Sequence[int]) -> "TensorElement":
        """x_1^{e_1} ... x_d^{e_d}, each factor reduced mod its modulus."""
        if len(exponents) != shape.d:
            raise ValueError(f"expected {shape.d} exponents, got {len(exponents)}")
        return cls.from_axis_polys(shape, [Poly2.x_power(e) for e in exponents])

    @classmethod
    def from_axis_polys(cls, shape: QuotientShape, polys: Sequence[Poly2]) -> "TensorElement":
        """The separable element p_1(x_1) ... p_d(x_d)."""
        if len(polys) != shape.d:
            raise ValueError(f"expected {shape.d} polynomials, got {len(polys)}")
        acc = None
        for p, m, n in zip(polys, shape.moduli, shape.dims):
            r = p % m
            bits = np.zeros(n, dtype=np.uint8)
            for k in range(r.value.bit_length()):
                bits[k] = (r.value >> k) & 1
            acc = bits if acc is None else np.multiply.outer(acc, bits).ravel()
        return cls(shape, BitVector(shape.total, gf2._pack_bits(acc)))

    def is_zero(self) -> bool:
        return self.coeffs.is_zero()

    def constant_coefficient(self) -> int:
        """Coefficient of the constant monomial (the element at (0,...,0))."""
        return self.coeffs[0]

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check_shape(other)
        return TensorElement(self.shape, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        return tensor_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.shape == other.shape and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.shape, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for j in range(self.shape.total):
            if self.coeffs[j]:
                exps = self.shape.exponents_of(j)
                factors = [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                           for i, e in enumerate(exps) if e > 0]
                terms.append("*".join(factors) if factors else "1")
        return " + ".join(terms) if terms else "0"

    def _check_shape(self, other: "TensorElement"):
        if self.shape != other.shape:
            raise ValueError("tensor elements live in different algebras")


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Product in the quotient algebra (each axis reduced mod its modulus)."""
    a._check_shape(b)
    shape = a.shape
    ops = shape.axis_mult_ops()
    acc = BitVector.zeros(shape.total)
    rest = a.coeffs.to_int()
    while rest:
        low = rest & -rest
        rest ^= low
        j = low.bit_length() - 1
        w = b.coeffs
        for i, e in enumerate(shape.exponents_of(j)):
            for _ in range(e):
                w = ops[i].mul_vec(w)
        acc ^= w
    return TensorElement(shape, acc)


def mult_operator(u: TensorElement) -> BitMatrix:
    """Matrix of multiplication by u in the monomial basis.

    Column j holds u * m_j; columns are produced incrementally, each one
    a single multiply-by-x_i step away from an earlier column.
    """
    shape = u.shape
    ops = shape.axis_mult_ops()
    cols: list = [None] * shape.total
    cols[0] = u.coeffs
    for j in range(1, shape.total):
        for i in range(shape.d - 1, -1, -1):
            if (j // shape.strides[i]) % shape.dims[i]:
                break
        cols[j] = ops[i].mul_vec(cols[j - shape.strides[i]])
    return BitMatrix.from_columns(cols)


def divides(u: TensorElement, t: TensorElement) -> bool:
    """Whether some v satisfies u*v = t, decided by image membership."""
    u._check_shape(t)
    return gf2.solve(mult_operator(u), t.coeffs) is not None


def divides_all(u: TensorElement, targets: Sequence[TensorElement]) -> list:
    """divides(u, t) for many t with one operator and one elimination."""
    for t in targets:
        u._check_shape(t)
    return gf2.in_image_many(mult_operator(u), [t.coeffs for t in targets])


def phi(element, shape: Optional[QuotientShape] = None) -> BitVector:
    """Monomial-basis coordinates to standard grid coordinates.

    Accepts a TensorElement, or a list of per-axis Poly2 (the separable
    element) together with an explicit shape.  Requires Chebyshev moduli.
    """
    if isinstance(element, TensorElement):
        if shape is not None and shape != element.shape:
            raise ValueError("shape argument disagrees with element shape")
        shape = element.shape
    else:
        if shape is None:
            raise ValueError("a list of axis polynomials needs an explicit shape")
        element = TensorElement.from_axis_polys(shape, list(element))
    return shape.phi_matrix().mul_vec(element.coeffs)


def phi_inverse(v: BitVector, shape: QuotientShape) -> TensorElement:
    """Exact inverse of phi: grid coordinates back to the algebra."""
    if v.n != shape.total:
        raise ValueError(f"vector length {v.n} != algebra dimension {shape.total}")
    return TensorElement(shape, shape.phi_inverse_matrix().mul_vec(v))
