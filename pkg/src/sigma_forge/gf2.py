"""Bit-packed exact linear algebra over GF(2).

Vectors and matrices store their coordinates packed into 64-bit machine
words (coordinate k lives in word k // 64 at bit k % 64); row operations
are whole-word XORs vectorized with numpy.  All values are immutable
after construction and all operations are pure functions, so everything
here can be shared freely across threads.

Elimination is deterministic: pivots are the first nonzero row in column
order, rows are swapped, and free variables are fixed to zero when a
solution is extracted.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

_WORD = 64  # internal word width; public behavior does not depend on it
_ONE = np.uint64(1)


def _nwords(n: int) -> int:
    return (n + _WORD - 1) >> 6


def _pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 1-D uint8 0/1 array into little-endian uint64 words."""
    n = bits.shape[0]
    packed = np.packbits(bits, bitorder="little")
    buf = np.zeros(_nwords(n) * 8, dtype=np.uint8)
    buf[: packed.shape[0]] = packed
    return buf.view(np.uint64)


def _unpack_words(words: np.ndarray, n: int) -> np.ndarray:
    """Unpack uint64 words to a 1-D uint8 0/1 array of length n."""
    return np.unpackbits(np.ascontiguousarray(words).view(np.uint8), bitorder="little")[:n]


def _unpack_words_2d(words: np.ndarray, ncols: int) -> np.ndarray:
    return np.unpackbits(np.ascontiguousarray(words).view(np.uint8),
                         axis=1, bitorder="little")[:, :ncols]


def _int_to_words(value: int, n: int) -> np.ndarray:
    value &= (1 << n) - 1
    raw = value.to_bytes(_nwords(n) * 8, "little")
    return np.frombuffer(raw, dtype=np.uint64).copy()


class BitVector:
    """An immutable length-n vector over GF(2); addition is XOR."""

    __slots__ = ("n", "_words")

    def __init__(self, n: int, words: Optional[np.ndarray] = None):
        if n < 0:
            raise ValueError(f"negative length {n}")
        self.n = n
        if words is None:
            words = np.zeros(_nwords(n), dtype=np.uint64)
        self._words = words
        self._words.flags.writeable = False

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls.from_int(n, (1 << n) - 1)

    @classmethod
    def from_int(cls, n: int, value: int) -> "BitVector":
        """Coordinate k = bit k of value; bits at or beyond n are dropped."""
        return cls(n, _int_to_words(value, n))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        arr = np.fromiter((b & 1 for b in bits), dtype=np.uint8)
        return cls(arr.shape[0], _pack_bits(arr))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVector":
        arr = np.zeros(n, dtype=np.uint8)
        for i in indices:
            arr[i] ^= 1
        return cls(n, _pack_bits(arr))

    # -- queries ------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return int((self._words[i >> 6] >> np.uint64(i & 63)) & _ONE)

    def to_int(self) -> int:
        return int.from_bytes(self._words.tobytes(), "little")

    def to_array(self) -> np.ndarray:
        """The coordinates as a uint8 0/1 array (a copy)."""
        return _unpack_words(self._words, self.n)

    def to_bits(self) -> tuple:
        return tuple(int(b) for b in self.to_array())

    def weight(self) -> int:
        return int(np.bitwise_count(self._words).sum())

    def is_zero(self) -> bool:
        return not self._words.any()

    def dot(self, other: "BitVector") -> int:
        """GF(2) inner product."""
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return int(np.bitwise_count(self._words & other._words).sum()) & 1

    # -- arithmetic ---------------------------------------------------

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self._words ^ other._words)

    __add__ = __xor__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self.n, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({''.join(map(str, self.to_bits()))})"


class BitMatrix:
    """An immutable rows x cols matrix over GF(2), rows packed into words.

    A matrix flagged ``symmetric`` is verified to equal its transpose at
    construction time; the flag enables the kernel-orthogonality image
    test in :func:`in_image`.
    """

    __slots__ = ("rows", "cols", "symmetric", "_words")

    def __init__(self, rows: int, cols: int, words: Optional[np.ndarray] = None,
                 symmetric: bool = False, _trusted: bool = False):
        if rows < 0 or cols < 0:
            raise ValueError(f"bad dimensions {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        if words is None:
            words = np.zeros((rows, _nwords(cols)), dtype=np.uint64)
        self._words = words
        self._words.flags.writeable = False
        self.symmetric = symmetric
        if symmetric and not _trusted:
            if rows != cols or self != self.transpose():
                raise ValueError("matrix flagged symmetric is not symmetric")

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, symmetric: bool = False) -> "BitMatrix":
        return cls(rows, cols, symmetric=symmetric, _trusted=True)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        w = np.zeros((n, _nwords(n)), dtype=np.uint64)
        idx = np.arange(n)
        w[idx, idx >> 6] = _ONE << (idx.astype(np.uint64) & np.uint64(63))
        return cls(n, n, w, symmetric=True, _trusted=True)

    @classmethod
    def from_rows(cls, rows: Sequence, cols: Optional[int] = None,
                  symmetric: bool = False) -> "BitMatrix":
        """Build from BitVector rows or iterables of 0/1 entries."""
        vecs = [r if isinstance(r, BitVector) else BitVector.from_bits(r) for r in rows]
        if cols is None:
            cols = vecs[0].n if vecs else 0
        w = np.zeros((len(vecs), _nwords(cols)), dtype=np.uint64)
        for i, v in enumerate(vecs):
            if v.n != cols:
                raise ValueError(f"row {i} has length {v.n}, expected {cols}")
            w[i] = v._words
        return cls(len(vecs), cols, w, symmetric=symmetric)

    @classmethod
    def from_row_ints(cls, rows: int, cols: int, ints: Sequence[int],
                      symmetric: bool = False, _trusted: bool = False) -> "BitMatrix":
        if len(ints) != rows:
            raise ValueError(f"expected {rows} row ints, got {len(ints)}")
        nb = _nwords(cols) * 8
        mask = (1 << cols) - 1
        buf = b"".join((v & mask).to_bytes(nb, "little") for v in ints)
        w = np.frombuffer(buf, dtype=np.uint64).reshape(rows, _nwords(cols)).copy()
        return cls(rows, cols, w, symmetric=symmetric, _trusted=_trusted)

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector]) -> "BitMatrix":
        cols = len(columns)
        rows = columns[0].n if columns else 0
        colbits = np.zeros((cols, rows), dtype=np.uint8)
        for j, c in enumerate(columns):
            if c.n != rows:
                raise ValueError(f"column {j} has length {c.n}, expected {rows}")
            colbits[j] = c.to_array()
        return cls._from_bit_array(colbits.T)

    @classmethod
    def _from_bit_array(cls, bits: np.ndarray, symmetric: bool = False,
                        _trusted: bool = False) -> "BitMatrix":
        rows, cols = bits.shape
        packed = np.packbits(bits, axis=1, bitorder="little")
        buf = np.zeros((rows, _nwords(cols) * 8), dtype=np.uint8)
        buf[:, : packed.shape[1]] = packed
        return cls(rows, cols, buf.view(np.uint64), symmetric=symmetric, _trusted=_trusted)

    # -- queries ------------------------------------------------------

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return int((self._words[i, j >> 6] >> np.uint64(j & 63)) & _ONE)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self._words[i].copy())

    def row_ints(self) -> list:
        nb = self._words.shape[1] * 8
        raw = self._words.tobytes()
        return [int.from_bytes(raw[i * nb: (i + 1) * nb], "little") for i in range(self.rows)]

    def to_bit_array(self) -> np.ndarray:
        """Dense uint8 0/1 matrix (a copy)."""
        return _unpack_words_2d(self._words, self.cols)

    def diagonal(self) -> BitVector:
        n = min(self.rows, self.cols)
        bits = self.to_bit_array()
        return BitVector.from_bits(bits[i, i] for i in range(n))

    def transpose(self) -> "BitMatrix":
        return BitMatrix._from_bit_array(self.to_bit_array().T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self) -> str:
        body = "\n".join("".join(map(str, r)) for r in self.to_bit_array())
        return f"BitMatrix({self.rows}x{self.cols})\n{body}"

    # -- arithmetic ---------------------------------------------------

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix sum")
        return BitMatrix(self.rows, self.cols, self._words ^ other._words,
                         symmetric=self.symmetric and other.symmetric, _trusted=True)

    __add__ = __xor__

    def mul_vec(self, v: BitVector) -> BitVector:
        """Matrix-vector product over GF(2)."""
        if v.n != self.cols:
            raise ValueError(f"vector length {v.n} != cols {self.cols}")
        folded = np.bitwise_xor.reduce(self._words & v._words[None, :], axis=1)
        bits = np.bitwise_count(folded).astype(np.uint8) & 1
        return BitVector(self.rows, _pack_bits(bits))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        rints = other.row_ints()
        out = []
        for i in range(self.rows):
            acc = 0
            v = int.from_bytes(self._words[i].tobytes(), "little")
            while v:
                low = v & -v
                acc ^= rints[low.bit_length() - 1]
                v ^= low
            out.append(acc)
        return BitMatrix.from_row_ints(self.rows, other.cols, out, _trusted=True)

    def pow(self, e: int) -> "BitMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix power needs a square matrix")
        if e < 0:
            raise ValueError("negative matrix power")
        result = BitMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base if e > 1 else base
            e >>= 1
        # powers of a symmetric matrix stay symmetric
        if self.symmetric:
            result = BitMatrix(result.rows, result.cols, result._words.copy(),
                               symmetric=True, _trusted=True)
        return result


# ----------------------------------------------------------------------
# Elimination core
# ----------------------------------------------------------------------

# below this size an elimination runs on plain int bitsets: the numpy
# dispatch overhead beats the vectorization gain for small systems
_INT_PATH_MAX = 128


def _rref(awords: np.ndarray, ncols: int, bwords: Optional[np.ndarray] = None) -> list:
    """In-place reduced row echelon form; returns the pivot columns.

    Pivot rule: first nonzero row at or below the current row, in column
    order, with a row swap.  ``bwords`` is an optional right-hand-side
    block that receives the same row operations.  The int path and the
    vectorized path produce bit-identical results (the RREF and the
    pivot sequence are canonical).
    """
    nrows = awords.shape[0]
    if 0 < nrows <= _INT_PATH_MAX and ncols <= _INT_PATH_MAX:
        return _rref_ints(awords, ncols, bwords)
    row = 0
    pivots = []
    for col in range(ncols):
        if row == nrows:
            break
        w = col >> 6
        mask = _ONE << np.uint64(col & 63)
        cand = (awords[:, w] & mask).nonzero()[0]
        pos = int(cand.searchsorted(row))
        if pos == cand.size:
            continue
        p = int(cand[pos])
        if p != row:
            awords[[row, p]] = awords[[p, row]]
            if bwords is not None:
                bwords[[row, p]] = bwords[[p, row]]
        flips = cand[cand != p]
        if flips.size:
            awords[flips] ^= awords[row]
            if bwords is not None:
                bwords[flips] ^= bwords[row]
        pivots.append(col)
        row += 1
    return pivots


def _rref_ints(awords: np.ndarray, ncols: int, bwords: Optional[np.ndarray]) -> list:
    """Int-bitset elimination; right-hand-side bits ride above bit ncols."""
    nrows = awords.shape[0]
    abytes = awords.shape[1] * 8
    araw = awords.tobytes()
    rows = [int.from_bytes(araw[i * abytes:(i + 1) * abytes], "little")
            for i in range(nrows)]
    if bwords is not None:
        bbytes = bwords.shape[1] * 8
        braw = bwords.tobytes()
        for i in range(nrows):
            rows[i] |= int.from_bytes(braw[i * bbytes:(i + 1) * bbytes],
                                      "little") << ncols
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        mask = 1 << col
        p = -1
        for r in range(row, nrows):
            if rows[r] & mask:
                p = r
                break
        if p < 0:
            continue
        if p != row:
            rows[row], rows[p] = rows[p], rows[row]
        pr = rows[row]
        for r in range(nrows):
            if rows[r] & mask and r != row:
                rows[r] ^= pr
        pivots.append(col)
        row += 1
    amask = (1 << ncols) - 1
    araw = b"".join((v & amask).to_bytes(abytes, "little") for v in rows)
    awords[:] = np.frombuffer(araw, dtype=np.uint64).reshape(nrows, -1)
    if bwords is not None:
        braw = b"".join((v >> ncols).to_bytes(bbytes, "little") for v in rows)
        bwords[:] = np.frombuffer(braw, dtype=np.uint64).reshape(nrows, -1)
    return pivots


def _kernel_from_rref(awords: np.ndarray, ncols: int, pivots: list) -> list:
    """Kernel basis read off an RREF: one vector per free column, in
    increasing column order, each with its free coordinate set to 1."""
    rank = len(pivots)
    piv = np.asarray(pivots, dtype=np.intp)
    free = np.setdiff1d(np.arange(ncols, dtype=np.intp), piv, assume_unique=True)
    if free.size == 0:
        return []
    bits = np.zeros((free.size, ncols), dtype=np.uint8)
    bits[np.arange(free.size), free] = 1
    if rank:
        rowbits = _unpack_words_2d(awords[:rank], ncols)
        bits[:, piv] = rowbits[:, free].T
    packed = np.packbits(bits, axis=1, bitorder="little")
    buf = np.zeros((free.size, _nwords(ncols) * 8), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    words = buf.view(np.uint64)
    return [BitVector(ncols, words[i].copy()) for i in range(free.size)]


def rank(m: BitMatrix) -> int:
    """GF(2) rank via Gaussian elimination."""
    aw = m._words.copy()
    return len(_rref(aw, m.cols))


def kernel_basis(m: BitMatrix) -> list:
    """Basis of the right kernel {x : m x = 0}, deterministic ordering."""
    aw = m._words.copy()
    pivots = _rref(aw, m.cols)
    return _kernel_from_rref(aw, m.cols, pivots)


def _solve_rref(m: BitMatrix, b: BitVector):
    """RREF of [m | b]; returns (awords, pivots, solution-or-None)."""
    if b.n != m.rows:
        raise ValueError(f"rhs length {b.n} != rows {m.rows}")
    aw = m._words.copy()
    packed = np.packbits(b.to_array().reshape(m.rows, 1), axis=1, bitorder="little")
    buf = np.zeros((m.rows, 8), dtype=np.uint8)
    buf[:, :1] = packed
    bw = buf.view(np.uint64)
    pivots = _rref(aw, m.cols, bw)
    rank_ = len(pivots)
    if np.any(bw[rank_:]):
        return aw, pivots, None
    xbits = np.zeros(m.cols, dtype=np.uint8)
    if rank_:
        xbits[np.asarray(pivots, dtype=np.intp)] = (bw[:rank_, 0] & _ONE).astype(np.uint8)
    return aw, pivots, BitVector(m.cols, _pack_bits(xbits))


def solve(m: BitMatrix, b: BitVector) -> Optional[BitVector]:
    """Some x with m x = b (free variables zero), or None if infeasible."""
    return _solve_rref(m, b)[2]


def solve_with_kernel(m: BitMatrix, b: BitVector):
    """One elimination yielding both solve(m, b) and kernel_basis(m).

    The RREF of [m | b] restricted to the m-columns is the RREF of m, so
    the pair is bit-identical to calling the two operations separately.
    """
    aw, pivots, x = _solve_rref(m, b)
    return x, _kernel_from_rref(aw, m.cols, pivots)


def solve_with_certificate(m: BitMatrix, b: BitVector):
    """(solution, certificate) from one elimination.

    Exactly one side is set when m is symmetric: either a solution of
    m x = b, or a kernel vector k with k . b = 1 witnessing b outside
    the image (Im m = (Ker m)^perp).  For a non-symmetric m an
    infeasible system may yield (None, None).
    """
    aw, pivots, x = _solve_rref(m, b)
    if x is not None:
        return x, None
    kernel = _kernel_from_rref(aw, m.cols, pivots)
    return None, next((k for k in kernel if k.dot(b)), None)


def in_image(m: BitMatrix, b: BitVector) -> bool:
    """Whether b lies in the column space of m.

    For a symmetric matrix this uses Im m = (Ker m)^perp: b is in the
    image iff it is orthogonal to every kernel basis vector.  For a
    general matrix it falls back to solving.
    """
    if b.n != m.rows:
        raise ValueError(f"vector length {b.n} != rows {m.rows}")
    if m.symmetric:
        return all(k.dot(b) == 0 for k in kernel_basis(m))
    return solve(m, b) is not None


def in_image_many(m: BitMatrix, targets: Sequence[BitVector]) -> list:
    """in_image for many targets with a single elimination."""
    k = len(targets)
    if k == 0:
        return []
    tb = np.zeros((m.rows, k), dtype=np.uint8)
    for j, t in enumerate(targets):
        if t.n != m.rows:
            raise ValueError(f"target {j} has length {t.n} != rows {m.rows}")
        tb[:, j] = t.to_array()
    packed = np.packbits(tb, axis=1, bitorder="little")
    bw = np.zeros((m.rows, _nwords(k) * 8), dtype=np.uint8)
    bw[:, : packed.shape[1]] = packed
    bw = bw.view(np.uint64)
    aw = m._words.copy()
    pivots = _rref(aw, m.cols, bw)
    tail = bw[len(pivots):]
    if tail.shape[0]:
        stuck = np.bitwise_or.reduce(tail, axis=0)
        bad = _unpack_words(stuck, k)
        return [not bad[j] for j in range(k)]
    return [True] * k


def kronecker(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product: (a (x) b)[i*br+k][j*bc+l] = a[i][j] b[k][l]."""
    bits = _kron_bits(a.to_bit_array(), b.to_bit_array())
    return BitMatrix._from_bit_array(bits, symmetric=a.symmetric and b.symmetric,
                                     _trusted=True)


def _kron_bits(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of dense 0/1 uint8 matrices."""
    ra, ca = a.shape
    rb, cb = b.shape
    return np.einsum("ij,kl->ikjl", a, b).reshape(ra * rb, ca * cb)
