"""The 24 x 98280 generator matrix over F2, built by mod-2 pairing.

The lattice mod twice itself is a 24-dimensional F2 space carrying the
bilinear form b(u, v) = (<u, v>/8) mod 2 and the quadratic form
Q(u) = q(u) mod 2; both are well defined because all inner products of
lattice vectors are multiples of 8.  A class u yields the length-98280
bit row (b(u, rep_j))_j over the minimal-vector pair table, and the rows
of 24 independent classes generate the code under study.

Rows are bit-packed into 1536 little-endian 64-bit words; bit j lives in
word j // 64 at position j % 64, and the 24 padding bits at the top of the
last word are always zero so popcounts need no masking.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np

from . import gf2
from .errors import ConstructionError, DivisibilityError, RankDeficiencyError
from .leech import N_PAIRS, MinVectorTable, q_norm

CODE_DIMENSION = 24
ROW_WORDS = 1536  # 98280 bits -> 1536 words, top 24 bits of the last one zero
ROW_BYTES = ROW_WORDS * 8
W1 = 47104
W2 = 49152

GEN_MAGIC = b"C24GEN\x00"
GEN_VERSION = 1


def pack_row(bits: np.ndarray) -> np.ndarray:
    """(98280,) 0/1 array -> (1536,) uint64 row."""
    raw = np.packbits(bits.astype(np.uint8), bitorder="little")
    padded = np.zeros(ROW_BYTES, dtype=np.uint8)
    padded[:len(raw)] = raw
    return padded.view(np.uint64)


def unpack_row(row: np.ndarray) -> np.ndarray:
    """(1536,) uint64 row -> (98280,) 0/1 uint8 array."""
    return np.unpackbits(row.view(np.uint8), bitorder="little")[:N_PAIRS]


def row_popcount(row: np.ndarray) -> int:
    return int(np.bitwise_count(row).sum())


def row_bit(row: np.ndarray, j: int) -> int:
    return int((row[j >> 6] >> np.uint64(j & 63)) & np.uint64(1))


def rows_bit_at(rows: np.ndarray, j: int) -> np.ndarray:
    """Column j of a stack of packed rows, as a 0/1 uint8 vector."""
    return ((rows[:, j >> 6] >> np.uint64(j & 63)) & np.uint64(1)).astype(np.uint8)


@dataclass
class CodeBasis:
    """24 pairing rows of full rank plus the forms they induce.

    gram2[a][b] = (<v_a, v_b>/8) mod 2 and q2[a] = q(v_a) mod 2; together
    they evaluate Q on any class by the polarization identity.  All basis
    vectors are type 2, so q2 is identically zero.
    """

    basis_vectors: np.ndarray           # (24, 24) int8 lattice vectors
    basis_indices: Tuple[int, ...]      # positions in the pair table
    rows: np.ndarray                    # (24, 1536) uint64
    gram2: np.ndarray                   # (24, 24) uint8
    q2: np.ndarray                      # (24,) uint8

    @property
    def gram_rows_int(self) -> np.ndarray:
        """gram2 rows as 24-bit integers (row a = mask of gram2[a])."""
        return (self.gram2.astype(np.uint32)
                << np.arange(CODE_DIMENSION, dtype=np.uint32)).sum(axis=1)

    @property
    def q2_int(self) -> int:
        return int((self.q2.astype(np.uint32)
                    << np.arange(CODE_DIMENSION, dtype=np.uint32)).sum())


def pairing_row(v: Sequence[int], table: MinVectorTable) -> np.ndarray:
    """Packed row of b(v, rep_j) over all pair indices j."""
    ips = table.inner_with(v)
    if (ips & 7).any():
        j = int(np.flatnonzero(ips & 7)[0])
        raise DivisibilityError(
            f"<v, rep_{j}> = {int(ips[j])} is not divisible by 8")
    return pack_row(((ips >> 3) & 1).astype(np.uint8))


def _first_set_bit(row: np.ndarray) -> int:
    words = np.flatnonzero(row)
    if len(words) == 0:
        return -1
    w = int(words[0])
    return (w << 6) + (int(row[w]) & -int(row[w])).bit_length() - 1


def select_basis(table: MinVectorTable) -> CodeBasis:
    """Greedy scan of the pair table for 24 independent pairing rows."""
    kept_rows: List[np.ndarray] = []
    kept_idx: List[int] = []
    ech: List[Tuple[int, np.ndarray]] = []  # (pivot, reduced row)
    for idx in range(len(table)):
        row = pairing_row(table.reps[idx], table)
        r = row.copy()
        for pivot, er in ech:
            if row_bit(r, pivot):
                r ^= er
        pivot = _first_set_bit(r)
        if pivot < 0:
            continue
        ech.append((pivot, r))
        kept_rows.append(row)
        kept_idx.append(idx)
        if len(kept_rows) == CODE_DIMENSION:
            break
    else:
        raise RankDeficiencyError(
            f"only {len(kept_rows)} independent pairing rows in the whole table")

    vectors = table.reps[kept_idx].astype(np.int8)
    gram = vectors.astype(np.int32) @ vectors.astype(np.int32).T
    if (gram & 7).any():
        raise DivisibilityError("basis Gram entries not all divisible by 8")
    gram2 = ((gram >> 3) & 1).astype(np.uint8)
    q2 = np.array([q_norm(v) % 2 for v in vectors], dtype=np.uint8)

    if not np.array_equal(gram2, gram2.T):
        raise ConstructionError("gram2 is not symmetric")
    grows = [int(r) for r in (gram2.astype(np.uint32)
                              << np.arange(24, dtype=np.uint32)).sum(axis=1)]
    if gf2.rank(grows, CODE_DIMENSION) != CODE_DIMENSION:
        raise ConstructionError("gram2 is degenerate")
    if q2.any():
        raise ConstructionError("basis vector of odd type")

    return CodeBasis(basis_vectors=vectors, basis_indices=tuple(kept_idx),
                     rows=np.array(kept_rows), gram2=gram2, q2=q2)


def codeword(x: int, cb: CodeBasis) -> np.ndarray:
    """Packed codeword of the 24-bit class x: XOR of the selected rows."""
    out = np.zeros(ROW_WORDS, dtype=np.uint64)
    for a in range(CODE_DIMENSION):
        if (x >> a) & 1:
            out ^= cb.rows[a]
    return out


def Q_of_class(x: int, cb: CodeBasis) -> int:
    """Quadratic form on the class x, via q2 and the polarization terms."""
    grows = cb.gram_rows_int
    q = 0
    below = 0
    for a in range(CODE_DIMENSION):
        if (x >> a) & 1:
            q ^= int(cb.q2[a]) ^ ((int(grows[a]) & below).bit_count() & 1)
        below |= (x >> a & 1) << a
    return q


def bilinear(x: int, y: int, cb: CodeBasis) -> int:
    """b(x, y) = x . (gram2 . y) over F2."""
    gy = 0
    for b in range(CODE_DIMENSION):
        if (y >> b) & 1:
            gy ^= int(cb.gram_rows_int[b])
    return (x & gy).bit_count() & 1


def class_syndrome(x: int, cb: CodeBasis) -> int:
    """Image of the class x under the pairing, bit a = b(v_a, x-class)."""
    s = 0
    for a, grow in enumerate(cb.gram_rows_int):
        s |= ((int(grow) & x).bit_count() & 1) << a
    return s


def class_syndromes_bulk(xs: np.ndarray, cb: CodeBasis) -> np.ndarray:
    """Vectorized class_syndrome for a uint32 array of classes."""
    out = np.zeros(len(xs), dtype=np.uint32)
    for a, grow in enumerate(cb.gram_rows_int):
        out |= (np.bitwise_count(xs & grow) & 1).astype(np.uint32) << np.uint32(a)
    return out


def half_tables(rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
    """All XOR combinations of the low and high halves of the row stack.

    Returns (L, H, klow) with L[m] the XOR of rows selected by the low
    klow bits of m, likewise H for the remaining rows; any codeword is
    L[x & (2^klow - 1)] ^ H[x >> klow].
    """
    k = len(rows)
    klow = k // 2
    words = rows.shape[1]
    L = np.zeros((1 << klow, words), dtype=np.uint64)
    for a in range(klow):
        half = 1 << a
        L[half:2 * half] = L[:half] ^ rows[a]
    H = np.zeros((1 << (k - klow), words), dtype=np.uint64)
    for a in range(k - klow):
        half = 1 << a
        H[half:2 * half] = H[:half] ^ rows[klow + a]
    return L, H, klow


def bulk_codeword_rows(xs: np.ndarray, L: np.ndarray, H: np.ndarray,
                       klow: int) -> np.ndarray:
    """Packed codeword rows for an array of classes, one gather + one XOR."""
    xs = np.asarray(xs, dtype=np.int64)
    return L[xs & ((1 << klow) - 1)] ^ H[xs >> klow]


def bulk_codeword_weights(xs: np.ndarray, L: np.ndarray, H: np.ndarray,
                          klow: int, chunk: int = 1024) -> np.ndarray:
    """Codeword weights for an array of classes, chunked to stay in cache."""
    xs = np.asarray(xs, dtype=np.int64)
    out = np.empty(len(xs), dtype=np.int64)
    for i in range(0, len(xs), chunk):
        rows = bulk_codeword_rows(xs[i:i + chunk], L, H, klow)
        out[i:i + chunk] = np.bitwise_count(rows).sum(axis=1, dtype=np.int64)
    return out


def save_generator(cb: CodeBasis, path: Path) -> None:
    """File format: magic, version, 24 x 1536 LE u64 rows, 24 x 24 signed
    byte basis vectors, 24 LE u32 gram2 row masks."""
    blob = bytearray()
    blob += GEN_MAGIC
    blob.append(GEN_VERSION)
    blob += cb.rows.astype("<u8").tobytes()
    blob += cb.basis_vectors.astype(np.int8).tobytes()
    blob += cb.gram_rows_int.astype("<u4").tobytes()
    Path(path).write_bytes(bytes(blob))


def load_generator(path: Path) -> CodeBasis:
    blob = Path(path).read_bytes()
    if blob[:len(GEN_MAGIC)] != GEN_MAGIC or blob[len(GEN_MAGIC)] != GEN_VERSION:
        raise ValueError(f"{path}: bad magic or version")
    off = len(GEN_MAGIC) + 1
    nrow = CODE_DIMENSION * ROW_BYTES
    expect = off + nrow + CODE_DIMENSION * CODE_DIMENSION + CODE_DIMENSION * 4
    if len(blob) != expect:
        raise ValueError(f"{path}: wrong size {len(blob)}, expected {expect}")
    rows = np.frombuffer(blob, dtype="<u8", count=CODE_DIMENSION * ROW_WORDS,
                         offset=off).reshape(CODE_DIMENSION, ROW_WORDS)
    off += nrow
    vectors = np.frombuffer(blob, dtype=np.int8,
                            count=CODE_DIMENSION * CODE_DIMENSION,
                            offset=off).reshape(CODE_DIMENSION, CODE_DIMENSION)
    off += CODE_DIMENSION * CODE_DIMENSION
    grows = np.frombuffer(blob, dtype="<u4", count=CODE_DIMENSION, offset=off)
    gram2 = np.zeros((CODE_DIMENSION, CODE_DIMENSION), dtype=np.uint8)
    for a in range(CODE_DIMENSION):
        for b in range(CODE_DIMENSION):
            gram2[a, b] = (int(grows[a]) >> b) & 1
    q2 = np.array([q_norm(v) % 2 for v in vectors], dtype=np.uint8)
    return CodeBasis(basis_vectors=vectors.copy(), basis_indices=(),
                     rows=rows.astype(np.uint64), gram2=gram2, q2=q2)
