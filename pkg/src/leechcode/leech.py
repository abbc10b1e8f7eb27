"""Minimal vectors of the Leech lattice, scaled to integer coordinates.

A lattice point is a 24-tuple of integers that satisfies, with
m(v) = (sum of coordinates)/4:

  1. all coordinates are integers,
  2. m(v) is an integer,
  3. every coordinate is congruent to m(v) mod 2,
  4. the set of coordinates not congruent to m(v) mod 4 is a Golay set.

At this scaling the minimal (type 2) vectors have squared length 32, i.e.
q(v) = (v, v)/16 = 2, and there are 196560 of them in three coordinate
shapes:

  (2^8, 0^16)  two times an octad with evenly many minus signs   97152
  (3, 1^23)    from a Golay word C and a position i              98304
  (4^2, 0^22)  two entries +-4                                    1104

Antipodal pairs v, -v are collapsed to the representative whose first
nonzero coordinate is positive; the 98280 canonical representatives in
lexicographic order fix the coordinate set of everything downstream.
"""

from __future__ import annotations

import zlib
from pathlib import Path
from typing import Dict, Sequence

import numpy as np

from .errors import ConstructionError, LatticeValidationError
from .golay import N_POINTS, GolayCode, all_codewords_from_basis

N_MIN_VECTORS = 196560
N_PAIRS = 98280
SHAPE_COUNTS = {2: 97152, 3: 98304, 4: 1104}

CACHE_MAGIC = b"LEECH2\x00"
CACHE_VERSION = 1


def q_norm(v: Sequence[int]) -> int:
    """(v, v)/16; the ``type`` of a lattice vector."""
    n2 = int(sum(int(c) * int(c) for c in v))
    if n2 % 16:
        raise LatticeValidationError(f"(v,v) = {n2} is not divisible by 16")
    return n2 // 16


def leech_membership(v: Sequence[int], code: GolayCode) -> bool:
    """Scalar membership test, conditions 1-4 above."""
    coords = [int(c) for c in v]
    total = sum(coords)
    if total % 4:
        return False
    m = total // 4
    if any((c - m) % 2 for c in coords):
        return False
    cmask = 0
    for point, c in enumerate(coords):
        if (c - m) % 4:
            cmask |= 1 << point
    return cmask in code


def membership_mask(vectors: np.ndarray, code: GolayCode) -> np.ndarray:
    """Vectorized membership for an (n, 24) integer array."""
    v = vectors.astype(np.int64)
    total = v.sum(axis=1)
    ok = total % 4 == 0
    m = np.where(ok, total, 0) // 4
    ok &= ((v - m[:, None]) % 2 == 0).all(axis=1)
    offgrid = ((v - m[:, None]) % 4 != 0).astype(np.uint32)
    cmask = (offgrid << np.arange(N_POINTS, dtype=np.uint32)).sum(axis=1)
    for row in code.basis:
        ok &= (np.bitwise_count(cmask & np.uint32(row)) & 1) == 0
    return ok


def canonicalize(vectors: np.ndarray) -> np.ndarray:
    """Flip each row so its first nonzero coordinate is positive."""
    vs = np.atleast_2d(vectors)
    first = (vs != 0).argmax(axis=1)
    lead = vs[np.arange(len(vs)), first]
    out = np.where((lead < 0)[:, None], -vs, vs)
    return out.reshape(vectors.shape)


class MinVectorTable:
    """The 98280 canonical antipodal-pair representatives, lex sorted."""

    def __init__(self, reps: np.ndarray, shape_counts: Dict[int, int]):
        assert reps.shape == (N_PAIRS, N_POINTS) and reps.dtype == np.int8
        self.reps = reps
        self.shape_counts = shape_counts
        self.index: Dict[bytes, int] = {
            reps[i].tobytes(): i for i in range(len(reps))
        }
        self._reps_i32 = reps.astype(np.int32)

    def __len__(self) -> int:
        return len(self.reps)

    def index_of(self, vector: np.ndarray) -> int:
        """Index of the canonical representative of +-vector."""
        key = canonicalize(np.asarray(vector, dtype=np.int8)).tobytes()
        idx = self.index.get(key)
        if idx is None:
            raise KeyError("vector is not a minimal-vector representative")
        return idx

    def inner_with(self, v: Sequence[int]) -> np.ndarray:
        """Inner products of every representative with v, as int32."""
        return self._reps_i32 @ np.asarray(v, dtype=np.int32)


def pair_inner(i: int, j: int, table: MinVectorTable) -> int:
    """Inner product of representatives i and j; always in {0,+-8,+-16,+-32}."""
    return int(table._reps_i32[i] @ table._reps_i32[j])


def _shape2_vectors(code: GolayCode) -> np.ndarray:
    octads = np.array(code.octads, dtype=np.uint32)
    bits = np.unpackbits(
        octads[:, None].view(np.uint8), axis=1, bitorder="little")[:, :N_POINTS]
    signs = np.array([s for s in range(256) if bin(s).count("1") % 2 == 0],
                     dtype=np.uint8)
    sign_rows = 1 - 2 * np.unpackbits(
        signs[:, None], axis=1, bitorder="little")[:, :8].astype(np.int8)
    out = np.zeros((len(octads), len(signs), N_POINTS), dtype=np.int8)
    for t in range(len(octads)):
        support = np.flatnonzero(bits[t])
        out[t][:, support] = 2 * sign_rows
    return out.reshape(-1, N_POINTS)


def _shape3_vectors(code: GolayCode) -> np.ndarray:
    words = all_codewords_from_basis(code.basis)
    bits = np.unpackbits(
        words[:, None].view(np.uint8), axis=1, bitorder="little")[:, :N_POINTS]
    base = (1 - 2 * bits).astype(np.int8)  # -1 on the Golay set, +1 off it
    blocks = []
    for i in range(N_POINTS):
        block = base.copy()
        sigma = 1 - 2 * bits[:, i].astype(np.int8)  # +1 if i off the set
        block[:, i] -= 4 * sigma
        blocks.append(block)
    return np.concatenate(blocks)


def _shape4_vectors() -> np.ndarray:
    rows = []
    for i in range(N_POINTS):
        for j in range(i + 1, N_POINTS):
            for si in (4, -4):
                for sj in (4, -4):
                    v = np.zeros(N_POINTS, dtype=np.int8)
                    v[i], v[j] = si, sj
                    rows.append(v)
    return np.array(rows)


def enumerate_min_vectors(code: GolayCode) -> MinVectorTable:
    """Generate, validate, canonicalize and sort all 196560 minimal vectors."""
    vectors = np.concatenate(
        [_shape2_vectors(code), _shape3_vectors(code), _shape4_vectors()])
    if len(vectors) != N_MIN_VECTORS:
        raise ConstructionError(f"generated {len(vectors)} vectors")

    ok = membership_mask(vectors, code)
    if not ok.all():
        bad = vectors[int(np.flatnonzero(~ok)[0])]
        raise LatticeValidationError(f"vector fails lattice conditions: {bad.tolist()}")
    norms = (vectors.astype(np.int64) ** 2).sum(axis=1)
    if not (norms == 32).all():
        bad = vectors[int(np.flatnonzero(norms != 32)[0])]
        raise LatticeValidationError(f"vector is not type 2: {bad.tolist()}")

    shapes = np.abs(vectors).max(axis=1)
    counts = {int(s): int(c) for s, c in zip(*np.unique(shapes, return_counts=True))}
    if counts != SHAPE_COUNTS:
        raise ConstructionError(f"shape census {counts}, expected {SHAPE_COUNTS}")

    # canonicalize pairs; bias to uint8 so byte-lex order is signed-lex order
    biased = (canonicalize(vectors) + 8).astype(np.uint8)
    uniq, mult = np.unique(biased, axis=0, return_counts=True)
    if len(uniq) != N_PAIRS or not (mult == 2).all():
        raise ConstructionError(
            f"{len(uniq)} antipodal pairs with multiplicities "
            f"{sorted(set(mult.tolist()))}, expected {N_PAIRS} pairs twice each")
    reps = (uniq.astype(np.int16) - 8).astype(np.int8)

    # negation closure: canonicalizing -v gives back every representative
    assert np.array_equal(canonicalize(-reps), reps)
    return MinVectorTable(reps, counts)


def random_inner_mod8_check(table: MinVectorTable, n: int, seed: int = 0) -> bool:
    """Inner products of n random representative pairs are all 0 mod 8."""
    rng = np.random.default_rng(seed)
    i = rng.integers(0, len(table), size=n)
    j = rng.integers(0, len(table), size=n)
    ips = np.einsum("ij,ij->i", table._reps_i32[i], table._reps_i32[j])
    return bool((ips % 8 == 0).all())


def save_table(table: MinVectorTable, path: Path) -> None:
    """Cache format: magic, version byte, 98280 x 24 signed bytes, crc32."""
    records = table.reps.tobytes()
    blob = CACHE_MAGIC + bytes([CACHE_VERSION]) + records
    blob += zlib.crc32(records).to_bytes(4, "little")
    Path(path).write_bytes(blob)


def load_table(path: Path) -> MinVectorTable:
    blob = Path(path).read_bytes()
    head = len(CACHE_MAGIC) + 1
    if blob[:len(CACHE_MAGIC)] != CACHE_MAGIC or blob[len(CACHE_MAGIC)] != CACHE_VERSION:
        raise ValueError(f"{path}: bad magic or version")
    records = blob[head:-4]
    if len(records) != N_PAIRS * N_POINTS:
        raise ValueError(f"{path}: wrong record count")
    if zlib.crc32(records) != int.from_bytes(blob[-4:], "little"):
        raise ValueError(f"{path}: checksum mismatch")
    reps = np.frombuffer(records, dtype=np.int8).reshape(N_PAIRS, N_POINTS).copy()
    shapes = np.abs(reps).max(axis=1)
    counts = {int(s): 2 * int(c)
              for s, c in zip(*np.unique(shapes, return_counts=True))}
    return MinVectorTable(reps, counts)
