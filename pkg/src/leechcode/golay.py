"""Extended binary Golay code of length 24 and its 759 octads.

Point labels: 0..22 are the residues mod 23, label 23 is the point at
infinity.  A subset of the 24 points is a 24-bit integer mask, bit i for
point i.

The code is generated from the quadratic residues mod 23: for each
a in 0..22 take the length-23 word supported on {a + q mod 23 : q in QR},
and append a parity bit at infinity (always set, the 23-part has odd
weight 11).  These 23 words span a self-dual [24, 12, 8] code; its 759
weight-8 words (the octads) form a Steiner system: every 5-subset of the
points lies in exactly one octad.  This labeling makes x -> x + 1 and
x -> -1/x mod 23 act as code automorphisms, which the symmetry checks use.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np

from . import gf2
from .errors import ConstructionError

N_POINTS = 24
INFINITY = 23
OMEGA_MASK = (1 << N_POINTS) - 1
GOLAY_DIMENSION = 12
OCTAD_COUNT = 759
GOLAY_WEIGHT_ENUMERATOR = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

QUADRATIC_RESIDUES_23 = frozenset(pow(i, 2, 23) for i in range(1, 23))


@dataclass(frozen=True)
class GolayCode:
    """The [24, 12, 8] code with a zero-syndrome membership test.

    ``basis`` is in reduced row echelon form.  The code is self-dual, so the
    basis rows double as the parity-check rows: a mask belongs to the code
    iff it meets every basis row evenly.  Self-duality is verified during
    construction, the membership test depends on it.
    """

    basis: Tuple[int, ...]
    pivots: Tuple[int, ...]
    octads: Tuple[int, ...]
    weight_enumerator: Dict[int, int] = field(repr=False)

    def __contains__(self, mask: int) -> bool:
        return all((mask & row).bit_count() % 2 == 0 for row in self.basis)


def build_golay() -> GolayCode:
    """Construct the code and verify every invariant it must satisfy."""
    words = []
    for a in range(23):
        mask = 0
        for q in QUADRATIC_RESIDUES_23:
            mask |= 1 << ((a + q) % 23)
        words.append(mask | (1 << INFINITY))

    basis, pivots = gf2.echelon(words, N_POINTS)
    if len(basis) != GOLAY_DIMENSION:
        raise ConstructionError(
            f"quadratic-residue span has rank {len(basis)}, expected 12")

    # self-duality: every pair meets evenly, every basis weight is 0 mod 4
    for i, u in enumerate(basis):
        if u.bit_count() % 4 != 0:
            raise ConstructionError(f"basis word {i} has weight {u.bit_count()}")
        for v in basis[i + 1:]:
            if (u & v).bit_count() % 2 != 0:
                raise ConstructionError("basis words with odd intersection")

    codewords = all_codewords_from_basis(basis)
    weights = np.bitwise_count(codewords)
    enum = {int(w): int(c) for w, c in zip(*np.unique(weights, return_counts=True))}
    if enum != GOLAY_WEIGHT_ENUMERATOR:
        raise ConstructionError(f"weight enumerator {enum}")

    octads = tuple(sorted(int(c) for c in codewords[weights == 8]))
    code = GolayCode(basis=tuple(basis), pivots=tuple(pivots),
                     octads=octads, weight_enumerator=enum)
    assert 0 in code and OMEGA_MASK in code
    return code


def all_codewords_from_basis(basis: Iterable[int]) -> np.ndarray:
    """All 2^k words spanned by the basis, as a uint32 array."""
    basis = list(basis)
    out = np.zeros(1 << len(basis), dtype=np.uint32)
    for i, row in enumerate(basis):
        half = 1 << i
        out[half:2 * half] = out[:half] ^ np.uint32(row)
    return out


def is_golay(mask: int, code: GolayCode) -> bool:
    """Membership via the precomputed parity checks (zero syndrome)."""
    return mask in code


def five_subset_cover_check(octads: Iterable[int]) -> bool:
    """True iff every 5-subset of the 24 points lies in exactly one octad."""
    seen = set()
    for octad in octads:
        points = [i for i in range(N_POINTS) if (octad >> i) & 1]
        if len(points) != 8:
            return False
        for five in itertools.combinations(points, 5):
            if five in seen:
                return False
            seen.add(five)
    return len(seen) == math.comb(N_POINTS, 5)


def octad_hex_lines(code: GolayCode) -> List[str]:
    """Octad list in the export format: 6 lowercase hex digits per line."""
    return [f"{octad:06x}" for octad in code.octads]
