"""Elias-Gamma coding of strictly increasing integer sequences.

The code for a positive integer v with bit length b is (b-1) zero bits
followed by the b bits of v itself, most significant first; v=1 encodes as
the single bit ``1`` and v=5 as ``00101``.  Sequences are stored as the
gamma code of (first value + 1) followed by the codes of the successive
differences, so a decoder recovers the sequence with a running prefix sum.
Bits are packed most-significant-first within each byte; the final byte is
zero-padded.

Encoding is fully vectorized.  Decoding walks code boundaries in a single
pass and then extracts all values with vectorized bit gathers, so reopening
a database decompresses its indexes in bulk rather than bit by bit.
"""

from __future__ import annotations

import numpy as np

from .errors import DataError


def _bit_lengths(values: np.ndarray) -> np.ndarray:
    # exact for values < 2^53, which MAX_ID_BITS guarantees
    return np.frexp(values.astype(np.float64))[1].astype(np.int64)


def encode_values(values: np.ndarray) -> bytes:
    """Concatenated gamma codes of positive integers."""
    values = np.asarray(values, dtype=np.uint64)
    if values.size == 0:
        return b""
    if values.min() < 1:
        raise DataError("gamma codes are defined for positive integers only")
    nbits = _bit_lengths(values)
    lengths = 2 * nbits - 1
    starts = np.cumsum(lengths) - lengths
    total = int(starts[-1] + lengths[-1])
    bits = np.zeros(total, dtype=np.uint8)
    # bit j of the value part sits at start + (nbits-1) + j, MSB first
    for j in range(int(nbits.max())):
        sel = nbits > j
        shift = (nbits[sel] - 1 - j).astype(np.uint64)
        bits[starts[sel] + nbits[sel] - 1 + j] = (
            (values[sel] >> shift) & np.uint64(1)
        ).astype(np.uint8)
    return np.packbits(bits).tobytes()


def decode_values(data: bytes, count: int) -> np.ndarray:
    """Inverse of :func:`encode_values`; ``count`` codes are expected."""
    if count == 0:
        return np.zeros(0, dtype=np.uint64)
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    bit_list = bits.tolist()
    total = len(bit_list)
    one_pos = np.empty(count, dtype=np.int64)   # position of each code's leading 1
    zeros = np.empty(count, dtype=np.int64)
    p = 0
    try:
        for k in range(count):
            z = 0
            while not bit_list[p]:
                z += 1
                p += 1
            one_pos[k] = p
            zeros[k] = z
            p += z + 1
    except IndexError:
        raise DataError("gamma stream truncated") from None
    if p > total:
        raise DataError("gamma stream truncated")
    values = np.zeros(count, dtype=np.uint64)
    for j in range(int(zeros.max()) + 1):
        sel = zeros >= j
        values[sel] = (values[sel] << np.uint64(1)) | bits[one_pos[sel] + j]
    return values


def encode_sequence(seq: np.ndarray) -> bytes:
    """Gamma-code a strictly increasing sequence of non-negative integers.

    The first value is stored as value+1, later values as deltas.
    """
    seq = np.asarray(seq, dtype=np.int64)
    if seq.size == 0:
        return b""
    if seq[0] < 0:
        raise DataError("sequence values must be non-negative")
    deltas = np.empty(seq.size, dtype=np.uint64)
    deltas[0] = seq[0] + 1
    if seq.size > 1:
        diffs = np.diff(seq)
        if diffs.min() < 1:
            raise DataError("sequence must be strictly increasing")
        deltas[1:] = diffs
    return encode_values(deltas)


def decode_sequence(data: bytes, count: int) -> np.ndarray:
    """Inverse of :func:`encode_sequence`, as an int64 array."""
    if count == 0:
        return np.zeros(0, dtype=np.int64)
    deltas = decode_values(data, count).astype(np.int64)
    deltas[0] -= 1
    return np.cumsum(deltas)


def encode_value(value: int) -> str:
    """Gamma code of one positive integer as a bit string (for inspection)."""
    if value < 1:
        raise DataError("gamma codes are defined for positive integers only")
    b = value.bit_length()
    return "0" * (b - 1) + format(value, "b")
