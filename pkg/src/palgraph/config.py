"""Database configuration, identifier spaces and the reversible ID hash.

Vertex IDs come in two flavors.  *Original* IDs are what callers use;
*internal* IDs are what every on-disk structure stores.  The mapping is a
reversible hash that spreads consecutive original IDs across the P vertex
intervals so edge partitions stay balanced without dynamic interval
management:

    internal = (orig mod P) * L + orig // P
    orig     = (internal // L) * P + internal mod L

with L the fixed interval length.  Both directions are pure arithmetic, so
the interval owning a vertex is computable without any lookup structure.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DataError, UsageError

MAX_ID_BITS = 36          # dst field width in packed edge entries
MAX_PARTITION_EDGES = (1 << 24) - 1   # next-in-chain offsets are 24-bit deltas
TOMBSTONE_TYPE = 15       # reserved edge type marking deleted entries
MAX_EDGE_TYPE = 14        # user-visible types are 0..14

CONFIG_FILE = "config"

OUT_INDEX_GAMMA = "gamma"
OUT_INDEX_SPARSE = "sparse"


@dataclass(frozen=True)
class DbConfig:
    """Immutable per-database configuration, fixed at creation time.

    ``max_id`` bounds the original ID space and can never grow: the
    reversible hash bakes P and L into every stored internal ID.
    """

    max_id: int
    partitions: int                 # P: leaf partition / vertex interval count
    branching: int = 4              # f: LSM fan-out between levels
    buffer_capacity: int = 1_000_000    # total buffered edges triggering a flush
    max_partition_edges: int = 1 << 22  # size triggering a downstream merge
    durable_buffers: bool = False
    block_size: int = 4096          # B, for cost accounting only
    out_index_mode: str = OUT_INDEX_GAMMA   # "gamma" or "sparse"
    lsm_enabled: bool = True        # False: flat single-level tree (for study)
    sparse_index_stride: int = 128
    query_threads: int = 1          # per-query parallel partition probes
    bottom_up_fraction: float = 1.0 / 20.0  # frontier density switching traversal strategy

    def __post_init__(self) -> None:
        if self.max_id < 0:
            raise UsageError("max_id must be non-negative")
        if self.partitions < 1:
            raise UsageError("partitions must be >= 1")
        if self.branching < 2:
            raise UsageError("branching factor must be >= 2")
        if self.buffer_capacity < 1:
            raise UsageError("buffer_capacity must be >= 1")
        if not (0 < self.max_partition_edges <= MAX_PARTITION_EDGES):
            raise UsageError(
                f"max_partition_edges must be in [1, {MAX_PARTITION_EDGES}]"
            )
        if self.out_index_mode not in (OUT_INDEX_GAMMA, OUT_INDEX_SPARSE):
            raise UsageError(f"unknown out_index_mode {self.out_index_mode!r}")
        if self.id_space > 1 << MAX_ID_BITS:
            raise UsageError(
                f"internal ID space P*L={self.id_space} exceeds the "
                f"{MAX_ID_BITS}-bit entry layout"
            )

    @property
    def interval_length(self) -> int:
        """L, chosen so every original ID in [0, max_id] has an internal image."""
        return self.max_id // self.partitions + 1

    @property
    def id_space(self) -> int:
        """P * L, the half-open upper bound of the internal ID space."""
        return self.partitions * self.interval_length

    # -- reversible ID hash -------------------------------------------------

    def to_internal(self, orig: int) -> int:
        if not 0 <= orig <= self.max_id:
            raise DataError(f"original ID {orig} outside [0, {self.max_id}]")
        p, l = self.partitions, self.interval_length
        return (orig % p) * l + orig // p

    def to_original(self, intern: int) -> int:
        if not 0 <= intern < self.id_space:
            raise DataError(f"internal ID {intern} outside [0, {self.id_space})")
        p, l = self.partitions, self.interval_length
        return (intern // l) * p + intern % l

    def to_internal_array(self, orig: np.ndarray) -> np.ndarray:
        """Vectorized hash; caller guarantees the range precondition."""
        orig = np.asarray(orig, dtype=np.int64)
        return (orig % self.partitions) * self.interval_length + orig // self.partitions

    def to_original_array(self, intern: np.ndarray) -> np.ndarray:
        intern = np.asarray(intern, dtype=np.int64)
        return (intern // self.interval_length) * self.partitions + (
            intern % self.interval_length
        )

    # -- vertex intervals ----------------------------------------------------

    def interval_of(self, intern: int) -> "VertexInterval":
        if not 0 <= intern < self.id_space:
            raise DataError(f"internal ID {intern} outside [0, {self.id_space})")
        return VertexInterval(int(intern) // self.interval_length, self.interval_length)

    def interval(self, index: int) -> "VertexInterval":
        if not 0 <= index < self.partitions:
            raise UsageError(f"interval index {index} outside [0, {self.partitions})")
        return VertexInterval(index, self.interval_length)

    # -- persistence ---------------------------------------------------------

    _FIELDS = (
        ("max_id", int),
        ("partitions", int),
        ("branching", int),
        ("buffer_capacity", int),
        ("max_partition_edges", int),
        ("durable_buffers", bool),
        ("block_size", int),
        ("out_index_mode", str),
        ("lsm_enabled", bool),
        ("sparse_index_stride", int),
        ("query_threads", int),
        ("bottom_up_fraction", float),
    )

    def save(self, db_root: Path) -> None:
        lines = ["layout_version=1"]
        for name, kind in self._FIELDS:
            value = getattr(self, name)
            if kind is bool:
                value = "true" if value else "false"
            lines.append(f"{name}={value}")
        tmp = db_root / (CONFIG_FILE + ".tmp")
        tmp.write_text("\n".join(lines) + "\n")
        os.replace(tmp, db_root / CONFIG_FILE)

    @classmethod
    def load(cls, db_root: Path) -> "DbConfig":
        path = db_root / CONFIG_FILE
        if not path.exists():
            raise UsageError(f"no database at {db_root} (missing {CONFIG_FILE})")
        raw: dict[str, str] = {}
        for line in path.read_text().splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            raw[key] = value
        if raw.get("layout_version") != "1":
            raise UsageError(
                f"unsupported layout_version {raw.get('layout_version')!r}"
            )
        kwargs = {}
        for name, kind in cls._FIELDS:
            value = raw[name]
            if kind is bool:
                kwargs[name] = value == "true"
            else:
                kwargs[name] = kind(value)
        return cls(**kwargs)


@dataclass(frozen=True)
class VertexInterval:
    """Contiguous internal-ID range [lo, hi] owning one leaf partition."""

    index: int
    length: int

    @property
    def lo(self) -> int:
        return self.index * self.length

    @property
    def hi(self) -> int:
        return (self.index + 1) * self.length - 1

    def offset_of(self, intern: int) -> int:
        off = intern - self.lo
        if not 0 <= off < self.length:
            raise DataError(f"internal ID {intern} not in interval {self.index}")
        return off

    def __contains__(self, intern: int) -> bool:
        return self.lo <= intern <= self.hi
