"""Instrumented I/O and write counters.

Costs follow the block-transfer model: a random seek is charged when an
access lands outside the previously read block, and sequential block reads
are charged per ``block_size`` bytes transferred after the seek.  The
counters are a cost model, not a syscall trace: structures declared
memory-resident (the decoded gamma index, sparse accelerators, edge
buffers) charge nothing, everything that lives on disk charges what the
access pattern would cost.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class IoStats:
    """Counters of modeled disk traffic, monotone within a query scope."""

    random_seeks: int = 0
    sequential_blocks: int = 0
    partitions_probed: int = 0
    bytes_read: int = 0
    bytes_written: int = 0

    def charge_seek(self, n: int = 1) -> None:
        self.random_seeks += n

    def charge_blocks(self, n: int) -> None:
        self.sequential_blocks += n

    def charge_probe(self, n: int = 1) -> None:
        self.partitions_probed += n

    def charge_read_bytes(self, n: int) -> None:
        self.bytes_read += n

    def charge_write_bytes(self, n: int) -> None:
        self.bytes_written += n

    def add(self, other: "IoStats") -> None:
        self.random_seeks += other.random_seeks
        self.sequential_blocks += other.sequential_blocks
        self.partitions_probed += other.partitions_probed
        self.bytes_read += other.bytes_read
        self.bytes_written += other.bytes_written

    def snapshot(self) -> "IoStats":
        return IoStats(
            self.random_seeks,
            self.sequential_blocks,
            self.partitions_probed,
            self.bytes_read,
            self.bytes_written,
        )

    def delta_since(self, earlier: "IoStats") -> "IoStats":
        return IoStats(
            self.random_seeks - earlier.random_seeks,
            self.sequential_blocks - earlier.sequential_blocks,
            self.partitions_probed - earlier.partitions_probed,
            self.bytes_read - earlier.bytes_read,
            self.bytes_written - earlier.bytes_written,
        )


@dataclass
class WriteStats:
    """Write-path instrumentation used for the write-amplification study.

    ``edges_written`` counts every physical edge row written to a partition
    file (initial writes and rewrites during merges alike);
    ``edges_ingested`` counts logical inserts.  Their ratio is the
    rewrites-per-edge figure the LSM tree exists to keep logarithmic.
    """

    edges_ingested: int = 0
    edges_written: int = 0
    bytes_rewritten: int = 0
    flushes: int = 0
    downstream_merges: int = 0

    checkpoints: list = field(default_factory=list)

    def rewrites_per_edge(self) -> float:
        if self.edges_ingested == 0:
            return 0.0
        return self.edges_written / self.edges_ingested

    def record_checkpoint(self) -> None:
        self.checkpoints.append(
            (self.edges_ingested, self.edges_written, self.bytes_rewritten)
        )
