"""Binary file headers and atomic write helpers.

Every on-disk file starts with a 16-byte header: an 8-byte kind magic, a
little-endian u32 format version and a u32 reserved word.  Multi-file
structures are written into a temporary directory and published with a
single rename.
"""

from __future__ import annotations

import os
import struct
import uuid
from pathlib import Path

from .errors import CorruptionError

HEADER_SIZE = 16
FORMAT_VERSION = 1

MAGIC_EDGES = b"PALEDGES"
MAGIC_OUT_RAW = b"PALOUTIX"
MAGIC_OUT_GAMMA = b"PALOUTGX"
MAGIC_IN_RAW = b"PALINIDX"
MAGIC_EDGE_COL = b"PALECOL\x00"
MAGIC_VERTEX_COL = b"PALVCOL\x00"
MAGIC_PAYLOAD_LOG = b"PALVLOG\x00"
MAGIC_WAL = b"PALWAL\x00\x00"


def pack_header(magic: bytes) -> bytes:
    assert len(magic) == 8
    return magic + struct.pack("<II", FORMAT_VERSION, 0)


def check_header(data: bytes, magic: bytes, path: Path) -> None:
    if len(data) < HEADER_SIZE or data[:8] != magic:
        raise CorruptionError(f"{path}: bad magic, expected {magic!r}")
    (version,) = struct.unpack_from("<I", data, 8)
    if version != FORMAT_VERSION:
        raise CorruptionError(f"{path}: unsupported format version {version}")


def read_header(path: Path, magic: bytes) -> None:
    with open(path, "rb") as f:
        check_header(f.read(HEADER_SIZE), magic, path)


def write_file(path: Path, magic: bytes, payload_parts: list[bytes]) -> None:
    with open(path, "wb") as f:
        f.write(pack_header(magic))
        for part in payload_parts:
            f.write(part)
        f.flush()
        os.fsync(f.fileno())


def fresh_tmp_dir(root: Path) -> Path:
    tmp = root / f".tmp-{uuid.uuid4().hex[:12]}"
    tmp.mkdir(parents=True)
    return tmp


def publish_dir(tmp: Path, final: Path) -> None:
    final.parent.mkdir(parents=True, exist_ok=True)
    os.replace(tmp, final)


def sweep_tmp_dirs(root: Path) -> None:
    """Remove leftover temp dirs from a crashed build."""
    if not root.exists():
        return
    for child in root.glob(".tmp-*"):
        import shutil

        shutil.rmtree(child, ignore_errors=True)
