"""Weyl groups of types B, C, D (even rank), G2 and F4."""

from __future__ import annotations

from functools import lru_cache

from .core import IrrW, TypeB, TypeD, WClass, WeylError, WeylGroup
from .families import Family, FamilyTable, build_families
from .signed_perm import SignedPerm

SUPPORTED = "B_n, C_n (n >= 1), D_n (n even, n >= 4), G2, F4"


@lru_cache(maxsize=None)
def weyl_group(kind: str, rank: int) -> WeylGroup:
    """Cached constructor; ``kind`` is one of ``B C D G F`` (case-insensitive)."""
    kind = kind.upper()
    if kind in ("B", "C"):
        return TypeB(rank, kind)
    if kind == "D":
        return TypeD(rank)
    if (kind, rank) in (("G", 2), ("F", 4)):
        from .exceptional import Exceptional

        return Exceptional(f"{kind}{rank}")
    raise WeylError(f"unsupported type {kind}{rank}; supported: {SUPPORTED}")


@lru_cache(maxsize=None)
def family_table(kind: str, rank: int) -> FamilyTable:
    return build_families(weyl_group(kind, rank))


def parse_type(text: str) -> tuple[str, int]:
    """``"B3" -> ("B", 3)``."""
    text = text.strip().upper()
    if len(text) < 2 or not text[1:].isdigit() or text[0] not in "BCDGF":
        raise WeylError(f"cannot parse type {text!r}")
    return text[0], int(text[1:])


__all__ = [
    "IrrW", "WClass", "WeylError", "WeylGroup", "TypeB", "TypeD", "SignedPerm",
    "Family", "FamilyTable", "build_families", "weyl_group", "family_table",
    "parse_type", "SUPPORTED",
]
