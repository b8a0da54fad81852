"""The two classical families handled by the package."""

from __future__ import annotations

import enum


class Kind(str, enum.Enum):
    """Orthogonal (types B/D) or symplectic (type C)."""

    ORTHOGONAL = "orth"
    SYMPLECTIC = "symp"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {
            "orth": cls.ORTHOGONAL,
            "orthogonal": cls.ORTHOGONAL,
            "o": cls.ORTHOGONAL,
            "so": cls.ORTHOGONAL,
            "symp": cls.SYMPLECTIC,
            "symplectic": cls.SYMPLECTIC,
            "sp": cls.SYMPLECTIC,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown kind {value!r}; expected 'orth' or 'symp'") from None

    def __str__(self) -> str:
        return self.value


ORTHOGONAL = Kind.ORTHOGONAL
SYMPLECTIC = Kind.SYMPLECTIC
