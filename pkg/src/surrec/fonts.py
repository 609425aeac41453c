"""Tiny 5x7 bitmap glyph set used by the procedural renderers.

Row values are 5-bit integers, MSB = leftmost pixel. The charset deliberately
drops I, O and Q so rendered strings stay visually unambiguous at small sizes.
"""

from __future__ import annotations

import numpy as np

GLYPH_ROWS: dict[str, tuple[int, ...]] = {
    "0": (0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E),
    "1": (0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E),
    "2": (0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F),
    "3": (0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E),
    "4": (0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02),
    "5": (0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E),
    "6": (0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E),
    "7": (0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08),
    "8": (0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E),
    "9": (0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C),
    "A": (0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11),
    "B": (0x1E, 0x11, 0x11, 0x1E, 0x11, 0x11, 0x1E),
    "C": (0x0E, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0E),
    "D": (0x1C, 0x12, 0x11, 0x11, 0x11, 0x12, 0x1C),
    "E": (0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F),
    "F": (0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x10),
    "G": (0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0F),
    "H": (0x11, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11),
    "J": (0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0C),
    "K": (0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11),
    "L": (0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F),
    "M": (0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11),
    "N": (0x11, 0x11, 0x19, 0x15, 0x13, 0x11, 0x11),
    "P": (0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10),
    "R": (0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11),
    "S": (0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E),
    "T": (0x1F, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04),
    "U": (0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E),
    "V": (0x11, 0x11, 0x11, 0x11, 0x11, 0x0A, 0x04),
    "W": (0x11, 0x11, 0x11, 0x15, 0x15, 0x15, 0x0A),
    "X": (0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11),
    "Y": (0x11, 0x11, 0x0A, 0x04, 0x04, 0x04, 0x04),
    "Z": (0x1F, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1F),
}

CHARSET = "".join(sorted(GLYPH_ROWS))

GLYPH_H, GLYPH_W = 7, 5


def glyph_bitmap(ch: str) -> np.ndarray:
    """(7, 5) float array of {0,1} for one glyph."""
    rows = GLYPH_ROWS[ch]
    out = np.zeros((GLYPH_H, GLYPH_W), dtype=np.float64)
    for r, bits in enumerate(rows):
        for c in range(GLYPH_W):
            if bits >> (GLYPH_W - 1 - c) & 1:
                out[r, c] = 1.0
    return out


def render_string(text: str, scale: int = 1, spacing: int = 1) -> np.ndarray:
    """Render `text` as a {0,1} bitmap, glyphs separated by `spacing` columns."""
    if not text:
        return np.zeros((GLYPH_H * scale, 0), dtype=np.float64)
    cols = []
    gap = np.zeros((GLYPH_H, spacing), dtype=np.float64)
    for i, ch in enumerate(text):
        if i:
            cols.append(gap)
        cols.append(glyph_bitmap(ch))
    bitmap = np.concatenate(cols, axis=1)
    if scale > 1:
        bitmap = np.kron(bitmap, np.ones((scale, scale)))
    return bitmap


def random_string(rng: np.random.Generator, length: int, avoid: str | None = None) -> str:
    """Draw a glyph string; never returns `avoid` (resamples, seeded)."""
    chars = list(CHARSET)
    while True:
        s = "".join(chars[int(i)] for i in rng.integers(0, len(chars), size=length))
        if s != avoid:
            return s
