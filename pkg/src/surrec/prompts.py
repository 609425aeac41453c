"""Edit-instruction catalog and the deterministic stand-in editor.

Each catalog entry pairs an instruction string with a pure raster transform, so
the "remote editor" is a function of (image, prompt_id) only. Every transform is
pixel-local: the output at (y, x) depends only on the input value at (y, x) and
the pixel position. That makes edits commute with masked substitution outside
the mask, which the recovery task depends on.

Transform outputs are snapped to the 8-bit grid so regenerating an edit from a
PNG-round-tripped input reproduces the stored raster bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .buffers import clamp01, luminance, quantize8, validate_image
from .errors import InputError

Transform = Callable[[np.ndarray], np.ndarray]

EDIT_TYPES = ("style", "concept", "addition", "removal", "replace", "appearance")


@dataclass(frozen=True)
class PromptSpec:
    id: str
    edit_type: str
    text: str
    transform: str
    noop: bool = False
    holdout: bool = False


def _matrix_transform(m: np.ndarray, bias: float = 0.0) -> Transform:
    def apply(img: np.ndarray) -> np.ndarray:
        return clamp01(img @ m.T + bias)
    return apply


def _pencil(img: np.ndarray) -> np.ndarray:
    tone = 0.18 + 0.82 * luminance(img)
    return np.repeat(tone[..., None], 3, axis=2)


def _grayscale(img: np.ndarray) -> np.ndarray:
    return np.repeat(luminance(img)[..., None], 3, axis=2)


def _vampire(img: np.ndarray) -> np.ndarray:
    lum = luminance(img)[..., None]
    pale = 0.5 * img + 0.5 * lum
    pale[..., 0] = pale[..., 0] * 1.25 + 0.06
    pale[..., 1] *= 0.82
    pale[..., 2] *= 0.88
    return clamp01(pale)


_AUTUMN = _matrix_transform(np.array([
    [0.95, 0.30, 0.05],
    [0.12, 0.72, 0.06],
    [0.05, 0.08, 0.45],
]))

_COOL = _matrix_transform(np.array([
    [0.72, 0.05, 0.03],
    [0.05, 0.88, 0.08],
    [0.08, 0.10, 1.05],
]), bias=0.02)


def _invert(img: np.ndarray) -> np.ndarray:
    return 1.0 - img


def _vivid(img: np.ndarray) -> np.ndarray:
    lum = luminance(img)[..., None]
    return clamp01(lum + 1.7 * (img - lum))


def _aged(img: np.ndarray) -> np.ndarray:
    sepia = clamp01(img @ np.array([
        [0.393, 0.769, 0.189],
        [0.349, 0.686, 0.168],
        [0.272, 0.534, 0.131],
    ]).T)
    flat = 0.72 * (sepia - 0.5) + 0.52
    h, w = img.shape[:2]
    yy = (np.arange(h) / max(h - 1, 1) - 0.5) * 2.0
    xx = (np.arange(w) / max(w - 1, 1) - 0.5) * 2.0
    r2 = yy[:, None] ** 2 + xx[None, :] ** 2
    vignette = 1.0 - 0.30 * np.clip(r2 / 2.0, 0.0, 1.0)
    return clamp01(flat * vignette[..., None])


def _ellipse_weight(h: int, w: int, cy: float, cx: float, ry: float, rx: float) -> np.ndarray:
    """Soft-edged ellipse alpha map over an h x w grid (center/radii relative)."""
    yy = np.arange(h)[:, None] / max(h - 1, 1)
    xx = np.arange(w)[None, :] / max(w - 1, 1)
    d = ((yy - cy) / ry) ** 2 + ((xx - cx) / rx) ** 2
    return np.clip(1.35 - d, 0.0, 1.0) ** 0.5


def _sunglasses(img: np.ndarray) -> np.ndarray:
    h, w = img.shape[:2]
    lens_l = _ellipse_weight(h, w, 0.30, 0.33, 0.085, 0.115)
    lens_r = _ellipse_weight(h, w, 0.30, 0.67, 0.085, 0.115)
    bridge = _ellipse_weight(h, w, 0.285, 0.50, 0.022, 0.075)
    alpha = np.clip(lens_l + lens_r + bridge, 0.0, 1.0) * 0.88
    color = np.array([0.05, 0.05, 0.09])
    return clamp01(img * (1 - alpha[..., None]) + color * alpha[..., None])


def _paint_splash(img: np.ndarray) -> np.ndarray:
    h, w = img.shape[:2]
    blobs = [
        (0.80, 0.16, 0.10, 0.12),
        (0.70, 0.26, 0.060, 0.070),
        (0.88, 0.30, 0.045, 0.055),
        (0.68, 0.10, 0.040, 0.045),
    ]
    alpha = np.zeros((h, w))
    for cy, cx, ry, rx in blobs:
        alpha = np.maximum(alpha, _ellipse_weight(h, w, cy, cx, ry, rx))
    alpha *= 0.92
    color = np.array([0.10, 0.24, 0.86])
    return clamp01(img * (1 - alpha[..., None]) + color * alpha[..., None])


def _band_fill(rows: tuple[float, float], color: tuple[float, float, float]) -> Transform:
    def apply(img: np.ndarray) -> np.ndarray:
        h = img.shape[0]
        out = img.copy()
        out[int(rows[0] * h):int(rows[1] * h)] = color
        return out
    return apply


def _forest_right(img: np.ndarray) -> np.ndarray:
    h, w = img.shape[:2]
    x0 = int(0.62 * w)
    yy = np.arange(h)[:, None] / max(h - 1, 1)
    xx = np.arange(x0, w)[None, :] / max(w - 1, 1)
    mottle = 0.5 + 0.5 * np.sin(xx * 41.0) * np.cos(yy * 29.0)
    tex = np.empty((h, w - x0, 3))
    tex[..., 0] = 0.08 + 0.10 * mottle
    tex[..., 1] = 0.30 + 0.25 * (1 - yy) + 0.12 * mottle
    tex[..., 2] = 0.10 + 0.06 * mottle
    out = img.copy()
    out[:, x0:] = 0.25 * img[:, x0:] + 0.75 * clamp01(tex)
    return clamp01(out)


def _sunset_top(img: np.ndarray) -> np.ndarray:
    h, w = img.shape[:2]
    y1 = int(0.35 * h)
    yy = np.arange(y1)[:, None, None] / max(y1 - 1, 1)
    sky = (1 - yy) * np.array([0.55, 0.18, 0.45]) + yy * np.array([0.98, 0.70, 0.25])
    out = img.copy()
    out[:y1] = 0.2 * img[:y1] + 0.8 * sky
    return clamp01(out)


_TRANSFORMS: dict[str, Transform] = {
    "pencil": _pencil,
    "grayscale": _grayscale,
    "vampire": _vampire,
    "autumn": _AUTUMN,
    "sunglasses": _sunglasses,
    "paint_splash": _paint_splash,
    "clear_top": _band_fill((0.0, 0.16), (0.84, 0.83, 0.80)),
    "clear_bottom": _band_fill((0.85, 1.0), (0.13, 0.13, 0.15)),
    "forest_right": _forest_right,
    "sunset_top": _sunset_top,
    "aged": _aged,
    "vivid": _vivid,
    "identity": lambda img: img.copy(),
    "invert": _invert,
    "cool_tint": _COOL,
}

_CATALOG = [
    PromptSpec("p01", "style", "turn the picture into a soft pencil sketch", "pencil"),
    PromptSpec("p02", "style", "convert the photo to plain grayscale", "grayscale"),
    PromptSpec("p03", "concept", "give the person a pale vampire look", "vampire"),
    PromptSpec("p04", "concept", "repaint the scene with warm autumn colors", "autumn"),
    PromptSpec("p05", "addition", "let the person wear dark sunglasses", "sunglasses"),
    PromptSpec("p06", "addition", "add a blue paint splash near the lower left corner", "paint_splash"),
    PromptSpec("p07", "removal", "remove the markings along the top edge", "clear_top"),
    PromptSpec("p08", "removal", "erase the strip along the bottom edge", "clear_bottom"),
    PromptSpec("p09", "replace", "change the right side into a leafy forest backdrop", "forest_right"),
    PromptSpec("p10", "replace", "replace the sky with a glowing sunset view", "sunset_top"),
    PromptSpec("p11", "appearance", "make the photo look old and faded", "aged"),
    PromptSpec("p12", "appearance", "make the colors bold and vivid", "vivid"),
    PromptSpec("p13", "style", "keep the image exactly as it is", "identity", noop=True),
    PromptSpec("p14", "style", "invert the picture like a film negative", "invert", holdout=True),
    PromptSpec("p15", "appearance", "give the scene a cold blue tint", "cool_tint", holdout=True),
]


class PromptCatalog:
    """Fixed instruction set; ids unique, >= 2 entries per edit type."""

    def __init__(self, entries: list[PromptSpec] | None = None):
        self.entries = list(entries) if entries is not None else list(_CATALOG)
        ids = [e.id for e in self.entries]
        if len(set(ids)) != len(ids):
            raise InputError("prompt catalog ids must be unique")
        for etype in EDIT_TYPES:
            if sum(e.edit_type == etype for e in self.entries) < 2:
                raise InputError(f"edit type {etype!r} needs >= 2 catalog entries")
        if len(self.entries) < 12:
            raise InputError("catalog needs >= 12 prompts")
        self._by_id = {e.id: e for e in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, prompt_id: str) -> bool:
        return prompt_id in self._by_id

    def get(self, prompt_id: str) -> PromptSpec:
        try:
            return self._by_id[prompt_id]
        except KeyError:
            raise InputError(f"unknown prompt id: {prompt_id!r}") from None

    def default_pool(self) -> list[str]:
        """Prompts used by dataset builds: no identity, no held-out entries."""
        return [e.id for e in self.entries if not e.noop and not e.holdout]

    def holdout_pool(self) -> list[str]:
        return [e.id for e in self.entries if e.holdout]

    def noop_id(self) -> str:
        return next(e.id for e in self.entries if e.noop)


CATALOG = PromptCatalog()


def apply_simulated_edit(image: np.ndarray, prompt_id: str, catalog: PromptCatalog = CATALOG) -> np.ndarray:
    """Deterministic editor: pure in (image, prompt_id), output on the 8-bit grid."""
    validate_image(image)
    spec = catalog.get(prompt_id)
    out = _TRANSFORMS[spec.transform](image)
    return quantize8(clamp01(out))
