"""Privacy surrogates: masked-region substitution under a tunable strength.

The protected region is re-rendered in the same category style from a fresh
seed (new glyphs, new colors) and convex-blended with the original:
out = (1 - alpha) * original + alpha * fill inside the mask, untouched outside.
alpha = 0 reproduces the original, alpha = 1 is fully synthetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .buffers import mask_bbox, validate_image, validate_mask
from .errors import InputError
from .synth import render_private_region

_FILL_SALT = 7  # keeps fill streams disjoint from scene streams


@dataclass
class ProtectionStrength:
    alpha: float = 0.5

    def __post_init__(self) -> None:
        self.alpha = float(min(1.0, max(0.0, self.alpha)))


def _fill_rng(seed: int, category: str) -> np.random.Generator:
    from .synth import CATEGORIES
    return np.random.default_rng([seed, sorted(CATEGORIES).index(category), _FILL_SALT])


def render_fill(category: str, seed: int, h: int, w: int,
                avoid_text: str | None = None) -> tuple[np.ndarray, str]:
    """The synthetic replacement patch for a (h, w) region; seeded, category-styled."""
    rng = _fill_rng(seed, category)
    return render_private_region(category, rng, h, w, avoid_text=avoid_text)


def fill_text_for(seed: int, category: str, h: int, w: int,
                  avoid_text: str | None = None) -> str:
    """Glyph string the fill would carry (for privacy-containment checks)."""
    return render_fill(category, seed, h, w, avoid_text=avoid_text)[1]


def generate_surrogate(original: np.ndarray, mask: np.ndarray, strength: ProtectionStrength,
                       seed: int, category: str, avoid_text: str | None = None) -> np.ndarray:
    """Blend a re-rendered private region into `original` where mask = 1.

    Pixelwise equal to `original` outside the mask for every alpha and seed.
    Deterministic in (inputs, seed). Raises InputError on an empty mask.
    """
    validate_image(original, name="original")
    validate_mask(mask)
    if original.shape[:2] != mask.shape:
        raise InputError(f"mask shape {mask.shape} != image shape {original.shape[:2]}")
    if mask.sum() == 0:
        raise InputError("mask is empty: nothing to protect")
    alpha = strength.alpha
    top, left, bottom, right = mask_bbox(mask)
    fill, _ = render_fill(category, seed, bottom - top, right - left, avoid_text=avoid_text)
    out = original.copy()
    region = mask[top:bottom, left:right].astype(bool)
    target = out[top:bottom, left:right]
    target[region] = (1.0 - alpha) * target[region] + alpha * fill[region]
    return np.clip(out, 0.0, 1.0)


def strength_sweep(original: np.ndarray, mask: np.ndarray, alphas: list[float], seed: int,
                   category: str, avoid_text: str | None = None) -> list[tuple[float, np.ndarray, float]]:
    """Surrogates over ascending alphas with SSIM(original, surrogate) inside the
    mask bounding box — the privacy/utility trade-off curve."""
    from .metrics import ssim

    if list(alphas) != sorted(alphas):
        raise InputError("alphas must be sorted ascending")
    top, left, bottom, right = mask_bbox(mask)
    rows = []
    for alpha in alphas:
        surr = generate_surrogate(original, mask, ProtectionStrength(alpha), seed,
                                  category, avoid_text=avoid_text)
        inside = ssim(original[top:bottom, left:right], surr[top:bottom, left:right])
        rows.append((float(alpha), surr, float(inside)))
    return rows
