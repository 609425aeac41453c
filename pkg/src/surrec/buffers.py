"""Dense raster currencies: float images in [0,1] and binary masks.

An ImageBuffer is a float64 ndarray of shape (H, W, 3) with values in [0, 1];
a MaskBuffer is a uint8 ndarray of shape (H, W) with values in {0, 1}. Both are
plain numpy arrays — these helpers enforce the invariants at module boundaries
and handle the 8-bit PNG round trip.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from .errors import CorruptArtifactError, InputError, InvariantViolation


def validate_image(img: np.ndarray, *, name: str = "image") -> np.ndarray:
    if not isinstance(img, np.ndarray) or img.ndim != 3 or img.shape[2] != 3:
        raise InputError(f"{name}: expected (H, W, 3) array, got {getattr(img, 'shape', type(img))}")
    if not np.issubdtype(img.dtype, np.floating):
        raise InputError(f"{name}: expected float dtype, got {img.dtype}")
    if not np.all(np.isfinite(img)):
        raise InvariantViolation(f"{name}: contains NaN or Inf")
    if img.min() < 0.0 or img.max() > 1.0:
        raise InvariantViolation(f"{name}: values outside [0, 1]")
    return img


def validate_mask(mask: np.ndarray, *, name: str = "mask") -> np.ndarray:
    if not isinstance(mask, np.ndarray) or mask.ndim != 2:
        raise InputError(f"{name}: expected (H, W) array, got {getattr(mask, 'shape', type(mask))}")
    vals = np.unique(mask)
    if not np.all(np.isin(vals, (0, 1))):
        raise InvariantViolation(f"{name}: values outside {{0, 1}}: {vals[:8]}")
    return mask.astype(np.uint8, copy=False)


def clamp01(img: np.ndarray) -> np.ndarray:
    return np.clip(img, 0.0, 1.0)


def quantize8(img: np.ndarray) -> np.ndarray:
    """Snap values to the 8-bit grid k/255 (the on-disk representation)."""
    u = np.clip(np.rint(np.asarray(img, dtype=np.float64) * 255.0), 0, 255)
    return u / 255.0


def luminance(img: np.ndarray) -> np.ndarray:
    """Rec. 601 luma, shape (H, W)."""
    return img[..., 0] * 0.299 + img[..., 1] * 0.587 + img[..., 2] * 0.114


def save_image_png(path: Path | str, img: np.ndarray) -> None:
    validate_image(img)
    u = np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)
    Image.fromarray(u, mode="RGB").save(str(path), format="PNG")


def save_mask_png(path: Path | str, mask: np.ndarray) -> None:
    validate_mask(mask)
    Image.fromarray(mask * np.uint8(255), mode="L").save(str(path), format="PNG")


def load_image_png(path: Path | str) -> np.ndarray:
    try:
        with Image.open(str(path)) as im:
            arr = np.asarray(im.convert("RGB"), dtype=np.float64)
    except FileNotFoundError:
        raise
    except Exception as exc:
        raise CorruptArtifactError(f"cannot decode raster {path}: {exc}") from exc
    return arr / 255.0


def load_mask_png(path: Path | str) -> np.ndarray:
    try:
        with Image.open(str(path)) as im:
            arr = np.asarray(im.convert("L"), dtype=np.uint8)
    except FileNotFoundError:
        raise
    except Exception as exc:
        raise CorruptArtifactError(f"cannot decode mask {path}: {exc}") from exc
    bad = ~np.isin(arr, (0, 255))
    if bad.any():
        raise CorruptArtifactError(f"mask {path} has non-binary pixel values")
    return (arr > 0).astype(np.uint8)


def mask_area_fraction(mask: np.ndarray) -> float:
    return float(mask.sum()) / mask.size


def mask_bbox(mask: np.ndarray) -> tuple[int, int, int, int]:
    """(top, left, bottom, right) exclusive bounds of the nonzero region."""
    ys, xs = np.nonzero(mask)
    if ys.size == 0:
        raise InputError("mask is empty")
    return int(ys.min()), int(xs.min()), int(ys.max()) + 1, int(xs.max()) + 1
