"""Image-quality primitives: SSIM, PSNR, pooled-latent embeddings, directional
cosine similarity.

SSIM follows the classic formulation: 11x11 Gaussian window (sigma 1.5),
C1 = (0.01)^2 and C2 = (0.03)^2 on a [0,1] dynamic range, population
(co)variances, scored over windows fully inside the image, averaged per channel
then across channels. All arithmetic is float64.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from scipy.ndimage import correlate

from .errors import InputError

_WIN = 11
_SIGMA = 1.5
_K1, _K2 = 0.01, 0.03


def _gaussian_window(size: int = _WIN, sigma: float = _SIGMA) -> np.ndarray:
    half = (size - 1) / 2.0
    x = np.arange(size, dtype=np.float64) - half
    g = np.exp(-(x ** 2) / (2.0 * sigma ** 2))
    w = np.outer(g, g)
    return w / w.sum()


_WINDOW = _gaussian_window()


def _check_pair(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise InputError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a, b


def ssim(a: np.ndarray, b: np.ndarray) -> float:
    a, b = _check_pair(a, b)
    if a.ndim == 2:
        a, b = a[..., None], b[..., None]
    if a.ndim != 3:
        raise InputError(f"expected (H, W[, C]) arrays, got shape {a.shape}")
    h, w = a.shape[:2]
    if h < _WIN or w < _WIN:
        raise InputError(f"images must be at least {_WIN}x{_WIN} for SSIM, got {h}x{w}")
    c1 = _K1 ** 2
    c2 = _K2 ** 2
    r = _WIN // 2
    scores = []
    for ch in range(a.shape[2]):
        x, y = a[..., ch], b[..., ch]
        mu_x = correlate(x, _WINDOW, mode="constant")
        mu_y = correlate(y, _WINDOW, mode="constant")
        e_xx = correlate(x * x, _WINDOW, mode="constant")
        e_yy = correlate(y * y, _WINDOW, mode="constant")
        e_xy = correlate(x * y, _WINDOW, mode="constant")
        var_x = e_xx - mu_x * mu_x
        var_y = e_yy - mu_y * mu_y
        cov = e_xy - mu_x * mu_y
        num = (2.0 * mu_x * mu_y + c1) * (2.0 * cov + c2)
        den = (mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2)
        smap = num / den
        scores.append(smap[r:h - r, r:w - r].mean())
    return float(np.mean(scores))


def psnr(a: np.ndarray, b: np.ndarray) -> float:
    """Peak signal-to-noise ratio in dB on a [0,1] range; inf when identical."""
    a, b = _check_pair(a, b)
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(1.0 / mse)


def embed_global(probe, image: np.ndarray) -> np.ndarray:
    """Mean-pool the probe's latent tokens for `image` into one unit vector.

    `probe` is any object with encode_tokens(image) -> (T, c) array; it stays
    frozen across an evaluation run so embeddings are comparable.
    """
    tokens = np.asarray(probe.encode_tokens(image), dtype=np.float64)
    if tokens.ndim != 2:
        raise InputError(f"probe returned shape {tokens.shape}, expected (T, c)")
    v = tokens.mean(axis=0)
    norm = float(np.linalg.norm(v))
    if norm < 1e-12:
        return np.zeros_like(v)
    return v / norm


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


class DirResult(NamedTuple):
    value: float
    degenerate: bool


def directional_similarity(e_a1: np.ndarray, e_a2: np.ndarray,
                           e_b1: np.ndarray, e_b2: np.ndarray) -> DirResult:
    """Cosine between the two embedding-space edit directions a1->a2 and b1->b2.

    Returns (0.0, degenerate=True) when either direction has norm < 1e-8
    (no-edit case), so callers can exclude it from aggregates.
    """
    d1 = np.asarray(e_a2, dtype=np.float64) - np.asarray(e_a1, dtype=np.float64)
    d2 = np.asarray(e_b2, dtype=np.float64) - np.asarray(e_b1, dtype=np.float64)
    n1, n2 = float(np.linalg.norm(d1)), float(np.linalg.norm(d2))
    if n1 < 1e-8 or n2 < 1e-8:
        return DirResult(0.0, True)
    return DirResult(float(np.dot(d1, d2) / (n1 * n2)), False)
