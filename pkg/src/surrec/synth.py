"""Procedural scene/private-region synthesis.

Each sample is a smooth gradient background with a few decorative shapes and a
single rendered "private" object (glyph plate, face proxy, badge, ...) whose
exact bounding rectangle is the privacy mask. Everything is a deterministic
function of (seed, category): the generator owns a PCG64 stream seeded from
both, so regeneration is bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .buffers import quantize8
from .errors import InputError
from .fonts import GLYPH_H, GLYPH_W, random_string, render_string

# category -> privacy modality group
CATEGORIES: dict[str, str] = {
    "license_plate": "textual",
    "document": "textual",
    "face": "visual",
    "badge": "visual",
    "id_card": "multimodal",
    "signage": "multimodal",
}

TEXTUAL_CATEGORIES = tuple(c for c, m in CATEGORIES.items() if m in ("textual", "multimodal"))

_ASPECT = {  # width : height of the private region
    "license_plate": 2.2,
    "document": 0.85,
    "face": 0.85,
    "badge": 1.0,
    "id_card": 1.6,
    "signage": 1.8,
}

_MIN_SIDE = 14


@dataclass
class SynthResult:
    image: np.ndarray          # (H, W, 3) float64 on the 8-bit grid
    mask: np.ndarray           # (H, W) uint8 {0,1}, rectangle of the object
    private_text: str          # glyph string carried by the region ("" if none)
    rect: tuple[int, int, int, int]  # (top, left, bottom, right), exclusive


def modality_of(category: str) -> str:
    try:
        return CATEGORIES[category]
    except KeyError:
        raise InputError(f"unknown category: {category!r}") from None


def _rng_for(seed: int, category: str, salt: int = 0) -> np.random.Generator:
    cat_index = sorted(CATEGORIES).index(category)
    return np.random.default_rng([seed, cat_index, salt])


def _gradient_background(rng: np.random.Generator, size: int) -> np.ndarray:
    c0 = rng.uniform(0.15, 0.85, size=3)
    c1 = rng.uniform(0.15, 0.85, size=3)
    axis = rng.integers(0, 3)
    lin = np.linspace(0.0, 1.0, size)
    if axis == 0:
        t = np.broadcast_to(lin[:, None], (size, size))
    elif axis == 1:
        t = np.broadcast_to(lin[None, :], (size, size))
    else:
        t = (lin[:, None] + lin[None, :]) / 2.0
    return c0 + t[..., None] * (c1 - c0)


def _add_decor(rng: np.random.Generator, img: np.ndarray) -> None:
    size = img.shape[0]
    for _ in range(int(rng.integers(2, 5))):
        color = rng.uniform(0.1, 0.9, size=3)
        alpha = rng.uniform(0.45, 0.9)
        h = int(rng.integers(size // 8, size // 2))
        w = int(rng.integers(size // 8, size // 2))
        y = int(rng.integers(0, size - h))
        x = int(rng.integers(0, size - w))
        if rng.random() < 0.5:
            region = img[y:y + h, x:x + w]
            region[:] = (1 - alpha) * region + alpha * color
        else:
            yy = (np.arange(h)[:, None] - h / 2) / (h / 2)
            xx = (np.arange(w)[None, :] - w / 2) / (w / 2)
            inside = (yy ** 2 + xx ** 2) <= 1.0
            region = img[y:y + h, x:x + w]
            region[inside] = (1 - alpha) * region[inside] + alpha * color


def _fit_text(text: str, h: int, w: int) -> tuple[np.ndarray | None, str]:
    """Largest-scale rendering of `text` that fits in (h, w); trims if needed."""
    while text:
        bitmap = render_string(text, scale=1)
        scale = min(h // GLYPH_H, w // bitmap.shape[1]) if bitmap.shape[1] else 0
        if scale >= 1:
            if scale > 1:
                bitmap = render_string(text, scale=scale)
            return bitmap, text
        text = text[:-1]
    return None, ""


def _stamp(patch: np.ndarray, bitmap: np.ndarray, color: np.ndarray,
           cy: float = 0.5, cx: float = 0.5) -> None:
    bh, bw = bitmap.shape
    h, w = patch.shape[:2]
    y = int(round(cy * h - bh / 2))
    x = int(round(cx * w - bw / 2))
    y = max(0, min(y, h - bh))
    x = max(0, min(x, w - bw))
    region = patch[y:y + bh, x:x + bw]
    m = bitmap[..., None]
    region[:] = (1 - m) * region + m * color


def _hue_to_rgb(h: float, s: float, v: float) -> np.ndarray:
    i = int(h * 6.0) % 6
    f = h * 6.0 - int(h * 6.0)
    p, q, t = v * (1 - s), v * (1 - s * f), v * (1 - s * (1 - f))
    rgb = [(v, t, p), (q, v, p), (p, v, t), (p, q, v), (t, p, v), (v, p, q)][i]
    return np.array(rgb)


def _fitted_string(rng: np.random.Generator, length: int, h: int, w: int,
                   avoid: str | None) -> tuple[np.ndarray | None, str]:
    """Draw a glyph string that still differs from `avoid` after trim-to-fit."""
    while True:
        bitmap, text = _fit_text(random_string(rng, length), h, w)
        if avoid is None or text != avoid:
            return bitmap, text


def _render_plate(rng: np.random.Generator, h: int, w: int, avoid: str | None) -> tuple[np.ndarray, str]:
    bg = _hue_to_rgb(rng.uniform(0, 1), rng.uniform(0.08, 0.35), rng.uniform(0.75, 0.95))
    fg = _hue_to_rgb(rng.uniform(0, 1), rng.uniform(0.5, 0.9), rng.uniform(0.05, 0.30))
    patch = np.tile(bg, (h, w, 1))
    patch[0, :], patch[-1, :], patch[:, 0], patch[:, -1] = fg, fg, fg, fg
    bitmap, text = _fitted_string(rng, int(rng.integers(4, 7)), h - 4, w - 4, avoid)
    if bitmap is not None:
        _stamp(patch, bitmap, fg)
    return patch, text


def _render_document(rng: np.random.Generator, h: int, w: int, avoid: str | None) -> tuple[np.ndarray, str]:
    paper = rng.uniform(0.86, 0.97, size=3)
    ink = rng.uniform(0.05, 0.25, size=3)
    patch = np.tile(paper, (h, w, 1))
    n_lines = max(1, (h - 2) // (GLYPH_H + 2))
    parts: list[str] = []
    for li in range(n_lines):
        line = random_string(rng, int(rng.integers(3, 6)))
        bitmap, line = _fit_text(line, GLYPH_H, w - 2)
        if bitmap is None:
            continue
        cy = (li + 0.5) / n_lines
        _stamp(patch, bitmap, ink, cy=cy, cx=0.5)
        parts.append(line)
    text = "".join(parts)
    if avoid is not None and text == avoid and parts:
        alt = random_string(rng, len(parts[0]), avoid=parts[0])
        bitmap, alt = _fit_text(alt, GLYPH_H, w - 2)
        if bitmap is not None:
            _stamp(patch, bitmap, ink, cy=0.5 / n_lines, cx=0.5)
            parts[0] = alt
            text = "".join(parts)
    return patch, text


def _render_face(rng: np.random.Generator, h: int, w: int, avoid: str | None) -> tuple[np.ndarray, str]:
    skin = np.array([rng.uniform(0.55, 0.95), rng.uniform(0.42, 0.75), rng.uniform(0.30, 0.60)])
    hair = rng.uniform(0.05, 0.45, size=3)
    eye = rng.uniform(0.02, 0.2, size=3)
    backdrop = rng.uniform(0.2, 0.8, size=3)
    patch = np.tile(backdrop, (h, w, 1))
    yy = (np.arange(h)[:, None] / max(h - 1, 1) - 0.52) / 0.44
    xx = (np.arange(w)[None, :] / max(w - 1, 1) - 0.5) / 0.38
    head = (yy ** 2 + xx ** 2) <= 1.0
    patch[head] = skin
    fringe = head & (yy < rng.uniform(-0.45, -0.2))
    patch[fringe] = hair
    eye_y = 0.40 + rng.uniform(-0.03, 0.03)
    for ex in (0.36, 0.64):
        cy, cx = int(eye_y * h), int(ex * w)
        patch[max(cy - 1, 0):cy + 2, max(cx - 1, 0):cx + 2] = eye
    my = int(0.68 * h)
    patch[my:my + 2, int(0.38 * w):int(0.62 * w)] = eye * 0.5 + skin * 0.25
    return patch, ""


def _render_badge(rng: np.random.Generator, h: int, w: int, avoid: str | None) -> tuple[np.ndarray, str]:
    ring = _hue_to_rgb(rng.uniform(0, 1), rng.uniform(0.6, 0.95), rng.uniform(0.5, 0.9))
    inner = _hue_to_rgb(rng.uniform(0, 1), rng.uniform(0.3, 0.8), rng.uniform(0.6, 0.95))
    emblem = _hue_to_rgb(rng.uniform(0, 1), rng.uniform(0.6, 0.95), rng.uniform(0.1, 0.4))
    patch = np.tile(rng.uniform(0.25, 0.75, size=3), (h, w, 1))
    yy = (np.arange(h)[:, None] / max(h - 1, 1) - 0.5) / 0.48
    xx = (np.arange(w)[None, :] / max(w - 1, 1) - 0.5) / 0.48
    r2 = yy ** 2 + xx ** 2
    patch[r2 <= 1.0] = ring
    patch[r2 <= 0.72] = inner
    kind = int(rng.integers(0, 3))
    if kind == 0:     # diamond
        shape = (np.abs(yy) + np.abs(xx)) <= 0.45
    elif kind == 1:   # cross
        shape = ((np.abs(yy) <= 0.16) | (np.abs(xx) <= 0.16)) & (r2 <= 0.6)
    else:             # triangle
        shape = (yy >= -0.35) & (yy <= 0.4) & (np.abs(xx) <= (yy + 0.35) * 0.6)
    patch[shape] = emblem
    return patch, ""


def _render_id_card(rng: np.random.Generator, h: int, w: int, avoid: str | None) -> tuple[np.ndarray, str]:
    card = rng.uniform(0.75, 0.95, size=3)
    ink = rng.uniform(0.05, 0.3, size=3)
    patch = np.tile(card, (h, w, 1))
    patch[0, :], patch[-1, :], patch[:, 0], patch[:, -1] = ink, ink, ink, ink
    pw = max(4, int(0.34 * w))
    photo, _ = _render_face(rng, h - 4, pw, None)
    patch[2:2 + photo.shape[0], 2:2 + pw] = photo
    bitmap, text = _fitted_string(rng, int(rng.integers(3, 6)), h - 4, w - pw - 6, avoid)
    if bitmap is not None:
        _stamp(patch, bitmap, ink, cy=0.5, cx=(pw + 2 + (w - pw - 2) / 2) / w)
    return patch, text


def _render_signage(rng: np.random.Generator, h: int, w: int, avoid: str | None) -> tuple[np.ndarray, str]:
    board = _hue_to_rgb(rng.uniform(0, 1), rng.uniform(0.55, 0.95), rng.uniform(0.45, 0.9))
    fg = rng.uniform(0.88, 1.0, size=3) if board.mean() < 0.55 else rng.uniform(0.0, 0.15, size=3)
    patch = np.tile(board, (h, w, 1))
    bitmap, text = _fitted_string(rng, int(rng.integers(3, 6)), max(GLYPH_H, int(0.55 * h)), w - 4, avoid)
    if bitmap is not None:
        _stamp(patch, bitmap, fg, cy=0.32, cx=0.5)
    yy = (np.arange(h)[:, None] / max(h - 1, 1) - 0.75) / 0.18
    xx = (np.arange(w)[None, :] / max(w - 1, 1) - 0.5) / 0.30
    arrow = (np.abs(yy) <= 1.0) & (np.abs(xx) + np.abs(yy) * 0.5 <= 1.0)
    patch[arrow] = fg
    return patch, text


_RENDERERS = {
    "license_plate": _render_plate,
    "document": _render_document,
    "face": _render_face,
    "badge": _render_badge,
    "id_card": _render_id_card,
    "signage": _render_signage,
}


def render_private_region(category: str, rng: np.random.Generator, h: int, w: int,
                          avoid_text: str | None = None) -> tuple[np.ndarray, str]:
    """Render an (h, w, 3) private-object patch; returns (patch, glyph string)."""
    modality_of(category)
    patch, text = _RENDERERS[category](rng, h, w, avoid_text)
    return np.clip(patch, 0.0, 1.0), text


def _region_geometry(rng: np.random.Generator, category: str, size: int,
                     frac_min: float, frac_max: float) -> tuple[int, int, int, int]:
    aspect = _ASPECT[category]
    frac = rng.uniform(frac_min, frac_max)
    area = frac * size * size
    h = int(round(np.sqrt(area / aspect)))
    w = int(round(aspect * h))
    h = max(_MIN_SIDE, min(h, int(0.92 * size)))
    w = max(_MIN_SIDE, min(w, int(0.92 * size)))
    while h * w > 0.5 * size * size:  # clamping can overshoot the area cap
        if h >= w:
            h -= 1
        else:
            w -= 1
    top = int(rng.integers(0, size - h + 1))
    left = int(rng.integers(0, size - w + 1))
    return top, left, top + h, left + w


def synthesize_original_full(seed: int, category: str, size: int = 64,
                             mask_frac_range: tuple[float, float] = (0.10, 0.40)) -> SynthResult:
    if seed < 0:
        raise InputError(f"seed must be >= 0, got {seed}")
    modality_of(category)
    rng = _rng_for(seed, category)
    img = _gradient_background(rng, size)
    _add_decor(rng, img)
    top, left, bottom, right = _region_geometry(rng, category, size, *mask_frac_range)
    patch, text = render_private_region(category, rng, bottom - top, right - left)
    img[top:bottom, left:right] = patch
    mask = np.zeros((size, size), dtype=np.uint8)
    mask[top:bottom, left:right] = 1
    return SynthResult(quantize8(np.clip(img, 0, 1)), mask, text, (top, left, bottom, right))


def synthesize_original(seed: int, category: str, size: int = 64) -> tuple[np.ndarray, np.ndarray]:
    res = synthesize_original_full(seed, category, size)
    return res.image, res.mask


def private_text_for(seed: int, category: str, size: int = 64,
                     mask_frac_range: tuple[float, float] = (0.10, 0.40)) -> str:
    """The glyph string embedded in the sample's private region."""
    return synthesize_original_full(seed, category, size, mask_frac_range).private_text
