"""Sample schema, on-disk layout, procedural build and validated loading.

Layout: <root>/manifest.json plus one directory per sample id holding
original.png, mask.png, surrogate.png, surrogate_edited.png,
original_edited.png and meta.json. The manifest carries every meta record and
echoes the build config verbatim, so a rebuild from the manifest's own config
reproduces every file byte-for-byte.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from .buffers import (load_image_png, load_mask_png, mask_area_fraction,
                      quantize8, save_image_png, save_mask_png)
from .config import DatasetConfig
from .errors import InputError, InvariantViolation, MissingArtifactError
from .prompts import CATALOG, PromptCatalog, apply_simulated_edit
from .surrogate import ProtectionStrength, generate_surrogate
from .synth import CATEGORIES, modality_of, synthesize_original_full

RASTER_FILES = ("original.png", "mask.png", "surrogate.png",
                "surrogate_edited.png", "original_edited.png")

# test seeds live in a disjoint block far above any train seed
_TEST_SEED_OFFSET = 1_000_000
_FILL_SEED_OFFSET = 500_000


@dataclass
class SampleMeta:
    id: str
    category: str
    prompt_id: str
    prompt_text: str
    split: str
    seed: int

    def to_dict(self) -> dict:
        return {"id": self.id, "category": self.category, "prompt_id": self.prompt_id,
                "prompt_text": self.prompt_text, "split": self.split, "seed": self.seed}


@dataclass
class SppeSample:
    meta: SampleMeta
    original: np.ndarray
    mask: np.ndarray
    surrogate: np.ndarray
    surrogate_edited: np.ndarray
    original_edited: np.ndarray

    @property
    def modality(self) -> str:
        return modality_of(self.meta.category)

    def validate(self) -> None:
        shape = self.original.shape
        for name in ("surrogate", "surrogate_edited", "original_edited"):
            if getattr(self, name).shape != shape:
                raise InvariantViolation(f"{self.meta.id}: {name} shape differs from original")
        if self.mask.shape != shape[:2]:
            raise InvariantViolation(f"{self.meta.id}: mask shape differs from image")
        frac = mask_area_fraction(self.mask)
        if frac == 0.0:
            raise InvariantViolation(f"{self.meta.id}: mask is empty")
        if frac > 0.5:
            raise InvariantViolation(f"{self.meta.id}: mask covers {frac:.2%} > 50%")
        outside = self.mask == 0
        if not np.array_equal(self.original[outside], self.surrogate[outside]):
            raise InvariantViolation(f"{self.meta.id}: surrogate differs from original outside mask")


@dataclass
class Manifest:
    root: Path
    config: dict
    samples: list[SampleMeta]

    def ids(self, split: str | None = None) -> list[str]:
        return [m.id for m in self.samples if split is None or m.split == split]

    def get(self, sample_id: str) -> SampleMeta:
        for m in self.samples:
            if m.id == sample_id:
                return m
        raise InputError(f"sample id not in manifest: {sample_id!r}")

    def to_dict(self) -> dict:
        return {"config": self.config, "samples": [m.to_dict() for m in self.samples]}


def sample_seed(base_seed: int, split: str, index: int) -> int:
    if split == "train":
        return base_seed + index
    if split == "test":
        return base_seed + _TEST_SEED_OFFSET + index
    raise InputError(f"unknown split: {split!r}")


def fill_seed_for(seed: int) -> int:
    return seed + _FILL_SEED_OFFSET


def build_sample(seed: int, category: str, prompt_id: str, split: str, sample_id: str,
                 cfg: DatasetConfig, catalog: PromptCatalog = CATALOG) -> SppeSample:
    """Generate one complete 7-tuple; pure function of its arguments."""
    spec = catalog.get(prompt_id)
    synth = synthesize_original_full(seed, category, cfg.image_size,
                                     (cfg.mask_frac_min, cfg.mask_frac_max))
    surrogate = quantize8(generate_surrogate(
        synth.image, synth.mask, ProtectionStrength(cfg.alpha), fill_seed_for(seed),
        category, avoid_text=synth.private_text or None))
    surrogate_edited = apply_simulated_edit(surrogate, prompt_id, catalog)
    original_edited = apply_simulated_edit(synth.image, prompt_id, catalog)
    meta = SampleMeta(sample_id, category, prompt_id, spec.text, split, seed)
    sample = SppeSample(meta, synth.image, synth.mask, surrogate,
                        surrogate_edited, original_edited)
    sample.validate()
    return sample


def plan_split(cfg: DatasetConfig, base_seed: int, split: str, count: int,
               catalog: PromptCatalog = CATALOG) -> list[SampleMeta]:
    """Deterministic (category, prompt) assignment; categories uniform +/- 1."""
    pool = cfg.prompt_ids if cfg.prompt_ids is not None else catalog.default_pool()
    for pid in pool:
        catalog.get(pid)
    cats = sorted(CATEGORIES)
    metas = []
    for i in range(count):
        category = cats[i % len(cats)]
        pid = pool[(i // len(cats) + i) % len(pool)]
        seed = sample_seed(base_seed, split, i)
        metas.append(SampleMeta(f"{split}-{i:04d}", category, pid,
                                catalog.get(pid).text, split, seed))
    return metas


def build_dataset(cfg: DatasetConfig, base_seed: int, root: Path | str,
                  catalog: PromptCatalog = CATALOG, config_echo: dict | None = None) -> Manifest:
    """Write the full dataset under `root` and return its manifest."""
    if cfg.train_count <= 0 or cfg.test_count <= 0:
        raise InputError("train_count and test_count must be positive")
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    if not root.is_dir():
        raise InputError(f"output directory not writable: {root}")

    metas = (plan_split(cfg, base_seed, "train", cfg.train_count, catalog)
             + plan_split(cfg, base_seed, "test", cfg.test_count, catalog))
    for meta in metas:
        sample = build_sample(meta.seed, meta.category, meta.prompt_id, meta.split,
                              meta.id, cfg, catalog)
        sdir = root / meta.id
        sdir.mkdir(parents=True, exist_ok=True)
        save_image_png(sdir / "original.png", sample.original)
        save_mask_png(sdir / "mask.png", sample.mask)
        save_image_png(sdir / "surrogate.png", sample.surrogate)
        save_image_png(sdir / "surrogate_edited.png", sample.surrogate_edited)
        save_image_png(sdir / "original_edited.png", sample.original_edited)
        (sdir / "meta.json").write_text(json.dumps(meta.to_dict(), indent=2, sort_keys=True))

    echo = config_echo if config_echo is not None else {
        "dataset": cfg.__dict__ | {}, "seed": base_seed}
    manifest = Manifest(root, echo, metas)
    (root / "manifest.json").write_text(json.dumps(manifest.to_dict(), indent=2, sort_keys=True))
    return manifest


def load_manifest(root: Path | str) -> Manifest:
    root = Path(root)
    path = root / "manifest.json"
    if not path.exists():
        raise MissingArtifactError(f"no manifest at {path}")
    data = json.loads(path.read_text())
    samples = [SampleMeta(**m) for m in data["samples"]]
    return Manifest(root, data.get("config", {}), samples)


def load_sample(manifest: Manifest, sample_id: str) -> SppeSample:
    """Decode all seven fields and enforce the sample invariants."""
    meta = manifest.get(sample_id)
    sdir = manifest.root / sample_id
    paths = {name: sdir / name for name in RASTER_FILES}
    for name, p in paths.items():
        if not p.exists():
            raise MissingArtifactError(f"{sample_id}: missing {name}")
    sample = SppeSample(
        meta,
        original=load_image_png(paths["original.png"]),
        mask=load_mask_png(paths["mask.png"]),
        surrogate=load_image_png(paths["surrogate.png"]),
        surrogate_edited=load_image_png(paths["surrogate_edited.png"]),
        original_edited=load_image_png(paths["original_edited.png"]),
    )
    sample.validate()
    return sample


def iter_samples(manifest: Manifest, split: str | None = None) -> Iterator[SppeSample]:
    for sid in manifest.ids(split):
        yield load_sample(manifest, sid)


def dataset_hash(manifest: Manifest) -> str:
    """SHA-256 over the manifest and every sample file, in canonical order."""
    digest = hashlib.sha256()
    digest.update((manifest.root / "manifest.json").read_bytes())
    for meta in sorted(manifest.samples, key=lambda m: m.id):
        sdir = manifest.root / meta.id
        for name in RASTER_FILES + ("meta.json",):
            digest.update(name.encode())
            digest.update((sdir / name).read_bytes())
    return digest.hexdigest()


def split_counts(manifest: Manifest) -> dict:
    counts: dict = {"split": {}, "category": {}, "modality": {}, "edit_type": {}}
    for m in manifest.samples:
        counts["split"][m.split] = counts["split"].get(m.split, 0) + 1
        counts["category"][m.category] = counts["category"].get(m.category, 0) + 1
        mod = modality_of(m.category)
        counts["modality"][mod] = counts["modality"].get(mod, 0) + 1
        etype = CATALOG.get(m.prompt_id).edit_type
        counts["edit_type"][etype] = counts["edit_type"].get(etype, 0) + 1
    return counts
