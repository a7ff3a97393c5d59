"""Separable 2-D DCT over 8x8 blocks, quantisation with absorbed scaling, and PGM I/O."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from sbpdct.metrics import SCALED_ALGORITHMS, run_algorithm
from sbpdct.reference import dct_matrix
from sbpdct.rivals import AlgorithmId
from sbpdct.sbp import Scenario

BLOCK = 8
LEVEL_SHIFT = 128.0
PSNR_CAP = 999.0
TIE_BAND = 1e-9

# Standard luminance table (JPEG Annex K), used as the default demo table.
JPEG_LUMA = np.array([
    [16, 11, 10, 16, 24, 40, 51, 61],
    [12, 12, 14, 19, 26, 58, 60, 55],
    [14, 13, 16, 24, 40, 57, 69, 56],
    [14, 17, 22, 29, 51, 87, 80, 62],
    [18, 22, 37, 56, 68, 109, 103, 77],
    [24, 35, 55, 64, 81, 104, 113, 92],
    [49, 64, 78, 87, 103, 121, 120, 101],
    [72, 92, 95, 98, 112, 100, 103, 99],
], dtype=float)


def _transform_lines(lines: np.ndarray, alg: AlgorithmId, scaled: bool):
    out = np.empty_like(lines)
    scale = np.ones(BLOCK)
    for i, line in enumerate(lines):
        spectrum = run_algorithm(alg, line, Scenario.ARBITRARY, scaled=scaled)
        out[i] = np.asarray(spectrum.values, dtype=float)
        if spectrum.scaled:
            scale = np.asarray(spectrum.scale, dtype=float)
    return out, scale


def dct2_block(block, alg: AlgorithmId = AlgorithmId.PROPOSED, scaled: bool = False):
    """Row pass then column pass of an 8-point algorithm.

    Returns ``(coeffs, scale)``; ``coeffs * scale`` are the exact coefficients
    ``C8 @ block @ C8.T``. ``scale`` is all ones unless ``scaled`` is set.
    """
    b = np.asarray(block, dtype=float)
    if b.shape != (BLOCK, BLOCK):
        raise ValueError(f"expected an 8x8 block, got {b.shape}")
    use_scaled = scaled and alg in SCALED_ALGORITHMS
    rows, s_row = _transform_lines(b, alg, use_scaled)
    cols, s_col = _transform_lines(rows.T, alg, use_scaled)
    return cols.T, np.outer(s_col, s_row)


def idct2_block(coeffs) -> np.ndarray:
    X = np.asarray(coeffs, dtype=float)
    if X.shape != (BLOCK, BLOCK):
        raise ValueError(f"expected 8x8 coefficients, got {X.shape}")
    C = dct_matrix(BLOCK)
    return C.T @ X @ C / 64.0


def round_half_away(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return (np.sign(v) * np.floor(np.abs(v) + 0.5)).astype(np.int64)


def near_tie(v, band: float = TIE_BAND) -> np.ndarray:
    """Mask of values whose fractional part is within ``band`` of one half."""
    frac = np.abs(np.asarray(v, dtype=float)) % 1.0
    return np.abs(frac - 0.5) < band


def _check_q(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.shape != (BLOCK, BLOCK):
        raise ValueError(f"quantisation table must be 8x8, got {q.shape}")
    if np.any(q <= 0):
        raise ValueError("quantisation steps must be positive")
    return q


def quantize(coeffs, q) -> np.ndarray:
    return round_half_away(np.asarray(coeffs, dtype=float) / _check_q(q))


def absorbed_table(scale, q) -> np.ndarray:
    """Effective step ``q / scale`` so scaled coefficients quantise like exact ones."""
    scale = np.asarray(scale, dtype=float)
    if np.any(scale == 0):
        raise ValueError("scale entries must be nonzero")
    return _check_q(q) / scale


def quantize_absorbed(scaled_coeffs, scale, q) -> np.ndarray:
    return round_half_away(np.asarray(scaled_coeffs, dtype=float) / absorbed_table(scale, q))


def pad_to_blocks(img: np.ndarray) -> np.ndarray:
    h, w = img.shape
    ph, pw = (-h) % BLOCK, (-w) % BLOCK
    if ph == 0 and pw == 0:
        return img
    return np.pad(img, ((0, ph), (0, pw)), mode="edge")


def psnr(reference, test, peak: float = 255.0) -> float:
    err = np.asarray(reference, dtype=float) - np.asarray(test, dtype=float)
    mse = float(np.mean(err * err))
    if mse == 0.0:
        return PSNR_CAP
    return min(PSNR_CAP, 10.0 * math.log10(peak * peak / mse))


@dataclass
class ImageResult:
    coeffs: np.ndarray  # (rows, cols, 8, 8) exact coefficients, or dequantised when q is given
    quantized: np.ndarray | None  # (rows, cols, 8, 8) integers
    reconstruction: np.ndarray  # float, cropped to the input size
    psnr: float

    def reconstruction_u8(self) -> np.ndarray:
        return np.clip(np.rint(self.reconstruction), 0, 255).astype(np.uint8)


def transform_image(img, alg: AlgorithmId = AlgorithmId.PROPOSED, q=None) -> ImageResult:
    """Blockwise forward transform, optional quantisation, and reconstruction.

    Scaled-capable algorithms quantise their scaled output against the
    absorbed table; the others quantise exact coefficients directly.
    """
    img = np.asarray(img)
    if img.ndim != 2 or img.size == 0:
        raise ValueError(f"expected a non-empty 2-D grayscale image, got shape {img.shape}")
    h, w = img.shape
    shifted = pad_to_blocks(img.astype(float)) - LEVEL_SHIFT
    nby, nbx = shifted.shape[0] // BLOCK, shifted.shape[1] // BLOCK
    coeffs = np.empty((nby, nbx, BLOCK, BLOCK))
    quantized = None if q is None else np.empty((nby, nbx, BLOCK, BLOCK), dtype=np.int64)
    recon = np.empty_like(shifted)
    scaled = q is not None and alg in SCALED_ALGORITHMS
    for by in range(nby):
        for bx in range(nbx):
            ys, xs = by * BLOCK, bx * BLOCK
            blk = shifted[ys:ys + BLOCK, xs:xs + BLOCK]
            c, scale = dct2_block(blk, alg, scaled=scaled)
            if q is None:
                exact = c * scale
            else:
                ints = quantize_absorbed(c, scale, q) if scaled else quantize(c, q)
                quantized[by, bx] = ints
                exact = ints * np.asarray(q, dtype=float)
            coeffs[by, bx] = exact
            recon[ys:ys + BLOCK, xs:xs + BLOCK] = idct2_block(exact)
    recon = recon[:h, :w] + LEVEL_SHIFT
    return ImageResult(coeffs, quantized, recon, psnr(img, recon))


def read_pgm(path: str | Path) -> np.ndarray:
    try:
        with PILImage.open(path) as im:
            if im.format != "PPM" or im.mode != "L":
                raise ValueError(f"{path}: expected an 8-bit binary PGM (P5), got {im.format}/{im.mode}")
            return np.array(im, dtype=np.uint8)
    except (OSError, SyntaxError) as exc:
        raise ValueError(f"cannot read image {path}: {exc}") from exc


def write_pgm(path: str | Path, img) -> None:
    arr = np.asarray(img)
    if arr.dtype != np.uint8:
        arr = np.clip(np.rint(arr), 0, 255).astype(np.uint8)
    PILImage.fromarray(arr).save(path, format="PPM")


def coefficients_csv(blocks: np.ndarray) -> str:
    """One line per block in raster order, 64 row-major values each."""
    flat = np.asarray(blocks).reshape(-1, BLOCK * BLOCK)
    if np.issubdtype(flat.dtype, np.integer):
        return "".join(",".join(str(int(v)) for v in row) + "\n" for row in flat)
    return "".join(",".join(f"{v:.12g}" for v in row) + "\n" for row in flat)
