"""Grayscale image and mask value types plus the geometric primitives.

Pixel convention: 8-bit intensities, 0 = black ridge, 255 = white
background. PGM (binary P5) is the canonical format; 8-bit grayscale PNG
is supported for interchange. All values are immutable after construction
and all operations are pure functions returning new values.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from altprint import _kernels
from altprint.errors import ImageFormatError, UnsupportedImageError

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class GrayImage:
    """8-bit grayscale raster backed by a read-only (h, w) uint8 array."""

    __slots__ = ("pixels",)

    def __init__(self, pixels) -> None:
        arr = np.asarray(pixels, dtype=np.uint8)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"GrayImage needs a 2-D pixel array, got shape {arr.shape}")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    def __setattr__(self, name, value):
        raise AttributeError("GrayImage is immutable")

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, GrayImage) and np.array_equal(self.pixels, other.pixels)

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"


class BinaryMask:
    """Boolean raster with the same geometry conventions as GrayImage."""

    __slots__ = ("bits",)

    def __init__(self, bits) -> None:
        arr = np.asarray(bits, dtype=bool)
        if arr.ndim != 2:
            raise ValueError(f"BinaryMask needs a 2-D bit array, got shape {arr.shape}")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "bits", arr)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryMask is immutable")

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    def count(self) -> int:
        return int(self.bits.sum())

    def to_image(self) -> GrayImage:
        """Render as 0/255 grayscale (255 = member)."""
        return GrayImage(np.where(self.bits, 255, 0).astype(np.uint8))

    @classmethod
    def from_image(cls, image: GrayImage, threshold: int = 128) -> "BinaryMask":
        return cls(image.pixels >= threshold)

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryMask) and np.array_equal(self.bits, other.bits)

    def __repr__(self) -> str:
        return f"BinaryMask({self.width}x{self.height}, {self.count()} set)"


@dataclass(frozen=True)
class Rect:
    """Axis-aligned pixel rectangle, (x, y) top-left inclusive."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w <= 0 or self.h <= 0:
            raise ValueError(f"Rect extents must be positive, got {self.w}x{self.h}")

    def contains_point(self, px: float, py: float) -> bool:
        return self.x <= px < self.x + self.w and self.y <= py < self.y + self.h


def _parse_pgm(data: bytes) -> GrayImage:
    pos = 0

    def token() -> bytes:
        nonlocal pos
        while pos < len(data):
            if data[pos:pos + 1].isspace():
                pos += 1
            elif data[pos:pos + 1] == b"#":
                while pos < len(data) and data[pos] != 0x0A:
                    pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ImageFormatError("truncated PGM header")
        return data[start:pos]

    if token() != b"P5":
        raise ImageFormatError("not a binary (P5) PGM file")
    try:
        width = int(token())
        height = int(token())
        maxval = int(token())
    except ValueError as exc:
        raise ImageFormatError("malformed PGM header") from exc
    if width <= 0 or height <= 0:
        raise ImageFormatError("non-positive PGM dimensions")
    if maxval > 255:
        raise UnsupportedImageError(f"PGM maxval {maxval} exceeds 8-bit range")
    if maxval <= 0:
        raise ImageFormatError("PGM maxval must be positive")
    pos += 1  # single whitespace byte after maxval
    raster = data[pos:pos + width * height]
    if len(raster) < width * height:
        raise ImageFormatError("PGM pixel data shorter than header promises")
    return GrayImage(np.frombuffer(raster, dtype=np.uint8).reshape(height, width))


def _parse_png(data: bytes) -> GrayImage:
    try:
        pil = PILImage.open(io.BytesIO(data))
        pil.load()
    except Exception as exc:
        raise ImageFormatError(f"cannot decode PNG: {exc}") from exc
    if pil.mode == "L":
        return GrayImage(np.asarray(pil, dtype=np.uint8))
    if pil.mode == "RGB":
        rgb = np.asarray(pil, dtype=np.uint16)
        return GrayImage((rgb.sum(axis=2) // 3).astype(np.uint8))
    raise UnsupportedImageError(f"unsupported PNG mode {pil.mode!r} (need 8-bit gray or RGB)")


def load_image(path) -> GrayImage:
    """Load a PGM (P5) or 8-bit PNG file as a GrayImage."""
    data = Path(path).read_bytes()
    if data[:2] == b"P5":
        return _parse_pgm(data)
    if data[:8] == _PNG_MAGIC:
        return _parse_png(data)
    raise ImageFormatError(f"{path}: neither PGM (P5) nor PNG")


def save_image(image: GrayImage, path) -> None:
    """Write as PGM or PNG depending on the file extension. Bit-exact round trip."""
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".pgm":
        header = f"P5\n{image.width} {image.height}\n255\n".encode("ascii")
        path.write_bytes(header + image.pixels.tobytes())
    elif suffix == ".png":
        buf = io.BytesIO()
        PILImage.fromarray(image.pixels, mode="L").save(buf, format="PNG")
        path.write_bytes(buf.getvalue())
    else:
        raise ValueError(f"unsupported image extension {suffix!r} (use .pgm or .png)")


def save_rgb(pixels: np.ndarray, path) -> None:
    """Write an (h, w, 3) uint8 array as PNG (used for overlays)."""
    pixels = np.ascontiguousarray(pixels, dtype=np.uint8)
    if pixels.ndim != 3 or pixels.shape[2] != 3:
        raise ValueError("save_rgb expects an (h, w, 3) array")
    buf = io.BytesIO()
    PILImage.fromarray(pixels, mode="RGB").save(buf, format="PNG")
    Path(path).write_bytes(buf.getvalue())


def crop(image: GrayImage, rect: Rect) -> GrayImage:
    """Extract ``rect``; the rect must lie fully inside the image."""
    if rect.x < 0 or rect.y < 0 or rect.x + rect.w > image.width or rect.y + rect.h > image.height:
        raise ValueError(f"crop rect {rect} exceeds {image.width}x{image.height} image")
    return GrayImage(image.pixels[rect.y:rect.y + rect.h, rect.x:rect.x + rect.w])


def crop_padded(image: GrayImage, rect: Rect, fill: int = 255) -> GrayImage:
    """Like crop, but parts of ``rect`` outside the image are ``fill``."""
    out = np.full((rect.h, rect.w), fill, dtype=np.uint8)
    x0 = max(rect.x, 0)
    y0 = max(rect.y, 0)
    x1 = min(rect.x + rect.w, image.width)
    y1 = min(rect.y + rect.h, image.height)
    if x0 < x1 and y0 < y1:
        out[y0 - rect.y:y1 - rect.y, x0 - rect.x:x1 - rect.x] = image.pixels[y0:y1, x0:x1]
    return GrayImage(out)


def mirror_h(image: GrayImage) -> GrayImage:
    """Reverse column order (horizontal mirror)."""
    return GrayImage(image.pixels[:, ::-1])


def rotate(image: GrayImage, degrees: float, fill: int = 255) -> GrayImage:
    """Rotate about the image center, bilinear, same output dims.

    Positive angles rotate content counter-clockwise on screen. Output
    pixels whose source falls outside the image are set to ``fill``.
    """
    theta = np.deg2rad(degrees)
    c, s = np.cos(theta), np.sin(theta)
    cx = (image.width - 1) / 2.0
    cy = (image.height - 1) / 2.0
    m = np.array([
        [c, s, cx - c * cx - s * cy],
        [-s, c, cy + s * cx - c * cy],
    ])
    return GrayImage(_kernels.affine_warp(image.pixels, m, image.height, image.width,
                                          int(fill), False))


def resize(image: GrayImage, new_w: int, new_h: int) -> GrayImage:
    """Bilinear resample to (new_w, new_h) using half-pixel centers."""
    if new_w <= 0 or new_h <= 0:
        raise ValueError("resize dimensions must be positive")
    if new_w == image.width and new_h == image.height:
        return GrayImage(image.pixels)
    sx = image.width / new_w
    sy = image.height / new_h
    m = np.array([
        [sx, 0.0, 0.5 * sx - 0.5],
        [0.0, sy, 0.5 * sy - 0.5],
    ])
    return GrayImage(_kernels.affine_warp(image.pixels, m, new_h, new_w, 0, True))
