"""Pure-numpy implementations of the hot kernels.

Fallback for the compiled backend in ``_cykernels``. Same signatures and
semantics; the integer-valued kernels (``thin``, ``affine_warp``) produce
bit-identical output on both backends.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def conv_out_size(size: int, k: int, stride: int, pad: int) -> int:
    return (size + 2 * pad - k) // stride + 1


def im2col(x: np.ndarray, kh: int, kw: int, stride: int, pad: int) -> np.ndarray:
    """Unfold (B,C,H,W) into a (B*Ho*Wo, C*kh*kw) patch matrix."""
    b, c, h, w = x.shape
    if pad:
        x = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    win = sliding_window_view(x, (kh, kw), axis=(2, 3))[:, :, ::stride, ::stride]
    ho, wo = win.shape[2], win.shape[3]
    cols = win.transpose(0, 2, 3, 1, 4, 5).reshape(b * ho * wo, c * kh * kw)
    return np.ascontiguousarray(cols)


def col2im(cols: np.ndarray, b: int, c: int, h: int, w: int,
           kh: int, kw: int, stride: int, pad: int) -> np.ndarray:
    """Adjoint of im2col: scatter-add patches back onto a (B,C,H,W) grid."""
    ho = conv_out_size(h, kh, stride, pad)
    wo = conv_out_size(w, kw, stride, pad)
    xp = np.zeros((b, c, h + 2 * pad, w + 2 * pad), dtype=cols.dtype)
    patches = cols.reshape(b, ho, wo, c, kh, kw)
    for ky in range(kh):
        for kx in range(kw):
            xp[:, :, ky:ky + stride * ho:stride, kx:kx + stride * wo:stride] += \
                patches[:, :, :, :, ky, kx].transpose(0, 3, 1, 2)
    if pad:
        return np.ascontiguousarray(xp[:, :, pad:pad + h, pad:pad + w])
    return xp


def thin(mask: np.ndarray) -> np.ndarray:
    """Zhang-Suen thinning of a boolean raster, iterated to a fixed point."""
    img = np.pad(mask.astype(np.uint8), 1)
    while True:
        deleted = False
        for step in (0, 1):
            p2 = img[:-2, 1:-1]
            p3 = img[:-2, 2:]
            p4 = img[1:-1, 2:]
            p5 = img[2:, 2:]
            p6 = img[2:, 1:-1]
            p7 = img[2:, :-2]
            p8 = img[1:-1, :-2]
            p9 = img[:-2, :-2]
            ring = (p2, p3, p4, p5, p6, p7, p8, p9)
            bsum = sum(p.astype(np.intp) for p in ring)
            a = np.zeros_like(bsum)
            for i in range(8):
                a += (ring[i] == 0) & (ring[(i + 1) % 8] == 1)
            if step == 0:
                c1 = p2 * p4 * p6 == 0
                c2 = p4 * p6 * p8 == 0
            else:
                c1 = p2 * p4 * p8 == 0
                c2 = p2 * p6 * p8 == 0
            kill = ((img[1:-1, 1:-1] == 1) & (bsum >= 2) & (bsum <= 6)
                    & (a == 1) & c1 & c2)
            if kill.any():
                img[1:-1, 1:-1][kill] = 0
                deleted = True
        if not deleted:
            return img[1:-1, 1:-1].astype(bool)


def affine_warp(img: np.ndarray, m: np.ndarray, out_h: int, out_w: int,
                fill: int, clamp: bool) -> np.ndarray:
    """Bilinear warp of a uint8 image.

    ``m`` is a 2x3 matrix mapping output pixel (x, y) to source coordinates.
    ``clamp=True`` extends edge pixels (resampling); ``clamp=False`` writes
    ``fill`` wherever the source point leaves the interpolation domain.
    """
    h, w = img.shape
    xs = np.arange(out_w, dtype=np.float64)
    ys = np.arange(out_h, dtype=np.float64)
    gx = m[0, 0] * xs[None, :] + m[0, 1] * ys[:, None] + m[0, 2]
    gy = m[1, 0] * xs[None, :] + m[1, 1] * ys[:, None] + m[1, 2]
    inside = None
    if not clamp:
        inside = (gx >= 0.0) & (gx <= w - 1.0) & (gy >= 0.0) & (gy <= h - 1.0)
    gx = np.clip(gx, 0.0, w - 1.0)
    gy = np.clip(gy, 0.0, h - 1.0)
    x0 = np.floor(gx)
    y0 = np.floor(gy)
    fx = gx - x0
    fy = gy - y0
    x0 = x0.astype(np.intp)
    y0 = y0.astype(np.intp)
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    im = img.astype(np.float64)
    v = ((1.0 - fy) * ((1.0 - fx) * im[y0, x0] + fx * im[y0, x1])
         + fy * ((1.0 - fx) * im[y1, x0] + fx * im[y1, x1]))
    out = np.floor(v + 0.5).astype(np.uint8)
    if inside is not None:
        out = np.where(inside, out, np.uint8(fill))
    return out
