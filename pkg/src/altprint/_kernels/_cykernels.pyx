# Compiled implementations of the hot kernels. Semantics mirror
# numpy_backend exactly; thin/affine_warp are bit-identical to it.

import numpy as np

cimport numpy as cnp
from libc.math cimport floor

cnp.import_array()


def conv_out_size(int size, int k, int stride, int pad):
    return (size + 2 * pad - k) // stride + 1


def im2col(x, int kh, int kw, int stride, int pad):
    b, c, h, w = x.shape
    if pad:
        x = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    x = np.ascontiguousarray(x, dtype=np.float32)
    cdef int ho = (h + 2 * pad - kh) // stride + 1
    cdef int wo = (w + 2 * pad - kw) // stride + 1
    cols = np.empty((b * ho * wo, c * kh * kw), dtype=np.float32)
    _im2col_f32(x, cols, c, ho, wo, kh, kw, stride)
    return cols


cdef void _im2col_f32(cnp.float32_t[:, :, :, ::1] xp,
                      cnp.float32_t[:, ::1] cols,
                      int c, int ho, int wo, int kh, int kw,
                      int stride) noexcept nogil:
    cdef Py_ssize_t b = xp.shape[0]
    cdef Py_ssize_t bi, oy, ox, ci, ky, kx, row, col
    for bi in range(b):
        for oy in range(ho):
            for ox in range(wo):
                row = (bi * ho + oy) * wo + ox
                col = 0
                for ci in range(c):
                    for ky in range(kh):
                        for kx in range(kw):
                            cols[row, col] = xp[bi, ci, oy * stride + ky,
                                                ox * stride + kx]
                            col += 1


def col2im(cols, int b, int c, int h, int w, int kh, int kw,
           int stride, int pad):
    cdef int ho = (h + 2 * pad - kh) // stride + 1
    cdef int wo = (w + 2 * pad - kw) // stride + 1
    cols = np.ascontiguousarray(cols, dtype=np.float32)
    xp = np.zeros((b, c, h + 2 * pad, w + 2 * pad), dtype=np.float32)
    _col2im_f32(cols, xp, c, ho, wo, kh, kw, stride)
    if pad:
        return np.ascontiguousarray(xp[:, :, pad:pad + h, pad:pad + w])
    return xp


cdef void _col2im_f32(cnp.float32_t[:, ::1] cols,
                      cnp.float32_t[:, :, :, ::1] xp,
                      int c, int ho, int wo, int kh, int kw,
                      int stride) noexcept nogil:
    cdef Py_ssize_t b = xp.shape[0]
    cdef Py_ssize_t bi, oy, ox, ci, ky, kx, row, col
    for bi in range(b):
        for oy in range(ho):
            for ox in range(wo):
                row = (bi * ho + oy) * wo + ox
                col = 0
                for ci in range(c):
                    for ky in range(kh):
                        for kx in range(kw):
                            xp[bi, ci, oy * stride + ky, ox * stride + kx] += \
                                cols[row, col]
                            col += 1


def thin(mask):
    img = np.pad(np.asarray(mask).astype(np.uint8), 1)
    flags = np.zeros_like(img)
    _thin_u8(img, flags)
    return img[1:-1, 1:-1].astype(bool)


cdef void _thin_u8(cnp.uint8_t[:, ::1] img, cnp.uint8_t[:, ::1] flags) noexcept nogil:
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1]
    cdef Py_ssize_t y, x
    cdef int step, deleted, bsum, a
    cdef int p2, p3, p4, p5, p6, p7, p8, p9, c1, c2
    deleted = 1
    while deleted:
        deleted = 0
        for step in range(2):
            for y in range(1, h - 1):
                for x in range(1, w - 1):
                    flags[y, x] = 0
                    if img[y, x] == 0:
                        continue
                    p2 = img[y - 1, x]
                    p3 = img[y - 1, x + 1]
                    p4 = img[y, x + 1]
                    p5 = img[y + 1, x + 1]
                    p6 = img[y + 1, x]
                    p7 = img[y + 1, x - 1]
                    p8 = img[y, x - 1]
                    p9 = img[y - 1, x - 1]
                    bsum = p2 + p3 + p4 + p5 + p6 + p7 + p8 + p9
                    if bsum < 2 or bsum > 6:
                        continue
                    a = 0
                    if p2 == 0 and p3 == 1: a += 1
                    if p3 == 0 and p4 == 1: a += 1
                    if p4 == 0 and p5 == 1: a += 1
                    if p5 == 0 and p6 == 1: a += 1
                    if p6 == 0 and p7 == 1: a += 1
                    if p7 == 0 and p8 == 1: a += 1
                    if p8 == 0 and p9 == 1: a += 1
                    if p9 == 0 and p2 == 1: a += 1
                    if a != 1:
                        continue
                    if step == 0:
                        c1 = p2 * p4 * p6
                        c2 = p4 * p6 * p8
                    else:
                        c1 = p2 * p4 * p8
                        c2 = p2 * p6 * p8
                    if c1 == 0 and c2 == 0:
                        flags[y, x] = 1
            for y in range(1, h - 1):
                for x in range(1, w - 1):
                    if flags[y, x]:
                        img[y, x] = 0
                        deleted = 1


def affine_warp(img, m, int out_h, int out_w, int fill, bint clamp):
    img = np.ascontiguousarray(img, dtype=np.uint8)
    m = np.ascontiguousarray(m, dtype=np.float64)
    out = np.empty((out_h, out_w), dtype=np.uint8)
    _affine_warp_u8(img, m, out, fill, clamp)
    return out


cdef void _affine_warp_u8(cnp.uint8_t[:, ::1] img, cnp.float64_t[:, ::1] m,
                          cnp.uint8_t[:, ::1] out, int fill,
                          bint clamp) noexcept nogil:
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1]
    cdef Py_ssize_t oh = out.shape[0], ow = out.shape[1]
    cdef Py_ssize_t y, x, x0, y0, x1, y1
    cdef double gx, gy, fx, fy, v
    cdef int inside
    for y in range(oh):
        for x in range(ow):
            gx = m[0, 0] * x + m[0, 1] * y + m[0, 2]
            gy = m[1, 0] * x + m[1, 1] * y + m[1, 2]
            inside = 1
            if not clamp:
                if gx < 0.0 or gx > w - 1.0 or gy < 0.0 or gy > h - 1.0:
                    inside = 0
            if gx < 0.0:
                gx = 0.0
            elif gx > w - 1.0:
                gx = w - 1.0
            if gy < 0.0:
                gy = 0.0
            elif gy > h - 1.0:
                gy = h - 1.0
            x0 = <Py_ssize_t>floor(gx)
            y0 = <Py_ssize_t>floor(gy)
            fx = gx - x0
            fy = gy - y0
            x1 = x0 + 1 if x0 + 1 < w else w - 1
            y1 = y0 + 1 if y0 + 1 < h else h - 1
            if inside:
                v = ((1.0 - fy) * ((1.0 - fx) * img[y0, x0] + fx * img[y0, x1])
                     + fy * ((1.0 - fx) * img[y1, x0] + fx * img[y1, x1]))
                out[y, x] = <cnp.uint8_t>floor(v + 0.5)
            else:
                out[y, x] = <cnp.uint8_t>fill
