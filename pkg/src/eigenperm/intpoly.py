"""Exact products of integer polynomials by Kronecker substitution.

Coefficients are packed into one big integer with fixed-width slots, the
big integers are multiplied (gmpy2 when installed, otherwise Python ints),
and the slots are unpacked. Signs are handled by splitting each factor into
its positive and negative parts, so every packed product has nonnegative
slots and no carries cross slot boundaries.
"""

from __future__ import annotations

from typing import Sequence

try:
    import gmpy2

    def _big(x: int):
        return gmpy2.mpz(x)

    def _to_int(x) -> int:
        return int(x)

except ImportError:  # pragma: no cover - exercised only without gmpy2
    def _big(x: int):
        return x

    def _to_int(x) -> int:
        return x


def _pack(coeffs: Sequence[int], slot_bytes: int) -> int:
    buf = bytearray(len(coeffs) * slot_bytes)
    for i, c in enumerate(coeffs):
        if c:
            buf[i * slot_bytes:(i + 1) * slot_bytes] = c.to_bytes(slot_bytes, "little")
    return int.from_bytes(bytes(buf), "little")


def _unpack(value: int, slot_bytes: int, count: int) -> list[int]:
    raw = value.to_bytes(max(count * slot_bytes, (value.bit_length() + 7) // 8), "little")
    return [int.from_bytes(raw[i * slot_bytes:(i + 1) * slot_bytes], "little") for i in range(count)]


def _mul_nonneg(a: Sequence[int], b: Sequence[int], degree: int) -> list[int]:
    if not any(a) or not any(b):
        return [0] * (degree + 1)
    bound = max(a) * max(b) * min(len(a), len(b))
    slot_bytes = bound.bit_length() // 8 + 1
    pa = _big(_pack(a, slot_bytes))
    pb = _big(_pack(b, slot_bytes))
    prod = _to_int(pa * pb)
    out = _unpack(prod, slot_bytes, len(a) + len(b) - 1)
    out = out[: degree + 1]
    return out + [0] * (degree + 1 - len(out))


def poly_mul(a: Sequence[int], b: Sequence[int], degree: int | None = None) -> list[int]:
    """Coefficients 0..degree of a(x) b(x) for integer coefficient lists."""
    if degree is None:
        degree = len(a) + len(b) - 2
    a = list(a[: degree + 1])
    b = list(b[: degree + 1])
    ap = [max(c, 0) for c in a]
    an = [max(-c, 0) for c in a]
    bp = [max(c, 0) for c in b]
    bn = [max(-c, 0) for c in b]
    pp = _mul_nonneg(ap, bp, degree)
    nn = _mul_nonneg(an, bn, degree)
    pn = _mul_nonneg(ap, bn, degree)
    np_ = _mul_nonneg(an, bp, degree)
    return [w + x - y - z for w, x, y, z in zip(pp, nn, pn, np_)]


def poly_mul_naive(a: Sequence[int], b: Sequence[int], degree: int | None = None) -> list[int]:
    if degree is None:
        degree = len(a) + len(b) - 2
    out = [0] * (degree + 1)
    for i, x in enumerate(a[: degree + 1]):
        if x:
            for j, y in enumerate(b[: degree + 1 - i]):
                out[i + j] += x * y
    return out
