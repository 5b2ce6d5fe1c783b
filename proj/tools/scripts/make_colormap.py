#!/usr/bin/env python3
"""Writes core/src/cyclic_colormap.inc: 256 sRGB entries on a closed OKLab
hue circle with gently varying lightness. Run from the repository root."""
import math

N = 256


def oklab_to_srgb(L, a, b):
    l_ = L + 0.3963377774 * a + 0.2158037573 * b
    m_ = L - 0.1055613458 * a - 0.0638541728 * b
    s_ = L - 0.0894841775 * a - 1.2914855480 * b
    l, m, s = l_ ** 3, m_ ** 3, s_ ** 3
    rgb = (
        4.0767416621 * l - 3.3077115913 * m + 0.2309699292 * s,
        -1.2684380046 * l + 2.6097574011 * m - 0.3413193965 * s,
        -0.0041960863 * l - 0.7034186147 * m + 1.7076147010 * s,
    )

    def encode(c):
        c = min(max(c, 0.0), 1.0)
        return 12.92 * c if c <= 0.0031308 else 1.055 * c ** (1 / 2.4) - 0.055

    return tuple(round(255 * encode(c)) for c in rgb)


rows = []
for i in range(N):
    t = 2 * math.pi * i / N
    L = 0.68 + 0.06 * math.cos(2 * t)
    C = 0.13
    rows.append(oklab_to_srgb(L, C * math.cos(t + 0.6), C * math.sin(t + 0.6)))

with open("core/src/cyclic_colormap.inc", "w") as f:
    f.write("// Generated by tools/scripts/make_colormap.py; 256 cyclic sRGB entries.\n")
    for r, g, b in rows:
        f.write(f"{{{r}, {g}, {b}}},\n")
