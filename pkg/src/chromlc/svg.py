"""Static SVG plot of chromatic roots against the disk of radius K* Delta."""

from __future__ import annotations

from typing import Sequence

SIZE = 480
PAD = 30


def roots_svg(roots: Sequence[complex], radius: float, title: str = "") -> str:
    extent = max([radius, 1.0] + [abs(z) for z in roots]) * 1.1
    half = (SIZE - 2 * PAD) / 2
    cx = cy = SIZE / 2
    scale = half / extent

    def px(z: complex) -> tuple[float, float]:
        return cx + z.real * scale, cy - z.imag * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<line x1="{PAD}" y1="{cy}" x2="{SIZE - PAD}" y2="{cy}" stroke="#888" stroke-width="1"/>',
        f'<line x1="{cx}" y1="{PAD}" x2="{cx}" y2="{SIZE - PAD}" stroke="#888" stroke-width="1"/>',
        f'<circle cx="{cx}" cy="{cy}" r="{radius * scale:.3f}" fill="none" stroke="#c33" '
        f'stroke-dasharray="4 3"/>',
    ]
    for z in roots:
        x, y = px(z)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="#225"/>')
    label = title or f"roots, |q| <= {radius:.4g}"
    out.append(f'<text x="{PAD}" y="{PAD - 10}" font-family="sans-serif" font-size="12">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
