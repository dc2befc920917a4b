"""Text and SVG pictures of configurations.

ASCII glyphs, one character per field cell:

    K  kernel cell            1-4  hull cover level
    .  lacunar void inside the nominal shape
    #  lacunar void on the surrounding rim
    (space)  cell outside the hull domain

Both renderers draw the full (n+2) x (n+2) field grid row by row from the
top, so output bytes are a pure function of the configuration and style.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import grid_to_cell, hull_domain, shape_cells
from .dominoes import Configuration, _checked_cover, kernel_cells

ASCII_MODE = "ascii"
SVG_MODE = "svg"


@dataclass(frozen=True)
class RenderStyle:
    mode: str = ASCII_MODE
    cell_px: int = 16
    show_cover_levels: bool = True
    show_voids: bool = True


def _cell_classes(config: Configuration):
    """Per grid cell: one of 'outside', 'void', 'rim', 'kernel', or a level."""
    n = config.shape.n
    domain = hull_domain(config.shape)
    nominal = shape_cells(config.shape)
    counts = _checked_cover(config)
    kernels = set()
    for d in config.dominos:
        kernels.update(kernel_cells(d))
    grid = []
    for row in range(n + 2):
        line = []
        for col in range(n + 2):
            cell = grid_to_cell(n, row, col)
            if cell not in domain:
                line.append("outside")
            elif cell in kernels:
                line.append("kernel")
            else:
                v = counts.get(cell, 0)
                if v:
                    line.append(v)
                elif cell in nominal:
                    line.append("void")
                else:
                    line.append("rim")
        grid.append(line)
    return grid


def render_ascii(config: Configuration, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()
    lines = []
    for row in _cell_classes(config):
        chars = []
        for mark in row:
            if mark == "outside":
                chars.append(" ")
            elif mark == "kernel":
                chars.append("K")
            elif mark == "void":
                chars.append("." if style.show_voids else " ")
            elif mark == "rim":
                chars.append("#" if style.show_voids else " ")
            else:
                chars.append(str(mark) if style.show_cover_levels else "o")
        lines.append("".join(chars).rstrip())
    return "\n".join(lines) + "\n"


def parse_ascii(text: str) -> dict[tuple[int, int], int | str]:
    """Inverse of render_ascii: (row, col) -> cover level, 'K', or 0 markers."""
    out: dict[tuple[int, int], int | str] = {}
    for row, line in enumerate(text.splitlines()):
        for col, ch in enumerate(line):
            if ch == " ":
                continue
            if ch == "K":
                out[(row, col)] = "K"
            elif ch in ".#":
                out[(row, col)] = 0
            else:
                out[(row, col)] = int(ch)
    return out


_SVG_FILLS = {
    "kernel": "#1a1a2e",
    1: "#c7dcf0",
    2: "#8fbbdd",
    3: "#5a93c4",
    4: "#2f6ba8",
}


def render_svg(config: Configuration, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle(mode=SVG_MODE)
    n = config.shape.n
    px = style.cell_px
    side = (n + 2) * px
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<rect width="{side}" height="{side}" fill="#ffffff"/>',
    ]
    for row, line in enumerate(_cell_classes(config)):
        for col, mark in enumerate(line):
            if mark == "outside":
                continue
            x, y = col * px, row * px
            if mark == "kernel":
                fill = _SVG_FILLS["kernel"]
            elif mark in ("void", "rim"):
                if not style.show_voids:
                    continue
                stroke = "#b04a4a" if mark == "void" else "#9a9a9a"
                parts.append(
                    f'<rect x="{x}" y="{y}" width="{px}" height="{px}" '
                    f'fill="none" stroke="{stroke}" stroke-width="1"/>'
                )
                continue
            else:
                fill = _SVG_FILLS[mark] if style.show_cover_levels else _SVG_FILLS[1]
            parts.append(
                f'<rect x="{x}" y="{y}" width="{px}" height="{px}" fill="{fill}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(config: Configuration, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()
    if style.mode == SVG_MODE:
        return render_svg(config, style)
    return render_ascii(config, style)
