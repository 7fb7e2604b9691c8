"""Batch rendering of prismcurv figure payloads to PDF."""

from .render import FIGURE_KINDS, FigureSpec, main, render, render_all

__all__ = ["FIGURE_KINDS", "FigureSpec", "main", "render", "render_all"]

__version__ = "0.1.0"
