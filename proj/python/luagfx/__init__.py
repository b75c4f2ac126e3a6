"""Python bindings for the luagfx scene interpreter."""

import json

from ._core import (
    DocumentError,
    export_document,
    interpret_document,
    render_document,
    render_ppm,
    scene_document,
)

__all__ = [
    "DocumentError",
    "export_document",
    "interpret",
    "interpret_document",
    "render_document",
    "render_ppm",
    "scene_document",
]


def interpret(source, assets=None):
    """Interpret a script and return the result document as a dict."""
    return json.loads(interpret_document(source, assets or {}))
