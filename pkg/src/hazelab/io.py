"""File I/O: 8-bit PNG for display images, 32-bit PFM for float fields.

PFM keeps transmission and depth maps lossless; the "Pf" header with a
negative scale marks little-endian single-channel data, rows stored
bottom-up.
"""

import json

import numpy as np
from PIL import Image

from .errors import InvalidInputError
from .image import from_uint8, to_uint8


def read_image(path):
    """Load an image file as float64 RGB in [0, 1]."""
    with Image.open(path) as img:
        arr = np.asarray(img.convert("RGB"))
    return from_uint8(arr)


def write_image(path, img):
    """Clamp, quantize to 8 bits, and save as PNG."""
    Image.fromarray(to_uint8(img), mode="RGB").save(path, format="PNG")


def read_pfm(path):
    """Load a single-channel PFM file as a float64 array."""
    with open(path, "rb") as f:
        header = f.readline().rstrip()
        if header != b"Pf":
            raise InvalidInputError(f"{path}: not a single-channel PFM file")
        dims = f.readline().split()
        if len(dims) != 2:
            raise InvalidInputError(f"{path}: malformed PFM dimensions")
        width, height = int(dims[0]), int(dims[1])
        scale = float(f.readline())
        data = np.frombuffer(f.read(width * height * 4), dtype=np.float32)
    if data.size != width * height:
        raise InvalidInputError(f"{path}: truncated PFM payload")
    if scale > 0:  # big-endian payload
        data = data.byteswap()
    arr = data.reshape(height, width)
    return np.flipud(arr).astype(np.float64)


def write_pfm(path, field):
    """Save a single-channel float field as little-endian PFM."""
    arr = np.asarray(field, dtype=np.float32)
    if arr.ndim != 2:
        raise InvalidInputError(f"PFM output must be 2-D, got shape {arr.shape}")
    h, w = arr.shape
    with open(path, "wb") as f:
        f.write(b"Pf\n")
        f.write(f"{w} {h}\n".encode("ascii"))
        f.write(b"-1.0\n")
        f.write(np.ascontiguousarray(np.flipud(arr)).tobytes())


def write_json(path, payload):
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    with open(path, "w", encoding="ascii", newline="\n") as f:
        json.dump(payload, f, sort_keys=True, indent=2)
        f.write("\n")


def read_json(path):
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)
