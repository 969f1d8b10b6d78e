"""Band histograms from portable pixmaps and graymaps (P2, P3, P5, P6; maxval 255)."""

from __future__ import annotations

from pathlib import Path

from .model import Dataset, DatasetItem

_CHANNELS = {b"P2": 1, b"P5": 1, b"P3": 3, b"P6": 3}
_WS = b" \t\r\n\v\f"
SUFFIXES = (".ppm", ".pgm", ".pnm")


class PpmError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class _Reader:
    def __init__(self, buf: bytes, pos: int = 0):
        self.buf = buf
        self.pos = pos

    def skip_space(self):
        buf = self.buf
        while self.pos < len(buf):
            c = buf[self.pos:self.pos + 1]
            if c == b"#":
                end = buf.find(b"\n", self.pos)
                self.pos = len(buf) if end < 0 else end + 1
            elif c in _WS:
                self.pos += 1
            else:
                break

    def token(self, what: str) -> bytes:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.buf) and self.buf[self.pos:self.pos + 1] not in _WS + b"#":
            self.pos += 1
        if self.pos == start:
            raise PpmError(f"missing {what}", start)
        return self.buf[start:self.pos]

    def integer(self, what: str) -> int:
        self.skip_space()
        start = self.pos
        tok = self.token(what)
        if not tok.isdigit():
            raise PpmError(f"{what} is not a decimal integer: {tok[:16]!r}", start)
        return int(tok)


def parse_images(buf: bytes) -> list:
    """Decode every image in ``buf`` into ``(width, height, channels, samples)``."""
    r = _Reader(buf)
    images = []
    while True:
        r.skip_space()
        if r.pos >= len(buf):
            break
        start = r.pos
        magic = buf[start:start + 2]
        if magic not in _CHANNELS:
            raise PpmError(f"unsupported magic number {magic!r}", start)
        r.pos += 2
        width = r.integer("width")
        height = r.integer("height")
        r.skip_space()
        maxval_at = r.pos
        maxval = r.integer("maximum sample value")
        if maxval != 255:
            raise PpmError(f"unsupported maximum sample value {maxval}", maxval_at)
        channels = _CHANNELS[magic]
        n = width * height * channels
        if magic in (b"P5", b"P6"):
            if r.pos >= len(buf) or buf[r.pos:r.pos + 1] not in _WS:
                raise PpmError("expected a single whitespace byte before the raster", r.pos)
            r.pos += 1
            raster = buf[r.pos:r.pos + n]
            if len(raster) < n:
                raise PpmError(f"truncated pixel data: need {n} bytes, found {len(raster)}", r.pos + len(raster))
            samples = list(raster)
            r.pos += n
        else:
            samples = []
            for _ in range(n):
                r.skip_space()
                at = r.pos
                if at >= len(buf):
                    raise PpmError(f"truncated pixel data: need {n} samples, found {len(samples)}", at)
                v = r.integer("sample")
                if v > maxval:
                    raise PpmError(f"sample {v} exceeds maximum {maxval}", at)
                samples.append(v)
        images.append((width, height, channels, samples))
    if not images:
        raise PpmError("no image data", 0)
    return images


def band_histograms(channels: int, samples) -> list:
    h = [0] * (256 * channels)
    for k, v in enumerate(samples):
        h[256 * (k % channels) + v] += 1
    return h


def ingest_ppm(path) -> Dataset:
    """One dataset item per image; payload is the concatenated per-channel histogram."""
    path = Path(path)
    files = sorted(p for p in path.iterdir() if p.suffix.lower() in SUFFIXES) if path.is_dir() else [path]
    items = []
    for f in files:
        images = parse_images(f.read_bytes())
        for k, (w, hgt, ch, samples) in enumerate(images):
            item_id = f.stem if len(images) == 1 else f"{f.stem}#{k}"
            meta = {"dataset": path.stem, "schema": "band-histogram", "source": str(f),
                    "width": str(w), "height": str(hgt), "bands": str(ch)}
            items.append(DatasetItem(item_id, band_histograms(ch, samples), meta))
    return Dataset(path.stem, tuple(items), "band-histogram")
