"""Plain-text fan files.

::

    # comment lines start with '#'
    dim 2
    rays 3
    1 0
    0 1
    -1 -1
    cones 3
    1 2
    2 3
    1 3

Cone lines list 1-based ray indices.
"""

from __future__ import annotations

from pathlib import Path

from .fan import Fan, validate_fan

__all__ = ["FanFileError", "parse_fan_text", "parse_fan_file", "format_fan", "write_fan_file"]


class FanFileError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, path=None):
        self.lineno = lineno
        self.path = path
        where = ""
        if path is not None:
            where = str(path)
        if lineno is not None:
            where = "%s:%d" % (where, lineno) if where else "line %d" % lineno
        super().__init__("%s: %s" % (where, message) if where else message)


def _header(lines, pos, keyword, path):
    if pos >= len(lines):
        raise FanFileError("expected '%s <count>', got end of file" % keyword, None, path)
    lineno, text = lines[pos]
    parts = text.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise FanFileError("expected '%s <count>'" % keyword, lineno, path)
    try:
        value = int(parts[1])
    except ValueError:
        raise FanFileError("bad count %r" % parts[1], lineno, path) from None
    if value < 0:
        raise FanFileError("negative count", lineno, path)
    return value


def _ints(lineno, text, path):
    try:
        return [int(x) for x in text.split()]
    except ValueError:
        raise FanFileError("expected integers", lineno, path) from None


def parse_fan_text(text: str, name: str = "", path=None, validate: bool = True) -> Fan:
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.lstrip().startswith("#")
    ]
    pos = 0
    dim = _header(lines, pos, "dim", path)
    pos += 1
    nrays = _header(lines, pos, "rays", path)
    pos += 1
    rays = []
    for _ in range(nrays):
        if pos >= len(lines):
            raise FanFileError("expected %d rays, file ended" % nrays, None, path)
        lineno, t = lines[pos]
        v = _ints(lineno, t, path)
        if len(v) != dim:
            raise FanFileError("ray has %d coordinates, expected %d" % (len(v), dim), lineno, path)
        rays.append(v)
        pos += 1
    ncones = _header(lines, pos, "cones", path)
    pos += 1
    cones = []
    for _ in range(ncones):
        if pos >= len(lines):
            raise FanFileError("expected %d cones, file ended" % ncones, None, path)
        lineno, t = lines[pos]
        idx = _ints(lineno, t, path)
        if any(i < 1 or i > nrays for i in idx):
            raise FanFileError("ray index out of range 1..%d" % nrays, lineno, path)
        cones.append([i - 1 for i in idx])
        pos += 1
    if pos != len(lines):
        raise FanFileError("unexpected trailing content", lines[pos][0], path)
    fan = Fan(dim, rays, cones, name=name)
    if validate:
        check = validate_fan(fan)
        if not check:
            raise FanFileError("; ".join(check.violations), None, path)
    return fan


def parse_fan_file(path, validate: bool = True) -> Fan:
    path = Path(path)
    return parse_fan_text(path.read_text(), name=path.stem, path=path, validate=validate)


def format_fan(fan: Fan) -> str:
    out = []
    if fan.name:
        out.append("# %s" % fan.name)
    out.append("dim %d" % fan.dim)
    out.append("rays %d" % fan.num_rays)
    out.extend(" ".join(str(x) for x in r) for r in fan.rays)
    out.append("cones %d" % len(fan.max_cones))
    out.extend(" ".join(str(i + 1) for i in sorted(c)) for c in fan.max_cones)
    return "\n".join(out) + "\n"


def write_fan_file(fan: Fan, path) -> None:
    Path(path).write_text(format_fan(fan))
