"""Report builders behind the CLI subcommands.

A report is an ordered list of ``(key, value)`` rows; ``value`` is a string
or a list of strings (one per output line).  Rendering is either aligned
plain text or tab-separated, always with exact integers.
"""

from __future__ import annotations

import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .coxring import GradingData, TorsionClassGroupError, grading_from_fan, lefschetz_codim_check
from .fan import (
    Fan,
    NotFanoError,
    anticanonical_degree,
    dual_variety,
    irrelevant_ideal,
    is_complete,
    is_fano,
    is_simplicial,
    is_smooth,
)
from .fanfile import FanFileError, parse_fan_file
from .hilbert import ci_dimension, quotient_dim_oracle
from .linalg import IntegerMatrix, integer_kernel
from .models import DEFAULT_SEED, BlowupModel, blowup_grading, cox3_spec, cox4_spec, z1_grading
from .monomial import minimal_primes, vanishing_codim

log = logging.getLogger(__name__)

__all__ = [
    "Report",
    "cmd_analyze",
    "cmd_dual",
    "cmd_scan",
    "cmd_blowup_model",
    "cmd_hilbert",
    "natural_key",
]


@dataclass
class Report:
    rows: list[tuple[str, object]] = field(default_factory=list)

    def add(self, key: str, value) -> None:
        self.rows.append((key, value))

    def get(self, key: str):
        for k, v in self.rows:
            if k == key:
                return v
        raise KeyError(key)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for k, v in other.rows:
            self.rows.append((prefix + k, v))

    def render(self, tsv: bool = False) -> str:
        out = []
        if tsv:
            for k, v in self.rows:
                for line in v if isinstance(v, list) else [v]:
                    out.append("%s\t%s" % (k, line))
        else:
            width = max((len(k) for k, _ in self.rows), default=0)
            for k, v in self.rows:
                lines = v if isinstance(v, list) else [v]
                if not lines:
                    lines = [""]
                out.append("%s  %s" % ((k + ":").ljust(width + 1), lines[0]))
                out.extend(" " * (width + 3) + line for line in lines[1:])
        return "\n".join(out) + ("\n" if out else "")


def _matrix_lines(m: IntegerMatrix) -> list[str]:
    if not m.rows:
        return ["(empty)"]
    width = max(len(str(x)) for r in m.rows for x in r)
    return [" ".join(str(x).rjust(width) for x in r) for r in m.rows]


def format_prime(prime, labels: Sequence[str]) -> str:
    return "(" + ",".join(labels[i] for i in sorted(prime)) + ")"


def _yesno(b: bool) -> str:
    return "yes" if b else "no"


def cmd_analyze(fan: Fan) -> Report:
    """Grading, irrelevant components, codimension check and flags of one fan."""
    rep = Report()
    labels = ["x%d" % (i + 1) for i in range(fan.num_rays)]
    rep.add("name", fan.name or "-")
    rep.add("dim", str(fan.dim))
    rep.add("rays", str(fan.num_rays))
    try:
        g = grading_from_fan(fan)
        rep.add("grading", _matrix_lines(g.hnf()))
    except TorsionClassGroupError as exc:
        rep.add("grading", "refused: torsion class group, Smith invariants %s" % " ".join(map(str, exc.invariants)))
    ideal = irrelevant_ideal(fan)
    primes = minimal_primes(ideal)
    rep.add("irrelevant components", [format_prime(p, labels) for p in primes])
    codim = vanishing_codim(ideal)
    rep.add("lefschetz codim", str(codim))
    rep.add("lefschetz check", "pass" if codim >= 3 else "fail")
    rep.add("smooth", _yesno(is_smooth(fan)))
    if is_simplicial(fan) and all(len(c) == fan.dim for c in fan.max_cones):
        rep.add("complete", _yesno(is_complete(fan)))
    else:
        rep.add("complete", "n/a (not pure simplicial)")
    fano = is_fano(fan)
    rep.add("fano", _yesno(fano))
    rep.add("anticanonical degree", str(anticanonical_degree(fan)) if fano else "n/a")
    rep.add("ray kernel (echelon)", _matrix_lines(integer_kernel(IntegerMatrix(fan.rays, fan.dim))))
    return rep


def cmd_dual(fan: Fan) -> Report:
    """Toric variety of the dual polytope and its irrelevant-ideal codimension."""
    if not is_fano(fan):
        raise NotFanoError("%s is not a Fano fan" % (fan.name or "input"))
    d = dual_variety(fan)
    codim = vanishing_codim(irrelevant_ideal(d))
    rep = Report()
    rep.add("name", fan.name or "-")
    rep.add("dual rays", str(d.num_rays))
    rep.add("dual maximal cones", str(len(d.max_cones)))
    rep.add("dual lefschetz codim", str(codim))
    rep.add("dual lefschetz check", "pass" if codim >= 3 else "fail")
    return rep


def natural_key(name: str):
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.split(r"(\d+)", name) if t]


def _scan_one(path: str):
    try:
        fan = parse_fan_file(path)
        return vanishing_codim(irrelevant_ideal(fan)), None
    except (FanFileError, ValueError, OSError) as exc:
        return None, str(exc)


@dataclass
class ScanResult:
    passing: list[str]
    codims: dict[str, int]
    failures: dict[str, str]

    def report(self) -> Report:
        rep = Report()
        rep.add("scanned", str(len(self.codims) + len(self.failures)))
        rep.add("failed", str(len(self.failures)))
        rep.add("codim >= 3", list(self.passing))
        return rep


def cmd_scan(directory, pattern: str = "*.fan", jobs: int = 1) -> ScanResult:
    """Fan files in ``directory`` whose irrelevant locus has codimension >= 3.

    Unreadable or invalid files are skipped and collected in ``failures``.
    Names come out in natural sort order regardless of listing order or
    worker count.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError("not a directory: %s" % directory)
    files = sorted((p for p in directory.glob(pattern) if p.is_file()), key=lambda p: natural_key(p.name))
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, [str(p) for p in files]))
    else:
        results = [_scan_one(str(p)) for p in files]
    codims, failures, passing = {}, {}, []
    for p, (codim, err) in zip(files, results):
        if err is not None:
            log.debug("skipping %s", err)
            failures[p.name] = err
            continue
        codims[p.name] = codim
        if codim >= 3:
            passing.append(p.name)
    return ScanResult(passing, codims, failures)


def _grading_report(g: GradingData, title: str) -> Report:
    rep = Report()
    rep.add(title + " generators", " ".join(g.labels))
    rep.add(title + " grading", _matrix_lines(g.degree_matrix))
    rep.add(title + " irrelevant components", [format_prime(p, g.labels) for p in g.primes()])
    codim, ok = lefschetz_codim_check(g)
    rep.add(title + " lefschetz codim", str(codim))
    rep.add(title + " lefschetz check", "pass" if ok else "fail")
    return rep


def cmd_blowup_model(n: int, d: int) -> Report:
    """Gradings and codimensions of Z = Bl_L P^n and of Z_1."""
    m = BlowupModel(n, d)
    rep = Report()
    rep.add("n", str(n))
    rep.add("d", str(d))
    rep.extend(_grading_report(blowup_grading(m), "Z"))
    rep.extend(_grading_report(z1_grading(m), "Z1"))
    rep.add("relation degree", "(%d,0)" % (d - 1))
    return rep


def hilbert_spec(model: str, n: int, d: int, seed: int = DEFAULT_SEED):
    if model == "cox3":
        if n != 3:
            raise ValueError("model cox3 is the n = 3 case; got n=%d" % n)
        return cox3_spec(d, seed=seed)
    if model == "cox4":
        return cox4_spec(BlowupModel(n, d), seed=seed)
    raise ValueError("unknown model %r (expected cox3 or cox4)" % model)


def cmd_hilbert(model: str, n: int, d: int, deg: Sequence[int], oracle: bool = False, seed: int = DEFAULT_SEED) -> Report:
    """Dimension of one graded piece of the Cox ring of X."""
    spec = hilbert_spec(model, n, d, seed)
    rep = Report()
    rep.add("model", model)
    rep.add("n", str(n))
    rep.add("d", str(d))
    rep.add("degree", "(%d,%d)" % tuple(deg))
    value = ci_dimension(spec, tuple(deg))
    rep.add("dimension", str(value))
    if oracle:
        rep.add("seed", str(seed))
        check = quotient_dim_oracle(spec, tuple(deg))
        rep.add("oracle", str(check))
        rep.add("agree", _yesno(check == value))
    return rep
