"""Parity-preserving isogenous families and coverage reports of their
j-invariants.

Odd mode walks the family (1 + i*(m/n)*y)/2 over odd m, n: every member stays
odd and every j lands strictly below 1728, approaching it from below as the
denominator bound grows but never attaining it (the point with j = 1728 is
even). Even mode walks both branches of the real locus and produces values on
both sides of 1728; complex mode draws random matrices from the odd group and
scatters j over the plane. Density itself is not verifiable in finite time:
the reports substantiate it through strict bounds and monotone refinement.

Sample evaluation is embarrassingly parallel and is chunked over a thread
pool sized by the CMPARITY_THREADS environment variable (default: all cores);
reports are sorted before emission, so output is identical regardless of
evaluation order.
"""

from __future__ import annotations

import csv
import enum
import hashlib
import io
import json
import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cmpoints import TauExact, parity_of_tau
from .enumeration import CMClassPoint
from .errors import BadBaseError, InternalCheckError
from .factorint import squarefree_decompose
from .isogenies import RatMatrix2, in_odd_group, moebius, odd_isogeny
from .modular import is_real_j, j_numeric
from .quadorders import Parity

THREADS_ENV_VAR = "CMPARITY_THREADS"
J_SPLIT = 1728.0
DEFAULT_RECT = (-2000.0, 2000.0, -2000.0, 2000.0)


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "")
    if raw.strip():
        n = int(raw)
        if n < 1:
            raise ValueError(f"{THREADS_ENV_VAR} must be a positive integer")
        return n
    return os.cpu_count() or 1


class Mode(enum.Enum):
    ODD_REAL = "odd"
    EVEN_REAL = "even"
    COMPLEX = "complex"


@dataclass(frozen=True)
class DensityConfig:
    mode: Mode
    base: TauExact
    denom_bound: int = 9
    bin_width: float = 100.0
    seed: int = 0
    draws: int = 0  # complex mode only
    rect: tuple[float, float, float, float] = DEFAULT_RECT

    def __post_init__(self):
        if self.denom_bound < 1:
            raise ValueError("denominator bound must be positive")
        if self.bin_width <= 0:
            raise ValueError("bin width must be positive")
        if self.draws < 0:
            raise ValueError("draw count must be nonnegative")


@dataclass(frozen=True)
class SamplePoint:
    label: str
    j: complex
    branch: str | None
    parity: Parity
    degree: int | None
    sort_key: tuple


@dataclass(frozen=True)
class CoverageReport:
    mode: Mode
    samples: list[SamplePoint]
    min_j: float | None
    max_j: float | None
    bins_hit: int
    all_below_1728: bool
    branch_counts: dict[str, int]
    denom_bound: int | None = None
    seed: int | None = None
    threads: int = 1
    bin_width: float | None = None


def _build_report(
    mode: Mode,
    samples: list[SamplePoint],
    bin_width: float,
    rect: tuple[float, float, float, float],
    two_dim: bool,
    denom_bound: int | None,
    seed: int | None,
    threads: int,
) -> CoverageReport:
    samples = sorted(samples, key=lambda s: (s.sort_key, s.label))
    res = [s.j.real for s in samples]
    bins = set()
    for s in samples:
        re, im = s.j.real, s.j.imag
        if two_dim:
            if rect[0] <= re <= rect[1] and rect[2] <= im <= rect[3]:
                bins.add((math.floor(re / bin_width), math.floor(im / bin_width)))
        elif math.isfinite(re):  # overflowed cusp values carry no bin
            bins.add(math.floor(re / bin_width))
    counts: dict[str, int] = {}
    for s in samples:
        if s.branch:
            counts[s.branch] = counts.get(s.branch, 0) + 1
    return CoverageReport(
        mode=mode,
        samples=samples,
        min_j=min(res) if res else None,
        max_j=max(res) if res else None,
        bins_hit=len(bins),
        all_below_1728=all(r < J_SPLIT for r in res),
        branch_counts=counts,
        denom_bound=denom_bound,
        seed=seed,
        threads=threads,
        bin_width=bin_width,
    )


def _map_chunked(fun, items: list, threads: int) -> list:
    if threads <= 1 or len(items) < 2 * threads:
        return [fun(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fun, items, chunksize=max(1, len(items) // (4 * threads))))


def _half_line_triple(square: Fraction) -> TauExact:
    """Exact triple of 1/2 + i*t with t**2 = square > 0."""
    p, q = square.numerator, square.denominator
    return TauExact(4 * q, -4 * q, q + 4 * p)


def _axis_triple(square: Fraction) -> TauExact:
    """Exact triple of i*t with t**2 = square > 0."""
    p, q = square.numerator, square.denominator
    return TauExact(q, 0, p)


def sample_odd(cfg: DensityConfig) -> CoverageReport:
    """j-values of the odd family (1 + i*(m/n)*y)/2, odd m, n <= bound with
    (m/n)*y > 1, from a base (1 + i*y)/2.

    Every member must be odd (checked per sample) and every j strictly below
    1728.
    """
    if cfg.mode is not Mode.ODD_REAL:
        raise ValueError("config mode is not odd")
    base = cfg.base
    if base.b != -base.a:
        raise BadBaseError("odd mode needs a base with real part 1/2 (b = -a)")
    if parity_of_tau(base) is not Parity.ODD:
        raise BadBaseError("odd mode needs an odd base point")
    if not is_real_j(base):
        raise BadBaseError("odd mode needs a base with real j")
    # y = sqrt(|disc|)/a, so y^2 = (4c - a)/a exactly
    y_sq = Fraction(4 * base.c - base.a, base.a)
    n_max = cfg.denom_bound
    pairs = [
        (m, n)
        for m in range(1, n_max + 1, 2)
        for n in range(1, n_max + 1, 2)
        if m * m * y_sq > n * n  # (m/n)*y > 1
    ]
    threads = thread_count()

    def evaluate(pair: tuple[int, int]) -> SamplePoint:
        m, n = pair
        t_sq = Fraction(m * m, 4 * n * n) * y_sq  # (Im tau)^2
        tau = _half_line_triple(t_sq)
        if parity_of_tau(tau) is not Parity.ODD:
            raise InternalCheckError(f"family member ({m},{n}) is not odd")
        # connecting matrix ((m, (n-m)/2), (0, n)); degree = det / gcd^2
        g = math.gcd(m, math.gcd((n - m) // 2, n))
        degree = m * n // (g * g)
        j = j_numeric(complex(tau))
        return SamplePoint(
            label=f"{m},{n}",
            j=j,
            branch="T2",
            parity=Parity.ODD,
            degree=degree,
            sort_key=(m, n),
        )

    samples = _map_chunked(evaluate, pairs, threads)
    report = _build_report(
        cfg.mode, samples, cfg.bin_width, cfg.rect, False, n_max, None, threads
    )
    if not report.all_below_1728:
        raise InternalCheckError("odd family produced a j at or above 1728")
    return report


def sample_even(cfg: DensityConfig) -> CoverageReport:
    """j-values of even families over the field of the base point.

    Axis family: i*(m/n)*sqrt(|d|) for all m, n <= bound with value >= 1.
    Line family: 1/2 + i*(m/n)*sqrt(|d|) with value > 1/2; m, n restricted to
    odd when d = 1 (mod 4), where even shifts would change parity.
    """
    if cfg.mode is not Mode.EVEN_REAL:
        raise ValueError("config mode is not even")
    base = cfg.base
    if parity_of_tau(base) is not Parity.EVEN:
        raise BadBaseError("even mode needs an even base point")
    _, d = squarefree_decompose(base.disc)
    abs_d = abs(d)
    n_max = cfg.denom_bound
    step = 2 if d % 4 == 1 else 1
    jobs: list[tuple[str, int, int]] = []
    for m in range(1, n_max + 1):
        for n in range(1, n_max + 1):
            if m * m * abs_d >= n * n:  # t >= 1; boundary included
                jobs.append(("T1", m, n))
    for m in range(1, n_max + 1, step):
        for n in range(1, n_max + 1, step):
            if 4 * m * m * abs_d > n * n:  # t > 1/2
                jobs.append(("T2", m, n))
    threads = thread_count()

    def evaluate(job: tuple[str, int, int]) -> SamplePoint:
        branch, m, n = job
        t_sq = Fraction(m * m * abs_d, n * n)
        tau = _axis_triple(t_sq) if branch == "T1" else _half_line_triple(t_sq)
        if parity_of_tau(tau) is not Parity.EVEN:
            raise InternalCheckError(f"family member {branch}({m},{n}) is not even")
        j = j_numeric(complex(tau))
        return SamplePoint(
            label=f"{branch}:{m},{n}",
            j=j,
            branch=branch,
            parity=Parity.EVEN,
            degree=None,
            sort_key=(branch, m, n),
        )

    samples = _map_chunked(evaluate, jobs, threads)
    return _build_report(
        cfg.mode, samples, cfg.bin_width, cfg.rect, False, n_max, None, threads
    )


def _draw_matrix(rng: random.Random, numerator_bound: int = 40, denom_bound: int = 15) -> RatMatrix2:
    while True:
        entries = [
            Fraction(
                rng.randint(-numerator_bound, numerator_bound),
                rng.randrange(1, denom_bound + 1, 2),
            )
            for _ in range(4)
        ]
        m = RatMatrix2(*entries)
        if in_odd_group(m):
            return m


def sample_complex(cfg: DensityConfig) -> CoverageReport:
    """j-values of seeded random odd-group images of the base point, with
    two-dimensional bin coverage over the configured rectangle.

    Parity transport is asserted on every draw.
    """
    if cfg.mode is not Mode.COMPLEX:
        raise ValueError("config mode is not complex")
    base = cfg.base
    base_parity = parity_of_tau(base)
    rng = random.Random(cfg.seed)
    matrices = [_draw_matrix(rng) for _ in range(cfg.draws)]
    threads = thread_count()

    def evaluate(item: tuple[int, RatMatrix2]) -> SamplePoint:
        idx, matrix = item
        moved = moebius(matrix, base)
        if parity_of_tau(moved) is not base_parity:
            raise InternalCheckError(f"parity transport violated by {matrix}")
        degree = odd_isogeny(matrix, base).degree
        j = j_numeric(complex(moved))
        digest = hashlib.md5(
            repr(tuple(str(e) for e in matrix.entries())).encode()
        ).hexdigest()[:12]
        return SamplePoint(
            label=digest,
            j=j,
            branch=None,
            parity=base_parity,
            degree=degree,
            sort_key=(idx,),
        )

    samples = _map_chunked(evaluate, list(enumerate(matrices)), threads)
    return _build_report(
        cfg.mode, samples, cfg.bin_width, cfg.rect, True, None, cfg.seed, threads
    )


def coverage_report_from_points(points: list[CMClassPoint]) -> CoverageReport:
    """Wrap an enumeration result so it can be emitted like any other report."""
    samples = [
        SamplePoint(
            label=f"beta={p.beta}",
            j=complex(p.j_estimate, 0.0),
            branch="T2",
            parity=Parity.ODD,
            degree=None,
            sort_key=(p.beta,),
        )
        for p in points
    ]
    return _build_report(
        Mode.ODD_REAL, samples, 100.0, DEFAULT_RECT, False, None, None, 1
    )


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _json_num(x: float | None):
    """12-significant-digit float for JSON; non-finite values become strings
    since strict JSON has no infinity token."""
    if x is None:
        return None
    if not math.isfinite(x):
        return _fmt(x)
    return float(_fmt(x))


def emit(report: CoverageReport, fmt: str = "csv") -> bytes:
    """Serialize a report deterministically; CSV rows carry label, j parts,
    branch, parity, and degree where applicable."""
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["label", "re_j", "im_j", "branch", "parity", "degree"])
        for s in report.samples:
            writer.writerow(
                [
                    s.label,
                    _fmt(s.j.real),
                    _fmt(s.j.imag),
                    s.branch or "",
                    s.parity.value,
                    "" if s.degree is None else s.degree,
                ]
            )
        return out.getvalue().encode()
    if fmt == "json":
        payload = {
            "mode": report.mode.value,
            "denom_bound": report.denom_bound,
            "seed": report.seed,
            "threads": report.threads,
            "bin_width": report.bin_width,
            "sample_count": len(report.samples),
            "min_j": _json_num(report.min_j),
            "max_j": _json_num(report.max_j),
            "bins_hit": report.bins_hit,
            "all_below_1728": report.all_below_1728,
            "branch_counts": dict(sorted(report.branch_counts.items())),
            "samples": [
                {
                    "label": s.label,
                    "re_j": _json_num(s.j.real),
                    "im_j": _json_num(s.j.imag),
                    "branch": s.branch,
                    "parity": s.parity.value,
                    "degree": s.degree,
                }
                for s in report.samples
            ],
        }
        return (json.dumps(payload, indent=2, allow_nan=False) + "\n").encode()
    raise ValueError(f"unknown emit format: {fmt!r}")
