"""Growth-curve sweeps: weight sums of generated hypergraphs as CSV rows."""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .catalog import resolve_pattern
from .constructions import candidate_count, greedy_maximal, kr_construction, single_edge
from .hypergraph import Hypergraph
from .weights import WeightFunction, sqrt_threshold, weigh

GENERATORS = ("kr", "single", "greedy")

COLUMNS = (
    "n",
    "generator",
    "seed",
    "status",
    "hyperedges",
    "sum_size",
    "sum_size_sq",
    "sum_w",
    "sum_size_cube",
    "threshold",
    "below_w",
    "above_w",
    "n_sq",
    "ratio_size",
    "ratio_size_sq",
    "ratio_w",
    "predicted_sum_size",
)

_BOUND = re.compile(r"^\s*n\s*(?:/\s*(\d+))?\s*$")


def resolve_size_bound(spec: int | str, n: int) -> int:
    """An integer, ``"n"`` or ``"n/k"`` (floor division)."""
    if isinstance(spec, int):
        return spec
    if spec.strip().lstrip("-").isdigit():
        return int(spec)
    match = _BOUND.match(spec)
    if not match:
        raise ValueError(f"size bound {spec!r} must be an integer, 'n' or 'n/k'")
    return n // int(match.group(1)) if match.group(1) else n


@dataclass
class SweepConfig:
    generator: str
    n_values: list[int]
    pattern: str = "K_3"
    weight: str = "size"
    seeds: list[int] = field(default_factory=lambda: [0])
    r: int = 3
    s_min: int | str = 2
    s_max: int | str = "n"
    budget_factor: int = 10

    def __post_init__(self) -> None:
        if self.generator not in GENERATORS:
            raise ValueError(f"generator must be one of {GENERATORS}, got {self.generator!r}")
        if not self.n_values:
            raise ValueError("n sweep is empty")
        if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise ValueError("n sweep must be strictly increasing")
        if self.generator == "greedy" and not self.seeds:
            raise ValueError("greedy sweeps need at least one seed")
        WeightFunction.parse(self.weight)
        resolve_pattern(self.pattern)

    @classmethod
    def from_file(cls, path: str | Path) -> SweepConfig:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(**data)

    def to_json(self) -> dict:
        return asdict(self)

    def tasks(self) -> list[tuple[int, int | None]]:
        if self.generator == "greedy":
            return [(n, s) for n in self.n_values for s in self.seeds]
        return [(n, None) for n in self.n_values]


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _build(cfg: SweepConfig, n: int, seed: int | None) -> tuple[Hypergraph | None, str, str]:
    if cfg.generator == "kr":
        if n % cfg.r:
            return None, f"invalid:r={cfg.r} does not divide n", ""
        return kr_construction(n, cfg.r), "ok", str(n * n // cfg.r)
    if cfg.generator == "single":
        return single_edge(n), "ok", str(n)
    lo = resolve_size_bound(cfg.s_min, n)
    hi = resolve_size_bound(cfg.s_max, n)
    if not 2 <= lo <= hi <= n:
        return None, f"invalid:sizes [{lo},{hi}]", ""
    F = resolve_pattern(cfg.pattern)
    H = greedy_maximal(n, F, lo, hi, seed, cfg.budget_factor)
    exhaustive = candidate_count(n, lo, hi) <= cfg.budget_factor * n * n
    return H, "ok" if exhaustive else "ok:sampled", ""


def sweep_row(cfg: SweepConfig, n: int, seed: int | None) -> dict[str, str]:
    H, status, predicted = _build(cfg, n, seed)
    row = dict.fromkeys(COLUMNS, "")
    row.update(n=str(n), generator=cfg.generator, seed="" if seed is None else str(seed), status=status)
    row["predicted_sum_size"] = predicted
    if H is None:
        return row
    w = WeightFunction.parse(cfg.weight)
    rep = weigh(H, w, sqrt_threshold(n))
    n_sq = n * n
    sum_size = sum(H.sizes)
    sum_sq = sum(m * m for m in H.sizes)
    row.update(
        hyperedges=str(len(H)),
        sum_size=str(sum_size),
        sum_size_sq=str(sum_sq),
        sum_w=str(rep.total),
        sum_size_cube=str(sum(m**3 for m in H.sizes)),
        threshold=str(rep.threshold),
        below_w=str(rep.below_threshold),
        above_w=str(rep.above_threshold),
        n_sq=str(n_sq),
        ratio_size=_fmt(sum_size / n_sq),
        ratio_size_sq=_fmt(sum_sq / n_sq),
        ratio_w=_fmt(rep.total / n_sq),
    )
    return row


def _row_task(args):
    cfg, n, seed = args
    return sweep_row(cfg, n, seed)


def run_sweep(cfg: SweepConfig, threads: int = 1) -> list[dict[str, str]]:
    """Rows in configuration order, whatever order the workers finish in."""
    jobs = [(cfg, n, s) for n, s in cfg.tasks()]
    if threads <= 1:
        return [_row_task(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_row_task, jobs))


def rows_to_csv(rows: list[dict[str, str]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
