"""Timing comparison of non-iterative and iterative straightening.

Both methods run on the same seeded random fillings. Besides wall time the
table records how many Garnir rewrites the iterative method performs and the
peak number of pending terms it holds; the non-iterative method performs no
rewrites by construction. Timings are informative only.
"""
from __future__ import annotations

import random
import statistics
import time

from .garnir import iterative_straighten_stats
from .jsonio import SCHEMA_VERSION
from .shapes import Filling, SkewShape, context_of
from .straighten import straighten_noniterative

FAMILIES: dict[str, list[SkewShape]] = {
    "two-row": [SkewShape((k, k)) for k in range(2, 7)],
    "rectangle": [SkewShape((k,) * 3) for k in range(1, 4)],
    "ribbon": [
        SkewShape(tuple(range(k, 0, -1)), tuple(range(k - 2, 0, -1))) for k in range(2, 6)
    ],
    "tiny": [SkewShape((2, 1)), SkewShape((2, 2), (1,))],
}


def random_permutation_filling(rng: random.Random, shape: SkewShape) -> Filling:
    """A uniformly random arrangement of the distinct letters ``1..n``."""
    n = shape.size
    return Filling(shape, tuple(rng.sample(range(1, n + 1), n)), n)


def _median_time(fn, repetitions: int) -> float:
    times = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def run_bench(family: str = "two-row", repetitions: int = 5, samples: int = 3, seed: int = 0) -> dict:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if repetitions < 5:
        raise ValueError("medians need at least 5 repetitions")
    rng = random.Random(seed)
    rows = []
    for shape in FAMILIES[family]:
        for k in range(samples):
            f = random_permutation_filling(rng, shape)
            ctx = context_of(f)
            expansion, stats = iterative_straighten_stats(f)
            t_non = _median_time(lambda: straighten_noniterative(f), repetitions)
            t_it = _median_time(lambda: iterative_straighten_stats(f), repetitions)
            rows.append(
                {
                    "shape": str(shape),
                    "sample": k + 1,
                    "rows": [list(r) for r in f.rows],
                    "context_size": len(ctx),
                    "support": len(expansion),
                    "noniterative_rewrites": 0,
                    "iterative_steps": stats.steps,
                    "iterative_generated": stats.generated,
                    "iterative_peak_terms": stats.peak_terms,
                    "noniterative_median_s": t_non,
                    "iterative_median_s": t_it,
                }
            )
    return {
        "schemaVersion": SCHEMA_VERSION,
        "family": family,
        "repetitions": repetitions,
        "samples": samples,
        "seed": seed,
        "rows": rows,
    }


_COLUMNS = (
    ("shape", "shape", "{}"),
    ("#", "sample", "{}"),
    ("|SSYT|", "context_size", "{}"),
    ("support", "support", "{}"),
    ("rewrites(non)", "noniterative_rewrites", "{}"),
    ("steps(it)", "iterative_steps", "{}"),
    ("peak(it)", "iterative_peak_terms", "{}"),
    ("t_non[ms]", "noniterative_median_s", "{:.3f}"),
    ("t_it[ms]", "iterative_median_s", "{:.3f}"),
)


def format_table(result: dict) -> str:
    cells = []
    for row in result["rows"]:
        line = []
        for _, key, fmt in _COLUMNS:
            v = row[key] * 1000 if key.endswith("_s") else row[key]
            line.append(fmt.format(v))
        cells.append(line)
    headers = [h for h, _, _ in _COLUMNS]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h) for i, h in enumerate(headers)]
    fmt_line = lambda xs: "  ".join(x.rjust(w) for x, w in zip(xs, widths))
    out = [fmt_line(headers), fmt_line(["-" * w for w in widths])]
    out.extend(fmt_line(c) for c in cells)
    return "\n".join(out) + "\n"
