"""Acceptance criteria 1-9. Each test carries a ``criterion`` marker; the
terminal summary prints one PASS/FAIL line per criterion."""
import time

import pytest

from skewschur.bench import format_table, run_bench
from skewschur.expansion import SSYT
from skewschur.garnir import GarnirData, garnir_action, iterative_straighten
from skewschur.rearrange import evaluation_vector, rearrangement_coefficient
from skewschur.shapes import Filling, SkewShape, context_of
from skewschur.straighten import convert, straighten_noniterative
from skewschur.verify import (
    engines_suite,
    equivalence_suite,
    garnir_identity_suite,
    gram_suite,
    leading_monomial_suite,
)

SWEEP = dict(size_bound=5, m=3, samples=1000, sample_size=6, sample_m=4, seed=2024)


@pytest.mark.criterion(1, "worked example: R-vector, D-expansion and SSYT expansion")
def test_worked_example(record_property):
    start = time.perf_counter()
    shape = SkewShape((3, 2), (1,))
    f = Filling.from_rows(shape, [[2, 1], [3, 1]])
    assert f.content == (2, 1, 1)
    ctx = context_of(f)
    assert [t.rows for t in ctx] == [((1, 3), (1, 2)), ((1, 2), (1, 3)), ((1, 1), (2, 3))]
    assert evaluation_vector(f, ctx) == [0, 1, -1]
    d = straighten_noniterative(f)
    assert d.coeffs == {1: 1, 2: -1}
    assert convert(d, SSYT).vector() == [-1, 1, -1]
    assert iterative_straighten(f).vector() == [-1, 1, -1]
    elapsed = time.perf_counter() - start
    record_property("note", f"{elapsed * 1000:.1f} ms")
    assert elapsed < 1.0


@pytest.mark.criterion(2, "rearrangement example: R(F,S) = -1 and R(S,F) = 0")
def test_rearrangement_example():
    shape = SkewShape((3, 2, 1), (1, 1))
    f = Filling.from_rows(shape, [[2, 1], [3], [1]])
    s = Filling.from_rows(shape, [[1, 3], [2], [1]])
    for engine in ("backtrack", "polynomial"):
        assert rearrangement_coefficient(f, s, engine) == -1
        assert rearrangement_coefficient(s, f, engine) == 0


@pytest.mark.criterion(3, "Garnir action example: pi = 213")
def test_garnir_action_example():
    f = Filling.from_rows(SkewShape((3, 2), (1,)), [[2, 1], [3, 1]])
    moved = garnir_action(f, GarnirData(1, 2, 1, 2), (2, 1, 3))
    assert moved.rows == ((3, 1), (2, 1))


@pytest.mark.criterion(4, "equivalence sweep: non-iterative vs iterative straightening")
def test_equivalence_sweep(record_property):
    start = time.perf_counter()
    report = equivalence_suite(**SWEEP)
    elapsed = time.perf_counter() - start
    record_property("note", f"{report.checked} fillings, {len(report.failures)} mismatches, {elapsed:.1f} s")
    assert report.checked == 23682 + 1000
    assert report.ok, report.failures[:5]
    assert elapsed < 600


@pytest.mark.criterion(5, "orthonormality sweep: Gram matrix = I and Gram-Schmidt reproduces D")
def test_gram_sweep(record_property):
    report = gram_suite(size_bound=5, m=3)
    record_property("note", f"{report.checked} contexts, {len(report.failures)} failures")
    assert report.checked > 0
    assert report.ok, report.failures[:5]


@pytest.mark.criterion(6, "determinantal identity sweep: 200 random admissible instances")
def test_garnir_identity_sweep(record_property):
    report = garnir_identity_suite(count=200, size_bound=7, seed=2024)
    nontrivial = sum(1 for x in report.instances if not x["trivial"])
    record_property("note", f"{report.checked} instances, {nontrivial} with D_F != 0, {len(report.failures)} failures")
    assert report.checked == 200
    assert report.ok, report.failures[:5]


@pytest.mark.criterion(7, "leading monomials and order compatibility")
def test_leading_monomial_sweep(record_property):
    report = leading_monomial_suite(size_bound=5)
    record_property("note", f"{report.checked} checks, {len(report.failures)} failures")
    assert report.ok, report.failures[:5]


@pytest.mark.criterion(8, "engine agreement on the criterion 4 instance set")
def test_engine_agreement(record_property):
    report = engines_suite(**SWEEP)
    record_property("note", f"{report.checked} fillings, {len(report.failures)} mismatches")
    assert report.checked == 23682 + 1000
    assert report.ok, report.failures[:5]


@pytest.mark.criterion(9, "benchmark table (timings informative)")
def test_benchmark(record_property):
    result = run_bench("two-row", repetitions=5, samples=3, seed=0)
    table = format_table(result).splitlines()
    assert len(table) == 2 + len(result["rows"])
    widths = {len(line) for line in table}
    assert len(widths) == 1
    assert all(r["noniterative_rewrites"] == 0 for r in result["rows"])
    assert all(r["noniterative_median_s"] >= 0 and r["iterative_median_s"] >= 0 for r in result["rows"])
    peaks: dict[str, int] = {}
    for r in result["rows"]:
        peaks[r["shape"]] = max(peaks.get(r["shape"], 0), r["iterative_peak_terms"])
    record_property("note", "max iterative peak terms by shape: " + ", ".join(f"{s} {p}" for s, p in peaks.items()))
