import random

import pytest

from skewschur.bench import FAMILIES, format_table, random_permutation_filling, run_bench
from skewschur.verify import SUITE_RUNNERS, SUITES, Report, equivalence_instances, random_fillings


def test_report_bookkeeping():
    r = Report("x", {})
    r.add(True, a=1)
    r.add(0, a=2)
    assert r.checked == 2 and not r.ok
    assert r.failures == [{"a": 2, "ok": False}]
    assert r.to_json()["failed"] == 1


def test_registry_is_complete():
    assert set(SUITES) == set(SUITE_RUNNERS)


def test_seeded_streams_are_reproducible():
    a = list(random_fillings(random.Random(5), 6, 4, 30))
    b = list(random_fillings(random.Random(5), 6, 4, 30))
    c = list(random_fillings(random.Random(6), 6, 4, 30))
    assert a == b and a != c
    assert all(f.shape.size == 6 and f.m == 4 for f in a)


def test_instance_set_is_exhaustive_then_random():
    fs = list(equivalence_instances(2, 2, samples=3, sample_size=3, sample_m=2, seed=1))
    # sizes 1 and 2 with letters 1..2: 1 shape * 2 + 3 shapes * 4
    assert len(fs) == 14 + 3
    assert len(set(fs[:14])) == 14


def test_permutation_filling_uses_distinct_letters():
    rng = random.Random(0)
    for shape in FAMILIES["ribbon"]:
        f = random_permutation_filling(rng, shape)
        assert sorted(f.values) == list(range(1, shape.size + 1))


def test_bench_is_well_formed():
    result = run_bench("tiny", repetitions=5, samples=2, seed=3)
    assert len(result["rows"]) == 2 * len(FAMILIES["tiny"])
    lines = format_table(result).splitlines()
    assert len(lines) == 2 + len(result["rows"])
    assert len({len(line) for line in lines}) == 1
    again = run_bench("tiny", repetitions=5, samples=2, seed=3)
    strip = lambda res: [{k: v for k, v in r.items() if not k.endswith("_s")} for r in res["rows"]]
    assert strip(result) == strip(again)


@pytest.mark.parametrize("kwargs", [{"family": "nope"}, {"repetitions": 4}])
def test_bench_rejects_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        run_bench(**kwargs)
