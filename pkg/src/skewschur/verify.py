"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`Report` listing every checked instance. Random
suites draw from :class:`random.Random` (Mersenne Twister) seeded explicitly,
so a (suite, parameters, seed) triple always checks the same instances.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .determinantal import d_poly, garnir_signed_sum, tableau_monomial
from .garnir import admissible_data, iterative_straighten
from .jsonio import SCHEMA_VERSION, tableau_to_json
from .polyring import compare_monomials
from .rearrange import evaluation_vector
from .shapes import (
    Filling,
    SkewShape,
    compare_reading_order,
    context_of,
    enumerate_ssyt,
    iter_contents,
    iter_fillings,
    iter_skew_shapes,
)
from .straighten import build_dbasis, convert, gram_matrix, is_identity, straighten_noniterative, verify_gram_schmidt

SUITES = ("garnir-identity", "gram", "equivalence", "leading-monomial", "engines")


@dataclass
class Report:
    suite: str
    params: dict
    instances: list[dict] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return len(self.instances)

    @property
    def failures(self) -> list[dict]:
        return [x for x in self.instances if not x["ok"]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, ok: bool, **fields) -> None:
        self.instances.append({**fields, "ok": bool(ok)})

    def to_json(self) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "failed": len(self.failures),
            "ok": self.ok,
            "instances": self.instances,
        }


def _filling_fields(f: Filling) -> dict:
    return {"shape": str(f.shape), "rows": tableau_to_json(f)}


def shapes_up_to(size_bound: int) -> Iterator[SkewShape]:
    for n in range(1, size_bound + 1):
        yield from iter_skew_shapes(n)


def exhaustive_fillings(size_bound: int, m: int) -> Iterator[Filling]:
    """Every filling with letters in ``1..m`` of every shape with at most ``size_bound`` cells."""
    for shape in shapes_up_to(size_bound):
        yield from iter_fillings(shape, m)


def random_fillings(rng: random.Random, size: int, m: int, count: int) -> Iterator[Filling]:
    shapes = list(iter_skew_shapes(size))
    for _ in range(count):
        shape = rng.choice(shapes)
        yield Filling(shape, tuple(rng.randint(1, m) for _ in range(shape.size)), m)


def equivalence_instances(size_bound: int, m: int, samples: int = 0, sample_size: int = 0,
                          sample_m: int = 0, seed: int = 0) -> Iterator[Filling]:
    yield from exhaustive_fillings(size_bound, m)
    if samples:
        yield from random_fillings(random.Random(seed), sample_size, sample_m, samples)


def equivalence_suite(size_bound: int = 5, m: int = 3, samples: int = 0, sample_size: int = 6,
                      sample_m: int = 4, seed: int = 0) -> Report:
    """The closed-form D-expansion, converted to SSYT coordinates, equals iterative straightening."""
    params = dict(size_bound=size_bound, m=m, samples=samples, sample_size=sample_size, sample_m=sample_m, seed=seed)
    report = Report("equivalence", params)
    for f in equivalence_instances(size_bound, m, samples, sample_size, sample_m, seed):
        got = convert(straighten_noniterative(f), "ssyt").vector()
        want = iterative_straighten(f).vector()
        report.add(got == want, **_filling_fields(f), ssyt=got, **({} if got == want else {"expected": want}))
    return report


def engines_suite(size_bound: int = 5, m: int = 3, samples: int = 0, sample_size: int = 6,
                  sample_m: int = 4, seed: int = 0) -> Report:
    """Backtracking and polynomial-coefficient rearrangement coefficients agree."""
    params = dict(size_bound=size_bound, m=m, samples=samples, sample_size=sample_size, sample_m=sample_m, seed=seed)
    report = Report("engines", params)
    for f in equivalence_instances(size_bound, m, samples, sample_size, sample_m, seed):
        ctx = context_of(f)
        a = evaluation_vector(f, ctx, "backtrack")
        b = evaluation_vector(f, ctx, "polynomial")
        report.add(a == b, **_filling_fields(f), backtrack=a, **({} if a == b else {"polynomial": b}))
    return report


def gram_suite(size_bound: int = 5, m: int = 3) -> Report:
    """The D-basis of every context is orthonormal and equals Gram-Schmidt of the SSYT basis."""
    report = Report("gram", dict(size_bound=size_bound, m=m))
    for shape in shapes_up_to(size_bound):
        for z in iter_contents(shape.size, m):
            ctx = enumerate_ssyt(shape, z)
            if not len(ctx):
                continue
            db = build_dbasis(ctx)
            identity = is_identity(gram_matrix(db))
            gs = verify_gram_schmidt(db)
            tri = db.is_unitriangular() and db.inverse_transition == db.rcoeff
            report.add(identity and gs and tri, shape=str(shape), content=list(z), n=len(ctx),
                       gram_identity=identity, gram_schmidt=gs, unitriangular=tri)
    return report


def _admissible_pool(size_bound: int) -> list[tuple[SkewShape, list]]:
    pool = []
    for shape in shapes_up_to(size_bound):
        data = admissible_data(shape)
        if data:
            pool.append((shape, data))
    return pool


def garnir_identity_suite(count: int = 200, size_bound: int = 7, seed: int = 0, m: int | None = None) -> Report:
    """For random fillings and admissible Garnir data the signed shuffle sum of ``D_F`` vanishes.

    Letters are drawn from ``1..m``, defaulting to the number of cells so that
    most draws have distinct column entries and nonzero polynomials.
    """
    report = Report("garnir-identity", dict(count=count, size_bound=size_bound, seed=seed, m=m))
    rng = random.Random(seed)
    pool = _admissible_pool(size_bound)
    by_size: dict[int, list] = {}
    for shape, data in pool:
        by_size.setdefault(shape.size, []).append((shape, data))
    sizes = sorted(by_size)
    for _ in range(count):
        shape, data = rng.choice(by_size[rng.choice(sizes)])
        g = rng.choice(data)
        letters = m or shape.size
        f = Filling(shape, tuple(rng.randint(1, letters) for _ in range(shape.size)), letters)
        total = garnir_signed_sum(f, g)
        report.add(total.is_zero(), **_filling_fields(f), garnir=[g.c1, g.c2, g.a, g.b],
                   nonzero_terms=len(total), trivial=d_poly(f).is_zero())
    return report


def leading_monomial_suite(size_bound: int = 5, m: int | None = None) -> Report:
    """``LM(D_T) = M_T`` with coefficient 1, and reading order reverses the leading monomials.

    ``m`` defaults to the shape's size per shape, which realises every relative
    order of entries an SSYT of that shape can have.
    """
    report = Report("leading-monomial", dict(size_bound=size_bound, m=m))
    for shape in shapes_up_to(size_bound):
        letters = m or shape.size
        tabs = [t for z in iter_contents(shape.size, letters) for t in enumerate_ssyt(shape, z)]
        lms = {}
        for t in tabs:
            lm, c = d_poly(t).leading_term()
            lms[t.values] = lm
            report.add(lm == tableau_monomial(t) and c == 1, kind="leading", **_filling_fields(t), coeff=c)
        tabs.sort(key=lambda t: t.values)
        for lo, hi in zip(tabs, tabs[1:]):
            ok = compare_reading_order(lo, hi) < 0 and compare_monomials(lms[lo.values], lms[hi.values]) > 0
            report.add(ok, kind="order", shape=str(shape), lower=tableau_to_json(lo), higher=tableau_to_json(hi))
    return report


SUITE_RUNNERS: dict[str, Callable[..., Report]] = {
    "garnir-identity": garnir_identity_suite,
    "gram": gram_suite,
    "equivalence": equivalence_suite,
    "leading-monomial": leading_monomial_suite,
    "engines": engines_suite,
}
