"""Acceptance criteria 1-13, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed even
when output capture is on.
"""

import json
import time
from functools import lru_cache
from pathlib import Path

import pytest

from chimneys.chimney import Chimney
from chimneys.cli import run_cli
from chimneys.counting import ONE, QPolynomial, count_iwahori
from chimneys.jsonio import shadow_from_json
from chimneys.render import render_svg
from chimneys.roots import Hyperplane
from chimneys.scenes import alcove_scene, vertex_scene
from chimneys.shadow import shadow, shadow_oracle, vertex_shadow
from chimneys.sweeps import SweepConfig, all_subsets, recursion_vs_oracle, sum_rule
from chimneys.weyl import weyl_group

A2, C2, G2 = weyl_group("A2"), weyl_group("C2"), weyl_group("G2")
GOLDEN = Path(__file__).parent / "golden"
SWEEP = SweepConfig(max_x_len=6, max_y_len=3, faces="both")
C2_LAMBDA = (4, 3)
# A2 positive roots: alpha, beta, alpha + beta
ALPHA, BETA, ALPHA_BETA = 0, 1, 2


def report(capsys, number, ok, detail, seconds):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {detail} ({seconds:.2f} s)"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@lru_cache(maxsize=None)
def oracle_sweep(name):
    return recursion_vs_oracle(weyl_group(name), SWEEP)


def test_criterion_01_a2_vertex_shadow(capsys):
    with Timer() as t:
        code = run_cli(["shadow", "--type", "A2", "--J", "1", "--lambda", "2,2"])
        out = capsys.readouterr().out
        got = shadow_from_json(A2, json.loads(out)).points()
    expected = A2.polytope_points((2, 2)) - {(1, 2), (-1, -2)}
    ok = code == 0 and got == expected and t.seconds < 1.0
    report(capsys, 1, ok, f"A2 J={{1}} shadow of 2a+2b = polytope minus +-(a+2b), {len(got)} vertices", t.seconds)


def test_criterion_02_multiplicities(capsys):
    with Timer() as t:
        res = vertex_shadow(A2, (2, 2), Chimney.make(A2, {1}), oracle=True)
    mult = {s.rep.translation: m for s, m in res.multiplicities.items()}
    doubles = {p for p, m in mult.items() if m == 2}
    ok = doubles == {(0, 0), (0, 1)} and all(m in (1, 2) for m in mult.values())
    report(capsys, 2, ok, f"multiplicity 2 exactly at {sorted(doubles)}, 1 elsewhere", t.seconds)


def test_criterion_03_recursion_trace(capsys):
    S = A2.spherical
    c = Chimney.make(A2, {1})
    x = A2.x_lambda((2, 2))
    with Timer() as t:
        trace = []
        shadow(A2, x, S, S, c, trace=trace)
        oracle_points = shadow_oracle(A2, x, S, S, c).points()
    heads = [step.hyperplane for step in trace[:3]]
    added = [{e.rep.translation for e in step.added} for step in trace[:3]]
    third = added[2] - {(2, 1), (0, 1)} if len(added) == 3 else set()
    ok = (
        heads == [Hyperplane(BETA, 0), Hyperplane(ALPHA_BETA, 0), Hyperplane(BETA, -1)]
        and added[0] == added[1] == set()
        and len(added[2]) == 3
        and {(2, 1), (0, 1)} <= added[2]
        and len(third) == 1
        and third <= {(-2, -1), (-2, 1)}
        and third <= oracle_points
    )
    report(capsys, 3, ok, f"H_b,0 and H_a+b,0 add nothing; H_b,-1 adds {sorted(added[2])}, third vertex {sorted(third)}", t.seconds)


def test_criterion_04_c2_short_root_chimney(capsys):
    with Timer() as t:
        got = vertex_shadow(C2, C2_LAMBDA, Chimney.make(C2, {1})).points()
    expected = C2.polytope_points(C2_LAMBDA) - {(k, k) for k in (1, -1, 3, -3)}
    report(capsys, 4, got == expected, f"C2 short-root chimney, {len(got)} vertices, missing k(a+b) for k=+-1,+-3", t.seconds)


def test_criterion_05_c2_long_root_chimney(capsys):
    with Timer() as t:
        got = vertex_shadow(C2, C2_LAMBDA, Chimney.make(C2, {2})).points()
    expected = C2.polytope_points(C2_LAMBDA) - {(4, 2), (-4, -2)}
    report(capsys, 5, got == expected, f"C2 long-root chimney, {len(got)} vertices, missing +-(4a+2b)", t.seconds)


def test_criterion_06_c2_shifted_chimney(capsys):
    # <alpha, nu> is even for every coroot lattice point nu in C2, so no
    # translation shifts the strip by one; y = s_{alpha,1} does.
    y = C2.reflection(Hyperplane(0, 1))
    c = Chimney.make(C2, {1}, y)
    with Timer() as t:
        got = vertex_shadow(C2, C2_LAMBDA, c).points()
    expected = C2.polytope_points(C2_LAMBDA)
    report(capsys, 6, got == expected, f"C2 chimney in 1 <= <a,.> <= 2 (y = s_a,1), full polytope of {len(expected)} points", t.seconds)


def test_criterion_07_empty_j_convexity(capsys):
    cases = [(A2, (1, 1)), (A2, (2, 2)), (C2, C2_LAMBDA)]
    with Timer() as t:
        ok = all(vertex_shadow(W, lam, Chimney.make(W, ())).points() == W.polytope_points(lam) for W, lam in cases)
    report(capsys, 7, ok, "J empty: shadow = polytope points for A2 a+b, 2a+2b and C2 4a+3b", t.seconds)


def test_criterion_08_sum_rule(capsys):
    with Timer() as t:
        reports = [sum_rule(W, SWEEP) for W in (A2, C2)]
    ok = all(r.ok for r in reports) and t.seconds < 30
    detail = "; ".join(f"{r.name} {r.cases} cases {len(r.failures)} failures" for r in reports)
    report(capsys, 8, ok, detail, t.seconds)


def test_criterion_09_oracle_equivalence(capsys):
    with Timer() as t:
        reports = [oracle_sweep(name)[0] for name in ("A2", "C2")]
    ok = all(r.ok for r in reports)
    detail = "; ".join(f"{r.name}: {r.cases} cases {len(r.failures)} failures" for r in reports)
    report(capsys, 9, ok, detail, t.seconds)


def test_criterion_10_nonemptiness(capsys):
    with Timer() as t:
        reports = [oracle_sweep(name)[1] for name in ("A2", "C2")]
    ok = all(r.ok for r in reports)
    detail = "; ".join(f"{r.name}: {r.cases} cases {len(r.failures)} failures" for r in reports)
    report(capsys, 10, ok, detail + "; sweep shared with criterion 9", t.seconds)


def test_criterion_11_length_one_counts(capsys):
    s1 = A2.from_word([1])
    with Timer() as t:
        got = (
            count_iwahori(A2, s1, s1, Chimney.make(A2, ())),
            count_iwahori(A2, s1, A2.identity, Chimney.make(A2, ())),
            count_iwahori(A2, s1, s1, Chimney.make(A2, {1})),
        )
    expected = (ONE, QPolynomial((-1, 1)), QPolynomial((0, 1)))
    report(capsys, 11, got == expected, "counts " + ", ".join(str(p) for p in got), t.seconds)


def test_criterion_12_braid_invariance(capsys):
    cases = failures = 0
    with Timer() as t:
        for W in (A2, C2, G2):
            chims = [Chimney(J, y) for J in all_subsets(2) for y in W.elements_up_to_length(2)]
            for x in W.elements_up_to_length(6):
                words = W.reduced_words(x)
                if len(words) < 2:
                    continue
                for c in chims:
                    cases += 1
                    shadows = {shadow_oracle(W, x, target=c, word=w).simplices for w in words}
                    failures += len(shadows) != 1
    ok = cases > 0 and failures == 0
    report(capsys, 12, ok, f"A2, C2, G2: {cases} (x, chimney) pairs with several reduced words, {failures} failures", t.seconds)


def test_criterion_13_rendering_determinism(capsys):
    with Timer() as t:
        results = []
        for build, name in ((vertex_scene, "vertex_shadow_A2.svg"), (alcove_scene, "alcove_shadow_A2.svg")):
            a, b = render_svg(build()), render_svg(build())
            results.append(a == b == (GOLDEN / name).read_text(encoding="utf-8"))
    report(capsys, 13, all(results), "two renders byte-identical and equal to both golden files", t.seconds)
