"""Acceptance suite: every criterion at exact-integer tolerance.

Each criterion is a plain function returning ``(ok, detail)``; the pytest
wrappers record one PASS/FAIL line per criterion (shown in the terminal
summary), and ``python tests/test_acceptance.py`` prints the same lines.
"""

from __future__ import annotations

import random
import time

from cliquewise.canon import canonical_form
from cliquewise.enumerate import enumerate_graphs
from cliquewise.formulas import (
    binom,
    colex_decompose,
    lemma_convexity,
    lemma_team_identity,
    luo_bound,
    majorizes,
    max_kt_vertex,
    split_sequence,
)
from cliquewise.graph6 import decode, encode
from cliquewise.verify import classical_check, colex_check, verify_suite
from oracles import labeled_class_count, random_graph, relabel_random

try:
    from conftest import CRITERION_LINES
except ImportError:  # run as a script
    CRITERION_LINES = []

VERTEX_KS = range(4, 8)
VERTEX_SIZES = range(1, 9)
EDGE_KS = (4, 5)
EDGE_TS = (3, 4)
EDGE_SIZES = range(0, 12)


def _record(name: str, ok: bool, detail: str, seconds: float) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail} ({seconds:.1f}s)"
    CRITERION_LINES.append(line)
    print(line)


def _timed(name, fn):
    start = time.perf_counter()
    ok, detail = fn()
    _record(name, ok, detail, time.perf_counter() - start)
    return ok, detail


def _suite(variant, ks, ts, sizes, need_no_flags=False):
    reports, summary = verify_suite(variant, ks, ts, sizes)
    bad = [r for r in reports if not r.match]
    ok = not bad and (not need_no_flags or summary["flags"] == 0)
    detail = " ".join(f"{k}={v}" for k, v in summary.items())
    if bad:
        detail += " first-mismatch=" + repr(bad[0].query)
    return ok, detail


def criterion_1():
    return _suite("vertex-path", VERTEX_KS, range(3, 7), VERTEX_SIZES)


def criterion_2():
    return _suite("vertex-cycle", VERTEX_KS, range(3, 7), VERTEX_SIZES, need_no_flags=True)


def criterion_3():
    return _suite("edge-cycle", EDGE_KS, EDGE_TS, EDGE_SIZES)


def criterion_4():
    return _suite("edge-path", EDGE_KS, EDGE_TS, EDGE_SIZES)


def _colex_reports():
    return [colex_check(m, t) for m in range(16) for t in (3, 4, 5)]


def criterion_5_values():
    bad = [(r.m, r.t) for r in _colex_reports() if r.brute_value != r.kk_value]
    return not bad, f"cells=48 value-mismatches={bad}"


def criterion_5_unique_if():
    bad = []
    for r in _colex_reports():
        _, _, s = colex_decompose(r.m)
        if s >= r.t - 1 and not r.colex_unique:
            bad.append((r.m, r.t))
    return not bad, f"s >= t-1 implies L_m unique; violations={bad}"


def criterion_5_unique_only_if():
    bad = []
    for r in _colex_reports():
        _, _, s = colex_decompose(r.m)
        if r.colex_unique and s < r.t - 1:
            bad.append((r.m, r.t))
    return not bad, f"L_m unique implies s >= t-1; violations (m,t)={bad}"


def criterion_5_contains_clique():
    bad = []
    for r in _colex_reports():
        _, rr, s = colex_decompose(r.m)
        if rr >= r.t and s < r.t - 1 and not r.all_contain_top_clique:
            bad.append((r.m, r.t))
    return not bad, f"r >= t, s < t-1 implies every maximizer contains K_r; violations={bad}"


def criterion_6():
    bad = []
    exceptional = 0
    for variant in ("path", "cycle"):
        for k in range(3, 8):
            for n in range(1, 9):
                r = classical_check(variant, n, k)
                exceptional += r.exceptional_expected
                if not r.match or r.exceptional_present != r.exceptional_expected:
                    bad.append((variant, n, k))
    return not bad, f"cells=80 exceptional-cells={exceptional} mismatches={bad}"


def criterion_7_convexity():
    checked = 0
    for t in range(2, 7):
        for x in range(t, 16):
            for y in range(0, x + 1):
                for z in range(0, x + 1):
                    w = y + z - x
                    if not 0 <= w <= 15:
                        continue
                    holds, strict = lemma_convexity(x, w, y, z, t)
                    checked += 1
                    if not holds or (x > y and x > z and not strict):
                        return False, f"fails at {(x, w, y, z, t)}"
    return True, f"tuples={checked}"


def _team(ts):
    bad = [(x, y, t) for x in range(13) for y in range(13) for t in ts if not lemma_team_identity(x, y, t)]
    return not bad, f"t in {list(ts)}: violations={len(bad)}" + (f" first={bad[0]}" if bad else "")


def criterion_7_team_identity():
    return _team(range(0, 7))


def criterion_7_team_identity_clique_orders():
    return _team([0, 3, 4, 5, 6])


def criterion_7_karamata():
    rng = random.Random(20240501)
    for _ in range(1000):
        size = rng.randint(1, 8)
        y = sorted((rng.randint(0, 12) for _ in range(size)), reverse=True)
        x = list(y)
        for _ in range(rng.randint(0, 10)):
            i, j = sorted(rng.sample(range(size), 2)) if size > 1 else (0, 0)
            if i != j and x[j] > 0:
                x[i] += 1
                x[j] -= 1
                x.sort(reverse=True)
        if not majorizes(x, y):
            return False, f"constructed pair not majorizing: {x} {y}"
        for t in (3, 4, 5):
            if sum(binom(v, t - 1) for v in x) < sum(binom(v, t - 1) for v in y):
                return False, f"Karamata fails for {x}, {y}, t={t}"
    return True, "pairs=1000 t in [3, 4, 5]"


def criterion_7_split():
    rng = random.Random(7)
    for _ in range(2000):
        delta = rng.randint(1, 10)
        degrees = [rng.randint(0, 50) for _ in range(rng.randint(0, 12))]
        out = split_sequence(delta, degrees)
        if out != sorted(out, reverse=True) or sum(out) != sum(degrees):
            return False, f"bad split for {delta}, {degrees}"
    return True, "sequences=2000"


def criterion_7_luo():
    cells = 0
    for k in VERTEX_KS:
        for t in range(3, k):
            for n in VERTEX_SIZES:
                cells += 1
                if max_kt_vertex("path", n, k, t) > luo_bound("path", n, k, t):
                    return False, f"path {(n, k, t)}"
                if max_kt_vertex("cycle", n, k, t) > luo_bound("cycle", n, k, t):
                    return False, f"cycle {(n, k, t)}"
    return True, f"cells={cells}"


def criterion_8():
    counts = [len(list(enumerate_graphs(n))) for n in range(7)]
    oracle = [labeled_class_count(n) for n in range(7)]
    if counts != oracle or counts[1:] != [1, 2, 4, 11, 34, 156]:
        return False, f"counts {counts} vs oracle {oracle}"
    total = 0
    for n in range(8):
        for g in enumerate_graphs(n):
            total += 1
            if decode(encode(g)) != g:
                return False, f"graph6 round trip fails for {g!r}"
    rng = random.Random(99)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        form = canonical_form(g)
        for _ in range(100):
            if canonical_form(relabel_random(rng, g)) != form:
                return False, f"canonical form not invariant for {g!r}"
    return True, f"counts={counts[1:]} roundtrips={total} canon-sample=500x100"


CRITERIA = [
    ("1 vertex-path", criterion_1),
    ("2 vertex-cycle", criterion_2),
    ("3 edge-cycle", criterion_3),
    ("4 edge-path", criterion_4),
    ("5 colex values", criterion_5_values),
    ("5 colex unique when s >= t-1", criterion_5_unique_if),
    ("5 colex unique only when s >= t-1", criterion_5_unique_only_if),
    ("5 colex maximizers contain K_r", criterion_5_contains_clique),
    ("6 classical edge theorems", criterion_6),
    ("7 convexity", criterion_7_convexity),
    ("7 team identity, t <= 6", criterion_7_team_identity),
    ("7 team identity, t = 0 or 3..6", criterion_7_team_identity_clique_orders),
    ("7 Karamata", criterion_7_karamata),
    ("7 split sequences", criterion_7_split),
    ("7 Luo bounds", criterion_7_luo),
    ("8 infrastructure", criterion_8),
]


def _check(name, fn):
    ok, detail = _timed(name, fn)
    assert ok, detail


def test_criterion_1_vertex_path():
    _check(*CRITERIA[0])


def test_criterion_2_vertex_cycle():
    _check(*CRITERIA[1])


def test_criterion_3_edge_cycle():
    _check(*CRITERIA[2])


def test_criterion_4_edge_path():
    _check(*CRITERIA[3])


def test_criterion_5_values():
    _check(*CRITERIA[4])


def test_criterion_5_unique_when():
    _check(*CRITERIA[5])


def test_criterion_5_unique_only_when():
    _check(*CRITERIA[6])


def test_criterion_5_contains_top_clique():
    _check(*CRITERIA[7])


def test_criterion_6_classical():
    _check(*CRITERIA[8])


def test_criterion_7_convexity():
    _check(*CRITERIA[9])


def test_criterion_7_team_identity():
    _check(*CRITERIA[10])


def test_criterion_7_team_identity_clique_orders():
    _check(*CRITERIA[11])


def test_criterion_7_karamata():
    _check(*CRITERIA[12])


def test_criterion_7_split_sequences():
    _check(*CRITERIA[13])


def test_criterion_7_luo_bounds():
    _check(*CRITERIA[14])


def test_criterion_8_infrastructure():
    _check(*CRITERIA[15])


if __name__ == "__main__":
    for name, fn in CRITERIA:
        _timed(name, fn)
