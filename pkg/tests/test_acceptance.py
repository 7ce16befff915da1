"""Acceptance gate: one test per criterion, each recorded as a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v``; the summary section at the end
lists the outcome of every criterion.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from bergefree import Hypergraph, catalog, chromatic_number
from bergefree.berge import brute_force_contains_berge, check_witness, contains_berge, is_berge_f_free
from bergefree.classify import classify_edges, verify_blue_in_every_copy, verify_nonblue_within_edge_f_free
from bergefree.cli import main
from bergefree.constructions import greedy_maximal, kr_construction
from bergefree.embed import count_copies
from bergefree.ramsey import mono_copy, ramsey_number
from bergefree.search import max_f_free_edges, verify_lemma1_margin
from bergefree.sweep import SweepConfig, rows_to_csv, run_sweep
from bergefree.weights import WeightFunction, sqrt_threshold, weigh

from acceptance_log import record
from oracles import avoiding_colourings, has_copy

K3, K4 = catalog.complete(3), catalog.complete(4)
C4, P3, P4 = catalog.cycle(4), catalog.path(3), catalog.path(4)


def _check(criterion, ok, detail):
    record(criterion, ok, detail)
    assert ok, detail


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


# 1 ------------------------------------------------------------------------


def test_criterion_1_construction_arithmetic():
    expected = {6: 12, 12: 48, 18: 108, 24: 192}

    def run():
        return {n: kr_construction(n, 3) for n in expected}

    built, elapsed = _timed(run)
    bad = [
        n
        for n, H in built.items()
        if len(H) != (n // 3) ** 2 or sum(H.sizes) != expected[n] or sum(H.sizes) != n * n // 3
    ]
    sums = ",".join(str(sum(built[n].sizes)) for n in sorted(built))
    _check(1, not bad and elapsed < 1.0, f"sum|h| = {{{sums}}}, mismatches {bad}, {elapsed:.3f}s (limit 1s)")


# 2 ------------------------------------------------------------------------


def test_criterion_2_construction_freeness():
    failures = []
    oracle_checked = 0

    def run():
        nonlocal oracle_checked
        for r in (3, 4):
            F = catalog.complete(r)
            for n in range(2 * r, 5 * r + 1, r):
                H = kr_construction(n, r)
                if not is_berge_f_free(H, F):
                    failures.append((r, n, "detector"))
                if n <= 12:
                    oracle_checked += 1
                    if brute_force_contains_berge(H, F) is not None:
                        failures.append((r, n, "oracle"))

    _, elapsed = _timed(run)
    _check(
        2,
        not failures and elapsed < 60,
        f"8 constructions free, {oracle_checked} oracle cross-checks, failures {failures}, {elapsed:.1f}s (limit 60s)",
    )


# 3 ------------------------------------------------------------------------


def test_criterion_3_detector_oracle_equivalence():
    rng = random.Random(3)
    patterns = [K3, C4, P4, K4]
    trials, disagreements, positives, bad_witnesses = 2400, [], 0, 0

    def run():
        nonlocal positives, bad_witnesses
        for t in range(trials):
            F = patterns[t % len(patterns)]
            n = rng.randint(2, 8)
            m = rng.randint(0, 8)
            hi = rng.randint(2, n)
            H = Hypergraph(n, tuple(tuple(rng.sample(range(n), rng.randint(1, hi))) for _ in range(m)))
            fast = contains_berge(H, F)
            slow = brute_force_contains_berge(H, F)
            if (fast is None) != (slow is None):
                disagreements.append((H, F))
            if fast is not None:
                positives += 1
                if not check_witness(H, fast):
                    bad_witnesses += 1

    _, elapsed = _timed(run)
    _check(
        3,
        not disagreements and not bad_witnesses and elapsed < 300,
        f"{trials} instances ({positives} containing), {len(disagreements)} disagreements, "
        f"{bad_witnesses} invalid witnesses, {elapsed:.1f}s (limit 300s)",
    )


# 4, 5 --------------------------------------------------------------------

PER_PATTERN = 500


@pytest.fixture(scope="module")
def greedy_corpus():
    rng = random.Random(4)
    corpus = []
    start = time.perf_counter()
    for F in (K3, C4):
        for i in range(PER_PATTERN):
            n = rng.randint(max(F.n, 5), 12)
            # narrow size windows give denser instances, with more shadow copies to scan
            s_min = rng.randint(F.n, min(n, F.n + 3))
            s_max = rng.randint(s_min, min(n, s_min + 2))
            corpus.append((F, greedy_maximal(n, F, s_min, s_max, seed=i)))
    return corpus, time.perf_counter() - start


def test_criterion_4_blue_edge_in_every_copy(greedy_corpus):
    corpus, build_time = greedy_corpus
    failures, not_free, copies = [], 0, 0

    def run():
        nonlocal not_free, copies
        for F, H in corpus:
            if not is_berge_f_free(H, F):
                not_free += 1
                continue
            res = verify_blue_in_every_copy(H, F)
            copies += res.copies_checked
            if not res.ok or res.truncated:
                failures.append((F, H, res.counterexample))

    _, elapsed = _timed(run)
    total = build_time + elapsed
    _check(
        4,
        not failures and not not_free and total < 600,
        f"{len(corpus)} greedy instances (K_3 and C_4), {copies} copies scanned, "
        f"{len(failures)} counterexamples, {total:.1f}s (limit 600s)",
    )


def test_criterion_5_nonblue_pairs_within_hyperedge(greedy_corpus):
    corpus, _ = greedy_corpus
    failures, checked = [], 0
    for F, H in corpus:
        cls = classify_edges(H, F)
        for i in range(len(H)):
            checked += 1
            if not verify_nonblue_within_edge_f_free(H, F, i, classification=cls).ok:
                failures.append((F, H, i))
    _check(5, not failures, f"{checked} hyperedges in {len(corpus)} instances, {len(failures)} failures")


# 6 ------------------------------------------------------------------------


def test_criterion_6_ramsey_thresholds():
    cases = [(P3, P3, 3), (K3, P3, 5), (K3, K3, 6)]
    problems = []

    def run():
        for F, G, expected in cases:
            res = ramsey_number(F, G)
            c = res.witness
            red = c.red.edges
            blue = c.red.complement().edges
            if res.value != expected:
                problems.append(f"value {res.value} != {expected}")
            if c.n != expected - 1 or mono_copy(c, F, G) is not None:
                problems.append(f"witness for {expected} invalid")
            if has_copy(c.n, red, F.n, F.edges) or has_copy(c.n, blue, G.n, G.edges):
                problems.append(f"witness for {expected} rejected by oracle")
            # unpruned: every colouring of K_R fails, some colouring of K_{R-1} avoids both
            if avoiding_colourings(expected, F, G):
                problems.append(f"oracle finds an avoiding colouring of K_{expected}")
            if not avoiding_colourings(expected - 1, F, G):
                problems.append(f"oracle finds no avoiding colouring of K_{expected - 1}")

    _, elapsed = _timed(run)
    _check(
        6,
        not problems and elapsed < 120,
        f"R(P3,P3)=3, R(K3,P3)=5, R(K3,K3)=6 with witnesses, problems {problems}, {elapsed:.1f}s (limit 120s)",
    )


# 7 ------------------------------------------------------------------------


def test_criterion_7_turan_oracle():
    problems = []
    ratios = []

    def run():
        for n, expected in ((5, 6), (6, 9)):
            rep = max_f_free_edges(n, K3)
            W = rep.witness
            if rep.optimum != expected or not rep.exhaustive:
                problems.append(f"ex({n},K3)={rep.optimum}")
            if W.m != expected or count_copies(W, K3) or chromatic_number(W) > 2:
                problems.append(f"witness for n={n} not a bipartite K3-free graph")
        for F in (K3, C4):
            for row in verify_lemma1_margin(F, range(F.n, 8)):
                ratios.append(row.ratio)
                if not (row.ratio < 1 and row.exhaustive):
                    problems.append(f"ratio {row.ratio} at n={row.n}")

    _, elapsed = _timed(run)
    _check(
        7,
        not problems and elapsed < 300,
        f"ex(5,K3)=6, ex(6,K3)=9, max margin ratio {max(ratios):.4f} over {len(ratios)} rows, "
        f"problems {problems}, {elapsed:.1f}s (limit 300s)",
    )


# 8 ------------------------------------------------------------------------


def test_criterion_8_monotonicity():
    rng = random.Random(8)
    patterns = [K3, C4, P4, P3, K4]
    trials = 10_000
    flips = {"add": 0, "superset": 0}
    done = {"add": 0, "superset": 0}
    for kind in flips:
        while done[kind] < trials:
            F = rng.choice(patterns)
            n = rng.randint(F.n, 8)
            m = rng.randint(F.m, F.m + 4)
            H = Hypergraph(n, tuple(tuple(rng.sample(range(n), rng.randint(2, n))) for _ in range(m)))
            if contains_berge(H, F) is None:
                continue
            done[kind] += 1
            if kind == "add":
                after = H.add(rng.sample(range(n), rng.randint(1, n)))
            else:
                i = rng.randrange(len(H))
                grown = set(H.hyperedges[i]) | set(rng.sample(range(n), rng.randint(0, n)))
                after = H.replace(i, grown)
            if contains_berge(after, F) is None:
                flips[kind] += 1
    _check(
        8,
        not any(flips.values()),
        f"{trials} addition and {trials} superset trials from containing inputs, flips {flips}",
    )


# 9 ------------------------------------------------------------------------


def test_criterion_9_weight_split_and_growth(greedy_corpus):
    corpus, _ = greedy_corpus
    weights = [WeightFunction.size(), WeightFunction.size_squared(), WeightFunction.size_minus(1)]
    split_failures = 0
    instances = [H for _, H in corpus] + [kr_construction(n, 3) for n in (6, 12, 18, 24)]
    for H in instances:
        for w in weights:
            rep = weigh(H, w, sqrt_threshold(H.n))
            if rep.total != rep.below_threshold + rep.above_threshold or rep.threshold != math.isqrt(H.n - 1) + 1:
                split_failures += 1

    cfg = SweepConfig("greedy", list(range(20, 61, 5)), pattern="K_3", seeds=[0, 1, 2], s_min=5, s_max="n/4")
    rows = run_sweep(cfg, threads=4)
    baseline = Fraction(1, 3)
    above, worst = [], Fraction(0)
    for row in rows:
        if not row["status"].startswith("ok"):
            above.append((row["n"], row["status"]))
            continue
        if int(row["sum_w"]) != int(row["below_w"]) + int(row["above_w"]):
            split_failures += 1
        ratio = Fraction(int(row["sum_size"]), int(row["n_sq"]))
        worst = max(worst, ratio)
        if ratio >= baseline:
            above.append((row["n"], row["ratio_size"]))
    _check(
        9,
        not split_failures and not above,
        f"{len(instances) * len(weights)} weight reports split exactly; {len(rows)} sweep rows "
        f"n=20..60, max ratio {float(worst):.6f} < 1/3, violations {above}",
    )


# 10 -----------------------------------------------------------------------


def test_criterion_10_reproducibility(tmp_path):
    import json

    configs = [
        SweepConfig("greedy", [12, 16, 20], pattern="C_4", seeds=[0, 5], s_min=4, s_max="n/2"),
        SweepConfig("kr", [6, 9, 12], r=3, weight="size2"),
    ]
    same = all(rows_to_csv(run_sweep(c)) == rows_to_csv(run_sweep(c, threads=2)) for c in configs)
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(configs[0].to_json()))
    outs = [tmp_path / "a.csv", tmp_path / "b.csv"]
    codes = [main(["sweep", "--config", str(cfg_path), "--out", str(p)]) for p in outs]
    cli_same = codes == [0, 0] and outs[0].read_bytes() == outs[1].read_bytes()
    _check(10, same and cli_same, f"library reruns identical: {same}; CLI reruns byte-identical: {cli_same}")
