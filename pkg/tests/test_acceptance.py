"""One test per acceptance criterion; each prints a PASS/FAIL line.

Clauses that cannot hold as written are strict xfails: they assert the stated
value, fail, and the surrounding tests pin down what is actually true.
"""
import itertools
import time

import pytest

from epos import csf, enumeration
from epos.canon import canonical_form
from epos.catalog import named
from epos.cli import main
from epos.csf import chromatic_poly, csf_e, csf_p_oracle, is_e_positive
from epos.enumeration import connected_graphs
from epos.graph import Graph, g6_decode
from epos.recognition import hempel_layer_check, is_at_free, is_chordal, is_free, is_unit_interval
from epos.symfunc import SymExpr, e_to_p, eval_at_ones, partitions
from epos.verify import CONJECTURE_MODES, SUITES, run_suite


def E(n, coeffs):
    return SymExpr("e", n, coeffs)


def _canon_set(graphs):
    return {canonical_form(g) for g in graphs}


# --- 1. census ---------------------------------------------------------------------------------


def test_c1_census(criterion):
    enumeration.clear_cache()
    csf._csf_e_canonical.cache_clear()
    counts, times = {}, {}
    for n in range(4, 8):
        t0 = time.perf_counter()
        rep = run_suite("counts", n)
        times[n] = time.perf_counter() - t0
        counts[n] = rep.counts.get("non_e_positive", 0)
        if n == 5:
            n5 = [g6_decode(c) for c in rep.lists["non_e_positive"]]
    want5 = _canon_set(named(x) for x in ("K14", "dart", "cricket", "co_K3_2K1"))
    ok_counts = counts == {4: 1, 5: 4, 6: 44, 7: 374}
    ok_list = _canon_set(n5) == want5 and len(n5) == 4
    ok_time = sum(times[n] for n in (4, 5, 6)) < 10 and times[7] < 120
    detail = f"counts={counts} time(n<=6)={sum(times[n] for n in (4, 5, 6)):.1f}s time(7)={times[7]:.1f}s"
    criterion("1 census 1,4,44,374 and n=5 list", ok_counts and ok_list and ok_time, detail)
    assert ok_counts and ok_list and ok_time


# --- 2. golden expansions -------------------------------------------------------------------------


CLAW_STATED = E(4, {(4,): 1, (3, 1): 5, (2, 2): -2, (2, 1, 1): 1})
CLAW_TRUE = E(4, {(4,): 4, (3, 1): 5, (2, 2): -2, (2, 1, 1): 1})


def test_c2_chair_golden(criterion):
    want = E(5, {(2, 2, 1): 1, (3, 1, 1): 2, (3, 2): 1, (4, 1): 7, (5,): 5})
    got = csf_e(named("chair"))
    criterion("2 golden chair expansion", got == want, repr(got))
    assert got == want


@pytest.mark.xfail(strict=True, reason="stated claw e_4 coefficient is 1; the true value is 4")
def test_c2_claw_golden_as_stated(criterion):
    got = csf_e(named("claw"))
    criterion("2 golden claw expansion (as stated)", got == CLAW_STATED, f"got {got!r}")
    assert got == CLAW_STATED


def test_c2_claw_true_value(criterion):
    # three independent routes: stable partitions, proper colorings at k = 4, edge subsets
    g = named("claw")
    got = csf_e(g)
    colorings = sum(
        1 for c in itertools.product(range(4), repeat=4) if all(c[0] != c[i] for i in (1, 2, 3))
    )
    ok = (
        got == CLAW_TRUE
        and eval_at_ones(CLAW_TRUE, 4) == colorings == 108
        and eval_at_ones(CLAW_STATED, 4) == 105
        and e_to_p(CLAW_TRUE) == csf_p_oracle(g)
    )
    criterion("2 claw expansion cross-checked by oracles", ok, "4e4+5e31-2e22+e211; chi(4)=108")
    assert ok


# --- 3. net and 3-sun ------------------------------------------------------------------------------


def test_c3_net_and_sun(criterion):
    net, sun = named("net"), named("sun3")
    ok = (
        is_free(net, "claw") and is_chordal(net) and not is_at_free(net)
        and not is_unit_interval(net) and not is_e_positive(net) and is_e_positive(sun)
    )
    criterion("3 net/3-sun properties", ok)
    assert ok


# --- 4. F1 and F2 --------------------------------------------------------------------------------


def _connected_induced_all_positive(g):
    seen = set()
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            h = g.induced(sub)
            if not h.is_connected():
                continue
            code = canonical_form(h)
            if code not in seen:
                seen.add(code)
                if not is_e_positive(h):
                    return False, len(seen)
    return True, len(seen)


def test_c4_f1_f2_positive(criterion):
    f1, f2 = named("F1"), named("F2")
    ok1, k1 = _connected_induced_all_positive(f1)
    ok2, k2 = _connected_induced_all_positive(f2)
    ok = ok1 and ok2 and not is_free(f1, "antenna") and not is_free(f2, "bull")
    ok = ok and is_free(f2, "net", "sun3")
    criterion("4 F1/F2 hereditary e-positivity, antenna in F1, bull in F2, no net/3-sun in F2", ok,
              f"{k1} and {k2} connected induced classes")
    assert ok


@pytest.mark.xfail(strict=True, reason="the figure's F2 contains an antenna; no 7-vertex fix exists")
def test_c4_f2_antenna_free_as_stated(criterion):
    ok = is_free(named("F2"), "antenna")
    criterion("4 F2 has no antenna (as stated)", ok)
    assert ok


# --- 5. conjecture sweeps --------------------------------------------------------------------------


def test_c5_claw_net_free_positive(criterion):
    reps = [run_suite("conjecture", n, mode="claw-net-free-positive") for n in range(1, 9)]
    bad = sum(r.violation_count for r in reps)
    total = sum(r.total for r in reps)
    criterion("5 (claw,net)-free => e-positive, n<=8", bad == 0, f"{total} graphs, {bad} counterexamples")
    assert bad == 0


def test_c5_claw_net_free_positive_n9(criterion):
    rep = run_suite("conjecture", 9, mode="claw-net-free-positive", extended=True)
    criterion("5 (claw,net)-free => e-positive, n=9 extended", rep.ok and rep.total > 0,
              f"{rep.total} graphs, {rep.violation_count} counterexamples")
    assert rep.ok and rep.total > 0


def test_c5_witness(criterion):
    reps = [run_suite("conjecture", n, mode="non-positive-has-witness") for n in range(1, 8)]
    bad = sum(r.violation_count for r in reps)
    nonpos = sum(r.counts.get("non_e_positive", 0) for r in reps)
    criterion("5 non-e-positive => induced claw or net, n<=7", bad == 0,
              f"{nonpos} non-positive graphs, {bad} without witness")
    assert bad == 0


# --- 6. structure theorems ---------------------------------------------------------------------


def test_c6_structure(criterion):
    reps = [run_suite("structure", n) for n in range(1, 9)]
    bad = sum(r.violation_count for r in reps)
    cc = sum(r.counts.get("claw_coclaw_free", 0) for r in reps)
    criterion("6 structure theorems and classifier, n<=8", bad == 0,
              f"{cc} (claw,co-claw)-free graphs, {bad} violations")
    assert bad == 0


# --- 7. oracle equivalence -----------------------------------------------------------------------


def test_c7_chromatic_oracle(criterion):
    csf.chromatic_memo.clear()
    mismatches = checked = 0
    for n in range(1, 8):
        ks = range(1, len(partitions(n)) + 2)
        for g in connected_graphs(n):
            e = csf_e(g)
            for k in ks:
                checked += 1
                mismatches += eval_at_ones(e, k) != chromatic_poly(g, k)
    criterion("7 chromatic polynomial = eval_at_ones(X_G), n<=7", mismatches == 0, f"{checked} evaluations")
    assert mismatches == 0


def test_c7_power_sum_oracle(criterion):
    bad = total = 0
    for n in range(1, 7):
        for g in connected_graphs(n):
            total += 1
            bad += e_to_p(csf_e(g)) != csf_p_oracle(g)
    criterion("7 power-sum oracle = e_to_p(X_G), n<=6", bad == 0, f"{total} graphs")
    assert bad == 0


# --- 8. class theory ------------------------------------------------------------------------------


def test_c8_kchain_kloks_existential_layers(criterion):
    reps = [run_suite("classes", n) for n in range(1, 9)]
    viol = {}
    for r in reps:
        for k, v in r.violations.items():
            viol[k] = viol.get(k, 0) + len(v)
    ok = not viol
    some = sum(len(r.lists.get("hempel_fails_at_some_vertex", [])) for r in reps)
    criterion("8 K-chain equivalence, Kloks dichotomy, layer lemma at some base vertex, n<=8", ok,
              f"violations={viol or 0}; {some} graphs fail at some base vertex")
    assert ok


@pytest.mark.xfail(strict=True, reason="the layer property fails at some base vertices, e.g. the centre of P5")
def test_c8_layer_lemma_every_vertex_as_stated(criterion):
    failures = 0
    for n in range(1, 9):
        for g in connected_graphs(n, "claw-free"):
            if is_at_free(g) and not all(hempel_layer_check(g, w) for w in range(g.n)):
                failures += 1
    criterion("8 layer lemma at every base vertex (as stated)", failures == 0, f"{failures} graphs fail")
    assert failures == 0


# --- 9. determinism --------------------------------------------------------------------------------


def _cli_out(capsys, argv):
    assert main(argv) in (0, 1)
    return capsys.readouterr().out


def test_c9_jobs_determinism(capsys, criterion):
    runs = [("--suite", s) for s in SUITES if s != "conjecture"]
    runs += [("--suite", "conjecture", "--mode", m) for m in CONJECTURE_MODES]
    same = []
    for extra in runs:
        argv = ["verify", "--n", "7", *extra]
        a = _cli_out(capsys, argv + ["--jobs", "1"])
        b = _cli_out(capsys, argv + ["--jobs", "3"])
        same.append(a == b and a.strip() != "")
    ok = all(same)
    criterion("9 verify reports byte-identical across --jobs", ok, f"{sum(same)}/{len(same)} suites")
    assert ok
