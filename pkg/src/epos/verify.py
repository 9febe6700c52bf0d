"""Exhaustive verification sweeps over connected graphs of a fixed order.

Each sweep walks the canonical-augmentation tree one parent at a time.  A
parent's children are generated and evaluated together (in a worker process
when ``jobs > 1``), and per-parent outcomes are folded in parent order, so
reports do not depend on the number of workers.  That per-parent fold is also
what the checkpoint file records.
"""
from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, NamedTuple

from .canon import canonical_form
from .catalog import named
from .csf import forbidden_witness, is_e_positive, is_strongly_e_positive
from .enumeration import DEFAULT_CAP, HARD_CAP, CapError, children, connected_graphs
from .graph import Graph, g6_decode, is_clique_mask
from .recognition import (
    ClassifierFailure,
    asteroidal_triple,
    classify_claw_coclaw,
    hempel_layer_check,
    is_chordal,
    is_cocomparability,
    is_free,
    is_induced_subgraph_of,
    is_k_chain,
    residual_2k2_family,
)

STANDARD_MAX_N = 8
SUITES = ("counts", "conjecture", "structure", "classes", "positivity")
CONJECTURE_MODES = ("claw-net-free-positive", "non-positive-has-witness", "strongly-epositive-iff")


class Outcome(NamedTuple):
    tags: tuple[str, ...] = ()
    listed: tuple[str, ...] = ()
    violations: tuple[str, ...] = ()


@dataclass
class VerifyReport:
    suite: str
    n: int
    mode: str | None = None
    filter: str | None = None
    total: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    lists: dict[str, list[str]] = field(default_factory=dict)
    violations: dict[str, list[str]] = field(default_factory=dict)
    wall_time: float | None = None

    @property
    def violation_count(self) -> int:
        return sum(len(v) for v in self.violations.values())

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    @property
    def counterexamples(self) -> list[str]:
        return sorted({g for v in self.violations.values() for g in v})

    def absorb(self, outcomes: list[tuple[str, Outcome]]) -> None:
        for g6, out in outcomes:
            self.total += 1
            for t in out.tags:
                self.counts[t] = self.counts.get(t, 0) + 1
            for t in out.listed:
                self.lists.setdefault(t, []).append(g6)
            for t in out.violations:
                self.violations.setdefault(t, []).append(g6)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "mode": self.mode,
            "n": self.n,
            "filter": self.filter,
            "total": self.total,
            "counts": dict(sorted(self.counts.items())),
            "lists": {k: sorted(v) for k, v in sorted(self.lists.items())},
            "violations": {k: sorted(v) for k, v in sorted(self.violations.items())},
            "violation_count": self.violation_count,
            "ok": self.ok,
        }
        if timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "VerifyReport":
        return cls(
            suite=data["suite"], n=data["n"], mode=data.get("mode"), filter=data.get("filter"),
            total=data["total"], counts=dict(data["counts"]),
            lists={k: list(v) for k, v in data["lists"].items()},
            violations={k: list(v) for k, v in data["violations"].items()},
            wall_time=data.get("wall_time"),
        )


# --- per-graph evaluators ----------------------------------------------------------------------

def _eval_counts(g: Graph) -> Outcome:
    tags = []
    listed = []
    claw_free = is_free(g, "claw")
    if claw_free:
        tags.append("claw_free")
        if is_free(g, "net"):
            tags.append("claw_net_free")
    if not is_e_positive(g):
        tags.append("non_e_positive")
        listed.append("non_e_positive")
    return Outcome(tuple(tags), tuple(listed))


def _eval_claw_net_positive(g: Graph) -> Outcome:
    if not is_free(g, "claw", "net"):
        return Outcome(("skipped",))
    if is_e_positive(g):
        return Outcome(("claw_net_free", "e_positive"))
    return Outcome(("claw_net_free",), violations=("claw_net_free_not_e_positive",))


def _eval_witness(g: Graph) -> Outcome:
    if is_e_positive(g):
        return Outcome()
    w = forbidden_witness(g)
    if w is None:
        return Outcome(("non_e_positive",), ("non_e_positive",), ("non_positive_without_claw_or_net",))
    return Outcome(("non_e_positive", f"witness_{w[0]}"), ("non_e_positive",))


def _eval_strong(g: Graph) -> Outcome:
    strong = is_strongly_e_positive(g)
    cn = is_free(g, "claw", "net")
    tags = tuple(t for t, on in (("strongly_e_positive", strong), ("claw_net_free", cn)) if on)
    if strong != cn:
        return Outcome(tags, violations=("strong_positivity_differs_from_claw_net_free",))
    return Outcome(tags)


def has_disjoint_triangle_cotriangle(g: Graph) -> bool:
    adj = g.adj
    for t in combinations(range(g.n), 3):
        tm = (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        if not is_clique_mask(adj, tm):
            continue
        rest = [v for v in range(g.n) if not tm >> v & 1]
        for c in combinations(rest, 3):
            if not (adj[c[0]] >> c[1] & 1 or adj[c[0]] >> c[2] & 1 or adj[c[1]] >> c[2] & 1):
                return True
    return False


def _eval_structure(g: Graph) -> Outcome:
    if not is_free(g, "claw", "co_claw"):
        return Outcome(("case_not-claw-coclaw-free",))
    tags = ["claw_coclaw_free"]
    bad = []
    has_net = not is_free(g, "net")
    has_sun = not is_free(g, "sun3")
    if has_disjoint_triangle_cotriangle(g):
        tags.append("disjoint_triangle_cotriangle")
        if not (has_net or has_sun):
            bad.append("claw_coclaw_disjoint_without_net_or_sun")
    if has_net or has_sun:
        tags.append("contains_net_or_sun")
        code = canonical_form(g)
        if code not in (canonical_form(named("net")), canonical_form(named("sun3"))):
            bad.append("net_or_sun_not_whole_graph")
    has_antenna = not is_free(g, "antenna")
    if has_antenna:
        tags.append("contains_antenna")
        if not is_induced_subgraph_of(g, named("F1")):
            bad.append("antenna_not_in_F1")
    if not (has_net or has_sun or has_antenna) and not is_free(g, "bull"):
        tags.append("bull_case")
        if not is_induced_subgraph_of(g, named("F2")):
            bad.append("bull_not_in_F2")
    try:
        tags.append("case_" + classify_claw_coclaw(g))
    except ClassifierFailure:
        bad.append("classifier_failure")
    return Outcome(tuple(tags), violations=tuple(bad))


def _is_path_or_cycle(g: Graph) -> bool:
    degs = sorted(g.degrees())
    if g.n <= 2:
        return True
    return all(d == 2 for d in degs) or (degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]))


def _eval_classes(g: Graph) -> Outcome:
    tags = []
    listed = []
    bad = []
    claw_free = is_free(g, "claw")
    at_free = asteroidal_triple(g) is None
    chordal = is_chordal(g)
    unit = claw_free and chordal and at_free
    for t, on in (("claw_free", claw_free), ("at_free", at_free), ("chordal", chordal), ("unit_interval", unit)):
        if on:
            tags.append(t)
    kc = is_k_chain(g)
    if kc:
        tags.append("k_chain")
    if kc != (unit and is_free(g, "diamond")):
        bad.append("k_chain_vs_diamond_free_unit_interval")
    cotri_free = is_free(g, "co_triangle")
    cocomp = is_cocomparability(g)
    if claw_free and at_free:
        tags.append("claw_free_at_free")
        if not (cotri_free or cocomp):
            bad.append("kloks_forward")
        good = [hempel_layer_check(g, w) for w in range(g.n)]
        if not all(good):
            listed.append("hempel_fails_at_some_vertex")
        if not any(good):
            bad.append("hempel_no_base_vertex")
    if (cotri_free or (claw_free and cocomp)) and not (claw_free and at_free):
        bad.append("kloks_converse")
    if is_free(g, "P3") and 2 * g.num_edges != g.n * (g.n - 1):
        bad.append("p3_free_not_complete")
    if claw_free and is_free(g, "triangle"):
        tags.append("claw_triangle_free")
        if not _is_path_or_cycle(g):
            bad.append("claw_triangle_free_not_path_or_cycle")
    if unit and is_free(g, "2K2"):
        tags.append("2K2_free_unit_interval")
        if residual_2k2_family(g):
            tags.append("residual_2k2")
            listed.append("residual_2k2")
    return Outcome(tuple(tags), tuple(listed), tuple(bad))


# classes whose connected members are all e-positive
POSITIVE_CLASSES: dict[str, Callable[[Graph], bool]] = {
    "claw_P4_free": lambda g: is_free(g, "claw", "P4"),
    "claw_paw_free": lambda g: is_free(g, "claw", "paw"),
    "claw_co_paw_free": lambda g: is_free(g, "claw", "co_paw"),
    "P3_free": lambda g: is_free(g, "P3"),
    "claw_triangle_free": lambda g: is_free(g, "claw", "triangle"),
    "claw_co_P3_free": lambda g: is_free(g, "claw", "co_P3"),
    "co_triangle_free": lambda g: is_free(g, "co_triangle"),
    "claw_coclaw_free_not_net": lambda g: (
        is_free(g, "claw", "co_claw") and canonical_form(g) != canonical_form(named("net"))
    ),
    "coclaw_free_unit_interval": lambda g: (
        is_free(g, "claw", "co_claw") and is_chordal(g) and asteroidal_triple(g) is None
    ),
    "diamond_free_unit_interval": lambda g: (
        is_free(g, "claw", "diamond") and is_chordal(g) and asteroidal_triple(g) is None
    ),
}


def _eval_positivity(g: Graph) -> Outcome:
    member = [name for name, pred in POSITIVE_CLASSES.items() if pred(g)]
    if not member:
        return Outcome()
    if is_e_positive(g):
        return Outcome(tuple(member))
    return Outcome(tuple(member), violations=tuple(f"{m}_not_e_positive" for m in member))


EVALUATORS: dict[str, Callable[[Graph], Outcome]] = {
    "counts": _eval_counts,
    "claw-net-free-positive": _eval_claw_net_positive,
    "non-positive-has-witness": _eval_witness,
    "strongly-epositive-iff": _eval_strong,
    "structure": _eval_structure,
    "classes": _eval_classes,
    "positivity": _eval_positivity,
}


# --- sweeps -----------------------------------------------------------------------------------------

def _parent_job(args) -> list[tuple[str, Outcome]]:
    parent_g6, hereditary, evaluator = args
    parent = g6_decode(parent_g6) if parent_g6 else Graph.empty(0)
    fn = EVALUATORS[evaluator]
    return [(g.to_g6(), fn(g)) for _, g in children(parent, hereditary)]


def _check_n(n: int, extended: bool, cap: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    limit = max(cap, DEFAULT_CAP) if extended else STANDARD_MAX_N
    if n > min(limit, HARD_CAP):
        hint = " (use the extended flag for n = 9)" if not extended and n <= DEFAULT_CAP else ""
        raise CapError(f"n={n} exceeds the allowed maximum {min(limit, HARD_CAP)}{hint}")


def _save_checkpoint(path: str, key: dict, next_parent: int, report: VerifyReport) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"key": key, "next_parent": next_parent, "report": report.to_json()}, fh, sort_keys=True)
    os.replace(tmp, path)


def sweep(
    suite: str,
    n: int,
    evaluator: str,
    hereditary: str | None = None,
    mode: str | None = None,
    jobs: int = 1,
    extended: bool = False,
    cap: int = DEFAULT_CAP,
    checkpoint: str | None = None,
    checkpoint_every: int = 200,
    progress: Callable[[int, int], None] | None = None,
) -> VerifyReport:
    """Evaluate every connected graph on ``n`` vertices (optionally pre-filtered) and fold the results."""
    _check_n(n, extended, cap)
    started = time.perf_counter()
    gen_cap = max(cap, n)
    parents = connected_graphs(n - 1, hereditary, cap=gen_cap, jobs=jobs) if n > 1 else [Graph.empty(0)]
    report = VerifyReport(suite, n, mode, hereditary)
    key = {"suite": suite, "mode": mode, "n": n, "filter": hereditary, "parents": len(parents)}
    start = 0
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            saved = json.load(fh)
        if saved.get("key") == key:
            start = saved["next_parent"]
            report = VerifyReport.from_json(saved["report"])
    tasks = [(p.to_g6() if p.n else "", hereditary, evaluator) for p in parents[start:]]

    def fold(results):
        done = start
        for res in results:
            report.absorb(res)
            done += 1
            if checkpoint and (done % checkpoint_every == 0 or done == len(parents)):
                _save_checkpoint(checkpoint, key, done, report)
            if progress:
                progress(done, len(parents))

    if jobs <= 1 or len(tasks) < 2:
        fold(map(_parent_job, tasks))
    else:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            fold(pool.imap(_parent_job, tasks, chunksize=max(1, len(tasks) // (jobs * 32))))
    if checkpoint and not tasks:
        _save_checkpoint(checkpoint, key, len(parents), report)
    report.wall_time = time.perf_counter() - started
    return report


def count_non_e_positive(n: int, jobs: int = 1, **kw) -> VerifyReport:
    return sweep("counts", n, "counts", jobs=jobs, **kw)


def verify_conjecture(n: int, mode: str = "claw-net-free-positive", jobs: int = 1, **kw) -> VerifyReport:
    if mode not in CONJECTURE_MODES:
        raise ValueError(f"unknown mode {mode!r}; known: {', '.join(CONJECTURE_MODES)}")
    # claw- and net-freeness are hereditary, so that sweep only walks that universe
    hereditary = "claw-net-free" if mode == "claw-net-free-positive" else None
    return sweep("conjecture", n, mode, hereditary=hereditary, mode=mode, jobs=jobs, **kw)


def verify_structure_theorems(n: int, jobs: int = 1, **kw) -> VerifyReport:
    return sweep("structure", n, "structure", jobs=jobs, **kw)


def verify_classes(n: int, jobs: int = 1, **kw) -> VerifyReport:
    return sweep("classes", n, "classes", jobs=jobs, **kw)


def verify_positivity(n: int, jobs: int = 1, **kw) -> VerifyReport:
    return sweep("positivity", n, "positivity", jobs=jobs, **kw)


def run_suite(suite: str, n: int, mode: str | None = None, jobs: int = 1, **kw) -> VerifyReport:
    if suite == "counts":
        return count_non_e_positive(n, jobs, **kw)
    if suite == "conjecture":
        return verify_conjecture(n, mode or CONJECTURE_MODES[0], jobs, **kw)
    if suite == "structure":
        return verify_structure_theorems(n, jobs, **kw)
    if suite == "classes":
        return verify_classes(n, jobs, **kw)
    if suite == "positivity":
        return verify_positivity(n, jobs, **kw)
    raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
