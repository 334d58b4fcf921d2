"""Seeded benchmark trials over random connected graphs.

A trial builds one engine on a connected G(n, p) graph, runs k deletions
with one connectivity query after each, and reports one CSV row per
operation: algo,n,m,k_index,op,nanos,h_size.  Timing is opt-in; without
``measure`` the nanos column is 0 so output is a pure function of the
seed.  Trials are independent, so they can run in worker processes.
"""

from __future__ import annotations

import csv
import math
import random
import time
from bisect import bisect_right
from typing import IO, Iterable, Sequence

from .edge_deletion import EdgeDecremental
from .graph import Graph, is_connected
from .tree_variant import TreeDecremental
from .vertex_deletion import LayoutDecremental

__all__ = ["COLUMNS", "gnp_connected", "run_trial", "run_trials", "write_csv"]

COLUMNS = ("algo", "n", "m", "k_index", "op", "nanos", "h_size")

Row = tuple[str, int, int, int, str, int, int]


def _gnp_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    total = n * (n - 1) // 2
    if p <= 0.0 or total == 0:
        return []
    if p >= 1.0:
        return [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]
    # skip-sampling: geometric gaps over the flattened pair index
    offsets = [0] * n
    for i in range(1, n):
        offsets[i] = offsets[i - 1] + (n - i)
    logq = math.log1p(-p)
    edges = []
    idx = -1
    while True:
        idx += 1 + int(math.log(1.0 - rng.random()) / logq)
        if idx >= total:
            break
        u = bisect_right(offsets, idx)
        v = u + 1 + (idx - offsets[u - 1])
        edges.append((u, v))
    return edges


def gnp_connected(n: int, p: float | None = None, seed: int = 0, max_tries: int = 200) -> Graph:
    """A connected G(n, p) sample; resamples until connected."""
    if n < 1:
        raise ValueError("n must be positive")
    if p is None:
        p = min(1.0, 2.0 * math.log(max(n, 2)) / n)
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = Graph(n, _gnp_edges(n, p, rng))
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {max_tries} tries")


def run_trial(
    algo: str,
    n: int,
    k: int,
    seed: int,
    p: float | None = None,
    measure: bool = False,
) -> list[Row]:
    if algo not in ("et", "tree", "layout"):
        raise ValueError(f"unknown algo {algo!r}")
    g = gnp_connected(n, p, seed)
    m = len(g.edges)
    rng = random.Random((seed * 0x9E3779B1 + 0x7F4A7C15) & 0xFFFFFFFF)
    clk = time.perf_counter_ns if measure else (lambda: 0)

    rows: list[Row] = []
    t0 = clk()
    if algo == "et":
        eng = EdgeDecremental(g)
    elif algo == "tree":
        eng = TreeDecremental(g, fast_tree=True)
    else:
        eng = LayoutDecremental(g)
    t1 = clk()

    def h_size() -> int:
        return eng.h_size() if algo == "layout" else eng.h.live_count

    rows.append((algo, n, m, 0, "build", t1 - t0, h_size()))

    if algo == "layout":
        if k > n:
            raise ValueError(f"cannot delete {k} of {n} vertices")
        targets: Sequence = rng.sample(range(1, n + 1), k)
        live = set(range(1, n + 1))
    else:
        if k > m:
            raise ValueError(f"cannot delete {k} of {m} edges")
        targets = rng.sample(sorted(g.edges), k)
        live = set(range(1, n + 1))

    for i, tgt in enumerate(targets, start=1):
        if algo == "layout":
            t0 = clk()
            eng.delete_vertex(tgt)
            t1 = clk()
            live.discard(tgt)
            op = "delv"
        else:
            t0 = clk()
            eng.delete_edge(*tgt)
            t1 = clk()
            op = "delete"
        rows.append((algo, n, m, i, op, t1 - t0, h_size()))
        pool = sorted(live)
        u = pool[rng.randrange(len(pool))]
        v = pool[rng.randrange(len(pool))]
        t0 = clk()
        eng.connected(u, v)
        t1 = clk()
        rows.append((algo, n, m, i, "query", t1 - t0, h_size()))
    return rows


def _trial_worker(args: tuple) -> list[Row]:
    return run_trial(*args)


def run_trials(
    algo: str,
    n: int,
    k: int,
    seed: int,
    p: float | None = None,
    measure: bool = False,
    trials: int = 1,
    jobs: int = 1,
) -> list[Row]:
    """Concatenated rows of ``trials`` independent trials, in trial order.

    Trial t uses seed ``seed + t``.  With jobs > 1 the trials run in worker
    processes; the output order stays deterministic either way.
    """
    params = [(algo, n, k, seed + t, p, measure) for t in range(trials)]
    if jobs <= 1 or trials <= 1:
        batches = [_trial_worker(a) for a in params]
    else:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(min(jobs, trials)) as pool:
            batches = pool.map(_trial_worker, params)
    return [row for batch in batches for row in batch]


def write_csv(rows: Iterable[Row], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(COLUMNS)
    w.writerows(rows)
