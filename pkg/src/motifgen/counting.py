"""Exact counting of l-event temporal motif instances.

An instance is an ordered tuple of ``l`` events with strictly increasing
timestamps, every consecutive gap within the ceiling ``delta_c``, and each
event sharing a node with the earlier ones. Instances may overlap (they are
event subsets, not a partition). Enumeration backtracks from every root
event over a per-node time index, assigning canonical digits incrementally
so each completed instance lands directly on its type code.
"""

from __future__ import annotations

import os
from bisect import bisect_right
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .codec import MotifCode, Pair
from .events import TemporalGraph

MAX_COUNT_EVENTS = 4  # l >= 5 counting is out of scope

WORKERS_ENV_VAR = "MOTIFGEN_WORKERS"


@dataclass
class SpectrumCounts:
    """Per-type instance counts for one (l, delta_c) setting."""

    l: int
    delta_c: int
    counts: dict[MotifCode, int]
    inclusive: bool = True

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def by_string(self) -> dict[str, int]:
        return {code.render(): c for code, c in sorted(
            self.counts.items(), key=lambda kv: kv[0].pairs)}


def _count_roots(src: list[int], dst: list[int], ts: list[int],
                 node_events: dict[int, list[int]], l: int, delta_c: int,
                 inclusive: bool, roots: range) -> Counter:
    counts: Counter[tuple[Pair, ...]] = Counter()
    # DFS state shared across roots; digits assigned on the way down,
    # unwound on the way up.
    digit_of: dict[int, int] = {}
    motif_nodes: list[int] = []

    def candidates(last_idx: int) -> set[int]:
        t_last = ts[last_idx]
        bound = t_last + delta_c
        out: set[int] = set()
        for node in motif_nodes:
            evs = node_events[node]
            j = bisect_right(evs, last_idx)
            while j < len(evs):
                idx = evs[j]
                t = ts[idx]
                if t > bound or (not inclusive and t == bound):
                    break
                if t > t_last:  # equal timestamps never chain
                    out.add(idx)
                j += 1
        return out

    def grow(last_idx: int, pairs: tuple[Pair, ...], depth: int) -> None:
        if depth + 1 == l:
            # Leaf: a candidate always touches the motif, so at most one
            # endpoint is new and the fresh digit can be read off directly.
            nd = len(digit_of)
            for idx in candidates(last_idx):
                u, v = src[idx], dst[idx]
                counts[pairs + ((digit_of.get(u, nd), digit_of.get(v, nd)),)] += 1
            return
        for idx in candidates(last_idx):
            u, v = src[idx], dst[idx]
            added = []
            if u not in digit_of:
                digit_of[u] = len(digit_of)
                motif_nodes.append(u)
                added.append(u)
            if v not in digit_of:
                digit_of[v] = len(digit_of)
                motif_nodes.append(v)
                added.append(v)
            grow(idx, pairs + ((digit_of[u], digit_of[v]),), depth + 1)
            for node in added:
                del digit_of[node]
                motif_nodes.pop()

    for root in roots:
        u, v = src[root], dst[root]
        digit_of[u] = 0
        digit_of[v] = 1
        motif_nodes.append(u)
        motif_nodes.append(v)
        grow(root, ((0, 1),), 1)
        digit_of.clear()
        motif_nodes.clear()
    return counts


_WORKER_ARGS = None  # populated in forked workers


def _worker_init(args):
    global _WORKER_ARGS
    _WORKER_ARGS = args


def _worker_run(roots: range) -> Counter:
    src, dst, ts, node_events, l, delta_c, inclusive = _WORKER_ARGS
    return _count_roots(src, dst, ts, node_events, l, delta_c, inclusive, roots)


def count_motifs(g: TemporalGraph, l: int, delta_c: int,
                 inclusive: bool = True, workers: int | None = None) -> SpectrumCounts:
    """Count all ``l``-event motif instances of ``g`` under ``delta_c``.

    ``inclusive`` counts gaps equal to ``delta_c`` as inside the window.
    ``workers`` > 1 splits the root events over processes (associative
    merge, same result); defaults to the MOTIFGEN_WORKERS env var or 1.
    """
    if not 2 <= l <= MAX_COUNT_EVENTS:
        raise ValueError(f"l must be in [2, {MAX_COUNT_EVENTS}], got {l}")
    if delta_c <= 0:
        raise ValueError(f"delta_c must be positive, got {delta_c}")
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV_VAR, "1"))

    src = [e.src for e in g.events]
    dst = [e.dst for e in g.events]
    ts = [e.t for e in g.events]
    node_events: dict[int, list[int]] = {}
    for idx in range(len(src)):
        node_events.setdefault(src[idx], []).append(idx)
        node_events.setdefault(dst[idx], []).append(idx)

    n = len(src)
    if workers > 1 and n > 1:
        args = (src, dst, ts, node_events, l, delta_c, inclusive)
        chunk = max(1, (n + workers - 1) // workers)
        ranges = [range(i, min(i + chunk, n)) for i in range(0, n, chunk)]
        merged: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers, initializer=_worker_init,
                                 initargs=(args,)) as pool:
            for part in pool.map(_worker_run, ranges):
                merged.update(part)
        raw = merged
    else:
        raw = _count_roots(src, dst, ts, node_events, l, delta_c, inclusive,
                           range(n))

    return SpectrumCounts(
        l=l,
        delta_c=delta_c,
        counts={MotifCode(pairs): c for pairs, c in raw.items()},
        inclusive=inclusive,
    )
