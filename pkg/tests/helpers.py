"""Shared test utilities: independent oracles and small builders.

The oracles restate the definitions from scratch (per-process first-match
trajectories, exhaustive ordered-subset enumeration) so they share no code
path with the implementations they check.
"""

from __future__ import annotations

import random
from collections import Counter

from motifgen import STOP, Event, MotifCode, TemporalGraph, TransitionProfile, encode
from motifgen.extraction import TransitionKey


def random_stream(rng: random.Random, n_events: int, n_nodes: int,
                  t_max: int) -> TemporalGraph:
    events = []
    for _ in range(n_events):
        u = rng.randrange(n_nodes)
        v = rng.randrange(n_nodes)
        while v == u:
            v = rng.randrange(n_nodes)
        events.append(Event(u, v, rng.randrange(t_max)))
    return TemporalGraph.from_events(events)


# ---------------------------------------------------------------- extraction

def _trajectory(events, seed_idx: int, delta: int, l_max: int) -> list[int]:
    """Per-process first-match growth: from the seed event, repeatedly take
    the earliest strictly-later event that touches the node set and arrives
    within ``delta``, until the size limit or the window runs dry."""
    nodes = {events[seed_idx].src, events[seed_idx].dst}
    traj = [seed_idx]
    while len(traj) < l_max:
        last = events[traj[-1]]
        found = None
        for j in range(traj[-1] + 1, len(events)):
            e = events[j]
            if e.t - last.t > delta:
                break
            if e.src in nodes or e.dst in nodes:
                found = j
                break
        if found is None:
            break
        traj.append(found)
        nodes.add(events[found].src)
        nodes.add(events[found].dst)
    return traj


def oracle_extract(g: TemporalGraph, delta: int, l_max: int) -> dict:
    """Definition-level re-derivation of the transition statistics.

    An event is cold iff no earlier-seeded trajectory contains it; every
    cold event seeds one trajectory computed independently by first-match.
    """
    events = g.events
    hot: set[int] = set()
    cold_idxs: list[int] = []
    trajectories: list[list[int]] = []
    for i in range(len(events)):
        if i in hot:
            continue
        cold_idxs.append(i)
        traj = _trajectory(events, i, delta, l_max)
        trajectories.append(traj)
        hot.update(traj[1:])

    counts: Counter = Counter()
    dt_sums: Counter = Counter()
    dt_ns: Counter = Counter()
    edge_counts = []
    for traj in trajectories:
        evs = [events[j] for j in traj]
        codes = [encode(evs[:k]) for k in range(1, len(evs) + 1)]
        for k in range(len(codes) - 1):
            key = (codes[k], codes[k + 1])
            counts[key] += 1
            dt_sums[key] += evs[k + 1].t - evs[k].t
            dt_ns[key] += 1
        counts[(codes[-1], STOP)] += 1
        edge_counts.append(codes[-1].static_edge_count())

    return {
        "cold_events": [events[i] for i in cold_idxs],
        "counts": dict(counts),
        "delta_t_sums": {k: (dt_sums[k], dt_ns[k]) for k in dt_ns},
        "mu": sum(edge_counts) / len(edge_counts) if edge_counts else None,
    }


def profile_counts_as_oracle(profile: TransitionProfile) -> dict:
    """Profile counts in the oracle's key convention for direct comparison."""
    out = {}
    for key, c in profile.counts.items():
        out[(key.src, STOP if key.dst is STOP else key.dst)] = c
    return out


# ------------------------------------------------------------------ counting

def oracle_count(g: TemporalGraph, l: int, delta_c: int,
                 inclusive: bool = True) -> dict[MotifCode, int]:
    """Exhaustive filter over all ordered ``l``-subsets of the event list."""
    from itertools import combinations

    events = g.events
    counts: Counter = Counter()
    for subset in combinations(range(len(events)), l):
        evs = [events[i] for i in subset]
        ok = True
        for a, b in zip(evs, evs[1:]):
            gap = b.t - a.t
            if gap <= 0 or gap > delta_c or (not inclusive and gap == delta_c):
                ok = False
                break
        if not ok:
            continue
        nodes = {evs[0].src, evs[0].dst}
        for e in evs[1:]:
            if e.src not in nodes and e.dst not in nodes:
                ok = False
                break
            nodes.add(e.src)
            nodes.add(e.dst)
        if not ok:
            continue
        counts[encode(evs)] += 1
    return dict(counts)


# ----------------------------------------------------------------- profiles

def make_profile(probs: dict[str, dict[str, float]],
                 rates: dict[tuple[str, str], float] | float = 1.0,
                 k_ce: list[tuple[int, int]] | None = None,
                 t_ce: list[int] | None = None,
                 ce_edge_weights: list[int] | None = None,
                 l_max: int = 4, delta: int = 3600, mu: float = 2.0,
                 input_event_count: int | None = None,
                 input_edge_count: int = 10) -> TransitionProfile:
    """Assemble a hand-written profile from code strings."""
    code_probs = {
        MotifCode.from_string(src): {
            MotifCode.from_string(dst): p for dst, p in row.items()
        }
        for src, row in probs.items()
    }
    code_rates: dict[TransitionKey, float] = {}
    for src, row in probs.items():
        for dst in row:
            key = TransitionKey(MotifCode.from_string(src),
                                MotifCode.from_string(dst))
            if isinstance(rates, dict):
                code_rates[key] = rates.get((src, dst), 1.0)
            else:
                code_rates[key] = rates
    t_ce = t_ce if t_ce is not None else [0]
    k_ce = k_ce if k_ce is not None else [(0, 1), (1, 0)]
    if ce_edge_weights is not None:
        weights = ce_edge_weights
    else:  # spread the timestamps evenly over the edges
        n_edges = sum(o for _i, o in k_ce)
        base, rem = divmod(len(t_ce), n_edges)
        weights = [base + 1] * rem + [base] * (n_edges - rem)
    return TransitionProfile(
        l_max=l_max,
        delta=delta,
        k_ce=k_ce,
        t_ce=list(t_ce),
        ce_edge_weights=weights,
        probs=code_probs,
        rates=code_rates,
        counts={},
        delta_t_sums={},
        mu=mu,
        cold_event_count=len(t_ce),
        input_event_count=(input_event_count if input_event_count is not None
                           else len(t_ce)),
        input_edge_count=input_edge_count,
    )
