"""Single-pass extraction of motif-transition statistics from an event stream.

The scan keeps a list of active transition processes. Each incoming event
retires the processes it finds expired (older than the time limit ``delta``)
or size-saturated (``l_max`` events), extends every remaining process whose
node set it touches, and starts a new process if it extended none (a cold
event). Probabilities, exponential rates, cold-event degree/timestamp data
and the mean final-motif edge count are derived from the collected counts.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .codec import STOP, MotifCode, Pair, _StopState
from .events import Event, TemporalGraph, static_projection

PairsKey = tuple[Pair, ...]


class TransitionKey(NamedTuple):
    """One transition type: a source code and its successor (or STOP)."""

    src: MotifCode
    dst: MotifCode | _StopState


@dataclass
class ProcessRecord:
    """Trace of one finished transition process (kept only on request)."""

    events: list[Event]
    code: MotifCode
    stop_reason: str  # "size", "time" or "end"

    @property
    def start_t(self) -> int:
        return self.events[0].t

    @property
    def end_t(self) -> int:
        return self.events[-1].t


@dataclass
class TransitionProfile:
    """The transition statistics of one input graph.

    ``counts`` includes stop keys (``TransitionKey(code, STOP)``); ``rates``
    and ``delta_t_sums`` only cover real transitions. ``probs`` rows list the
    non-stop successors; the stop mass is the implicit remainder to 1.
    """

    l_max: int
    delta: int
    k_ce: list[tuple[int, int]]
    t_ce: list[int]
    ce_edge_weights: list[int]
    probs: dict[MotifCode, dict[MotifCode, float]]
    rates: dict[TransitionKey, float]
    counts: dict[TransitionKey, int]
    delta_t_sums: dict[TransitionKey, tuple[int, int]]
    mu: float
    cold_event_count: int
    input_event_count: int
    input_edge_count: int
    processes: list[ProcessRecord] | None = field(default=None, compare=False)

    def stop_probability(self, code: MotifCode) -> float:
        row = self.probs.get(code)
        if not row:
            return 1.0
        return max(0.0, 1.0 - sum(row.values()))  # guard float rounding


class _Proc:
    """One active process during the scan."""

    __slots__ = ("digit_of", "pairs", "t_last", "events")

    def __init__(self, ev: Event, keep_events: bool):
        self.digit_of = {ev.src: 0, ev.dst: 1}
        self.pairs: PairsKey = ((0, 1),)
        self.t_last = ev.t
        self.events: list[Event] | None = [ev] if keep_events else None

    def extend(self, ev: Event) -> None:
        digit_of = self.digit_of
        s = digit_of.setdefault(ev.src, len(digit_of))
        d = digit_of.setdefault(ev.dst, len(digit_of))
        self.pairs = self.pairs + ((s, d),)
        self.t_last = ev.t
        if self.events is not None:
            self.events.append(ev)


def extract_profile(g: TemporalGraph, delta: int, l_max: int,
                    keep_processes: bool = False) -> TransitionProfile:
    """Run the scan over ``g`` and return the assembled profile.

    One forward pass; per-event work is proportional to the number of
    currently active processes.
    """
    if l_max < 2:
        raise ValueError(f"l_max must be at least 2, got {l_max}")
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    if not g.events:
        raise ValueError("cannot extract a profile from an empty graph")

    counts: Counter[tuple[PairsKey, PairsKey | _StopState]] = Counter()
    dt_sum: Counter[tuple[PairsKey, PairsKey]] = Counter()
    dt_n: Counter[tuple[PairsKey, PairsKey]] = Counter()
    edge_total = 0  # final-motif static edges, summed over processes
    proc_total = 0
    cold: list[Event] = []
    records: list[ProcessRecord] | None = [] if keep_processes else None

    def retire(proc: _Proc, at_end: bool) -> None:
        nonlocal edge_total, proc_total
        counts[(proc.pairs, STOP)] += 1
        edge_total += len(set(proc.pairs))
        proc_total += 1
        if records is not None:
            if len(proc.pairs) >= l_max:
                reason = "size"
            else:
                reason = "end" if at_end else "time"
            records.append(ProcessRecord(
                events=list(proc.events or ()),
                code=MotifCode(proc.pairs),
                stop_reason=reason,
            ))

    active: list[_Proc] = []
    for ev in g.events:
        u, v, t = ev
        extended = False
        survivors: list[_Proc] = []
        for proc in active:
            if len(proc.pairs) >= l_max or t - proc.t_last > delta:
                retire(proc, at_end=False)
                continue
            digit_of = proc.digit_of
            if u in digit_of or v in digit_of:
                old_pairs = proc.pairs
                gap = t - proc.t_last
                proc.extend(ev)
                key = (old_pairs, proc.pairs)
                counts[key] += 1
                dt_sum[key] += gap
                dt_n[key] += 1
                extended = True
            survivors.append(proc)
        active = survivors
        if not extended:
            cold.append(ev)
            active.append(_Proc(ev, keep_processes))
    for proc in active:
        retire(proc, at_end=True)

    # Cold-event degree sequence and per-edge weights over the projection.
    weights = Counter((e.src, e.dst) for e in cold)
    in_deg: Counter[int] = Counter()
    out_deg: Counter[int] = Counter()
    for (cu, cv) in weights:
        out_deg[cu] += 1
        in_deg[cv] += 1
    nodes = sorted(set(in_deg) | set(out_deg))
    k_ce = [(in_deg[n], out_deg[n]) for n in nodes]
    ce_edge_weights = sorted(weights.values())

    # Row denominators: stops at the code plus all outgoing transitions.
    out_by_src: dict[PairsKey, list[tuple[PairsKey, int]]] = {}
    stop_by_src: dict[PairsKey, int] = {}
    for (src, dst), c in counts.items():
        if dst is STOP:
            stop_by_src[src] = c
        else:
            out_by_src.setdefault(src, []).append((dst, c))

    probs: dict[MotifCode, dict[MotifCode, float]] = {}
    rates: dict[TransitionKey, float] = {}
    final_counts: dict[TransitionKey, int] = {}
    final_dt: dict[TransitionKey, tuple[int, int]] = {}
    code_cache: dict[PairsKey, MotifCode] = {}

    def as_code(pairs: PairsKey) -> MotifCode:
        code = code_cache.get(pairs)
        if code is None:
            code = code_cache[pairs] = MotifCode(pairs)
        return code

    for src_pairs in sorted(out_by_src):
        src = as_code(src_pairs)
        outgoing = sorted(out_by_src[src_pairs])
        denom = stop_by_src.get(src_pairs, 0) + sum(c for _, c in outgoing)
        row: dict[MotifCode, float] = {}
        for dst_pairs, c in outgoing:
            dst = as_code(dst_pairs)
            key = TransitionKey(src, dst)
            row[dst] = c / denom
            final_counts[key] = c
            s, n = dt_sum[(src_pairs, dst_pairs)], dt_n[(src_pairs, dst_pairs)]
            final_dt[key] = (s, n)
            mean_dt = s / n
            if mean_dt == 0:
                mean_dt = 1.0  # floor at the 1-second data resolution
            rates[key] = 1.0 / mean_dt
        probs[src] = row
    for src_pairs, c in sorted(stop_by_src.items()):
        final_counts[TransitionKey(as_code(src_pairs), STOP)] = c

    return TransitionProfile(
        l_max=l_max,
        delta=delta,
        k_ce=k_ce,
        t_ce=[e.t for e in cold],
        ce_edge_weights=ce_edge_weights,
        probs=probs,
        rates=rates,
        counts=final_counts,
        delta_t_sums=final_dt,
        mu=edge_total / proc_total,
        cold_event_count=len(cold),
        input_event_count=len(g.events),
        input_edge_count=len(static_projection(g)),
        processes=records,
    )


def cold_event_fraction(profile: TransitionProfile) -> float:
    return profile.cold_event_count / profile.input_event_count


def observed_transition_type_count(profile: TransitionProfile) -> int:
    """Distinct observed transition types, stop keys excluded."""
    return sum(1 for key, c in profile.counts.items()
               if key.dst is not STOP and c >= 1)


PROFILE_FORMAT_VERSION = 1
_STOP_KEY = "stop"


def profile_to_dict(profile: TransitionProfile) -> dict:
    """JSON-ready form; code keys rendered as strings, stop keyed ``"stop"``."""
    counts_nested: dict[str, dict[str, int]] = {}
    for key, c in profile.counts.items():
        dst = _STOP_KEY if key.dst is STOP else key.dst.render()
        counts_nested.setdefault(key.src.render(), {})[dst] = c
    rates_nested: dict[str, dict[str, float]] = {}
    dt_nested: dict[str, dict[str, list[int]]] = {}
    for key, lam in profile.rates.items():
        rates_nested.setdefault(key.src.render(), {})[key.dst.render()] = lam
    for key, (s, n) in profile.delta_t_sums.items():
        dt_nested.setdefault(key.src.render(), {})[key.dst.render()] = [s, n]
    return {
        "version": PROFILE_FORMAT_VERSION,
        "l_max": profile.l_max,
        "delta": profile.delta,
        "mu": profile.mu,
        "cold_event_count": profile.cold_event_count,
        "input_event_count": profile.input_event_count,
        "input_edge_count": profile.input_edge_count,
        "k_ce": [list(p) for p in profile.k_ce],
        "t_ce": list(profile.t_ce),
        "ce_edge_weights": list(profile.ce_edge_weights),
        "probs": {src.render(): {dst.render(): p for dst, p in row.items()}
                  for src, row in profile.probs.items()},
        "rates": rates_nested,
        "counts": counts_nested,
        "delta_t": dt_nested,
    }


def profile_from_dict(doc: dict) -> TransitionProfile:
    version = doc.get("version")
    if version != PROFILE_FORMAT_VERSION:
        raise ValueError(f"unsupported profile version {version!r}")
    probs = {
        MotifCode.from_string(src): {
            MotifCode.from_string(dst): p for dst, p in sorted(row.items())
        }
        for src, row in sorted(doc["probs"].items())
    }
    counts: dict[TransitionKey, int] = {}
    for src, row in sorted(doc["counts"].items()):
        src_code = MotifCode.from_string(src)
        for dst, c in sorted(row.items()):
            dst_state = STOP if dst == _STOP_KEY else MotifCode.from_string(dst)
            counts[TransitionKey(src_code, dst_state)] = c
    rates = {
        TransitionKey(MotifCode.from_string(src), MotifCode.from_string(dst)): lam
        for src, row in sorted(doc["rates"].items())
        for dst, lam in sorted(row.items())
    }
    delta_t_sums = {
        TransitionKey(MotifCode.from_string(src), MotifCode.from_string(dst)):
            (entry[0], entry[1])
        for src, row in sorted(doc["delta_t"].items())
        for dst, entry in sorted(row.items())
    }
    return TransitionProfile(
        l_max=doc["l_max"],
        delta=doc["delta"],
        k_ce=[tuple(p) for p in doc["k_ce"]],
        t_ce=list(doc["t_ce"]),
        ce_edge_weights=list(doc["ce_edge_weights"]),
        probs=probs,
        rates=rates,
        counts=counts,
        delta_t_sums=delta_t_sums,
        mu=doc["mu"],
        cold_event_count=doc["cold_event_count"],
        input_event_count=doc["input_event_count"],
        input_edge_count=doc["input_edge_count"],
    )


def save_profile(profile: TransitionProfile, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        json.dump(profile_to_dict(profile), fh, indent=1)
        fh.write("\n")


def load_profile(path) -> TransitionProfile:
    with open(path, "r", encoding="ascii") as fh:
        return profile_from_dict(json.load(fh))
