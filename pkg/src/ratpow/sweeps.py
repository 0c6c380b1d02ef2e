"""Asymptotic sweep harness: per-index invariant records and deterministic emitters.

A sweep walks the canonically indexed filtration of an ideal (rational
powers, or the symbolic family of a squarefree ideal), computes one exact
invariant per index, and appends summary records with the predicted limit
or the exact slope estimate from the last two points.  Emitted bytes are
deterministic: timings are zeroed unless explicitly requested, and records
are sorted by index before serialization.
"""

from __future__ import annotations

import concurrent.futures
import json
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .homology import lc_length_scaled, local_cohomology_table
from .ideals import MonomialIdeal, associated_primes
from .filtrations import symbolic_family
from .polyhedra import analytic_spread
from .rational_powers import rational_power, rees_valuations
from .stanley import StanleyInstance, sdepth_exact

SELECTORS = ("depth", "reg", "sdepth", "ass", "lclen", "gens")
FAMILIES = ("rational", "symbolic")


@dataclass(frozen=True)
class SweepConfig:
    """Configuration of one sweep run."""

    ideal_path: str
    selector: str
    n_start: int = 1
    n_stop: int = 12
    emit: str = "csv"
    jobs: int = 1
    family: str = "rational"
    lc_index: int = 0
    out: str | None = None
    timings: bool = False

    def __post_init__(self):
        if self.selector not in SELECTORS:
            raise ParseError(f"unknown invariant selector {self.selector!r}")
        if self.family not in FAMILIES:
            raise ParseError(f"unknown family {self.family!r}")
        if self.emit not in ("csv", "json"):
            raise ParseError(f"unknown emit format {self.emit!r}")
        if self.n_stop < self.n_start or self.n_start < 1:
            raise ParseError("empty or invalid index range")
        if self.jobs < 1:
            raise ParseError("jobs must be positive")


@dataclass(frozen=True)
class ExperimentRecord:
    """One exact measurement: invariant value at one filtration index."""

    n: int
    index: str
    invariant: str
    value: int | str
    ms: float = 0.0


def _ass_label(ideal: MonomialIdeal) -> str:
    primes = associated_primes(ideal)
    labels = sorted("*".join(ideal.var_names[j] for j in p.sorted_support())
                    for p in primes)
    return "|".join(labels)


def sweep_records(ideal: MonomialIdeal, selector: str, n_values: Sequence[int],
                  family: str = "rational", lc_index: int = 0,
                  jobs: int = 1) -> list[ExperimentRecord]:
    """Records for one invariant over the chosen filtration indices."""
    if family == "rational":
        base = ideal
        den = rees_valuations(ideal).e
    else:
        fam = symbolic_family(ideal)
        base = fam.ideal
        den = fam.denominator

    name = f"lclen_i{lc_index}" if selector == "lclen" else selector

    def one(n: int) -> ExperimentRecord:
        start = time.perf_counter()
        item = rational_power(base, Fraction(n, den))
        if selector == "depth":
            value: int | str = local_cohomology_table(item).depth
        elif selector == "reg":
            value = local_cohomology_table(item).regularity + 1
        elif selector == "sdepth":
            value = sdepth_exact(StanleyInstance("quotient", item))
        elif selector == "ass":
            value = _ass_label(item)
        elif selector == "lclen":
            value = lc_length_scaled(base, lc_index, n, den=den)
        elif selector == "gens":
            value = len(item.gens)
        else:
            raise ParseError(f"unknown invariant selector {selector!r}")
        ms = (time.perf_counter() - start) * 1000.0
        return ExperimentRecord(n, f"{n}/{den}", name, value, ms)

    if jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(one, n_values))
    else:
        records = [one(n) for n in n_values]
    records.sort(key=lambda r: r.n)
    records.extend(_summary_records(ideal, base, records, selector, name, den))
    return records


def _summary_records(ideal: MonomialIdeal, base: MonomialIdeal,
                     records: list[ExperimentRecord], selector: str,
                     name: str, den: int) -> list[ExperimentRecord]:
    if not records:
        return []
    last = records[-1]
    out = []
    if selector == "depth":
        predicted = ideal.dim - analytic_spread(base)
        out.append(ExperimentRecord(last.n, last.index, f"{name}_limit_predicted",
                                    predicted))
    elif selector == "reg" and len(records) >= 2:
        # difference within one residue class mod den: quasi-linear sequences
        # have periodic intercepts, so consecutive indices can cancel the slope
        same_residue = [r for r in records[:-1] if (last.n - r.n) % den == 0]
        prev = same_residue[-1] if same_residue else records[-2]
        slope = Fraction(int(last.value) - int(prev.value), last.n - prev.n)
        out.append(ExperimentRecord(last.n, last.index, f"{name}_slope_per_n",
                                    str(slope)))
    elif selector == "lclen" and len(records) >= 2:
        prev = records[-2]
        d = ideal.dim
        slope = Fraction(int(last.value) - int(prev.value),
                         last.n ** d - prev.n ** d)
        out.append(ExperimentRecord(last.n, last.index, f"{name}_slope_per_n{d}",
                                    str(slope)))
    return out


# ---------------------------------------------------------------------------
# emitters

CSV_HEADER = "n,index,invariant,value,ms"


def emit(records: Sequence[ExperimentRecord], fmt: str = "csv",
         include_timings: bool = False) -> bytes:
    """Serialize records deterministically; timings are zeroed by default so
    identical configurations give identical bytes."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in records:
            ms = repr(r.ms) if include_timings else "0"
            lines.append(f"{r.n},{r.index},{r.invariant},{r.value},{ms}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        payload = [{"n": r.n, "index": r.index, "invariant": r.invariant,
                    "value": r.value, "ms": r.ms if include_timings else 0}
                   for r in records]
        return (json.dumps(payload, separators=(",", ":")) + "\n").encode()
    raise ParseError(f"unknown emit format {fmt!r}")


def parse_records(data: bytes | str, fmt: str = "csv") -> list[ExperimentRecord]:
    text = data.decode() if isinstance(data, bytes) else data
    records = []
    if fmt == "csv":
        lines = [ln for ln in text.splitlines() if ln]
        if not lines or lines[0] != CSV_HEADER:
            raise ParseError("missing CSV header")
        for ln in lines[1:]:
            parts = ln.split(",")
            if len(parts) != 5:
                raise ParseError(f"bad CSV row {ln!r}")
            n, index, invariant, value, ms = parts
            records.append(ExperimentRecord(
                int(n), index, invariant,
                int(value) if _is_int(value) else value, float(ms)))
        return records
    if fmt == "json":
        for item in json.loads(text):
            records.append(ExperimentRecord(item["n"], item["index"],
                                            item["invariant"], item["value"],
                                            float(item["ms"])))
        return records
    raise ParseError(f"unknown emit format {fmt!r}")


def _is_int(text: str) -> bool:
    return text.lstrip("-").isdigit()


def normalized(records: Sequence[ExperimentRecord]) -> list[ExperimentRecord]:
    """Records as the default emitter writes them (timings zeroed)."""
    return [replace(r, ms=0.0) for r in records]


def run_sweep(config: SweepConfig) -> list[ExperimentRecord]:
    from .ideals import ideal_from_doc

    with open(config.ideal_path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    ideal = ideal_from_doc(doc)
    ns = range(config.n_start, config.n_stop + 1)
    return sweep_records(ideal, config.selector, list(ns), family=config.family,
                         lc_index=config.lc_index, jobs=config.jobs)
