"""Batch runner: generate a corpus, colour it, verify, compare with exact chi."""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .bound import color_budget
from .colorer import ColorOptions, color_p5free, verify_certificate
from .errors import GenerationError, IntegrityError, OracleBudgetError, UsageError
from .generators import GeneratorSpec, gen_rejection, gen_split, gen_substitution
from .io import to_graph6
from .oracles import P5Witness, exact_chromatic, find_induced_p5

CSV_VERSION = "p5color-experiment/1"
COLUMNS = ["graph_id", "kind", "seed", "n", "m", "omega", "chi", "colors", "budget", "verified", "rules", "status", "graph6"]


@dataclass
class ExperimentOptions:
    exact_max_n: int = 34
    oracle_budget: Optional[int] = None
    color: ColorOptions = field(default_factory=ColorOptions)
    timing: bool = False


@dataclass
class ExperimentRow:
    graph_id: str
    kind: str
    seed: int
    n: int = 0
    m: int = 0
    omega: int = 0
    chi: Union[int, str] = "skipped"
    colors: int = 0
    budget: int = 0
    verified: bool = False
    rules: str = ""
    status: str = "ok"
    graph6: str = ""
    runtime: float = 0.0

    def cells(self, timing: bool = False) -> List[str]:
        out = [str(getattr(self, c)) for c in COLUMNS]
        if timing:
            out.append(f"{self.runtime:.4f}")
        return out


@dataclass
class ExperimentResult:
    rows: List[ExperimentRow]
    certificates: Dict[str, dict]


def _draw(rng: random.Random, value):
    # [lo, hi] pairs are sampled per graph: ints uniformly, floats uniformly
    if isinstance(value, list) and len(value) == 2:
        lo, hi = value
        if isinstance(lo, int) and isinstance(hi, int):
            return rng.randint(lo, hi)
        return round(rng.uniform(float(lo), float(hi)), 4)
    return value


def expand_corpus(entries: Iterable[dict]) -> List[Tuple[str, GeneratorSpec]]:
    """Turn ``[[corpus]]`` config entries into ``(graph_id, spec)`` pairs."""
    out = []
    for entry in entries:
        entry = dict(entry)
        kind = entry.pop("kind")
        count = int(entry.pop("count", 1))
        seed = int(entry.pop("seed", 0))
        name = entry.pop("name", kind)
        for i in range(count):
            rng = random.Random(f"{name}:{seed + i}")
            params = {k: _draw(rng, v) for k, v in sorted(entry.items())}
            out.append((f"{name}-{i:04d}", GeneratorSpec(kind, seed + i, params)))
    return out


def _generate(spec: GeneratorSpec):
    if spec.kind == "substitution":
        G, omega = gen_substitution(spec)
        cap = spec.params.get("max_omega")
        if cap is not None and omega > int(cap):
            raise GenerationError(f"clique number {omega} above max_omega={cap}")
        return G
    if spec.kind == "split":
        return gen_split(spec)
    return gen_rejection(spec)


def _rules(counts: Dict[str, int]) -> str:
    return ";".join(f"{k}={v}" for k, v in counts.items())


def run_row(graph_id: str, spec: GeneratorSpec, opt: ExperimentOptions) -> Tuple[ExperimentRow, Optional[dict]]:
    row = ExperimentRow(graph_id, spec.kind, spec.seed)
    start = time.perf_counter()
    try:
        G = _generate(spec)
    except GenerationError:
        G = None
    if G is None:
        row.status = "not-generated"
        return row, None
    row.n, row.m, row.graph6 = G.n, G.num_edges, to_graph6(G)
    wit = find_induced_p5(G)
    if wit is not None:
        raise IntegrityError(f"{graph_id}: generator emitted a graph with induced P5 {wit.path}")
    try:
        cert = color_p5free(G, opt.color)
    except OracleBudgetError:
        row.status = "oracle-budget"
        return row, None
    if isinstance(cert, P5Witness):
        raise IntegrityError(f"{graph_id}: witness {cert.path} on a P5-free graph")
    row.omega, row.colors, row.budget = cert.omega, cert.num_colors, cert.budget
    row.rules = _rules(cert.trace.rule_counts())
    rep = verify_certificate(G, cert)
    row.verified = rep.ok
    if not rep.ok:
        row.status = f"verify-failed: {rep.message}"
    if G.n <= opt.exact_max_n or cert.omega <= 4:
        try:
            row.chi = exact_chromatic(G, opt.oracle_budget)[0]
        except OracleBudgetError:
            row.chi = "budget-exceeded"
    if isinstance(row.chi, int) and not row.chi <= row.colors <= row.budget:
        raise IntegrityError(f"{graph_id}: chi={row.chi}, colors={row.colors}, budget={row.budget}")
    if row.colors > row.budget:
        raise IntegrityError(f"{graph_id}: {row.colors} colours exceed budget {row.budget}")
    row.runtime = time.perf_counter() - start
    return row, cert.to_dict()


def run_experiment(corpus: List[Tuple[str, GeneratorSpec]], options: Optional[ExperimentOptions] = None) -> ExperimentResult:
    opt = options or ExperimentOptions()
    rows, certs = [], {}
    for graph_id, spec in corpus:
        row, cert = run_row(graph_id, spec, opt)
        rows.append(row)
        if cert is not None:
            certs[graph_id] = cert
    return ExperimentResult(rows, certs)


def rows_to_csv(rows: List[ExperimentRow], timing: bool = False) -> str:
    buf = io.StringIO()
    header = COLUMNS + (["runtime_s"] if timing else [])
    buf.write(f"# {CSV_VERSION} columns={','.join(header)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r.cells(timing))
    return buf.getvalue()


def certificates_to_json(certs: Dict[str, dict]) -> str:
    return json.dumps(certs, separators=(",", ":")) + "\n"


def load_config(path: Union[str, Path]) -> dict:
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def options_from_config(cfg: dict) -> ExperimentOptions:
    o = dict(cfg.get("options", {}))
    budget = os.environ.get("P5COLOR_ORACLE_BUDGET", o.get("oracle_budget"))
    budget = None if budget is None else int(budget)
    color = ColorOptions(
        omega_base=int(o.get("omega_base", 4)),
        base_size=int(o.get("base_size", 20)),
        fast_path=bool(o.get("fast_path", True)),
        oracle_budget=budget,
        chi_classify=bool(o.get("chi_classify", False)),
        apex=str(o.get("apex", "max-degree")),
    )
    return ExperimentOptions(int(o.get("exact_max_n", 34)), budget, color, bool(o.get("timing", False)))


def run_config(path: Union[str, Path]) -> Tuple[ExperimentResult, ExperimentOptions]:
    cfg = load_config(path)
    if "corpus" not in cfg:
        raise UsageError("config has no [[corpus]] entries")
    opt = options_from_config(cfg)
    return run_experiment(expand_corpus(cfg["corpus"]), opt), opt


def tightness_rows(ks=(1, 2, 3, 4), budget: Optional[int] = None) -> List[dict]:
    """Exact chi of C5 blowups next to the colour budget of their clique number."""
    from .generators import c5_blowup
    from .oracles import clique_number

    out = []
    for k in ks:
        G = c5_blowup(k)
        w = clique_number(G)
        chi = exact_chromatic(G, budget)[0]
        out.append({"k": k, "n": G.n, "omega": w, "chi": chi, "budget": color_budget(w)})
    return out
