"""Graph ingestion, enumeration and the formula-versus-oracle sweeps behind the CLI."""

from __future__ import annotations

import csv
import enum
import io
import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .formulas import a1_formula, a2_formula, greg_formula, is_cm
from .graphs import (
    Graph,
    MatroidMethod,
    canonical_form,
    condition_class,
    find_obstruction,
    graph_from_code,
    graph_profile,
    is_matroid,
    stanley_reisner,
    symbolic_power,
)
from .monomial import power
from .takayama import ai_oracle, greg_oracle, reg_oracle
from .values import NEG_INFINITY, InputError, InvariantValue, format_value

R_MIN, R_MAX = 3, 7


# ingestion

def _parse_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("graph document must be an object")
    r = doc.get("vertices")
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InputError(f'field "vertices": expected a positive integer, got {r!r}')
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise InputError('field "edges": expected a list')
    pairs = []
    for k, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or any(isinstance(x, bool) or not isinstance(x, int) for x in e)):
            raise InputError(f"edges[{k}]: expected two integers, got {e!r}")
        pairs.append(e)
    return _build(r, [(f"edges[{k}]", e) for k, e in enumerate(pairs)])


def _parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise InputError("empty graph description")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].isdigit() or int(head[0]) < 1:
        raise InputError(f"line {lineno}: expected the vertex count, got {' '.join(head)!r}")
    pairs = []
    for lineno, tok in rows[1:]:
        try:
            u, v = (int(x) for x in tok)
        except ValueError:
            raise InputError(f"line {lineno}: expected 'u v', got {' '.join(tok)!r}") from None
        pairs.append((f"line {lineno}", (u, v)))
    return _build(int(head[0]), pairs)


def _build(r: int, pairs: list[tuple[str, tuple[int, int] | list[int]]]) -> Graph:
    seen: set[tuple[int, int]] = set()
    for where, (u, v) in pairs:
        if u == v:
            raise InputError(f"{where}: loop at vertex {u}")
        for x in (u, v):
            if not 1 <= x <= r:
                raise InputError(f"{where}: vertex {x} outside 1..{r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"{where}: duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
    return Graph(r, frozenset(seen))


def parse_graph(source: str | Path) -> Graph:
    """Read a graph from a file path or from text.

    Two formats are accepted: a JSON object {"vertices": r, "edges": [[u, v], ...]}
    and an edge list whose first line is r followed by one "u v" line per edge.
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source
                                    and os.path.isfile(source)):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    else:
        text = source
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_edge_list(text)


def serialize_graph(G: Graph) -> str:
    return json.dumps({"vertices": G.nvertices, "edges": [list(e) for e in G.sorted_edges()]})


# enumeration

@lru_cache(maxsize=None)
def _classes(r: int) -> tuple[tuple[int, int], ...]:
    """Canonical forms of all graphs on r vertices, edgeless one included."""
    if r == 1:
        return (canonical_form(Graph(1, frozenset())),)
    found = set()
    for code in _classes(r - 1):
        base = graph_from_code(r - 1, code[1])
        for mask in range(1 << (r - 1)):
            extra = {(p, r) for p in range(1, r) if mask >> (p - 1) & 1}
            found.add(canonical_form(Graph(r, base.edges | extra)))
    return tuple(sorted(found))


def _check_r(r: int) -> None:
    if not R_MIN <= r <= R_MAX:
        raise InputError(f"enumeration needs {R_MIN} <= r <= {R_MAX}, got {r}")


def enumerate_graphs(r: int, with_isolated: bool = False, dedupe: bool = True) -> Iterator[Graph]:
    """Graphs on r vertices with at least one edge, in a fixed order.

    Without dedupe every labelled graph is produced, ordered by the bitmask
    of its edge set over the lexicographically sorted vertex pairs. With
    dedupe one canonical representative per isomorphism class is produced,
    ordered by edge count and then canonical code.
    """
    _check_r(r)
    if dedupe:
        reps = [graph_from_code(r, code) for _, code in _classes(r)]
        reps.sort(key=lambda G: (len(G.edges), canonical_form(G)[1]))
        graphs: Iterator[Graph] = iter(reps)
    else:
        pairs = list(combinations(range(1, r + 1), 2))
        graphs = (Graph(r, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
                  for mask in range(1 << len(pairs)))
    for G in graphs:
        if G.edges and (with_isolated or not G.isolated_vertices()):
            yield G


# invariant tables

class Method(str, enum.Enum):
    FORMULA = "formula"
    ORACLE = "oracle"
    BOTH = "both"


COLUMNS = ("a1", "a2", "greg", "reg_symbolic", "cm")
CmValue = bool
Cell = InvariantValue | CmValue | None  # None renders as N/A


def _fmt(v: Cell) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return format_value(v)


def _formula_values(G: Graph, n: int, corrected: bool) -> tuple[dict[str, Cell], dict[str, str]]:
    values: dict[str, Cell] = dict.fromkeys(COLUMNS)
    branches = dict.fromkeys(("a1", "a2", "greg"), "N/A")
    for name, fn in (("a1", lambda: a1_formula(G, n, corrected)),
                     ("a2", lambda: a2_formula(G, n)),
                     ("greg", lambda: greg_formula(G, n))):
        try:
            res = fn()
        except InputError:
            continue
        values[name], branches[name] = res.value, res.branch
    values["reg_symbolic"] = values["greg"]
    try:
        values["cm"] = is_cm(G, n, corrected)
        branches["cm"] = f"N1/{condition_class(G)}" if n == 1 else str(condition_class(G))
    except InputError:
        pass
    return values, branches


def _oracle_values(G: Graph, n: int) -> dict[str, Cell]:
    values: dict[str, Cell] = dict.fromkeys(COLUMNS)
    if not G.edges:
        return values
    J = power(stanley_reisner(G), n)
    values["a1"] = ai_oracle(J, 1)
    values["a2"] = ai_oracle(J, 2)
    values["greg"] = greg_oracle(J)
    values["reg_symbolic"] = reg_oracle(symbolic_power(G, n))
    if not G.isolated_vertices():
        values["cm"] = ai_oracle(J, 0) is NEG_INFINITY and values["a1"] is NEG_INFINITY
    return values


@dataclass(frozen=True)
class InvariantRow:
    n: int
    formula: dict[str, Cell]
    oracle: dict[str, Cell]
    branches: dict[str, str]

    def match(self, name: str) -> bool | None:
        f, o = self.formula.get(name), self.oracle.get(name)
        if f is None or o is None:
            return None
        return f == o


@dataclass(frozen=True)
class InvariantTable:
    graph: Graph
    method: Method
    rows: list[InvariantRow]

    def header(self) -> list[str]:
        head = ["n"]
        for c in COLUMNS:
            if self.method is Method.BOTH:
                head += [f"{c}_formula", f"{c}_oracle", f"{c}_match"]
            else:
                head.append(c)
        if self.method is not Method.ORACLE:
            head += ["branch_a1", "branch_a2", "branch_greg"]
        return head

    def records(self) -> list[list[str]]:
        out = []
        for row in self.rows:
            rec = [str(row.n)]
            for c in COLUMNS:
                if self.method is Method.BOTH:
                    m = row.match(c)
                    rec += [_fmt(row.formula[c]), _fmt(row.oracle[c]),
                            "N/A" if m is None else ("match" if m else "MISMATCH")]
                elif self.method is Method.FORMULA:
                    rec.append(_fmt(row.formula[c]))
                else:
                    rec.append(_fmt(row.oracle[c]))
            if self.method is not Method.ORACLE:
                rec += [row.branches[k] for k in ("a1", "a2", "greg")]
            out.append(rec)
        return out

    def mismatches(self) -> int:
        return sum(row.match(c) is False for row in self.rows for c in COLUMNS)

    def render(self, out: str = "table") -> str:
        if out == "csv":
            return _csv([self.header()] + self.records())
        if self.method is Method.BOTH:
            head = ["n"] + list(COLUMNS) + ["branch_a1", "branch_a2", "branch_greg"]
            body = []
            for row in self.rows:
                cells = [str(row.n)]
                for c in COLUMNS:
                    m = row.match(c)
                    tag = "" if m is None else (" match" if m else " MISMATCH")
                    cells.append(f"{_fmt(row.formula[c])}/{_fmt(row.oracle[c])}{tag}")
                body.append(cells + [row.branches[k] for k in ("a1", "a2", "greg")])
        else:
            head, body = self.header(), self.records()
        return _aligned([head] + body)


def run_invariants(G: Graph, n_max: int, method: Method | str = Method.BOTH,
                   corrected: bool = False) -> InvariantTable:
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    method = Method(method)
    rows = []
    for n in range(1, n_max + 1):
        empty = dict.fromkeys(COLUMNS)
        formula, branches = (_formula_values(G, n, corrected) if method is not Method.ORACLE
                             else (empty, dict.fromkeys(("a1", "a2", "greg"), "N/A")))
        oracle = _oracle_values(G, n) if method is not Method.FORMULA else dict(empty)
        rows.append(InvariantRow(n, formula, oracle, branches))
    return InvariantTable(G, method, rows)


def ai_rows(G: Graph, n_max: int) -> tuple[list[str], list[list[str]]]:
    """Oracle a_i for i = 0..r of I_G^n and I_G^(n), with g-reg and reg."""
    if not G.edges:
        raise InputError("the oracle needs at least one edge")
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    r = G.nvertices
    head = ["n"] + [f"a{i}" for i in range(r + 1)] + ["greg", "reg"]
    head += [f"a{i}_symbolic" for i in range(r + 1)] + ["reg_symbolic"]
    rows = []
    for n in range(1, n_max + 1):
        J, S = power(stanley_reisner(G), n), symbolic_power(G, n)
        row = [str(n)] + [format_value(ai_oracle(J, i)) for i in range(r + 1)]
        row += [format_value(greg_oracle(J)), format_value(reg_oracle(J))]
        row += [format_value(ai_oracle(S, i)) for i in range(r + 1)]
        rows.append(row + [format_value(reg_oracle(S))])
    return head, rows


def _csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _aligned(rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


# classification

@dataclass(frozen=True)
class ClassifyReport:
    fields: list[tuple[str, str]]

    def render(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.fields)


def _num(x: float | int) -> str:
    return "inf" if x == float("inf") else str(x)


def run_classify(G: Graph) -> ClassifyReport:
    prof = graph_profile(G) if G.edges else None
    f: list[tuple[str, str]] = [("graph", serialize_graph(G)),
                                ("vertices", str(G.nvertices)),
                                ("edges", str(len(G.edges)))]
    if prof is None:
        f.append(("profile", "N/A"))
    else:
        f += [("girth", _num(prof.girth)),
              ("diameter", _num(prof.diameter)),
              ("max_degree", str(prof.max_degree)),
              ("connected", "true" if prof.connected else "false"),
              ("compact_vertices", " ".join(map(str, sorted(prof.compact_vertices))) or "none"),
              ("isolated_vertices", " ".join(map(str, sorted(prof.isolated_vertices))) or "none")]
    try:
        f.append(("condition_class", str(condition_class(G))))
    except InputError as exc:
        f.append(("condition_class", f"N/A ({exc})"))
    verdicts = {}
    for m in MatroidMethod:
        try:
            verdicts[m] = is_matroid(G, m)
            f.append((f"matroid_{m.value}", "true" if verdicts[m] else "false"))
        except InputError as exc:
            f.append((f"matroid_{m.value}", f"N/A ({exc})"))
    f.append(("matroid_methods_agree", "true" if len(set(verdicts.values())) <= 1 else "false"))
    obs = find_obstruction(G)
    f.append(("obstruction", "none" if obs is None else f"{obs[0]} on {' '.join(map(str, obs[1]))}"))
    return ClassifyReport(f)


# verification sweep

@dataclass(frozen=True)
class VerifyConfig:
    r_max: int = 4
    n_max: int = 2
    with_isolated: bool = False
    workers: int = 1
    dedupe: bool = False
    corrected: bool = False


@dataclass(frozen=True)
class CaseRecord:
    graph: str
    canonical: str
    n: int
    invariant: str
    formula: str
    branch: str
    oracle: str
    match: bool

    def key(self) -> tuple:
        r, code = self.canonical.split(":")
        return int(r), int(code, 16), self.graph, self.n, COLUMNS.index(self.invariant)


@dataclass
class VerificationReport:
    config: VerifyConfig
    records: list[CaseRecord]
    graphs: int
    cases: int
    wall_time: float = field(default=0.0, compare=False)

    @property
    def mismatches(self) -> int:
        return sum(not rec.match for rec in self.records)

    def mismatch_branches(self) -> dict[str, int]:
        counts = Counter(f"{rec.invariant}:{rec.branch}" for rec in self.records if not rec.match)
        return dict(sorted(counts.items()))

    def summary(self) -> list[tuple[str, str]]:
        c = self.config
        out = [("max_vertices", str(c.r_max)), ("max_n", str(c.n_max)),
               ("isolated", str(c.with_isolated).lower()), ("dedupe", str(c.dedupe).lower()),
               ("corrected", str(c.corrected).lower()),
               ("graphs", str(self.graphs)), ("cases", str(self.cases)),
               ("checks", str(len(self.records))), ("mismatches", str(self.mismatches))]
        out += [(f"mismatch[{k}]", str(v)) for k, v in self.mismatch_branches().items()]
        return out

    def render(self, out: str = "csv") -> str:
        """Serialised report; wall time is deliberately left out so output is reproducible."""
        if out == "json":
            doc = {"summary": dict(self.summary()), "records": [asdict(r) for r in self.records]}
            return json.dumps(doc, indent=1, sort_keys=True) + "\n"
        head = [[f.name for f in CaseRecord.__dataclass_fields__.values()]]
        body = [[rec.graph, rec.canonical, str(rec.n), rec.invariant, rec.formula,
                 rec.branch, rec.oracle, "match" if rec.match else "MISMATCH"]
                for rec in self.records]
        return _csv(head + body) + "".join(f"# {k}: {v}\n" for k, v in self.summary())


def _verify_case(args: tuple[int, tuple[tuple[int, int], ...], int, bool]) -> list[CaseRecord]:
    r, edges, n, corrected = args
    G = Graph(r, frozenset(edges))
    formula, branches = _formula_values(G, n, corrected)
    oracle = _oracle_values(G, n)
    r_, code = canonical_form(G)
    label = " ".join(f"{u}-{v}" for u, v in G.sorted_edges())
    canon = f"{r_}:{code:x}"
    out = []
    for name in COLUMNS:
        f, o = formula[name], oracle[name]
        if f is None or o is None:
            continue
        branch = branches["greg"] if name == "reg_symbolic" else branches[name]
        out.append(CaseRecord(label, canon, n, name, _fmt(f), branch, _fmt(o), f == o))
    return out


def run_verify(config: VerifyConfig) -> VerificationReport:
    """Compare every closed form against the oracle over an exhaustive graph sweep."""
    if not R_MIN <= config.r_max <= R_MAX:
        raise InputError(f"max vertices must lie in {R_MIN}..{R_MAX}")
    if config.n_max < 1:
        raise InputError("max n must be at least 1")
    if config.workers < 1:
        raise InputError("workers must be at least 1")
    start = time.perf_counter()
    graphs = [G for r in range(R_MIN, config.r_max + 1)
              for G in enumerate_graphs(r, config.with_isolated, config.dedupe)]
    jobs = [(G.nvertices, tuple(G.sorted_edges()), n, config.corrected)
            for G in graphs for n in range(1, config.n_max + 1)]
    if config.workers == 1:
        chunks = map(_verify_case, jobs)
        records = [rec for chunk in chunks for rec in chunk]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = [rec for chunk in pool.map(_verify_case, jobs, chunksize=4) for rec in chunk]
    records.sort(key=CaseRecord.key)
    return VerificationReport(config, records, len(graphs), len(jobs),
                              wall_time=time.perf_counter() - start)
