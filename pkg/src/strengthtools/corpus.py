"""Graph corpora: exhaustive enumeration, isomorphism reduction, and audits.

An audit walks a corpus (exhaustively enumerated labeled graphs, or a graph6
file), evaluates the requested claims on every graph, and collects the rows
into a report whose serialized bytes are identical for any worker count: a
single deterministic enumerator feeds a pool of stateless workers and the
results are merged back in corpus order.  Violations are additionally
appended to a JSON-lines counterexample file when a path is given.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator

from .claims import CLAIM_IDS, ClaimOutcome, evaluate_all
from .errors import CapacityError, EmptyEdgeSetError, GraphInputError
from .graphs import Graph, complement, iter_bits, min_degree
from .graph6 import emit_graph6, parse_graph6
from .invariants import compute_bundle
from .strength import max_fk, strength_exact

ENUM_CAP = 7
CANON_CAP = 8

FILTERS = ("all", "min-degree-one", "at-least-one-edge")
DEDUP_MODES = ("labeled", "up-to-isomorphism")

INFINITY = "infinity"  # serialized strength of an edgeless graph


def enumerate_labeled(n: int, which: str = "all") -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in ascending edge-mask
    order (bit i of the mask is the i-th vertex pair in lexicographic order),
    optionally filtered."""
    if not 1 <= n <= ENUM_CAP:
        raise CapacityError(f"exhaustive enumeration caps at order {ENUM_CAP}")
    if which not in FILTERS:
        raise ValueError(f"unknown filter {which!r}; expected one of {FILTERS}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if which == "at-least-one-edge" and mask == 0:
            continue
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            m ^= low
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if which == "min-degree-one" and any(row == 0 for row in adj):
            continue
        yield Graph(n, tuple(adj))


def canonical_code(g: Graph) -> bytes:
    """Minimum upper-triangle bit sequence over all vertex orderings.

    Column-major bits (the graph6 body order) are compared level by level;
    at each level only the orderings realizing the minimal next column stay
    alive, which is exact and prunes everything that cannot start a minimal
    code.  Equal codes hold exactly for isomorphic graphs.  Cap: order 8.
    """
    n = g.order
    if n > CANON_CAP:
        raise CapacityError(f"canonical code caps at order {CANON_CAP}")
    adj = g.adj

    def rec(placed: tuple[int, ...], used: int) -> list[int]:
        level = len(placed)
        if level == n:
            return []
        lowest = None
        ties = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            bits = 0
            for h in placed:
                bits = (bits << 1) | ((adj[h] >> v) & 1)
            if lowest is None or bits < lowest:
                lowest, ties = bits, [v]
            elif bits == lowest:
                ties.append(v)
        assert lowest is not None
        best = None
        for v in ties:
            sub = rec(placed + (v,), used | (1 << v))
            if best is None or sub < best:
                best = sub
        return [lowest] + (best or [])

    levels = rec((), 0)
    acc = 0
    total = 0
    out = bytearray([n])
    for width, value in enumerate(levels):  # level j carries j bits
        acc = (acc << width) | value
        total += width
        while total >= 8:
            out.append((acc >> (total - 8)) & 0xFF)
            total -= 8
    if total:
        out.append((acc << (8 - total)) & 0xFF)
    return bytes(out)


def dedup_nonisomorphic(graphs: Iterable[Graph]) -> Iterator[Graph]:
    """Keep the first representative of each isomorphism class."""
    seen: set[bytes] = set()
    for g in graphs:
        code = canonical_code(g)
        if code not in seen:
            seen.add(code)
            yield g


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Explicit vertex bijection mapping edges of g onto edges of h, or None.

    Brute permutation search, intended as an independent spot check for the
    canonical code (small orders only).
    """
    n = g.order
    if h.order != n:
        return None
    if sorted(m.bit_count() for m in g.adj) != sorted(m.bit_count() for m in h.adj):
        return None
    g_edges = g.edges()
    if len(g_edges) != h.edge_count:
        return None
    for perm in permutations(range(n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g_edges):
            return perm
    return None


# -- corpus specification --------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """What to audit: an exhaustive labeled corpus or a graph6 file."""

    source: str  # "exhaustive" | "file"
    n: int | None = None
    path: str | None = None
    filter: str = "all"
    dedup: str = "labeled"

    def __post_init__(self):
        if self.source == "exhaustive":
            if self.n is None or not 1 <= self.n <= ENUM_CAP:
                raise ValueError(f"exhaustive corpus needs n in [1, {ENUM_CAP}]")
        elif self.source == "file":
            if not self.path:
                raise ValueError("file corpus needs a path")
        else:
            raise ValueError(f"unknown source {self.source!r}")
        if self.filter not in FILTERS:
            raise ValueError(f"unknown filter {self.filter!r}; expected one of {FILTERS}")
        if self.dedup not in DEDUP_MODES:
            raise ValueError(f"unknown dedup mode {self.dedup!r}; expected one of {DEDUP_MODES}")

    @classmethod
    def exhaustive(cls, n: int, filter: str = "all", dedup: str = "labeled") -> "CorpusSpec":
        return cls(source="exhaustive", n=n, filter=filter, dedup=dedup)

    @classmethod
    def from_file(cls, path: str | Path, filter: str = "all", dedup: str = "labeled") -> "CorpusSpec":
        return cls(source="file", path=str(path), filter=filter, dedup=dedup)


def _spec_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.source == "exhaustive":
        assert spec.n is not None
        stream: Iterator[Graph] = enumerate_labeled(spec.n, spec.filter)
    else:
        assert spec.path is not None
        stream = _read_graph6_file(spec.path)
        if spec.filter == "min-degree-one":
            stream = (g for g in stream if min_degree(g) >= 1)
        elif spec.filter == "at-least-one-edge":
            stream = (g for g in stream if g.edge_count >= 1)
    if spec.dedup == "up-to-isomorphism":
        stream = dedup_nonisomorphic(stream)
    return stream


def _read_graph6_file(path: str) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            token = line.rstrip("\n")
            if not token:
                continue
            try:
                yield parse_graph6(token)
            except ValueError as exc:
                raise GraphInputError(f"{path}:{lineno}: {exc}") from exc


# -- audit --------------------------------------------------------------------


@dataclass
class AuditReport:
    """Ordered per-graph rows plus a summary; serialization is deterministic."""

    rows: list[dict]
    violations: list[dict]
    summary: dict
    wall_time_s: float = field(default=0.0)

    def json_lines(self, include_timing: bool = True) -> str:
        """One JSON object per row, then the summary object, one per line."""
        lines = [_dumps(row) for row in self.rows]
        summary = dict(self.summary)
        if include_timing:
            summary["wall_time_s"] = round(self.wall_time_s, 3)
        lines.append(_dumps(summary))
        return "\n".join(lines) + "\n"


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _outcome_dict(outcome: ClaimOutcome) -> dict:
    d: dict = {"claim": outcome.claim_id, "status": outcome.status,
               "direction": outcome.direction}
    if outcome.reason is not None:
        d["reason"] = outcome.reason
    if outcome.status == "violated" and outcome.witness is not None:
        d["witness"] = outcome.witness
    return d


def audit_row(token: str, claim_ids: tuple[str, ...]) -> dict:
    """Evaluate the requested claims on one graph6 token; pure and stateless."""
    g = parse_graph6(token)
    row: dict = {"graph6": token, "n": g.order}
    try:
        b = compute_bundle(g)
        row["invariants"] = {"delta": b.delta, "gamma": b.gamma, "alpha": b.alpha,
                             "alpha1": b.alpha1, "beta": b.beta, "beta1": b.beta1}
    except CapacityError:
        row["invariants"] = None
    try:
        row["str"] = strength_exact(g).value
    except EmptyEdgeSetError:
        row["str"] = INFINITY
    except CapacityError:
        row["str"] = None
    try:
        row["k_max"] = max_fk(complement(g))
    except CapacityError:  # pragma: no cover - max_fk has no cap today
        row["k_max"] = None
    row["claims"] = [_outcome_dict(o) for o in evaluate_all(g, claim_ids)]
    return row


def _worker(args: tuple[str, tuple[str, ...]]) -> dict:
    return audit_row(*args)


def audit_corpus(
    spec: CorpusSpec,
    claim_ids: tuple[str, ...] | None = None,
    workers: int = 1,
    counterexample_path: str | Path | None = None,
) -> AuditReport:
    """Evaluate claims over a whole corpus.

    Rows keep corpus order no matter how many workers run; capacity verdicts
    are recorded per row and never abort the run.  The summary records a
    corpus hash (over the ordered token sequence) so reports are comparable
    across machines.
    """
    ids = tuple(cid for cid in CLAIM_IDS if cid in set(claim_ids or CLAIM_IDS))
    if not ids:
        raise ValueError("no valid claim ids requested")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    started = time.perf_counter()

    tokens = [emit_graph6(g) for g in _spec_graphs(spec)]
    digest = hashlib.sha256("\n".join(tokens).encode("ascii")).hexdigest()

    if workers == 1 or len(tokens) < 2:
        rows = [audit_row(t, ids) for t in tokens]
    else:
        chunk = max(1, len(tokens) // (workers * 8))
        with Pool(workers) as pool:
            rows = list(pool.imap(_worker, [(t, ids) for t in tokens], chunksize=chunk))

    violations = []
    counts = {cid: {"holds": 0, "violated": 0, "not_applicable": 0} for cid in ids}
    for row in rows:
        for oc in row["claims"]:
            cid, status = oc["claim"], oc["status"]
            counts[cid][status.replace("-", "_")] += 1
            if status == "violated":
                violations.append({"graph6": row["graph6"], "claim": cid,
                                   "direction": oc["direction"],
                                   "witness": oc.get("witness")})

    if counterexample_path is not None and violations:
        with open(counterexample_path, "a", encoding="ascii") as fh:
            for v in violations:
                fh.write(_dumps(v) + "\n")

    source_desc = (f"exhaustive(n={spec.n})" if spec.source == "exhaustive"
                   else f"file({spec.path})")
    summary = {
        "schema_version": 1,
        "kind": "summary",
        "source": source_desc,
        "filter": spec.filter,
        "dedup": spec.dedup,
        "claims": list(ids),
        "graphs": len(tokens),
        "counts": counts,
        "violations": len(violations),
        "corpus_hash": digest,
    }
    return AuditReport(rows=rows, violations=violations, summary=summary,
                       wall_time_s=time.perf_counter() - started)
