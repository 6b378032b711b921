"""Auditable claim catalog: gated predicates C1..C10 over exact invariants.

Each claim pairs a precondition with a statement about the strength,
domination, covering, and independence numbers of a single graph.  Nothing
is assumed true: every quantity is recomputed with the exact solvers and the
verdict is reported as holds / violated / not-applicable together with a
witness sufficient for an independent re-check.  Biconditional claims record
which direction failed; quantified claims record the first failing case.

The claim ids are a stable public vocabulary used by reports and the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import CapacityError
from .graphs import Graph, complement, min_degree
from .invariants import InvariantBundle, compute_bundle
from .strength import StrengthCertificate, fk_embed, strength_exact

CLAIM_IDS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10")

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ClaimOutcome:
    """Verdict for one claim on one graph.

    ``direction`` is "forward"/"reverse" for a failed biconditional side and
    "n/a" otherwise.  ``reason`` explains a not-applicable verdict: the
    precondition fails ("precondition") or a solver cap was hit ("capacity").
    ``witness`` carries the computed values behind the verdict.
    """

    claim_id: str
    status: str
    direction: str = "n/a"
    reason: str | None = None
    witness: dict | None = None


class _Context:
    """Per-graph lazily computed values shared by all claim evaluators."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.order
        self.delta = min_degree(g)
        self.edge_count = g.edge_count
        self._bundle: InvariantBundle | None = None
        self._cert: StrengthCertificate | None = None
        self._comp: Graph | None = None
        self._embeds: dict[int, tuple[int, ...] | None] = {}

    @property
    def bundle(self) -> InvariantBundle:
        if self._bundle is None:
            self._bundle = compute_bundle(self.g)
        return self._bundle

    @property
    def strength(self) -> int:
        return self.cert.value

    @property
    def cert(self) -> StrengthCertificate:
        if self._cert is None:
            self._cert = strength_exact(self.g)
        return self._cert

    def embed(self, k: int) -> tuple[int, ...] | None:
        if k not in self._embeds:
            if self._comp is None:
                self._comp = complement(self.g)
            self._embeds[k] = fk_embed(self._comp, k)
        return self._embeds[k]


def _na(cid: str, reason: str = "precondition") -> ClaimOutcome:
    return ClaimOutcome(cid, NOT_APPLICABLE, reason=reason)


def _verdict(cid: str, holds: bool, witness: dict, direction: str = "n/a") -> ClaimOutcome:
    return ClaimOutcome(cid, HOLDS if holds else VIOLATED,
                        direction=direction if not holds else "n/a",
                        witness=witness)


def _biconditional(cid: str, left: bool, right: bool, witness: dict) -> ClaimOutcome:
    if left == right:
        return _verdict(cid, True, witness)
    return _verdict(cid, False, witness, direction="forward" if left else "reverse")


# -- evaluators ----------------------------------------------------------------


def _c1(ctx: _Context) -> ClaimOutcome:
    # str >= n + delta, for delta >= 1
    if ctx.delta < 1:
        return _na("C1")
    s = ctx.strength
    bound = ctx.n + ctx.delta
    return _verdict("C1", s >= bound,
                    {"n": ctx.n, "delta": ctx.delta, "str": s, "bound": bound})


def _c2(ctx: _Context) -> ClaimOutcome:
    # str >= 2n - 2*gamma + 1, for graphs with at least one edge
    if ctx.edge_count == 0:
        return _na("C2")
    gamma = ctx.bundle.gamma
    s = ctx.strength
    bound = 2 * ctx.n - 2 * gamma + 1
    return _verdict("C2", s >= bound,
                    {"n": ctx.n, "gamma": gamma, "str": s, "bound": bound})


def _c3(ctx: _Context) -> ClaimOutcome:
    # for every k in [2, n-1]: str <= 2n - k  <=>  fk pattern embeds in complement
    if ctx.edge_count == 0:
        return _na("C3")
    s = ctx.strength
    for k in range(2, ctx.n):
        emb = ctx.embed(k)
        left = s <= 2 * ctx.n - k
        right = emb is not None
        if left != right:
            return _verdict("C3", False,
                            {"n": ctx.n, "k": k, "str": s, "threshold": 2 * ctx.n - k,
                             "embedding": list(emb) if emb else None},
                            direction="forward" if left else "reverse")
    return _verdict("C3", True, {"n": ctx.n, "str": s, "k_range": [2, ctx.n - 1]})


def _c4(ctx: _Context) -> ClaimOutcome:
    # with delta = n - k for k in [2, n-1]: str = n + delta <=> fk(k) embeds in complement
    k = ctx.n - ctx.delta
    if ctx.delta < 1 or not 2 <= k <= ctx.n - 1:
        return _na("C4")
    s = ctx.strength
    emb = ctx.embed(k)
    return _biconditional("C4", s == ctx.n + ctx.delta, emb is not None,
                          {"n": ctx.n, "delta": ctx.delta, "k": k, "str": s,
                           "embedding": list(emb) if emb else None})


def _c5(ctx: _Context) -> ClaimOutcome:
    # with gamma = k in [2, ceil(n/2)]: str = 2n - 2k + 1 <=> fk(2k-1) embeds in complement
    if ctx.edge_count == 0:
        return _na("C5")
    k = ctx.bundle.gamma
    if not 2 <= k <= (ctx.n + 1) // 2:
        return _na("C5")
    s = ctx.strength
    emb = ctx.embed(2 * k - 1)
    return _biconditional("C5", s == 2 * ctx.n - 2 * k + 1, emb is not None,
                          {"n": ctx.n, "gamma": k, "k": 2 * k - 1, "str": s,
                           "equality_value": 2 * ctx.n - 2 * k + 1,
                           "embedding": list(emb) if emb else None})


def _c6(ctx: _Context) -> ClaimOutcome:
    # with beta = k in [2, ceil(n/2)]: str = 2n - 2k + 1 <=> fk(2k-1) embeds in complement
    if ctx.edge_count == 0:
        return _na("C6")
    k = ctx.bundle.beta
    if not 2 <= k <= (ctx.n + 1) // 2:
        return _na("C6")
    s = ctx.strength
    emb = ctx.embed(2 * k - 1)
    return _biconditional("C6", s == 2 * ctx.n - 2 * k + 1, emb is not None,
                          {"n": ctx.n, "beta": k, "k": 2 * k - 1, "str": s,
                           "equality_value": 2 * ctx.n - 2 * k + 1,
                           "embedding": list(emb) if emb else None})


def _c7(ctx: _Context) -> ClaimOutcome:
    # with gamma = k in [2, ceil(n/2)] and fk(2k-1) embedding in the complement: gamma = beta
    k = ctx.bundle.gamma
    if not 2 <= k <= (ctx.n + 1) // 2:
        return _na("C7")
    emb = ctx.embed(2 * k - 1)
    if emb is None:
        return _na("C7")
    beta = ctx.bundle.beta
    return _verdict("C7", k == beta,
                    {"n": ctx.n, "gamma": k, "beta": beta, "k": 2 * k - 1,
                     "embedding": list(emb)})


def _c8(ctx: _Context) -> ClaimOutcome:
    # with delta >= 1 and str = n + delta: gamma >= ceil((n - delta + 1) / 2)
    if ctx.delta < 1:
        return _na("C8")
    s = ctx.strength
    if s != ctx.n + ctx.delta:
        return _na("C8")
    gamma = ctx.bundle.gamma
    bound = (ctx.n - ctx.delta + 1 + 1) // 2
    return _verdict("C8", gamma >= bound,
                    {"n": ctx.n, "delta": ctx.delta, "str": s, "gamma": gamma, "bound": bound})


def _c9(ctx: _Context) -> ClaimOutcome:
    # with delta >= 1: gamma <= min(alpha, alpha1, beta, beta1)
    if ctx.delta < 1:
        return _na("C9")
    b = ctx.bundle
    assert b.alpha1 is not None
    smallest = min(b.alpha, b.alpha1, b.beta, b.beta1)
    return _verdict("C9", b.gamma <= smallest,
                    {"n": ctx.n, "gamma": b.gamma, "alpha": b.alpha, "alpha1": b.alpha1,
                     "beta": b.beta, "beta1": b.beta1, "min": smallest})


def _c10(ctx: _Context) -> ClaimOutcome:
    # with delta >= 1: str >= 2n - 2*min(alpha, alpha1, beta, beta1) + 1
    if ctx.delta < 1:
        return _na("C10")
    b = ctx.bundle
    assert b.alpha1 is not None
    smallest = min(b.alpha, b.alpha1, b.beta, b.beta1)
    s = ctx.strength
    bound = 2 * ctx.n - 2 * smallest + 1
    return _verdict("C10", s >= bound,
                    {"n": ctx.n, "alpha": b.alpha, "alpha1": b.alpha1, "beta": b.beta,
                     "beta1": b.beta1, "min": smallest, "str": s, "bound": bound})


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    evaluator: Callable[[_Context], ClaimOutcome]


CATALOG: dict[str, Claim] = {
    c.claim_id: c
    for c in (
        Claim("C1", "str(G) >= n + delta(G) when delta(G) >= 1", _c1),
        Claim("C2", "str(G) >= 2n - 2*gamma(G) + 1 when G has an edge", _c2),
        Claim("C3", "for all k in [2, n-1]: str(G) <= 2n - k iff the fk pattern embeds "
                    "in the complement, when G has an edge", _c3),
        Claim("C4", "str(G) = n + delta(G) iff fk(n - delta) embeds in the complement, "
                    "when delta(G) = n - k for some k in [2, n-1]", _c4),
        Claim("C5", "str(G) = 2n - 2*gamma(G) + 1 iff fk(2*gamma - 1) embeds in the "
                    "complement, when gamma(G) in [2, ceil(n/2)] and G has an edge", _c5),
        Claim("C6", "str(G) = 2n - 2*beta(G) + 1 iff fk(2*beta - 1) embeds in the "
                    "complement, when beta(G) in [2, ceil(n/2)] and G has an edge", _c6),
        Claim("C7", "gamma(G) = beta(G) when gamma(G) in [2, ceil(n/2)] and "
                    "fk(2*gamma - 1) embeds in the complement", _c7),
        Claim("C8", "gamma(G) >= ceil((n - delta + 1)/2) when delta(G) >= 1 and "
                    "str(G) = n + delta(G)", _c8),
        Claim("C9", "gamma(G) <= min(alpha, alpha1, beta, beta1) when delta(G) >= 1", _c9),
        Claim("C10", "str(G) >= 2n - 2*min(alpha, alpha1, beta, beta1) + 1 when "
                     "delta(G) >= 1", _c10),
    )
}


def evaluate_claim(g: Graph, claim_id: str, _ctx: _Context | None = None) -> ClaimOutcome:
    """Evaluate one claim on one graph; deterministic in the graph alone.

    Solver capacity problems (for example strength on a graph past the exact
    cap) surface as a not-applicable outcome with reason "capacity" rather
    than an exception.
    """
    try:
        claim = CATALOG[claim_id]
    except KeyError:
        raise ValueError(f"unknown claim id {claim_id!r}; expected one of {CLAIM_IDS}") from None
    ctx = _ctx if _ctx is not None else _Context(g)
    try:
        return claim.evaluator(ctx)
    except CapacityError:
        return _na(claim_id, reason="capacity")


def evaluate_all(g: Graph, claim_ids: tuple[str, ...] | None = None) -> list[ClaimOutcome]:
    """Evaluate the requested claims (default: all) in fixed id order,
    computing the shared invariants only once."""
    ids = CLAIM_IDS if claim_ids is None else tuple(claim_ids)
    for cid in ids:
        if cid not in CATALOG:
            raise ValueError(f"unknown claim id {cid!r}; expected one of {CLAIM_IDS}")
    ordered = [cid for cid in CLAIM_IDS if cid in set(ids)]
    ctx = _Context(g)
    return [evaluate_claim(g, cid, _ctx=ctx) for cid in ordered]
