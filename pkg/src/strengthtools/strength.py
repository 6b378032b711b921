"""Exact strength solvers and verifiable certificates.

A numbering assigns the labels 1..n bijectively to the vertices; each edge
gets the sum of its endpoint labels, and the strength of a graph is the
smallest achievable maximum edge label.  Edgeless graphs have no edge label
at all and are rejected here (callers print an "infinity" sentinel).

Two independent exact methods are implemented:

* :func:`strength_exact` -- branch and bound over numberings, assigning the
  largest labels first and pruning against an incumbent.
* :func:`strength_via_fk` -- reads the value off the largest fk pattern
  embeddable in the complement (exact for graphs with minimum degree >= 1).

:func:`strength_oracle` additionally recomputes the value by enumerating all
n! numberings outright, sharing no pruning logic with either method, so the
two solvers can be checked against a third party.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import CapacityError, EmptyEdgeSetError, IsolatedVertexError, NumberingError
from .graphs import Graph, complement, fk_graph, iter_bits, min_degree

STRENGTH_EXACT_CAP = 16
STRENGTH_ORACLE_CAP = 8

Numbering = tuple[int, ...]  # numbering[v] = label of vertex v, a bijection onto 1..n


def validate_numbering(g: Graph, numbering: Numbering) -> None:
    if len(numbering) != g.order or sorted(numbering) != list(range(1, g.order + 1)):
        raise NumberingError(f"not a bijection onto 1..{g.order}: {numbering!r}")


def strength_of_numbering(g: Graph, numbering: Numbering) -> int:
    """Maximum edge label under the given numbering."""
    if g.edge_count == 0:
        raise EmptyEdgeSetError("edgeless graph: no edge labels exist")
    validate_numbering(g, numbering)
    return max(numbering[u] + numbering[v] for u, v in g.edges())


@dataclass(frozen=True)
class StrengthCertificate:
    """A strength value together with everything needed to re-check it.

    ``numbering`` attains ``value``.  ``k_max`` is the largest k in
    [2, n - 1] whose fk pattern embeds in the complement (None when even
    k = 2 does not embed, i.e. the graph is complete), and ``fk_witness``
    is one such embedding.  For graphs with minimum degree >= 1 and a
    k_max, ``value == 2n - k_max``.
    """

    value: int
    numbering: Numbering
    k_max: int | None
    fk_witness: tuple[int, ...] | None


def is_fk_embedding(host: Graph, k: int, seq: tuple[int, ...]) -> bool:
    """Check that ``seq`` places the fk pattern into ``host`` as a subgraph."""
    if len(seq) != k or len(set(seq)) != k:
        return False
    if any(not 0 <= v < host.order for v in seq):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if i + j <= k - 1 and not host.has_edge(seq[i], seq[j]):
                return False
    return True


def validate_certificate(g: Graph, cert: StrengthCertificate) -> None:
    """Re-derive everything checkable from the certificate; raise on mismatch."""
    n = g.order
    if strength_of_numbering(g, cert.numbering) != cert.value:
        raise AssertionError("certificate numbering does not attain the claimed value")
    if not 3 <= cert.value <= 2 * n - 1:
        raise AssertionError(f"strength {cert.value} outside [3, {2 * n - 1}]")
    if cert.k_max is None:
        if cert.fk_witness is not None:
            raise AssertionError("fk witness present without k_max")
    else:
        if cert.fk_witness is None or not is_fk_embedding(complement(g), cert.k_max, cert.fk_witness):
            raise AssertionError("fk witness fails the embedding check")
        if min_degree(g) >= 1 and cert.value != 2 * n - cert.k_max:
            raise AssertionError("value and k_max disagree for a graph without isolated vertices")


# -- fk pattern embedding ------------------------------------------------------


def fk_embed(host: Graph, k: int) -> tuple[int, ...] | None:
    """Find host vertices (w_1, ..., w_k) carrying the fk pattern, or None.

    Positions are filled in pattern order (the most constrained positions
    come first) by backtracking over host vertices in ascending order, so
    the returned embedding is deterministic.
    """
    n = host.order
    if not 2 <= k <= n:
        raise ValueError(f"k must be in [2, {n}], got {k}")
    pat = fk_graph(k)
    earlier = tuple(pat.adj[i] & ((1 << i) - 1) for i in range(k))
    pat_deg = tuple(pat.degree(i) for i in range(k))
    host_deg = tuple(host.degree(v) for v in range(n))
    full = host.full_mask
    placed = [0] * k

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = full & ~used
        for j in iter_bits(earlier[i]):
            cand &= host.adj[placed[j]]
        need = pat_deg[i]
        for v in iter_bits(cand):
            if host_deg[v] < need:
                continue
            placed[i] = v
            if rec(i + 1, used | (1 << v)):
                return True
        return False

    return tuple(placed) if rec(0, 0) else None


def max_fk(host: Graph) -> int | None:
    """Largest k in [2, order - 1] whose fk pattern embeds in ``host``.

    Embeddability is downward closed in k (the patterns nest), so an
    ascending scan stops at the first failure; None when even k = 2 (a
    single edge) does not embed.
    """
    best = None
    for k in range(2, host.order):
        if fk_embed(host, k) is None:
            break
        best = k
    return best


# -- branch-and-bound solver ---------------------------------------------------


def _bnb_optimum(g: Graph) -> tuple[int, Numbering]:
    """Optimal strength value and one attaining numbering.

    Labels are assigned n, n-1, ... to chosen vertices; a partial state is
    cut when its realized max edge label, or a cheap lower bound on future
    edges, reaches the incumbent.  The incumbent starts at the identity
    numbering, whose value is at most 2n - 1 and therefore always feasible.
    """
    n = g.order
    adj = g.adj
    full = g.full_mask
    identity = tuple(range(1, n + 1))
    best_val = strength_of_numbering(g, identity)
    best_num = identity
    label = [0] * n
    iso = 0
    for v in range(n):
        if not adj[v]:
            iso |= 1 << v

    def rec(next_label: int, assigned: int, cur_max: int) -> None:
        nonlocal best_val, best_num
        if assigned == full:
            best_val = cur_max
            best_num = tuple(label)
            return
        rest = full & ~assigned
        # every labeled vertex with t unlabeled neighbors will see an edge
        # of at least label + t (its neighbors take t distinct labels >= 1..t)
        m = assigned
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            t = (adj[u] & rest).bit_count()
            if t and label[u] + t >= best_val:
                return
        cands = []
        seen_iso = False
        m = rest
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if (iso >> v) & 1:
                if seen_iso:  # isolated vertices are interchangeable
                    continue
                seen_iso = True
            new_max = cur_max
            am = adj[v] & assigned
            while am:
                lo = am & -am
                u = lo.bit_length() - 1
                am ^= lo
                s = label[u] + next_label
                if s > new_max:
                    new_max = s
            if new_max < best_val:
                cands.append((new_max, v))
        cands.sort()
        for new_max, v in cands:
            if new_max >= best_val:
                continue
            label[v] = next_label
            rec(next_label - 1, assigned | (1 << v), new_max)
            label[v] = 0

    rec(n, 0, 0)
    return best_val, best_num


def _complete_numbering(g: Graph, prefix: list[int], value: int) -> Numbering | None:
    """Extend labels fixed on vertices 0..len(prefix)-1 to a full numbering
    with every edge label <= value, or report impossibility."""
    n = g.order
    adj = g.adj
    label = [0] * n
    assigned = 0
    for v, lab in enumerate(prefix):
        am = adj[v] & assigned
        for u in iter_bits(am):
            if label[u] + lab > value:
                return None
        label[v] = lab
        assigned |= 1 << v
    rem = sorted(set(range(1, n + 1)) - set(prefix), reverse=True)
    total = len(rem)

    def rec(idx: int, assigned: int) -> bool:
        if idx == total:
            return True
        # pool of labels still to place is rem[idx:], ascending tail rem[-1], rem[-2], ...
        m = assigned
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            t = (adj[u] & ~assigned).bit_count()
            if t and label[u] + rem[total - t] > value:
                return False
        lab = rem[idx]
        for v in range(n):
            if (assigned >> v) & 1:
                continue
            ok = True
            am = adj[v] & assigned
            while am:
                lo = am & -am
                u = lo.bit_length() - 1
                am ^= lo
                if label[u] + lab > value:
                    ok = False
                    break
            if ok:
                label[v] = lab
                if rec(idx + 1, assigned | (1 << v)):
                    return True
                label[v] = 0
        return False

    if rec(0, assigned):
        return tuple(label)
    return None


def strength_exact(g: Graph) -> StrengthCertificate:
    """True minimum over all numberings, with a self-validating certificate.

    The certificate numbering is the lexicographically smallest optimal
    assignment sequence (vertex 0 first); k_max and its embedding are
    attached as independently checkable metadata.  Practical cap: order 16.
    """
    if g.edge_count == 0:
        raise EmptyEdgeSetError("edgeless graph: strength is infinite")
    if g.order > STRENGTH_EXACT_CAP:
        raise CapacityError(f"strength_exact caps at order {STRENGTH_EXACT_CAP}")
    value, incumbent = _bnb_optimum(g)

    # lex-min optimal numbering: fix labels vertex by vertex, keeping a full
    # optimal completion as the running witness
    current = list(incumbent)
    for v in range(g.order):
        used = set(current[:v])
        for lab in range(1, current[v]):
            if lab in used:
                continue
            completed = _complete_numbering(g, current[:v] + [lab], value)
            if completed is not None:
                current = list(completed)
                break
    numbering = tuple(current)

    comp = complement(g)
    k_max = max_fk(comp)
    witness = fk_embed(comp, k_max) if k_max is not None else None
    cert = StrengthCertificate(value=value, numbering=numbering, k_max=k_max, fk_witness=witness)
    validate_certificate(g, cert)
    return cert


def strength_oracle(g: Graph) -> int:
    """Minimum max edge label over all n! numberings, enumerated outright."""
    if g.edge_count == 0:
        raise EmptyEdgeSetError("edgeless graph: strength is infinite")
    n = g.order
    if n > STRENGTH_ORACLE_CAP:
        raise CapacityError(f"strength_oracle caps at order {STRENGTH_ORACLE_CAP}")
    edges = g.edges()
    best = 2 * n
    for p in permutations(range(1, n + 1)):
        worst = 0
        for u, v in edges:
            s = p[u] + p[v]
            if s > worst:
                worst = s
        if worst < best:
            best = worst
    return best


def strength_via_fk(g: Graph) -> StrengthCertificate:
    """Strength read off the complement's largest embeddable fk pattern.

    Exact for graphs with minimum degree >= 1: the value is 2n - k_max when
    a pattern embeds, else 2n - 1 (only complete graphs).  With isolated
    vertices present the pattern argument only brackets the value, so the
    operation refuses them rather than guess.
    """
    n = g.order
    for v in range(n):
        if not g.adj[v]:
            raise IsolatedVertexError(v)
    comp = complement(g)
    k_max = max_fk(comp)
    if k_max is None:
        value = 2 * n - 1
        numbering: Numbering = tuple(range(1, n + 1))
        witness = None
    else:
        value = 2 * n - k_max
        emb = fk_embed(comp, k_max)
        assert emb is not None
        # pattern position i takes label n - i; leftover vertices take the
        # small labels in ascending vertex order
        label = [0] * n
        for i, w in enumerate(emb):
            label[w] = n - i
        nxt = 1
        for v in range(n):
            if label[v] == 0:
                label[v] = nxt
                nxt += 1
        numbering = tuple(label)
        witness = emb
    cert = StrengthCertificate(value=value, numbering=numbering, k_max=k_max, fk_witness=witness)
    validate_certificate(g, cert)
    return cert
