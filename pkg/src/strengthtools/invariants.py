"""Exact domination, independence, covering, and matching solvers with witnesses.

Every parameter is computed by an exact branch-and-bound search over bitmask
state; practical inputs are graphs of order <= 32 (larger orders raise
:class:`CapacityError` instead of running forever).  All witnesses returned
here are the lexicographically smallest optimal witnesses, comparing sets as
sorted tuples, so repeated runs and parallel audits print identical output.

:func:`brute_invariant` recomputes each parameter by definition-only subset
enumeration.  It shares none of the search code and exists so the solvers can
be cross-checked against something independently simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapacityError, IsolatedVertexError
from .graphs import Graph, iter_bits, min_degree

SOLVER_CAP = 32
BRUTE_VERTEX_CAP = 20
BRUTE_EDGE_CAP = 20

EdgeSet = tuple[tuple[int, int], ...]


def _check_cap(g: Graph) -> None:
    if g.order > SOLVER_CAP:
        raise CapacityError(f"solver cap is order <= {SOLVER_CAP}, got {g.order}")


# -- feasibility predicates (used for witness validation and re-checking) --


def is_independent_set(g: Graph, members: tuple[int, ...]) -> bool:
    return all(not g.has_edge(u, v) for u, v in combinations(members, 2))


def is_dominating_set(g: Graph, members: tuple[int, ...]) -> bool:
    covered = 0
    for v in members:
        covered |= g.adj[v] | (1 << v)
    return covered == g.full_mask


def is_vertex_cover(g: Graph, members: tuple[int, ...]) -> bool:
    mask = 0
    for v in members:
        mask |= 1 << v
    return all((mask >> u) & 1 or (mask >> v) & 1 for u, v in g.edges())


def is_matching(g: Graph, edges: EdgeSet) -> bool:
    used = 0
    for u, v in edges:
        m = (1 << u) | (1 << v)
        if used & m or not g.has_edge(u, v):
            return False
        used |= m
    return True


def is_edge_cover(g: Graph, edges: EdgeSet) -> bool:
    covered = 0
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        covered |= (1 << u) | (1 << v)
    return covered == g.full_mask


# -- maximum independent set ------------------------------------------------


def _greedy_independent_size(adj: tuple[int, ...], cand: int) -> int:
    size = 0
    while cand:
        pick = -1
        pick_deg = 1 << 30
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (adj[v] & cand).bit_count()
            if d < pick_deg:
                pick, pick_deg = v, d
        cand &= ~(adj[pick] | (1 << pick))
        size += 1
    return size


def _mis_size(adj: tuple[int, ...], cand: int, target: int | None = None) -> int:
    """Maximum independent set size within the candidate mask.

    Branches on a maximum-degree vertex of the induced subgraph, seeded with
    a greedy incumbent.  With ``target`` set, the search may stop as soon as
    the incumbent reaches it (enough for feasibility tests).
    """
    best = _greedy_independent_size(adj, cand)
    if target is not None and best >= target:
        return best
    done = False

    def rec(cand: int, size: int) -> None:
        nonlocal best, done
        if done or size + cand.bit_count() <= best:
            return
        pick = -1
        pick_deg = -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (adj[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg == 0:
            # induced subgraph is edgeless: take everything
            best = size + cand.bit_count()
            if target is not None and best >= target:
                done = True
            return
        rec(cand & ~(adj[pick] | (1 << pick)), size + 1)
        rec(cand & ~(1 << pick), size)

    rec(cand, 0)
    return best


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum size of a pairwise non-adjacent vertex set, with lex-min witness."""
    _check_cap(g)
    adj = g.adj
    size = _mis_size(adj, g.full_mask)
    members: list[int] = []
    cand = g.full_mask
    floor = 0
    for need in range(size, 0, -1):
        for v in range(floor, g.order):
            if not (cand >> v) & 1:
                continue
            rest = cand & ~adj[v] & -(1 << (v + 1))
            if need == 1 or _mis_size(adj, rest, target=need - 1) >= need - 1:
                members.append(v)
                cand = rest
                floor = v + 1
                break
        else:  # pragma: no cover - construction preserves feasibility
            raise AssertionError("independent-set witness lost feasibility")
    return size, tuple(members)


# -- minimum dominating set ---------------------------------------------------


def _min_dominating(
    closed: tuple[int, ...], n: int, allowed: int, forced: int, bound: int | None = None
) -> int | None:
    """Exact minimum size of a dominating set S with forced <= S <= forced|allowed.

    Returns None when no such set exists or the minimum provably exceeds
    ``bound``.  ``closed[v]`` must be the closed neighborhood mask of v.
    """
    full = (1 << n) - 1
    covered0 = 0
    for v in iter_bits(forced):
        covered0 |= closed[v]
    uncovered = full & ~covered0
    for v in iter_bits(uncovered):
        if not closed[v] & allowed:
            return None

    # greedy feasible incumbent
    cov = covered0
    al = allowed
    ub = forced.bit_count()
    while cov != full:
        pick = -1
        gain = 0
        m = al
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (closed[v] & ~cov).bit_count()
            if d > gain:
                pick, gain = v, d
        cov |= closed[pick]
        al &= ~(1 << pick)
        ub += 1

    best = ub
    cap = bound + 1 if bound is not None else 1 << 30

    def rec(cov: int, al: int, size: int) -> None:
        nonlocal best
        if cov == full:
            if size < best:
                best = size
            return
        cut = min(best, cap)
        rest = full & ~cov
        gain = 0
        m = al
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (closed[v] & rest).bit_count()
            if d > gain:
                gain = d
        if gain == 0:
            return
        if size + -(-rest.bit_count() // gain) >= cut:
            return
        # branch over the coverers of a most-constrained uncovered vertex
        pick = -1
        pick_opts = 1 << 30
        m = rest
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            c = (closed[v] & al).bit_count()
            if c < pick_opts:
                pick, pick_opts = v, c
        if pick_opts == 0:
            return
        al2 = al
        for w in iter_bits(closed[pick] & al):
            al2 &= ~(1 << w)
            rec(cov | closed[w], al2, size + 1)

    rec(covered0, allowed, forced.bit_count())
    if bound is not None and best > bound:
        return None
    return best


def domination_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum size of a set whose closed neighborhood is everything, with witness.

    Isolated vertices are necessarily members of every dominating set and end
    up in the witness automatically.
    """
    _check_cap(g)
    n = g.order
    closed = tuple(g.adj[v] | (1 << v) for v in range(n))
    size = _min_dominating(closed, n, g.full_mask, 0)
    assert size is not None
    members: list[int] = []
    picked = 0
    floor = 0
    for _ in range(size):
        for v in range(floor, n):
            above = g.full_mask & -(1 << (v + 1))
            if _min_dominating(closed, n, above, picked | (1 << v), bound=size) is not None:
                members.append(v)
                picked |= 1 << v
                floor = v + 1
                break
        else:  # pragma: no cover
            raise AssertionError("dominating-set witness lost feasibility")
    return size, tuple(members)


# -- maximum matching ---------------------------------------------------------


def _max_matching(
    edges: list[tuple[int, int]], n: int, used0: int = 0, target: int | None = None
) -> int:
    """Maximum number of pairwise disjoint edges avoiding the vertices in used0.

    Recursive include/exclude search over the (sorted) edge list with
    incumbent pruning; no augmenting-path machinery.
    """
    masks = [(1 << u) | (1 << v) for u, v in edges]
    m = len(masks)
    full = (1 << n) - 1

    # greedy incumbent
    used = used0
    best = 0
    for mask in masks:
        if not mask & used:
            used |= mask
            best += 1
    if target is not None and best >= target:
        return best
    done = False

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best, done
        if done:
            return
        while i < m and masks[i] & used:
            i += 1
        if i == m:
            if size > best:
                best = size
                if target is not None and best >= target:
                    done = True
            return
        free = (full & ~used).bit_count()
        if size + min(m - i, free // 2) <= best:
            return
        rec(i + 1, used | masks[i], size + 1)
        rec(i + 1, used, size)

    rec(0, used0, 0)
    return best


def matching_number(g: Graph) -> tuple[int, EdgeSet]:
    """Maximum number of pairwise disjoint edges, with lex-min witness."""
    _check_cap(g)
    edges = g.edges()
    n = g.order
    size = _max_matching(edges, n)
    chosen: list[tuple[int, int]] = []
    used = 0
    start = 0
    for need in range(size, 0, -1):
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            mask = (1 << u) | (1 << v)
            if mask & used:
                continue
            if need == 1 or _max_matching(edges[idx + 1 :], n, used | mask, target=need - 1) >= need - 1:
                chosen.append(edges[idx])
                used |= mask
                start = idx + 1
                break
        else:  # pragma: no cover
            raise AssertionError("matching witness lost feasibility")
    return size, tuple(chosen)


# -- covering numbers (Gallai complements) -----------------------------------


def vertex_cover_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum vertex set meeting every edge.

    The value is order - independence number; the witness is the complement
    of the lexicographically largest maximum independent set, which is the
    lex-min minimum vertex cover (complementation reverses the order).
    """
    _check_cap(g)
    adj = g.adj
    n = g.order
    beta = _mis_size(adj, g.full_mask)
    members: list[int] = []
    cand = g.full_mask
    floor = 0
    for need in range(beta, 0, -1):
        for v in range(n - 1, floor - 1, -1):
            if not (cand >> v) & 1:
                continue
            rest = cand & ~adj[v] & -(1 << (v + 1))
            if need == 1 or _mis_size(adj, rest, target=need - 1) >= need - 1:
                members.append(v)
                cand = rest
                floor = v + 1
                break
        else:  # pragma: no cover
            raise AssertionError("vertex-cover witness lost feasibility")
    inside = set(members)
    return n - beta, tuple(v for v in range(n) if v not in inside)


def edge_cover_number(g: Graph) -> tuple[int, EdgeSet]:
    """Minimum edge set touching every vertex (needs minimum degree >= 1).

    The value is order - matching number.  The lex-min witness is built edge
    by edge; structurally it is always a maximum matching extended by one
    incident edge per unmatched vertex.
    """
    _check_cap(g)
    for v in range(g.order):
        if not g.adj[v]:
            raise IsolatedVertexError(v)
    edges = g.edges()
    n = g.order
    full = g.full_mask
    size = n - _max_matching(edges, n)

    chosen: list[tuple[int, int]] = []
    covered = 0
    start = 0
    for need in range(size, 0, -1):
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            mask = (1 << u) | (1 << v)
            if not mask & ~covered:
                continue
            rest = full & ~(covered | mask)
            tail = edges[idx + 1 :]
            if rest:
                if any(not any(u2 == r or v2 == r for u2, v2 in tail) for r in iter_bits(rest)):
                    continue
                inner = [e for e in tail if (rest >> e[0]) & 1 and (rest >> e[1]) & 1]
                nu = _max_matching(inner, n)
                remaining = rest.bit_count() - nu
            else:
                remaining = 0
            if len(chosen) + 1 + remaining == size:
                chosen.append(edges[idx])
                covered |= mask
                start = idx + 1
                break
        else:  # pragma: no cover
            raise AssertionError("edge-cover witness lost feasibility")
    return size, tuple(chosen)


# -- definition-only oracle ---------------------------------------------------

BRUTE_PARAMETERS = ("gamma", "beta", "alpha", "beta1", "alpha1")


def brute_invariant(g: Graph, which: str) -> int:
    """Recompute a parameter by exhaustive subset enumeration, definition only.

    ``which`` is one of ``gamma`` (domination), ``beta`` (independence),
    ``alpha`` (vertex cover), ``beta1`` (matching), ``alpha1`` (edge cover).
    Vertex parameters cap at order 20, edge parameters at 20 edges.
    """
    n = g.order
    verts = range(n)
    if which in ("gamma", "beta", "alpha"):
        if n > BRUTE_VERTEX_CAP:
            raise CapacityError(f"brute vertex parameters cap at order {BRUTE_VERTEX_CAP}")
        if which == "gamma":
            for k in range(n + 1):
                for comb in combinations(verts, k):
                    s = set(comb)
                    if all(v in s or any(u in s for u in g.neighbors(v)) for v in verts):
                        return k
        elif which == "beta":
            for k in range(n, -1, -1):
                for comb in combinations(verts, k):
                    if all(not g.has_edge(u, v) for u, v in combinations(comb, 2)):
                        return k
        else:
            all_edges = g.edges()
            for k in range(n + 1):
                for comb in combinations(verts, k):
                    s = set(comb)
                    if all(u in s or v in s for u, v in all_edges):
                        return k
    elif which in ("beta1", "alpha1"):
        all_edges = g.edges()
        m = len(all_edges)
        if m > BRUTE_EDGE_CAP:
            raise CapacityError(f"brute edge parameters cap at {BRUTE_EDGE_CAP} edges")
        if which == "beta1":
            for k in range(min(m, n // 2), -1, -1):
                for comb in combinations(all_edges, k):
                    ends = [x for e in comb for x in e]
                    if len(set(ends)) == 2 * k:
                        return k
        else:
            for v in verts:
                if g.degree(v) == 0:
                    raise IsolatedVertexError(v)
            for k in range(1, m + 1):
                for comb in combinations(all_edges, k):
                    if len({x for e in comb for x in e}) == n:
                        return k
    else:
        raise ValueError(f"unknown parameter {which!r}; expected one of {BRUTE_PARAMETERS}")
    raise AssertionError("exhaustive scan found no feasible cardinality")  # pragma: no cover


# -- bundle --------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantBundle:
    """All covering/independence-type parameters of one graph, with witnesses.

    ``alpha1`` and its witness are None exactly when the graph has an
    isolated vertex (no edge cover exists then).
    """

    delta: int
    gamma: int
    alpha: int
    beta: int
    beta1: int
    alpha1: int | None
    gamma_witness: tuple[int, ...]
    alpha_witness: tuple[int, ...]
    beta_witness: tuple[int, ...]
    beta1_witness: EdgeSet
    alpha1_witness: EdgeSet | None


def compute_bundle(g: Graph) -> InvariantBundle:
    """Compute every parameter once, validating each witness on the way out."""
    _check_cap(g)
    delta = min_degree(g)
    gamma, gamma_w = domination_number(g)
    beta, beta_w = independence_number(g)
    alpha, alpha_w = vertex_cover_number(g)
    beta1, beta1_w = matching_number(g)
    if delta >= 1:
        alpha1, alpha1_w = edge_cover_number(g)
    else:
        alpha1, alpha1_w = None, None

    n = g.order
    assert is_dominating_set(g, gamma_w) and len(gamma_w) == gamma
    assert is_independent_set(g, beta_w) and len(beta_w) == beta
    assert is_vertex_cover(g, alpha_w) and len(alpha_w) == alpha
    assert is_matching(g, beta1_w) and len(beta1_w) == beta1
    assert alpha + beta == n
    if alpha1 is not None:
        assert alpha1_w is not None
        assert is_edge_cover(g, alpha1_w) and len(alpha1_w) == alpha1
        assert alpha1 + beta1 == n
    return InvariantBundle(
        delta=delta,
        gamma=gamma,
        alpha=alpha,
        beta=beta,
        beta1=beta1,
        alpha1=alpha1,
        gamma_witness=gamma_w,
        alpha_witness=alpha_w,
        beta_witness=beta_w,
        beta1_witness=beta1_w,
        alpha1_witness=alpha1_w,
    )
