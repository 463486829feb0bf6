"""Graph-theoretic quantities of a square max-plus matrix.

A square matrix A induces a weighted digraph with an arc (i, j) of weight
a_ij for every entry above epsilon.  This module computes the maximum cycle
mean lambda(A) with Karp's dynamic program (run per strongly connected
component), the Kleene star A* = I + A + A^2 + ... via a Floyd-Warshall
sweep, and the shifted star of A - lambda.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, EPSILON, TropMatrix
from .errors import DimensionMismatchError, DivergentStarError


@dataclass(frozen=True)
class Digraph:
    """Weighted digraph on nodes 0..node_count-1 with finite arc weights."""

    node_count: int
    arcs: tuple[tuple[int, int, float], ...]

    @classmethod
    def from_matrix(cls, a: TropMatrix) -> "Digraph":
        if a.rows != a.cols:
            raise DimensionMismatchError(f"matrix is not square: {a.shape}")
        arcs = []
        data = a.data
        for i in range(a.rows):
            for j in range(a.cols):
                w = data[i, j]
                if w > EPSILON:
                    arcs.append((i, j, float(w)))
        return cls(a.rows, tuple(arcs))


@dataclass(frozen=True)
class CycleMeanResult:
    """Maximum cycle mean and, when a cycle exists, one witness attaining it.

    lambda_ is epsilon exactly when the digraph is acyclic.  The witness is an
    elementary cycle given as a node sequence without the closing repeat.
    """

    lambda_: float
    witness_cycle: tuple[int, ...] | None


def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative.

    Components are returned sorted by their smallest node, each component
    sorted internally, so the output is deterministic.
    """
    n = g.node_count
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j, _w in g.arcs:
        adj[i].append(j)
    for neighbors in adj:
        neighbors.sort()

    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work: list[tuple[int, object]] = [(root, iter(adj[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                comps.append(comp)

    comps.sort(key=lambda c: c[0])
    return comps


def _karp_tables(nodes: list[int], arcs: list[tuple[int, int, float]]):
    """Karp tables for one strongly connected component.

    Returns (best_value, best_node, walk_weights, predecessors) where
    walk_weights[k][v] is the maximum weight of a walk with exactly k arcs
    from the source (local node 0) to local node v, -inf if none exists.
    """
    local = {node: k for k, node in enumerate(nodes)}
    size = len(nodes)
    in_arcs: list[list[tuple[int, float]]] = [[] for _ in range(size)]
    for i, j, w in arcs:
        in_arcs[local[j]].append((local[i], w))

    walk = [[EPSILON] * size for _ in range(size + 1)]
    pred = [[-1] * size for _ in range(size + 1)]
    walk[0][0] = 0.0
    for k in range(1, size + 1):
        row_prev = walk[k - 1]
        row = walk[k]
        prow = pred[k]
        for v in range(size):
            best = EPSILON
            best_u = -1
            # -inf + w stays -inf, so unreachable predecessors never win
            for u, w in in_arcs[v]:
                cand = row_prev[u] + w
                if cand > best:
                    best = cand
                    best_u = u
            row[v] = best
            prow[v] = best_u

    best_value = EPSILON
    best_node = -1
    last = walk[size]
    for v in range(size):
        if last[v] == EPSILON:
            continue
        worst = None
        for k in range(size):
            if walk[k][v] == EPSILON:
                continue
            ratio = (last[v] - walk[k][v]) / (size - k)
            if worst is None or ratio < worst:
                worst = ratio
        if worst is not None and worst > best_value:
            best_value = worst
            best_node = v
    return best_value, best_node, walk, pred


def _critical_cycle(nodes: list[int], pred: list[list[int]], end: int) -> tuple[int, ...]:
    """Extract an elementary cycle from the arg-max walk ending at `end`.

    The walk realizing the final Karp row visits more nodes than the
    component has, so it repeats one; the segment between the first repeat is
    an elementary cycle attaining the component's cycle mean.
    """
    size = len(nodes)
    path = [end]
    v = end
    for k in range(size, 0, -1):
        v = pred[k][v]
        path.append(v)
    path.reverse()

    seen: dict[int, int] = {}
    for pos, v in enumerate(path):
        if v in seen:
            segment = path[seen[v]:pos]
            return tuple(nodes[u] for u in segment)
        seen[v] = pos
    raise AssertionError("walk of length n must repeat a node")


def max_cycle_mean(a: TropMatrix) -> CycleMeanResult:
    """Maximum mean over all elementary cycles of the digraph of A.

    Karp's dynamic program is run on each strongly connected component that
    contains at least one arc; the answer is the maximum over components and
    epsilon when the digraph is acyclic.
    """
    g = Digraph.from_matrix(a)
    comps = strongly_connected_components(g)

    best = EPSILON
    best_payload = None
    for comp in comps:
        members = set(comp)
        arcs = [(i, j, w) for (i, j, w) in g.arcs if i in members and j in members]
        if not arcs:
            continue
        value, node, _walk, pred = _karp_tables(comp, arcs)
        if value > best:
            best = value
            best_payload = (comp, pred, node)

    if best_payload is None:
        return CycleMeanResult(EPSILON, None)
    comp, pred, node = best_payload
    return CycleMeanResult(best, _critical_cycle(comp, pred, node))


def _star_sweep(data: np.ndarray) -> np.ndarray:
    n = data.shape[0]
    out = np.array(data)
    idx = np.arange(n)
    out[idx, idx] = np.maximum(out[idx, idx], 0.0)
    for k in range(n):
        np.maximum(out, out[:, k:k + 1] + out[k:k + 1, :], out=out)
    return out


def kleene_star(a: TropMatrix, tol: float = DEFAULT_TOL) -> TropMatrix:
    """Strong transitive closure A* = I + A + A^2 + ...

    The series is finite only when the maximum cycle mean is nonpositive, in
    which case it equals the partial sum up to exponent n-1 and is computed
    by a Floyd-Warshall sweep in O(n^3).
    """
    cm = max_cycle_mean(a)
    if cm.lambda_ > tol:
        raise DivergentStarError(
            f"star series diverges: maximum cycle mean {cm.lambda_} > 0",
            lambda_=cm.lambda_, witness_cycle=cm.witness_cycle)
    return TropMatrix(_star_sweep(a.data))


def kleene_star_scaled(a: TropMatrix, lam: float, tol: float = DEFAULT_TOL) -> TropMatrix:
    """Kleene star of the matrix with every entry shifted down by lam.

    Converges exactly when lam is at least the maximum cycle mean of A.
    """
    if a.rows != a.cols:
        raise DimensionMismatchError(f"matrix is not square: {a.shape}")
    cm = max_cycle_mean(a)
    if lam < cm.lambda_ - tol:
        raise DivergentStarError(
            f"shifted star diverges: shift {lam} below maximum cycle mean {cm.lambda_}",
            lambda_=cm.lambda_, witness_cycle=cm.witness_cycle)
    return TropMatrix(_star_sweep(a.data - lam))
