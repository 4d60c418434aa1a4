"""Desk-scale ground truth: exhaustive code search and a spherical minimax heuristic.

The exact searcher is a branch-and-bound maximum clique over the graph on
all q^r words with edges at Hamming distance >= s.  Candidate sets live in
arbitrary-precision bitmasks; the bound at each node is a greedy clique-cover
coloring of the candidates (classes are sets pairwise closer than s), which
prunes dense low-distance instances that a size-only bound cannot touch.
"""

import sys
from dataclasses import dataclass

import numpy as np

from .codes import QaryCode, UnitVectorSet, hamming_distance
from .errors import NodeLimitExceeded, PreconditionViolated

MAX_SEARCH_SPACE = 8192


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one search: optimum size or achieved alpha, plus the witness."""

    value: object            # int size (exact) or float alpha (heuristic)
    witness: object          # QaryCode or UnitVectorSet
    nodes: int               # nodes expanded / iterations run
    optimal: bool = None     # exhaustiveness flag; None for heuristics
    seed: int = None


def _all_words(q, r):
    words = [()]
    for _ in range(r):
        words = [w + (s,) for w in words for s in range(q)]
    return words


def greedy_lexicode(q: int, r: int, s: int) -> QaryCode:
    """Keep each word (lexicographic scan) at distance >= s from all kept words."""
    if not 1 <= s <= r:
        raise PreconditionViolated(f"need 1 <= s <= r, got s={s}, r={r}")
    kept = []
    for w in _all_words(q, r):
        if all(hamming_distance(w, k) >= s for k in kept):
            kept.append(w)
    return QaryCode(q, r, tuple(kept), claimed_distance=s)


def _compatibility_masks(q, r, s):
    """Per-word bitmask of words at Hamming distance >= s (numpy-packed)."""
    n = q ** r
    digits = np.zeros((n, r), dtype=np.int8)
    idx = np.arange(n)
    for pos in range(r):
        digits[:, pos] = idx % q
        idx = idx // q
    masks = []
    for u in range(n):
        dist = (digits != digits[u]).sum(axis=1)
        ok = dist >= s
        ok[u] = False
        packed = np.packbits(ok, bitorder="little").tobytes()
        masks.append(int.from_bytes(packed, "little"))
    return masks


def exact_max_code(q: int, r: int, s: int, node_limit: int = 10_000_000) -> SearchResult:
    """Maximum size of a q-ary code with block length r and distance >= s.

    The all-zero word is pinned (symbol permutations per coordinate preserve
    distances and act transitively, so some maximum code contains it).  Raises
    NodeLimitExceeded carrying the best witness when the budget runs out.
    """
    if not 1 <= s <= r:
        raise PreconditionViolated(f"need 1 <= s <= r, got s={s}, r={r}")
    n_words = q ** r
    if n_words > MAX_SEARCH_SPACE:
        raise PreconditionViolated(
            f"search space {q}^{r} = {n_words} exceeds {MAX_SEARCH_SPACE}")
    # recursion depth is bounded by the maximum code size
    limit = sys.getrecursionlimit()
    if limit < n_words + 128:
        sys.setrecursionlimit(n_words + 128)
    comp = _compatibility_masks(q, r, s)
    seed_code = greedy_lexicode(q, r, s)
    best_size = len(seed_code)
    best_words = [tuple(w) for w in seed_code.words]
    nodes = 0
    stack_words = [0]

    class _Budget(Exception):
        pass

    def decode(w):
        out = []
        for _ in range(r):
            out.append(w % q)
            w //= q
        return tuple(out)

    def expand(cand):
        nonlocal nodes, best_size, best_words
        nodes += 1
        if nodes > node_limit:
            raise _Budget()
        size = len(stack_words)
        if size > best_size:
            best_size = size
            best_words = [decode(w) for w in stack_words]
        if not cand:
            return
        # greedy clique-cover coloring: classes are pairwise at distance < s
        classes = []
        order = []
        w = cand
        while w:
            v = (w & -w).bit_length() - 1
            w &= w - 1
            cv = comp[v]
            for ci in range(len(classes)):
                if cv & classes[ci] == 0:
                    classes[ci] |= 1 << v
                    order.append((ci + 1, v))
                    break
            else:
                classes.append(1 << v)
                order.append((len(classes), v))
        live = cand
        for color, v in reversed(order):
            if size + color <= best_size:
                return
            live &= ~(1 << v)
            stack_words.append(v)
            expand(live & comp[v])
            stack_words.pop()

    try:
        expand(comp[0])
        optimal = True
    except _Budget:
        optimal = False
    witness = QaryCode(q, r, tuple(best_words), claimed_distance=s)
    result = SearchResult(best_size, witness, nodes, optimal=optimal)
    if not optimal:
        raise NodeLimitExceeded(result)
    return result


def _max_offdiag(gram):
    g = gram.copy()
    np.fill_diagonal(g, -np.inf)
    return float(g.max())


def heuristic_rho(r: int, n: int, iterations: int = 2000, seed: int = 0,
                  tau0: float = 1.0, decay: float = 0.97,
                  step0: float = 0.5) -> SearchResult:
    """Push n unit vectors in R^r apart by annealed log-sum-exp descent.

    Each iteration smooths the maximum pairwise inner product at temperature
    tau_i = tau0 * decay^i (floored to stay in float range), takes one
    normalized tangent step against its gradient, and renormalizes to the
    sphere.  The step length backtracks whenever the true maximum got worse
    and grows otherwise, which lets late iterations polish to ~1e-12.
    Deterministic for a fixed seed; the reported value is the true maximum
    pairwise inner product of the final configuration.
    """
    if n < 2 or r < 1:
        raise PreconditionViolated(f"need n >= 2 and r >= 1, got n={n}, r={r}")
    rng = np.random.default_rng(seed)
    v = rng.normal(size=(n, r))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    pair_mask = ~np.eye(n, dtype=bool)
    step = step0
    previous_max = np.inf
    for i in range(iterations):
        tau = max(tau0 * decay ** i, 1e-9)
        gram = v @ v.T
        current_max = gram[pair_mask].max()
        shifted = np.where(pair_mask, (gram - current_max) / tau, -np.inf)
        weights = np.exp(shifted)
        weights /= weights.sum()
        grad = weights @ v                      # d/dv_i of the smoothed max
        grad -= (grad * v).sum(axis=1, keepdims=True) * v   # tangent part
        if current_max > previous_max:
            step = max(step * 0.5, 1e-12)
        else:
            step = min(step * 1.05, step0)
        previous_max = current_max
        norm = np.linalg.norm(grad)
        if norm > 0:
            v -= step * grad / norm
        v /= np.linalg.norm(v, axis=1, keepdims=True)
    gram = v @ v.T
    achieved = _max_offdiag(gram)
    witness = UnitVectorSet(r, tuple(map(tuple, v.tolist())))
    return SearchResult(achieved, witness, iterations, optimal=None, seed=seed)
