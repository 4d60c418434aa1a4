"""Code objects and the inequality verifiers built on their Gram matrices.

A ``UnitVectorSet`` may carry an exact Gram oracle alongside float
coordinates; constructions with irrational coordinates but rational inner
products (simplices, distance-based embeddings) use this to keep all
certificates in exact arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .certificates import Certificate, make_link
from .errors import (AlphaOutOfRange, DuplicateCodewords, InvalidCode,
                     NonUnitVector, TooFewWords)
from .linalg import SymMatrix, rank, trace_of_square
from .scalars import EXACT, Scalar, Tolerance, format_scalar, join_modes, mode_of


@dataclass(frozen=True)
class UnitVectorSet:
    """n vectors in R^d claimed to lie on the unit sphere."""

    dimension: int
    vectors: tuple
    labels: tuple = ()
    exact_gram: SymMatrix = None

    def __post_init__(self):
        vectors = tuple(tuple(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        if not vectors:
            raise InvalidCode("a vector set needs at least one vector")
        for i, v in enumerate(vectors):
            if len(v) != self.dimension:
                raise InvalidCode(f"vector {i} has {len(v)} coordinates, expected {self.dimension}")
        labels = tuple(self.labels) or tuple(f"v{i}" for i in range(len(vectors)))
        if len(labels) != len(vectors):
            raise InvalidCode("label count differs from vector count")
        object.__setattr__(self, "labels", labels)
        if self.exact_gram is not None and self.exact_gram.n != len(vectors):
            raise InvalidCode("exact Gram dimension differs from vector count")

    def __len__(self):
        return len(self.vectors)

    def mode(self) -> str:
        if self.exact_gram is not None:
            return EXACT
        return join_modes(*(mode_of(x) for v in self.vectors for x in v))

    def raw_gram(self) -> SymMatrix:
        """Gram matrix without any unit-norm enforcement."""
        if self.exact_gram is not None:
            return self.exact_gram
        n = len(self.vectors)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            vi = self.vectors[i]
            for j in range(i, n):
                vj = self.vectors[j]
                s = 0
                for a, b in zip(vi, vj):
                    s += a * b
                rows[i][j] = rows[j][i] = s
        return SymMatrix(rows)


@dataclass(frozen=True)
class GramAnalysis:
    """Gram matrix plus the per-vertex negative-edge data the lemmas use."""

    gram: SymMatrix
    alpha: Scalar
    nplus: tuple      # per vertex, indices with inner product >= 0
    nminus: tuple     # per vertex, indices with inner product < 0
    gamma: tuple      # per vertex, sum of negative inner products
    labels: tuple

    @property
    def n(self) -> int:
        return self.gram.n

    def mode(self) -> str:
        return self.gram.mode()


@dataclass(frozen=True)
class QaryCode:
    """Codewords over {0..q-1} of a fixed block length, pairwise distinct."""

    q: int
    r: int
    words: tuple
    claimed_distance: int = None

    def __post_init__(self):
        if self.q < 2:
            raise InvalidCode(f"alphabet size {self.q} < 2")
        if self.r < 1:
            raise InvalidCode(f"block length {self.r} < 1")
        words = tuple(tuple(int(s) for s in w) for w in self.words)
        object.__setattr__(self, "words", words)
        for w in words:
            if len(w) != self.r:
                raise InvalidCode(f"codeword {w} has length {len(w)}, expected {self.r}")
            for s in w:
                if not 0 <= s < self.q:
                    raise InvalidCode(f"symbol {s} out of range [0, {self.q})")
        if len(set(words)) != len(words):
            raise DuplicateCodewords("codewords must be pairwise distinct")

    def __len__(self):
        return len(self.words)


def hamming_distance(x, y) -> int:
    return sum(1 for a, b in zip(x, y) if a != b)


def min_distance(code: QaryCode) -> int:
    """Minimum pairwise Hamming distance; needs at least two codewords."""
    if len(code) < 2:
        raise TooFewWords(f"need >= 2 codewords, got {len(code)}")
    words = code.words
    best = code.r
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            d = hamming_distance(words[i], words[j])
            if d < best:
                best = d
                if best == 0:
                    return 0
    return best


def gram_analyze(vset: UnitVectorSet, tol: Tolerance = Tolerance()) -> GramAnalysis:
    """Gram matrix with per-vertex sign partition and negative-edge sums.

    Raises NonUnitVector if any diagonal entry is off the unit sphere (exactly
    in exact mode, within tolerance in float mode).  Ties at inner product 0
    are classified as nonnegative.
    """
    gram = vset.raw_gram()
    mode = gram.mode()
    for i in range(gram.n):
        if not tol.unit_norm_ok(gram.rows[i][i], mode):
            raise NonUnitVector(i, gram.rows[i][i])
    n = gram.n
    alpha = -1 if n == 1 else max(gram.rows[i][j] for i in range(n) for j in range(n) if i != j)
    nplus, nminus, gamma = [], [], []
    for u in range(n):
        row = gram.rows[u]
        plus = tuple(v for v in range(n) if v != u and row[v] >= 0)
        minus = tuple(v for v in range(n) if v != u and row[v] < 0)
        g = 0
        for v in minus:
            g += row[v]
        nplus.append(plus)
        nminus.append(minus)
        gamma.append(g)
    return GramAnalysis(gram, alpha, tuple(nplus), tuple(nminus), tuple(gamma), vset.labels)


def verify_spherical_code(vset: UnitVectorSet, alpha_claim: Scalar,
                          tol: Tolerance = Tolerance()) -> Certificate:
    """Certify that all norms are 1 and all pairwise products lie in [-1, claim].

    Violations are failing links, never exceptions.
    """
    gram = vset.raw_gram()
    n = gram.n
    worst_norm = max(abs(gram.rows[i][i] - 1) for i in range(n))
    links = [make_link("unit norms (max |<v,v>| deviation from 1)", worst_norm, 0, tol)]
    if n >= 2:
        off = [gram.rows[i][j] for i in range(n) for j in range(i + 1, n)]
        links.append(make_link("pairwise inner products at most the claim",
                               max(off), alpha_claim, tol))
        links.append(make_link("pairwise inner products at least -1",
                               -1, min(off), tol))
    else:
        links.append(make_link("pairwise inner products at most the claim (empty: -1)",
                               -1, alpha_claim, tol))
    return Certificate.from_links("spherical-code", links,
                                  meta={"n": n, "dimension": vset.dimension,
                                        "alpha_claim": format_scalar(alpha_claim)})


def _require_alpha_in_range(alpha):
    if alpha < 0 or alpha >= 1:
        raise AlphaOutOfRange(alpha)


def verify_lemma_beta(analysis: GramAnalysis, tol: Tolerance = Tolerance()) -> Certificate:
    """Per vertex u: sum of squared negative products <= 1 + alpha * gamma(u)^2."""
    _require_alpha_in_range(analysis.alpha)
    alpha = analysis.alpha
    links = []
    for u in range(analysis.n):
        row = analysis.gram.rows[u]
        lhs = 0
        for v in analysis.nminus[u]:
            lhs += row[v] * row[v]
        g = analysis.gamma[u]
        links.append(make_link(f"negative-edge energy at vertex {analysis.labels[u]}",
                               lhs, 1 + alpha * g * g, tol))
    return Certificate.from_links("negative-edge-energy", links,
                                  meta={"alpha": format_scalar(alpha), "n": analysis.n})


def verify_lemma_gamma(analysis: GramAnalysis, tol: Tolerance = Tolerance()) -> Certificate:
    """Sum over u of gamma(u)^2 <= 27/4 * (1 + alpha*n)^2 * n."""
    _require_alpha_in_range(analysis.alpha)
    alpha, n = analysis.alpha, analysis.n
    lhs = 0
    for g in analysis.gamma:
        lhs += g * g
    t = alpha * n
    rhs = Fraction(27, 4) * (1 + t) * (1 + t) * n
    link = make_link("total squared negative-edge load", lhs, rhs, tol)
    return Certificate.from_links("negative-edge-load", [link],
                                  meta={"alpha": format_scalar(alpha), "n": n})


def certify_chain(vset: UnitVectorSet, tol: Tolerance = Tolerance()) -> Certificate:
    """Full inequality chain from the Gram spectra to the size bound.

    Links, in order: (i) n^2/rank <= tr(M^2); (ii) tr(M^2) <= 2n + t^2 +
    27/4 (1+t)^2 t with t = alpha*n; (iii) that alpha term <= 27/4((1+t)^3 - 1);
    (iv) n - 2*rank <= 27/8 ((1+t)^3 - 1).  The rank is used where the ambient
    dimension would also be valid (rank <= dimension, so the chain is at least
    as strong); both numbers are recorded in the metadata.
    """
    analysis = gram_analyze(vset, tol)
    _require_alpha_in_range(analysis.alpha)
    gram = analysis.gram
    n = analysis.n
    rk = rank(gram, tol)
    alpha = analysis.alpha
    t = alpha * n
    tsq = trace_of_square(gram)
    exact = gram.mode() == EXACT

    def ratio(num, den):
        return Fraction(num, den) if exact else num / den

    c274 = Fraction(27, 4)
    alpha_terms = t * t + c274 * (1 + t) * (1 + t) * t
    envelope = c274 * ((1 + t) ** 3 - 1)
    links = [
        make_link("squared trace over rank at most trace of square",
                  ratio(n * n, rk), tsq, tol),
        make_link("trace of square at most the negative-edge bound",
                  tsq, 2 * n + alpha_terms, tol),
        make_link("alpha terms at most the cubic envelope",
                  alpha_terms, envelope, tol),
        make_link("size excess over twice the rank at most the cubic bound",
                  n - 2 * rk, Fraction(1, 2) * envelope, tol),
    ]
    return Certificate.from_links(
        "gram-chain", links,
        meta={"n": n, "rank": rk, "ambient_dimension": vset.dimension,
              "alpha": format_scalar(alpha)})
