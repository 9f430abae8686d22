"""Error-correcting code parameters, bound curves, ensembles and the
complexity-weighted partition sum.

Conventions:

* words are tuples of integer symbols in range(q);
* k is floor(log_q card) -- ensembles contain codes of non-power sizes, so
  the bracket convention matters and is pinned here;
* codes of cardinality 1 are rejected outright (the minimum distance is a
  minimum over distinct pairs and would be undefined);
* for linear codes the minimum distance is computed as the minimum nonzero
  codeword weight, which equals the pairwise minimum and keeps large
  Reed-Solomon checks tractable; unstructured codes use the pairwise scan.

Everything here is exact except partition sums, which are evaluated in
binary64 with compensated summation (the exponents are real numbers).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import fields
from .complexity import (
    DEFAULT_PROXY,
    CodeWords,
    ComplexityProxy,
    RsCode,
    word_string,
)
from .rng import SplitMix64

WORD_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


class CodeError(ValueError):
    pass


class BudgetError(CodeError):
    pass


# ---------------------------------------------------------------------------
# basic objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Alphabet:
    q: int

    def __post_init__(self):
        if self.q < 2:
            raise CodeError(f"alphabet needs q >= 2, got {self.q}")
        if self.q > len(WORD_SYMBOLS):
            raise CodeError(f"q={self.q} exceeds the pinned symbol table")

    @property
    def field(self) -> fields.Field:
        return fields.field(self.q)

    def has_field(self) -> bool:
        return fields.has_field(self.q)


def hamming_distance(a: Sequence, b: Sequence) -> int:
    """Number of positions where two equal-length words differ."""
    if len(a) != len(b):
        raise CodeError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


@dataclass(frozen=True)
class Code:
    """A finite set of equal-length words over a q-ary alphabet."""

    alphabet: Alphabet
    n: int
    words: frozenset
    generator: Optional[tuple] = None  # rows over the field, for linear codes
    rs_params: Optional[tuple] = None  # (q, n, k, points) when built as RS

    def __post_init__(self):
        if self.n < 1:
            raise CodeError("block length must be >= 1")
        if len(self.words) < 2:
            raise CodeError("codes need at least 2 words (d is a pairwise minimum)")
        q = self.alphabet.q
        for w in self.words:
            if len(w) != self.n:
                raise CodeError(f"word {w} has length {len(w)}, expected {self.n}")
            if any(not 0 <= s < q for s in w):
                raise CodeError(f"word {w} has symbols outside range({q})")
        if self.generator is not None:
            span = _row_space(self.alphabet.field, self.generator, self.n)
            if span != self.words:
                raise CodeError("words are not the row space of the generator")

    @property
    def q(self) -> int:
        return self.alphabet.q

    def card(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[tuple]:
        return sorted(self.words)

    def canonical_string(self) -> str:
        return f"{self.q},{self.n}," + ",".join(
            word_string(w) for w in self.sorted_words()
        )

    def to_code_words(self) -> CodeWords:
        return CodeWords(
            self.q, self.n, tuple(word_string(w) for w in self.sorted_words())
        )

    def description_hints(self) -> tuple:
        if self.rs_params is not None:
            q, n, k, points = self.rs_params
            return (RsCode(q, n, k, points),)
        return ()


def _row_space(f: fields.Field, rows, n: int) -> frozenset:
    words = set()
    k = len(rows)
    coeffs = [0] * k
    while True:
        word = []
        for j in range(n):
            acc = 0
            for c, row in zip(coeffs, rows):
                if c:
                    acc = f.add(acc, f.mul(c, row[j]))
            word.append(acc)
        words.add(tuple(word))
        i = 0
        while i < k:
            coeffs[i] += 1
            if coeffs[i] < f.q:
                break
            coeffs[i] = 0
            i += 1
        else:
            break
    return frozenset(words)


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    rate: Fraction
    delta: Fraction

    def __post_init__(self):
        if not 0 < self.d <= self.n:
            raise CodeError("need 0 < d <= n")
        if not 0 <= self.k <= self.n:
            raise CodeError("need 0 <= k <= n")


def floor_log(q: int, card: int) -> int:
    """Largest k with q**k <= card."""
    k = 0
    power = q
    while power <= card:
        k += 1
        power *= q
    return k


def code_params(code: Code) -> CodeParams:
    """[n, k, d] parameters and the code point (k/n, d/n)."""
    n, q = code.n, code.q
    k = floor_log(q, code.card())
    if code.generator is not None:
        d = fields.min_weight_of_rowspace(code.alphabet.field, code.generator, n)
    elif q == 2:
        packed = [_pack_binary(w) for w in code.words]
        d = min(
            (a ^ b).bit_count()
            for i, a in enumerate(packed)
            for b in packed[i + 1 :]
        )
    else:
        ws = code.sorted_words()
        d = min(
            hamming_distance(a, b)
            for i, a in enumerate(ws)
            for b in ws[i + 1 :]
        )
    params = CodeParams(n, k, d, Fraction(k, n), Fraction(d, n))
    # Singleton bound holds for every code; treat violation as corruption.
    if params.rate + params.delta > 1 + Fraction(1, n):
        raise CodeError(f"Singleton bound violated: {params}")
    return params


def _pack_binary(word) -> int:
    v = 0
    for s in word:
        v = (v << 1) | s
    return v


# ---------------------------------------------------------------------------
# bound curves
# ---------------------------------------------------------------------------

def q_entropy(q: int, delta: float) -> float:
    """H_q(d) = d log_q(q-1) - d log_q d - (1-d) log_q (1-d), with 0 log 0 = 0."""
    if q < 2:
        raise CodeError("entropy needs q >= 2")
    if not 0.0 <= delta <= 1.0:
        raise CodeError(f"delta={delta} outside [0, 1]")
    logq = math.log(q)
    value = delta * math.log(q - 1) / logq if q > 2 else 0.0
    if 0.0 < delta:
        value -= delta * math.log(delta) / logq
    if delta < 1.0:
        value -= (1.0 - delta) * math.log(1.0 - delta) / logq
    return value


BOUND_KINDS = ("hamming", "gilbert_varshamov", "singleton")


def bound_curve(kind: str, q: int, delta: float) -> float:
    """R value of the named bound curve at delta, clamped below at 0."""
    if kind == "hamming":
        value = 1.0 - q_entropy(q, delta / 2.0)
    elif kind == "gilbert_varshamov":
        value = 1.0 - q_entropy(q, delta)
    elif kind == "singleton":
        if not 0.0 <= delta <= 1.0:
            raise CodeError(f"delta={delta} outside [0, 1]")
        value = 1.0 - delta
    else:
        raise CodeError(f"unknown bound {kind!r}; pick from {BOUND_KINDS}")
    return max(value, 0.0)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def reed_solomon(q: int, n: int, k: int, points: Optional[Sequence[int]] = None) -> Code:
    """Evaluation code of polynomials of degree < k at n distinct points.

    Defaults to the first n field elements.  d = n + 1 - k (verified
    brute-force in the tests, not assumed here).
    """
    f = fields.field(q)
    if points is None:
        points = tuple(range(n))
    points = tuple(points)
    rows = fields.rs_evaluation_rows(f, n, k, points)
    words = fields.rs_wordset(f, n, k, points)
    return Code(
        alphabet=Alphabet(q),
        n=n,
        words=words,
        generator=tuple(rows),
        rs_params=(q, n, k, points),
    )


def reed_solomon_min_distance(q: int, n: int, k: int,
                              points: Optional[Sequence[int]] = None) -> int:
    """Exhaustive minimum distance of the evaluation code, one projective
    representative per codeword, without materializing the word set."""
    f = fields.field(q)
    if points is None:
        points = tuple(range(n))
    rows = fields.rs_evaluation_rows(f, n, k, tuple(points))
    return fields.min_weight_of_rowspace(f, rows, n)


def enumerate_linear_codes(q: int, n: int, dims: Optional[Iterable[int]] = None,
                           budget: int = 100_000,
                           proxy: ComplexityProxy = DEFAULT_PROXY) -> "CodeEnsemble":
    """One code per linear subspace of F_q^n, via RREF generator matrices.

    `dims` restricts the dimensions (default 1..n).  Raises BudgetError if
    the subspace count would exceed `budget`.
    """
    f = fields.field(q)
    dims = sorted(set(dims)) if dims is not None else list(range(1, n + 1))
    if any(not 1 <= k <= n for k in dims):
        raise CodeError(f"dimensions must lie in 1..{n}")
    total = sum(_gaussian_binomial(n, k, q) for k in dims)
    if total > budget:
        raise BudgetError(f"{total} subspaces exceed budget {budget}")
    codes = []
    for k in dims:
        for rows in _rref_matrices(f, n, k):
            words = _row_space(f, rows, n)
            codes.append(Code(Alphabet(q), n, words, generator=rows))
    provenance = {"kind": "enumerate_linear", "q": q, "n": n, "dims": dims}
    return CodeEnsemble.build(codes, provenance, proxy)


def _gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    return num // den


def _rref_matrices(f: fields.Field, n: int, k: int):
    """All reduced-row-echelon k x n matrices of rank k over the field."""
    from itertools import combinations, product

    q = f.q
    for pivots in combinations(range(n), k):
        free_positions = [
            (r, c)
            for r in range(k)
            for c in range(n)
            if c > pivots[r] and c not in pivots
        ]
        for values in product(range(q), repeat=len(free_positions)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free_positions, values):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


def sample_codes(q: int, n: int, size: int, count: int, seed: int,
                 proxy: ComplexityProxy = DEFAULT_PROXY) -> "CodeEnsemble":
    """`count` uniform random size-subsets of the full word space.

    Draws from the pinned deterministic generator, so a seed regenerates
    the ensemble byte-identically.
    """
    space = q**n
    if size > space:
        raise CodeError(f"size {size} exceeds q^n = {space}")
    if size < 2:
        raise CodeError("codes need at least 2 words")
    gen = SplitMix64(seed)
    codes = []
    for _ in range(count):
        indices = gen.sample_sorted(space, size)
        words = frozenset(_decode_word(v, q, n) for v in indices)
        codes.append(Code(Alphabet(q), n, words))
    provenance = {
        "kind": "sample",
        "q": q,
        "n": n,
        "size": size,
        "count": count,
        "seed": seed,
    }
    return CodeEnsemble.build(codes, provenance, proxy)


def _decode_word(value: int, q: int, n: int) -> tuple:
    word = []
    for _ in range(n):
        word.append(value % q)
        value //= q
    return tuple(reversed(word))


# ---------------------------------------------------------------------------
# ensembles and the partition sum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnsembleEntry:
    code: Code
    params: CodeParams
    complexity: int  # K as a big integer, = 2**bits

    @property
    def complexity_bits(self) -> int:
        return self.complexity.bit_length() - 1


@dataclass(frozen=True)
class CodeEnsemble:
    """Codes sorted ascending by (complexity, canonical serialization)."""

    q: int
    entries: tuple
    provenance: dict = dc_field(compare=False)
    proxy_version: str = DEFAULT_PROXY.version

    @classmethod
    def build(cls, codes: Iterable[Code], provenance: dict,
              proxy: ComplexityProxy = DEFAULT_PROXY) -> "CodeEnsemble":
        entries = []
        q = None
        for code in codes:
            q = code.q if q is None else q
            if code.q != q:
                raise CodeError("mixed alphabets in one ensemble")
            k_hat = proxy.proxy_complexity(
                code.to_code_words(), hints=code.description_hints()
            )
            entries.append(EnsembleEntry(code, code_params(code), k_hat))
        entries.sort(key=lambda e: (e.complexity, e.code.canonical_string()))
        return cls(q or 0, tuple(entries), provenance, proxy.version)

    def __len__(self):
        return len(self.entries)


def partition_sum(ensemble: CodeEnsemble, rate: Fraction, delta_min: Fraction,
                  beta: float, eta: float = 0.01) -> tuple[float, int]:
    """Z = sum over selected codes of K^(-beta + delta(C) - 1).

    Selection: |R(C) - rate| <= eta and delta_min <= delta(C) <= 1.  Returns
    (value, number of contributing terms); an empty selection gives 0.
    Terms are 2**(bits * exponent), evaluated in binary64 and combined with
    compensated summation.
    """
    if eta < 0:
        raise CodeError("eta must be >= 0")
    eta_exact = Fraction(eta)
    terms = []
    count = 0
    for entry in ensemble.entries:
        if abs(entry.params.rate - rate) > eta_exact:
            continue
        delta = entry.params.delta
        if not delta_min <= delta <= 1:
            continue
        exponent = -beta + float(delta) - 1.0
        log2_term = entry.complexity_bits * exponent
        terms.append(math.exp(log2_term * math.log(2.0)))
        count += 1
    return math.fsum(terms), count


# ---------------------------------------------------------------------------
# CSV schemas (exact column orders are part of the contract)
# ---------------------------------------------------------------------------

def fmt17(x: float) -> str:
    return format(float(x), ".17g")


def cloud_rows(ensemble: CodeEnsemble) -> list[str]:
    """Rows in the pinned cloud schema: q,n,size,k,d,R,delta,K_bits."""
    rows = ["q,n,size,k,d,R,delta,K_bits"]
    for e in ensemble.entries:
        p = e.params
        rows.append(
            f"{ensemble.q},{p.n},{e.code.card()},{p.k},{p.d},"
            f"{fmt17(float(p.rate))},{fmt17(float(p.delta))},{e.complexity_bits}"
        )
    return rows


def sweep_rows(ensemble: CodeEnsemble, rate: Fraction, delta_min: Fraction,
               betas: Sequence[float], eta: float = 0.01) -> list[str]:
    """Rows in the pinned sweep schema: R,Delta,beta,Z,terms."""
    rows = ["R,Delta,beta,Z,terms"]
    for beta in betas:
        z, terms = partition_sum(ensemble, rate, delta_min, beta, eta)
        rows.append(
            f"{fmt17(float(rate))},{fmt17(float(delta_min))},"
            f"{fmt17(beta)},{fmt17(z)},{terms}"
        )
    return rows
