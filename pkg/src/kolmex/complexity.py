"""A pinned, computable stand-in for exponential description complexity.

True description complexity is uncomputable, so this module fixes a small
self-delimiting expression grammar plus a bounded deterministic search and
treats the result as a versioned contract: identical input and identical
``PROXY_VERSION`` give identical answers.  Values are *exponential*,

    K(x) = 2 ** bits(shortest description found),

so they order objects directly and can sit in partition-function exponents
without a log convention.  The prefix variant KP adds an Elias-gamma header
for the bit length, making descriptions self-delimiting:

    KP(x) = 2 ** (bits + gamma_length(bits)).

Grammar (canonical serialization; every compound child is parenthesized,
so no precedence rules exist):

    integers   Lit      "123"
               Pow      "2^32"          base^exponent
               Mul      "3*(2^20)"
               Add      "(10^9)+7"
               Tower    "3^^5"  "100^^" b^^h is the h-fold tower b^b^...^b;
                                the trailing form abbreviates h = b
    words      WordLit  "w(0110)"       symbols over 0-9a-z
               Rep      "r(01,3)"       block repeated count times
               Blob     "b(L,N,PAYLOAD)"  LZW bytes: L byte count, N code
                                          count, base-58 payload
    codes      CodeLit  "c(2,3,000,111)"
               CodeBlob "cb(2,3,L,N,PAYLOAD)" blob of the joined sorted words
               RsCode   "rs(7,7,3,0123456)"   evaluation code on the points

Serialized characters come from a fixed 64-symbol alphabet; the pinned cost
convention is 8 bits per character, so bits = 8 * len(serialization).
The LZW compressor (initial dictionary = 256 byte values, output codes at
the width of the current dictionary size, MSB first, zero-padded) is part
of the contract and never changes without a PROXY_VERSION bump.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from statistics import StatisticsError, correlation, linear_regression
from typing import Iterable, Optional, Union

from . import PROXY_VERSION
from . import fields
from .rng import SplitMix64

# The 64-symbol serialization alphabet (uppercase skips I, L, O, U).
ALPHABET = (
    "0123456789"
    "abcdefghijklmnopqrstuvwxyz"
    "ABCDEFGHJKMNPQRSTVWXYZ"
    "()+*^,"
)
assert len(ALPHABET) == 64 and len(set(ALPHABET)) == 64

_BASE58 = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHJKMNPQRSTVWXYZ"
WORD_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"

BITS_PER_CHAR = 8


class DescriptionError(ValueError):
    pass


class BudgetExhausted(DescriptionError):
    pass


# ---------------------------------------------------------------------------
# described values
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CodeWords:
    """Value form of a code: alphabet size, block length, sorted word strings."""

    q: int
    n: int
    words: tuple[str, ...]

    def canonical_string(self) -> str:
        return f"{self.q},{self.n}," + ",".join(self.words)


Obj = Union[int, str, CodeWords]


def word_string(word: Iterable[int]) -> str:
    """Symbol-string form of a word given as integer symbols."""
    return "".join(WORD_SYMBOLS[s] for s in word)


def object_key(x: Obj) -> str:
    """Canonical serialization of a described object (used for tie-breaks)."""
    if isinstance(x, bool):
        raise DescriptionError("booleans are not describable objects")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return x
    if isinstance(x, CodeWords):
        return x.canonical_string()
    raise DescriptionError(f"not a describable object: {x!r}")


# ---------------------------------------------------------------------------
# pinned LZW compressor
# ---------------------------------------------------------------------------

def lzw_compress(data: bytes) -> bytes:
    codes: list[tuple[int, int]] = []  # (code, width at emission)
    table: dict[bytes, int] = {bytes([i]): i for i in range(256)}
    w = b""
    for byte in data:
        wc = w + bytes([byte])
        if wc in table:
            w = wc
        else:
            codes.append((table[w], (len(table) - 1).bit_length()))
            table[wc] = len(table)
            w = bytes([byte])
    if w:
        codes.append((table[w], (len(table) - 1).bit_length()))
    bits = "".join(format(code, f"0{width}b") for code, width in codes)
    bits += "0" * (-len(bits) % 8)
    return bytes(int(bits[i : i + 8], 2) for i in range(0, len(bits), 8))


def lzw_decompress(payload: bytes, n_codes: int) -> bytes:
    bits = "".join(format(b, "08b") for b in payload)
    table: dict[int, bytes] = {i: bytes([i]) for i in range(256)}
    out = bytearray()
    pos = 0
    prev: Optional[bytes] = None
    for _ in range(n_codes):
        width = (len(table) - 1 + (prev is not None)).bit_length()
        code = int(bits[pos : pos + width], 2)
        pos += width
        if prev is None:
            entry = table[code]
        elif code in table:
            entry = table[code]
            table[len(table)] = prev + entry[:1]
        elif code == len(table):  # KwKwK case
            entry = prev + prev[:1]
            table[len(table)] = entry
        else:
            raise DescriptionError("corrupt LZW stream")
        out.extend(entry)
        prev = entry
    return bytes(out)


def _b58_encode(data: bytes) -> str:
    value = int.from_bytes(data, "big")
    if value == 0:
        return _BASE58[0]
    digits = []
    while value:
        value, r = divmod(value, 58)
        digits.append(_BASE58[r])
    return "".join(reversed(digits))


def _b58_decode(text: str, n_bytes: int) -> bytes:
    value = 0
    for ch in text:
        value = value * 58 + _BASE58.index(ch)
    return value.to_bytes(n_bytes, "big")


# ---------------------------------------------------------------------------
# description nodes
# ---------------------------------------------------------------------------

_EVAL_BIT_LIMIT = 1 << 20  # evaluation refuses to materialize anything larger


class Description:
    """Base class; concrete nodes implement _serialize and value()."""

    def serialize(self) -> str:
        return self._serialize()

    def bits(self) -> int:
        return BITS_PER_CHAR * len(self.serialize())

    def value(self) -> Obj:
        raise NotImplementedError

    def _serialize(self) -> str:
        raise NotImplementedError

    def _wrapped(self) -> str:
        """Serialization as a child: compound nodes get parentheses."""
        s = self._serialize()
        return s if isinstance(self, Lit) else f"({s})"

    def __repr__(self):
        return f"<{type(self).__name__} {self.serialize()!r}>"

    def __eq__(self, other):
        return type(self) is type(other) and self.serialize() == other.serialize()

    def __hash__(self):
        return hash((type(self).__name__, self.serialize()))


class Lit(Description):
    def __init__(self, digits: Union[str, int]):
        digits = str(digits)
        if not digits.isdigit() or (digits != "0" and digits[0] == "0"):
            raise DescriptionError(f"bad literal {digits!r}")
        self.digits = digits

    def _serialize(self):
        return self.digits

    def value(self):
        return int(self.digits)


class _Binary(Description):
    op = "?"

    def __init__(self, left: Description, right: Description):
        self.left = left
        self.right = right

    def _serialize(self):
        return f"{self.left._wrapped()}{self.op}{self.right._wrapped()}"


class Pow(_Binary):
    op = "^"

    def value(self):
        base, exp = self.left.value(), self.right.value()
        if base <= 1:
            return base ** min(exp, 2)
        if exp * base.bit_length() > _EVAL_BIT_LIMIT:
            raise BudgetExhausted("value too large to materialize")
        return base**exp


class Mul(_Binary):
    op = "*"

    def value(self):
        return self.left.value() * self.right.value()


class Add(_Binary):
    op = "+"

    def value(self):
        return self.left.value() + self.right.value()


class Tower(Description):
    """h-fold exponential tower b^b^...^b (right associated)."""

    def __init__(self, base: Description, height: Description):
        self.base = base
        self.height = height

    def _serialize(self):
        b = self.base._wrapped()
        h = self.height._wrapped()
        return f"{b}^^" if b == h else f"{b}^^{h}"

    def value(self):
        b, h = self.base.value(), self.height.value()
        if h < 1:
            raise DescriptionError("tower height must be >= 1")
        acc = b
        for _ in range(h - 1):
            if acc * max(b.bit_length(), 1) > _EVAL_BIT_LIMIT:
                raise BudgetExhausted("tower too large to materialize")
            acc = b**acc
        return acc


class WordLit(Description):
    def __init__(self, symbols: str):
        if any(ch not in WORD_SYMBOLS for ch in symbols):
            raise DescriptionError(f"bad word symbols {symbols!r}")
        self.symbols = symbols

    def _serialize(self):
        return f"w({self.symbols})"

    def value(self):
        return self.symbols


class Rep(Description):
    def __init__(self, block: str, count: Description):
        if not block or any(ch not in WORD_SYMBOLS for ch in block):
            raise DescriptionError(f"bad block {block!r}")
        self.block = block
        self.count = count

    def _serialize(self):
        return f"r({self.block},{self.count._serialize()})"

    def value(self):
        n = self.count.value()
        if n * len(self.block) > _EVAL_BIT_LIMIT:
            raise BudgetExhausted("repetition too large")
        return self.block * n


class Blob(Description):
    """LZW-compressed byte string; evaluates to its ASCII decoding."""

    def __init__(self, payload: bytes, n_codes: int):
        self.payload = payload
        self.n_codes = n_codes

    @classmethod
    def of_text(cls, text: str) -> "Blob":
        data = text.encode("ascii")
        compressed = lzw_compress(data)
        n_codes = _lzw_code_count(data)
        return cls(compressed, n_codes)

    def _serialize(self):
        return f"b({len(self.payload)},{self.n_codes},{_b58_encode(self.payload)})"

    def value(self):
        return lzw_decompress(self.payload, self.n_codes).decode("ascii")


def _lzw_code_count(data: bytes) -> int:
    table = {bytes([i]) for i in range(256)}
    count = 0
    w = b""
    for byte in data:
        wc = w + bytes([byte])
        if wc in table:
            w = wc
        else:
            count += 1
            table.add(wc)
            w = bytes([byte])
    return count + (1 if w else 0)


class CodeLit(Description):
    def __init__(self, q: int, n: int, words: tuple[str, ...]):
        self.q = q
        self.n = n
        self.words = tuple(sorted(words))

    def _serialize(self):
        return f"c({self.q},{self.n},{','.join(self.words)})"

    def value(self):
        return CodeWords(self.q, self.n, self.words)


class CodeBlob(Description):
    def __init__(self, q: int, n: int, payload: bytes, n_codes: int):
        self.q = q
        self.n = n
        self.payload = payload
        self.n_codes = n_codes

    @classmethod
    def of_code(cls, code: CodeWords) -> "CodeBlob":
        data = "".join(code.words).encode("ascii")
        return cls(code.q, code.n, lzw_compress(data), _lzw_code_count(data))

    def _serialize(self):
        return (
            f"cb({self.q},{self.n},{len(self.payload)},"
            f"{self.n_codes},{_b58_encode(self.payload)})"
        )

    def value(self):
        text = lzw_decompress(self.payload, self.n_codes).decode("ascii")
        if self.n == 0:
            raise DescriptionError("code blob needs n >= 1")
        if len(text) % self.n:
            raise DescriptionError("code blob length mismatch")
        words = tuple(sorted(text[i : i + self.n] for i in range(0, len(text), self.n)))
        return CodeWords(self.q, self.n, words)


class RsCode(Description):
    """Evaluation code of all polynomials of degree < k on the given points."""

    def __init__(self, q: int, n: int, k: int, points: tuple[int, ...]):
        self.q = q
        self.n = n
        self.k = k
        self.points = tuple(points)

    def _serialize(self):
        pts = "".join(WORD_SYMBOLS[p] for p in self.points)
        return f"rs({self.q},{self.n},{self.k},{pts})"

    def value(self):
        f = fields.field(self.q)
        words = fields.rs_wordset(f, self.n, self.k, self.points)
        return CodeWords(self.q, self.n, tuple(sorted(word_string(w) for w in words)))


# ---------------------------------------------------------------------------
# parser (canonical serializations round-trip)
# ---------------------------------------------------------------------------

def parse(text: str) -> Description:
    desc, pos = _parse_expr(text, 0)
    if pos != len(text):
        raise DescriptionError(f"trailing input at {pos} in {text!r}")
    return desc


def _parse_expr(s: str, pos: int) -> tuple[Description, int]:
    left, pos = _parse_operand(s, pos)
    if pos < len(s) and s[pos] in "+*^":
        op = s[pos]
        pos += 1
        if op == "^" and pos < len(s) and s[pos] == "^":
            pos += 1
            if pos == len(s) or s[pos] == ")":
                return Tower(left, left), pos
            right, pos = _parse_operand(s, pos)
            return Tower(left, right), pos
        right, pos = _parse_operand(s, pos)
        return {"+": Add, "*": Mul, "^": Pow}[op](left, right), pos
    return left, pos


def _parse_operand(s: str, pos: int) -> tuple[Description, int]:
    if pos >= len(s):
        raise DescriptionError("unexpected end of input")
    ch = s[pos]
    if ch == "(":
        inner, pos = _parse_expr(s, pos + 1)
        if pos >= len(s) or s[pos] != ")":
            raise DescriptionError(f"missing ')' at {pos}")
        return inner, pos + 1
    if ch.isdigit():
        end = pos
        while end < len(s) and s[end].isdigit():
            end += 1
        return Lit(s[pos:end]), end
    for tag in ("rs", "cb", "c", "w", "r", "b"):
        if s.startswith(tag + "(", pos):
            end = _matching_paren(s, pos + len(tag))
            fieldstr = s[pos + len(tag) + 1 : end]
            return _parse_tagged(tag, fieldstr), end + 1
    raise DescriptionError(f"cannot parse at {pos} in {s!r}")


def _matching_paren(s: str, open_pos: int) -> int:
    depth = 0
    for i in range(open_pos, len(s)):
        if s[i] == "(":
            depth += 1
        elif s[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise DescriptionError("unbalanced parentheses")


def _parse_tagged(tag: str, body: str) -> Description:
    if tag == "w":
        return WordLit(body)
    if tag == "r":
        block, _, count = body.partition(",")
        return Rep(block, parse(count))
    if tag == "b":
        size, n_codes, payload = body.split(",")
        return Blob(_b58_decode(payload, int(size)), int(n_codes))
    if tag == "c":
        parts = body.split(",")
        return CodeLit(int(parts[0]), int(parts[1]), tuple(parts[2:]))
    if tag == "cb":
        q, n, size, n_codes, payload = body.split(",")
        return CodeBlob(int(q), int(n), _b58_decode(payload, int(size)), int(n_codes))
    if tag == "rs":
        q, n, k, pts = body.split(",")
        return RsCode(int(q), int(n), int(k), tuple(WORD_SYMBOLS.index(c) for c in pts))
    raise DescriptionError(f"unknown tag {tag}")


# ---------------------------------------------------------------------------
# bounded search
# ---------------------------------------------------------------------------

def _iroot(x: int, b: int) -> int:
    """Largest a with a**b <= x (x >= 1, b >= 1)."""
    if b == 1:
        return x
    a = 1 << (x.bit_length() // b + 1)
    while True:
        nxt = ((b - 1) * a + x // a ** (b - 1)) // b
        if nxt >= a:
            return a
        a = nxt


def _desc_sort_key(d: Description):
    return (d.bits(), d.serialize())


@dataclass(frozen=True)
class ComplexityProxy:
    """The pinned bounded search; `budget` caps generated candidates."""

    budget: int = 4096
    version: str = PROXY_VERSION

    def shortest_description(self, x: Obj, hints: tuple = ()) -> Description:
        """Minimum-bit description among all candidates the search generates.

        Ties break on lexicographic serialization.  `hints` are extra
        candidate descriptions (verified against x before use).
        """
        if self.budget <= 0:
            raise BudgetExhausted("search budget is 0")
        remaining = [self.budget]
        memo: dict = {}
        best = self._search(x, remaining, memo, depth=0)
        for hint in hints:
            if hint.value() == x:
                best = min(best, hint, key=_desc_sort_key)
        return best

    def complexity_bits(self, x: Obj, hints: tuple = ()) -> int:
        return self.shortest_description(x, hints).bits()

    def proxy_complexity(self, x: Obj, prefix: bool = False, hints: tuple = ()) -> int:
        """K(x) = 2**bits, or the prefix form 2**(bits + gamma header)."""
        bits = self.complexity_bits(x, hints)
        if prefix:
            bits += gamma_length(bits)
        return 1 << bits

    # -- search internals ---------------------------------------------------

    def _search(self, x: Obj, remaining, memo, depth) -> Description:
        key = (type(x).__name__, x)
        if key in memo:
            return memo[key]
        if isinstance(x, int):
            best = self._search_int(x, remaining, memo, depth)
        elif isinstance(x, str):
            best = self._search_word(x, remaining, memo, depth)
        elif isinstance(x, CodeWords):
            best = self._search_code(x, remaining, memo, depth)
        else:
            raise DescriptionError(f"not describable: {x!r}")
        memo[key] = best
        return best

    def _spend(self, remaining) -> bool:
        if remaining[0] <= 0:
            return False
        remaining[0] -= 1
        return True

    def _search_int(self, x: int, remaining, memo, depth) -> Description:
        if x < 0:
            raise DescriptionError("negative integers are not in the grammar")
        candidates = [Lit(str(x))]
        if depth < 12 and x >= 16:
            # collect cheap structural facts before any recursion, so deep
            # refinement of one candidate cannot starve the listing of others
            root_pairs = []
            for b in range(2, x.bit_length() + 1):
                if not self._spend(remaining):
                    break
                a = _iroot(x, b)
                if a >= 2 and a**b == x:
                    root_pairs.append((a, b))
            tower_pairs = []
            for base in range(2, 37):
                if not self._spend(remaining):
                    break
                acc, height = base, 1
                while acc < x:
                    if acc > x.bit_length() + 1:  # base**acc would exceed x
                        break
                    acc = base**acc
                    height += 1
                if acc == x and height >= 2:
                    tower_pairs.append((base, height))
            for a, b in root_pairs:
                candidates.append(
                    Pow(
                        self._search(a, remaining, memo, depth + 1),
                        self._search(b, remaining, memo, depth + 1),
                    )
                )
            for base, height in tower_pairs:
                candidates.append(
                    Tower(
                        self._search(base, remaining, memo, depth + 1),
                        self._search(height, remaining, memo, depth + 1),
                    )
                )
        if depth < 2 and x >= 16:
            # x = a^e + r with a small base and small remainder
            for a in range(2, 11):
                if not self._spend(remaining):
                    break
                e = 1
                while a ** (e + 1) <= x:
                    e += 1
                r = x - a**e
                if e >= 2 and 0 < r <= 1_000_000:
                    candidates.append(
                        Add(
                            Pow(
                                self._search(a, remaining, memo, depth + 1),
                                self._search(e, remaining, memo, depth + 1),
                            ),
                            self._search(r, remaining, memo, depth + 1),
                        )
                    )
            # small-divisor factorizations
            for d in range(2, 65):
                if d * d > x:
                    break
                if not self._spend(remaining):
                    break
                if x % d == 0:
                    candidates.append(
                        Mul(
                            self._search(d, remaining, memo, depth + 1),
                            self._search(x // d, remaining, memo, depth + 1),
                        )
                    )
        return min(candidates, key=_desc_sort_key)

    def _search_word(self, x: str, remaining, memo, depth) -> Description:
        candidates: list[Description] = [WordLit(x)] if x else []
        if not x:
            raise DescriptionError("empty words are not describable")
        n = len(x)
        for period in range(1, n // 2 + 1):
            if n % period:
                continue
            if not self._spend(remaining):
                break
            if x == x[:period] * (n // period):
                count = self._search(n // period, remaining, memo, depth + 1)
                candidates.append(Rep(x[:period], count))
        if self._spend(remaining):
            candidates.append(Blob.of_text(x))
        return min(candidates, key=_desc_sort_key)

    def _search_code(self, x: CodeWords, remaining, memo, depth) -> Description:
        candidates: list[Description] = [CodeLit(x.q, x.n, x.words)]
        if self._spend(remaining):
            candidates.append(CodeBlob.of_code(x))
        return min(candidates, key=_desc_sort_key)


def gamma_length(m: int) -> int:
    """Bit length of the Elias-gamma code of m >= 1."""
    if m < 1:
        raise ValueError("gamma code needs m >= 1")
    return 2 * (m.bit_length() - 1) + 1


DEFAULT_PROXY = ComplexityProxy()


# ---------------------------------------------------------------------------
# complexity order and Levin weights
# ---------------------------------------------------------------------------

class KolmogorovOrder:
    """Rank bijection of a finite universe, ascending in (K, object key)."""

    def __init__(self, objects: tuple, proxy_version: str):
        self.objects = tuple(objects)  # position i holds the object of rank i+1
        self.proxy_version = proxy_version
        self._index = {object_key(x): i for i, x in enumerate(self.objects)}

    def rank_of(self, x: Obj) -> int:
        try:
            return self._index[object_key(x)] + 1
        except KeyError:
            raise KeyError(f"object outside ordered universe: {x!r}") from None

    def object_at(self, rank: int) -> Obj:
        if not 1 <= rank <= len(self.objects):
            raise IndexError(f"rank {rank} outside 1..{len(self.objects)}")
        return self.objects[rank - 1]

    def __len__(self):
        return len(self.objects)

    def __contains__(self, x: Obj) -> bool:
        return object_key(x) in self._index

    def __eq__(self, other):
        return (
            isinstance(other, KolmogorovOrder)
            and self.objects == other.objects
            and self.proxy_version == other.proxy_version
        )


def kolmogorov_order(universe: Iterable[Obj], proxy: ComplexityProxy = DEFAULT_PROXY,
                     hints: Optional[dict] = None) -> KolmogorovOrder:
    """Sort a finite universe by (proxy complexity, canonical object key)."""
    items = list(universe)
    keys = [object_key(x) for x in items]
    if len(set(keys)) != len(keys):
        raise DescriptionError("universe contains duplicate objects")
    hints = hints or {}

    def sort_key(x):
        k = object_key(x)
        return (proxy.complexity_bits(x, hints=tuple(hints.get(k, ()))), k)

    items.sort(key=sort_key)
    return KolmogorovOrder(tuple(items), proxy.version)


def levin_weights(universe: Iterable[Obj], proxy: ComplexityProxy = DEFAULT_PROXY,
                  kp=None) -> dict:
    """Normalized weights proportional to 1/KP(x), as exact rationals.

    `kp` may inject a prefix-complexity function (mainly for tests); the
    default is the proxy's prefix complexity.
    """
    items = list(universe)
    if not items:
        raise DescriptionError("empty universe has no weights")
    if kp is None:
        kp = lambda x: proxy.proxy_complexity(x, prefix=True)
    raw = [(x, Fraction(1, kp(x))) for x in items]
    total = sum(w for _, w in raw)
    return {x: w / total for x, w in raw}


# ---------------------------------------------------------------------------
# Zipf rank-frequency analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZipfRow:
    rank: int
    token: str
    count: int
    frequency: float


@dataclass(frozen=True)
class ZipfFit:
    table: tuple[ZipfRow, ...]
    exponent: Optional[float]
    r_squared: Optional[float]

    @property
    def fit_defined(self) -> bool:
        return self.exponent is not None


def zipf_analyze(tokens: Iterable[str]) -> ZipfFit:
    """Rank tokens by descending frequency and fit log p_k against log k.

    Ties rank lexicographically.  With fewer than two distinct types the
    ranking is still returned but the fit is flagged undefined.
    """
    counts: dict[str, int] = {}
    total = 0
    for tok in tokens:
        counts[tok] = counts.get(tok, 0) + 1
        total += 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    table = tuple(
        ZipfRow(i + 1, tok, cnt, cnt / total) for i, (tok, cnt) in enumerate(ranked)
    )
    if len(table) < 2:
        return ZipfFit(table, None, None)
    xs = [math.log(row.rank) for row in table]
    ys = [math.log(row.frequency) for row in table]
    slope, _ = linear_regression(xs, ys)
    try:
        r2 = correlation(xs, ys) ** 2
    except StatisticsError:
        r2 = None
    return ZipfFit(table, slope, r2)


def synthetic_zipf_corpus(n_types: int, n_tokens: int, seed: int,
                          exponent: float = 1.0) -> list[str]:
    """Tokens drawn i.i.d. from p_k proportional to 1/k**exponent."""
    if n_types < 1:
        raise ValueError("need at least one type")
    weights = [1.0 / (k**exponent) for k in range(1, n_types + 1)]
    total = math.fsum(weights)
    cumulative = []
    acc = 0.0
    for w in weights:
        acc += w / total
        cumulative.append(acc)
    cumulative[-1] = 1.0
    width = len(str(n_types))
    names = [f"w{str(k).zfill(width)}" for k in range(1, n_types + 1)]
    gen = SplitMix64(seed)
    out = []
    for _ in range(n_tokens):
        u = gen.uniform()
        lo, hi = 0, n_types - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if u <= cumulative[mid]:
                hi = mid
            else:
                lo = mid + 1
        out.append(names[lo])
    return out
