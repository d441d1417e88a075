"""Brute-force laboratory over small finite p-groups.

Multiplication tables, powers of the augmentation ideal in the group
algebra, dimension subgroups and the lower central series, the filtration
product formula, plus a direct kernel computation of the recursion
defects by noncommutative differentiation of relator words.

Everything is dense linear algebra over F_p on vectors indexed by group
elements, so sizes are capped (default 343 elements).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .gs_check import RelationProfile
from .jennings import DimensionSequence, InvalidPrimeError, is_prime

DEFAULT_SIZE_LIMIT = 343


class SizeLimitError(ValueError):
    """Group too large for dense group-algebra computations."""


class GroupTableError(ValueError):
    """Multiplication table fails a group axiom."""


class NonzeroConstantTermError(ValueError):
    """Differentiation requires a series with zero constant term."""


class PresentationError(ValueError):
    """Relator data inconsistent with the target group."""


# ---------------------------------------------------------------------------
# F_p row reduction
# ---------------------------------------------------------------------------

def _rref(rows: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot cols)."""
    m = np.array(rows, dtype=np.int64) % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, col])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = (m[r] * pow(int(m[r, col]), p - 2, p)) % p
        colvals = m[:, col].copy()
        colvals[r] = 0
        m = (m - np.outer(colvals, m[r])) % p
        pivots.append(col)
        r += 1
    return m[:r], pivots


def _reduce_against(vecs: np.ndarray, basis: np.ndarray, pivots: Sequence[int], p: int) -> np.ndarray:
    """Residues of row vectors after eliminating all pivot coordinates."""
    out = np.array(vecs, dtype=np.int64) % p
    for row, col in zip(basis, pivots):
        coef = out[:, col].copy()
        if coef.any():
            out = (out - np.outer(coef, row)) % p
    return out


def _rank(rows: np.ndarray, p: int) -> int:
    if rows.size == 0:
        return 0
    return _rref(rows, p)[0].shape[0]


# ---------------------------------------------------------------------------
# Group tables
# ---------------------------------------------------------------------------

class FiniteGroupTable:
    """A finite p-group given by its full multiplication table.

    Element 0 is the identity.  mul[i, j] is the index of the product of
    elements i and j.  Construction validates the group axioms, checks
    that the order is the expected power of the prime, and that every
    element order is a p-power (automatic once the axioms hold, but cheap
    to confirm directly).
    """

    def __init__(
        self,
        prime: int,
        mul: np.ndarray,
        generators: Sequence[int] | None = None,
        kind: str | None = None,
        size_limit: int = DEFAULT_SIZE_LIMIT,
        validate: bool = True,
    ):
        if not is_prime(prime):
            raise InvalidPrimeError(f"{prime} is not prime")
        mul = np.array(mul, dtype=np.int64)
        n = mul.shape[0]
        if n > size_limit:
            raise SizeLimitError(f"order {n} exceeds the size limit {size_limit}")
        self.prime = prime
        self.order = n
        self.mul = mul
        self.kind = kind
        if validate:
            self._validate()
        self.inv = np.argmin(mul, axis=1)  # identity is element 0
        if generators is None:
            generators = self._find_generators()
        self.generators = tuple(int(g) for g in generators)
        if self.subgroup_closure(self.generators) != frozenset(range(n)):
            raise GroupTableError("declared generators do not generate the group")
        self._filtration: list[tuple[np.ndarray, list[int]]] | None = None

    # -- construction checks ------------------------------------------------

    def _validate(self) -> None:
        n, mul, p = self.order, self.mul, self.prime
        k = 0
        m = n
        while m % p == 0:
            m //= p
            k += 1
        if m != 1 or n < 1:
            raise GroupTableError(f"order {n} is not a power of {p}")
        if mul.shape != (n, n) or mul.min() < 0 or mul.max() >= n:
            raise GroupTableError("malformed multiplication table")
        if not (np.all(mul[0] == np.arange(n)) and np.all(mul[:, 0] == np.arange(n))):
            raise GroupTableError("element 0 is not a two-sided identity")
        ident = np.arange(n)
        for i in range(n):
            if sorted(mul[i]) != list(ident) or sorted(mul[:, i]) != list(ident):
                raise GroupTableError("table rows/columns are not permutations")
        for a in range(n):
            if not np.array_equal(mul[mul[a]], mul[a][mul]):
                raise GroupTableError(f"associativity fails at element {a}")
        for g in range(n):
            if self._power_raw(g, n) != 0:
                raise GroupTableError(f"element {g} order does not divide {n}")

    def _power_raw(self, g: int, e: int) -> int:
        acc, base = 0, g
        while e:
            if e & 1:
                acc = int(self.mul[acc, base])
            base = int(self.mul[base, base])
            e >>= 1
        return acc

    def _find_generators(self) -> list[int]:
        gens: list[int] = []
        reached = frozenset([0])
        while len(reached) < self.order:
            g = min(set(range(self.order)) - reached)
            gens.append(g)
            reached = self.subgroup_closure(gens)
        return gens

    # -- elementary operations ----------------------------------------------

    def multiply(self, i: int, j: int) -> int:
        return int(self.mul[i, j])

    def inverse(self, i: int) -> int:
        return int(self.inv[i])

    def power(self, g: int, e: int) -> int:
        if e < 0:
            return self._power_raw(self.inverse(g), -e)
        return self._power_raw(g, e)

    def element_order(self, g: int) -> int:
        o, x = 1, g
        while x != 0:
            x = int(self.mul[x, g])
            o += 1
        return o

    def exponent(self) -> int:
        return max(self.element_order(g) for g in range(self.order))

    def commutator(self, g: int, h: int) -> int:
        return self.multiply(
            self.multiply(self.inverse(g), self.inverse(h)),
            self.multiply(g, h),
        )

    def subgroup_closure(self, gens: Iterable[int]) -> frozenset[int]:
        members = {0}
        frontier = [0]
        gens = [int(g) for g in gens]
        while frontier:
            x = frontier.pop()
            for g in gens:
                for y in (self.multiply(x, g), self.multiply(g, x)):
                    if y not in members:
                        members.add(y)
                        frontier.append(y)
        return frozenset(members)

    def power_set_closure(self, subgroup: Iterable[int], q: int) -> frozenset[int]:
        """Subgroup generated by the q-th powers of the given elements."""
        return self.subgroup_closure({self.power(x, q) for x in subgroup})

    def word_to_element(self, word: Sequence[int], images: Sequence[int]) -> int:
        acc = 0
        for letter in word:
            g = images[abs(letter) - 1]
            if letter < 0:
                g = self.inverse(g)
            acc = self.multiply(acc, g)
        return acc

    # -- group algebra filtration ---------------------------------------------

    def ideal_filtration(self) -> list[tuple[np.ndarray, list[int]]]:
        """Echelon bases of the powers of the augmentation ideal.

        Index n holds a basis of I^n; the list ends at the first zero
        power.  I^(n+1) is spanned by v * (g - 1) over basis vectors v of
        I^n and group generators g, because the augmentation ideal is
        generated as a one-sided ideal by the generator differences.
        """
        if self._filtration is not None:
            return self._filtration
        n, p = self.order, self.prime
        full = np.eye(n, dtype=np.int64)
        filt = [(full, list(range(n)))]
        rows = np.zeros((n - 1, n), dtype=np.int64)
        for g in range(1, n):
            rows[g - 1, g] = 1
            rows[g - 1, 0] = p - 1
        basis, pivots = _rref(rows, p)
        filt.append((basis, pivots))
        while filt[-1][0].shape[0] > 0:
            basis, _ = filt[-1]
            prods = []
            for g in self.generators:
                translated = np.zeros_like(basis)
                translated[:, self.mul[:, g]] = basis  # v -> v*g columnwise
                prods.append((translated - basis) % p)
            if prods:
                stacked = np.vstack(prods)
            else:
                stacked = np.zeros((0, n), dtype=np.int64)
            filt.append(_rref(stacked, p))
        self._filtration = filt
        return filt


def augmentation_powers(G: FiniteGroupTable) -> tuple[int, ...]:
    """Codimensions c_n = |G| - dim I^n, up to the first n with I^n = 0."""
    filt = G.ideal_filtration()
    return tuple(G.order - basis.shape[0] for basis, _ in filt)


def _element_membership(G: FiniteGroupTable, level: int) -> np.ndarray:
    """Boolean mask over elements g with g - 1 in I^level."""
    filt = G.ideal_filtration()
    n = G.order
    if level >= len(filt):
        out = np.zeros(n, dtype=bool)
        out[0] = True
        return out
    basis, pivots = filt[level]
    vecs = np.zeros((n, n), dtype=np.int64)
    for g in range(n):
        vecs[g, g] += 1
        vecs[g, 0] -= 1
    residues = _reduce_against(vecs, basis, pivots, G.prime)
    return ~residues.any(axis=1)


def dimension_subgroups(
    G: FiniteGroupTable,
) -> tuple[tuple[frozenset[int], ...], DimensionSequence]:
    """The chain G = G_1 >= G_2 >= ... (g in G_n iff g - 1 in I^n) down to
    the trivial subgroup, together with the sequence a_n with
    p^(a_n) = [G_n : G_(n+1)]."""
    filt = G.ideal_filtration()
    chain = []
    for level in range(1, len(filt) + 1):
        members = frozenset(int(g) for g in np.nonzero(_element_membership(G, level))[0])
        chain.append(members)
        if len(members) == 1:
            break
    sizes = [len(s) for s in chain] + [1]
    entries: dict[int, int] = {}
    p = G.prime
    for n in range(len(chain)):
        ratio = sizes[n] // sizes[n + 1]
        if sizes[n] % sizes[n + 1]:
            raise GroupTableError("dimension subgroup indices are not nested")
        a_n = 0
        while ratio > 1:
            if ratio % p:
                raise GroupTableError("dimension subgroup index not a p-power")
            ratio //= p
            a_n += 1
        if a_n:
            entries[n + 1] = a_n
    return tuple(chain), DimensionSequence.from_dict(p, entries)


def lower_central_series(G: FiniteGroupTable) -> tuple[frozenset[int], ...]:
    """gamma_1 = G, gamma_(n+1) = [G, gamma_n], down to the trivial group."""
    series = [frozenset(range(G.order))]
    while len(series[-1]) > 1:
        cur = series[-1]
        comms = {G.commutator(g, h) for g in range(G.order) for h in cur}
        nxt = G.subgroup_closure(comms)
        if nxt == cur:
            raise GroupTableError("lower central series stalled; group is not nilpotent")
        series.append(nxt)
    return tuple(series)


@dataclass(frozen=True)
class LazardReport:
    matches: tuple[bool, ...]
    all_match: bool
    chain_length: int


def lazard_check(G: FiniteGroupTable) -> LazardReport:
    """Compare each dimension subgroup with the product formula
    G_n = product of gamma_i(G)^(p^j) over i * p^j >= n."""
    chain, _ = dimension_subgroups(G)
    gammas = lower_central_series(G)
    p = G.prime
    matches = []
    for n in range(1, len(chain) + 1):
        jmax = 0
        while p ** jmax < n:
            jmax += 1
        gens: set[int] = set()
        for i in range(1, len(gammas) + 1):
            gamma = gammas[i - 1] if i <= len(gammas) else frozenset([0])
            for j in range(jmax + 1):
                if i * p ** j >= n:
                    gens |= {G.power(x, p ** j) for x in gamma}
        predicted = G.subgroup_closure(gens)
        matches.append(predicted == chain[n - 1])
    return LazardReport(
        matches=tuple(matches),
        all_match=all(matches),
        chain_length=len(chain),
    )


# ---------------------------------------------------------------------------
# Built-in groups
# ---------------------------------------------------------------------------

def build_cyclic(p: int, k: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteGroupTable:
    n = p ** k
    if n > size_limit:
        raise SizeLimitError(f"cyclic group of order {n} exceeds limit {size_limit}")
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    return FiniteGroupTable(p, mul, generators=(1,) if n > 1 else (), kind=f"cyclic:{k}")


def build_elem_abelian(p: int, d: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteGroupTable:
    n = p ** d
    if n > size_limit:
        raise SizeLimitError(f"elementary abelian group of order {n} exceeds limit {size_limit}")
    idx = np.arange(n)
    digits = np.zeros((n, d), dtype=np.int64)
    rem = idx.copy()
    for i in range(d):
        digits[:, i] = rem % p
        rem //= p
    sums = (digits[:, None, :] + digits[None, :, :]) % p
    weights = p ** np.arange(d)
    mul = (sums * weights).sum(axis=2)
    gens = tuple(int(p ** i) for i in range(d))
    return FiniteGroupTable(p, mul, generators=gens, kind=f"elemab:{d}")


def build_heisenberg(p: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteGroupTable:
    """Upper unitriangular 3x3 matrices over F_p: the nonabelian group of
    order p^3 and exponent p (p odd)."""
    if p == 2:
        raise ValueError("the unitriangular construction needs an odd prime")
    n = p ** 3
    if n > size_limit:
        raise SizeLimitError(f"order {n} exceeds limit {size_limit}")

    def pack(a, b, c):
        return a + p * b + p * p * c

    idx = np.arange(n)
    a1, rest = idx % p, idx // p
    b1, c1 = rest % p, rest // p
    a2 = a1[None, :]
    b2 = b1[None, :]
    c2 = c1[None, :]
    mul = pack(
        (a1[:, None] + a2) % p,
        (b1[:, None] + b2) % p,
        (c1[:, None] + c2 + a1[:, None] * b2) % p,
    )
    gens = (pack(1, 0, 0), pack(0, 1, 0))
    return FiniteGroupTable(p, mul, generators=gens, kind="heisenberg")


def build_group(kind: str, p: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FiniteGroupTable:
    """Dispatcher for the built-in families: "cyclic:k", "elemab:d",
    "heisenberg"."""
    name, _, arg = kind.partition(":")
    if name == "cyclic":
        return build_cyclic(p, int(arg or 1), size_limit)
    if name == "elemab":
        return build_elem_abelian(p, int(arg or 1), size_limit)
    if name == "heisenberg":
        return build_heisenberg(p, size_limit)
    raise ValueError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# Words and the truncated noncommutative algebra
# ---------------------------------------------------------------------------

def parse_word(s: str, d: int) -> tuple[int, ...]:
    """Parse a relator like "x1x1x1" or "X1X2x1x2"; capital means inverse."""
    out: list[int] = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch not in "xX":
            raise ValueError(f"unexpected character {ch!r} in word {s!r}")
        j = i + 1
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i + 1:
            raise ValueError(f"missing generator index at position {i} in {s!r}")
        k = int(s[i + 1:j])
        if not 1 <= k <= d:
            raise ValueError(f"generator index {k} out of range 1..{d}")
        out.append(k if ch == "x" else -k)
        i = j
    return tuple(out)


def format_word(word: Sequence[int]) -> str:
    return "".join((f"x{k}" if k > 0 else f"X{-k}") for k in word)


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def word_inverse(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-letter for letter in reversed(word))


def commutator_word(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return word_inverse(u) + word_inverse(v) + tuple(u) + tuple(v)


class NcTruncPoly:
    """Polynomial in noncommuting variables over F_p, truncated above a
    total degree cap.  Terms map words (tuples of 1-based variable
    indices) to nonzero coefficients in 1..p-1."""

    __slots__ = ("terms", "degree_cap", "nvars", "prime")

    def __init__(self, terms: dict[tuple[int, ...], int], degree_cap: int, nvars: int, prime: int):
        cleaned = {}
        for w, c in terms.items():
            if len(w) > degree_cap:
                continue
            c %= prime
            if c:
                cleaned[w] = c
        self.terms = cleaned
        self.degree_cap = degree_cap
        self.nvars = nvars
        self.prime = prime

    @classmethod
    def zero(cls, nvars: int, p: int, cap: int) -> "NcTruncPoly":
        return cls({}, cap, nvars, p)

    @classmethod
    def one(cls, nvars: int, p: int, cap: int) -> "NcTruncPoly":
        return cls({(): 1}, cap, nvars, p)

    @classmethod
    def variable(cls, i: int, nvars: int, p: int, cap: int) -> "NcTruncPoly":
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range")
        return cls({(i,): 1}, cap, nvars, p)

    def _check_compat(self, other: "NcTruncPoly") -> int:
        if self.nvars != other.nvars or self.prime != other.prime:
            raise ValueError("incompatible operands")
        return min(self.degree_cap, other.degree_cap)

    def __add__(self, other: "NcTruncPoly") -> "NcTruncPoly":
        cap = self._check_compat(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NcTruncPoly(out, cap, self.nvars, self.prime)

    def __neg__(self) -> "NcTruncPoly":
        return NcTruncPoly(
            {w: self.prime - c for w, c in self.terms.items()},
            self.degree_cap, self.nvars, self.prime,
        )

    def __sub__(self, other: "NcTruncPoly") -> "NcTruncPoly":
        return self + (-other)

    def __mul__(self, other: "NcTruncPoly") -> "NcTruncPoly":
        cap = self._check_compat(other)
        out: dict[tuple[int, ...], int] = {}
        for w1, c1 in self.terms.items():
            room = cap - len(w1)
            if room < 0:
                continue
            for w2, c2 in other.terms.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return NcTruncPoly(out, cap, self.nvars, self.prime)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcTruncPoly):
            return NotImplemented
        return (
            self.terms == other.terms
            and self.degree_cap == other.degree_cap
            and self.nvars == other.nvars
            and self.prime == other.prime
        )

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.degree_cap, self.nvars, self.prime))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def min_degree(self) -> int | None:
        """Least total degree of a nonzero term; None for the zero element."""
        if not self.terms:
            return None
        return min(len(w) for w in self.terms)

    def truncate(self, cap: int) -> "NcTruncPoly":
        return NcTruncPoly(self.terms, min(cap, self.degree_cap), self.nvars, self.prime)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            mono = "*".join(f"x{i}" for i in w) or "1"
            bits.append(f"{self.terms[w]}*{mono}")
        return " + ".join(bits)


def _letter_series(letter: int, nvars: int, p: int, cap: int) -> NcTruncPoly:
    i = abs(letter)
    if letter > 0:
        return NcTruncPoly({(): 1, (i,): 1}, cap, nvars, p)
    terms = {(i,) * q: (-1) ** q % p for q in range(cap + 1)}
    return NcTruncPoly(terms, cap, nvars, p)


def magnus_embed(word: Sequence[int], d: int, p: int, degree_cap: int) -> NcTruncPoly:
    """Image of (word - 1) under the substitution generator -> 1 + x_i,
    inverse -> the truncated geometric series, computed mod p up to the
    degree cap.  The empty word maps to 0."""
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    acc = NcTruncPoly.one(d, p, degree_cap)
    for letter in word:
        if not 1 <= abs(letter) <= d:
            raise ValueError(f"letter {letter} out of range for {d} generators")
        acc = acc * _letter_series(letter, d, p, degree_cap)
    return acc - NcTruncPoly.one(d, p, degree_cap)


def word_level(word: Sequence[int], d: int, p: int, max_cap: int = 512) -> int:
    """Filtration level of (word - 1): the least total degree appearing in
    its expansion.  Freely trivial words are rejected.  The cap grows
    geometrically until the level is detected."""
    reduced = free_reduce(word)
    if not reduced:
        raise PresentationError("word is freely trivial; its level is unbounded")
    cap = 8
    while True:
        lvl = magnus_embed(reduced, d, p, cap).min_degree()
        if lvl is not None:
            return lvl
        if cap >= max_cap:
            raise PresentationError(f"level of {format_word(word)} exceeds cap {max_cap}")
        cap *= 2


def fox_derivative(f: NcTruncPoly, j: int) -> NcTruncPoly:
    """Right partial derivative: collect terms ending in x_j and strip the
    last letter (the decomposition f = sum_j (df/dx_j) x_j)."""
    if f.constant_term != 0:
        raise NonzeroConstantTermError("series has a nonzero constant term")
    if not 1 <= j <= f.nvars:
        raise ValueError(f"variable index {j} out of range")
    out = {w[:-1]: c for w, c in f.terms.items() if w and w[-1] == j}
    return NcTruncPoly(out, f.degree_cap, f.nvars, f.prime)


# ---------------------------------------------------------------------------
# Presentations and the direct defect computation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PresentationData:
    """Relators for a marked generating set of a finite p-group.

    levels[i] is the filtration level of relator i, computed from the
    truncated noncommutative expansion (never taken on trust from the
    caller)."""

    target: FiniteGroupTable
    generator_images: tuple[int, ...]
    relators: tuple[tuple[int, ...], ...]
    levels: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.generator_images)

    @property
    def r(self) -> int:
        return len(self.relators)

    def profile(self) -> RelationProfile:
        return RelationProfile(self.d, self.levels)


def make_presentation(
    target: FiniteGroupTable,
    generator_images: Sequence[int],
    relators: Sequence[Sequence[int]],
    expected_levels: Sequence[int] | None = None,
) -> PresentationData:
    """Validate relators against the target and compute their levels.

    Every relator must map to the identity of the target, and every level
    must come out >= 2 (level-1 relators would mean a non-minimal
    generating set).  Supplied expected levels are checked, not trusted.
    """
    images = tuple(int(g) for g in generator_images)
    d = len(images)
    for g in images:
        if not 0 <= g < target.order:
            raise PresentationError(f"generator image {g} out of range")
    if target.subgroup_closure(images) != frozenset(range(target.order)):
        raise PresentationError("generator images do not generate the target")
    rels = tuple(tuple(int(x) for x in w) for w in relators)
    levels = []
    for w in rels:
        if target.word_to_element(w, images) != 0:
            raise PresentationError(
                f"relator {format_word(w)} does not map to the identity"
            )
        lvl = word_level(w, d, target.prime)
        if lvl < 2:
            raise PresentationError(
                f"relator {format_word(w)} has level {lvl} < 2"
            )
        levels.append(lvl)
    if expected_levels is not None and tuple(expected_levels) != tuple(levels):
        raise PresentationError(
            f"declared levels {tuple(expected_levels)} != computed {tuple(levels)}"
        )
    return PresentationData(
        target=target,
        generator_images=images,
        relators=rels,
        levels=tuple(levels),
    )


def builtin_presentation(kind: str, p: int) -> PresentationData:
    """Standard presentation for a built-in group kind.

    The nonabelian order-p^3 family uses the four relators x^p, y^p and
    both weight-3 commutators; this presentation is convenient, not
    certified minimal."""
    G = build_group(kind, p)
    name, _, arg = kind.partition(":")
    if name == "cyclic":
        k = int(arg or 1)
        return make_presentation(G, (1,), ((1,) * p ** k,))
    if name == "elemab":
        d = int(arg or 1)
        images = tuple(int(p ** i) for i in range(d))
        rels = [(i,) * p for i in range(1, d + 1)]
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                rels.append(commutator_word((i,), (j,)))
        return make_presentation(G, images, rels)
    if name == "heisenberg":
        x, y = (1,), (2,)
        c = commutator_word(x, y)
        rels = (
            (1,) * p,
            (2,) * p,
            commutator_word(c, x),
            commutator_word(c, y),
        )
        return make_presentation(G, G.generators, rels)
    raise ValueError(f"unknown group kind {kind!r}")


def _monomial_vector(G: FiniteGroupTable, images: Sequence[int], word: tuple[int, ...]) -> np.ndarray:
    """Image of a noncommutative monomial under x_i -> (g_i - 1), as a
    vector in the group algebra."""
    vec = np.zeros(G.order, dtype=np.int64)
    vec[0] = 1
    for i in word:
        g = images[i - 1]
        translated = np.zeros_like(vec)
        translated[G.mul[:, g]] = vec
        vec = (translated - vec) % G.prime
    return vec


def _fox_images(pres: PresentationData) -> list[list[np.ndarray]]:
    """W[i][j] = image in F_p[G] of the j-th derivative of relator i."""
    G = pres.target
    M = len(G.ideal_filtration()) - 1  # I^M = 0
    out: list[list[np.ndarray]] = []
    for w, lvl in zip(pres.relators, pres.levels):
        cap = max(M, lvl)
        f = magnus_embed(free_reduce(w), pres.d, G.prime, cap)
        row = []
        for j in range(1, pres.d + 1):
            df = fox_derivative(f, j)
            vec = np.zeros(G.order, dtype=np.int64)
            for mono, coeff in df.terms.items():
                vec = (vec + coeff * _monomial_vector(G, pres.generator_images, mono)) % G.prime
            row.append(vec)
        out.append(row)
    return out


def _quotient_data(G: FiniteGroupTable, m: int):
    """(basis, pivots, free coordinates) of I^m, clamped to the zero ideal
    for m past the vanishing index."""
    filt = G.ideal_filtration()
    mm = min(m, len(filt) - 1)
    basis, pivots = filt[mm]
    pivset = set(pivots)
    free = [c for c in range(G.order) if c not in pivset]
    return basis, pivots, free


def e_n_direct(pres: PresentationData, n: int, _images=None) -> int:
    """Defect e_n as the kernel dimension of the relator Jacobian block
    map from the sum of F_p[G]/I^(n - level_i) into d copies of
    F_p[G]/I^(n-1), where block (i, j) right-multiplies by the image of
    the j-th derivative of relator i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    G = pres.target
    p = G.prime
    W = _images if _images is not None else _fox_images(pres)
    cod_basis, cod_pivots, cod_free = _quotient_data(G, n - 1)
    cod_index = {c: k for k, c in enumerate(cod_free)}
    rows = []
    dom_dim = 0
    for i, lvl in enumerate(pres.levels):
        m = n - lvl
        if m <= 0:
            continue
        _, _, dom_free = _quotient_data(G, m)
        dom_dim += len(dom_free)
        for h in dom_free:
            row = np.zeros(pres.d * len(cod_free), dtype=np.int64)
            for j in range(pres.d):
                w = W[i][j]
                translated = np.zeros_like(w)
                translated[G.mul[h]] = w  # e_h * w, left translation
                residue = _reduce_against(
                    translated[None, :], cod_basis, cod_pivots, p
                )[0]
                for c in np.nonzero(residue)[0]:
                    row[j * len(cod_free) + cod_index[int(c)]] = residue[c]
            rows.append(row)
    if not rows:
        return 0
    mat = np.vstack(rows)
    return dom_dim - _rank(mat, p)


@dataclass(frozen=True)
class RecursionReport:
    prime: int
    order: int
    profile: RelationProfile
    c: tuple[int, ...]
    e_direct: tuple[int, ...]
    e_expected: tuple[int, ...]
    horizon: int
    mismatches: tuple[int, ...]
    identity_ok: bool
    terminal_ok: bool

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.terminal_ok


def verify_recursion(pres: PresentationData) -> RecursionReport:
    """Check the counting recursion against the direct kernel computation
    of the defects, through stabilization.

    Identity per n:  sum_i r_i c_(n-i) - d c_(n-1) = 1 + e_n,
    terminal value:  1 + e_n = (r + 1 - d) |G|  for n past the horizon.
    """
    G = pres.target
    c_list = augmentation_powers(G)
    M = len(c_list) - 1
    order = G.order

    def c(n: int) -> int:
        if n <= 0:
            return 0
        if n >= M:
            return order
        return c_list[n]

    max_lag = max(max(pres.levels) if pres.levels else 1, 1)
    horizon = (M - 1) + max_lag + 1
    images = _fox_images(pres)
    e_direct = tuple(e_n_direct(pres, n, _images=images) for n in range(1, horizon + 1))
    e_expected = []
    for n in range(1, horizon + 1):
        v = c(n) - pres.d * c(n - 1) - 1
        for lvl in pres.levels:
            v += c(n - lvl)
        e_expected.append(v)
    mismatches = tuple(
        n for n, (x, y) in enumerate(zip(e_direct, e_expected), start=1) if x != y
    )
    terminal_ok = 1 + e_direct[-1] == (pres.r + 1 - pres.d) * order
    return RecursionReport(
        prime=G.prime,
        order=order,
        profile=pres.profile(),
        c=c_list,
        e_direct=e_direct,
        e_expected=tuple(e_expected),
        horizon=horizon,
        mismatches=mismatches,
        identity_ok=not mismatches,
        terminal_ok=terminal_ok,
    )


# ---------------------------------------------------------------------------
# Plain-text group files
# ---------------------------------------------------------------------------

GROUP_FILE_GRAMMAR = """\
Group file grammar (whitespace-separated, '#' starts a comment):

    p k d          header: prime, order exponent (order = p^k), generator count
    <order>        element count, must equal p^k
    <order rows>   multiplication table, row i lists the products i*j
    g1 .. gd       generator image indices (line present only when d > 0)
    r              relator count
    <r words>      one relator per line over x1..xd; capital X means inverse

Element 0 must be the identity.
"""


def _tokens(text: str):
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        for tok in body.split():
            yield tok


def parse_group_text(text: str, size_limit: int = DEFAULT_SIZE_LIMIT):
    """Parse the plain-text group format; returns (group, presentation or
    None)."""
    toks = _tokens(text)

    def take(what: str) -> str:
        try:
            return next(toks)
        except StopIteration:
            raise ValueError(f"unexpected end of file while reading {what}") from None

    p = int(take("prime"))
    k = int(take("order exponent"))
    d = int(take("generator count"))
    order = int(take("element count"))
    if order != p ** k:
        raise ValueError(f"element count {order} != {p}^{k}")
    mul = np.zeros((order, order), dtype=np.int64)
    for i in range(order):
        for j in range(order):
            mul[i, j] = int(take(f"table entry ({i},{j})"))
    images = tuple(int(take("generator image")) for _ in range(d))
    G = FiniteGroupTable(p, mul, generators=images or None, size_limit=size_limit)
    r = int(take("relator count"))
    words = [parse_word(take(f"relator {i}"), d) for i in range(r)]
    pres = None
    if d > 0:
        pres = make_presentation(G, images, words)
    elif r:
        raise ValueError("relators given without generators")
    return G, pres


def parse_group_file(path, size_limit: int = DEFAULT_SIZE_LIMIT):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_text(fh.read(), size_limit=size_limit)


def format_group_file(G: FiniteGroupTable, pres: PresentationData | None = None) -> str:
    """Serialize a group (and optionally its presentation) in the
    plain-text format accepted by parse_group_file."""
    k = 0
    m = G.order
    while m > 1:
        m //= G.prime
        k += 1
    images = pres.generator_images if pres is not None else G.generators
    lines = [f"{G.prime} {k} {len(images)}", str(G.order)]
    for i in range(G.order):
        lines.append(" ".join(str(int(x)) for x in G.mul[i]))
    if images:
        lines.append(" ".join(str(g) for g in images))
    rels = pres.relators if pres is not None else ()
    lines.append(str(len(rels)))
    for w in rels:
        lines.append(format_word(w))
    return "\n".join(lines) + "\n"
