"""Degree-truncated noncommutative Groebner engine under graded lex.

Homogeneous ideals only: truncation at a degree bound is then exact, and the
interreduced monic system obtained by resolving all overlap compositions of
degree <= bound certifies normal forms, irreducible words, dimensions and
heights up to that bound.  Completion processes compositions by ascending
total degree, then by graded-lex order of the overlap word, so output is
deterministic for a fixed input order.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field as dataclass_field

from .poly import Polynomial, TensorElement, standard_bracket
from .word import enumerate_lyndon, is_lyndon, words_of_degree


class OutOfCertifiedRange(ValueError):
    """Raised when an operation needs degrees above the certified bound."""


class WholeAlgebraIdeal(ValueError):
    """Raised when the relations generate the unit ideal."""


class TruncatedGB:
    """Interreduced monic rewriting system complete up to ``bound``."""

    def __init__(self, alphabet, field, bound: int):
        if bound < 1:
            raise ValueError("bound must be >= 1")
        self.alphabet = alphabet
        self.field = field
        self.bound = bound
        self.elements: list[Polynomial] = []
        self._keys: list = []             # glex keys of leading words, parallel
        self._lw_by_len: dict[int, set] = {}
        self._nf_bracket_cache: dict = {}

    # -- basis bookkeeping ---------------------------------------------------

    def leading_words(self) -> list:
        return [g.leading_word() for g in self.elements]

    def _insert(self, g: Polynomial):
        lw = g.leading_word()
        key = self.alphabet.glex_key(lw)
        pos = 0
        while pos < len(self._keys) and self._keys[pos] < key:
            pos += 1
        self.elements.insert(pos, g)
        self._keys.insert(pos, key)
        self._lw_by_len.setdefault(len(lw), set()).add(lw)
        self._nf_bracket_cache.clear()

    def _remove(self, idx: int):
        g = self.elements.pop(idx)
        self._keys.pop(idx)
        lw = g.leading_word()
        self._lw_by_len[len(lw)].discard(lw)
        self._nf_bracket_cache.clear()
        return g

    # -- word-level reducibility ----------------------------------------------

    def is_reducible_word(self, w) -> bool:
        """True iff some basis leading word occurs as a factor of ``w``."""
        for length, lws in self._lw_by_len.items():
            if not lws or length > len(w):
                continue
            for i in range(len(w) - length + 1):
                if w[i:i + length] in lws:
                    return True
        return False

    def _ends_in_leading_word(self, w) -> bool:
        for length, lws in self._lw_by_len.items():
            if lws and length <= len(w) and w[-length:] in lws:
                return True
        return False

    def _find_rewrite(self, w):
        """First (element, position) whose leading word occurs in ``w``."""
        for g in self.elements:
            lw = g.leading_word()
            span = len(w) - len(lw)
            if span < 0:
                continue
            for i in range(span + 1):
                if w[i:i + len(lw)] == lw:
                    return g, i
        return None

    # -- reduction -------------------------------------------------------------

    def _reduce(self, f: Polynomial) -> Polynomial:
        alphabet, fld = self.alphabet, self.field
        add, mul, neg, zero = fld.add, fld.mul, fld.neg, fld.zero
        coeffs = dict(f.coeffs)
        key = alphabet.glex_key
        while True:
            hit = None
            for w in sorted(coeffs, key=key, reverse=True):
                found = self._find_rewrite(w)
                if found is not None:
                    hit = (w, *found)
                    break
            if hit is None:
                break
            w, g, i = hit
            lw = g.leading_word()
            c = coeffs[w]
            prefix, suffix = w[:i], w[i + len(lw):]
            for u, a in g.coeffs.items():
                v = prefix + u + suffix
                nv = add(coeffs.get(v, zero), mul(neg(c), a))
                if nv == zero:
                    coeffs.pop(v, None)
                else:
                    coeffs[v] = nv
        return Polynomial(alphabet, fld, coeffs)

    def normal_form(self, f: Polynomial) -> Polynomial:
        """The unique representative of ``f + I`` on irreducible words."""
        if f.degree() > self.bound:
            raise OutOfCertifiedRange(
                f"degree {f.degree()} exceeds the certified bound {self.bound}")
        return self._reduce(f)

    def normal_form_tensor(self, t: TensorElement) -> TensorElement:
        if t.degree() > self.bound:
            raise OutOfCertifiedRange(
                f"degree {t.degree()} exceeds the certified bound {self.bound}")
        return t.map_legs(self._reduce, self._reduce)

    # -- irreducible-word combinatorics -----------------------------------------

    def irreducible_words(self, n: int) -> list:
        """All irreducible words of degree exactly ``n``, lex ascending."""
        if n > self.bound:
            raise OutOfCertifiedRange(f"degree {n} exceeds bound {self.bound}")
        if n == 0:
            return [()]
        return words_of_degree(self.alphabet, n, prune=self._ends_in_leading_word)

    def dimensions(self) -> list[int]:
        """Quotient dimensions per degree ``0..bound``."""
        return [len(self.irreducible_words(n)) for n in range(self.bound + 1)]

    def height(self, u):
        """Least ``n`` with ``u**n`` reducible, or None if not observed."""
        u = tuple(u)
        if not is_lyndon(u):
            raise ValueError("height is defined for Lyndon words only")
        d = self.alphabet.degree(u)
        if d > self.bound:
            raise OutOfCertifiedRange(f"degree {d} exceeds bound {self.bound}")
        n = 1
        while n * d <= self.bound:
            if self.is_reducible_word(u * n):
                return n
            n += 1
        return None


def _validate_relation(alphabet, rel: Polynomial, bound: int, label: str):
    if rel.is_zero():
        raise ValueError(f"{label} is zero")
    parts = rel.homogeneous_components()
    if len(parts) > 1:
        degrees = ", ".join(str(n) for n in parts)
        raise ValueError(f"{label} is inhomogeneous: degrees {degrees}")
    (deg,) = parts
    if deg == 0:
        raise WholeAlgebraIdeal(f"{label} is a nonzero constant: ideal is the whole algebra")
    if deg > bound:
        raise ValueError(f"{label} has degree {deg} above the bound {bound}")


def _overlap_positions(l1, l2):
    """Overlap lengths k: a nonempty proper suffix of l1 equals a prefix of l2."""
    top = min(len(l1), len(l2))
    for k in range(1, top):
        if l1[len(l1) - k:] == l2[:k]:
            yield k


def compute_truncated_gb(alphabet, field, relations, bound: int) -> TruncatedGB:
    """Interreduced monic rewriting system complete to degree ``bound``."""
    gb = TruncatedGB(alphabet, field, bound)
    for i, rel in enumerate(relations):
        if rel.alphabet != alphabet or rel.field != field:
            raise ValueError(f"relation {i + 1} has mismatched alphabet or scalar mode")
        _validate_relation(alphabet, rel, bound, f"relation {i + 1}")

    pending = deque(relations)
    pairs: list = []           # heap of (degree, lex key of overlap word, seq, f, g, k)
    seen_pairs: set = set()
    counter = 0

    def push_pairs(h: Polynomial):
        nonlocal counter
        lh = h.leading_word()
        for g in list(gb.elements):
            lg = g.leading_word()
            for first, second in ((h, g), (g, h)):
                l1, l2 = first.leading_word(), second.leading_word()
                for k in _overlap_positions(l1, l2):
                    tag = (l1, l2, k)
                    if tag in seen_pairs:
                        continue
                    seen_pairs.add(tag)
                    overlap = l1 + l2[k:]
                    deg = alphabet.degree(overlap)
                    if deg > bound:
                        continue
                    counter += 1
                    heapq.heappush(
                        pairs,
                        (deg, alphabet.lex_key(overlap), counter, first, second, k))

    def incorporate(f: Polynomial):
        f = gb._reduce(f)
        if f.is_zero():
            return
        if f.degree() == 0:
            raise WholeAlgebraIdeal("unit reached during completion: ideal is the whole algebra")
        f = f.scale(field.inv(f.leading_coefficient()))
        lw = f.leading_word()
        affected = []
        for idx in range(len(gb.elements) - 1, -1, -1):
            g = gb.elements[idx]
            if any(_contains(w, lw) for w in g.coeffs):
                affected.append(gb._remove(idx))
        gb._insert(f)
        push_pairs(f)
        for g in reversed(affected):
            pending.append(g)

    while pending or pairs:
        while pending:
            incorporate(pending.popleft())
        if pairs:
            _deg, _key, _seq, f, g, k = heapq.heappop(pairs)
            l1, l2 = f.leading_word(), g.leading_word()
            left_tail = Polynomial.from_word(alphabet, field, l2[k:])
            right_head = Polynomial.from_word(alphabet, field, l1[:len(l1) - k])
            pending.append(f * left_tail - right_head * g)
    return gb


def _contains(w, factor) -> bool:
    span = len(w) - len(factor)
    if span < 0:
        return False
    return any(w[i:i + len(factor)] == factor for i in range(span + 1))


def normal_form(f: Polynomial, gb: TruncatedGB) -> Polynomial:
    return gb.normal_form(f)


def irreducible_lyndon_words(gb: TruncatedGB, max_degree: int) -> list:
    """All irreducible Lyndon words of degree <= ``max_degree``, glex sorted."""
    if max_degree > gb.bound:
        raise OutOfCertifiedRange(f"degree {max_degree} exceeds bound {gb.bound}")
    return [u for u in enumerate_lyndon(gb.alphabet, max_degree)
            if not gb.is_reducible_word(u)]


def height(u, gb: TruncatedGB):
    return gb.height(u)


def admissible_words(gb: TruncatedGB, n: int, kind: str = "irreducible") -> list:
    """Degree-``n`` members of the irreducible / B / C word families."""
    if kind not in ("irreducible", "B", "C"):
        raise ValueError(f"unknown kind {kind!r}")
    if n > gb.bound:
        raise OutOfCertifiedRange(f"degree {n} exceeds bound {gb.bound}")
    if kind == "irreducible":
        return gb.irreducible_words(n)
    if n == 0:
        return [()]
    alphabet = gb.alphabet
    factors = sorted(irreducible_lyndon_words(gb, n), key=alphabet.lex_key)
    out = []

    def extend_b(start, w, remaining):
        if remaining == 0:
            out.append(w)
            return
        for j in range(start, len(factors)):
            d = alphabet.degree(factors[j])
            if d <= remaining:
                extend_b(j, w + factors[j], remaining - d)

    def extend_c(start, w, remaining):
        if remaining == 0:
            out.append(w)
            return
        for j in range(start, len(factors)):
            u = factors[j]
            d = alphabet.degree(u)
            if d > remaining:
                continue
            h = gb.height(u)
            top = remaining // d if h is None else min(h - 1, remaining // d)
            for e in range(1, top + 1):
                extend_c(j + 1, w + u * e, remaining - e * d)

    (extend_b if kind == "B" else extend_c)(0, (), n)
    out.sort(key=alphabet.glex_key)
    return out


def _nf_bracket(gb: TruncatedGB, w) -> Polynomial:
    cached = gb._nf_bracket_cache.get(w)
    if cached is None:
        cached = gb._reduce(standard_bracket(gb.alphabet, w, gb.field))
        gb._nf_bracket_cache[w] = cached
    return cached


def bracket_coordinates(f: Polynomial, gb: TruncatedGB) -> dict:
    """Coordinates of ``f + I`` in the bracketed irreducible-word basis.

    Returns the unique coefficients ``c_w`` over irreducible words with
    ``NF(f) = sum c_w NF([w])``, found by graded-lex-descending
    back-substitution (``[w]`` has leading word ``w``).
    """
    g = gb.normal_form(f)
    coords = {}
    while not g.is_zero():
        w = g.leading_word()
        c = g.coeffs[w]
        coords[w] = c
        g = g - _nf_bracket(gb, w).scale(c)
    return coords


def tensor_bracket_coordinates(t: TensorElement, gb: TruncatedGB) -> dict:
    """Leg-wise bracket coordinates of a tensor element.

    Returns a mapping ``(w, w') -> scalar`` over pairs of irreducible words
    with ``(NF (x) NF)(t) = sum c NF([w]) (x) NF([w'])``.
    """
    alphabet, fld = t.alphabet, t.field
    add, zero = fld.add, fld.zero
    key = alphabet.glex_key

    by_right: dict = {}
    for (a, b), c in t.coeffs.items():
        by_right.setdefault(b, {})[a] = add(by_right.get(b, {}).get(a, zero), c)
    mid: dict = {}
    for b in sorted(by_right, key=key, reverse=True):
        left = Polynomial(alphabet, fld, by_right[b])
        for w, c in bracket_coordinates(left, gb).items():
            mid[(w, b)] = add(mid.get((w, b), zero), c)

    by_left: dict = {}
    for (w, b), c in mid.items():
        by_left.setdefault(w, {})[b] = add(by_left.get(w, {}).get(b, zero), c)
    out: dict = {}
    for w in sorted(by_left, key=key, reverse=True):
        right = Polynomial(alphabet, fld, by_left[w])
        for w2, c in bracket_coordinates(right, gb).items():
            if c != zero:
                out[(w, w2)] = c
    return out


@dataclass
class IrreducibleData:
    """Per-degree irreducible combinatorics of a truncated system."""

    bound: int
    dimensions: list[int]
    lyndon: list                      # irreducible Lyndon words, glex sorted
    heights: dict = dataclass_field(default_factory=dict)


def collect_irreducible_data(gb: TruncatedGB, max_degree: int | None = None) -> IrreducibleData:
    bound = gb.bound if max_degree is None else max_degree
    if bound > gb.bound:
        raise OutOfCertifiedRange(f"degree {bound} exceeds bound {gb.bound}")
    lyndon = irreducible_lyndon_words(gb, bound)
    heights = {u: gb.height(u) for u in lyndon}
    dims = [len(gb.irreducible_words(n)) for n in range(bound + 1)]
    return IrreducibleData(bound=bound, dimensions=dims, lyndon=lyndon, heights=heights)
