"""Words over a well-ordered graded alphabet.

Letters carry positive integer degrees and are totally ordered degree-major,
then by declaration rank.  Words are plain tuples of letter indices; the
``Alphabet`` object owns degrees, names and sort keys.

The lexicographic order used throughout is the reversed-prefix variant:
``u < v`` holds when ``v`` is a proper prefix of ``u``, or when the first
differing position carries a smaller letter in ``u``.  In particular a word
is smaller than each of its proper prefixes (``x**2 < x``), and Lyndon words
are the words strictly greater than all of their proper nonempty suffixes.
"""

from __future__ import annotations

Word = tuple  # tuple of letter indices

LESS, EQUAL, GREATER = -1, 0, 1


class Alphabet:
    """A finite well-ordered alphabet of graded generators.

    ``generators`` is a sequence of ``(name, degree)`` pairs in declaration
    order.  Internally letters are reindexed so that the integer index order
    coincides with the letter order (degree-major, then declaration rank);
    all word comparisons reduce to integer comparisons.
    """

    def __init__(self, generators):
        generators = list(generators)
        if not generators:
            raise ValueError("alphabet needs at least one generator")
        seen = set()
        for name, degree in generators:
            if not isinstance(degree, int) or degree < 1:
                raise ValueError(f"generator {name!r}: degree must be a positive integer")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        order = sorted(range(len(generators)), key=lambda i: (generators[i][1], i))
        self.names = tuple(generators[i][0] for i in order)
        self.degrees = tuple(generators[i][1] for i in order)
        self.declaration = tuple((name, deg) for name, deg in generators)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.size = len(self.names)
        self._bracket_cache = {}
        self._coproduct_cache = {}

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.declaration == other.declaration

    def __hash__(self):
        return hash(self.declaration)

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"Alphabet({gens})"

    def letter(self, name):
        """Index of the named generator; the single-letter word is ``(i,)``."""
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word(self, *names):
        return tuple(self.letter(n) for n in names)

    def degree(self, w: Word) -> int:
        degrees = self.degrees
        return sum(degrees[i] for i in w)

    def lex_key(self, w: Word):
        """Sort key realizing the reversed-prefix lex order (ascending)."""
        # Right-padding with a maximal sentinel makes proper prefixes larger.
        return (*w, self.size)

    def glex_key(self, w: Word):
        """Sort key for the graded lex order (ascending)."""
        return (self.degree(w), *w, self.size)

    def render_word(self, w: Word, sep: str = " ") -> str:
        if not w:
            return "1"
        return sep.join(self.names[i] for i in w)


def compare_lex(u: Word, v: Word) -> int:
    """Compare two words lexicographically; returns -1, 0 or 1."""
    for a, b in zip(u, v):
        if a != b:
            return LESS if a < b else GREATER
    if len(u) == len(v):
        return EQUAL
    # The longer word extends the shorter one, hence is smaller.
    return LESS if len(u) > len(v) else GREATER


def compare_glex(alphabet: Alphabet, u: Word, v: Word) -> int:
    """Compare by degree first, ties broken lexicographically."""
    du, dv = alphabet.degree(u), alphabet.degree(v)
    if du != dv:
        return LESS if du < dv else GREATER
    return compare_lex(u, v)


def is_lyndon(u: Word) -> bool:
    """True iff ``u`` is nonempty and exceeds every proper nonempty suffix."""
    if not u:
        return False
    n = len(u)
    for i in range(1, n):
        if compare_lex(u, u[i:]) != GREATER:
            return False
    return True


def shirshov_factorization(u: Word) -> tuple[Word, Word]:
    """Split ``u`` before its lexicographically largest proper suffix."""
    if len(u) < 2:
        raise ValueError("Shirshov factorization needs a word of length >= 2")
    best = 1
    for i in range(2, len(u)):
        if compare_lex(u[i:], u[best:]) == GREATER:
            best = i
    return u[:best], u[best:]


def lyndon_decomposition(u: Word) -> list[Word]:
    """The unique nondecreasing factorization of ``u`` into Lyndon words.

    Duval's factorization with all letter comparisons reversed: under the
    reversed convention the factorization comes out nondecreasing.
    """
    out = []
    n = len(u)
    k = 0
    while k < n:
        i, j = k, k + 1
        while j < n and u[i] >= u[j]:
            i = k if u[i] > u[j] else i + 1
            j += 1
        step = j - i
        while k <= i:
            out.append(u[k:k + step])
            k += step
    return out


def enumerate_lyndon(alphabet: Alphabet, max_degree: int) -> list[Word]:
    """All Lyndon words of degree <= ``max_degree``, sorted by graded lex."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    degrees = alphabet.degrees
    found = []

    def extend(w, budget):
        for i in range(alphabet.size):
            d = degrees[i]
            if d > budget:
                continue
            v = w + (i,)
            if is_lyndon(v):
                found.append(v)
            extend(v, budget - d)

    extend((), max_degree)
    found.sort(key=alphabet.glex_key)
    return found


def words_of_degree(alphabet: Alphabet, n: int, prune=None) -> list[Word]:
    """All words of degree exactly ``n``, sorted by lex (ascending).

    ``prune`` is an optional predicate on partial words; subtrees rooted at
    words for which it returns True are skipped.
    """
    degrees = alphabet.degrees
    out = []

    def extend(w, budget):
        if budget == 0:
            out.append(w)
            return
        for i in range(alphabet.size):
            d = degrees[i]
            if d > budget:
                continue
            v = w + (i,)
            if prune is not None and prune(v):
                continue
            extend(v, budget - d)

    extend((), n)
    out.sort(key=alphabet.lex_key)
    return out
