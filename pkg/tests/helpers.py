"""Independent brute-force oracles used across the test suite.

Everything here is deliberately naive and separate from the library code
paths it checks: rotation-based Lyndon recognition, exhaustive factorization
search, dense Fraction Gaussian elimination, partition counting, necklace
counts and the Dynkin projection.
"""

from fractions import Fraction
from itertools import product

from hopfpbw import Polynomial, commutator
from hopfpbw.word import GREATER, compare_lex


def all_words(n_letters, max_len):
    for length in range(max_len + 1):
        yield from product(range(n_letters), repeat=length)


def brute_is_lyndon(u):
    """Rotation definition: u nonempty and u > wv for every split u = vw."""
    if not u:
        return False
    for i in range(1, len(u)):
        if compare_lex(u, u[i:] + u[:i]) != GREATER:
            return False
    return True


def brute_factorizations(u, lyndon_words=None):
    """All nondecreasing factorizations of ``u`` into Lyndon words."""
    if lyndon_words is None:
        lyndon_words = None  # recognition on the fly
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(list(acc))
            return
        for cut in range(1, len(rest) + 1):
            head = rest[:cut]
            if not brute_is_lyndon(head):
                continue
            if acc and compare_lex(acc[-1], head) == GREATER:
                continue
            acc.append(head)
            rec(rest[cut:], acc)
            acc.pop()

    rec(u, [])
    return out


def echelon_rank(rows):
    """Rank of a sparse rational matrix; rows are dicts keyed by column."""
    rows = [dict(r) for r in rows if r]
    pivots = {}
    rank = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = min(row)
            if col in pivots:
                factor = row[col]
                pivot = pivots[col]
                for k, v in pivot.items():
                    row[k] = row.get(k, Fraction(0)) - factor * v
                row = {k: v for k, v in row.items() if v}
            else:
                inv = 1 / row[col]
                row = {k: v * inv for k, v in row.items()}
                pivots[col] = row
                rank += 1
                row = {}
    return rank


def ideal_dimension_oracle(alphabet, relations, degree):
    """dim of the degree-``degree`` component of the quotient, by dense
    linear algebra over the input relations (independent of completion)."""
    from hopfpbw.word import words_of_degree

    words = {w: i for i, w in enumerate(words_of_degree(alphabet, degree))}
    rows = []
    for rel in relations:
        d = rel.degree()
        if d > degree:
            continue
        for left_deg in range(degree - d + 1):
            right_deg = degree - d - left_deg
            if right_deg < 0:
                continue
            for a in words_of_degree(alphabet, left_deg):
                for b in words_of_degree(alphabet, right_deg):
                    row = {}
                    for w, c in rel.coeffs.items():
                        row[words[a + w + b]] = row.get(words[a + w + b], Fraction(0)) + Fraction(c)
                    rows.append(row)
    return len(words) - echelon_rank(rows)


def weighted_monomial_count(degrees, n):
    """Number of multisets from parts with the given degrees summing to n."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for d in degrees:
        for k in range(d, n + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs[n]


def necklace_count(k, n):
    """Number of Lyndon words of length n over k letters (Witt formula)."""

    def mobius(m):
        result = 1
        d = 2
        while d * d <= m:
            if m % d == 0:
                m //= d
                if m % d == 0:
                    return 0
                result = -result
            d += 1
        if m > 1:
            result = -result
        return result

    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += mobius(d) * k ** (n // d)
    return total // n


def dynkin_map(f: Polynomial) -> Polynomial:
    """Right-nested bracketing of each word: w = a1..an -> [a1,[a2,[...]]]."""
    alphabet, field = f.alphabet, f.field
    out = Polynomial.zero(alphabet, field)
    for w, c in f.coeffs.items():
        if not w:
            continue
        acc = Polynomial.from_word(alphabet, field, (w[-1],))
        for letter in reversed(w[:-1]):
            acc = commutator(Polynomial.from_word(alphabet, field, (letter,)), acc)
        out = out + acc.scale(c)
    return out


def is_lie_by_dynkin(f: Polynomial) -> bool:
    """Dynkin-Specht-Wever: each word-length component must satisfy
    ``dynkin(f_m) = m * f_m``."""
    by_length = {}
    for w, c in f.coeffs.items():
        by_length.setdefault(len(w), {})[w] = c
    for m, coeffs in by_length.items():
        part = Polynomial(f.alphabet, f.field, coeffs)
        if m == 0:
            if not part.is_zero():
                return False
            continue
        if dynkin_map(part) != part.scale(f.field.of_int(m)):
            return False
    return True
