"""Standard bracketings and the standard coproduct on the free algebra.

The bracketing turns every Lyndon word into an iterated commutator whose
leading word is the word itself; the standard coproduct makes letters
primitive and detects Lie polynomials.
"""

from hopfpbw import (
    Alphabet,
    Polynomial,
    PrimeField,
    QQ,
    enumerate_lyndon,
    is_lie_polynomial,
    standard_bracket,
    standard_comultiplication,
)

ab = Alphabet([("x1", 1), ("x2", 1)])

# Brackets of Lyndon words, recursively split at the largest suffix:
for text in ("x2 x1", "x2 x1 x1", "x2 x2 x1"):
    w = ab.word(*text.split())
    b = standard_bracket(ab, w)
    print(f"[{text}]  =  {b}   (leading word {ab.render_word(b.leading_word())})")

# Non-Lyndon words get the plain product across their Lyndon factors:
w = ab.word("x1", "x2", "x1")
print(f"[x1 x2 x1] = {standard_bracket(ab, w)}")

# Letters are primitive for the standard coproduct; squares pick up the
# binomial middle term, which disappears in characteristic 2.
x = Polynomial.from_word(ab, QQ, ab.word("x1"))
print("coproduct of x1:  ", standard_comultiplication(x))
xx = Polynomial.from_word(ab, QQ, ab.word("x1", "x1"))
print("coproduct of x1^2:", standard_comultiplication(xx))
F2 = PrimeField(2)
xx2 = Polynomial.from_word(ab, F2, ab.word("x1", "x1"))
print("  ... over F2:    ", standard_comultiplication(xx2))

# Brackets of Lyndon words are Lie polynomials (primitive); products are not.
for u in enumerate_lyndon(ab, 4):
    assert is_lie_polynomial(standard_bracket(ab, u))
print("all brackets of Lyndon words up to degree 4 are primitive")
xy = Polynomial.from_word(ab, QQ, ab.word("x1", "x2"))
print("x1*x2 primitive?", is_lie_polynomial(xy))
