"""Truncated rewriting: normal forms, irreducible words, dimensions.

The enveloping algebra of the Heisenberg Lie algebra, presented with a
degree-2 central generator, is completed up to degree 6.  The central
generator is eliminated, and the surviving irreducible Lyndon words
x1 < x2 x1 < x2 carry the whole structure.
"""

from hopfpbw import (
    Alphabet,
    QQ,
    admissible_words,
    bracket_coordinates,
    compute_truncated_gb,
    irreducible_lyndon_words,
    parse_polynomial,
)

heis = Alphabet([("x1", 1), ("x2", 1), ("x3", 2)])
relations = [parse_polynomial(s, heis, QQ) for s in
             ("x2*x1 - x1*x2 - x3", "x3*x1 - x1*x3", "x3*x2 - x2*x3")]

gb = compute_truncated_gb(heis, QQ, relations, 6)
print("rewriting system (leading word first):")
for g in gb.elements:
    print("  ", g)

print("dimensions per degree 0..6:", gb.dimensions())

nf = gb.normal_form(parse_polynomial("x3*x2*x1", heis, QQ))
print("normal form of x3*x2*x1:", nf)

print("irreducible Lyndon words:",
      ", ".join(heis.render_word(u) for u in irreducible_lyndon_words(gb, 6)))

print("ordered monomials of degree 2:",
      ", ".join(heis.render_word(w) for w in admissible_words(gb, 2, "B")))

# Coordinates over the bracketed irreducible words: x3 is the class of the
# bracket of x2 x1.
coords = bracket_coordinates(parse_polynomial("x3", heis, QQ), gb)
print("bracket coordinates of x3:",
      {heis.render_word(w): str(c) for w, c in coords.items()})
