"""Ore-extension towers and heights in characteristic p.

The Heisenberg enveloping algebra splits as k[z1][z2; d2][z3; d3] with
d3(z1) = z2 and all other derivation values zero.  Over a prime field,
truncated powers of a single generator produce finite heights, always a
power of the characteristic.
"""

from hopfpbw import (
    Alphabet,
    Presentation,
    PrimeField,
    QQ,
    compute_heights,
    extract_ihoe,
    parse_polynomial,
)
from hopfpbw.structure import render_pbw_value

heis = Alphabet([("x1", 1), ("x2", 1), ("x3", 2)])
pres = Presentation(
    heis, QQ,
    [parse_polynomial(s, heis, QQ) for s in
     ("x2*x1 - x1*x2 - x3", "x3*x1 - x1*x3", "x3*x2 - x2*x3")],
    bound=6)

tower = extract_ihoe(pres)
print("tower generators:")
for i, (word, degree, value) in enumerate(tower.generators):
    print(f"  z{i + 1} = {heis.render_word(word)}  (degree {degree}, class {value})")
for (i, j), terms in sorted(tower.derivations.items()):
    print(f"  d{i}(z{j}) = {render_pbw_value(terms, QQ)}")

print()
single = Alphabet([("x", 1)])
for p in (2, 3, 5):
    field = PrimeField(p)
    pres_p = Presentation(
        single, field, [parse_polynomial(f"x^{p}", single, field)], bound=2 * p)
    data, verdict = compute_heights(pres_p)
    h = data.heights[single.word("x")]
    print(f"char {p}: height of x is {h}; consistency check {'PASS' if verdict.ok else 'FAIL'}")

# In characteristic zero no irreducible generator word acquires a height.
data0, verdict0 = compute_heights(pres)
print("char 0 heights observed:", {heis.render_word(u): h for u, h in data0.heights.items()},
      "| consistency:", "PASS" if verdict0.ok else "FAIL")
