"""Lyndon words under the reversed-prefix lexicographic order.

Every word factors uniquely as a nondecreasing product of Lyndon words, and
a Lyndon word splits at its largest proper suffix.  This script walks through
the basic word-level toolkit.
"""

from hopfpbw import (
    Alphabet,
    compare_lex,
    enumerate_lyndon,
    is_lyndon,
    lyndon_decomposition,
    shirshov_factorization,
)

ab = Alphabet([("x1", 1), ("x2", 1)])
show = ab.render_word

# Under this convention a word is *smaller* than each of its proper prefixes:
print("x1 vs x1 x1:", compare_lex(ab.word("x1"), ab.word("x1", "x1")))   # 1 (greater)
print("x2 x1 vs x2:", compare_lex(ab.word("x2", "x1"), ab.word("x2")))   # -1 (less)

# Lyndon words exceed all of their proper suffixes; letters are Lyndon.
for text in ("x2 x1", "x1 x2", "x2 x2 x1 x2 x1"):
    w = ab.word(*text.split())
    print(f"{text:>15}  lyndon: {is_lyndon(w)}")

# The factorization of a Lyndon word at its lexicographically largest
# proper suffix yields two smaller Lyndon words.
u = ab.word("x2", "x2", "x1", "x2", "x1")
left, right = shirshov_factorization(u)
print(f"split of {show(u)}: ({show(left)} | {show(right)})")

# Unique nondecreasing Lyndon factorization of arbitrary words:
for text in ("x1 x2 x1", "x2 x1 x2", "x2 x1 x1 x2 x2"):
    w = ab.word(*text.split())
    factors = " | ".join(show(f) for f in lyndon_decomposition(w))
    print(f"{text:>15}  ->  {factors}")

# All Lyndon words up to degree 5, grouped by length (2, 1, 2, 3, 6 ...):
words = enumerate_lyndon(ab, 5)
by_len = {}
for w in words:
    by_len.setdefault(len(w), []).append(show(w))
for n, group in sorted(by_len.items()):
    print(f"length {n} ({len(group)}):", ", ".join(group))
