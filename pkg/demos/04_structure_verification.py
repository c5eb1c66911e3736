"""End-to-end structure certificates for a non-primitive presentation.

A polynomial algebra on x (degree 1, primitive) and y (degree 2, with the
twisted coproduct 1#y + y#1 + x#x) passes triangularity, stability,
the PBW-generator conditions, the coalgebra laws, and has antipode
S(y) = x^2 - y.
"""

from hopfpbw import (
    Alphabet,
    Antipode,
    Polynomial,
    Presentation,
    QQ,
    check_coassoc_counit,
    hilbert_and_gk,
    parse_polynomial,
    parse_tensor,
    verify_structure_theorem,
)

pair = Alphabet([("x", 1), ("y", 2)])
pres = Presentation(
    pair, QQ,
    [parse_polynomial("y*x - x*y", pair, QQ)],
    {"y": parse_tensor("1#y + y#1 + x#x", pair, QQ)},
    bound=6)

report = verify_structure_theorem(pres)
print("hypotheses ok:", report.hypotheses_ok)
for check in report.verdicts():
    print(f"  {'PASS' if check.ok else 'FAIL'} {check.name}")
print("PBW generators:", ", ".join(pair.render_word(u) for u in report.gamma))

coeffs, identity, gk = hilbert_and_gk(report)
print("dimensions:", coeffs)
print("product identity:", identity.ok)
print("growth:", gk["detail"])

comul = pres.comultiplication()
gb = report.gb
print("coalgebra laws:", check_coassoc_counit(comul, gb, 6).ok)
antipode = Antipode(comul, gb)
for name in pair.names:
    value = antipode.of(Polynomial.generator(pair, QQ, name))
    print(f"S({name}) = {value}")
print("antipode law:", antipode.convolution_check(6).ok)
