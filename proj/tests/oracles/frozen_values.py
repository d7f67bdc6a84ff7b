"""Independent computation of the constants frozen into the C++ tests.

Run: python3 tests/oracles/frozen_values.py
"""
from fractions import Fraction


def ratio(a, b):
    return Fraction(a, b)


def f_measure(p, r):
    return 2 * p * r / (p + r)


def pct(a, b):
    # nearest integer, halves away from zero
    x = Fraction(100 * a, b)
    return int(x + Fraction(1, 2))


print("== metrics ==")
p6, r6 = ratio(44, 44 + 15), ratio(44, 103)
print("influence p r f", float(p6), float(r6), float(f_measure(p6, r6)))
p4, r4 = ratio(103, 103 + 86), ratio(103, 362)
print("politics  p r f", float(p4), float(r4), float(f_measure(p4, r4)))
print("f(0.7458, 0.4272)", f_measure(0.7458, 0.4272))
for c in (103, 259, 362):
    print("rate", c, pct(c, 473))

print("== cp1252 mojibake ==")
for ch in ["’", "“", "”", "–", "—", "…",
           "é", "ñ", "ü", "£", "€"]:
    moj = ch.encode("utf-8").decode("cp1252", errors="replace")
    print(repr(ch), "<-", repr(moj), [hex(ord(c)) for c in moj])
print(repr("Karen’s family".encode("utf-8").decode("cp1252")))

print("== category report: synthetic 10 posts ==")
# (category, gold_is_domain)
posts = [(1, True), (1, True), (1, False), (2, True), (2, True),
         (2, True), (3, False), (3, True), (4, False), (4, False)]
for cat in (1, 2, 3, 4):
    sel = [g for c, g in posts if c == cat]
    print(cat, len(sel), pct(sum(sel), len(sel)))
