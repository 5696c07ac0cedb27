"""Adding one row to [s, 0]: polynomial versus rational completions.

Run: python3 demos/worked_example.py
"""
from polycomplete import GF, QQ, Poly, PolyMatrix, RatFunc, RatMatrix
from polycomplete.completion import PrescribedData, check
from polycomplete.oracle import SearchSpace, enumerate_completions
from polycomplete.structure import complete_structural_data

s = Poly.s(QQ)
one, zero = Poly.one(QQ), Poly.zero(QQ)

P = PolyMatrix([[s, zero]])
src = complete_structural_data(P)
print("source [s, 0]")
print("  invariant factors", [e.format() for e in src.num], "orders", src.orders,
      "column indices", src.cols, "row indices", src.rows)

# ask for orders at infinity (-1, +1) after adding one row, nothing else prescribed
target = PrescribedData("inf", z=1, x=1, orders=(-1, 1))
print()
print(check(src, target, "polynomial").explain())
print()
print(check(src, target, "rational").explain())

# the rational witness: diag(s, 1/s)
R = RatMatrix([[s, zero], [zero, RatFunc(one, s)]])
print("\norders of diag(s, 1/s):", complete_structural_data(R).orders)

# no polynomial row does it; over GF(2) the first order forces degree 1, so rows of degree <= 1 are all there is to try
F = GF(2)
A = enumerate_completions(SearchSpace(F, PolyMatrix([[Poly.s(F), Poly.zero(F)]], F), 1, 1))
print("orders reached by polynomial rows over GF(2):", sorted({d.orders for d in A}))
