"""Companion linearizations carry the completion problem over to pencils.

Run: python3 demos/companion_and_pencils.py
"""
from polycomplete import GF, Poly, PolyMatrix, companion_form
from polycomplete.completion import PrescribedData, complete_row_completion, pencil_row_completion
from polycomplete.structure import companion_data_map, complete_structural_data

F = GF(3)
s = Poly.s(F)
P = PolyMatrix([[s**2 + 1, s], [Poly.zero(F), s]], F)
data = complete_structural_data(P)
print("P =")
print(P)
print("data of P:", [e.format() for e in data.num], data.orders, data.cols, data.rows)

for g in (2, 3):
    C = companion_form(P, g)
    print(f"\ngrade {g}: companion pencil {C.shape}")
    print("  extracted  ", complete_structural_data(C).orders)
    print("  predicted  ", companion_data_map(data, g).orders)

# completing P by the row [1, 0] versus completing its companion pencil
W = PolyMatrix([[Poly.one(F), Poly.zero(F)]], F)
full = complete_structural_data(P.vstack(W))
t = PrescribedData.from_structural(full, "complete", 1, full.rank - data.rank)
print("\nrow completion feasible:", complete_row_completion(data, t).feasible)
pen = pencil_row_completion(companion_data_map(data, 2), companion_data_map(full, 2), t.x, t.z - t.x)
print("pencil completion feasible:", pen.feasible)
