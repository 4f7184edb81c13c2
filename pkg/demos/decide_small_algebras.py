"""Decide GKZ for a handful of familiar algebras and show a refutation.

Run with ``python demos/decide_small_algebras.py``.
"""
import gkz

algebras = [
    gkz.function_algebra(3, 2),
    gkz.function_algebra(2, 3),
    gkz.field_extension(3, 2),
    gkz.dual_numbers(3),
    gkz.matrix_algebra(2, 2),
    gkz.unitisation(gkz.upper_triangular(2, 3, strict=True)),
]

print(f"{'algebra':<28} {'units':>5} {'GKZ':>5} {'vacuous':>8} {'jac':>4}")
for a in algebras:
    r = gkz.decide_gkz(a)
    print(f"{a.name:<28} {r.unit_count:>5} {str(r.is_gkz):>5} {str(r.is_vacuous):>8} {r.jac_dim!s:>4}")

# Over GF(2) the only unit of F2^3 is (1,1,1), so many functionals avoid it.
a = gkz.function_algebra(2, 3)
w = gkz.decide_gkz(a).witnesses[0]
d = w.to_dict()
print("\nrefutation for", a.name)
print("  L =", d["functional"], " a =", d["pair"][0], " b =", d["pair"][1])
print("  L(ab) =", d["values"][0], " L(a)L(b) =", d["values"][1])
print("  independently validated:", gkz.validate_witness(a, w).ok)
