"""The two infinite-dimensional counterexamples, checked with exact arithmetic."""
import gkz

for label, w in (
    ("Laurent polynomials over Q", gkz.laurent_counterexample(2)),
    ("Laurent polynomials over GF(5)", gkz.laurent_counterexample(2, modulus=5)),
    ("point masses on Q", gkz.dirac_counterexample()),
):
    lhs, rhs = w.values
    check = w.validate()
    print(label)
    print(f"  rule: {w.rule}")
    print(f"  L(a*a) = {lhs}, L(a)^2 = {rhs}")
    print(f"  nonzero on units: {w.weight_argument}")
    print(f"  {len(w.sample_units)} sampled units, valid refutation: {check.ok}\n")
