"""Classify random 2-dimensional unital algebras over GF(2) and GF(3)."""
from gkz.search import CLASS_FIELDS, census

for p in (2, 3):
    c = census(p, 2, 4000, seed=1)
    print(f"p={p}:", c.counts())
    print("  " + " | ".join(CLASS_FIELDS + ("count",)))
    for row in c.classes():
        print("  " + " | ".join(str(v) for v in row["class"] + [row["count"]]))
