"""Run the structural checks over the built-in corpus and a small random one."""
import gkz

corpus = gkz.builtin_corpus() + gkz.random_corpus(10, seed=1)
report = gkz.theorem_suite(corpus)
for name, s in report.summary().items():
    print(f"{name:<11} pass {s['pass']:>4}  skipped {s['skipped']:>4}  fail {s['fail']:>4}")

notes = [(m.name, t, n) for m in report.members for t, o in m.results.items() for n in o.notes]
print(f"\n{len(notes)} notes, e.g.")
for name, t, n in notes[:3]:
    print(f"  {t} {name}: {n}")
print("failures:", report.failures() or "none")
