"""
Cross-check battery
===================

Runs the same checks as ``threespin verify``: closed forms against numerics,
symmetries, and the dip laws on scanned data.
"""
from threespin.verify import run_all

results = run_all(trials=50, seed=7)
width = max(len(r.name) for r in results)
for r in results:
    print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
print(f"\n{sum(r.passed for r in results)}/{len(results)} checks passed")
