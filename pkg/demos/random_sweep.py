"""Sweep random homogeneous instances and tally certificates and verdicts.

Usage: ``python3 demos/random_sweep.py [count] [first_seed]``.
"""

import sys
from collections import Counter

from qcipoincare.harness import generate_instance, run_battery

count = int(sys.argv[1]) if len(sys.argv) > 1 else 20
first = int(sys.argv[2]) if len(sys.argv) > 2 else 0

kinds: Counter = Counter()
verdicts: Counter = Counter()
for seed in range(first, first + count):
    inst = generate_instance("random-homogeneous", seed)
    rep = run_battery(inst, hmax=5, dmax=16, checks=["theorem-B", "large", "inert", "qci"])
    kinds[rep.certificate["verdict"]] += 1
    verdicts.update(r.verdict for r in rep.results)
    flag = "" if rep.exit_code() == 0 else f"  exit {rep.exit_code()}"
    print(f"seed {seed:4d}  {rep.certificate['verdict']:<20} ideal {inst.ideal}{flag}")

print("\ncertificates:", dict(kinds))
print("verdicts:    ", dict(verdicts))
