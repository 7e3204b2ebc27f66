"""Run every verification suite for a few ranks and summarise the reports."""

import sys

from chw import run_all

ok = True
for n in (3, 4):
    for rep in run_all(n, seed=0):
        print(rep.summary())
        for note in rep.notes:
            print("    note:", note)
        ok &= rep.ok
sys.exit(0 if ok else 1)
