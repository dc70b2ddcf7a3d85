"""
When the expansion fails: D4 from Y2(z)
=======================================

Starting from the central node of D4, the expansion reaches a level that
contains defective monomials and stops there.  The partial table is kept.
"""

from collections import Counter

from wqt import fundamental, render_monomial, root_data

rd = root_data("D4")
print("Cartan matrix of D4 (node 2 is the centre):")
print(rd.cartan)

fe = fundamental(rd, 2)
print("\nstatus:", fe.status)
print("monomials kept:", len(fe))
print("per height:", dict(sorted(Counter(fe.height(m) for m in fe.table).items())))

# Every defective monomial of the failing level is reported.
for w in fe.witnesses:
    print(f"  {', '.join(w.defects):12s} {render_monomial(w.monomial)}")

# Three of the four witnesses differ only by a permutation of the outer nodes 1, 3, 4.
