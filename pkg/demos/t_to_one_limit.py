"""
The t -> 1 limit
================

Specializing t to 1 turns a field into a q-character-style sum.  For the
fundamental fields every coefficient becomes 1 and the weights are those of
a representation; for other starts the limit can carry multiplicities.
"""

from wqt import expand, fundamental, parse_monomial, root_data, specialize_t1, weight_multiset

# The spinor field of B2: four terms with the weights of the spinor representation.
qc = specialize_t1(fundamental(root_data("B2"), 2))
print(qc.render())
for w, k in sorted(weight_multiset(qc).items(), reverse=True):
    print("  weight", w, "multiplicity", k)

# A three-variable sl2 field: one of the limits equals 2.
fe = expand(root_data("A1"), parse_monomial("Y[1](q^0 t^0) Y[1](q^-2 t^0) Y[1](q^0 t^2)"))
qc = specialize_t1(fe)
print()
print(qc.render())
