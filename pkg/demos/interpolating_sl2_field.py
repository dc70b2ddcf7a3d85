"""
The interpolating sl2 field
===========================

Expand the dominant monomial Y(z)Y(zq^-2) in type A1, look at the three
monomials it produces, and evaluate the middle coefficient exactly.
"""

from wqt import evaluate, limit_t1, expand, parse_monomial, render_monomial, root_data

# Root data for sl2: one node, r_1 = 1.
rd = root_data("A1")

# Start from a product of two variables one q^2-step apart.
fe = expand(rd, parse_monomial("Y[1](q^0 t^0) * Y[1](q^-2 t^0)"))
print("status:", fe.status)

# Monomials come out ordered by height, each with a factored coefficient.
for m in fe.ordered():
    print(f"  height {fe.height(m)}  {render_monomial(m):40s}  {fe.coefficient(m)}")

# The middle coefficient is a genuine rational function of q and t.
middle = fe.ordered()[1]
c = fe.coefficient(middle)
print("value at q=2, t=3:", evaluate(c, 2, 3))

# At t = 1 the coefficient tends to an integer, independent of q.
print("limit at t = 1:", limit_t1(c))
