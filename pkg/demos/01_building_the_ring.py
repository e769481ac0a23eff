"""A tour of the cohomology ring of configuration spaces.

The configuration space F(R^m, n) of n labelled points in R^m has a very
rigid cohomology ring: one generator e_ij of degree m-1 for every pair of
points i < j (think "the class watching points i and j collide"), squares
vanish, and any three points interact through a single three-term relation.
This script builds the ring, straightens products into the canonical basis,
and checks the bookkeeping identities that the rest of the package relies on.

Run:  python demos/01_building_the_ring.py
"""

from tcbounds import AlgebraElement, Presentation, QQ, poincare_table, stability_check

# ---------------------------------------------------------------------------
# three points in the plane: the smallest interesting ring
# ---------------------------------------------------------------------------

pres = Presentation(n=3, m=2)
print(f"{pres}: generators {pres.generators()}, degree {pres.degree}, "
      f"{'anticommuting' if pres.parity else 'commuting'}")

e12 = AlgebraElement.generator(pres, QQ, 1, 2)
e13 = AlgebraElement.generator(pres, QQ, 1, 3)
e23 = AlgebraElement.generator(pres, QQ, 2, 3)

# The product e13*e23 is not a basis monomial (both factors watch point 3);
# straightening rewrites it through the three-term relation.
print("\ne13 * e23  =", e13 * e23)

# The defining relation e12*e13 = (e12 - e13)*e23 holds on the nose:
lhs = e12 * e13
rhs = (e12 - e13) * e23
assert lhs == rhs
print("e12 * e13  =", lhs, "   (equals (e12 - e13) * e23)")

# Squares die, and so does any product of three generators (top degree is 2):
assert (e12 * e12).is_zero()
assert (e12 * e13 * e23).is_zero()
print("e12^2 = 0 and e12*e13*e23 = 0, as they must")

# ---------------------------------------------------------------------------
# how big is the ring?  ranks come from a generating polynomial
# ---------------------------------------------------------------------------

print("\nranks per degree block (coefficients of (1+t)(1+2t)...):")
for n in (2, 3, 4, 5):
    table = poincare_table(n)
    print(f"  n={n}: {table}  (total {sum(table)} = {n}!)")

# ---------------------------------------------------------------------------
# the ring only sees the parity of m
# ---------------------------------------------------------------------------

# For every even m the structure constants coincide with the planar (m=2)
# case after rescaling degrees by m-1; the same happens for odd m against
# m=3.  This is the "stability" that later turns the parity of m into the
# only thing the topological complexity can depend on.
for n in (2, 3, 4):
    assert stability_check(n, 4) and stability_check(n, 6)
print("\nstructure constants for m=4 and m=6 match m=2 for n <= 4")

pres5 = Presentation(n=3, m=5)
a = AlgebraElement.generator(pres5, QQ, 1, 3)
b = AlgebraElement.generator(pres5, QQ, 2, 3)
print(f"same rewrite in degree {pres5.degree}: e13 * e23 =", a * b)
