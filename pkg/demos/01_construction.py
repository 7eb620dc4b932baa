"""
Building the coloring of K_{q^2}
================================

Every vertex is a vector of F_q^2. It gets two colorings: one from the
algebra of the field, one from a bit string that encodes the vector.
An edge's color is the pair.
"""

from ramsey56 import algebraic, cfls
from ramsey56.algebraic import Vector2
from ramsey56.combined import build, choose_beta, color_bound, embed
from ramsey56.field import FieldSpec

# the field with five elements
F = FieldSpec(5)
print(F(3) * F(4), F(1) - F(4))

# two vertices of K_25
x, y = Vector2.of(F, 1, 2), Vector2.of(F, 3, 4)

# the algebraic half: a field value with an equality flag, plus S/T labels
print("chi:", algebraic.chi(x, y).render())

# the bit-string half. beta=3 blocks of 3 bits hold the two 3-bit ranks
beta = choose_beta(5)
bx, by = embed(x, 5, beta), embed(y, 5, beta)
print(bx, by)
print("phi:", cfls.phi(bx, by).render())

# all 300 edges at once, colors interned to dense ids
con = build(5)
print(f"q=5: n={con.n} edges={con.num_edges} colors={con.num_colors} (bound {color_bound(5)})")

# how many colors each factor contributes on its own
for name in ("phi", "chi", "product"):
    print(f"  {name:8s} {con.projection(name).num_colors()} colors")

# the first few entries of the color dictionary
for cid, c in list(enumerate(con.colors))[:3]:
    print(" ", cid, c.render())
