"""Three routes to the multihomogeneous Bezout number, and the mixed volume."""

from selim import (ConvexPolygon, SimplexBlockSystem, mbezout_generating_function,
                   mbezout_permanent, mbezout_product, mixed_area_2d, mixed_volume_permanent,
                   tmne_bound)
from selim.bounds import PER_BLOCK, DegreeMatrix

# A semi-mixed system: 2 equations of block degrees (1, 2) and 1 equation of
# degrees (3, 1), over variable blocks of sizes 2 and 1.
a = DegreeMatrix(((1, 2), (3, 1)), PER_BLOCK)
blocks = (2, 1)
print("coefficient of the product of linear forms:", mbezout_product(a, blocks))
print("Taylor coefficient of 1/det(I - VA):       ", mbezout_generating_function(a, blocks))
print("permanent / (n_1! n_2!):                   ", mbezout_permanent(a, blocks))

# Totally mixed Nash equilibria of S players with two strategies each.
print("TMNE bounds:", [tmne_bound(S) for S in range(1, 9)])

# Mixed volume of two boxes (a11 x a12) and (a21 x a22) equals perm(A).
scale = [[1, 2], [3, 1]]
mv = mixed_volume_permanent(SimplexBlockSystem.unit_simplices(scale, (1, 1)))
boxes = [ConvexPolygon.rectangle(w, h) for w, h in scale]
print(f"mixed volume via permanent {mv}, via Minkowski sums {mixed_area_2d(*boxes)}")
