"""A three-player game, its equilibrium system and the 6x6 discriminant."""

from selim import (BilinearTriple, PayoffTensor, build_tmne_system, discriminant_2x2x2,
                   double_root_instance, solve_2x2x2)

payoffs = PayoffTensor.from_nested((2, 2, 2), [
    [[[0, 2], [4, 2]], [[2, 0], [2, 4]]],
    [[[0, 0], [3, 2]], [[4, 3], [2, 3]]],
    [[[0, 1], [0, 3]], [[0, 1], [4, 2]]],
])
system = build_tmne_system(payoffs)
for player, eq in zip(system.players, system.polynomials):
    print(f"player {player}: {eq} = 0")

t = BilinearTriple.from_payoffs(payoffs)
result = solve_2x2x2(t)
print("eliminant coefficients:", [str(v) for v in result.eliminant])
print("discriminant (6x6 determinant):", discriminant_2x2x2(t))
for root in result.roots:
    # (x1 : x0) is the ratio of the two strategy probabilities
    probs = [u / (u + v) if u + v else None for u, v in (root.x, root.y, root.z)]
    mixed = all(q is not None and 0 < q < 1 for q in probs)
    print("root with first-strategy probabilities",
          ", ".join("inf" if q is None else str(q) for q in probs),
          "(a totally mixed equilibrium)" if mixed else "(outside the simplex)")
if result.algebraic:
    print("two", result.algebraic, "conjugate roots")

# Forcing a singular Jacobian at a chosen point makes the discriminant vanish.
t, point = double_root_instance(seed=2)
print("double root at", tuple(map(str, point)), "-> discriminant", discriminant_2x2x2(t))
print("multiplicities:", [r.multiplicity for r in solve_2x2x2(t).roots])
