"""Implicit equations of parametric curves from an interpolation matrix."""

from selim import (ParametricPlaneCurve, build_interpolation_matrix, compose_with_curve,
                   default_sample_count, implicit_equation, membership_test, predict_support)

curves = {
    "parabola (t, t^2)": ([0, 1], [0, 0, 1]),
    "cusp (t^2, t^3)": ([0, 0, 1], [0, 0, 0, 1]),
    "nodal cubic (t^2 - 1, t^3 - t)": ([-1, 0, 1], [0, -1, 0, 1]),
}
for name, (xs, ys) in curves.items():
    c = ParametricPlaneCurve.from_coeffs(xs, ys)
    p = implicit_equation(c)
    print(f"{name}: {p} = 0, composes to {compose_with_curve(p, c)}")

cusp = ParametricPlaneCurve.from_coeffs([0, 0, 1], [0, 0, 0, 1])
support = predict_support(cusp)
m = build_interpolation_matrix(cusp, support, default_sample_count(cusp, support))
print("support:", list(support))
print("rank", m.rank, "of", len(support), "columns")
for point in [(4, 8), (4, -8), (4, 7), (0, 0)]:
    print(point, "on curve" if membership_test(m, point) else "off curve")
