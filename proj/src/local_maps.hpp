#pragma once

#include "hensel_solver.hpp"

namespace hensel {

/// Everything the scaled inverse needs, precomputed at the origin: the
/// Jacobian matrix M0 and its determinant e (exact, nonzero), the adjugate
/// Nadj with Nadj*M0 = e*I, the quadratic-or-higher remainder g of the
/// scaling decomposition, and h = X + Nadj*g whose Jacobian at 0 is the
/// identity.
struct LocalChart {
    PolyMap f;
    ScalarMatrix m0;
    Scalar e;
    int ve = 0; // valuation of e
    ScalarMatrix nadj;
    PolyMap g;
    PolyMap h;
};

LocalChart make_chart(const PolyMap& f);

// x = e * h^-1(Nadj * y / e^2) with f(x) = y, for y in e^2*m^n. The result's
// certified absolute precision is cap - v(e); h^-1 is evaluated pointwise by
// the Newton solver, never constructed symbolically.
std::vector<Elem> inverse_eval(const LocalChart& chart, const std::vector<Elem>& y);

/// Implicit system p(X) = 0 with the last n-r variables solved for: the
/// augmented map f = (X_1..X_r, p) has Jacobian determinant e at the origin.
struct ImplicitSystem {
    PolyMap p;
    int r = 0;
    LocalChart chart; // of the augmented map
};

ImplicitSystem make_implicit(const PolyMap& p, int r);

// phi(u) with p(u, phi(u)) = 0 and phi(0) = 0, for u with every component in
// e^2*m. Returns the n-r solved coordinates at certified precision cap - v(e).
std::vector<Elem> implicit_eval(const ImplicitSystem& sys, const std::vector<Elem>& u);

} // namespace hensel
