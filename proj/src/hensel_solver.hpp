#pragma once

#include "poly.hpp"

namespace hensel {

/// A square polynomial system satisfying the lifting hypotheses at its base
/// point: every component of f(base) lies in the maximal ideal and the
/// Jacobian determinant at base is a unit. Both are checked at construction.
class HenselProblem {
public:
    HenselProblem(PolyMap f, std::vector<Elem> base_point);
    explicit HenselProblem(PolyMap f); // based at the origin

    const PolyMap& f() const { return f_; }
    const std::vector<Elem>& base_point() const { return base_; }
    bool based_at_origin() const;

private:
    PolyMap f_;
    std::vector<Elem> base_;
};

struct LiftResult {
    std::vector<Elem> root;
    int iterations = 0;
    Valuation residual;              // certified lower bound, >= target precision
    std::vector<int> residual_trace; // min valuation bound after each step, starting at the base point
};

// The unique root x with x - base in m^n and f(x) = 0 at full cap precision.
// Newton steps x <- x - adjugate(M(x)) * f(x) / det(M(x)); the determinant is
// a unit, so no precision is lost and the residual valuation at least doubles
// per step (capped at the certified precision).
LiftResult hensel_lift(const HenselProblem& prob);

// The unique x in m^n with f(x) = y, for y in m^n; the solve-for-target form
// of the same iteration. Requires an origin-based problem.
std::vector<Elem> solve_for_target(const HenselProblem& prob, const std::vector<Elem>& y);
LiftResult solve_for_target_traced(const HenselProblem& prob, const std::vector<Elem>& y);

// Does f preserve the min-valuation of differences at x, x'? (Test utility
// backing the homeomorphism facts; true whenever the hypotheses hold.)
bool check_isometry(const HenselProblem& prob, const std::vector<Elem>& x, const std::vector<Elem>& x2);

// Component-wise minimum of valuation lower bounds.
Valuation min_valuation(const std::vector<Elem>& v);

} // namespace hensel
