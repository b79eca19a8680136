#include "hensel_solver.hpp"

#include <cmath>

namespace hensel {

Valuation min_valuation(const std::vector<Elem>& v) {
    Valuation m{INT32_MAX, false};
    for (const auto& x : v) {
        Valuation vx = x.valuation();
        if (vx.value < m.value || (vx.value == m.value && vx.exact)) m = vx;
    }
    return m;
}

HenselProblem::HenselProblem(PolyMap f, std::vector<Elem> base_point)
    : f_(std::move(f)), base_(std::move(base_point)) {
    if (!f_.is_square()) raise(errc::non_square, "lifting needs a square system");
    if (base_.empty()) base_.assign(size_t(f_.arity()), Elem::zero(f_.ring()));
    if (base_.size() != size_t(f_.arity()))
        raise(errc::context_mismatch, "base point dimension mismatch");
    for (const auto& b : base_) check_same_ring(f_.ring(), b.ring(), "base point");
    auto residual = f_.eval(base_);
    for (int i = 0; i < f_.coarity(); ++i)
        if (residual[size_t(i)].valuation().value < 1)
            raise(errc::not_in_maximal_ideal,
                  "component " + std::to_string(i + 1) + " of f(base) is a unit (valuation 0); it must lie in the maximal ideal");
    Elem j = det_elem(jacobian_eval(f_, base_));
    if (!j.is_unit())
        raise(errc::jacobian_not_unit,
              "Jacobian determinant at the base point has valuation " + j.valuation().to_string() +
                  "; it must be a unit");
}

HenselProblem::HenselProblem(PolyMap f)
    : HenselProblem(std::move(f), std::vector<Elem>()) {}

namespace {

std::vector<Elem> origin(const RingPtr& ring, int n) {
    return std::vector<Elem>(size_t(n), Elem::zero(ring));
}

} // namespace

bool HenselProblem::based_at_origin() const {
    for (const auto& b : base_)
        if (!b.is_zero_rep()) return false;
    return true;
}

namespace {

// Shared Newton driver: solves f(x) = y starting from x0. The certified
// target precision is the least abs_prec among the components of y; the
// iteration converges once every residual component vanishes to that level.
LiftResult newton_solve(const PolyMap& f, const std::vector<Elem>& x0, const std::vector<Elem>& y) {
    int target_prec = f.ring()->cap();
    for (const auto& yi : y) target_prec = std::min(target_prec, yi.abs_prec());

    int max_steps = int(std::ceil(std::log2(std::max(2, f.ring()->cap())))) + 4;

    LiftResult res;
    res.root = x0;
    auto residual_of = [&](const std::vector<Elem>& x) {
        auto r = f.eval(x);
        for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - y[i];
        return r;
    };

    std::vector<Elem> r = residual_of(res.root);
    res.residual_trace.push_back(min_valuation(r).value);
    auto converged = [&](const std::vector<Elem>& rr) {
        for (const auto& c : rr)
            if (c.valuation().value < target_prec) return false;
        return true;
    };

    while (!converged(r)) {
        if (res.iterations >= max_steps)
            raise(errc::max_iterations_exceeded,
                  "Newton iteration failed to converge in " + std::to_string(max_steps) +
                      " steps; this indicates an internal precision bug");
        auto jac = jacobian_eval(f, res.root);
        Elem d = det_elem(jac);
        auto adj = adjugate_elem(jac);
        // delta = adj * r / det, division by a unit
        for (size_t i = 0; i < res.root.size(); ++i) {
            Elem acc = Elem::zero(f.ring());
            for (size_t j = 0; j < res.root.size(); ++j) acc = acc + adj[i][j] * r[j];
            res.root[i] = res.root[i] - divide_exact(acc, d);
        }
        ++res.iterations;
        r = residual_of(res.root);
        res.residual_trace.push_back(min_valuation(r).value);
    }
    // The solution is a function of y, so it is determined exactly modulo
    // uniformizer^target_prec and no further; clamp uniformly.
    for (auto& xi : res.root)
        if (xi.abs_prec() > target_prec) xi = truncate_prec(xi, target_prec);
    res.residual = min_valuation(r);
    return res;
}

} // namespace

LiftResult hensel_lift(const HenselProblem& prob) {
    return newton_solve(prob.f(), prob.base_point(), origin(prob.f().ring(), prob.f().arity()));
}

LiftResult solve_for_target_traced(const HenselProblem& prob, const std::vector<Elem>& y) {
    if (!prob.based_at_origin())
        raise(errc::bad_request, "solve_for_target needs an origin-based problem");
    if (y.size() != size_t(prob.f().arity()))
        raise(errc::context_mismatch, "target dimension mismatch");
    for (const auto& yi : y) {
        check_same_ring(prob.f().ring(), yi.ring(), "target");
        if (yi.valuation().value < 1)
            raise(errc::target_not_in_ideal,
                  "target component " + yi.to_string() + " is a unit; it must lie in the maximal ideal");
    }
    return newton_solve(prob.f(), origin(prob.f().ring(), prob.f().arity()), y);
}

std::vector<Elem> solve_for_target(const HenselProblem& prob, const std::vector<Elem>& y) {
    return solve_for_target_traced(prob, y).root;
}

bool check_isometry(const HenselProblem& prob, const std::vector<Elem>& x, const std::vector<Elem>& x2) {
    auto fx = prob.f().eval(x);
    auto fx2 = prob.f().eval(x2);
    std::vector<Elem> din, dout;
    for (size_t i = 0; i < x.size(); ++i) {
        din.push_back(x[i] - x2[i]);
        dout.push_back(fx[i] - fx2[i]);
    }
    Valuation vin = min_valuation(din);
    Valuation vout = min_valuation(dout);
    if (!vin.exact || !vout.exact) return false; // cannot certify equality of valuations
    return vin.value == vout.value;
}

} // namespace hensel
