#include "local_maps.hpp"

namespace hensel {

LocalChart make_chart(const PolyMap& f) {
    if (!f.is_square()) raise(errc::non_square, "make_chart needs a square map");
    if (!f.vanishes_at_origin())
        raise(errc::constant_term_present, "make_chart: map must vanish at the origin");
    LocalChart chart;
    chart.f = f;
    chart.m0 = jacobian_at_origin(f);
    chart.e = det(chart.m0);
    if (chart.e.is_zero()) raise(errc::zero_jacobian_det, "make_chart: Jacobian determinant at 0 is zero");
    chart.ve = *chart.e.valuation();
    chart.nadj = adjugate(chart.m0);
    ScalarMatrix scaled_id = ScalarMatrix::identity(f.ring(), f.arity());
    for (int i = 0; i < f.arity(); ++i) scaled_id.at(i, i) = chart.e;
    if (!(chart.nadj * chart.m0 == scaled_id))
        raise(errc::internal_error, "make_chart: adjugate identity N*M = e*I failed");
    chart.g = extract_g(f, chart.e);
    chart.h = build_h(chart.g, chart.nadj);
    return chart;
}

namespace {

// y must lie in e^2 * m^n, certified: valuation(y_i) >= 2*v(e) + 1.
void check_domain(const LocalChart& chart, const std::vector<Elem>& y) {
    int cap = chart.f.ring()->cap();
    if (cap - 2 * chart.ve <= 0)
        raise(errc::precision_exhausted,
              "certified precision cap - 2*v(e) = " + std::to_string(cap - 2 * chart.ve) +
                  " is not positive (v(e) = " + std::to_string(chart.ve) + ")");
    for (const auto& yi : y) {
        check_same_ring(chart.f.ring(), yi.ring(), "inverse_eval");
        if (yi.valuation().value < 2 * chart.ve + 1)
            raise(errc::target_outside_domain,
                  "component " + yi.to_string() + " has certified valuation " + yi.valuation().to_string() +
                      " < 2*v(e)+1 = " + std::to_string(2 * chart.ve + 1));
    }
}

std::vector<Elem> scaled_inverse(const LocalChart& chart, const std::vector<Elem>& y) {
    Elem e2_elem = Elem::from_scalar(chart.e * chart.e);
    std::vector<Elem> b;
    b.reserve(y.size());
    for (const auto& yi : y) b.push_back(divide_exact(yi, e2_elem));
    std::vector<Elem> target = mat_vec(chart.nadj, b);
    HenselProblem prob(chart.h);
    std::vector<Elem> x = solve_for_target(prob, target);
    Elem e_elem = Elem::from_scalar(chart.e);
    for (auto& xi : x) xi = xi * e_elem;
    return x;
}

} // namespace

std::vector<Elem> inverse_eval(const LocalChart& chart, const std::vector<Elem>& y) {
    if (y.size() != size_t(chart.f.arity())) raise(errc::context_mismatch, "inverse_eval: dimension mismatch");
    check_domain(chart, y);
    return scaled_inverse(chart, y);
}

ImplicitSystem make_implicit(const PolyMap& p, int r) {
    int n = p.arity();
    if (r < 0 || r >= n) raise(errc::bad_request, "implicit split r must satisfy 0 <= r < n");
    if (p.coarity() != n - r)
        raise(errc::bad_request, "implicit system needs n - r = " + std::to_string(n - r) + " polynomials, got " +
                                     std::to_string(p.coarity()));
    if (!p.vanishes_at_origin())
        raise(errc::constant_term_present, "implicit system: the origin must lie in the zero locus");

    std::vector<MultiPoly> comps;
    for (int i = 0; i < r; ++i) comps.push_back(MultiPoly::variable(p.ring(), p.vars(), i));
    for (const auto& c : p.components()) comps.push_back(c);
    PolyMap augmented(p.ring(), p.vars(), std::move(comps));

    ImplicitSystem sys;
    sys.p = p;
    sys.r = r;
    sys.chart = make_chart(augmented);

    // The augmented determinant must agree with the (n-r)x(n-r) minor
    // d(p)/d(X_{r+1}..X_n) at 0; asserted, not re-derived.
    std::vector<int> idx;
    for (int j = r; j < n; ++j) idx.push_back(j);
    std::vector<int> rows;
    for (int i = 0; i < n - r; ++i) rows.push_back(i);
    Scalar minor = det(jacobian_at_origin(p).submatrix(rows, idx));
    if (minor != sys.chart.e) raise(errc::internal_error, "implicit system: block determinant mismatch");
    return sys;
}

std::vector<Elem> implicit_eval(const ImplicitSystem& sys, const std::vector<Elem>& u) {
    if (u.size() != size_t(sys.r)) raise(errc::context_mismatch, "implicit_eval: expected r parameters");
    int n = sys.p.arity();
    std::vector<Elem> y;
    y.reserve(size_t(n));
    for (const auto& ui : u) y.push_back(ui);
    for (int i = sys.r; i < n; ++i) y.push_back(Elem::zero(sys.p.ring()));
    check_domain(sys.chart, y);
    std::vector<Elem> x = scaled_inverse(sys.chart, y);
    return std::vector<Elem>(x.begin() + sys.r, x.end());
}

} // namespace hensel
