#include "commands.hpp"

#include <sstream>

namespace hensel {

namespace {

void need_role(const SystemSpec& spec, Role role, const char* cmd) {
    if (spec.role == role) return;
    const char* names[] = {"square", "implicit", "variety"};
    raise(errc::bad_request, std::string(cmd) + " needs a " + names[int(role)] + " system, but the file declares " +
                                 names[int(spec.role)]);
}

VarietySpec variety_of(const SystemSpec& spec) {
    VarietySpec v;
    v.generators = spec.polys;
    v.point = spec.point;
    v.claimed_dim = spec.role_index;
    return v;
}

} // namespace

std::string run_lift(const SystemSpec& spec) {
    need_role(spec, Role::Square, "lift");
    HenselProblem prob(spec.as_map(), spec.base_elems());
    LiftResult res = hensel_lift(prob);
    std::ostringstream os;
    os << "root = " << render_vector(res.root) << " (iterations " << res.iterations << ", residual "
       << res.residual.to_string() << ")";
    return os.str();
}

std::string run_solve(const SystemSpec& spec, const std::string& target_csv) {
    need_role(spec, Role::Square, "solve");
    for (const auto& c : spec.point)
        if (!c.is_zero()) raise(errc::bad_request, "solve needs an origin-based system; remove the point");
    auto y = parse_element_vector(target_csv, spec.ring);
    if (y.size() != spec.vars->size())
        raise(errc::bad_request, "target has " + std::to_string(y.size()) + " components, expected " +
                                     std::to_string(spec.vars->size()));
    HenselProblem prob(spec.as_map());
    LiftResult res = solve_for_target_traced(prob, y);
    std::ostringstream os;
    os << "x = " << render_vector(res.root) << " (iterations " << res.iterations << ", residual "
       << res.residual.to_string() << ")";
    return os.str();
}

std::string run_invert(const SystemSpec& spec, const std::string& target_csv) {
    need_role(spec, Role::Square, "invert");
    for (const auto& c : spec.point)
        if (!c.is_zero()) raise(errc::bad_request, "invert charts are origin-based; remove the point");
    auto y = parse_element_vector(target_csv, spec.ring);
    if (y.size() != spec.vars->size())
        raise(errc::bad_request, "target has " + std::to_string(y.size()) + " components, expected " +
                                     std::to_string(spec.vars->size()));
    LocalChart chart = make_chart(spec.as_map());
    auto x = inverse_eval(chart, y);
    std::ostringstream os;
    os << "x = " << render_vector(x) << " (e = " << chart.e.to_string() << ", v(e) = " << chart.ve << ")";
    return os.str();
}

std::string run_implicit(const SystemSpec& spec, const std::string& params_csv) {
    need_role(spec, Role::Implicit, "implicit");
    auto u = parse_element_vector(params_csv, spec.ring);
    if (u.size() != size_t(spec.role_index))
        raise(errc::bad_request, "expected r = " + std::to_string(spec.role_index) + " parameters, got " +
                                     std::to_string(u.size()));
    ImplicitSystem sys = make_implicit(spec.as_map(), spec.role_index);
    auto phi = implicit_eval(sys, u);
    std::ostringstream os;
    os << "phi = " << render_vector(phi);
    return os.str();
}

std::string run_smooth(const SystemSpec& spec) {
    need_role(spec, Role::Variety, "smooth");
    VarietySpec variety = variety_of(spec);
    SmoothnessReport report = smooth_check(variety);
    int codim = int(spec.vars->size()) - spec.role_index;
    std::ostringstream os;
    switch (report.verdict) {
        case Verdict::NotSmooth:
            os << "rank " << report.jacobian_rank << ", NOT smooth at point (expected codim " << codim << ")";
            break;
        case Verdict::RankExceedsCodim:
            os << "rank " << report.jacobian_rank << ", rank exceeds expected codim " << codim << " (claimed dim "
               << spec.role_index << " is inconsistent)";
            break;
        case Verdict::Smooth: {
            const PivotSplit& pivot = *report.pivot;
            os << "rank " << report.jacobian_rank << ", smooth at point (codim " << codim << ")\n";
            os << "pivot generators {";
            for (size_t i = 0; i < pivot.generator_rows.size(); ++i) {
                if (i) os << ", ";
                os << spec.poly_names[size_t(pivot.generator_rows[i])];
            }
            os << "}, variables {";
            for (size_t i = 0; i < pivot.pivot_cols.size(); ++i) {
                if (i) os << ", ";
                os << (*spec.vars)[size_t(pivot.pivot_cols[i])];
            }
            os << "}\n";
            os << "e = " << pivot.minor_det.to_string() << ", v(e) = " << pivot.minor_valuation << "\n";
            os << "variable order:";
            for (int j : pivot.var_order) os << " " << (*spec.vars)[size_t(j)];
            break;
        }
    }
    return os.str();
}

std::string run_sample(const SystemSpec& spec, int count, int level, const std::string* avoid_expr) {
    need_role(spec, Role::Variety, "sample");
    DensityRequest req;
    req.spec = variety_of(spec);
    req.count = count;
    req.level = level;
    if (avoid_expr)
        req.avoid = parse_poly(*avoid_expr, spec.ring, spec.vars);
    else
        req.avoid = spec.avoid;
    DensityReport report = density_sample(req);

    std::ostringstream os;
    os << "certified precision " << report.certified_precision << "\n";
    for (size_t i = 0; i < report.points.size(); ++i) {
        const auto& pt = report.points[i];
        os << "point " << (i + 1) << ": " << render_vector(pt.coords);
        os << " | displacement valuation " << pt.displacement_valuation;
        os << " | generator valuations [";
        for (size_t k = 0; k < pt.generator_values.size(); ++k) {
            if (k) os << ", ";
            os << pt.generator_values[k].to_string();
        }
        os << "]";
        if (pt.avoid_valuation) os << " | avoid valuation " << pt.avoid_valuation->to_string();
        os << "\n";
    }
    std::string s = os.str();
    s.pop_back(); // callers append the final newline
    return s;
}

} // namespace hensel
