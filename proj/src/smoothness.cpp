#include "smoothness.hpp"

#include <algorithm>

namespace hensel {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Smooth: return "smooth";
        case Verdict::NotSmooth: return "not smooth";
        case Verdict::RankExceedsCodim: return "rank exceeds codimension";
    }
    return "?";
}

std::vector<Scalar> variety_point(const VarietySpec& spec) {
    const auto& ring = spec.generators.at(0).ring();
    int n = spec.generators[0].nvars();
    if (spec.point.empty()) return std::vector<Scalar>(size_t(n), Scalar(ring));
    return spec.point;
}

namespace {

void validate(const VarietySpec& spec) {
    if (spec.generators.empty()) raise(errc::bad_request, "variety needs at least one generator");
    int n = spec.generators[0].nvars();
    if (spec.claimed_dim < 0 || spec.claimed_dim >= n)
        raise(errc::bad_request, "claimed dimension must satisfy 0 <= r < n");
    auto pt = variety_point(spec);
    if (int(pt.size()) != n) raise(errc::bad_request, "point dimension mismatch");
    for (size_t i = 0; i < spec.generators.size(); ++i) {
        Scalar v = spec.generators[i].eval_exact(pt);
        if (!v.is_zero())
            raise(errc::point_not_on_variety, "generator " + std::to_string(i + 1) + " evaluates to " +
                                                  v.to_string() + " at the point; expected 0");
    }
}

ScalarMatrix jacobian_of_gens(const VarietySpec& spec) {
    auto pt = variety_point(spec);
    PolyMap map(spec.generators[0].ring(), spec.generators[0].vars(), spec.generators);
    return jacobian_at(map, pt);
}

// all k-subsets of {0..m-1}, lexicographic
std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[size_t(i)] = i;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > m) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[size_t(i)] == m - k + i) --i;
        if (i < 0) break;
        ++cur[size_t(i)];
        for (int j = i + 1; j < k; ++j) cur[size_t(j)] = cur[size_t(j - 1)] + 1;
    }
    return out;
}

} // namespace

SmoothnessReport smooth_check(const VarietySpec& spec) {
    validate(spec);
    int n = spec.generators[0].nvars();
    SmoothnessReport report;
    report.jacobian_rank = rank(jacobian_of_gens(spec));
    int codim = n - spec.claimed_dim;
    if (report.jacobian_rank == codim)
        report.verdict = Verdict::Smooth;
    else if (report.jacobian_rank < codim)
        report.verdict = Verdict::NotSmooth;
    else
        report.verdict = Verdict::RankExceedsCodim;
    if (report.verdict == Verdict::Smooth) report.pivot = select_pivot(spec, report);
    return report;
}

PivotSplit select_pivot(const VarietySpec& spec, const SmoothnessReport& report) {
    if (report.verdict != Verdict::Smooth)
        raise(errc::bad_request, "pivot selection needs a smooth verdict");
    int n = spec.generators[0].nvars();
    int s = int(spec.generators.size());
    int k = n - spec.claimed_dim;
    ScalarMatrix jac = jacobian_of_gens(spec);

    std::optional<PivotSplit> best;
    for (const auto& rows : subsets(s, k)) {
        for (const auto& cols : subsets(n, k)) {
            Scalar d = det(jac.submatrix(rows, cols));
            if (d.is_zero()) continue;
            int v = *d.valuation();
            if (!best || v < best->minor_valuation) {
                PivotSplit ps;
                ps.generator_rows = rows;
                ps.pivot_cols = cols;
                ps.minor_det = d;
                ps.minor_valuation = v;
                best = std::move(ps);
            }
        }
    }
    if (!best) raise(errc::no_pivot_found, "no nonsingular minor found despite smooth verdict");

    best->var_order.clear();
    for (int j = 0; j < n; ++j)
        if (std::find(best->pivot_cols.begin(), best->pivot_cols.end(), j) == best->pivot_cols.end())
            best->var_order.push_back(j);
    best->var_order.insert(best->var_order.end(), best->pivot_cols.begin(), best->pivot_cols.end());
    return *best;
}

ImplicitSystem implicit_from_pivot(const VarietySpec& spec, const PivotSplit& pivot) {
    const auto& ring = spec.generators[0].ring();
    const auto& old_vars = spec.generators[0].vars();
    auto pt = variety_point(spec);

    auto new_vars = std::make_shared<std::vector<std::string>>();
    for (int j : pivot.var_order) new_vars->push_back((*old_vars)[size_t(j)]);

    std::vector<MultiPoly> comps;
    for (int i : pivot.generator_rows)
        comps.push_back(spec.generators[size_t(i)].shifted(pt).with_var_order(pivot.var_order, new_vars));
    PolyMap p(ring, new_vars, std::move(comps));
    return make_implicit(p, spec.claimed_dim);
}

} // namespace hensel
