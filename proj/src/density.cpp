#include "density.hpp"

namespace hensel {

namespace {

// counter digits in base p, index 0 most significant: lexicographic order
// over residue vectors as the counter increments
std::vector<int64_t> counter_digits(uint64_t counter, int64_t p, int r) {
    std::vector<int64_t> c(size_t(r), 0);
    for (int i = r - 1; i >= 0; --i) {
        c[size_t(i)] = int64_t(counter % uint64_t(p));
        counter /= uint64_t(p);
    }
    return c;
}

// saturates far above any search budget instead of wrapping
uint64_t pow_u64(int64_t p, int r) {
    uint64_t v = 1;
    for (int i = 0; i < r; ++i) {
        if (v > (uint64_t(1) << 62) / uint64_t(p)) return uint64_t(1) << 62;
        v *= uint64_t(p);
    }
    return v;
}

} // namespace

DensityReport density_sample(const DensityRequest& req) {
    if (req.count < 1) raise(errc::bad_request, "count must be >= 1");
    if (req.level < 1) raise(errc::bad_request, "closeness level must be >= 1");

    SmoothnessReport sr = smooth_check(req.spec);
    if (sr.verdict != Verdict::Smooth)
        raise(errc::bad_request,
              "density sampling needs a smooth point; verdict is '" + verdict_name(sr.verdict) + "' (rank " +
                  std::to_string(sr.jacobian_rank) + ")");
    ImplicitSystem sys = implicit_from_pivot(req.spec, *sr.pivot);

    const RingPtr& ring = sys.p.ring();
    int cap = ring->cap();
    int ve = sys.chart.ve;
    if (req.level + 2 * ve > cap)
        raise(errc::precision_exhausted, "level + 2*v(e) = " + std::to_string(req.level + 2 * ve) +
                                             " exceeds the precision cap " + std::to_string(cap));

    DensityReport report;
    report.certified_precision = cap - ve;

    int n = sys.p.arity();
    int r = sys.r;
    auto base = variety_point(req.spec);
    const auto& var_order = sr.pivot->var_order;

    Scalar uniformizer = ring->backend() == Backend::PAdic ? Scalar(ring, ring->p())
                                                           : Scalar(ring, std::vector<int64_t>{0, 1});

    int64_t budget = int64_t(req.budget_factor) * req.count;
    int j0 = std::max(req.level, 2 * ve + 1);
    int jmax = cap - ve - 1;

    auto give_up = [&]() {
        raise(errc::avoidance_exhausted,
              "search budget exhausted: found " + std::to_string(report.points.size()) + " of " +
                  std::to_string(req.count) + " certified points after " +
                  std::to_string(report.candidates_tried) + " candidates");
    };

    if (r == 0) jmax = j0; // single candidate: the base point itself

    for (int j = j0; j <= jmax && int(report.points.size()) < req.count; ++j) {
        uint64_t ncands = r == 0 ? 1 : pow_u64(ring->p(), r);
        for (uint64_t counter = r == 0 ? 0 : 1; counter < ncands; ++counter) {
            if (int(report.points.size()) >= req.count) break;
            if (report.candidates_tried >= budget) give_up();
            ++report.candidates_tried;

            auto digits = counter_digits(counter, ring->p(), r);
            std::vector<Elem> u;
            u.reserve(size_t(r));
            Scalar scale = uniformizer.pow(unsigned(j));
            for (int i = 0; i < r; ++i)
                u.push_back(Elem::from_scalar(scale * Scalar(ring, digits[size_t(i)])));

            std::vector<Elem> phi = implicit_eval(sys, u);

            // graph point back in the original variable order
            std::vector<Elem> displacement(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k) {
                const Elem& value = k < r ? u[size_t(k)] : phi[size_t(k - r)];
                displacement[size_t(var_order[size_t(k)])] = value;
            }
            int disp_val = min_valuation(displacement).value;
            if (r > 0 && disp_val < req.level) continue; // phi dipped below the requested level

            std::vector<Elem> coords(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k)
                coords[size_t(k)] = displacement[size_t(k)] + Elem::from_scalar(base[size_t(k)]);

            // re-check every generator directly
            DensityPoint pt;
            pt.coords = coords;
            pt.displacement_valuation = disp_val;
            bool ok = true;
            for (const auto& gen : req.spec.generators) {
                Valuation gv = gen.eval(coords).valuation();
                if (gv.value < report.certified_precision) {
                    ok = false;
                    break;
                }
                pt.generator_values.push_back(gv);
            }
            if (!ok) continue;

            if (req.avoid) {
                Valuation qv = req.avoid->eval(coords).valuation();
                if (!qv.exact) continue; // cannot certify q != 0 here
                pt.avoid_valuation = qv;
            }
            report.points.push_back(std::move(pt));
        }
        if (r == 0) break;
    }
    if (int(report.points.size()) < req.count) give_up();
    return report;
}

} // namespace hensel
