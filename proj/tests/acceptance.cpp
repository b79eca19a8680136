// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 drives the installed CLI binary; pass its location
// with --cli and the golden-file directory with --data.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace testsupport;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int g_failures = 0;

void report(int id, const std::string& name, const Outcome& outcome) {
    if (outcome.pass) {
        std::cout << "[PASS] criterion " << id << ": " << name << "\n";
    } else {
        ++g_failures;
        std::cout << "[FAIL] criterion " << id << ": " << name << " -- " << outcome.detail << "\n";
    }
}

// deterministic admissible parameter: uniformizer^level * k
Elem scaled_param(const RingPtr& ring, int level, int64_t k) {
    if (ring->backend() == Backend::PAdic) {
        BigInt v = k;
        for (int i = 0; i < level; ++i) v *= ring->p();
        return Elem::from_scalar(Scalar(ring, v));
    }
    std::vector<int64_t> coeffs(static_cast<size_t>(level), 0);
    while (k > 0) {
        coeffs.push_back(k % ring->p());
        k /= ring->p();
    }
    return Elem::from_scalar(Scalar(ring, coeffs));
}

bool elems_equal_i64(const Elem& e, int64_t expected) { return e.rep() == expected; }

// ---------- criteria 1 and 3 (shared run, also reused by criterion 9) ----------

struct UniquenessStats {
    Outcome uniqueness;
    Outcome convergence;
    int systems = 0;
};

UniquenessStats run_uniqueness_suite(Backend backend, const std::vector<int64_t>& primes, int per_cell,
                                     uint64_t seed) {
    UniquenessStats stats;
    for (int64_t p : primes) {
        for (int cap : {2, 3}) {
            for (int n : {1, 2}) {
                auto ring = make_ring(backend, p, cap);
                std::mt19937_64 rng(seed + uint64_t(p * 100 + cap * 10 + n));
                int64_t modulus = ipow(p, cap);
                auto padic_points =
                    backend == Backend::PAdic ? enumerate_m_padic(p, cap, n) : std::vector<std::vector<int64_t>>{};
                auto series_points = backend == Backend::TruncatedSeries ? enumerate_m_series(p, cap, n)
                                                                         : std::vector<std::vector<SeriesRes>>{};
                for (int trial = 0; trial < per_cell; ++trial) {
                    PolyMap f = random_admissible_system(ring, n, 3, rng);
                    ++stats.systems;
                    LiftResult res;
                    try {
                        res = hensel_lift(HenselProblem(f));
                    } catch (const Error& e) {
                        stats.uniqueness.fail("solver raised: " + std::string(e.what()));
                        continue;
                    }

                    int root_count = 0;
                    bool root_matches = false;
                    if (backend == Backend::PAdic) {
                        std::vector<NaivePoly> nf;
                        for (const auto& c : f.components()) nf.push_back(naive_of(c, modulus));
                        for (const auto& x : padic_points) {
                            bool is_root = true;
                            for (const auto& c : nf)
                                if (naive_eval(c, x, modulus) != 0) {
                                    is_root = false;
                                    break;
                                }
                            if (!is_root) continue;
                            ++root_count;
                            bool same = true;
                            for (int i = 0; i < n; ++i)
                                if (i64_of_elem(res.root[size_t(i)]) != x[size_t(i)]) same = false;
                            root_matches = root_matches || same;
                        }
                    } else {
                        std::vector<NaiveSeriesPoly> nf;
                        for (const auto& c : f.components()) nf.push_back(naive_series_of(c, p, cap));
                        for (const auto& x : series_points) {
                            bool is_root = true;
                            for (const auto& c : nf)
                                if (!s_is_zero(naive_series_eval(c, x, p, cap))) {
                                    is_root = false;
                                    break;
                                }
                            if (!is_root) continue;
                            ++root_count;
                            bool same = true;
                            for (int i = 0; i < n; ++i)
                                if (series_of_elem(res.root[size_t(i)], cap) != x[size_t(i)]) same = false;
                            root_matches = root_matches || same;
                        }
                    }
                    if (root_count != 1)
                        stats.uniqueness.fail("p=" + std::to_string(p) + " cap=" + std::to_string(cap) +
                                              " n=" + std::to_string(n) + ": exhaustive search found " +
                                              std::to_string(root_count) + " roots");
                    else if (!root_matches)
                        stats.uniqueness.fail("p=" + std::to_string(p) + ": solver root differs from the oracle");

                    // criterion 3 on this trace
                    for (size_t k = 0; k + 1 < res.residual_trace.size(); ++k)
                        if (res.residual_trace[k + 1] < std::min(2 * res.residual_trace[k], cap))
                            stats.convergence.fail("trace " + std::to_string(res.residual_trace[k]) + " -> " +
                                                   std::to_string(res.residual_trace[k + 1]) + " at cap " +
                                                   std::to_string(cap));
                    int max_iter = int(std::ceil(std::log2(double(cap)))) + 1;
                    if (res.iterations > max_iter)
                        stats.convergence.fail("iterations " + std::to_string(res.iterations) + " > " +
                                               std::to_string(max_iter));
                }
            }
        }
    }
    return stats;
}

// ---------- criterion 4 (also reused by criterion 9) ----------

Outcome run_bijection_isometry_suite(Backend backend, int64_t p, int cap, uint64_t seed) {
    Outcome outcome;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        int n = trial % 2 == 0 ? 1 : 2;
        auto ring = make_ring(backend, p, cap);
        PolyMap f = random_admissible_system(ring, n, 3, rng);
        HenselProblem prob(f);

        // (a) exhaustive permutation of the finite level
        if (backend == Backend::PAdic) {
            int64_t modulus = ipow(p, cap);
            std::vector<NaivePoly> nf;
            for (const auto& c : f.components()) nf.push_back(naive_of(c, modulus));
            std::set<std::vector<int64_t>> images;
            auto points = enumerate_m_padic(p, cap, n);
            for (const auto& x : points) {
                std::vector<int64_t> y;
                for (const auto& c : nf) y.push_back(naive_eval(c, x, modulus));
                for (int64_t v : y)
                    if (v % p != 0) outcome.fail("image left the maximal ideal");
                images.insert(y);
            }
            if (images.size() != points.size()) outcome.fail("finite-level map is not a bijection");
        } else {
            std::vector<NaiveSeriesPoly> nf;
            for (const auto& c : f.components()) nf.push_back(naive_series_of(c, p, cap));
            std::set<std::vector<SeriesRes>> images;
            auto points = enumerate_m_series(p, cap, n);
            for (const auto& x : points) {
                std::vector<SeriesRes> y;
                for (const auto& c : nf) y.push_back(naive_series_eval(c, x, p, cap));
                for (const auto& v : y)
                    if (v[0] != 0) outcome.fail("image left the maximal ideal");
                images.insert(y);
            }
            if (images.size() != points.size()) outcome.fail("finite-level map is not a bijection");
        }

        // (b) isometry on all pairs of 30 random points (identical pairs are
        // skipped; distinctness at cap precision is a precondition)
        std::vector<std::vector<Elem>> pts;
        std::uniform_int_distribution<int64_t> dist(0, ipow(p, cap - 1) - 1);
        while (pts.size() < 30) {
            std::vector<Elem> x;
            for (int i = 0; i < n; ++i)
                x.push_back(backend == Backend::PAdic ? Elem::from_int(ring, p * dist(rng))
                                                      : scaled_param(ring, 1, dist(rng)));
            pts.push_back(x);
        }
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                bool identical = true;
                for (int k = 0; k < n; ++k)
                    if (!(pts[i][size_t(k)] == pts[j][size_t(k)])) identical = false;
                if (identical) continue;
                if (!check_isometry(prob, pts[i], pts[j])) outcome.fail("isometry violated");
            }
    }
    return outcome;
}

// ---------- criterion 6 (also reused by criterion 9) ----------

Outcome run_implicit_suite(Backend backend, int64_t p, uint64_t /*seed*/) {
    Outcome outcome;
    std::string uni = backend == Backend::PAdic ? std::to_string(p) : "t";

    struct Case {
        int cap;
        int r;
        std::vector<std::string> vars;
        std::vector<std::string> gens;
    };
    std::vector<Case> corpus{
        {6, 1, {"X", "Y"}, {"Y + X^2 + Y^2"}},
        {8, 1, {"X", "Y", "Z"}, {"Y - X^2", "Z - X^3"}},
        {8, 1, {"X", "Y"}, {uni + "*Y + X^2"}},
        {6, 2, {"X", "Y", "Z"}, {"Z + X*Y + Z^2"}},
        {6, 1, {"X", "Y"}, {"Y - X^2 - X^3"}},
    };

    for (const auto& item : corpus) {
        auto ring = make_ring(backend, p, item.cap);
        auto vars = mkvars(item.vars);
        std::vector<MultiPoly> gens;
        for (const auto& g : item.gens) gens.push_back(P(ring, vars, g));
        ImplicitSystem sys;
        try {
            sys = make_implicit(PolyMap(ring, vars, gens), item.r);
        } catch (const Error& e) {
            outcome.fail("make_implicit: " + std::string(e.what()));
            continue;
        }
        int certified = item.cap - sys.chart.ve;
        int threshold = 2 * sys.chart.ve + 1;

        // phi(0) = 0 exactly
        std::vector<Elem> zero(size_t(item.r), Elem::zero(ring));
        for (const auto& c : implicit_eval(sys, zero))
            if (!c.is_zero_rep()) outcome.fail("phi(0) != 0");

        int produced = 0;
        for (int64_t k = 1; produced < 20; ++k) {
            if (k >= ipow(p, item.cap - threshold)) break; // enumeration exhausted at this cap
            std::vector<Elem> u;
            for (int i = 0; i < item.r; ++i) {
                int64_t code = (k + i * 7) % ipow(p, item.cap - threshold);
                if (i > 0 && code == 0) code = 1;
                u.push_back(scaled_param(ring, threshold, code));
            }
            auto phi = implicit_eval(sys, u);
            ++produced;
            std::vector<Elem> graph = u;
            graph.insert(graph.end(), phi.begin(), phi.end());
            for (const auto& value : sys.p.eval(graph))
                if (value.valuation().value < certified)
                    outcome.fail("graph point misses the zero locus at certified precision");
            for (const auto& c : phi)
                if (c.abs_prec() != certified) outcome.fail("phi precision contract broken");
        }
        if (produced < 20)
            outcome.fail("only " + std::to_string(produced) + " admissible parameters sampled");
    }

    // the worked value, re-verified by exhaustive search first
    if (backend == Backend::PAdic && p == 5) {
        auto ring = zp(5, 3);
        auto vars = mkvars({"X", "Y"});
        NaivePoly np = naive_of(P(ring, mkvars({"Y"}), "Y + 25 + Y^2"), 125);
        std::vector<int64_t> hits;
        for (int64_t y = 0; y < 125; y += 5)
            if (naive_eval(np, {y}, 125) == 0) hits.push_back(y);
        if (hits != std::vector<int64_t>{100}) {
            outcome.fail("exhaustive search did not isolate phi(5) = 100");
        } else {
            ImplicitSystem sys = make_implicit(PolyMap(ring, vars, {P(ring, vars, "Y + X^2 + Y^2")}), 1);
            auto phi = implicit_eval(sys, {Elem::from_int(ring, 5)});
            if (phi[0].rep() != 100) outcome.fail("phi(5) != 100 mod 125");
        }
    }
    return outcome;
}

// ---------- criterion 10 helpers ----------

std::string run_command(const std::string& cmd, int* exit_code) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    *exit_code = status < 0 ? -1 : WEXITSTATUS(status);
    return out;
}

std::string read_file(const std::string& path, bool* ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        *ok = false;
        return "";
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    *ok = true;
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path, data_dir;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") cli_path = argv[i + 1];
        if (flag == "--data") data_dir = argv[i + 1];
    }

    // ---- criteria 1 and 3: uniqueness oracle and certified quadratic convergence ----
    {
        UniquenessStats stats = run_uniqueness_suite(Backend::PAdic, {2, 3, 5}, 50, 424243);
        Outcome c1 = stats.uniqueness;
        if (stats.systems != 12 * 50) c1.fail("expected 600 systems, ran " + std::to_string(stats.systems));
        report(1, "uniqueness oracle over Z_p (600 random systems, exhaustive search)", c1);
        report(3, "quadratic residual growth and iteration bound on every trace", stats.convergence);
    }

    // ---- criterion 2: worked lifts re-verified by brute force ----
    {
        Outcome c2;
        auto ring = zp(5, 4);
        auto vars = mkvars({"X"});
        MultiPoly f = P(ring, vars, "X^2 - 6");
        NaivePoly nf = naive_of(f, 625);
        std::vector<int64_t> hits;
        for (int64_t x = 1; x < 625; x += 5)
            if (naive_eval(nf, {x}, 625) == 0) hits.push_back(x);
        if (hits != std::vector<int64_t>{516}) c2.fail("oracle did not isolate 516");
        LiftResult res = hensel_lift(HenselProblem(PolyMap(ring, vars, {f}), {Elem::from_int(ring, 1)}));
        if (!elems_equal_i64(res.root[0], 516)) c2.fail("sqrt(6) lift != 516 mod 5^4");

        auto ring2 = zp(5, 2);
        auto vars2 = mkvars({"X1", "X2"});
        PolyMap g = PM(ring2, vars2, {"X1 + X2 + X1^2", "X1 - X2 + 5"});
        NaivePoly n1 = naive_of(g.component(0), 25), n2 = naive_of(g.component(1), 25);
        std::vector<std::vector<int64_t>> hits2;
        for (const auto& x : enumerate_m_padic(5, 2, 2))
            if (naive_eval(n1, x, 25) == 0 && naive_eval(n2, x, 25) == 0) hits2.push_back(x);
        if (hits2 != std::vector<std::vector<int64_t>>{{10, 15}}) c2.fail("oracle did not isolate (10, 15)");
        LiftResult res2 = hensel_lift(HenselProblem(g));
        if (!elems_equal_i64(res2.root[0], 10) || !elems_equal_i64(res2.root[1], 15))
            c2.fail("system lift != (10, 15) mod 25");
        report(2, "worked lifts match the brute-force oracle (516; (10,15))", c2);
    }

    // ---- criterion 4: bijection and isometry over Z_3 cap 3 ----
    report(4, "finite-level bijection and isometry (20 random systems over Z_3)",
           run_bijection_isometry_suite(Backend::PAdic, 3, 3, 515151));

    // ---- criterion 5: scaled inverse round trips ----
    {
        Outcome c5;
        struct ChartCase {
            int cap;
            std::vector<std::string> vars;
            std::vector<std::string> comps;
        };
        std::vector<ChartCase> charts{
            {6, {"X"}, {"5*X + X^2"}},
            {8, {"X"}, {"25*X + X^3"}},
            {6, {"X1", "X2"}, {"5*X1 + X2^2", "X1 + 3*X2 + X1*X2"}},
        };
        for (const auto& cc : charts) {
            auto ring = zp(5, cc.cap);
            auto vars = mkvars(cc.vars);
            LocalChart chart = make_chart(PM(ring, vars, cc.comps));
            int certified = cc.cap - chart.ve;
            int threshold = 2 * chart.ve + 1;
            int n = chart.f.arity();
            for (int64_t k = 1; k <= 20; ++k) {
                // forward: x0 in e^2 m^n, recover it from its image
                std::vector<Elem> x0;
                for (int i = 0; i < n; ++i) x0.push_back(scaled_param(ring, threshold, k + 3 * i));
                auto y = chart.f.eval(x0);
                auto back = inverse_eval(chart, y);
                for (int i = 0; i < n; ++i)
                    if (!congruent_mod(back[size_t(i)], x0[size_t(i)], certified))
                        c5.fail("inverse(f(x)) != x at certified precision " + std::to_string(certified));

                // backward: y in e^2 m^n, f(inverse(y)) = y
                std::vector<Elem> y2;
                for (int i = 0; i < n; ++i) y2.push_back(scaled_param(ring, threshold, 2 * k + 5 * i + 1));
                auto x = inverse_eval(chart, y2);
                auto image = chart.f.eval(x);
                for (int i = 0; i < n; ++i)
                    if (!congruent_mod(image[size_t(i)], y2[size_t(i)], certified))
                        c5.fail("f(inverse(y)) != y at certified precision " + std::to_string(certified));
            }
        }
        // the worked value y = 250 -> 175 mod 5^4 on the cap-6 chart
        auto ring = zp(5, 6);
        auto vars = mkvars({"X"});
        LocalChart chart = make_chart(PM(ring, vars, {"5*X + X^2"}));
        auto x = inverse_eval(chart, {Elem::from_int(ring, 250)});
        if (x[0].abs_prec() != 5 || x[0].rep() % 625 != 175) c5.fail("y = 250 did not invert to 175 mod 5^4");
        report(5, "scaled inverse round trips at precision cap - v(e) (non-unit e)", c5);
    }

    // ---- criterion 6: implicit function corpus over Z_5 ----
    report(6, "implicit graphs live in the zero locus; phi(0) = 0; phi(5) = 100 mod 125",
           run_implicit_suite(Backend::PAdic, 5, 0));

    // ---- criterion 7: smoothness trichotomy ----
    {
        Outcome c7;
        auto ring = zp(5, 6);
        auto xy = mkvars({"X", "Y"});
        auto xyz = mkvars({"X", "Y", "Z"});

        auto check_verdict = [&](const std::vector<MultiPoly>& gens, int dim, Verdict expected,
                                 const std::string& label) -> SmoothnessReport {
            VarietySpec v;
            v.generators = gens;
            v.claimed_dim = dim;
            SmoothnessReport r = smooth_check(v);
            if (r.verdict != expected) c7.fail(label + ": verdict " + verdict_name(r.verdict));
            return r;
        };

        check_verdict({P(ring, xy, "Y^2 - X^3 - X^2")}, 1, Verdict::NotSmooth, "node");
        check_verdict({P(ring, xy, "Y^2 - X^3")}, 1, Verdict::NotSmooth, "cusp");
        auto circle = check_verdict({P(ring, xy, "X^2 + 2*X + Y^2")}, 1, Verdict::Smooth, "circle");
        auto twisted =
            check_verdict({P(ring, xyz, "Y - X^2"), P(ring, xyz, "Z - X^3")}, 1, Verdict::Smooth, "twisted");
        auto axes = check_verdict({P(ring, xy, "X"), P(ring, xy, "Y")}, 0, Verdict::Smooth, "axes");
        check_verdict({P(ring, xy, "X"), P(ring, xy, "Y")}, 1, Verdict::RankExceedsCodim, "wrong dim");

        // independent determinant evaluation of each selected minor
        auto verify_minor = [&](const SmoothnessReport& r, const std::vector<MultiPoly>& gens,
                                const std::string& label) {
            if (!r.pivot) {
                c7.fail(label + ": no pivot");
                return;
            }
            ScalarMatrix jac = jacobian_at(PolyMap(gens[0].ring(), gens[0].vars(), gens),
                                           std::vector<Scalar>(gens[0].vars()->size(), Scalar(ring)));
            size_t m = r.pivot->generator_rows.size();
            std::vector<std::vector<int64_t>> minor(m, std::vector<int64_t>(m));
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j)
                    minor[i][j] = jac.at(r.pivot->generator_rows[i], r.pivot->pivot_cols[j])
                                      .int_value()
                                      .convert_to<int64_t>();
            // cofactor determinant, written out for the sizes in this corpus
            int64_t d;
            if (m == 1)
                d = minor[0][0];
            else
                d = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0];
            if (d == 0) c7.fail(label + ": selected minor is singular");
            if (Scalar(ring, d) != r.pivot->minor_det) c7.fail(label + ": minor determinant mismatch");
        };
        verify_minor(circle, {P(ring, xy, "X^2 + 2*X + Y^2")}, "circle");
        verify_minor(twisted, {P(ring, xyz, "Y - X^2"), P(ring, xyz, "Z - X^3")}, "twisted");
        verify_minor(axes, {P(ring, xy, "X"), P(ring, xy, "Y")}, "axes");
        report(7, "smoothness trichotomy with independently verified pivot minors", c7);
    }

    // ---- criterion 8: density sampling on both curves, levels 1..5 ----
    {
        Outcome c8;
        auto ring = zp(5, 8);
        auto xy = mkvars({"X", "Y"});
        for (const std::string& curve : {std::string("Y - X^2"), std::string("Y + X^2 + Y^2")}) {
            for (int level = 1; level <= 5; ++level) {
                DensityRequest req;
                req.spec.generators = {P(ring, xy, curve)};
                req.spec.claimed_dim = 1;
                req.count = 5;
                req.level = level;
                req.avoid = P(ring, xy, "X");
                DensityReport rep;
                try {
                    rep = density_sample(req);
                } catch (const Error& e) {
                    c8.fail(curve + " level " + std::to_string(level) + ": " + e.what());
                    continue;
                }
                if (int(rep.points.size()) != 5) c8.fail("returned " + std::to_string(rep.points.size()));
                std::set<std::string> seen;
                for (const auto& pt : rep.points) {
                    std::string key;
                    for (const auto& c : pt.coords) key += c.to_string() + "|";
                    seen.insert(key);
                    if (pt.displacement_valuation < level) c8.fail("displacement below the requested level");
                    if (!pt.avoid_valuation || !pt.avoid_valuation->exact)
                        c8.fail("missing avoid certificate");
                    for (const auto& gv : pt.generator_values)
                        if (gv.value < rep.certified_precision) c8.fail("generator certificate failed");
                }
                if (seen.size() != rep.points.size()) c8.fail("points not pairwise distinct");
            }
        }
        report(8, "density sampler: 5 certified distinct points per level 1..5, avoiding X", c8);
    }

    // ---- criterion 9: backend parity over F_p[[t]] ----
    {
        Outcome c9;
        for (int64_t p : {2, 5}) {
            UniquenessStats stats = run_uniqueness_suite(Backend::TruncatedSeries, {p}, 50, 626261);
            if (!stats.uniqueness.pass) c9.fail("suite 1 over F_" + std::to_string(p) + "[[t]]: " +
                                                 stats.uniqueness.detail);
            if (!stats.convergence.pass) c9.fail("suite 3 over F_" + std::to_string(p) + "[[t]]: " +
                                                  stats.convergence.detail);
            Outcome bij = run_bijection_isometry_suite(Backend::TruncatedSeries, p, 3, 717171);
            if (!bij.pass) c9.fail("suite 4 over F_" + std::to_string(p) + "[[t]]: " + bij.detail);
            Outcome impl = run_implicit_suite(Backend::TruncatedSeries, p, 0);
            if (!impl.pass) c9.fail("suite 6 over F_" + std::to_string(p) + "[[t]]: " + impl.detail);
        }
        report(9, "backend parity: suites 1, 3, 4, 6 over F_2[[t]] and F_5[[t]]", c9);
    }

    // ---- criterion 10: CLI golden files ----
    {
        Outcome c10;
        if (cli_path.empty() || data_dir.empty()) {
            c10.fail("--cli and --data arguments are required");
        } else {
            struct GoldenCase {
                std::string name;
                std::string args;
            };
            std::vector<GoldenCase> cases{
                {"sqrt6_lift", "lift \"" + data_dir + "/sqrt6_lift.hsys\""},
                {"implicit_series", "implicit \"" + data_dir + "/implicit_series.hsys\" --u t"},
                {"variety_parabola", "sample \"" + data_dir + "/variety_parabola.hsys\" --m 3 --level 1"},
            };
            for (const auto& gc : cases) {
                int code1 = 0, code2 = 0;
                std::string out1 = run_command("\"" + cli_path + "\" " + gc.args, &code1);
                std::string out2 = run_command("\"" + cli_path + "\" " + gc.args, &code2);
                if (code1 != 0 || code2 != 0) {
                    c10.fail(gc.name + ": exit codes " + std::to_string(code1) + "/" + std::to_string(code2));
                    continue;
                }
                if (out1 != out2) c10.fail(gc.name + ": output differs between consecutive runs");
                bool ok = false;
                std::string golden = read_file(data_dir + "/" + gc.name + ".out", &ok);
                if (!ok)
                    c10.fail(gc.name + ": golden file missing");
                else if (out1 != golden)
                    c10.fail(gc.name + ": output does not match the stored golden file");
            }
        }
        report(10, "CLI golden files are byte-stable and match", c10);
    }

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
