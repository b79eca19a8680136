#pragma once

// Shared helpers for the unit and acceptance suites: an independent
// brute-force evaluator over small residue rings (never routed through the
// library's eval), exhaustive enumerators of the maximal ideal at finite
// level, and seeded random system generators.

#include <cstdint>
#include <random>
#include <vector>

#include "commands.hpp"

namespace testsupport {

using namespace hensel;

inline RingPtr zp(int64_t p, int cap) { return make_ring(Backend::PAdic, p, cap); }
inline RingPtr fpt(int64_t p, int cap) { return make_ring(Backend::TruncatedSeries, p, cap); }

inline VarsPtr mkvars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline MultiPoly P(const RingPtr& ring, const VarsPtr& vars, const std::string& expr) {
    return parse_poly(expr, ring, vars);
}

inline PolyMap PM(const RingPtr& ring, const VarsPtr& vars, const std::vector<std::string>& exprs) {
    std::vector<MultiPoly> comps;
    for (const auto& e : exprs) comps.push_back(P(ring, vars, e));
    return PolyMap(ring, vars, comps);
}

inline int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// ---- independent evaluator, p-adic residues as int64 mod p^cap ----

struct NaiveTerm {
    ExpVec exps;
    int64_t coeff; // reduced into [0, modulus)
};
using NaivePoly = std::vector<NaiveTerm>;

inline NaivePoly naive_of(const MultiPoly& poly, int64_t modulus) {
    NaivePoly out;
    for (const auto& [e, c] : poly.terms()) {
        BigInt r = c.int_value() % modulus;
        if (r < 0) r += modulus;
        out.push_back({e, r.convert_to<int64_t>()});
    }
    return out;
}

inline int64_t naive_eval(const NaivePoly& poly, const std::vector<int64_t>& x, int64_t modulus) {
    int64_t acc = 0;
    for (const auto& term : poly) {
        int64_t v = term.coeff;
        for (size_t i = 0; i < x.size(); ++i)
            for (uint32_t k = 0; k < term.exps[i]; ++k) v = (v * (x[i] % modulus)) % modulus;
        acc = (acc + v) % modulus;
    }
    return acc;
}

// all vectors in (m mod p^cap)^n, i.e. components in {0, p, 2p, ...}
inline std::vector<std::vector<int64_t>> enumerate_m_padic(int64_t p, int cap, int n) {
    int64_t per = ipow(p, cap - 1); // count of multiples of p below p^cap
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> idx(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<int64_t> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[size_t(i)] = idx[size_t(i)] * p;
        out.push_back(v);
        int i = n - 1;
        while (i >= 0 && idx[size_t(i)] == per - 1) idx[size_t(i--)] = 0;
        if (i < 0) break;
        ++idx[size_t(i)];
    }
    return out;
}

// ---- independent evaluator, series residues as coefficient arrays ----

using SeriesRes = std::vector<int64_t>; // length cap, index = power of t

inline SeriesRes s_zero(int cap) { return SeriesRes(static_cast<size_t>(cap), 0); }

inline SeriesRes s_add(const SeriesRes& a, const SeriesRes& b, int64_t p) {
    SeriesRes r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + b[i]) % p;
    return r;
}

inline SeriesRes s_mul(const SeriesRes& a, const SeriesRes& b, int64_t p) {
    SeriesRes r = s_zero(int(a.size()));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

struct NaiveSeriesTerm {
    ExpVec exps;
    SeriesRes coeff;
};
using NaiveSeriesPoly = std::vector<NaiveSeriesTerm>;

inline NaiveSeriesPoly naive_series_of(const MultiPoly& poly, int64_t p, int cap) {
    NaiveSeriesPoly out;
    for (const auto& [e, c] : poly.terms()) {
        SeriesRes r = s_zero(cap);
        for (size_t i = 0; i < c.tcoeffs().size() && i < size_t(cap); ++i) r[i] = c.tcoeffs()[i] % p;
        out.push_back({e, r});
    }
    return out;
}

inline SeriesRes naive_series_eval(const NaiveSeriesPoly& poly, const std::vector<SeriesRes>& x, int64_t p,
                                   int cap) {
    SeriesRes acc = s_zero(cap);
    for (const auto& term : poly) {
        SeriesRes v = term.coeff;
        for (size_t i = 0; i < x.size(); ++i)
            for (uint32_t k = 0; k < term.exps[i]; ++k) v = s_mul(v, x[i], p);
        acc = s_add(acc, v, p);
    }
    return acc;
}

inline bool s_is_zero(const SeriesRes& a) {
    for (int64_t c : a)
        if (c != 0) return false;
    return true;
}

// all vectors in (m mod t^cap)^n: coefficient of t^0 is zero
inline std::vector<std::vector<SeriesRes>> enumerate_m_series(int64_t p, int cap, int n) {
    int64_t per = ipow(p, cap - 1);
    std::vector<std::vector<SeriesRes>> out;
    std::vector<int64_t> idx(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<SeriesRes> v;
        for (int i = 0; i < n; ++i) {
            SeriesRes r = s_zero(cap);
            int64_t code = idx[size_t(i)];
            for (int d = 1; d < cap; ++d) {
                r[size_t(d)] = code % p;
                code /= p;
            }
            v.push_back(r);
        }
        out.push_back(v);
        int i = n - 1;
        while (i >= 0 && idx[size_t(i)] == per - 1) idx[size_t(i--)] = 0;
        if (i < 0) break;
        ++idx[size_t(i)];
    }
    return out;
}

// ---- conversions between library elements and naive residues ----

inline Elem elem_of_i64(const RingPtr& ring, int64_t v) { return Elem::from_int(ring, v); }

inline int64_t i64_of_elem(const Elem& e) { return e.rep().convert_to<int64_t>(); }

inline Elem elem_of_series(const RingPtr& ring, const SeriesRes& r) {
    return Elem::from_scalar(Scalar(ring, r));
}

inline SeriesRes series_of_elem(const Elem& e, int cap) {
    SeriesRes r = s_zero(cap);
    for (size_t i = 0; i < e.coeffs().size() && i < r.size(); ++i) r[i] = e.coeffs()[i];
    return r;
}

// ---- random admissible systems (f(0) in m^n, J(0) a unit) ----

inline std::vector<ExpVec> monomials_up_to(int n, int maxdeg) {
    std::vector<ExpVec> out;
    ExpVec cur(static_cast<size_t>(n), 0);
    // odometer over exponents bounded by maxdeg in each slot, filtered by total degree
    while (true) {
        if (total_degree(cur) <= uint32_t(maxdeg)) out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[size_t(i)] == uint32_t(maxdeg)) cur[size_t(i--)] = 0;
        if (i < 0) break;
        ++cur[size_t(i)];
    }
    return out;
}

// Degree <= maxdeg, coefficients in [-p^2, p^2], constant term in p*[-p, p];
// retries until the Jacobian determinant at 0 is a unit.
inline PolyMap random_admissible_system(const RingPtr& ring, int n, int maxdeg, std::mt19937_64& rng) {
    auto vars = [&] {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
        return mkvars(names);
    }();
    int64_t p = ring->p();
    std::uniform_int_distribution<int64_t> coeff_dist(-p * p, p * p);
    std::uniform_int_distribution<int64_t> small_dist(-p, p);
    std::uniform_int_distribution<int64_t> fp_dist(0, p - 1);
    auto monos = monomials_up_to(n, maxdeg);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<MultiPoly> comps;
        for (int i = 0; i < n; ++i) {
            MultiPoly poly(ring, vars);
            for (const auto& e : monos) {
                Scalar c(ring);
                if (ring->backend() == Backend::PAdic) {
                    int64_t v = total_degree(e) == 0 ? p * small_dist(rng) : coeff_dist(rng);
                    c = Scalar(ring, v);
                } else {
                    std::vector<int64_t> tc{fp_dist(rng), fp_dist(rng), fp_dist(rng)};
                    if (total_degree(e) == 0) tc.insert(tc.begin(), 0); // constant term into t*m
                    c = Scalar(ring, tc);
                }
                poly.add_term(e, c);
            }
            comps.push_back(std::move(poly));
        }
        PolyMap f(ring, vars, comps);
        Scalar j0 = det(jacobian_at_origin(f));
        if (!j0.is_zero() && *j0.valuation() == 0) return f;
    }
    raise(errc::internal_error, "random_admissible_system: generation failed");
}

} // namespace testsupport
