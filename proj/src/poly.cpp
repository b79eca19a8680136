#include "poly.hpp"

#include <sstream>

namespace hensel {

void MultiPoly::add_term(const ExpVec& exps, const Scalar& coeff) {
    if (int(exps.size()) != nvars()) raise(errc::internal_error, "exponent vector length mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar MultiPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar(ring_) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring_, b.ring_, "poly add");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring_, b.ring_, "poly mul");
    MultiPoly r(a.ring_, a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!a.ring_ || !b.ring_ || !a.ring_->same(*b.ring_)) return false;
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(ring_, vars_);
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(ring_, vars_);
    for (const auto& [e, c] : terms_) {
        if (e[size_t(var)] == 0) continue;
        ExpVec d = e;
        d[size_t(var)] -= 1;
        r.add_term(d, c * Scalar(ring_, int64_t(e[size_t(var)])));
    }
    return r;
}

Elem MultiPoly::eval(const std::vector<Elem>& x) const {
    if (int(x.size()) != nvars()) raise(errc::context_mismatch, "eval: point dimension mismatch");
    for (const auto& xi : x) check_same_ring(ring_, xi.ring(), "eval");
    // power cache per variable
    std::vector<std::vector<Elem>> pows(x.size());
    for (size_t i = 0; i < x.size(); ++i) pows[i].push_back(Elem::one(ring_));
    auto power = [&](size_t i, uint32_t k) -> const Elem& {
        while (pows[i].size() <= k) pows[i].push_back(pows[i].back() * x[i]);
        return pows[i][k];
    };
    Elem acc = Elem::zero(ring_);
    for (const auto& [e, c] : terms_) {
        Elem term = Elem::from_scalar(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

Scalar MultiPoly::eval_exact(const std::vector<Scalar>& x) const {
    if (int(x.size()) != nvars()) raise(errc::context_mismatch, "eval_exact: point dimension mismatch");
    Scalar acc(ring_);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * x[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::shifted(const std::vector<Scalar>& c) const {
    // compose with X_i + c_i using polynomial arithmetic
    std::vector<MultiPoly> args;
    for (int i = 0; i < nvars(); ++i)
        args.push_back(MultiPoly::variable(ring_, vars_, i) + MultiPoly::constant(ring_, vars_, c[size_t(i)]));
    MultiPoly acc(ring_, vars_);
    for (const auto& [e, k] : terms_) {
        MultiPoly term = MultiPoly::constant(ring_, vars_, k);
        for (size_t i = 0; i < e.size(); ++i)
            for (uint32_t d = 0; d < e[i]; ++d) term = term * args[i];
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::with_var_order(const std::vector<int>& perm, VarsPtr new_vars) const {
    MultiPoly r(ring_, std::move(new_vars));
    for (const auto& [e, c] : terms_) {
        ExpVec ne(e.size());
        for (size_t j = 0; j < e.size(); ++j) ne[j] = e[size_t(perm[j])];
        r.add_term(ne, c);
    }
    return r;
}

MultiPoly MultiPoly::constant(RingPtr ring, VarsPtr vars, const Scalar& c) {
    MultiPoly r(std::move(ring), std::move(vars));
    r.add_term(ExpVec(r.vars_->size(), 0), c);
    return r;
}

MultiPoly MultiPoly::variable(RingPtr ring, VarsPtr vars, int index) {
    MultiPoly r(std::move(ring), std::move(vars));
    ExpVec e(r.vars_->size(), 0);
    e[size_t(index)] = 1;
    r.add_term(e, Scalar(r.ring_, 1));
    return r;
}

namespace {

// single term, sign handled by the caller for the integer backend
std::string render_term(const Scalar& c, const ExpVec& e, const std::vector<std::string>& vars, bool strip_sign) {
    std::ostringstream os;
    std::string cs;
    if (c.ring()->backend() == Backend::PAdic) {
        BigInt v = c.int_value();
        if (strip_sign && v < 0) v = -v;
        cs = v.str();
    } else {
        cs = c.to_string();
        int nonzero = 0;
        for (int64_t x : c.tcoeffs())
            if (x != 0) ++nonzero;
        if (nonzero > 1 && total_degree(e) > 0) cs = "(" + cs + ")"; // multi-term coefficient
    }
    bool coeff_is_one = cs == "1";
    bool printed = false;
    if (!coeff_is_one || total_degree(e) == 0) {
        os << cs;
        printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) os << "*";
        os << vars[i];
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
    }
    return os.str();
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = ring_->backend() == Backend::PAdic && c.int_value() < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << render_term(c, e, *vars_, true);
    }
    return os.str();
}

PolyMap::PolyMap(RingPtr ring, VarsPtr vars, std::vector<MultiPoly> components)
    : ring_(std::move(ring)), vars_(std::move(vars)), components_(std::move(components)) {
    for (const auto& c : components_) {
        check_same_ring(ring_, c.ring(), "PolyMap");
        if (c.vars() != vars_ && *c.vars() != *vars_)
            raise(errc::context_mismatch, "PolyMap: components disagree on the variable list");
    }
}

std::vector<Elem> PolyMap::eval(const std::vector<Elem>& x) const {
    std::vector<Elem> r;
    r.reserve(components_.size());
    for (const auto& c : components_) r.push_back(c.eval(x));
    return r;
}

std::vector<Scalar> PolyMap::eval_exact(const std::vector<Scalar>& x) const {
    std::vector<Scalar> r;
    r.reserve(components_.size());
    for (const auto& c : components_) r.push_back(c.eval_exact(x));
    return r;
}

bool PolyMap::vanishes_at_origin() const {
    for (const auto& c : components_)
        if (!c.constant_term().is_zero()) return false;
    return true;
}

std::vector<std::vector<MultiPoly>> jacobian_matrix(const PolyMap& f) {
    std::vector<std::vector<MultiPoly>> m;
    for (int i = 0; i < f.coarity(); ++i) {
        std::vector<MultiPoly> row;
        for (int j = 0; j < f.arity(); ++j) row.push_back(f.component(i).derivative(j));
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
    // exact long division on graded-lex leading terms
    if (b.is_zero()) raise(errc::internal_error, "poly_divexact by zero");
    MultiPoly rem = a;
    MultiPoly q(a.ring(), a.vars());
    const auto& blead = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        ExpVec e(rlead.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (rlead.first[i] < blead.first[i]) raise(errc::internal_error, "poly_divexact: not divisible");
            e[i] = rlead.first[i] - blead.first[i];
        }
        MultiPoly t(a.ring(), a.vars());
        t.add_term(e, divexact(rlead.second, blead.second));
        q = q + t;
        rem = rem - t * b;
    }
    return q;
}

MultiPoly poly_det_cofactor(const std::vector<std::vector<MultiPoly>>& m, const RingPtr& ring, const VarsPtr& vars) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    MultiPoly acc(ring, vars);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * poly_det_cofactor(sub, ring, vars);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

MultiPoly poly_det_bareiss(std::vector<std::vector<MultiPoly>> m, const RingPtr& ring, const VarsPtr& vars) {
    size_t n = m.size();
    MultiPoly prev = MultiPoly::constant(ring, vars, Scalar(ring, 1));
    int sign = 1;
    for (size_t r = 0; r < n; ++r) {
        size_t pivot = r;
        while (pivot < n && m[pivot][r].is_zero()) ++pivot;
        if (pivot == n) return MultiPoly(ring, vars); // singular
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = r + 1; j < n; ++j)
                m[i][j] = poly_divexact(m[r][r] * m[i][j] - m[i][r] * m[r][j], prev);
            m[i][r] = MultiPoly(ring, vars);
        }
        prev = m[r][r];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

MultiPoly jacobian_det(const PolyMap& f) {
    if (!f.is_square()) raise(errc::non_square, "jacobian determinant needs a square map");
    auto m = jacobian_matrix(f);
    if (f.arity() == 0) raise(errc::non_square, "jacobian determinant of empty map");
    if (f.arity() < 4) return poly_det_cofactor(m, f.ring(), f.vars());
    return poly_det_bareiss(std::move(m), f.ring(), f.vars());
}

ScalarMatrix jacobian_at(const PolyMap& f, const std::vector<Scalar>& point) {
    auto m = jacobian_matrix(f);
    ScalarMatrix r(f.ring(), f.coarity(), f.arity());
    for (int i = 0; i < f.coarity(); ++i)
        for (int j = 0; j < f.arity(); ++j) r.at(i, j) = m[size_t(i)][size_t(j)].eval_exact(point);
    return r;
}

ScalarMatrix jacobian_at_origin(const PolyMap& f) {
    return jacobian_at(f, std::vector<Scalar>(size_t(f.arity()), Scalar(f.ring())));
}

std::vector<std::vector<Elem>> jacobian_eval(const PolyMap& f, const std::vector<Elem>& x) {
    auto m = jacobian_matrix(f);
    std::vector<std::vector<Elem>> r;
    for (int i = 0; i < f.coarity(); ++i) {
        std::vector<Elem> row;
        for (int j = 0; j < f.arity(); ++j) row.push_back(m[size_t(i)][size_t(j)].eval(x));
        r.push_back(std::move(row));
    }
    return r;
}

PolyMap extract_g(const PolyMap& f, const Scalar& e) {
    if (!f.is_square()) raise(errc::non_square, "extract_g needs a square map");
    if (!f.vanishes_at_origin())
        raise(errc::constant_term_present, "extract_g: map must vanish at the origin");
    if (e.is_zero()) raise(errc::zero_jacobian_det, "extract_g: e = 0");
    if (det(jacobian_at_origin(f)) != e)
        raise(errc::zero_jacobian_det, "extract_g: e differs from the Jacobian determinant at 0");
    std::vector<MultiPoly> comps;
    for (int i = 0; i < f.coarity(); ++i) {
        MultiPoly gi(f.ring(), f.vars());
        for (const auto& [exps, c] : f.component(i).terms()) {
            uint32_t d = total_degree(exps);
            if (d < 2) continue;
            gi.add_term(exps, c * e.pow(d - 2));
        }
        comps.push_back(std::move(gi));
    }
    return PolyMap(f.ring(), f.vars(), std::move(comps));
}

PolyMap build_h(const PolyMap& g, const ScalarMatrix& nadj) {
    if (nadj.rows() != g.coarity() || nadj.cols() != g.coarity() || !g.is_square())
        raise(errc::non_square, "build_h: dimension mismatch");
    for (const auto& comp : g.components())
        for (const auto& [exps, c] : comp.terms())
            if (total_degree(exps) < 2) raise(errc::internal_error, "build_h: g has terms of degree < 2");
    std::vector<MultiPoly> comps;
    for (int i = 0; i < g.coarity(); ++i) {
        MultiPoly hi = MultiPoly::variable(g.ring(), g.vars(), i);
        for (int j = 0; j < g.coarity(); ++j) hi = hi + g.component(j).scaled(nadj.at(i, j));
        comps.push_back(std::move(hi));
    }
    PolyMap h(g.ring(), g.vars(), std::move(comps));
    if (!(jacobian_at_origin(h) == ScalarMatrix::identity(g.ring(), g.coarity())))
        raise(errc::internal_error, "build_h: Jacobian at origin is not the identity");
    return h;
}

} // namespace hensel
