#pragma once

#include <map>

#include "matrix.hpp"

namespace hensel {

using ExpVec = std::vector<uint32_t>;

inline uint32_t total_degree(const ExpVec& e) {
    uint32_t d = 0;
    for (uint32_t x : e) d += x;
    return d;
}

// Graded lexicographic monomial order (total degree, then lex with the first
// variable heaviest). Canonical printing iterates it in reverse.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        uint32_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

using VarsPtr = std::shared_ptr<const std::vector<std::string>>;

/// Multivariate polynomial with exact coefficients. Zero coefficients are
/// never stored; evaluation at valued points is where precision enters.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Scalar, GradedLexLess>;

    MultiPoly() = default;
    MultiPoly(RingPtr ring, VarsPtr vars) : ring_(std::move(ring)), vars_(std::move(vars)) {}

    const RingPtr& ring() const { return ring_; }
    const VarsPtr& vars() const { return vars_; }
    int nvars() const { return int(vars_->size()); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    uint32_t degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

    void add_term(const ExpVec& exps, const Scalar& coeff);
    Scalar coeff(const ExpVec& exps) const;
    Scalar constant_term() const { return coeff(ExpVec(size_t(nvars()), 0)); }

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(const Scalar& c) const;

    MultiPoly derivative(int var) const;

    Elem eval(const std::vector<Elem>& x) const;
    Scalar eval_exact(const std::vector<Scalar>& x) const;

    // X_i -> X_i + c_i (exact translation)
    MultiPoly shifted(const std::vector<Scalar>& c) const;
    // exponent vectors permuted: new variable j was old variable perm[j]
    MultiPoly with_var_order(const std::vector<int>& perm, VarsPtr new_vars) const;

    // Graded-lex, highest terms first: "X^2 - 6", "(1 + t)*X*Y + 2".
    std::string to_string() const;

    static MultiPoly constant(RingPtr ring, VarsPtr vars, const Scalar& c);
    static MultiPoly variable(RingPtr ring, VarsPtr vars, int index);

private:
    RingPtr ring_;
    VarsPtr vars_;
    TermMap terms_;
};

/// Tuple of polynomials over a shared variable list, used as a map R^n -> R^k.
class PolyMap {
public:
    PolyMap() = default;
    PolyMap(RingPtr ring, VarsPtr vars, std::vector<MultiPoly> components);

    const RingPtr& ring() const { return ring_; }
    const VarsPtr& vars() const { return vars_; }
    int arity() const { return int(vars_->size()); }
    int coarity() const { return int(components_.size()); }
    bool is_square() const { return arity() == coarity(); }
    const MultiPoly& component(int i) const { return components_[size_t(i)]; }
    const std::vector<MultiPoly>& components() const { return components_; }

    std::vector<Elem> eval(const std::vector<Elem>& x) const;
    std::vector<Scalar> eval_exact(const std::vector<Scalar>& x) const;
    bool vanishes_at_origin() const;

private:
    RingPtr ring_;
    VarsPtr vars_;
    std::vector<MultiPoly> components_;
};

// Entry (i, j) is d f_i / d X_j.
std::vector<std::vector<MultiPoly>> jacobian_matrix(const PolyMap& f);

// Symbolic Jacobian determinant (square maps only).
MultiPoly jacobian_det(const PolyMap& f);

// Jacobian evaluated at an exact point / at a valued point.
ScalarMatrix jacobian_at(const PolyMap& f, const std::vector<Scalar>& point);
ScalarMatrix jacobian_at_origin(const PolyMap& f);
std::vector<std::vector<Elem>> jacobian_eval(const PolyMap& f, const std::vector<Elem>& x);

// The scaling decomposition f(eX) = e*M(0)*X + e^2*g(X) for f with f(0) = 0
// and e = det M(0) != 0: the degree-d coefficient of g is e^(d-2) times the
// coefficient of f, so no division occurs.
PolyMap extract_g(const PolyMap& f, const Scalar& e);

// h(X) = X + N*g(X); its Jacobian at the origin is the identity.
PolyMap build_h(const PolyMap& g, const ScalarMatrix& nadj);

} // namespace hensel
