#pragma once

#include "scalar.hpp"

namespace hensel {

/// Ring element under capped-absolute precision: the representative is
/// reduced modulo uniformizer^abs_prec and digits beyond abs_prec carry no
/// meaning. An element whose representative vanishes at its abs_prec is an
/// indeterminate zero; its valuation is only the lower bound ">= abs_prec".
class Elem {
public:
    Elem() = default;

    const RingPtr& ring() const { return ring_; }
    int abs_prec() const { return prec_; }

    // PAdic representative, canonical in [0, p^abs_prec).
    const BigInt& rep() const { return z_; }
    // Series representative: coefficients of t^0 .. t^(abs_prec-1).
    const std::vector<int64_t>& coeffs() const { return tp_; }

    Valuation valuation() const;
    bool in_maximal_ideal() const { return valuation().value >= 1; }
    bool is_unit() const {
        Valuation v = valuation();
        return v.exact && v.value == 0;
    }
    // representative == 0 at this precision (valuation only bounded below)
    bool is_zero_rep() const;

    Elem operator-() const;
    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);

    // Exact comparison: same ring, same abs_prec, same representative.
    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

    // "516 mod 5^4" / "1 + 2*t + O(t^3)"
    std::string to_string() const;

    static Elem from_scalar(const Scalar& s, int prec);
    static Elem from_scalar(const Scalar& s); // at full cap
    static Elem from_int(const RingPtr& ring, int64_t v);
    static Elem zero(const RingPtr& ring, int prec);
    static Elem zero(const RingPtr& ring);
    static Elem one(const RingPtr& ring);

private:
    Elem(RingPtr ring, int prec) : ring_(std::move(ring)), prec_(prec) {
        if (ring_->backend() == Backend::TruncatedSeries) tp_.assign(size_t(prec_), 0);
    }
    void reduce();

    RingPtr ring_;
    int prec_ = 0;
    BigInt z_;
    std::vector<int64_t> tp_;

    friend Elem divide_exact(const Elem& a, const Elem& b);
    friend Elem invert_unit(const Elem& a);
};

inline Valuation valuation(const Elem& a) { return a.valuation(); }

// Quotient c with b*c = a. Requires v(b) exact and v(b) <= v(a); the
// result's abs_prec drops to min(abs_prec a, abs_prec b) - v(b).
Elem divide_exact(const Elem& a, const Elem& b);

// Inverse of a unit, at b's precision.
Elem invert_unit(const Elem& b);

// a == b modulo uniformizer^k (both must hold at least k certified digits).
bool congruent_mod(const Elem& a, const Elem& b, int k);

// The same value with its certified precision lowered to prec.
Elem truncate_prec(const Elem& a, int prec);

std::string render_vector(const std::vector<Elem>& v);

} // namespace hensel
