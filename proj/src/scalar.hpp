#pragma once

#include <optional>

#include "ring.hpp"

namespace hensel {

/// Exact coefficient: an arbitrary-precision integer (PAdic backend) or a
/// polynomial in t over F_p (TruncatedSeries backend). Scalars carry no
/// precision attribute; arithmetic on them is exact.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(RingPtr ring); // zero
    Scalar(RingPtr ring, int64_t value);
    Scalar(RingPtr ring, BigInt value);
    // series backend: coefficients of t^0, t^1, ... (reduced mod p, trimmed)
    Scalar(RingPtr ring, std::vector<int64_t> tcoeffs);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const;

    const BigInt& int_value() const { return z_; }
    const std::vector<int64_t>& tcoeffs() const { return tp_; }

    // Valuation with respect to the uniformizer (p or t). Exact; nullopt for 0.
    std::optional<int> valuation() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(unsigned k) const;

    // Exact quotient; the caller guarantees divisibility (internal error otherwise).
    friend Scalar divexact(const Scalar& a, const Scalar& b);

    // "2", "-6"; series: "1 + 2*t + 4*t^3", "0".
    std::string to_string() const;

private:
    void normalize();

    RingPtr ring_;
    BigInt z_;
    std::vector<int64_t> tp_;
};

} // namespace hensel
