#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace hensel {

using BigInt = boost::multiprecision::cpp_int;

enum class Backend {
    PAdic,          // Z_p, uniformizer p
    TruncatedSeries // F_p[[t]] mod t^cap, uniformizer t
};

/// Backend descriptor shared by every value of the ring: the residue
/// characteristic p, the absolute precision cap, and which of the two
/// concrete rings is in play. Immutable after construction.
class Ring {
public:
    Ring(Backend backend, int64_t p, int cap);

    Backend backend() const { return backend_; }
    int64_t p() const { return p_; }
    int cap() const { return cap_; }

    // p^k for 0 <= k <= cap (PAdic only; cached).
    const BigInt& ppow(int k) const;

    bool same(const Ring& other) const {
        return backend_ == other.backend_ && p_ == other.p_ && cap_ == other.cap_;
    }

private:
    Backend backend_;
    int64_t p_;
    int cap_;
    std::vector<BigInt> ppows_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Backend backend, int64_t p, int cap);

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

bool is_prime_i64(int64_t p);

// Modular inverse of a unit mod m (m = p^k). Throws internal_error on non-unit.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// Inverse of a unit of F_p: c^-1 mod p.
int64_t fp_inverse(int64_t c, int64_t p);

/// A valuation that is either known exactly or only as a lower bound
/// ("the element is 0 to the precision we hold, so v >= abs_prec").
struct Valuation {
    int value = 0;
    bool exact = true;

    std::string to_string() const { return exact ? std::to_string(value) : ">= " + std::to_string(value); }

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

} // namespace hensel
