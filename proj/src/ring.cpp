#include "ring.hpp"

namespace hensel {

bool is_prime_i64(int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Ring::Ring(Backend backend, int64_t p, int cap) : backend_(backend), p_(p), cap_(cap) {
    if (cap < 1) raise(errc::parse_error, "precision cap must be >= 1, got " + std::to_string(cap));
    if (p >= (int64_t(1) << 31)) raise(errc::parse_error, "p must be < 2^31");
    if (!is_prime_i64(p)) raise(errc::parse_error, "p must be prime, got " + std::to_string(p));
    if (backend_ == Backend::PAdic) {
        ppows_.reserve(size_t(cap) + 1);
        BigInt v = 1;
        for (int k = 0; k <= cap; ++k) {
            ppows_.push_back(v);
            v *= p;
        }
    }
}

const BigInt& Ring::ppow(int k) const {
    if (backend_ != Backend::PAdic || k < 0 || k > cap_)
        raise(errc::internal_error, "ppow out of range");
    return ppows_[size_t(k)];
}

RingPtr make_ring(Backend backend, int64_t p, int cap) {
    return std::make_shared<const Ring>(backend, p, cap);
}

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!a || !b || !a->same(*b))
        raise(errc::context_mismatch, std::string(where) + ": ring contexts differ");
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended Euclid
    BigInt old_r = a % m, r = m, old_s = 1, s = 0;
    if (old_r < 0) old_r += m;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) raise(errc::internal_error, "mod_inverse of non-unit");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

int64_t fp_inverse(int64_t c, int64_t p) {
    c %= p;
    if (c < 0) c += p;
    if (c == 0) raise(errc::internal_error, "fp_inverse of zero");
    int64_t old_r = c, r = p, old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    old_s %= p;
    if (old_s < 0) old_s += p;
    return old_s;
}

} // namespace hensel
