#include "scalar.hpp"

#include <sstream>

namespace hensel {

namespace {

int64_t mod_p(int64_t c, int64_t p) {
    c %= p;
    if (c < 0) c += p;
    return c;
}

} // namespace

Scalar::Scalar(RingPtr ring) : ring_(std::move(ring)) {}

Scalar::Scalar(RingPtr ring, int64_t value) : Scalar(std::move(ring), BigInt(value)) {}

Scalar::Scalar(RingPtr ring, BigInt value) : ring_(std::move(ring)) {
    if (ring_->backend() == Backend::PAdic) {
        z_ = std::move(value);
    } else {
        BigInt r = value % ring_->p();
        if (r < 0) r += ring_->p();
        if (r != 0) tp_.push_back(r.convert_to<int64_t>());
    }
}

Scalar::Scalar(RingPtr ring, std::vector<int64_t> tcoeffs) : ring_(std::move(ring)), tp_(std::move(tcoeffs)) {
    if (ring_->backend() != Backend::TruncatedSeries)
        raise(errc::internal_error, "t-coefficients on a PAdic scalar");
    for (auto& c : tp_) c = mod_p(c, ring_->p());
    normalize();
}

void Scalar::normalize() {
    while (!tp_.empty() && tp_.back() == 0) tp_.pop_back();
}

bool Scalar::is_zero() const {
    return ring_->backend() == Backend::PAdic ? z_ == 0 : tp_.empty();
}

std::optional<int> Scalar::valuation() const {
    if (is_zero()) return std::nullopt;
    if (ring_->backend() == Backend::PAdic) {
        int v = 0;
        BigInt n = z_;
        while (n % ring_->p() == 0) {
            n /= ring_->p();
            ++v;
        }
        return v;
    }
    for (size_t i = 0; i < tp_.size(); ++i)
        if (tp_[i] != 0) return int(i);
    return std::nullopt;
}

Scalar Scalar::operator-() const {
    Scalar r(ring_);
    if (ring_->backend() == Backend::PAdic) {
        r.z_ = -z_;
    } else {
        r.tp_ = tp_;
        for (auto& c : r.tp_) c = c == 0 ? 0 : ring_->p() - c;
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same_ring(a.ring_, b.ring_, "scalar add");
    Scalar r(a.ring_);
    if (a.ring_->backend() == Backend::PAdic) {
        r.z_ = a.z_ + b.z_;
    } else {
        r.tp_.resize(std::max(a.tp_.size(), b.tp_.size()), 0);
        for (size_t i = 0; i < r.tp_.size(); ++i) {
            int64_t c = (i < a.tp_.size() ? a.tp_[i] : 0) + (i < b.tp_.size() ? b.tp_[i] : 0);
            r.tp_[i] = c % a.ring_->p();
        }
        r.normalize();
    }
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same_ring(a.ring_, b.ring_, "scalar mul");
    Scalar r(a.ring_);
    if (a.ring_->backend() == Backend::PAdic) {
        r.z_ = a.z_ * b.z_;
    } else {
        if (a.tp_.empty() || b.tp_.empty()) return r;
        r.tp_.assign(a.tp_.size() + b.tp_.size() - 1, 0);
        int64_t p = a.ring_->p();
        for (size_t i = 0; i < a.tp_.size(); ++i) {
            if (a.tp_[i] == 0) continue;
            for (size_t j = 0; j < b.tp_.size(); ++j)
                r.tp_[i + j] = (r.tp_[i + j] + a.tp_[i] * b.tp_[j]) % p;
        }
        r.normalize();
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.ring_ || !b.ring_ || !a.ring_->same(*b.ring_)) return false;
    return a.ring_->backend() == Backend::PAdic ? a.z_ == b.z_ : a.tp_ == b.tp_;
}

Scalar Scalar::pow(unsigned k) const {
    Scalar r(ring_, 1);
    Scalar base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Scalar divexact(const Scalar& a, const Scalar& b) {
    check_same_ring(a.ring_, b.ring_, "scalar divexact");
    if (b.is_zero()) raise(errc::internal_error, "divexact by zero scalar");
    Scalar r(a.ring_);
    if (a.ring_->backend() == Backend::PAdic) {
        BigInt q = a.z_ / b.z_;
        if (q * b.z_ != a.z_) raise(errc::internal_error, "divexact: not divisible");
        r.z_ = q;
        return r;
    }
    // F_p[t] long division, remainder must vanish
    std::vector<int64_t> rem = a.tp_;
    int64_t p = a.ring_->p();
    size_t db = b.tp_.size();
    if (rem.size() >= db) {
        std::vector<int64_t> q(rem.size() - db + 1, 0);
        int64_t lead_inv = fp_inverse(b.tp_.back(), p);
        for (size_t k = q.size(); k-- > 0;) {
            int64_t c = (rem[k + db - 1] * lead_inv) % p;
            q[k] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < db; ++j)
                rem[k + j] = mod_p(rem[k + j] - c * b.tp_[j], p);
        }
        r.tp_ = std::move(q);
        r.normalize();
    }
    for (int64_t c : rem)
        if (c != 0) raise(errc::internal_error, "divexact: not divisible");
    return r;
}

std::string Scalar::to_string() const {
    if (ring_->backend() == Backend::PAdic) return z_.str();
    if (tp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < tp_.size(); ++i) {
        if (tp_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << tp_[i];
        } else {
            if (tp_[i] != 1) os << tp_[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace hensel
