#include "elem.hpp"

#include <algorithm>
#include <sstream>

namespace hensel {

void Elem::reduce() {
    if (ring_->backend() == Backend::PAdic) {
        const BigInt& m = ring_->ppow(prec_);
        z_ %= m;
        if (z_ < 0) z_ += m;
    } else {
        tp_.resize(size_t(prec_), 0);
        for (auto& c : tp_) {
            c %= ring_->p();
            if (c < 0) c += ring_->p();
        }
    }
}

Valuation Elem::valuation() const {
    if (ring_->backend() == Backend::PAdic) {
        if (z_ == 0) return {prec_, false};
        int v = 0;
        BigInt n = z_;
        while (n % ring_->p() == 0) {
            n /= ring_->p();
            ++v;
        }
        return {v, true};
    }
    for (int i = 0; i < int(tp_.size()); ++i)
        if (tp_[size_t(i)] != 0) return {i, true};
    return {prec_, false};
}

bool Elem::is_zero_rep() const {
    if (ring_->backend() == Backend::PAdic) return z_ == 0;
    return std::all_of(tp_.begin(), tp_.end(), [](int64_t c) { return c == 0; });
}

Elem Elem::operator-() const {
    Elem r = *this;
    if (ring_->backend() == Backend::PAdic) {
        if (r.z_ != 0) r.z_ = ring_->ppow(prec_) - r.z_;
    } else {
        for (auto& c : r.tp_) c = c == 0 ? 0 : ring_->p() - c;
    }
    return r;
}

Elem operator+(const Elem& a, const Elem& b) {
    check_same_ring(a.ring(), b.ring(), "elem add");
    Elem r(a.ring(), std::min(a.abs_prec(), b.abs_prec()));
    if (r.ring_->backend() == Backend::PAdic) {
        r.z_ = a.rep() + b.rep();
    } else {
        for (size_t i = 0; i < r.tp_.size(); ++i) r.tp_[i] = a.coeffs()[i] + b.coeffs()[i];
    }
    r.reduce();
    return r;
}

Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }

Elem operator*(const Elem& a, const Elem& b) {
    check_same_ring(a.ring(), b.ring(), "elem mul");
    // abs_prec = min(prec(a) + v(b), prec(b) + v(a), cap), valuations read as
    // their certified lower bounds.
    int va = a.valuation().value, vb = b.valuation().value;
    int prec = std::min({a.abs_prec() + vb, b.abs_prec() + va, a.ring()->cap()});
    Elem r(a.ring(), prec);
    if (r.ring_->backend() == Backend::PAdic) {
        r.z_ = a.rep() * b.rep();
    } else {
        int64_t p = a.ring()->p();
        for (size_t i = 0; i < a.coeffs().size(); ++i) {
            if (a.coeffs()[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs().size(); ++j) {
                size_t k = i + j;
                if (k >= r.tp_.size()) break;
                r.tp_[k] = (r.tp_[k] + a.coeffs()[i] * b.coeffs()[j]) % p;
            }
        }
    }
    r.reduce();
    return r;
}

bool operator==(const Elem& a, const Elem& b) {
    if (!a.ring_ || !b.ring_ || !a.ring_->same(*b.ring_)) return false;
    if (a.prec_ != b.prec_) return false;
    return a.ring_->backend() == Backend::PAdic ? a.z_ == b.z_ : a.tp_ == b.tp_;
}

Elem invert_unit(const Elem& b) {
    if (!b.is_unit()) raise(errc::internal_error, "invert_unit: not a unit");
    Elem r(b.ring(), b.abs_prec());
    if (b.ring()->backend() == Backend::PAdic) {
        r.z_ = mod_inverse(b.rep(), b.ring()->ppow(b.abs_prec()));
    } else {
        // power series inversion: c0 = b0^-1, c_m = -b0^-1 sum b_i c_{m-i}
        int64_t p = b.ring()->p();
        int64_t inv0 = fp_inverse(b.coeffs()[0], p);
        r.tp_[0] = inv0;
        for (size_t m = 1; m < r.tp_.size(); ++m) {
            int64_t acc = 0;
            for (size_t i = 1; i <= m; ++i)
                acc = (acc + b.coeffs()[i] * r.tp_[m - i]) % p;
            r.tp_[m] = (p - (acc * inv0) % p) % p;
        }
    }
    return r;
}

Elem divide_exact(const Elem& a, const Elem& b) {
    check_same_ring(a.ring(), b.ring(), "divide_exact");
    Valuation vb = b.valuation();
    if (!vb.exact)
        raise(errc::indeterminate_divisor,
              "divide_exact: divisor valuation not certified (" + b.to_string() + ")");
    int w = vb.value;
    if (a.valuation().value < w)
        raise(errc::division_by_higher_valuation,
              "divide_exact: divisor valuation " + std::to_string(w) + " exceeds certified dividend valuation " +
                  a.valuation().to_string());
    int prec = std::min(a.abs_prec(), b.abs_prec()) - w;
    Elem r(a.ring(), prec);
    if (a.ring()->backend() == Backend::PAdic) {
        BigInt ashift = a.rep() / a.ring()->ppow(w);
        BigInt ushift = b.rep() / a.ring()->ppow(w);
        r.z_ = ashift * mod_inverse(ushift, a.ring()->ppow(prec));
    } else {
        // strip t^w then multiply by the inverse of the unit part
        Elem unit(a.ring(), prec);
        Elem num(a.ring(), prec);
        for (int i = 0; i < prec; ++i) {
            unit.tp_[size_t(i)] = size_t(i + w) < b.coeffs().size() ? b.coeffs()[size_t(i + w)] : 0;
            num.tp_[size_t(i)] = size_t(i + w) < a.coeffs().size() ? a.coeffs()[size_t(i + w)] : 0;
        }
        if (prec > 0) r = num * invert_unit(unit);
    }
    r.reduce();
    return r;
}

Elem truncate_prec(const Elem& a, int prec) {
    if (prec < 0 || prec > a.abs_prec()) raise(errc::internal_error, "truncate_prec beyond certified digits");
    if (prec == a.abs_prec()) return a;
    Elem r = Elem::zero(a.ring(), prec) + a; // min-precision rule reduces the representative
    return r;
}

bool congruent_mod(const Elem& a, const Elem& b, int k) {
    check_same_ring(a.ring(), b.ring(), "congruent_mod");
    if (a.abs_prec() < k || b.abs_prec() < k)
        raise(errc::internal_error, "congruent_mod beyond certified precision");
    if (a.ring()->backend() == Backend::PAdic) return a.rep() % a.ring()->ppow(k) == b.rep() % a.ring()->ppow(k);
    for (int i = 0; i < k; ++i)
        if (a.coeffs()[size_t(i)] != b.coeffs()[size_t(i)]) return false;
    return true;
}

std::string Elem::to_string() const {
    std::ostringstream os;
    if (ring_->backend() == Backend::PAdic) {
        os << z_.str() << " mod " << ring_->p() << "^" << prec_;
        return os.str();
    }
    bool any = false;
    for (size_t i = 0; i < tp_.size(); ++i) {
        if (tp_[i] == 0) continue;
        if (any) os << " + ";
        any = true;
        if (i == 0) {
            os << tp_[i];
        } else {
            if (tp_[i] != 1) os << tp_[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (any) os << " + ";
    os << "O(t^" << prec_ << ")";
    return os.str();
}

Elem Elem::from_scalar(const Scalar& s, int prec) {
    Elem r(s.ring(), prec);
    if (s.ring()->backend() == Backend::PAdic) {
        r.z_ = s.int_value();
    } else {
        for (size_t i = 0; i < std::min(size_t(prec), s.tcoeffs().size()); ++i) r.tp_[i] = s.tcoeffs()[i];
    }
    r.reduce();
    return r;
}

Elem Elem::from_scalar(const Scalar& s) { return from_scalar(s, s.ring()->cap()); }

Elem Elem::from_int(const RingPtr& ring, int64_t v) { return from_scalar(Scalar(ring, v)); }

Elem Elem::zero(const RingPtr& ring, int prec) { return Elem(ring, prec); }

Elem Elem::zero(const RingPtr& ring) { return Elem(ring, ring->cap()); }

Elem Elem::one(const RingPtr& ring) { return from_int(ring, 1); }

std::string render_vector(const std::vector<Elem>& v) {
    if (v.size() == 1) return v[0].to_string();
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

} // namespace hensel
