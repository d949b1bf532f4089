#include "drinfeld/rational.hpp"

#include <stdexcept>

namespace drinfeld {

RatK::RatK(PolyA num, PolyA den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    const Field& f = den.field();
    if (num.is_zero()) {
        num_ = PolyA(f);
        return;
    }
    if (den.is_constant()) {
        num_ = num.scaled(f.inv(den.lead()));
        return;
    }
    PolyA g = gcd(num, den);
    if (!g.is_one()) {
        num = div_exact(num, g);
        den = div_exact(den, g);
    }
    const fq_t lead = den.lead();
    if (lead != 1) {
        const fq_t inv = f.inv(lead);
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    num_ = std::move(num);
    if (!den.is_one()) den_ = std::move(den);
}

RatK RatK::operator-() const {
    RatK r = *this;
    r.num_ = -r.num_;
    return r;
}

RatK& RatK::operator+=(const RatK& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (integral() && o.integral()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        // same denominator: only the new numerator can share factors with it
        *this = RatK(num_ + o.num_, den_);
        return *this;
    }
    const PolyA d1 = den();
    const PolyA d2 = o.den();
    const PolyA g = gcd(d1, d2);
    const PolyA d1g = div_exact(d1, g);
    const PolyA d2g = div_exact(d2, g);
    *this = RatK(num_ * d2g + o.num_ * d1g, d1g * d2);
    return *this;
}

RatK& RatK::operator-=(const RatK& o) { return *this += -o; }

RatK& RatK::operator*=(const RatK& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatK(PolyA(num_.field()));
    if (integral() && o.integral()) {
        num_ *= o.num_;
        return *this;
    }
    // cross-cancel so the product is already reduced
    PolyA n1 = num_, d1 = den(), n2 = o.num_, d2 = o.den();
    if (!d2.is_one()) {
        PolyA g = gcd(n1, d2);
        if (!g.is_one()) {
            n1 = div_exact(n1, g);
            d2 = div_exact(d2, g);
        }
    }
    if (!d1.is_one()) {
        PolyA g = gcd(n2, d1);
        if (!g.is_one()) {
            n2 = div_exact(n2, g);
            d1 = div_exact(d1, g);
        }
    }
    PolyA num = n1 * n2;
    PolyA den = d1 * d2;
    const fq_t lead = den.lead();
    if (lead != 1) {
        const fq_t inv = den.field().inv(lead);
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    num_ = std::move(num);
    den_ = den.is_one() ? PolyA() : std::move(den);
    return *this;
}

RatK& RatK::operator/=(const RatK& o) { return *this *= o.inverse(); }

RatK RatK::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in K");
    return RatK(den(), num_);
}

RatK RatK::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    RatK r;
    r.num_ = num_.pow(static_cast<std::uint64_t>(n));
    if (!integral()) {
        PolyA d = den_.pow(static_cast<std::uint64_t>(n));
        if (!d.is_one()) r.den_ = std::move(d);
    }
    return r;
}

RatK RatK::frobenius_p() const {
    RatK r;
    r.num_ = num_.frobenius_p();
    if (!integral()) r.den_ = den_.frobenius_p();
    return r;
}

RatK RatK::scaled(fq_t c) const {
    if (c == 0) return RatK(num_.field());
    RatK r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

int valuation(const RatK& x, const PolyA& prime) {
    if (x.is_zero()) return kInfiniteValuation;
    if (x.integral()) return valuation(x.num(), prime);
    return valuation(x.num(), prime) - valuation(x.den(), prime);
}

RatK frobenius_root(const RatK& x) {
    if (x.integral()) return RatK(frobenius_root(x.num()));
    return RatK(frobenius_root(x.num()), frobenius_root(x.den()));
}

}  // namespace drinfeld
