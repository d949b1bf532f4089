#include "drinfeld/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drinfeld {

namespace {

void require_same(const TruncSeries& a, const TruncSeries& b) {
    if (a.field_ptr() != b.field_ptr()) throw std::invalid_argument("series over different fields");
}

std::vector<int> support(const TruncSeries& s, int upto) {
    std::vector<int> idx;
    for (int i = 0; i <= upto; ++i)
        if (!s[i].is_zero()) idx.push_back(i);
    return idx;
}

// Product of two integral series truncated at n.
std::vector<PolyA> mul_integral(const TruncSeries& a, const TruncSeries& b, int n) {
    const Field& f = a.field();
    const std::vector<int> ia = support(a, n);
    std::vector<char> nzb(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) nzb[j] = b[j].is_zero() ? 0 : 1;
    std::vector<PolyA> out(static_cast<std::size_t>(n) + 1, PolyA(f));
    PolyAccumulator acc(f);
    for (int m = 0; m <= n; ++m) {
        bool any = false;
        for (int i : ia) {
            if (i > m) break;
            if (!nzb[m - i]) continue;
            acc.add_product(a[i].num(), b[m - i].num());
            any = true;
        }
        if (any) out[m] = acc.take();
    }
    return out;
}

}  // namespace

TruncSeries::TruncSeries(const Field& f, int prec) : f_(&f), prec_(prec) {
    if (prec < 0) throw std::invalid_argument("series precision must be nonnegative");
    c_.assign(static_cast<std::size_t>(prec) + 1, RatK(f));
}

TruncSeries::TruncSeries(const Field& f, int prec, std::vector<RatK> coeffs) : TruncSeries(f, prec) {
    const std::size_t n = std::min(coeffs.size(), c_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs[i].field_ptr() && coeffs[i].field_ptr() != &f)
            throw std::invalid_argument("series coefficient over a different field");
        if (!coeffs[i].is_zero()) c_[i] = std::move(coeffs[i]);
    }
}

TruncSeries TruncSeries::constant(const RatK& c, int prec) {
    TruncSeries s(c.field(), prec);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(const RatK& c, int k, int prec) {
    TruncSeries s(c.field(), prec);
    if (k >= 0 && k <= prec) s.c_[k] = c;
    return s;
}

int TruncSeries::order() const noexcept {
    for (int i = 0; i <= prec_; ++i)
        if (!c_[i].is_zero()) return i;
    return prec_ + 1;
}

bool TruncSeries::integral() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](const RatK& c) { return c.integral(); });
}

TruncSeries TruncSeries::truncated(int prec) const {
    if (prec > prec_) throw std::invalid_argument("cannot raise precision by truncation");
    TruncSeries r(*f_, prec);
    std::copy(c_.begin(), c_.begin() + prec + 1, r.c_.begin());
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    require_same(*this, o);
    if (o.prec_ < prec_) {
        prec_ = o.prec_;
        c_.resize(static_cast<std::size_t>(prec_) + 1);
    }
    for (int i = 0; i <= prec_; ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

PolyA common_denominator(const TruncSeries& s) {
    PolyA l = PolyA::one(s.field());
    for (const auto& c : s.coeffs()) {
        if (c.integral()) continue;
        const PolyA d = c.den();
        if (divides(d, l)) continue;
        l = lcm(l, d);
    }
    return l;
}

TruncSeries scale_by_poly(const TruncSeries& s, const PolyA& d) {
    TruncSeries r(s.field(), s.prec());
    for (int i = 0; i <= s.prec(); ++i) {
        const RatK& c = s[i];
        if (c.is_zero()) continue;
        if (c.integral()) {
            r.set(i, RatK(c.num() * d));
        } else {
            const PolyA den = c.den();
            auto [quot, rem] = divmod(d, den);
            if (rem.is_zero())
                r.set(i, RatK(c.num() * quot));
            else
                r.set(i, c * RatK(d));
        }
    }
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    require_same(a, b);
    const Field& f = a.field();
    const int n = std::min(a.prec_, b.prec_);
    TruncSeries r(f, n);
    if (a.integral() && b.integral()) {
        auto prod = mul_integral(a, b, n);
        for (int m = 0; m <= n; ++m)
            if (!prod[m].is_zero()) r.c_[m] = RatK(std::move(prod[m]));
        return r;
    }
    const PolyA la = common_denominator(a.truncated(n));
    const PolyA lb = common_denominator(b.truncated(n));
    const PolyA den = la * lb;
    auto prod = mul_integral(scale_by_poly(a.truncated(n), la), scale_by_poly(b.truncated(n), lb), n);
    for (int m = 0; m <= n; ++m)
        if (!prod[m].is_zero()) r.c_[m] = RatK(std::move(prod[m]), den);
    return r;
}

TruncSeries TruncSeries::scaled(const RatK& c) const {
    TruncSeries r(*f_, prec_);
    if (c.is_zero()) return r;
    for (int i = 0; i <= prec_; ++i)
        if (!c_[i].is_zero()) r.c_[i] = c_[i] * c;
    return r;
}

TruncSeries TruncSeries::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    TruncSeries r(*f_, prec_ + k);
    for (int i = 0; i <= prec_; ++i) r.c_[i + k] = c_[i];
    return r;
}

TruncSeries TruncSeries::frobenius_p() const {
    const int p = f_->p();
    TruncSeries r(*f_, p * (prec_ + 1) - 1);
    for (int i = 0; i <= prec_; ++i)
        if (!c_[i].is_zero()) r.c_[static_cast<std::size_t>(i) * p] = c_[i].frobenius_p();
    return r;
}

TruncSeries TruncSeries::pow(std::uint64_t n) const {
    if (n == 0) return one(*f_, prec_);
    TruncSeries base = *this;
    const auto p = static_cast<std::uint64_t>(f_->p());
    while (n % p == 0) {
        base = base.frobenius_p();
        n /= p;
    }
    std::optional<TruncSeries> result;
    while (true) {
        if (n & 1) result = result ? *result * base : base;
        n >>= 1;
        if (!n) break;
        base = base * base;
    }
    return *result;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series inverse: constant term is zero");
    TruncSeries r(*f_, prec_);
    const RatK& a0 = c_[0];
    if (integral() && a0.num().is_constant()) {
        const fq_t inv0 = f_->inv(a0.num().lead());
        const fq_t minus_inv0 = f_->neg(inv0);
        const std::vector<int> ia = support(*this, prec_);
        std::vector<PolyA> b(static_cast<std::size_t>(prec_) + 1, PolyA(*f_));
        b[0] = PolyA::constant(*f_, inv0);
        PolyAccumulator acc(*f_);
        for (int m = 1; m <= prec_; ++m) {
            for (int i : ia) {
                if (i == 0) continue;
                if (i > m) break;
                if (!b[m - i].is_zero()) acc.add_product(c_[i].num(), b[m - i]);
            }
            b[m] = acc.take().scaled(minus_inv0);
        }
        for (int m = 0; m <= prec_; ++m)
            if (!b[m].is_zero()) r.c_[m] = RatK(std::move(b[m]));
        return r;
    }
    const RatK inv0 = a0.inverse();
    r.c_[0] = inv0;
    for (int m = 1; m <= prec_; ++m) {
        RatK acc(*f_);
        for (int i = 1; i <= m; ++i)
            if (!c_[i].is_zero() && !r.c_[m - i].is_zero()) acc += c_[i] * r.c_[m - i];
        r.c_[m] = -(acc * inv0);
    }
    return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
    require_same(*this, inner);
    if (!inner[0].is_zero()) throw std::domain_error("compose: inner series has a nonzero constant term");
    const int ord = inner.order();
    const long long bound = static_cast<long long>(prec_) * ord;
    const int n = static_cast<int>(std::min<long long>(bound, inner.prec()));
    TruncSeries result = constant(c_[0], n);
    if (ord > n) return result;
    const TruncSeries in = inner.truncated(n);
    TruncSeries power = in;
    for (int j = 1; j <= prec_ && static_cast<long long>(j) * ord <= n; ++j) {
        if (j > 1) power = power * in;
        if (!c_[j].is_zero()) result += power.scaled(c_[j]);
    }
    return result;
}

TruncSeries TruncSeries::qth_root() const {
    const int q = f_->q();
    TruncSeries r(*f_, prec_ / q);
    for (int i = 0; i <= prec_; ++i) {
        if (c_[i].is_zero()) continue;
        if (i % q != 0)
            throw std::domain_error("qth_root: nonzero coefficient at exponent " + std::to_string(i) +
                                    " not divisible by q");
        if (i / q > r.prec_) continue;
        try {
            r.c_[i / q] = frobenius_root(c_[i]);
        } catch (const std::domain_error&) {
            throw std::domain_error("qth_root: coefficient at exponent " + std::to_string(i) +
                                    " is not a q-th power in K");
        }
    }
    return r;
}

TruncSeries TruncSeries::divide_exact(const TruncSeries& b) const {
    require_same(*this, b);
    const int ob = b.order();
    if (ob > b.prec_) throw std::domain_error("divide_exact: divisor is zero to its precision");
    if (order() < ob) throw std::domain_error("divide_exact: dividend order below divisor order");
    TruncSeries a2(*f_, prec_ - ob);
    for (int i = 0; i <= a2.prec_; ++i) a2.c_[i] = c_[i + ob];
    TruncSeries b2(*f_, b.prec_ - ob);
    for (int i = 0; i <= b2.prec_; ++i) b2.c_[i] = b.c_[i + ob];
    const int n = std::min(a2.prec_, b2.prec_);
    return a2.truncated(n) * b2.truncated(n).inverse();
}

std::optional<int> TruncSeries::first_difference(const TruncSeries& o) const {
    const int n = std::min(prec_, o.prec_);
    for (int i = 0; i <= n; ++i)
        if (!(c_[i] == o.c_[i])) return i;
    return std::nullopt;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
    require_same(*this, o);
    return !first_difference(o).has_value();
}

LaurentSeries::LaurentSeries(int lead, TruncSeries body) : lead_(lead), body_(std::move(body)) {
    const int ord = body_.order();
    if (ord > 0 && ord <= body_.prec()) {
        TruncSeries b(body_.field(), body_.prec() - ord);
        for (int i = 0; i <= b.prec(); ++i) b.set(i, body_[i + ord]);
        body_ = std::move(b);
        lead_ += ord;
    }
}

RatK LaurentSeries::coeff(int e) const {
    if (e > top()) throw std::out_of_range("Laurent coefficient beyond known precision");
    if (e < lead_) return RatK(body_.field());
    return body_[e - lead_];
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    return LaurentSeries(a.lead_ + b.lead_, a.body_ * b.body_);
}

LaurentSeries LaurentSeries::pow(std::uint64_t n) const {
    if (n == 0) return LaurentSeries(0, TruncSeries::one(body_.field(), body_.prec()));
    TruncSeries b = body_.pow(n);
    return LaurentSeries(lead_ * static_cast<int>(n), b.truncated(std::min(b.prec(), body_.prec())));
}

}  // namespace drinfeld
