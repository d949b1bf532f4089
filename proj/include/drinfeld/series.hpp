#pragma once

// Truncated power series over K with explicit precision.
//
// A TruncSeries of precision N knows the coefficients of t^0..t^N exactly and
// nothing beyond.  Every operation returns the precision it can prove.

#include <cstdint>
#include <optional>
#include <vector>

#include "drinfeld/rational.hpp"

namespace drinfeld {

class TruncSeries {
public:
    TruncSeries() = default;
    /// The zero series known to precision `prec`.
    TruncSeries(const Field& f, int prec);
    /// Coefficients beyond prec are dropped, missing ones are zero.
    TruncSeries(const Field& f, int prec, std::vector<RatK> coeffs);

    static TruncSeries one(const Field& f, int prec) { return constant(RatK::one(f), prec); }
    static TruncSeries constant(const RatK& c, int prec);
    /// c * t^k
    static TruncSeries monomial(const RatK& c, int k, int prec);

    const Field& field() const { return *f_; }
    const Field* field_ptr() const noexcept { return f_; }
    int prec() const noexcept { return prec_; }
    const RatK& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const std::vector<RatK>& coeffs() const noexcept { return c_; }
    void set(int i, RatK v) { c_.at(static_cast<std::size_t>(i)) = std::move(v); }

    /// Least i with a nonzero coefficient, prec()+1 if none is visible.
    int order() const noexcept;
    bool is_zero() const noexcept { return order() > prec_; }
    /// All coefficients lie in A.
    bool integral() const noexcept;
    TruncSeries truncated(int prec) const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    /// Exact truncated product at precision min(prec(a), prec(b)).
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scaled(const RatK& c) const;
    /// Multiplication by t^k; precision grows by k.
    TruncSeries shifted(int k) const;
    /// Power; p-power factors go through the Frobenius shortcut.
    TruncSeries pow(std::uint64_t n) const;
    /// (sum c_i t^i)^p = sum c_i^p t^{ip}, precision p(N+1)-1.
    TruncSeries frobenius_p() const;
    /// Multiplicative inverse; throws std::domain_error for a zero constant term.
    TruncSeries inverse() const;
    /// outer(inner(t)); throws std::domain_error if inner has a constant term.
    TruncSeries compose(const TruncSeries& inner) const;
    /// r with r^q = *this; throws std::domain_error naming the offending
    /// exponent when the series is not a q-th power.
    TruncSeries qth_root() const;
    /// *this / b for order(b) <= order(*this); precision drops by order(b).
    TruncSeries divide_exact(const TruncSeries& b) const;

    /// Equality of the coefficients both series know.
    bool agrees_with(const TruncSeries& o) const;
    /// First exponent where the known coefficients differ.
    std::optional<int> first_difference(const TruncSeries& o) const;
    /// Same precision and coefficients.
    bool identical(const TruncSeries& o) const { return prec_ == o.prec_ && c_ == o.c_; }

private:
    const Field* f_ = nullptr;
    int prec_ = -1;
    std::vector<RatK> c_;  // size prec_+1
};

/// Least common multiple of the coefficient denominators.
PolyA common_denominator(const TruncSeries& s);
/// Multiply every coefficient by the polynomial d (used to clear denominators).
TruncSeries scale_by_poly(const TruncSeries& s, const PolyA& d);

/// w^lead * body, body a power series with nonzero constant term (or zero).
class LaurentSeries {
public:
    LaurentSeries(int lead, TruncSeries body);
    int lead() const noexcept { return lead_; }
    const TruncSeries& body() const noexcept { return body_; }
    /// Highest exponent whose coefficient is known.
    int top() const noexcept { return lead_ + body_.prec(); }
    /// Coefficient of w^e; throws std::out_of_range when e > top().
    RatK coeff(int e) const;
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries pow(std::uint64_t n) const;

private:
    int lead_;
    TruncSeries body_;
};

}  // namespace drinfeld
