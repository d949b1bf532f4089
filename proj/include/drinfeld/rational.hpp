#pragma once

// The rational function field K = F_q(T) in canonical form: coprime numerator
// and monic denominator, zero stored as 0/1.

#include <limits>
#include <string>

#include "drinfeld/poly.hpp"

namespace drinfeld {

class RatK {
public:
    RatK() = default;
    explicit RatK(const Field& f) : num_(f) {}
    RatK(PolyA num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor): A embeds in K
    /// num/den, canonicalized.  Throws std::domain_error for den = 0.
    RatK(PolyA num, PolyA den);

    static RatK zero(const Field& f) { return RatK(f); }
    static RatK one(const Field& f) { return RatK(PolyA::one(f)); }
    static RatK constant(const Field& f, fq_t c) { return RatK(PolyA::constant(f, c)); }

    const Field& field() const { return num_.field(); }
    const Field* field_ptr() const noexcept { return num_.field_ptr(); }
    const PolyA& num() const noexcept { return num_; }
    /// The denominator; 1 when integral.
    PolyA den() const { return integral() ? PolyA::one(num_.field()) : den_; }
    /// True iff the denominator is 1.
    bool integral() const noexcept { return den_.is_zero(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return integral() && num_.is_one(); }

    RatK operator-() const;
    RatK& operator+=(const RatK& o);
    RatK& operator-=(const RatK& o);
    RatK& operator*=(const RatK& o);
    RatK& operator/=(const RatK& o);
    friend RatK operator+(RatK a, const RatK& b) { return a += b; }
    friend RatK operator-(RatK a, const RatK& b) { return a -= b; }
    friend RatK operator*(RatK a, const RatK& b) { return a *= b; }
    friend RatK operator/(RatK a, const RatK& b) { return a /= b; }

    RatK inverse() const;
    /// Integer powers, negative allowed for nonzero values.
    RatK pow(long long n) const;
    /// x^p
    RatK frobenius_p() const;
    RatK scaled(fq_t c) const;

    friend bool operator==(const RatK& a, const RatK& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    PolyA num_;
    PolyA den_;  // empty means 1; otherwise monic of positive degree, coprime to num_
};

/// Valuation at a monic irreducible; INT_MAX for zero.
int valuation(const RatK& x, const PolyA& prime);
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// Returns r with r^q = x, throws std::domain_error if x is not a q-th power in K.
RatK frobenius_root(const RatK& x);

}  // namespace drinfeld
