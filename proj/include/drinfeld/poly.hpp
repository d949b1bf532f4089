#pragma once

// The polynomial ring A = F_q[T].

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

class PolyA {
public:
    /// Detached zero; only useful as a placeholder before assignment.
    PolyA() = default;
    explicit PolyA(const Field& f) : f_(&f) {}
    PolyA(const Field& f, std::vector<fq_t> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

    static PolyA constant(const Field& f, fq_t c) { return PolyA(f, {c}); }
    static PolyA one(const Field& f) { return PolyA(f, {1}); }
    /// c * T^k
    static PolyA monomial(const Field& f, fq_t c, std::size_t k);
    static PolyA T(const Field& f) { return monomial(f, 1, 1); }
    /// Coefficients given as integers in the prime subfield, c_0 first.
    static PolyA from_ints(const Field& f, const std::vector<long long>& c);

    const Field& field() const { return *f_; }
    const Field* field_ptr() const noexcept { return f_; }
    bool attached() const noexcept { return f_ != nullptr; }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    fq_t lead() const noexcept { return c_.empty() ? fq_t{0} : c_.back(); }
    fq_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : fq_t{0}; }
    const std::vector<fq_t>& coeffs() const noexcept { return c_; }
    /// Exponent of the lowest nonzero term; -1 for zero.
    int low_degree() const noexcept;

    PolyA operator-() const;
    PolyA& operator+=(const PolyA& o);
    PolyA& operator-=(const PolyA& o);
    PolyA& operator*=(const PolyA& o) { return *this = *this * o; }
    friend PolyA operator+(PolyA a, const PolyA& b) { return a += b; }
    friend PolyA operator-(PolyA a, const PolyA& b) { return a -= b; }
    friend PolyA operator*(const PolyA& a, const PolyA& b);

    PolyA scaled(fq_t c) const;
    /// Multiplication by T^k.
    PolyA shifted(std::size_t k) const;
    PolyA monic() const;
    PolyA pow(std::uint64_t n) const;
    /// f^p computed coefficientwise.
    PolyA frobenius_p() const;
    /// f^(p^j)
    PolyA frobenius_pow(int j) const;
    fq_t eval(fq_t x) const noexcept;
    /// Formal derivative.
    PolyA derivative() const;

    friend bool operator==(const PolyA& a, const PolyA& b) noexcept { return a.c_ == b.c_; }
    /// Canonical total order: by degree, then lexicographically on (c_0, c_1, ...)
    /// using the code order on F_q.
    friend std::strong_ordering operator<=>(const PolyA& a, const PolyA& b) noexcept;

    /// Rendering in the polynomial text syntax (see io.hpp).
    std::string to_string() const;

private:
    friend class PolyAccumulator;
    void trim() noexcept {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* f_ = nullptr;
    std::vector<fq_t> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<PolyA, PolyA> divmod(const PolyA& a, const PolyA& b);
PolyA operator/(const PolyA& a, const PolyA& b);
PolyA operator%(const PolyA& a, const PolyA& b);
/// Division that must be exact; throws std::domain_error otherwise.
PolyA div_exact(const PolyA& a, const PolyA& b);
bool divides(const PolyA& d, const PolyA& a);

/// Monic gcd (zero iff both inputs are zero).
PolyA gcd(PolyA a, PolyA b);
/// Monic lcm.
PolyA lcm(const PolyA& a, const PolyA& b);
/// Returns g with g^q = f, or throws std::domain_error if f is not a q-th power.
PolyA frobenius_root(const PolyA& f);
/// a^n mod m.
PolyA powmod(PolyA a, std::uint64_t n, const PolyA& m);
bool is_irreducible(const PolyA& f);

/// All monic polynomials of degree exactly d in canonical order.
std::vector<PolyA> monic_enum(const Field& f, int d);
/// All polynomials of degree < d (including 0), in canonical order.
std::vector<PolyA> poly_enum_below(const Field& f, int d);
/// Monic irreducibles of degree d in canonical order.
std::vector<PolyA> irreducible_enum(const Field& f, int d);
/// Monic irreducible factors of a squarefree-or-not f, by trial division against
/// enumerated irreducibles; each prime listed once.
std::vector<PolyA> prime_factors(const PolyA& f);

/// [i] = T^{q^i} - T
PolyA bracket(const Field& f, int i);
/// D_0 = 1, D_i = [i] D_{i-1}^q: the product of all monic polynomials of degree i.
PolyA carlitz_factorial(const Field& f, int i);

/// Exact power of the monic irreducible `prime` dividing nonzero a.
int valuation(const PolyA& a, const PolyA& prime);
/// Exponent of the prime p in the positive integer k.
int int_val_p(long long k, long long p);

/// Sum of products accumulated without intermediate reduction where the field
/// allows it.  Used for convolution-heavy inner loops.
class PolyAccumulator {
public:
    explicit PolyAccumulator(const Field& f) : f_(&f) {}
    void add(const PolyA& a);
    void add_product(const PolyA& a, const PolyA& b);
    /// Adds c * a.
    void add_scaled(const PolyA& a, fq_t c);
    PolyA take();
    bool empty() const noexcept { return wide_.empty() && narrow_.empty(); }

private:
    void reserve(std::size_t n);
    void normalize();
    const Field* f_;
    std::vector<std::uint64_t> wide_;  // prime field: unreduced integer sums
    std::vector<fq_t> narrow_;         // extension field: reduced sums
    std::uint64_t headroom_ = 0;       // bound on the largest accumulated value
};

}  // namespace drinfeld
