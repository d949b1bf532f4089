#pragma once

// Finite field F_q, q = p^e, with table-driven arithmetic.
//
// Elements are stored as their canonical code sum_i coords_i * p^i, where
// coords are the coordinates in the basis 1, a, ..., a^{e-1} and a is the
// class of the modulus variable.  Codes double as the canonical order on F_q.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drinfeld {

using fq_t = std::uint16_t;

class Field {
public:
    /// Interned field context.  Returns the same object for equal parameters,
    /// so `const Field*` identity is field identity.  Throws std::invalid_argument
    /// for a non-prime p, e < 1, q too large for the tables, or a modulus that is
    /// not monic irreducible of degree e.
    static const Field& create(int p, int e = 1, std::optional<std::vector<int>> modulus = std::nullopt);

    /// Convenience: q must be a prime power.
    static const Field& of_order(int q);

    int p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    int q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return e_ == 1; }

    /// Modulus coefficients c_0..c_e over F_p (monic); empty for prime fields.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    fq_t add(fq_t x, fq_t y) const noexcept { return add_[idx(x, y)]; }
    fq_t sub(fq_t x, fq_t y) const noexcept { return add_[idx(x, neg_[y])]; }
    fq_t neg(fq_t x) const noexcept { return neg_[x]; }
    fq_t mul(fq_t x, fq_t y) const noexcept { return mul_[idx(x, y)]; }
    fq_t inv(fq_t x) const;
    fq_t div(fq_t x, fq_t y) const { return mul(x, inv(y)); }
    fq_t pow(fq_t x, std::uint64_t n) const noexcept;
    /// x^p
    fq_t frob(fq_t x) const noexcept { return frob_[x]; }
    /// The unique y with y^p = x.
    fq_t frob_inv(fq_t x) const noexcept { return frob_inv_[x]; }

    /// Image of an integer in the prime subfield.
    fq_t from_int(long long n) const noexcept;
    std::vector<int> coords(fq_t x) const;
    fq_t from_coords(const std::vector<int>& c) const;
    /// The generator a of F_q over F_p (the class of the modulus variable); 1 when e = 1.
    fq_t gen() const noexcept { return e_ == 1 ? fq_t{1} : static_cast<fq_t>(p_); }

    /// Text of an element: integer for prime fields, polynomial in `a` otherwise.
    std::string to_string(fq_t x) const;
    /// Modulus as text in the variable `a`, empty string for prime fields.
    std::string modulus_string() const;

    bool operator==(const Field& o) const noexcept { return this == &o; }

private:
    Field(int p, int e, std::vector<int> modulus);
    std::size_t idx(fq_t x, fq_t y) const noexcept { return static_cast<std::size_t>(x) * q_ + y; }

    int p_;
    int e_;
    int q_;
    std::vector<int> modulus_;
    std::vector<fq_t> add_;
    std::vector<fq_t> mul_;
    std::vector<fq_t> neg_;
    std::vector<fq_t> inv_;
    std::vector<fq_t> frob_;
    std::vector<fq_t> frob_inv_;
};

bool is_prime(long long n) noexcept;

/// Irreducibility of a monic polynomial over F_p given by coefficients c_0..c_d.
bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p);

/// Lexicographically smallest monic irreducible of degree e over F_p, comparing
/// the tuples (c_{e-1}, ..., c_0).  Returns c_0..c_e.
std::vector<int> default_modulus(int p, int e);

}  // namespace drinfeld
