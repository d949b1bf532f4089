#pragma once

// Verification battery: existence hypothesis, power sums, congruences and
// product identities.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drinfeld/forms.hpp"

namespace drinfeld {

struct HypothesisVerdict {
    bool ok = false;
    std::string reason;  // empty when ok
    /// (T-1)^n | (T^{k-n} - 1) over F_p, computed by polynomial division.
    bool divisibility = false;
};

/// k - 2n is a positive multiple of q-1 and n <= p^{v_p(k-n)}.
HypothesisVerdict expansion_hypothesis(const Field& f, int k, int n);

/// S_{r,d} = sum of a^r over all a with deg a < d (brute force).
PolyA power_sum(const Field& f, int r, int d);

struct PowerSumReport {
    int r = 0;
    int dmax = 0;
    /// table[j-1][d-1] = S_{j,d}
    std::vector<std::vector<PolyA>> table;
    /// Least d <= dmax with S_{j,d} = 0 for all 1 <= j <= r.
    std::optional<int> d_r;
};
PowerSumReport min_d(const Field& f, int r, int dmax);

/// base^exponent with base squarefree.
class Modulus {
public:
    /// Throws std::invalid_argument unless base is monic, squarefree, nonconstant and exponent >= 1.
    Modulus(PolyA base, int exponent);
    const PolyA& base() const noexcept { return base_; }
    int exponent() const noexcept { return exponent_; }
    const std::vector<PolyA>& prime_factors() const noexcept { return primes_; }
    std::string to_string() const;

private:
    PolyA base_;
    int exponent_;
    std::vector<PolyA> primes_;
};

struct CongruenceResult {
    bool holds = false;
    int checked_prec = -1;
    /// First t-exponent where some prime factor has valuation below the exponent.
    std::optional<int> witness;
    std::optional<PolyA> witness_prime;
    int witness_valuation = 0;
};
/// Coefficientwise v_P(sA - sB) >= M for every prime factor P.  Throws
/// std::domain_error when a coefficient of either series has a pole at P.
CongruenceResult congruent_mod(const TruncSeries& a, const TruncSeries& b, const Modulus& mod);

/// Exponent q^nu p^{nu0}, nu0 = v_p(k-n), of the family congruence.
long long family_congruence_exponent(const Field& f, int k, int n, int nu);

struct ProductCheck {
    bool holds = false;
    int prec = 0;
    std::optional<int> witness;
};
/// prod expand(lhs_i) == expand(rhs) at precision N.  Throws std::invalid_argument
/// when the exponents do not add up.
ProductCheck product_identity_check(const std::vector<AExpansion>& lhs, const AExpansion& rhs, int prec);

struct Range {
    int lo = 0;
    int hi = -1;  // inclusive; empty when hi < lo
    bool empty() const noexcept { return hi < lo; }
};
struct SearchOptions {
    Range n;         // Goss indices n, n'
    Range l;         // Frobenius twists l, l'
    Range k_extra;   // u in k = 2n + u(q-1) for each factor
    int prec = 40;
    int phi_nu_max = 0;  // probe Phi_{nu,j} for nu <= this (0 disables)
};
/// Report: {"format":1, "entries":[{check, parameters, verdict, witness}]}
nlohmann::json search_products(const Field& f, const SearchOptions& opt);

}  // namespace drinfeld
