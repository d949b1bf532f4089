#pragma once

// Hecke operators T_P on truncated t-expansions:
//   T_P f = P^k f(Pz) + sum_{deg b < deg P} f((z+b)/P)
//         = P^k sum a_n t_P^n + sum_{n>=1} a_n G_{n,P}(P t)
// where G_{n,P} are the Goss polynomials of the lattice ker rho_P.

#include <optional>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/forms.hpp"

namespace drinfeld {

/// H_n(t) = G_{n,P}(P t) for 1 <= n <= nmax, truncated at t-precision prec.
/// Computed from H_1 = P t, H_n = t (P H_{n-1} + sum_{i>=1} l_i(P) H_{n-q^i}),
/// which keeps every coefficient in A.
class TorsionTable {
public:
    TorsionTable(const PolyA& prime, int nmax, int prec);
    const PolyA& prime() const noexcept { return prime_; }
    int nmax() const noexcept { return nmax_; }
    int prec() const noexcept { return prec_; }
    /// Coefficients of H_n at t^0..t^prec; throws std::out_of_range outside 1..nmax.
    const std::vector<PolyA>& H(int n) const;

private:
    PolyA prime_;
    int nmax_;
    int prec_;
    std::vector<std::vector<PolyA>> h_;
};

/// Shared table covering at least (nmax, prec).
const TorsionTable& shared_torsion_table(const PolyA& prime, int nmax, int prec);

/// Output precision floor(prec(f) / q^deg P) by default.  Asking for more than
/// the input supports throws PrecisionError carrying the required input precision.
/// Throws std::invalid_argument unless P is monic irreducible.
ModularForm hecke_apply(const ModularForm& f, const PolyA& prime, int out_prec = -1);

struct EigenResult {
    bool eigen = false;
    std::optional<RatK> lambda;   // set when eigen
    std::optional<int> witness;   // first exponent where T_P f != lambda f
    int prec = -1;                // precision of the comparison
};
/// Throws std::domain_error when f vanishes at the output precision.
EigenResult eigen_solve(const ModularForm& f, const PolyA& prime, int out_prec = -1);

/// Least j in 0..jmax with lambda = P^j.
std::optional<int> as_prime_power(const RatK& lambda, const PolyA& prime, int jmax);

}  // namespace drinfeld
