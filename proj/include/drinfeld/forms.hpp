#pragma once

// Drinfeld modular forms for GL_2(A) as graded truncated t-expansions, and the
// A-expansion engine  f = c_0 + sum_{a monic} c_a G_n(t_a).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/goss.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

struct ModularForm {
    int k = 0;         // weight
    int m = 0;         // type, reduced mod q-1
    TruncSeries series;
    bool quasi = false;  // quasi-modular (not an element of M_{k,m})

    int prec() const noexcept { return series.prec(); }
    bool cuspidal() const noexcept { return series.order() >= 1; }
    bool double_cuspidal() const noexcept { return series.order() >= 2; }
};

/// Product with weights added and types added mod q-1.
ModularForm operator*(const ModularForm& a, const ModularForm& b);
ModularForm pow(const ModularForm& f, std::uint64_t e);
/// Type reduced into 0..q-2.
int reduce_type(long long m, const Field& f);

class AExpansion {
public:
    AExpansion(const Field& f, int n, RatK c0, int max_degree);

    /// Coefficients c_a = fn(a) for every monic a of degree <= max_degree.
    static AExpansion from_function(const Field& f, int n, RatK c0, int max_degree,
                                    const std::function<RatK(const PolyA&)>& fn);

    const Field& field() const { return *f_; }
    int n() const noexcept { return n_; }
    const RatK& c0() const noexcept { return c0_; }
    /// All monic a with deg a <= max_degree() are covered; absent entries are zero.
    int max_degree() const noexcept { return d_; }
    const std::map<PolyA, RatK>& coeffs() const noexcept { return coeffs_; }
    /// c_a (zero if absent); throws std::invalid_argument for non-monic a and
    /// std::out_of_range beyond max_degree.
    RatK coeff(const PolyA& a) const;
    /// Sets c_a; same index rules as coeff().
    void set(const PolyA& a, RatK c);

    friend bool operator==(const AExpansion& x, const AExpansion& y) noexcept {
        return x.f_ == y.f_ && x.n_ == y.n_ && x.d_ == y.d_ && x.c0_ == y.c0_ && x.coeffs_ == y.coeffs_;
    }

private:
    const Field* f_;
    int n_;
    RatK c0_;
    int d_;
    std::map<PolyA, RatK> coeffs_;  // nonzero entries only
};

/// Largest d with q^d <= N.
int degree_cutoff(const Field& f, int prec);

/// c_0 + sum_{deg a <= floor(log_q N)} c_a G_n(t_a) at precision N.
/// Throws std::invalid_argument when the expansion does not cover the cutoff degree.
TruncSeries expand(const AExpansion& ax, int prec);

/// t_a from a process-wide cache.
TruncSeries cached_t_sub(const PolyA& a, int prec);
/// t_a^j through the sparse inverse of psi_a^j.
TruncSeries t_sub_power(const PolyA& a, int j, int prec);

// Named forms.  Precision arguments are t-adic precisions of the returned series.

/// sum_a a^{k-n} G_n(t_a); throws HypothesisError if (k, n) fails the existence hypothesis.
ModularForm f_kn(const Field& f, int k, int n, int prec);
AExpansion f_kn_expansion(const Field& f, int k, int n, int max_degree);
/// f_{q+1+s(q-1), 1}
ModularForm f_s(const Field& f, int s, int prec);
/// F_nu = sum a^{q^nu} t_a, nu >= 1.
ModularForm F_nu(const Field& f, int nu, int prec);
/// F_{k,n,l} = f_{(k-n) q^l + n, n}
ModularForm F_knl(const Field& f, int k, int n, int l, int prec);
ModularForm h_form(const Field& f, int prec);
/// Delta = sum a^{q(q-1)} t_a^{q-1}
ModularForm Delta_form(const Field& f, int prec);
/// E = sum a t_a, weight 2, type 1, flagged quasi-modular.
ModularForm false_eisenstein(const Field& f, int prec);

/// delta_k = [w^0] G_k(1/e_C(w)); requires (q-1) | k.
RatK delta_k(const Field& f, int k);
/// g_k = 1 - (1/delta_k) sum_a G_k(t_a)
ModularForm eisenstein_g(const Field& f, int k, int prec);
/// g = g_{q-1}
inline ModularForm g_form(const Field& f, int prec) { return eisenstein_g(f, f.q() - 1, prec); }

/// Coordinates of a form in the monomial basis g^i h^j of M_{k,m}.
struct GhTerm {
    int i;  // exponent of g
    int j;  // exponent of h
    RatK coeff;
};
struct GhResult {
    bool in_span = false;
    std::vector<GhTerm> terms;        // nonzero coordinates, increasing j
    std::optional<int> witness;       // first t-exponent that could not be matched
    int checked_prec = -1;
};
/// Monomials (i, j) with (q-1)i + (q+1)j = k and j = m mod (q-1), increasing j.
std::vector<std::pair<int, int>> gh_basis(const Field& f, int k, int m);
/// Throws PrecisionError when the series is too short to certify (max j + buffer);
/// quasi-modular inputs are rejected unless allow_quasi is set.
GhResult gh_express(const ModularForm& form, int buffer = 10, bool allow_quasi = false);
/// Evaluates sum coeff * g^i h^j at precision N.
TruncSeries gh_evaluate(const Field& f, const std::vector<GhTerm>& terms, int prec);

enum class RecoveryStatus { Recovered, Inconsistent, Underdetermined };
struct RecoveryResult {
    RecoveryStatus status = RecoveryStatus::Underdetermined;
    /// Determined part; max_degree() is the largest degree whose block is fully determined.
    std::optional<AExpansion> expansion;
    int determined_degree = -1;
    int rank = 0;      // rank of the coefficient system
    int unknowns = 0;  // c_0 and every c_a with deg a <= floor(log_q N)
    /// Every individually determined c_a, including those in partially determined blocks.
    std::map<PolyA, RatK> determined;
    /// Rows used and the t-exponent of the first inconsistent row if any.
    int rows = 0;
    std::optional<int> witness;
    std::string message;
};
/// Solves s = c_0 + sum c_a G_n(t_a) for the coefficients exactly.  Unknowns are
/// c_0 and c_a for deg a <= floor(log_q N); coefficients that the truncated system
/// pins down uniquely are reported, the largest fully determined degree block
/// bounding the returned expansion.  Recovered requires every block up to
/// target_degree (default floor(log_q N)) to be determined.
RecoveryResult aexp_recover(const TruncSeries& s, int n, int target_degree = -1);

/// c_a -> coefficient at aT, so the expansion evaluates f(Tz).
AExpansion iota_T(const AExpansion& ax);

}  // namespace drinfeld

namespace drinfeld {

/// Named-form specifications:
///   h | g | Delta | E | gk:K | fkn:K:N | fs:S | F:NU | Fknl:K:N:L | gh:I:J | iota:fkn:K:N
///   aexp:E:N   (sum a^E G_N(t_a) without the existence check; weight E + 2N)
/// Throws std::invalid_argument for unknown or malformed names.
ModularForm named_form(const Field& f, const std::string& spec, int prec);
/// The A-expansion behind a named form, when it has one (g_k and gh monomials
/// with j > 0 do not qualify).
std::optional<AExpansion> named_expansion(const Field& f, const std::string& spec, int max_degree);

}  // namespace drinfeld
