#pragma once

// Goss polynomials of a lattice given by its exponential coefficients.
//
// For e(z) = sum_i alpha_i z^{q^i} (alpha_0 = 1) the Goss polynomials satisfy
//   G_1 = X,   G_n = X (G_{n-1} + sum_{i>=1} alpha_i G_{n-q^i})   (n >= 2)
// with G_m = 0 for m <= 0.  Polynomials are stored as series in X, optionally
// truncated at a fixed X-degree.

#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/rational.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

class GossTable {
public:
    /// Throws std::invalid_argument if alphas is empty, alphas[0] != 1 or nmax < 1.
    /// xprec < 0 keeps the polynomials exact (X-degree nmax).
    GossTable(const Field& f, std::vector<RatK> alphas, int nmax, int xprec = -1);

    const Field& field() const { return *f_; }
    const std::vector<RatK>& alphas() const noexcept { return alphas_; }
    int nmax() const noexcept { return nmax_; }
    /// X-degree the stored polynomials are known to.
    int xprec() const noexcept { return xprec_; }
    bool exact() const noexcept { return xprec_ >= nmax_; }
    /// G_n for 1 <= n <= nmax; throws std::out_of_range otherwise.
    const TruncSeries& G(int n) const;
    /// Largest i with alpha_i != 0 and q^i <= nmax.
    int dmax() const noexcept { return dmax_; }

private:
    const Field* f_;
    std::vector<RatK> alphas_;
    int nmax_;
    int xprec_;
    int dmax_ = 0;
    std::vector<TruncSeries> polys_;  // index n, polys_[0] unused
};

/// Table for the period lattice of the Carlitz exponential (alpha_i = 1/D_i).
GossTable period_goss_table(const Field& f, int nmax);
/// Table for ker rho_P (alpha_i = l_i(P)/P).
GossTable torsion_goss_table(const PolyA& prime, int nmax, int xprec = -1);

/// Exact X-adic order of G_n.
int goss_ord(int n, const GossTable& table);
/// G_n * G_m == G_{n+m} as polynomials.  Requires an exact table with n + m <= nmax.
bool is_multiplicative_pair(int n, int m, const GossTable& table);

/// Shared period-lattice table, grown on demand (read-only once returned).
const GossTable& shared_period_table(const Field& f, int nmax);
/// Offers a precomputed exact period-lattice table to the shared store.
/// Throws std::invalid_argument if its alphas are not the period alphas.
void seed_period_table(GossTable table);

}  // namespace drinfeld
