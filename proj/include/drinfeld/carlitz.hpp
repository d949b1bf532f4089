#pragma once

// The Carlitz module rho, the substitution series t_a, inverse cyclotomic
// polynomials, and exponential coefficients of the period and torsion lattices.
//
// Normalization: the uniformizer is t = 1/e_C(w) with e_C(w) = sum w^{q^i}/D_i,
// so t_a = 1/rho_a(1/t) and every coefficient lives in K.

#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/rational.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

/// rho_a(X) = sum_{i=0}^{deg a} l[i] X^{q^i}
struct RhoCoeffs {
    PolyA a;
    std::vector<PolyA> l;
};

/// Throws std::invalid_argument for a = 0.
RhoCoeffs rho(const PolyA& a);

/// Composition of q-linearized polynomials given by coefficient lists.
std::vector<PolyA> compose_linearized(const std::vector<PolyA>& outer, const std::vector<PolyA>& inner);

/// Coefficients of psi_a(X) = rho_a(1/X) X^{q^d}, indexed X^0..X^{q^d - 1}.
std::vector<PolyA> psi(const PolyA& a);
/// psi_a(t) as a series at precision N.
TruncSeries psi_series(const PolyA& a, int prec);

/// t_a = t^{q^d} / psi_a(t) at precision N.  Throws for non-monic a.
TruncSeries t_sub(const PolyA& a, int prec);

struct CarlitzExpData {
    int imax;
    std::vector<RatK> alpha;  // alpha_i = 1/D_i
};
CarlitzExpData carlitz_exp(const Field& f, int imax);

/// Exponential coefficients of the period lattice, enough to cover Goss
/// polynomials up to index nmax (all i with q^i <= nmax).
std::vector<RatK> period_alphas(const Field& f, int nmax);

/// 1/e_C(w) with known exponents -1 .. M-2.
LaurentSeries inv_exp_laurent(const Field& f, int m);

/// alpha_i = l_i(P)/P, i = 0..deg P: the normalized exponential rho_P(X)/P of
/// the lattice ker rho_P.  Throws for reducible or non-monic P.
std::vector<RatK> torsion_exp_coeffs(const PolyA& prime);

}  // namespace drinfeld
