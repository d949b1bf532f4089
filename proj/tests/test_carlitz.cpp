#include <gtest/gtest.h>

#include <random>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/io.hpp"

using namespace drinfeld;

namespace {

const Field& F3() { return Field::create(3, 1); }
PolyA P(const char* s) { return parse_poly(F3(), s); }
RatK K(const char* s) { return parse_ratk(F3(), s); }

// t_a by the defining formula, independently: t_a = 1/rho_a(1/t) written as
// t^{q^d} / sum_i l_i t^{q^d - q^i}, inverted by the geometric series.
TruncSeries t_sub_oracle(const PolyA& a, int prec) {
    const Field& f = a.field();
    const RhoCoeffs r = rho(a);
    const int d = a.degree();
    long long qd = 1;
    for (int i = 0; i < d; ++i) qd *= f.q();
    TruncSeries den(f, prec);
    long long qi = 1;
    for (int i = 0; i <= d; ++i, qi *= f.q())
        if (qd - qi <= prec) den.set(static_cast<int>(qd - qi), RatK(r.l[i]));
    // den = 1 + u; 1/den = sum (-u)^j
    TruncSeries u = den;
    u.set(0, RatK::zero(f));
    TruncSeries inv = TruncSeries::one(f, prec), term = TruncSeries::one(f, prec);
    for (int j = 1; j <= prec; ++j) {
        term = term * (-u);
        inv += term;
    }
    return (inv.shifted(static_cast<int>(qd))).truncated(prec);
}

}  // namespace

TEST(Carlitz, RhoExamples) {
    const RhoCoeffs t = rho(P("T"));
    EXPECT_EQ(t.l, (std::vector<PolyA>{P("T"), P("1")}));
    EXPECT_EQ(rho(P("T^2")).l, (std::vector<PolyA>{P("T^2"), P("T^3+T"), P("1")}));
    EXPECT_EQ(rho(P("T+1")).l, (std::vector<PolyA>{P("T+1"), P("1")}));
    EXPECT_THROW(rho(PolyA(F3())), std::invalid_argument);
}

TEST(Carlitz, RhoIsMultiplicative) {
    std::mt19937 rng(1);
    const auto all = poly_enum_below(F3(), 3);
    for (int i = 0; i < 25; ++i) {
        const PolyA a = all[std::uniform_int_distribution<std::size_t>(1, all.size() - 1)(rng)];
        const PolyA b = all[std::uniform_int_distribution<std::size_t>(1, all.size() - 1)(rng)];
        EXPECT_EQ(compose_linearized(rho(a).l, rho(b).l), rho(a * b).l);
        const RhoCoeffs r = rho(a);
        EXPECT_EQ(r.l.front(), a);
        EXPECT_EQ(r.l.back(), PolyA::constant(F3(), a.lead()));
    }
}

TEST(Carlitz, TSubExamples) {
    EXPECT_TRUE(t_sub(P("1"), 10).identical(TruncSeries::monomial(RatK::one(F3()), 1, 10)));
    const TruncSeries tT = t_sub(P("T"), 9);
    std::vector<RatK> expect(10, RatK::zero(F3()));
    expect[3] = K("1");
    expect[5] = K("-T");
    expect[7] = K("T^2");
    expect[9] = K("-T^3");
    EXPECT_TRUE(tT.identical(TruncSeries(F3(), 9, expect)));
    EXPECT_THROW(t_sub(P("2*T"), 5), std::invalid_argument);
}

TEST(Carlitz, TSubMatchesTermByTermOracle) {
    for (int d = 0; d <= 3; ++d)
        for (const auto& a : monic_enum(F3(), d)) {
            const TruncSeries ta = t_sub(a, 60);
            EXPECT_TRUE(ta.identical(t_sub_oracle(a, 60))) << a.to_string();
            long long qd = 1;
            for (int i = 0; i < d; ++i) qd *= 3;
            EXPECT_EQ(ta.order(), qd);
            EXPECT_TRUE((psi_series(a, 60) * ta).identical(TruncSeries::monomial(RatK::one(F3()), static_cast<int>(qd), 60)));
        }
}

TEST(Carlitz, Psi) {
    EXPECT_EQ(psi(P("1")), std::vector<PolyA>{P("1")});
    EXPECT_EQ(psi(P("T")), (std::vector<PolyA>{P("1"), P("0"), P("T")}));
    for (const auto& a : monic_enum(F3(), 2)) EXPECT_EQ(psi(a).front(), P("1"));
}

TEST(Carlitz, ExponentialAndInverse) {
    const CarlitzExpData e = carlitz_exp(F3(), 3);
    EXPECT_EQ(e.alpha[0], K("1"));
    EXPECT_EQ(e.alpha[1], K("1/(T^3-T)"));
    EXPECT_EQ(e.alpha[2], RatK(PolyA::one(F3()), carlitz_factorial(F3(), 2)));
    const LaurentSeries inv = inv_exp_laurent(F3(), 12);
    EXPECT_EQ(inv.lead(), -1);
    EXPECT_EQ(inv.coeff(-1), K("1"));
    EXPECT_EQ(inv.coeff(0), K("0"));
    EXPECT_EQ(inv.coeff(1), K("-1/(T^3-T)"));
    // e_C(w) * (1/e_C(w)) = 1 through the known range.
    std::vector<RatK> ec(static_cast<std::size_t>(inv.top() + 2), RatK::zero(F3()));
    long long qi = 1;
    for (int i = 0; i < static_cast<int>(e.alpha.size()) && qi - 1 < static_cast<long long>(ec.size()); ++i, qi *= 3)
        ec[static_cast<std::size_t>(qi - 1)] = e.alpha[static_cast<std::size_t>(i)];
    const LaurentSeries prod = LaurentSeries(1, TruncSeries(F3(), inv.top() + 1, ec)) * inv;
    for (int i = 0; i <= prod.top(); ++i) EXPECT_EQ(prod.coeff(i), i == 0 ? K("1") : K("0")) << i;
}

TEST(Carlitz, TorsionExponentialCoefficients) {
    EXPECT_EQ(torsion_exp_coeffs(P("T")), (std::vector<RatK>{K("1"), K("1/T")}));
    EXPECT_EQ(torsion_exp_coeffs(P("T+1")), (std::vector<RatK>{K("1"), K("1/(T+1)")}));
    const PolyA p = P("T^2+1");
    const RhoCoeffs r = rho(p);
    EXPECT_EQ(torsion_exp_coeffs(p), (std::vector<RatK>{K("1"), RatK(r.l[1], p), RatK(PolyA::one(F3()), p)}));
    EXPECT_THROW(torsion_exp_coeffs(P("T^2+2")), std::invalid_argument);
}
