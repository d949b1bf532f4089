#include <gtest/gtest.h>

#include <random>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/forms.hpp"
#include "drinfeld/io.hpp"

using namespace drinfeld;

namespace {

const Field& F3() { return Field::create(3, 1); }
PolyA P(const char* s) { return parse_poly(F3(), s); }
RatK K(const char* s) { return parse_ratk(F3(), s); }

bool same(const TruncSeries& a, const TruncSeries& b, int N) {
    return a.prec() >= N && b.prec() >= N && a.truncated(N).identical(b.truncated(N));
}

// Term-by-term oracle: c0 + sum_a c_a G_n(t_a) with t_a from the Carlitz module.
TruncSeries expand_oracle(const AExpansion& ax, int N) {
    const Field& f = ax.field();
    const GossTable g = period_goss_table(f, ax.n());
    TruncSeries s = TruncSeries::constant(ax.c0(), N);
    for (const auto& [a, c] : ax.coeffs()) {
        const TruncSeries ta = t_sub(a, N);
        TruncSeries term(f, N), pw = TruncSeries::one(f, N);
        for (int j = 1; j <= ax.n(); ++j) {
            pw = pw * ta;
            const TruncSeries& G = g.G(ax.n());
            if (j <= G.prec() && !G[j].is_zero()) term += pw.scaled(G[j]);
        }
        s += term.scaled(c);
    }
    return s;
}

}  // namespace

TEST(Forms, ExpandExamples) {
    const Field& f = F3();
    AExpansion cubes = AExpansion::from_function(f, 1, RatK::zero(f), 1, [](const PolyA& a) { return RatK(a.pow(3)); });
    const TruncSeries s = expand(cubes, 4);
    EXPECT_EQ(s[1], K("1"));
    EXPECT_EQ(s[3], K("0"));
    AExpansion one(f, 1, RatK::zero(f), 2);
    one.set(P("1"), RatK::one(f));
    EXPECT_TRUE(expand(one, 12).identical(TruncSeries::monomial(RatK::one(f), 1, 12)));
    EXPECT_THROW(expand(AExpansion(f, 1, RatK::zero(f), 1), 20), std::invalid_argument);
    EXPECT_THROW(one.set(P("2*T"), RatK::one(f)), std::invalid_argument);
}

TEST(Forms, ExpandMatchesTermByTermOracle) {
    const Field& f = F3();
    for (int n : {1, 2, 4, 5, 7}) {
        const int N = 40;
        const AExpansion ax = AExpansion::from_function(f, n, K("T"), degree_cutoff(f, N),
                                                        [](const PolyA& a) { return RatK(a.pow(2) + PolyA::T(a.field()), a + PolyA::one(a.field()) ); });
        EXPECT_TRUE(expand(ax, N).identical(expand_oracle(ax, N))) << "n=" << n;
    }
}

TEST(Forms, ThetaScaling) {
    // G_n(t_{theta a}) = theta^{-n} G_n(t_a): t_{2a} = 2^{-1} t_a over F_3.
    const Field& f = F3();
    const GossTable table = period_goss_table(f, 4);
    for (const auto& a : monic_enum(f, 2)) {
        const TruncSeries ta = t_sub(a, 30);
        const RhoCoeffs r = rho(a.scaled(2));
        EXPECT_EQ(r.l.front(), a.scaled(2));
        // rho_{2a} = 2 rho_a, so t_{2a} = 1/(2 rho_a(1/t)) = 2 t_a
        for (int n = 1; n <= 4; ++n) {
            const TruncSeries& G = table.G(n);
            TruncSeries lhs(f, 30), rhs(f, 30), pw = TruncSeries::one(f, 30), pw2 = TruncSeries::one(f, 30);
            for (int j = 1; j <= n; ++j) {
                pw = pw * ta.scaled(RatK::constant(f, 2));
                pw2 = pw2 * ta;
                lhs += pw.scaled(G[j]);
                rhs += pw2.scaled(G[j]);
            }
            EXPECT_TRUE(lhs.identical(rhs.scaled(RatK::constant(f, f.pow(f.inv(2), n))))) << n;
        }
    }
}

TEST(Forms, NamedFormsBasics) {
    const Field& f = F3();
    const ModularForm h = h_form(f, 40);
    EXPECT_EQ(h.k, 4);
    EXPECT_EQ(h.m, 1);
    EXPECT_EQ(h.series.order(), 1);
    EXPECT_EQ(h.series[1], K("1"));
    EXPECT_TRUE(h.series.identical(f_kn(f, 4, 1, 40).series));
    EXPECT_TRUE(h.series.identical(f_s(f, 0, 40).series));
    EXPECT_TRUE(h.series.identical(F_nu(f, 1, 40).series));
    const ModularForm d = Delta_form(f, 40);
    EXPECT_EQ(d.k, 8);
    EXPECT_EQ(d.m, 0);
    EXPECT_TRUE(d.double_cuspidal());
    EXPECT_TRUE(d.series.identical(f_kn(f, 8, 2, 40).series));
    EXPECT_THROW(f_kn(f, 4, 2, 10), HypothesisError);
    const ModularForm f82 = f_kn(f, 8, 2, 30);
    EXPECT_EQ(f82.m, 0);
    EXPECT_TRUE(false_eisenstein(f, 10).quasi);
    EXPECT_TRUE(F_knl(f, 4, 1, 2, 40).series.identical(F_nu(f, 3, 40).series));
}

TEST(Forms, SingleCuspidalFamilies) {
    const Field& f = F3();
    for (int k : {4, 6, 8, 10, 12, 16}) {
        const ModularForm x = f_kn(f, k, 1, 30);
        EXPECT_EQ(x.series[1], K("1")) << k;
        EXPECT_TRUE(x.cuspidal());
        EXPECT_FALSE(x.double_cuspidal());
    }
}

TEST(Forms, Grading) {
    const Field& f = F3();
    const ModularForm h = h_form(f, 20), g = g_form(f, 20), d = Delta_form(f, 20);
    const ModularForm hg = h * g;
    EXPECT_EQ(hg.k, 6);
    EXPECT_EQ(hg.m, 1);
    const ModularForm hh = h * h;
    EXPECT_EQ(hh.k, 8);
    EXPECT_EQ(hh.m, 0);
    EXPECT_TRUE(hh.series.identical(d.series));
    EXPECT_EQ((d * g).k, 10);
    EXPECT_EQ(pow(h, 3).m, 1);
}

TEST(Forms, EisensteinG) {
    const Field& f = F3();
    EXPECT_EQ(delta_k(f, 2), RatK(PolyA::one(f), bracket(f, 1)));
    EXPECT_THROW(delta_k(f, 3), std::invalid_argument);
    const ModularForm g = g_form(f, 60);
    EXPECT_EQ(g.k, 2);
    EXPECT_EQ(g.series[0], K("1"));
    EXPECT_EQ(g.series[2], -RatK(bracket(f, 1)));
    const TruncSeries F2 = F_nu(f, 2, 60).series;
    EXPECT_TRUE(same(F2, h_form(f, 60).series * g.series.pow(3), 60));
    for (int k : {2, 4, 8}) EXPECT_EQ(eisenstein_g(f, k, 10).series[0], K("1"));
}

TEST(Forms, GhExpress) {
    const Field& f = F3();
    const GhResult d = gh_express(Delta_form(f, 40));
    ASSERT_TRUE(d.in_span);
    ASSERT_EQ(d.terms.size(), 1u);
    EXPECT_EQ(d.terms[0].i, 0);
    EXPECT_EQ(d.terms[0].j, 2);
    EXPECT_EQ(d.terms[0].coeff, K("1"));
    const GhResult f3 = gh_express(F_nu(f, 3, 60));
    ASSERT_TRUE(f3.in_span);
    ASSERT_EQ(f3.terms.size(), 2u);
    EXPECT_EQ(f3.terms[0].i, 12);
    EXPECT_EQ(f3.terms[0].j, 1);
    EXPECT_EQ(f3.terms[1].j, 7);
    EXPECT_EQ(f3.terms[1].coeff, -RatK(bracket(f, 1).pow(9)));
    EXPECT_THROW(gh_express(false_eisenstein(f, 30)), std::invalid_argument);
    const GhResult e = gh_express(false_eisenstein(f, 30), 10, true);
    EXPECT_FALSE(e.in_span);
    EXPECT_THROW(gh_express(F_nu(f, 3, 12)), PrecisionError);
    ModularForm perturbed = h_form(f, 30);
    perturbed.series.set(13, perturbed.series[13] + K("1"));
    const GhResult pr = gh_express(perturbed);
    EXPECT_FALSE(pr.in_span);
    EXPECT_EQ(pr.witness, 13);
    EXPECT_EQ(gh_basis(f, 12, 0).size(), 2u);  // g^6, g^2 h^2
}

TEST(Forms, Recover) {
    const Field& f = F3();
    const RecoveryResult h = aexp_recover(h_form(f, 100).series, 1, 2);
    ASSERT_EQ(h.status, RecoveryStatus::Recovered);
    for (int d = 0; d <= 2; ++d)
        for (const auto& a : monic_enum(f, d)) EXPECT_EQ(h.expansion->coeff(a), RatK(a.pow(3)));
    const RecoveryResult h2g2 = aexp_recover(gh_evaluate(f, {{2, 2, RatK::one(f)}}, 100), 4);
    EXPECT_EQ(h2g2.status, RecoveryStatus::Inconsistent);
    EXPECT_EQ(h2g2.witness, 12);
    const RecoveryResult under = aexp_recover(h_form(f, 20).series, 1, 2);
    EXPECT_EQ(under.status, RecoveryStatus::Underdetermined);
}

TEST(Forms, IotaT) {
    const Field& f = F3();
    AExpansion one(f, 1, RatK::zero(f), 1);
    one.set(P("1"), RatK::one(f));
    const AExpansion it = iota_T(one);
    EXPECT_EQ(it.max_degree(), 2);
    EXPECT_EQ(it.coeff(P("T")), K("1"));
    EXPECT_EQ(it.coeff(P("1")), K("0"));
    EXPECT_TRUE(expand(it, 20).identical(t_sub(P("T"), 20)));
}

TEST(Forms, NamedSpecs) {
    const Field& f = F3();
    EXPECT_THROW(named_form(f, "nope", 10), std::invalid_argument);
    EXPECT_THROW(named_form(f, "fkn:4", 10), std::invalid_argument);
    EXPECT_THROW(named_form(f, "fkn:4:x", 10), std::invalid_argument);
    EXPECT_THROW(named_form(f, "fkn:4:2", 10), HypothesisError);
    EXPECT_TRUE(named_form(f, "gh:0:2", 30).series.identical(Delta_form(f, 30).series));
    EXPECT_EQ(named_form(f, "gh:2:2", 10).k, 12);
    EXPECT_EQ(named_form(f, "gh:2:2", 10).m, 0);
    EXPECT_FALSE(named_expansion(f, "g", 2).has_value());
    EXPECT_EQ(named_expansion(f, "Delta", 2)->n(), 2);
    const ModularForm io = named_form(f, "iota:fkn:4:1", 30);
    EXPECT_TRUE(io.series.identical(expand(iota_T(f_kn_expansion(f, 4, 1, 2)), 30)));
}
