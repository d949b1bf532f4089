#include "drinfeld/verify.hpp"

#include <stdexcept>
#include <string>

#include "drinfeld/goss.hpp"

namespace drinfeld {

using nlohmann::json;

HypothesisVerdict expansion_hypothesis(const Field& f, int k, int n) {
    HypothesisVerdict v;
    if (k < 1 || n < 1) {
        v.reason = "k and n must be positive";
        return v;
    }
    const int q = f.q();
    const int p = f.p();
    if (k - n >= 1) {
        // (T-1)^n | T^{k-n} - 1 over F_p
        const Field& fp = Field::create(p, 1);
        const PolyA lhs = PolyA::from_ints(fp, {-1, 1}).pow(static_cast<std::uint64_t>(n));
        const PolyA rhs = PolyA::monomial(fp, 1, static_cast<std::size_t>(k - n)) - PolyA::one(fp);
        v.divisibility = divides(lhs, rhs);
    }
    if (k - 2 * n <= 0) {
        v.reason = "k - 2n = " + std::to_string(k - 2 * n) + " is not positive";
        return v;
    }
    if ((k - 2 * n) % (q - 1) != 0) {
        v.reason = "k - 2n = " + std::to_string(k - 2 * n) + " is not a multiple of q - 1 = " + std::to_string(q - 1);
        return v;
    }
    long long bound = 1;
    for (int i = int_val_p(k - n, p); i > 0 && bound < n; --i) bound *= p;
    if (n > bound) {
        v.reason = "n = " + std::to_string(n) + " exceeds p^{v_p(k-n)} = " + std::to_string(bound);
        return v;
    }
    v.ok = true;
    return v;
}

PolyA power_sum(const Field& f, int r, int d) {
    if (r < 1 || d < 1) throw std::invalid_argument("power_sum: r and d must be positive");
    PolyAccumulator acc(f);
    for (const auto& a : poly_enum_below(f, d)) acc.add(a.pow(static_cast<std::uint64_t>(r)));
    return acc.take();
}

PowerSumReport min_d(const Field& f, int r, int dmax) {
    if (r < 1 || dmax < 1) throw std::invalid_argument("min_d: r and dmax must be positive");
    PowerSumReport rep;
    rep.r = r;
    rep.dmax = dmax;
    rep.table.assign(static_cast<std::size_t>(r), std::vector<PolyA>(static_cast<std::size_t>(dmax), PolyA(f)));
    for (int d = 1; d <= dmax; ++d) {
        const auto elems = poly_enum_below(f, d);
        std::vector<PolyA> pw(elems.begin(), elems.end());
        for (int j = 1; j <= r; ++j) {
            PolyAccumulator acc(f);
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (j > 1) pw[i] = pw[i] * elems[i];
                acc.add(pw[i]);
            }
            rep.table[j - 1][d - 1] = acc.take();
        }
    }
    for (int d = 1; d <= dmax && !rep.d_r; ++d) {
        bool all_zero = true;
        for (int j = 1; j <= r && all_zero; ++j) all_zero = rep.table[j - 1][d - 1].is_zero();
        if (all_zero) rep.d_r = d;
    }
    return rep;
}

Modulus::Modulus(PolyA base, int exponent) : base_(std::move(base)), exponent_(exponent) {
    if (exponent_ < 1) throw std::invalid_argument("modulus exponent must be positive");
    if (!base_.is_monic() || base_.degree() < 1) throw std::invalid_argument("modulus base must be monic and nonconstant");
    primes_ = drinfeld::prime_factors(base_);
    PolyA prod = PolyA::one(base_.field());
    for (const auto& p : primes_) prod = prod * p;
    if (!(prod == base_)) throw std::invalid_argument("modulus base " + base_.to_string() + " is not squarefree");
}

std::string Modulus::to_string() const {
    const std::string b = base_.to_string();
    const std::string w = b.find('+') != std::string::npos ? "(" + b + ")" : b;
    return exponent_ == 1 ? w : w + "^" + std::to_string(exponent_);
}

CongruenceResult congruent_mod(const TruncSeries& a, const TruncSeries& b, const Modulus& mod) {
    if (a.field_ptr() != b.field_ptr()) throw std::invalid_argument("congruent_mod: series over different fields");
    CongruenceResult res;
    res.checked_prec = std::min(a.prec(), b.prec());
    for (int i = 0; i <= res.checked_prec; ++i) {
        for (const auto& prime : mod.prime_factors()) {
            for (const TruncSeries* s : {&a, &b}) {
                const RatK& c = (*s)[i];
                if (!c.integral() && valuation(c, prime) < 0)
                    throw std::domain_error("congruence mod " + mod.to_string() + " is ill-posed: coefficient of t^" +
                                            std::to_string(i) + " has a pole at " + prime.to_string());
            }
        }
    }
    for (int i = 0; i <= res.checked_prec; ++i) {
        const RatK diff = a[i] - b[i];
        if (diff.is_zero()) continue;
        for (const auto& prime : mod.prime_factors()) {
            const int v = valuation(diff, prime);
            if (v < mod.exponent()) {
                res.witness = i;
                res.witness_prime = prime;
                res.witness_valuation = v;
                return res;
            }
        }
    }
    res.holds = true;
    return res;
}

long long family_congruence_exponent(const Field& f, int k, int n, int nu) {
    long long e = 1;
    for (int i = 0; i < nu; ++i) e *= f.q();
    for (int i = int_val_p(k - n, f.p()); i > 0; --i) e *= f.p();
    return e;
}

ProductCheck product_identity_check(const std::vector<AExpansion>& lhs, const AExpansion& rhs, int prec) {
    if (lhs.empty()) throw std::invalid_argument("product_identity_check: empty product");
    int total = 0;
    for (const auto& x : lhs) total += x.n();
    if (total != rhs.n())
        throw std::invalid_argument("product_identity_check: exponents add to " + std::to_string(total) + ", right side has " +
                                    std::to_string(rhs.n()));
    TruncSeries prod = expand(lhs.front(), prec);
    for (std::size_t i = 1; i < lhs.size(); ++i) prod = prod * expand(lhs[i], prec);
    const TruncSeries r = expand(rhs, prec);
    ProductCheck out;
    out.prec = prec;
    out.witness = prod.first_difference(r);
    out.holds = !out.witness.has_value();
    return out;
}

namespace {

AExpansion power_expansion(const Field& f, long long exponent, int n, int prec) {
    const auto e = static_cast<std::uint64_t>(exponent);
    return AExpansion::from_function(f, n, RatK::zero(f), degree_cutoff(f, prec),
                                     [e](const PolyA& a) { return RatK(a.pow(e)); });
}

json witness_json(const std::optional<int>& w) { return w ? json(*w) : json(nullptr); }

}  // namespace

json search_products(const Field& f, const SearchOptions& opt) {
    const int q = f.q();
    json entries = json::array();
    if (!opt.n.empty()) {
        const GossTable& table = shared_period_table(f, 2 * opt.n.hi);
        for (int n = std::max(opt.n.lo, 1); n <= opt.n.hi; ++n) {
            for (int n2 = n; n2 <= opt.n.hi; ++n2) {
                const bool mult = is_multiplicative_pair(n, n2, table);
                entries.push_back({{"check", "goss_multiplicative"},
                                   {"parameters", {{"n", n}, {"n2", n2}}},
                                   {"verdict", mult ? "holds" : "fails"},
                                   {"witness", nullptr}});
                if (!mult) continue;
                for (int u = opt.k_extra.lo; u <= opt.k_extra.hi; ++u) {
                    for (int u2 = opt.k_extra.lo; u2 <= opt.k_extra.hi; ++u2) {
                        const int k = 2 * n + u * (q - 1);
                        const int k2 = 2 * n2 + u2 * (q - 1);
                        if (!expansion_hypothesis(f, k, n).ok || !expansion_hypothesis(f, k2, n2).ok ||
                            !expansion_hypothesis(f, k + k2, n + n2).ok)
                            continue;
                        for (int l = opt.l.lo; l <= opt.l.hi; ++l) {
                            for (int l2 = opt.l.lo; l2 <= opt.l.hi; ++l2) {
                                long long e = k - n, e2 = k2 - n2;
                                for (int i = 0; i < l; ++i) e *= q;
                                for (int i = 0; i < l2; ++i) e2 *= q;
                                const auto chk = product_identity_check(
                                    {power_expansion(f, e, n, opt.prec), power_expansion(f, e2, n2, opt.prec)},
                                    power_expansion(f, e + e2, n + n2, opt.prec), opt.prec);
                                entries.push_back({{"check", "product_identity"},
                                                   {"parameters",
                                                    {{"n", n}, {"n2", n2}, {"k", k}, {"k2", k2}, {"l", l}, {"l2", l2},
                                                     {"exponent", e}, {"exponent2", e2}, {"prec", opt.prec}}},
                                                   {"verdict", chk.holds ? "holds" : "fails"},
                                                   {"witness", witness_json(chk.witness)}});
                            }
                        }
                    }
                }
            }
        }
    }
    // Observation only: Phi_{nu,j} against F_nu^j for j <= q.
    for (int nu = 1; nu <= opt.phi_nu_max; ++nu) {
        long long qn = 1;
        for (int i = 0; i < nu; ++i) qn *= q;
        const TruncSeries fnu = expand(power_expansion(f, qn, 1, opt.prec), opt.prec);
        TruncSeries pw = fnu;
        for (int j = 1; j <= q; ++j) {
            if (j > 1) pw = pw * fnu;
            const TruncSeries phi = expand(power_expansion(f, qn * j, j, opt.prec), opt.prec);
            const auto w = phi.first_difference(pw);
            entries.push_back({{"check", "phi_power_observation"},
                               {"parameters", {{"nu", nu}, {"j", j}, {"prec", opt.prec}}},
                               {"verdict", w ? "not_observed" : "observed"},
                               {"witness", witness_json(w)}});
        }
    }
    json report = {{"format", 1}, {"q", q}, {"modulus", f.modulus_string()}, {"entries", std::move(entries)}};
    return report;
}

}  // namespace drinfeld
