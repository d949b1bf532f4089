#include "drinfeld/carlitz.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace drinfeld {

namespace {

// rho_{T^j} for j = 0, 1, ...; grown on demand and shared per field.
std::vector<PolyA> rho_T_power(const Field& f, int j) {
    static std::mutex mu;
    static std::map<const Field*, std::vector<std::vector<PolyA>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& table = cache[&f];
    if (table.empty()) table.push_back({PolyA::one(f)});
    const PolyA t = PolyA::T(f);
    while (static_cast<int>(table.size()) <= j) {
        const auto& prev = table.back();
        std::vector<PolyA> next(prev.size() + 1, PolyA(f));
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] += t * prev[i];
            next[i + 1] += prev[i].frobenius_pow(f.e());
        }
        table.push_back(std::move(next));
    }
    return table[j];
}

std::size_t qpow(const Field& f, int d) {
    std::size_t r = 1;
    for (int i = 0; i < d; ++i) r *= static_cast<std::size_t>(f.q());
    return r;
}

}  // namespace

RhoCoeffs rho(const PolyA& a) {
    if (a.is_zero()) throw std::invalid_argument("rho: a must be nonzero");
    const Field& f = a.field();
    const int d = a.degree();
    std::vector<PolyA> l(d + 1, PolyA(f));
    for (int j = 0; j <= d; ++j) {
        const fq_t c = a[j];
        if (c == 0) continue;
        const auto rj = rho_T_power(f, j);
        for (int i = 0; i <= j; ++i) l[i] += rj[i].scaled(c);
    }
    return {a, std::move(l)};
}

std::vector<PolyA> compose_linearized(const std::vector<PolyA>& outer, const std::vector<PolyA>& inner) {
    // (sum_i u_i X^{q^i}) o (sum_j v_j X^{q^j}) = sum_{i,j} u_i v_j^{q^i} X^{q^{i+j}}
    if (outer.empty() || inner.empty()) return {};
    const Field& f = outer.front().field();
    std::vector<PolyA> out(outer.size() + inner.size() - 1, PolyA(f));
    for (std::size_t j = 0; j < inner.size(); ++j) {
        PolyA v = inner[j];
        for (std::size_t i = 0; i < outer.size(); ++i) {
            out[i + j] += outer[i] * v;
            v = v.frobenius_pow(f.e());
        }
    }
    return out;
}

std::vector<PolyA> psi(const PolyA& a) {
    const RhoCoeffs r = rho(a);
    const Field& f = a.field();
    const int d = a.degree();
    const std::size_t qd = qpow(f, d);
    std::vector<PolyA> out(qd, PolyA(f));
    for (int i = 0; i <= d; ++i) out[qd - qpow(f, i)] = r.l[i];
    return out;
}

TruncSeries psi_series(const PolyA& a, int prec) {
    const auto coeffs = psi(a);
    TruncSeries s(a.field(), prec);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= prec; ++i)
        if (!coeffs[i].is_zero()) s.set(static_cast<int>(i), RatK(coeffs[i]));
    return s;
}

TruncSeries t_sub(const PolyA& a, int prec) {
    if (!a.is_monic()) throw std::invalid_argument("t_sub: a must be monic");
    const Field& f = a.field();
    const std::size_t qd = qpow(f, a.degree());
    if (qd > static_cast<std::size_t>(prec)) return TruncSeries(f, prec);
    const int rel = prec - static_cast<int>(qd);
    return psi_series(a, rel).inverse().shifted(static_cast<int>(qd));
}

CarlitzExpData carlitz_exp(const Field& f, int imax) {
    if (imax < 0) throw std::invalid_argument("carlitz_exp: imax must be nonnegative");
    CarlitzExpData out{imax, {}};
    PolyA d = PolyA::one(f);
    out.alpha.push_back(RatK::one(f));
    for (int i = 1; i <= imax; ++i) {
        d = bracket(f, i) * d.frobenius_pow(f.e());
        out.alpha.emplace_back(PolyA::one(f), d);
    }
    return out;
}

std::vector<RatK> period_alphas(const Field& f, int nmax) {
    int imax = 0;
    while (qpow(f, imax + 1) <= static_cast<std::size_t>(std::max(nmax, 1))) ++imax;
    return carlitz_exp(f, imax).alpha;
}

LaurentSeries inv_exp_laurent(const Field& f, int m) {
    if (m < 1) throw std::invalid_argument("inv_exp_laurent: precision must be positive");
    // e_C(w)/w = 1 + sum_{i>=1} w^{q^i - 1}/D_i
    const int prec = m - 1;
    int imax = 0;
    while (qpow(f, imax + 1) - 1 <= static_cast<std::size_t>(prec)) ++imax;
    const auto alphas = carlitz_exp(f, imax).alpha;
    TruncSeries body(f, prec);
    for (int i = 0; i <= imax; ++i) body.set(static_cast<int>(qpow(f, i)) - 1, alphas[i]);
    return LaurentSeries(-1, body.inverse());
}

std::vector<RatK> torsion_exp_coeffs(const PolyA& prime) {
    if (!prime.is_monic()) throw std::invalid_argument("torsion_exp_coeffs: prime must be monic");
    if (!is_irreducible(prime)) throw std::invalid_argument("torsion_exp_coeffs: " + prime.to_string() + " is reducible");
    const RhoCoeffs r = rho(prime);
    std::vector<RatK> out;
    out.reserve(r.l.size());
    for (const auto& li : r.l) out.emplace_back(li, prime);
    return out;
}

}  // namespace drinfeld
