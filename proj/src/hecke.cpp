#include "drinfeld/hecke.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/parallel.hpp"

namespace drinfeld {

TorsionTable::TorsionTable(const PolyA& prime, int nmax, int prec) : prime_(prime), nmax_(nmax), prec_(prec) {
    if (!prime.is_monic() || !is_irreducible(prime))
        throw std::invalid_argument("Hecke prime " + prime.to_string() + " is not monic irreducible");
    if (nmax < 1 || prec < 0) throw std::invalid_argument("torsion table: bad size");
    const Field& f = prime.field();
    const RhoCoeffs r = rho(prime);
    std::vector<int> qpow;
    for (long long x = f.q(); x <= nmax && qpow.size() + 1 < r.l.size(); x *= f.q()) qpow.push_back(static_cast<int>(x));

    const auto width = static_cast<std::size_t>(prec) + 1;
    h_.assign(static_cast<std::size_t>(nmax) + 1, std::vector<PolyA>(width, PolyA(f)));
    if (prec >= 1) h_[1][1] = prime;
    for (int n = 2; n <= nmax; ++n) {
        auto& out = h_[n];
        for (std::size_t j = 1; j < width; ++j) {
            PolyAccumulator acc(f);
            acc.add_product(prime, h_[n - 1][j - 1]);
            for (std::size_t i = 0; i < qpow.size(); ++i) {
                const int m = n - qpow[i];
                if (m < 1) break;
                acc.add_product(r.l[i + 1], h_[m][j - 1]);
            }
            out[j] = acc.take();
        }
    }
}

const std::vector<PolyA>& TorsionTable::H(int n) const {
    if (n < 1 || n > nmax_) throw std::out_of_range("torsion Goss index " + std::to_string(n) + " out of range");
    return h_[n];
}

const TorsionTable& shared_torsion_table(const PolyA& prime, int nmax, int prec) {
    static std::mutex mu;
    static std::map<std::pair<const Field*, PolyA>, std::deque<TorsionTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& tables = cache[{prime.field_ptr(), prime}];
    for (const auto& t : tables)
        if (t.nmax() >= nmax && t.prec() >= prec) return t;
    tables.emplace_back(prime, nmax, prec);
    return tables.back();
}

ModularForm hecke_apply(const ModularForm& form, const PolyA& prime, int out_prec) {
    const Field& f = form.series.field();
    if (!prime.is_monic() || !is_irreducible(prime))
        throw std::invalid_argument("Hecke prime " + prime.to_string() + " is not monic irreducible");
    long long qd = 1;
    for (int i = 0; i < prime.degree(); ++i) qd *= f.q();
    if (out_prec < 0) out_prec = static_cast<int>(form.prec() / qd);
    const long long need = static_cast<long long>(out_prec) * qd;
    if (need > form.prec())
        throw PrecisionError("Hecke operator at " + prime.to_string() + ": output precision " + std::to_string(out_prec) +
                                 " needs input precision " + std::to_string(need) + ", have " + std::to_string(form.prec()),
                             static_cast<int>(need));
    const int nmax = static_cast<int>(need);
    const TruncSeries input = form.series.truncated(nmax);

    // P^k sum a_n t_P^n; t_P has order q^d, so n <= out_prec / q^d suffices
    TruncSeries first = TruncSeries::constant(input[0], out_prec);
    if (out_prec >= qd) {
        const TruncSeries tp = t_sub(prime, out_prec);
        TruncSeries pw = tp;
        for (int n = 1; n <= out_prec / qd; ++n) {
            if (n > 1) pw = pw * tp;
            if (!input[n].is_zero()) first += pw.scaled(input[n]);
        }
    }
    first = scale_by_poly(first, prime.pow(static_cast<std::uint64_t>(form.k)));

    // sum_{n>=1} a_n H_n, computed over the common denominator of the a_n
    TruncSeries second(f, out_prec);
    if (nmax >= 1 && out_prec >= 1) {
        const TorsionTable& table = shared_torsion_table(prime, nmax, out_prec);
        const PolyA den = common_denominator(input);
        std::vector<PolyA> a(static_cast<std::size_t>(nmax) + 1, PolyA(f));
        for (int n = 1; n <= nmax; ++n)
            if (!input[n].is_zero()) a[n] = (input[n] * RatK(den)).num();
        std::vector<PolyA> sums(static_cast<std::size_t>(out_prec) + 1, PolyA(f));
        parallel_for(static_cast<std::size_t>(out_prec), [&](std::size_t idx) {
            const int j = static_cast<int>(idx) + 1;
            PolyAccumulator acc(f);
            // ord H_n >= ceil(n / q^d), so only n <= j q^d reach t^j
            const long long top = std::min<long long>(nmax, j * qd);
            for (int n = 1; n <= top; ++n)
                if (!a[n].is_zero()) acc.add_product(a[n], table.H(n)[j]);
            sums[j] = acc.take();
        });
        const RatK inv = RatK(den).inverse();
        for (int j = 1; j <= out_prec; ++j)
            if (!sums[j].is_zero()) second.set(j, den.is_one() ? RatK(sums[j]) : RatK(sums[j]) * inv);
    }
    return {form.k, form.m, first + second, form.quasi};
}

EigenResult eigen_solve(const ModularForm& form, const PolyA& prime, int out_prec) {
    const ModularForm image = hecke_apply(form, prime, out_prec);
    const int prec = image.prec();
    const TruncSeries base = form.series.truncated(prec);
    EigenResult res;
    res.prec = prec;
    const int lead = base.order();
    if (lead > prec) throw std::domain_error("eigen_solve: form vanishes at precision " + std::to_string(prec));
    const RatK lambda = image.series[lead] / base[lead];
    res.witness = image.series.first_difference(base.scaled(lambda));
    res.eigen = !res.witness.has_value();
    if (res.eigen) res.lambda = lambda;
    return res;
}

std::optional<int> as_prime_power(const RatK& lambda, const PolyA& prime, int jmax) {
    PolyA pw = PolyA::one(prime.field());
    for (int j = 0; j <= jmax; ++j) {
        if (lambda == RatK(pw)) return j;
        pw = pw * prime;
    }
    return std::nullopt;
}

}  // namespace drinfeld
