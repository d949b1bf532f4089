#include "drinfeld/forms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/parallel.hpp"
#include "drinfeld/verify.hpp"

namespace drinfeld {

int reduce_type(long long m, const Field& f) {
    const long long r = f.q() - 1;
    return static_cast<int>(((m % r) + r) % r);
}

ModularForm operator*(const ModularForm& a, const ModularForm& b) {
    const Field& f = a.series.field();
    return {a.k + b.k, reduce_type(static_cast<long long>(a.m) + b.m, f), a.series * b.series, a.quasi || b.quasi};
}

ModularForm pow(const ModularForm& x, std::uint64_t e) {
    const Field& f = x.series.field();
    return {static_cast<int>(x.k * e), reduce_type(static_cast<long long>(x.m) * static_cast<long long>(e), f),
            x.series.pow(e), x.quasi};
}

// ---------------------------------------------------------------- AExpansion

AExpansion::AExpansion(const Field& f, int n, RatK c0, int max_degree)
    : f_(&f), n_(n), c0_(std::move(c0)), d_(max_degree) {
    if (n < 1) throw std::invalid_argument("A-expansion exponent must be positive");
    if (max_degree < -1) throw std::invalid_argument("A-expansion degree bound must be >= -1");
}

AExpansion AExpansion::from_function(const Field& f, int n, RatK c0, int max_degree,
                                     const std::function<RatK(const PolyA&)>& fn) {
    AExpansion out(f, n, std::move(c0), max_degree);
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& a : monic_enum(f, d)) out.set(a, fn(a));
    return out;
}

RatK AExpansion::coeff(const PolyA& a) const {
    if (!a.is_monic()) throw std::invalid_argument("A-expansion index is not monic: " + a.to_string());
    if (a.degree() > d_) throw std::out_of_range("A-expansion has no coefficient at " + a.to_string());
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? RatK::zero(*f_) : it->second;
}

void AExpansion::set(const PolyA& a, RatK c) {
    if (!a.is_monic()) throw std::invalid_argument("A-expansion index is not monic: " + a.to_string());
    if (a.degree() > d_) throw std::out_of_range("A-expansion index out of range: " + a.to_string());
    if (c.is_zero())
        coeffs_.erase(a);
    else
        coeffs_.insert_or_assign(a, std::move(c));
}

int degree_cutoff(const Field& f, int prec) {
    if (prec < 1) return -1;
    int d = 0;
    long long qd = f.q();
    while (qd <= prec) {
        ++d;
        qd *= f.q();
    }
    return d;
}

// ---------------------------------------------------------------- expansion engine

TruncSeries cached_t_sub(const PolyA& a, int prec) {
    static std::mutex mu;
    static std::map<std::pair<const Field*, PolyA>, TruncSeries> cache;
    const auto key = std::make_pair(a.field_ptr(), a);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.prec() >= prec) return it->second.truncated(prec);
    }
    TruncSeries s = t_sub(a, prec);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (slot.prec() < prec) slot = s;
    return s;
}

TruncSeries t_sub_power(const PolyA& a, int j, int prec) {
    if (j == 1) return cached_t_sub(a, prec);
    const Field& f = a.field();
    long long shift = j;
    for (int i = 0; i < a.degree(); ++i) shift *= f.q();
    if (shift > prec) return TruncSeries(f, prec);
    // t_a^j = t^{j q^d} / psi_a(t)^j with psi_a a sparse polynomial
    const int rel = prec - static_cast<int>(shift);
    return psi_series(a, rel).pow(static_cast<std::uint64_t>(j)).inverse().shifted(static_cast<int>(shift));
}

namespace {

// P_j = sum_a c_a t_a^j for the j where G_n has a nonzero X^j coefficient; all
// c_a integral.  Terms are combined in canonical order of a.
std::vector<TruncSeries> power_sums_of_t(const Field& f, const std::vector<std::pair<PolyA, PolyA>>& terms,
                                         const TruncSeries& gn, int n, int prec) {
    std::vector<std::vector<TruncSeries>> per_term(terms.size());
    parallel_for(terms.size(), [&](std::size_t idx) {
        const PolyA& a = terms[idx].first;
        const PolyA& c = terms[idx].second;
        long long qd = 1;
        for (int i = 0; i < a.degree(); ++i) qd *= f.q();
        const int jmax = static_cast<int>(std::min<long long>(n, prec / qd));
        std::vector<TruncSeries> out(static_cast<std::size_t>(jmax) + 1);
        if (jmax < gn.order()) {
            per_term[idx] = std::move(out);
            return;
        }
        for (int j = 1; j <= jmax; ++j)
            if (!gn[j].is_zero()) out[j] = scale_by_poly(t_sub_power(a, j, prec), c);
        per_term[idx] = std::move(out);
    });
    std::vector<TruncSeries> sums(static_cast<std::size_t>(n) + 1, TruncSeries(f, prec));
    for (auto& v : per_term)
        for (std::size_t j = 1; j < v.size(); ++j)
            if (v[j].field_ptr() != nullptr) sums[j] += v[j];
    return sums;
}

}  // namespace

TruncSeries expand(const AExpansion& ax, int prec) {
    const Field& f = ax.field();
    if (prec < 0) throw std::invalid_argument("expand: precision must be nonnegative");
    const int cutoff = degree_cutoff(f, prec);
    if (ax.max_degree() < cutoff)
        throw std::invalid_argument("expand: coefficients up to degree " + std::to_string(cutoff) +
                                    " are needed at precision " + std::to_string(prec) + ", expansion stops at " +
                                    std::to_string(ax.max_degree()));
    const int n = ax.n();
    const GossTable& table = shared_period_table(f, n);
    const TruncSeries& gn = table.G(n);

    PolyA den = PolyA::one(f);
    for (const auto& [a, c] : ax.coeffs())
        if (a.degree() <= cutoff && !c.integral()) den = lcm(den, c.den());
    std::vector<std::pair<PolyA, PolyA>> terms;
    for (const auto& [a, c] : ax.coeffs())
        if (a.degree() <= cutoff) terms.emplace_back(a, (c * RatK(den)).num());

    const auto sums = power_sums_of_t(f, terms, gn, n, prec);
    TruncSeries out = TruncSeries::constant(ax.c0(), prec);
    const RatK inv_den = RatK(den).inverse();
    TruncSeries body(f, prec);
    for (int j = 1; j <= n; ++j)
        if (!gn[j].is_zero()) body += sums[j].scaled(gn[j]);
    out += den.is_one() ? body : body.scaled(inv_den);
    return out;
}

// ---------------------------------------------------------------- named forms

AExpansion f_kn_expansion(const Field& f, int k, int n, int max_degree) {
    const auto e = static_cast<std::uint64_t>(k - n);
    return AExpansion::from_function(f, n, RatK::zero(f), max_degree, [e](const PolyA& a) { return RatK(a.pow(e)); });
}

ModularForm f_kn(const Field& f, int k, int n, int prec) {
    const auto verdict = expansion_hypothesis(f, k, n);
    if (!verdict.ok)
        throw HypothesisError("f_{" + std::to_string(k) + "," + std::to_string(n) + "}: " + verdict.reason);
    return {k, reduce_type(n, f), expand(f_kn_expansion(f, k, n, degree_cutoff(f, prec)), prec), false};
}

ModularForm f_s(const Field& f, int s, int prec) {
    if (s < 0) throw std::invalid_argument("f_s: s must be nonnegative");
    return f_kn(f, f.q() + 1 + s * (f.q() - 1), 1, prec);
}

ModularForm F_nu(const Field& f, int nu, int prec) {
    if (nu < 1) throw std::invalid_argument("F_nu: nu must be positive");
    long long qn = 1;
    for (int i = 0; i < nu; ++i) qn *= f.q();
    return f_kn(f, static_cast<int>(qn + 1), 1, prec);
}

ModularForm F_knl(const Field& f, int k, int n, int l, int prec) {
    if (l < 0) throw std::invalid_argument("F_knl: l must be nonnegative");
    const auto verdict = expansion_hypothesis(f, k, n);
    if (!verdict.ok)
        throw HypothesisError("F_{" + std::to_string(k) + "," + std::to_string(n) + ",l}: " + verdict.reason);
    long long kk = k - n;
    for (int i = 0; i < l; ++i) kk *= f.q();
    return f_kn(f, static_cast<int>(kk + n), n, prec);
}

namespace {

// Shared high-precision copies of g and h, truncated on demand.
const TruncSeries& base_series(const Field& f, char which, int prec, TruncSeries (*build)(const Field&, int)) {
    static std::mutex mu;
    static std::map<std::pair<const Field*, char>, TruncSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{&f, which}];
    if (slot.field_ptr() == nullptr || slot.prec() < prec) slot = build(f, prec);
    return slot;
}

TruncSeries build_h(const Field& f, int prec) {
    return expand(f_kn_expansion(f, f.q() + 1, 1, degree_cutoff(f, prec)), prec);
}

TruncSeries build_g(const Field& f, int prec) {
    const int k = f.q() - 1;
    const RatK c = -delta_k(f, k).inverse();
    const auto ax = AExpansion::from_function(f, k, RatK::one(f), degree_cutoff(f, prec), [&](const PolyA&) { return c; });
    return expand(ax, prec);
}

}  // namespace

ModularForm h_form(const Field& f, int prec) {
    return {f.q() + 1, reduce_type(1, f), base_series(f, 'h', prec, build_h).truncated(prec), false};
}

ModularForm Delta_form(const Field& f, int prec) {
    const int q = f.q();
    return f_kn(f, q * q - 1, q - 1, prec);
}

ModularForm false_eisenstein(const Field& f, int prec) {
    const auto ax = AExpansion::from_function(f, 1, RatK::zero(f), degree_cutoff(f, prec), [](const PolyA& a) { return RatK(a); });
    return {2, reduce_type(1, f), expand(ax, prec), true};
}

RatK delta_k(const Field& f, int k) {
    if (k < 1 || k % (f.q() - 1) != 0)
        throw std::invalid_argument("delta_k: weight " + std::to_string(k) + " is not a positive multiple of q-1");
    // 1/e_C(w) = w^{-1} u(w);  G_k(1/e_C) = sum_j g_j w^{-j} u^j
    const TruncSeries u = inv_exp_laurent(f, k + 1).body();
    const TruncSeries& gk = shared_period_table(f, k).G(k);
    RatK out = RatK::zero(f);
    TruncSeries pw = TruncSeries::one(f, k);
    for (int j = 1; j <= k; ++j) {
        pw = pw * u;
        if (!gk[j].is_zero()) out += gk[j] * pw[j];
    }
    if (out.is_zero()) throw std::domain_error("delta_k vanished for k = " + std::to_string(k));
    return out;
}

ModularForm eisenstein_g(const Field& f, int k, int prec) {
    if (k == f.q() - 1) return {k, 0, base_series(f, 'g', prec, build_g).truncated(prec), false};
    const RatK c = -delta_k(f, k).inverse();
    const auto ax = AExpansion::from_function(f, k, RatK::one(f), degree_cutoff(f, prec), [&](const PolyA&) { return c; });
    return {k, 0, expand(ax, prec), false};
}

// ---------------------------------------------------------------- g,h basis

std::vector<std::pair<int, int>> gh_basis(const Field& f, int k, int m) {
    const int q = f.q();
    std::vector<std::pair<int, int>> out;
    for (int j = 0; (q + 1) * j <= k; ++j) {
        const int rest = k - (q + 1) * j;
        if (rest % (q - 1) != 0) continue;
        if (reduce_type(j, f) != reduce_type(m, f)) continue;
        out.emplace_back(rest / (q - 1), j);
    }
    return out;
}

namespace {

TruncSeries gh_monomial(const Field& f, int i, int j, int prec) {
    TruncSeries out = TruncSeries::one(f, prec);
    if (i > 0) out = out * base_series(f, 'g', prec, build_g).truncated(prec).pow(static_cast<std::uint64_t>(i));
    if (j > 0) out = out * base_series(f, 'h', prec, build_h).truncated(prec).pow(static_cast<std::uint64_t>(j));
    return out;
}

}  // namespace

TruncSeries gh_evaluate(const Field& f, const std::vector<GhTerm>& terms, int prec) {
    TruncSeries out(f, prec);
    for (const auto& t : terms) out += gh_monomial(f, t.i, t.j, prec).scaled(t.coeff);
    return out;
}

GhResult gh_express(const ModularForm& form, int buffer, bool allow_quasi) {
    if (form.quasi && !allow_quasi) throw std::invalid_argument("gh_express: quasi-modular input");
    const Field& f = form.series.field();
    const auto basis = gh_basis(f, form.k, form.m);
    const int prec = form.prec();
    GhResult res;
    res.checked_prec = prec;
    const int need = (basis.empty() ? 0 : basis.back().second) + buffer;
    if (prec < need)
        throw PrecisionError("gh_express: precision " + std::to_string(prec) + " below the required " + std::to_string(need), need);
    TruncSeries r = form.series;
    std::size_t next = 0;
    for (int e = 0; e <= prec; ++e) {
        if (next < basis.size() && basis[next].second == e) {
            const auto [i, j] = basis[next++];
            const RatK c = r[e];
            if (!c.is_zero()) {
                r -= gh_monomial(f, i, j, prec).scaled(c);
                res.terms.push_back({i, j, c});
            }
        } else if (!r[e].is_zero()) {
            res.witness = e;
            res.terms.clear();
            return res;
        }
    }
    res.in_span = true;
    return res;
}

// ---------------------------------------------------------------- recovery

namespace {

struct Pivot {
    int col;
    std::vector<RatK> row;  // ncols entries plus the right-hand side
};

}  // namespace

RecoveryResult aexp_recover(const TruncSeries& s, int n, int target_degree) {
    const Field& f = s.field();
    if (n < 1) throw std::invalid_argument("aexp_recover: exponent must be positive");
    const int prec = s.prec();
    const int D = degree_cutoff(f, prec);
    if (target_degree < 0) target_degree = D;
    RecoveryResult res;

    std::vector<PolyA> index;
    for (int d = 0; d <= D; ++d)
        for (auto& a : monic_enum(f, d)) index.push_back(std::move(a));
    const std::size_t ncols = index.size() + 1;

    // Column 0 is the constant c_0, then G_n(t_a) in canonical order.  Columns
    // of order beyond the precision stay zero.
    const int gord = shared_period_table(f, n).G(n).order();
    std::vector<TruncSeries> cols(ncols, TruncSeries(f, prec));
    cols[0] = TruncSeries::one(f, prec);
    parallel_for(index.size(), [&](std::size_t i) {
        const PolyA& a = index[i];
        long long qd = 1;
        for (int j = 0; j < a.degree(); ++j) qd *= f.q();
        if (qd * gord > prec) return;
        AExpansion single(f, n, RatK::zero(f), D);
        single.set(a, RatK::one(f));
        cols[i + 1] = expand(single, prec);
    });

    std::vector<Pivot> pivots;
    const RatK zero = RatK::zero(f);
    for (int r = 0; r <= prec; ++r) {
        std::vector<RatK> row(ncols + 1, zero);
        for (std::size_t c = 0; c < ncols; ++c) row[c] = cols[c][r];
        row[ncols] = s[r];
        for (const auto& p : pivots) {
            const RatK factor = row[p.col];
            if (factor.is_zero()) continue;
            for (std::size_t c = 0; c <= ncols; ++c)
                if (!p.row[c].is_zero()) row[c] -= factor * p.row[c];
        }
        std::size_t lead = 0;
        while (lead < ncols && row[lead].is_zero()) ++lead;
        res.rows = r + 1;
        if (lead == ncols) {
            if (!row[ncols].is_zero()) {
                res.status = RecoveryStatus::Inconsistent;
                res.witness = r;
                res.message = "no A-expansion with exponent " + std::to_string(n) + " matches the coefficient of t^" + std::to_string(r);
                return res;
            }
            continue;
        }
        const RatK inv = row[lead].inverse();
        for (auto& x : row)
            if (!x.is_zero()) x *= inv;
        for (auto& p : pivots) {
            const RatK factor = p.row[lead];
            if (factor.is_zero()) continue;
            for (std::size_t c = 0; c <= ncols; ++c)
                if (!row[c].is_zero()) p.row[c] -= factor * row[c];
        }
        pivots.push_back({static_cast<int>(lead), std::move(row)});
    }

    std::vector<char> is_pivot(ncols, 0);
    for (const auto& p : pivots) is_pivot[p.col] = 1;
    std::vector<std::optional<RatK>> value(ncols);
    for (const auto& p : pivots) {
        bool determined = true;
        for (std::size_t c = 0; c < ncols && determined; ++c)
            if (!is_pivot[c] && !p.row[c].is_zero()) determined = false;
        if (determined) value[p.col] = p.row[ncols];
    }

    // Largest degree up to which every coefficient (and c_0) is determined.
    int full = -1;
    if (value[0]) {
        std::size_t c = 1;
        for (int d = 0; d <= D; ++d) {
            bool ok = true;
            const std::size_t count = monic_enum(f, d).size();
            for (std::size_t i = 0; i < count; ++i, ++c)
                if (!value[c]) ok = false;
            if (!ok) break;
            full = d;
        }
    }
    res.determined_degree = full;
    res.rank = static_cast<int>(pivots.size());
    res.unknowns = static_cast<int>(ncols);
    if (value[0]) {
        AExpansion ax(f, n, *value[0], std::max(full, -1));
        for (std::size_t c = 1; c < ncols; ++c)
            if (index[c - 1].degree() <= full) ax.set(index[c - 1], *value[c]);
        res.expansion = std::move(ax);
    }
    for (std::size_t c = 1; c < ncols; ++c)
        if (value[c]) res.determined.emplace(index[c - 1], *value[c]);
    if (full >= target_degree) {
        res.status = RecoveryStatus::Recovered;
        res.message = "recovered through degree " + std::to_string(full);
    } else {
        res.status = RecoveryStatus::Underdetermined;
        res.message = "precision " + std::to_string(prec) + " determines coefficients through degree " + std::to_string(full) +
                      " only; degree " + std::to_string(target_degree) + " was requested";
    }
    return res;
}

AExpansion iota_T(const AExpansion& ax) {
    const Field& f = ax.field();
    AExpansion out(f, ax.n(), ax.c0(), ax.max_degree() + 1);
    const PolyA t = PolyA::T(f);
    for (const auto& [a, c] : ax.coeffs()) out.set(a * t, c);
    return out;
}

}  // namespace drinfeld
