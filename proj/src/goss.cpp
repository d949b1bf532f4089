#include "drinfeld/goss.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "drinfeld/carlitz.hpp"

namespace drinfeld {

GossTable::GossTable(const Field& f, std::vector<RatK> alphas, int nmax, int xprec)
    : f_(&f), alphas_(std::move(alphas)), nmax_(nmax), xprec_(xprec < 0 ? nmax : std::min(xprec, nmax)) {
    if (alphas_.empty() || !alphas_[0].is_one()) throw std::invalid_argument("goss_table: alpha_0 must be 1");
    if (nmax < 1) throw std::invalid_argument("goss_table: nmax must be positive");
    std::vector<int> qpow{1};
    while (static_cast<long long>(qpow.back()) * f.q() <= nmax) qpow.push_back(qpow.back() * f.q());
    for (std::size_t i = 1; i < alphas_.size() && i < qpow.size(); ++i)
        if (!alphas_[i].is_zero()) dmax_ = static_cast<int>(i);

    polys_.reserve(static_cast<std::size_t>(nmax) + 1);
    polys_.emplace_back(f, xprec_);
    for (int n = 1; n <= nmax; ++n) {
        if (n == 1) {
            polys_.push_back(TruncSeries::monomial(RatK::one(f), 1, xprec_));
            continue;
        }
        TruncSeries inner = polys_[n - 1];
        for (std::size_t i = 1; i < alphas_.size() && i < qpow.size(); ++i) {
            const int m = n - qpow[i];
            if (m < 1) break;
            if (alphas_[i].is_zero()) continue;
            inner += polys_[m].scaled(alphas_[i]);
        }
        polys_.push_back(inner.shifted(1).truncated(xprec_));
    }
}

const TruncSeries& GossTable::G(int n) const {
    if (n < 1 || n > nmax_) throw std::out_of_range("Goss index " + std::to_string(n) + " outside 1.." + std::to_string(nmax_));
    return polys_[n];
}

GossTable period_goss_table(const Field& f, int nmax) { return GossTable(f, period_alphas(f, nmax), nmax); }

GossTable torsion_goss_table(const PolyA& prime, int nmax, int xprec) {
    return GossTable(prime.field(), torsion_exp_coeffs(prime), nmax, xprec);
}

int goss_ord(int n, const GossTable& table) { return table.G(n).order(); }

bool is_multiplicative_pair(int n, int m, const GossTable& table) {
    if (!table.exact()) throw std::invalid_argument("is_multiplicative_pair needs an exact table");
    const TruncSeries prod = table.G(n) * table.G(m);
    return prod.agrees_with(table.G(n + m));
}

namespace {

std::mutex g_period_mu;
std::map<const Field*, std::deque<GossTable>> g_period_tables;

}  // namespace

void seed_period_table(GossTable table) {
    if (!table.exact()) throw std::invalid_argument("seed_period_table: table must be exact");
    const Field& f = table.field();
    if (table.alphas() != period_alphas(f, table.nmax()))
        throw std::invalid_argument("seed_period_table: not a period-lattice table");
    std::lock_guard<std::mutex> lock(g_period_mu);
    auto& tables = g_period_tables[&f];
    for (const auto& t : tables)
        if (t.nmax() >= table.nmax()) return;
    tables.push_back(std::move(table));
}

const GossTable& shared_period_table(const Field& f, int nmax) {
    std::lock_guard<std::mutex> lock(g_period_mu);
    auto& tables = g_period_tables[&f];
    for (const auto& t : tables)
        if (t.nmax() >= nmax) return t;
    int n = std::max(nmax, tables.empty() ? 16 : 2 * tables.back().nmax());
    tables.push_back(period_goss_table(f, n));
    return tables.back();
}

}  // namespace drinfeld
