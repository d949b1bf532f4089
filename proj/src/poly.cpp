#include "drinfeld/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace drinfeld {

namespace {

void require_same(const PolyA& a, const PolyA& b) {
    if (a.field_ptr() != b.field_ptr()) throw std::invalid_argument("polynomials over different fields");
}

// r <- r mod b (b nonzero), in place on raw coefficient vectors.
void rem_in_place(const Field& f, std::vector<fq_t>& r, const std::vector<fq_t>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const fq_t inv_lead = f.inv(b.back());
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        const fq_t c = r[i];
        if (c == 0) continue;
        const fq_t m = f.mul(c, inv_lead);
        for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(m, b[j]));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

}  // namespace

PolyA PolyA::monomial(const Field& f, fq_t c, std::size_t k) {
    if (c == 0) return PolyA(f);
    std::vector<fq_t> v(k + 1, 0);
    v[k] = c;
    return PolyA(f, std::move(v));
}

PolyA PolyA::from_ints(const Field& f, const std::vector<long long>& c) {
    std::vector<fq_t> v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = f.from_int(c[i]);
    return PolyA(f, std::move(v));
}

int PolyA::low_degree() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

PolyA PolyA::operator-() const {
    PolyA r = *this;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

PolyA& PolyA::operator+=(const PolyA& o) {
    if (!f_) f_ = o.f_;
    if (o.c_.empty()) return *this;
    require_same(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    if (f_->is_prime_field()) {
        const int p = f_->p();
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            int s = c_[i] + o.c_[i];
            c_[i] = static_cast<fq_t>(s >= p ? s - p : s);
        }
    } else {
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
    }
    trim();
    return *this;
}

PolyA& PolyA::operator-=(const PolyA& o) {
    if (!f_) f_ = o.f_;
    if (o.c_.empty()) return *this;
    require_same(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

PolyA operator*(const PolyA& a, const PolyA& b) {
    if (a.is_zero() || b.is_zero()) return PolyA(a.f_ ? *a.f_ : *b.f_);
    require_same(a, b);
    const Field& f = *a.f_;
    PolyAccumulator acc(f);
    acc.add_product(a, b);
    return acc.take();
}

PolyA PolyA::scaled(fq_t c) const {
    if (c == 0) return PolyA(*f_);
    if (c == 1) return *this;
    PolyA r = *this;
    for (auto& x : r.c_) x = f_->mul(x, c);
    return r;
}

PolyA PolyA::shifted(std::size_t k) const {
    if (c_.empty() || k == 0) return *this;
    PolyA r(*f_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

PolyA PolyA::monic() const {
    if (c_.empty()) return *this;
    return scaled(f_->inv(c_.back()));
}

PolyA PolyA::pow(std::uint64_t n) const {
    PolyA result = PolyA::one(*f_);
    if (n == 0) return result;
    // Peel off p-power factors with the Frobenius shortcut.
    const auto p = static_cast<std::uint64_t>(f_->p());
    PolyA base = *this;
    while (n % p == 0) {
        base = base.frobenius_p();
        n /= p;
    }
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

PolyA PolyA::frobenius_p() const {
    if (c_.empty()) return *this;
    const auto p = static_cast<std::size_t>(f_->p());
    PolyA r(*f_);
    r.c_.assign((c_.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * p] = f_->frob(c_[i]);
    return r;
}

PolyA PolyA::frobenius_pow(int j) const {
    PolyA r = *this;
    for (int i = 0; i < j; ++i) r = r.frobenius_p();
    return r;
}

fq_t PolyA::eval(fq_t x) const noexcept {
    fq_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_->add(f_->mul(r, x), *it);
    return r;
}

PolyA PolyA::derivative() const {
    if (c_.size() <= 1) return PolyA(*f_);
    std::vector<fq_t> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = f_->mul(f_->from_int(static_cast<long long>(i)), c_[i]);
    return PolyA(*f_, std::move(d));
}

std::strong_ordering operator<=>(const PolyA& a, const PolyA& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::pair<PolyA, PolyA> divmod(const PolyA& a, const PolyA& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = b.field();
    if (a.degree() < b.degree()) return {PolyA(f), a};
    std::vector<fq_t> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    std::vector<fq_t> quot(a.degree() - db + 1, 0);
    const fq_t inv_lead = f.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
        const fq_t c = r[i];
        if (c == 0) continue;
        const fq_t m = f.mul(c, inv_lead);
        quot[i - db] = m;
        for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(m, bc[j]));
    }
    return {PolyA(f, std::move(quot)), PolyA(f, std::move(r))};
}

PolyA operator/(const PolyA& a, const PolyA& b) { return divmod(a, b).first; }
PolyA operator%(const PolyA& a, const PolyA& b) { return divmod(a, b).second; }

PolyA div_exact(const PolyA& a, const PolyA& b) {
    if (b.is_one()) return a;
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quot;
}

bool divides(const PolyA& d, const PolyA& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

PolyA gcd(PolyA a, PolyA b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return PolyA::one(a.field());
    const Field& f = a.field();
    std::vector<fq_t> x = a.coeffs();
    std::vector<fq_t> y = b.coeffs();
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        rem_in_place(f, x, y);
        std::swap(x, y);
    }
    return PolyA(f, std::move(x)).monic();
}

PolyA lcm(const PolyA& a, const PolyA& b) {
    if (a.is_zero() || b.is_zero()) return PolyA(a.field());
    PolyA g = gcd(a, b);
    return (div_exact(a, g) * b).monic();
}

PolyA frobenius_root(const PolyA& f) {
    const Field& fld = f.field();
    const auto q = static_cast<std::size_t>(fld.q());
    const auto& c = f.coeffs();
    std::vector<fq_t> r(c.empty() ? 0 : (c.size() - 1) / q + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (i % q != 0)
            throw std::domain_error("frobenius_root: exponent " + std::to_string(i) + " not divisible by q");
        r[i / q] = c[i];  // x^q = x on F_q
    }
    return PolyA(fld, std::move(r));
}

PolyA powmod(PolyA a, std::uint64_t n, const PolyA& m) {
    PolyA r = PolyA::one(m.field()) % m;
    a = a % m;
    while (n) {
        if (n & 1) r = (r * a) % m;
        n >>= 1;
        if (n) a = (a * a) % m;
    }
    return r;
}

namespace {

// x^(q^k) mod m by repeated q-th powering.
PolyA frob_iter(const PolyA& x, int k, const PolyA& m) {
    PolyA r = x % m;
    const auto q = static_cast<std::uint64_t>(m.field().q());
    for (int i = 0; i < k; ++i) r = powmod(r, q, m);
    return r;
}

}  // namespace

bool is_irreducible(const PolyA& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const PolyA m = f.monic();
    const PolyA x = PolyA::T(f.field());
    // Rabin: x^{q^d} = x mod f and gcd(x^{q^{d/r}} - x, f) = 1 for each prime r | d.
    if (frob_iter(x, d, m) != x % m) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime(r)) continue;
        PolyA h = frob_iter(x, d / r, m) - x;
        if (!gcd(h, m).is_one()) return false;
    }
    return true;
}

std::vector<PolyA> monic_enum(const Field& f, int d) {
    if (d < 0) return {};
    const auto q = static_cast<std::size_t>(f.q());
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    std::vector<PolyA> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        // c_0 is the most significant digit of the canonical order
        std::vector<fq_t> c(d + 1, 0);
        std::size_t v = idx;
        for (int i = d - 1; i >= 0; --i) {
            c[i] = static_cast<fq_t>(v % q);
            v /= q;
        }
        c[d] = 1;
        out.emplace_back(f, std::move(c));
    }
    return out;
}

std::vector<PolyA> poly_enum_below(const Field& f, int d) {
    std::vector<PolyA> out;
    out.emplace_back(f);
    for (int k = 0; k < d; ++k)
        for (const auto& m : monic_enum(f, k))
            for (int c = 1; c < f.q(); ++c) out.push_back(m.scaled(static_cast<fq_t>(c)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PolyA> irreducible_enum(const Field& f, int d) {
    std::vector<PolyA> out;
    if (d < 1) return out;
    for (auto& m : monic_enum(f, d))
        if (is_irreducible(m)) out.push_back(std::move(m));
    return out;
}

std::vector<PolyA> prime_factors(const PolyA& f) {
    if (f.is_zero()) throw std::domain_error("prime_factors of zero");
    std::vector<PolyA> out;
    PolyA rest = f.monic();
    for (int d = 1; rest.degree() >= 1; ++d) {
        if (2 * d > rest.degree()) {
            out.push_back(rest);
            break;
        }
        for (const auto& pr : irreducible_enum(f.field(), d)) {
            if (!divides(pr, rest)) continue;
            out.push_back(pr);
            while (divides(pr, rest)) rest = div_exact(rest, pr);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolyA bracket(const Field& f, int i) {
    if (i < 1) throw std::invalid_argument("bracket: index must be positive");
    std::size_t qi = 1;
    for (int k = 0; k < i; ++k) qi *= static_cast<std::size_t>(f.q());
    return PolyA::monomial(f, 1, qi) - PolyA::T(f);
}

PolyA carlitz_factorial(const Field& f, int i) {
    if (i < 0) throw std::invalid_argument("carlitz_factorial: negative index");
    PolyA d = PolyA::one(f);
    for (int k = 1; k <= i; ++k) d = bracket(f, k) * d.frobenius_pow(f.e());
    return d;
}

int valuation(const PolyA& a, const PolyA& prime) {
    if (a.is_zero()) return std::numeric_limits<int>::max();
    int v = 0;
    PolyA x = a;
    while (true) {
        auto [quot, rem] = divmod(x, prime);
        if (!rem.is_zero()) return v;
        x = std::move(quot);
        ++v;
    }
}

int int_val_p(long long k, long long p) {
    if (k == 0) throw std::invalid_argument("int_val_p(0)");
    int v = 0;
    if (k < 0) k = -k;
    while (k % p == 0) {
        k /= p;
        ++v;
    }
    return v;
}

void PolyAccumulator::reserve(std::size_t n) {
    if (f_->is_prime_field()) {
        if (wide_.size() < n) wide_.resize(n, 0);
    } else if (narrow_.size() < n) {
        narrow_.resize(n, 0);
    }
}

void PolyAccumulator::normalize() {
    const auto p = static_cast<std::uint64_t>(f_->p());
    for (auto& v : wide_) v %= p;
    headroom_ = p - 1;
}

void PolyAccumulator::add(const PolyA& a) {
    if (a.is_zero()) return;
    reserve(a.c_.size());
    if (f_->is_prime_field()) {
        const std::uint64_t bump = static_cast<std::uint64_t>(f_->p() - 1);
        if (headroom_ > std::numeric_limits<std::uint64_t>::max() / 2) normalize();
        for (std::size_t i = 0; i < a.c_.size(); ++i) wide_[i] += a.c_[i];
        headroom_ += bump;
    } else {
        for (std::size_t i = 0; i < a.c_.size(); ++i) narrow_[i] = f_->add(narrow_[i], a.c_[i]);
    }
}

void PolyAccumulator::add_scaled(const PolyA& a, fq_t c) {
    if (a.is_zero() || c == 0) return;
    reserve(a.c_.size());
    if (f_->is_prime_field()) {
        const std::uint64_t bump = static_cast<std::uint64_t>(f_->p() - 1) * (f_->p() - 1);
        if (headroom_ > std::numeric_limits<std::uint64_t>::max() / 2) normalize();
        for (std::size_t i = 0; i < a.c_.size(); ++i) wide_[i] += static_cast<std::uint64_t>(a.c_[i]) * c;
        headroom_ += bump;
    } else {
        for (std::size_t i = 0; i < a.c_.size(); ++i) narrow_[i] = f_->add(narrow_[i], f_->mul(a.c_[i], c));
    }
}

void PolyAccumulator::add_product(const PolyA& a, const PolyA& b) {
    if (a.is_zero() || b.is_zero()) return;
    const std::size_t na = a.c_.size();
    const std::size_t nb = b.c_.size();
    reserve(na + nb - 1);
    if (f_->is_prime_field()) {
        const auto p1 = static_cast<std::uint64_t>(f_->p() - 1);
        const std::uint64_t bump = p1 * p1 * std::min(na, nb);
        if (headroom_ + bump > std::numeric_limits<std::uint64_t>::max() / 2) normalize();
        headroom_ += bump;
        const fq_t* pa = a.c_.data();
        const fq_t* pb = b.c_.data();
        std::uint64_t* out = wide_.data();
        for (std::size_t i = 0; i < na; ++i) {
            const std::uint64_t ai = pa[i];
            if (ai == 0) continue;
            std::uint64_t* o = out + i;
            for (std::size_t j = 0; j < nb; ++j) o[j] += ai * pb[j];
        }
    } else {
        for (std::size_t i = 0; i < na; ++i) {
            const fq_t ai = a.c_[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < nb; ++j)
                narrow_[i + j] = f_->add(narrow_[i + j], f_->mul(ai, b.c_[j]));
        }
    }
}

PolyA PolyAccumulator::take() {
    PolyA r(*f_);
    if (f_->is_prime_field()) {
        const auto p = static_cast<std::uint64_t>(f_->p());
        r.c_.resize(wide_.size());
        for (std::size_t i = 0; i < wide_.size(); ++i) r.c_[i] = static_cast<fq_t>(wide_[i] % p);
        wide_.clear();
    } else {
        r.c_ = std::move(narrow_);
        narrow_.clear();
    }
    headroom_ = 0;
    r.trim();
    return r;
}

}  // namespace drinfeld
