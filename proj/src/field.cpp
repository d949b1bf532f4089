#include "drinfeld/field.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace drinfeld {

namespace {

constexpr int kMaxOrder = 1024;

using PolyP = std::vector<int>;  // c_0..c_d over F_p, trimmed

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP rem_p(PolyP f, const PolyP& g, int p) {
    // g monic
    const int dg = static_cast<int>(g.size()) - 1;
    for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
        const int c = f[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
    }
    trim(f);
    return f;
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& m, int p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return rem_p(std::move(r), m, p);
}

}  // namespace

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p) {
    PolyP f = coeffs;
    for (int& c : f) c = ((c % p) + p) % p;
    trim(f);
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1 || f.back() != 1) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int dg = 1; 2 * dg <= d; ++dg) {
        long long count = 1;
        for (int i = 0; i < dg; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            PolyP g(dg + 1, 0);
            long long v = idx;
            for (int i = 0; i < dg; ++i) {
                g[i] = static_cast<int>(v % p);
                v /= p;
            }
            g[dg] = 1;
            if (rem_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int p, int e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        // idx enumerates (c_{e-1}, ..., c_0) lexicographically: c_{e-1} most significant
        std::vector<int> c(e + 1, 0);
        long long v = idx;
        for (int i = 0; i < e; ++i) {
            c[i] = static_cast<int>(v % p);
            v /= p;
        }
        c[e] = 1;
        if (is_irreducible_mod_p(c, p)) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
}

const Field& Field::create(int p, int e, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("field: extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field: q exceeds supported order " + std::to_string(kMaxOrder));
    }
    std::vector<int> mod;
    if (e > 1) {
        if (modulus) {
            mod = *modulus;
            for (int& c : mod) c = ((c % p) + p) % p;
            trim(mod);
            if (static_cast<int>(mod.size()) != e + 1 || mod.back() != 1)
                throw std::invalid_argument("field: modulus must be monic of degree " + std::to_string(e));
            if (!is_irreducible_mod_p(mod, p)) throw std::invalid_argument("field: modulus is reducible over F_p");
        } else {
            mod = default_modulus(p, e);
        }
    } else if (modulus && !modulus->empty()) {
        PolyP m = *modulus;
        for (int& c : m) c = ((c % p) + p) % p;
        trim(m);
        if (m.size() != 2 || m.back() != 1) throw std::invalid_argument("field: modulus must be monic of degree 1");
    }

    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>>, const Field*> registry;
    static std::deque<Field> storage;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, e, mod);
    if (auto it = registry.find(key); it != registry.end()) return *it->second;
    storage.push_back(Field(p, e, mod));
    registry.emplace(std::move(key), &storage.back());
    return storage.back();
}

const Field& Field::of_order(int q) {
    if (q < 2) throw std::invalid_argument("field: order must be at least 2");
    for (int p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int e = 0;
        int v = q;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v != 1) throw std::invalid_argument("field: " + std::to_string(q) + " is not a prime power");
        return create(p, e);
    }
    throw std::invalid_argument("field: bad order");
}

Field::Field(int p, int e, std::vector<int> modulus) : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < e; ++i) q_ *= p;
    const auto q = static_cast<std::size_t>(q_);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    frob_.resize(q);
    frob_inv_.resize(q);

    std::vector<PolyP> as_poly(q);
    for (std::size_t x = 0; x < q; ++x) {
        as_poly[x] = coords(static_cast<fq_t>(x));
        trim(as_poly[x]);
    }
    auto encode = [&](const PolyP& f) {
        int code = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) code = code * p_ + f[i];
        return static_cast<fq_t>(code);
    };
    PolyP mod_poly = e_ > 1 ? modulus_ : PolyP{0, 1};
    for (std::size_t x = 0; x < q; ++x) {
        std::vector<int> cx = coords(static_cast<fq_t>(x));
        std::vector<int> nx(e_);
        for (int i = 0; i < e_; ++i) nx[i] = (p_ - cx[i]) % p_;
        neg_[x] = from_coords(nx);
        for (std::size_t y = 0; y < q; ++y) {
            std::vector<int> cy = coords(static_cast<fq_t>(y));
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (cx[i] + cy[i]) % p_;
            add_[x * q + y] = from_coords(s);
            if (e_ == 1) {
                mul_[x * q + y] = static_cast<fq_t>((x * y) % q);
            } else {
                mul_[x * q + y] = encode(mulmod_p(as_poly[x], as_poly[y], mod_poly, p_));
            }
        }
    }
    for (std::size_t x = 1; x < q; ++x)
        for (std::size_t y = 1; y < q; ++y)
            if (mul_[x * q + y] == 1) {
                inv_[x] = static_cast<fq_t>(y);
                break;
            }
    for (std::size_t x = 0; x < q; ++x) frob_[x] = pow(static_cast<fq_t>(x), static_cast<std::uint64_t>(p_));
    for (std::size_t x = 0; x < q; ++x) frob_inv_[frob_[x]] = static_cast<fq_t>(x);
}

fq_t Field::inv(fq_t x) const {
    if (x == 0) throw std::domain_error("field: inverse of zero");
    return inv_[x];
}

fq_t Field::pow(fq_t x, std::uint64_t n) const noexcept {
    fq_t r = 1;
    while (n) {
        if (n & 1) r = mul(r, x);
        x = mul(x, x);
        n >>= 1;
    }
    return r;
}

fq_t Field::from_int(long long n) const noexcept {
    long long v = n % p_;
    if (v < 0) v += p_;
    return static_cast<fq_t>(v);
}

std::vector<int> Field::coords(fq_t x) const {
    std::vector<int> c(e_);
    int v = x;
    for (int i = 0; i < e_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

fq_t Field::from_coords(const std::vector<int>& c) const {
    int code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p_ + (((c[i] % p_) + p_) % p_);
    return static_cast<fq_t>(code);
}

namespace {

std::string poly_in_a(const std::vector<int>& c) {
    std::string out;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += 'a';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string Field::to_string(fq_t x) const {
    if (e_ == 1) return std::to_string(x);
    return poly_in_a(coords(x));
}

std::string Field::modulus_string() const {
    if (e_ == 1) return "";
    return poly_in_a(modulus_);
}

}  // namespace drinfeld
