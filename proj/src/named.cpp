#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "drinfeld/forms.hpp"
#include "drinfeld/verify.hpp"

namespace drinfeld {

namespace {

struct Spec {
    std::string name;
    std::vector<int> args;
};

Spec parse_spec(const std::string& text) {
    Spec s;
    std::stringstream in(text);
    std::string part;
    std::getline(in, s.name, ':');
    if (s.name == "iota") {
        std::string inner;
        std::getline(in, inner, ':');
        if (inner != "fkn") throw std::invalid_argument("iota: only iota:fkn:K:N is supported");
    }
    while (std::getline(in, part, ':')) {
        try {
            std::size_t used = 0;
            s.args.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw std::invalid_argument("form '" + text + "': '" + part + "' is not an integer");
        }
    }
    return s;
}

void need_args(const Spec& s, std::size_t n, const std::string& text) {
    if (s.args.size() != n)
        throw std::invalid_argument("form '" + text + "' takes " + std::to_string(n) + " integer argument(s)");
}

long long qpow(const Field& f, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= f.q();
    return r;
}

void require_hypothesis(const Field& f, int k, int n) {
    const auto v = expansion_hypothesis(f, k, n);
    if (!v.ok) throw HypothesisError("f_{" + std::to_string(k) + "," + std::to_string(n) + "}: " + v.reason);
}

}  // namespace

std::optional<AExpansion> named_expansion(const Field& f, const std::string& text, int max_degree) {
    const Spec s = parse_spec(text);
    const int q = f.q();
    auto power = [&](long long e, int n) {
        const auto ue = static_cast<std::uint64_t>(e);
        return AExpansion::from_function(f, n, RatK::zero(f), max_degree, [ue](const PolyA& a) { return RatK(a.pow(ue)); });
    };
    if (s.name == "h") {
        need_args(s, 0, text);
        return power(q, 1);
    }
    if (s.name == "Delta") {
        need_args(s, 0, text);
        return power(static_cast<long long>(q) * (q - 1), q - 1);
    }
    if (s.name == "E") {
        need_args(s, 0, text);
        return power(1, 1);
    }
    if (s.name == "fkn") {
        need_args(s, 2, text);
        require_hypothesis(f, s.args[0], s.args[1]);
        return power(s.args[0] - s.args[1], s.args[1]);
    }
    if (s.name == "fs") {
        need_args(s, 1, text);
        if (s.args[0] < 0) throw std::invalid_argument("fs: s must be nonnegative");
        return power(q + s.args[0] * (q - 1), 1);
    }
    if (s.name == "F") {
        need_args(s, 1, text);
        if (s.args[0] < 1) throw std::invalid_argument("F: nu must be positive");
        return power(qpow(f, s.args[0]), 1);
    }
    if (s.name == "Fknl") {
        need_args(s, 3, text);
        require_hypothesis(f, s.args[0], s.args[1]);
        if (s.args[2] < 0) throw std::invalid_argument("Fknl: l must be nonnegative");
        return power((s.args[0] - s.args[1]) * qpow(f, s.args[2]), s.args[1]);
    }
    if (s.name == "iota") {
        need_args(s, 2, text);
        require_hypothesis(f, s.args[0], s.args[1]);
        const auto e = static_cast<std::uint64_t>(s.args[0] - s.args[1]);
        return iota_T(AExpansion::from_function(f, s.args[1], RatK::zero(f), max_degree - 1,
                                                [e](const PolyA& a) { return RatK(a.pow(e)); }));
    }
    if (s.name == "aexp") {
        need_args(s, 2, text);
        if (s.args[0] < 0 || s.args[1] < 1) throw std::invalid_argument("aexp: need E >= 0 and N >= 1");
        return power(s.args[0], s.args[1]);
    }
    if (s.name == "g" || s.name == "gk" || s.name == "gh") return std::nullopt;
    throw std::invalid_argument("unknown form '" + text + "'");
}

ModularForm named_form(const Field& f, const std::string& text, int prec) {
    const Spec s = parse_spec(text);
    const int q = f.q();
    if (s.name == "g") {
        need_args(s, 0, text);
        return g_form(f, prec);
    }
    if (s.name == "gk") {
        need_args(s, 1, text);
        return eisenstein_g(f, s.args[0], prec);
    }
    if (s.name == "gh") {
        need_args(s, 2, text);
        const int i = s.args[0], j = s.args[1];
        if (i < 0 || j < 0) throw std::invalid_argument("gh: exponents must be nonnegative");
        return {i * (q - 1) + j * (q + 1), reduce_type(j, f), gh_evaluate(f, {{i, j, RatK::one(f)}}, prec), false};
    }
    const int D = degree_cutoff(f, prec);
    const auto ax = named_expansion(f, text, std::max(D, 0));
    int k = 0, m = 0;
    bool quasi = false;
    if (s.name == "h") {
        k = q + 1, m = 1;
    } else if (s.name == "Delta") {
        k = q * q - 1, m = 0;
    } else if (s.name == "E") {
        k = 2, m = 1, quasi = true;
    } else if (s.name == "aexp") {
        k = s.args[0] + 2 * s.args[1], m = s.args[1];
    } else if (s.name == "fkn" || s.name == "iota") {
        k = s.args[0], m = s.args[1];
    } else if (s.name == "fs") {
        k = q + 1 + s.args[0] * (q - 1), m = 1;
    } else if (s.name == "F") {
        k = static_cast<int>(qpow(f, s.args[0]) + 1), m = 1;
    } else if (s.name == "Fknl") {
        k = static_cast<int>((s.args[0] - s.args[1]) * qpow(f, s.args[2]) + s.args[1]), m = s.args[1];
    }
    return {k, reduce_type(m, f), expand(*ax, prec), quasi};
}

}  // namespace drinfeld
