// drinfeld: command-line driver over the library.
//
// Exit codes: 0 all verdicts as expected, 1 a verdict differed, 2 usage or
// input error, 3 insufficient precision, 4 existence hypothesis failed.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/forms.hpp"
#include "drinfeld/goss.hpp"
#include "drinfeld/hecke.hpp"
#include "drinfeld/io.hpp"
#include "drinfeld/parallel.hpp"
#include "drinfeld/verify.hpp"

using namespace drinfeld;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------- config

struct Config {
    int q = 3;
    int p = 0;
    int e = 0;
    std::string modulus;
    int prec = 50;
    int jobs = 1;
    std::string cache_dir;
    std::string format = "json";
    const Field* field = nullptr;

    void resolve() {
        if (p != 0) {
            if (!is_prime(p)) throw std::invalid_argument("--p must be prime");
            const int ee = e == 0 ? 1 : e;
            long long qq = 1;
            for (int i = 0; i < ee; ++i) qq *= p;
            if (qq > 1 << 12) throw std::invalid_argument("field too large");
            q = static_cast<int>(qq);
        } else if (e != 0) {
            throw std::invalid_argument("--e requires --p");
        }
        json h = {{"q", q}, {"modulus", modulus}};
        if (modulus.empty() && Field::of_order(q).e() > 1) h["modulus"] = Field::of_order(q).modulus_string();
        field = &field_from_header(h);
        if (prec < 1) throw std::invalid_argument("--prec must be positive");
        if (jobs < 1) throw std::invalid_argument("--jobs must be positive");
        if (format != "json" && format != "text") throw std::invalid_argument("--format must be json or text");
        set_jobs(jobs);
    }

    // Thread count is left out: outputs do not depend on it.
    json to_json() const {
        return {{"p", field->p()},
                {"e", field->e()},
                {"q", field->q()},
                {"modulus", field->modulus_string()},
                {"prec", prec},
                {"cache_dir", cache_dir},
                {"format", format}};
    }
    std::string header(const std::string& command) const {
        std::ostringstream os;
        os << "# drinfeld " << command << " q=" << field->q() << " p=" << field->p() << " e=" << field->e()
           << " modulus=" << (field->modulus_string().empty() ? "-" : field->modulus_string()) << " prec=" << prec
           << " cache_dir=" << (cache_dir.empty() ? "-" : cache_dir) << " format=" << format << "\n";
        return os.str();
    }
};

Config g_cfg;

// ---------------------------------------------------------------- cache

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<json> cache_get(const std::string& kind, const std::string& key) {
    if (g_cfg.cache_dir.empty()) return std::nullopt;
    const fs::path path = fs::path(g_cfg.cache_dir) / kind / (fnv1a(key) + ".json");
    if (!fs::exists(path)) return std::nullopt;
    json j = read_json_file(path.string());
    if (!j.is_object() || j.value("key", std::string()) != key) return std::nullopt;
    return j.at("value");
}

void cache_put(const std::string& kind, const std::string& key, const json& value) {
    if (g_cfg.cache_dir.empty()) return;
    const fs::path path = fs::path(g_cfg.cache_dir) / kind / (fnv1a(key) + ".json");
    write_text_file(path.string(), dump_canonical({{"key", key}, {"value", value}}));
}

std::string field_key() { return "q=" + std::to_string(g_cfg.field->q()) + "|modulus=" + g_cfg.field->modulus_string(); }

// Loads (verifying bit-identical recomputation) or stores the period Goss table.
void prepare_goss_table(int nmax) {
    if (g_cfg.cache_dir.empty() || nmax < 1) return;
    const std::string key = "goss|" + field_key() + "|lattice=period|nmax=" + std::to_string(nmax);
    if (auto hit = cache_get("goss", key)) {
        seed_period_table(goss_table_from_json(*hit));
        return;
    }
    cache_put("goss", key, goss_table_to_json(period_goss_table(*g_cfg.field, nmax)));
}

ModularForm form_from_spec(const std::string& spec, int prec) {
    const std::string key = "form|" + field_key() + "|spec=" + spec + "|prec=" + std::to_string(prec);
    if (auto hit = cache_get("forms", key)) {
        TruncSeries s = series_from_json(hit->at("series"));
        if (s.field_ptr() != g_cfg.field) throw std::invalid_argument("cache entry over a different field");
        return {hit->at("k").get<int>(), hit->at("m").get<int>(), std::move(s), hit->at("quasi").get<bool>()};
    }
    if (auto ax = named_expansion(*g_cfg.field, spec, 0)) prepare_goss_table(ax->n());
    ModularForm f = named_form(*g_cfg.field, spec, prec);
    cache_put("forms", key, {{"k", f.k}, {"m", f.m}, {"quasi", f.quasi}, {"series", series_to_json(f.series)}});
    return f;
}

// ---------------------------------------------------------------- io helpers

void emit(const std::string& out, const std::string& text) {
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

std::string render_series(const std::string& command, const TruncSeries& s) {
    if (g_cfg.format == "text") return g_cfg.header(command) + series_to_text(s) + "\n";
    json j = series_to_json(s);
    j["config"] = g_cfg.to_json();
    return dump_canonical(j);
}

TruncSeries load_series(const std::string& path) {
    TruncSeries s = series_from_json(read_json_file(path));
    if (s.field_ptr() != g_cfg.field)
        throw std::invalid_argument(path + " is over F_" + std::to_string(s.field().q()) + ", not the configured field");
    return s;
}

// A form argument is a file when such a file exists, a named-form spec otherwise.
TruncSeries series_arg(const std::string& arg, int prec) {
    if (fs::exists(arg)) return load_series(arg);
    return form_from_spec(arg, prec).series;
}

std::string rat_text(const RatK& r) { return r.to_string(); }

json witness_json(const std::optional<int>& w) { return w ? json(*w) : json(nullptr); }

// ---------------------------------------------------------------- reports

struct Check {
    std::string name;
    json parameters;
    std::string verdict;
    std::string expected;
    json witness;
    json detail = json::object();
    bool passed() const { return verdict == expected; }
};

int finish_report(const std::string& command, const std::vector<Check>& checks, const std::string& out) {
    bool all = true;
    for (const auto& c : checks) all = all && c.passed();
    if (g_cfg.format == "text") {
        std::ostringstream os;
        os << g_cfg.header(command);
        for (const auto& c : checks) {
            os << (c.passed() ? "PASS " : "FAIL ") << c.name << " " << c.parameters.dump() << " verdict=" << c.verdict
               << " expected=" << c.expected;
            if (!c.witness.is_null()) os << " witness=" << c.witness.dump();
            for (const auto& [k, v] : c.detail.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
            os << "\n";
        }
        os << (all ? "PASS" : "FAIL") << "\n";
        emit(out, os.str());
    } else {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"check", c.name},
                           {"parameters", c.parameters},
                           {"verdict", c.verdict},
                           {"expected", c.expected},
                           {"passed", c.passed()},
                           {"witness", c.witness},
                           {"detail", c.detail}});
        emit(out, dump_canonical({{"format", 1}, {"config", g_cfg.to_json()}, {"checks", arr}, {"passed", all}}));
    }
    return all ? 0 : 1;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "' (expected LO:HI)");
    }
}

std::string expect_bool(const std::string& s, const char* yes, const char* no) {
    if (s == "true" || s == yes) return yes;
    if (s == "false" || s == no) return no;
    throw std::invalid_argument(std::string("--expect must be ") + yes + " or " + no);
}

// ---------------------------------------------------------------- commands

struct ExpandOpts {
    std::string form;
    std::vector<int> fkn;
    std::string in;
    std::string aexp_out;
    std::string out;
};

int cmd_expand(const ExpandOpts& o) {
    const int given = !o.form.empty() + !o.fkn.empty() + !o.in.empty();
    if (given != 1) throw std::invalid_argument("expand: give exactly one of --form, --fkn, --in");
    const Field& f = *g_cfg.field;
    TruncSeries s;
    std::optional<AExpansion> ax;
    if (!o.in.empty()) {
        ax = aexpansion_from_json(read_json_file(o.in));
        if (&ax->field() != &f) throw std::invalid_argument(o.in + " is not over the configured field");
        prepare_goss_table(ax->n());
        s = expand(*ax, g_cfg.prec);
    } else {
        const std::string spec =
            o.form.empty() ? "fkn:" + std::to_string(o.fkn.at(0)) + ":" + std::to_string(o.fkn.at(1)) : o.form;
        s = form_from_spec(spec, g_cfg.prec).series;
        if (!o.aexp_out.empty()) {
            ax = named_expansion(f, spec, degree_cutoff(f, g_cfg.prec));
            if (!ax) throw std::invalid_argument("form '" + spec + "' has no A-expansion to write");
        }
    }
    if (!o.aexp_out.empty() && ax) write_text_file(o.aexp_out, dump_canonical(aexpansion_to_json(*ax)));
    emit(o.out, render_series("expand", s));
    return 0;
}

struct HeckeOpts {
    std::string in;
    std::string prime;
    int k = 0;
    int m = 0;
    int out_prec = -1;
    std::string out;
};

int cmd_hecke(const HeckeOpts& o) {
    const Field& f = *g_cfg.field;
    ModularForm form{o.k, reduce_type(o.m, f), load_series(o.in), false};
    const PolyA prime = parse_poly(f, o.prime);
    const ModularForm r = hecke_apply(form, prime, o.out_prec);
    emit(o.out, render_series("hecke", r.series));
    return 0;
}

struct VerifyOpts {
    std::string out;
    // hypothesis
    int k = 0, n = 0;
    std::string expect;
    // eigen
    std::string form, in;
    int m = 0;
    std::vector<std::string> primes;
    int prime_degree = 0;
    int out_prec = -1;
    int expect_power = -1;
    // congruence
    std::string family = "F";
    int d = 1, nu = 0;
    std::string modulus_kind = "prime";
    // congruent
    std::string a, b, base;
    int exponent = 1;
    // powersum
    int r = 1, dmax = 1;
    // product
    std::vector<std::string> lhs;
    std::string rhs;
};

int verify_hypothesis(const VerifyOpts& o) {
    const auto v = expansion_hypothesis(*g_cfg.field, o.k, o.n);
    Check c{"hypothesis", {{"k", o.k}, {"n", o.n}}, v.ok ? "ok" : "fails",
            o.expect.empty() ? "ok" : expect_bool(o.expect, "ok", "fails"), nullptr};
    c.detail["reason"] = v.reason;
    c.detail["divisibility"] = v.divisibility;
    return finish_report("verify hypothesis", {c}, o.out);
}

int verify_eigen(const VerifyOpts& o) {
    const Field& f = *g_cfg.field;
    ModularForm form;
    std::optional<int> power;
    if (!o.form.empty() == !o.in.empty()) throw std::invalid_argument("verify eigen: give exactly one of --form, --in");
    if (!o.form.empty()) {
        form = form_from_spec(o.form, g_cfg.prec);
        if (auto ax = named_expansion(f, o.form, 0)) power = ax->n();
    } else {
        if (o.k <= 0) throw std::invalid_argument("verify eigen --in needs --k");
        form = {o.k, reduce_type(o.m, f), load_series(o.in), false};
    }
    if (o.expect_power >= 0) power = o.expect_power;
    std::vector<PolyA> primes;
    for (const auto& s : o.primes) primes.push_back(parse_poly(f, s));
    if (o.prime_degree > 0)
        for (const auto& p : irreducible_enum(f, o.prime_degree)) primes.push_back(p);
    if (primes.empty()) throw std::invalid_argument("verify eigen: give --prime or --prime-degree");
    std::vector<Check> checks;
    for (const auto& prime : primes) {
        const EigenResult r = eigen_solve(form, prime, o.out_prec);
        Check c{"eigen", {{"prime", prime.to_string()}, {"k", form.k}, {"m", form.m}, {"out_prec", r.prec}}, "", "", nullptr};
        if (!o.form.empty()) c.parameters["form"] = o.form;
        c.witness = witness_json(r.witness);
        if (!r.eigen) {
            c.verdict = "not_eigen";
        } else {
            c.detail["lambda"] = rat_text(*r.lambda);
            const auto j = as_prime_power(*r.lambda, prime, form.k);
            if (j) c.detail["prime_power"] = *j;
            c.verdict = power ? (j == power ? "eigen_power_" + std::to_string(*power) : "eigen_other") : "eigen";
        }
        c.expected = power ? "eigen_power_" + std::to_string(*power) : "eigen";
        if (!o.expect.empty()) c.expected = o.expect;
        checks.push_back(std::move(c));
    }
    return finish_report("verify eigen", checks, o.out);
}

int verify_congruence(const VerifyOpts& o) {
    const Field& f = *g_cfg.field;
    if (o.family != "F") throw std::invalid_argument("verify congruence: only --family F (F_{k,n,l}) is available");
    if (o.d < 1 || o.nu < 0) throw std::invalid_argument("verify congruence: need d >= 1 and nu >= 0");
    const auto spec = [&](int l) {
        return "Fknl:" + std::to_string(o.k) + ":" + std::to_string(o.n) + ":" + std::to_string(l);
    };
    const TruncSeries hi = form_from_spec(spec(o.d + o.nu), g_cfg.prec).series;
    const TruncSeries lo = form_from_spec(spec(o.nu), g_cfg.prec).series;
    const long long e = family_congruence_exponent(f, o.k, o.n, o.nu);
    std::vector<Modulus> mods;
    if (o.modulus_kind == "prime") {
        for (const auto& p : irreducible_enum(f, o.d)) mods.emplace_back(p, static_cast<int>(e));
    } else if (o.modulus_kind == "bracket") {
        mods.emplace_back(bracket(f, o.d), static_cast<int>(e));
    } else {
        throw std::invalid_argument("--modulus-kind must be prime or bracket");
    }
    const std::string expected = o.expect.empty() ? "holds" : expect_bool(o.expect, "holds", "fails");
    std::vector<Check> checks;
    for (const auto& mod : mods) {
        const auto r = congruent_mod(hi, lo, mod);
        Check c{"congruence",
                {{"family", o.family}, {"k", o.k}, {"n", o.n}, {"d", o.d}, {"nu", o.nu}, {"modulus", mod.to_string()},
                 {"prec", r.checked_prec}},
                r.holds ? "holds" : "fails", expected, witness_json(r.witness)};
        if (r.witness_prime) {
            c.detail["witness_prime"] = r.witness_prime->to_string();
            c.detail["witness_valuation"] = r.witness_valuation;
        }
        checks.push_back(std::move(c));
    }
    return finish_report("verify congruence", checks, o.out);
}

int verify_congruent(const VerifyOpts& o) {
    const Field& f = *g_cfg.field;
    if (o.a.empty() || o.b.empty() || o.base.empty()) throw std::invalid_argument("verify congruent needs --a, --b, --base");
    const Modulus mod(parse_poly(f, o.base), o.exponent);
    const auto r = congruent_mod(series_arg(o.a, g_cfg.prec), series_arg(o.b, g_cfg.prec), mod);
    Check c{"congruent", {{"a", o.a}, {"b", o.b}, {"modulus", mod.to_string()}, {"prec", r.checked_prec}},
            r.holds ? "holds" : "fails", o.expect.empty() ? "holds" : expect_bool(o.expect, "holds", "fails"),
            witness_json(r.witness)};
    if (r.witness_prime) {
        c.detail["witness_prime"] = r.witness_prime->to_string();
        c.detail["witness_valuation"] = r.witness_valuation;
    }
    return finish_report("verify congruent", {c}, o.out);
}

int verify_powersum(const VerifyOpts& o) {
    const Field& f = *g_cfg.field;
    const PowerSumReport rep = min_d(f, o.r, o.dmax);
    std::optional<int> bad;
    json table = json::array();
    for (int j = 1; j <= o.r; ++j) {
        json row = json::array();
        for (int d = 1; d <= o.dmax; ++d) {
            const PolyA& s = rep.table[j - 1][d - 1];
            row.push_back(s.to_string());
            if (j % (f.q() - 1) != 0 && !s.is_zero() && !bad) bad = j;
        }
        table.push_back(std::move(row));
    }
    Check c{"powersum", {{"r", o.r}, {"dmax", o.dmax}}, bad ? "fails" : "holds", "holds", witness_json(bad)};
    c.detail["d_r"] = rep.d_r ? json(*rep.d_r) : json(nullptr);
    c.detail["table"] = std::move(table);
    return finish_report("verify powersum", {c}, o.out);
}

int verify_product(const VerifyOpts& o) {
    const Field& f = *g_cfg.field;
    if (o.lhs.empty() || o.rhs.empty()) throw std::invalid_argument("verify product needs --lhs (repeatable) and --rhs");
    const int D = degree_cutoff(f, g_cfg.prec);
    auto ax_of = [&](const std::string& spec) {
        auto ax = named_expansion(f, spec, D);
        if (!ax) throw std::invalid_argument("form '" + spec + "' has no A-expansion");
        prepare_goss_table(ax->n());
        return *ax;
    };
    std::vector<AExpansion> lhs;
    for (const auto& s : o.lhs) lhs.push_back(ax_of(s));
    const auto r = product_identity_check(lhs, ax_of(o.rhs), g_cfg.prec);
    Check c{"product", {{"lhs", o.lhs}, {"rhs", o.rhs}, {"prec", r.prec}}, r.holds ? "holds" : "fails",
            o.expect.empty() ? "holds" : expect_bool(o.expect, "holds", "fails"), witness_json(r.witness)};
    return finish_report("verify product", {c}, o.out);
}

struct RecoverOpts {
    std::string in;
    int n = 1;
    int target_degree = -1;
    std::string expect = "recovered";
    std::string out;
    std::string report;
};

const char* status_name(RecoveryStatus s) {
    switch (s) {
        case RecoveryStatus::Recovered: return "recovered";
        case RecoveryStatus::Inconsistent: return "inconsistent";
        case RecoveryStatus::Underdetermined: return "underdetermined";
    }
    return "?";
}

int cmd_recover(const RecoverOpts& o) {
    if (o.expect != "recovered" && o.expect != "inconsistent" && o.expect != "underdetermined")
        throw std::invalid_argument("--expect must be recovered, inconsistent or underdetermined");
    const TruncSeries s = load_series(o.in);
    prepare_goss_table(o.n);
    const RecoveryResult r = aexp_recover(s, o.n, o.target_degree);
    if (!o.out.empty() && r.expansion) write_text_file(o.out, dump_canonical(aexpansion_to_json(*r.expansion)));
    Check c{"recover", {{"in", o.in}, {"n", o.n}, {"target_degree", o.target_degree}, {"prec", s.prec()}},
            status_name(r.status), o.expect, witness_json(r.witness)};
    c.detail["determined_degree"] = r.determined_degree;
    c.detail["rank"] = r.rank;
    c.detail["unknowns"] = r.unknowns;
    c.detail["rows"] = r.rows;
    c.detail["message"] = r.message;
    return finish_report("recover", {c}, o.report);
}

struct GhOpts {
    std::string in, form;
    int k = 0, m = 0;
    int buffer = 10;
    bool allow_quasi = false;
    std::string expect = "in_span";
    std::string out;
};

int cmd_ghexpress(const GhOpts& o) {
    const Field& f = *g_cfg.field;
    if (!o.form.empty() == !o.in.empty()) throw std::invalid_argument("ghexpress: give exactly one of --form, --in");
    ModularForm form;
    if (!o.form.empty()) {
        form = form_from_spec(o.form, g_cfg.prec);
    } else {
        if (o.k <= 0) throw std::invalid_argument("ghexpress --in needs --k");
        form = {o.k, reduce_type(o.m, f), load_series(o.in), false};
    }
    const GhResult r = gh_express(form, o.buffer, o.allow_quasi);
    const std::string verdict = r.in_span ? "in_span" : "not_in_span";
    const std::string expected = expect_bool(o.expect == "true" ? "in_span" : o.expect, "in_span", "not_in_span");
    if (g_cfg.format == "text") {
        std::ostringstream os;
        os << g_cfg.header("ghexpress") << "k=" << form.k << " m=" << form.m << " " << verdict
           << " checked_prec=" << r.checked_prec;
        if (r.witness) os << " witness=" << *r.witness;
        os << "\n";
        for (const auto& t : r.terms) os << "g^" << t.i << " h^" << t.j << " : " << t.coeff.to_string() << "\n";
        emit(o.out, os.str());
    } else {
        json terms = json::array();
        for (const auto& t : r.terms)
            terms.push_back({{"i", t.i}, {"j", t.j}, {"coeff", {t.coeff.num().to_string(), t.coeff.den().to_string()}}});
        emit(o.out, dump_canonical({{"format", 1},
                                    {"config", g_cfg.to_json()},
                                    {"k", form.k},
                                    {"m", form.m},
                                    {"in_span", r.in_span},
                                    {"checked_prec", r.checked_prec},
                                    {"witness", witness_json(r.witness)},
                                    {"terms", terms}}));
    }
    return verdict == expected ? 0 : 1;
}

struct SearchOpts {
    std::string n = "1:3", l = "0:1", u = "0:2";
    int phi_nu = 0;
    std::string out;
};

int cmd_search(const SearchOpts& o) {
    SearchOptions opt;
    auto [n0, n1] = parse_range(o.n);
    auto [l0, l1] = parse_range(o.l);
    auto [u0, u1] = parse_range(o.u);
    opt.n = {n0, n1};
    opt.l = {l0, l1};
    opt.k_extra = {u0, u1};
    opt.prec = g_cfg.prec;
    opt.phi_nu_max = o.phi_nu;
    json rep = search_products(*g_cfg.field, opt);
    rep["config"] = g_cfg.to_json();
    if (g_cfg.format == "text") {
        std::ostringstream os;
        os << g_cfg.header("search");
        for (const auto& e : rep["entries"])
            os << e["check"].get<std::string>() << " " << e["parameters"].dump() << " " << e["verdict"].get<std::string>()
               << (e["witness"].is_null() ? "" : " witness=" + e["witness"].dump()) << "\n";
        emit(o.out, os.str());
    } else {
        emit(o.out, dump_canonical(rep));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Drinfeld modular forms: A-expansions, Hecke operators and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI file with option defaults");
    app.add_option("--q", g_cfg.q, "Field order (prime power)")->capture_default_str();
    app.add_option("--p", g_cfg.p, "Field characteristic (with --e)");
    app.add_option("--e", g_cfg.e, "Extension degree");
    app.add_option("--modulus", g_cfg.modulus, "Defining polynomial of F_q over F_p in 'a'");
    app.add_option("--prec", g_cfg.prec, "t-adic precision N")->capture_default_str();
    app.add_option("--jobs", g_cfg.jobs, "Worker threads")->capture_default_str();
    app.add_option("--cache-dir", g_cfg.cache_dir, "Cache for named-form series and Goss tables");
    app.add_option("--format", g_cfg.format, "Output format: json or text")->capture_default_str();

    std::function<int()> action;

    ExpandOpts eo;
    auto* expand_cmd = app.add_subcommand("expand", "t-expansion of a named form or an A-expansion file");
    expand_cmd->add_option("--form", eo.form, "Named form spec");
    expand_cmd->add_option("--fkn", eo.fkn, "Shorthand for --form fkn:K:N")->expected(2);
    expand_cmd->add_option("--in", eo.in, "A-expansion file");
    expand_cmd->add_option("--aexp-out", eo.aexp_out, "Also write the A-expansion");
    expand_cmd->add_option("--out", eo.out, "Output file (stdout by default)");
    expand_cmd->callback([&] { action = [&] { return cmd_expand(eo); }; });

    HeckeOpts ho;
    auto* hecke_cmd = app.add_subcommand("hecke", "Apply T_P to a series file");
    hecke_cmd->add_option("--in", ho.in, "Series file")->required();
    hecke_cmd->add_option("--prime", ho.prime, "Monic irreducible P")->required();
    hecke_cmd->add_option("--k", ho.k, "Weight")->required();
    hecke_cmd->add_option("--m", ho.m, "Type")->required();
    hecke_cmd->add_option("--out-prec", ho.out_prec, "Output precision (default floor(N / q^deg P))");
    hecke_cmd->add_option("--out", ho.out, "Output file");
    hecke_cmd->callback([&] { action = [&] { return cmd_hecke(ho); }; });

    VerifyOpts vo;
    auto* verify_cmd = app.add_subcommand("verify", "Verification checks");
    verify_cmd->require_subcommand(1);
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", vo.out, "Report file");
        c->add_option("--expect", vo.expect, "Expected verdict");
    };
    auto* hyp = verify_cmd->add_subcommand("hypothesis", "Existence hypothesis for f_{k,n}");
    hyp->add_option("--k", vo.k)->required();
    hyp->add_option("--n", vo.n)->required();
    add_out(hyp);
    hyp->callback([&] { action = [&] { return verify_hypothesis(vo); }; });

    auto* eig = verify_cmd->add_subcommand("eigen", "Hecke eigenvalue check");
    eig->add_option("--form", vo.form, "Named form spec");
    eig->add_option("--in", vo.in, "Series file");
    eig->add_option("--k", vo.k, "Weight (with --in)");
    eig->add_option("--m", vo.m, "Type (with --in)");
    eig->add_option("--prime", vo.primes, "Prime (repeatable)");
    eig->add_option("--prime-degree", vo.prime_degree, "All monic primes of this degree");
    eig->add_option("--out-prec", vo.out_prec, "Output precision");
    eig->add_option("--expect-power", vo.expect_power, "Expected exponent n in lambda = P^n");
    add_out(eig);
    eig->callback([&] { action = [&] { return verify_eigen(vo); }; });

    auto* cong = verify_cmd->add_subcommand("congruence", "F_{k,n,d+nu} = F_{k,n,nu} mod P^{q^nu p^v_p(k-n)}");
    cong->add_option("--family", vo.family)->capture_default_str();
    cong->add_option("--k", vo.k)->required();
    cong->add_option("--n", vo.n)->required();
    cong->add_option("--d", vo.d)->capture_default_str();
    cong->add_option("--nu", vo.nu)->capture_default_str();
    cong->add_option("--modulus-kind", vo.modulus_kind, "prime (each P of degree d) or bracket ([d])")->capture_default_str();
    add_out(cong);
    cong->callback([&] { action = [&] { return verify_congruence(vo); }; });

    auto* cgt = verify_cmd->add_subcommand("congruent", "Two series congruent mod base^exp");
    cgt->add_option("--a", vo.a, "Series file or named form")->required();
    cgt->add_option("--b", vo.b, "Series file or named form")->required();
    cgt->add_option("--base", vo.base, "Squarefree monic base")->required();
    cgt->add_option("--exp", vo.exponent, "Exponent")->capture_default_str();
    add_out(cgt);
    cgt->callback([&] { action = [&] { return verify_congruent(vo); }; });

    auto* ps = verify_cmd->add_subcommand("powersum", "Power sums S_{j,d}");
    ps->add_option("--r", vo.r)->required();
    ps->add_option("--dmax", vo.dmax)->required();
    add_out(ps);
    ps->callback([&] { action = [&] { return verify_powersum(vo); }; });

    auto* prod = verify_cmd->add_subcommand("product", "Product identity of A-expansion forms");
    prod->add_option("--lhs", vo.lhs, "Factor spec (repeatable)")->required();
    prod->add_option("--rhs", vo.rhs, "Right-hand spec")->required();
    add_out(prod);
    prod->callback([&] { action = [&] { return verify_product(vo); }; });

    RecoverOpts ro;
    auto* rec = app.add_subcommand("recover", "Recover an A-expansion from a series file");
    rec->add_option("--in", ro.in, "Series file")->required();
    rec->add_option("--n", ro.n, "Goss index n")->required();
    rec->add_option("--target-degree", ro.target_degree, "Degree that must be determined");
    rec->add_option("--expect", ro.expect, "recovered | inconsistent | underdetermined")->capture_default_str();
    rec->add_option("--out", ro.out, "A-expansion file");
    rec->add_option("--report", ro.report, "Report file (stdout by default)");
    rec->callback([&] { action = [&] { return cmd_recover(ro); }; });

    GhOpts go;
    auto* gh = app.add_subcommand("ghexpress", "Coordinates in the g^i h^j basis");
    gh->add_option("--in", go.in, "Series file");
    gh->add_option("--form", go.form, "Named form spec");
    gh->add_option("--k", go.k, "Weight (with --in)");
    gh->add_option("--m", go.m, "Type (with --in)");
    gh->add_option("--buffer", go.buffer, "Surplus coefficients to match")->capture_default_str();
    gh->add_flag("--allow-quasi", go.allow_quasi, "Accept quasi-modular input");
    gh->add_option("--expect", go.expect, "in_span | not_in_span")->capture_default_str();
    gh->add_option("--out", go.out, "Output file");
    gh->callback([&] { action = [&] { return cmd_ghexpress(go); }; });

    SearchOpts so;
    auto* search = app.add_subcommand("search", "Product-identity search");
    search->add_option("--n", so.n, "Goss index range LO:HI")->capture_default_str();
    search->add_option("--l", so.l, "Frobenius twist range")->capture_default_str();
    search->add_option("--u", so.u, "Range of u in k = 2n + u(q-1)")->capture_default_str();
    search->add_option("--phi-nu", so.phi_nu, "Probe Phi_{nu,j} up to this nu")->capture_default_str();
    search->add_option("--out", so.out, "Output file");
    search->callback([&] { action = [&] { return cmd_search(so); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        g_cfg.resolve();
        return action();
    } catch (const HypothesisError& e) {
        std::cerr << "error: hypothesis failed: " << e.what() << "\n";
        return 4;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what();
        if (e.required() >= 0) std::cerr << " (required input precision " << e.required() << ")";
        std::cerr << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
