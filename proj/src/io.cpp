#include "drinfeld/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace drinfeld {

using nlohmann::json;

// ---------------------------------------------------------------- printing

std::string PolyA::to_string() const {
    if (is_zero()) return "0";
    const Field& f = *f_;
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const fq_t c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        const std::string cs = f.to_string(c);
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += 'T';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

namespace {

std::string wrap(const std::string& s) { return s.find('+') != std::string::npos ? "(" + s + ")" : s; }

}  // namespace

std::string RatK::to_string() const {
    if (integral()) return num_.to_string();
    return wrap(num_.to_string()) + "/" + wrap(den_.to_string());
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const Field& f, std::string_view text, char var) : f_(f), s_(text), var_(var) {}

    RatK parse() {
        RatK v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + " in '" + std::string(s_) + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long long integer() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > (1LL << 40)) fail("integer too large");
        }
        return v;
    }
    RatK expr() {
        RatK v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    RatK term() {
        RatK v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                RatK d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }
    RatK unary() {
        if (eat('-')) return -unary();
        return power();
    }
    RatK power() {
        RatK base = atom();
        if (eat('^')) return base.pow(integer());
        return base;
    }
    RatK atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatK v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatK::constant(f_, f_.from_int(integer()));
        if (c == var_) {
            ++pos_;
            return RatK(PolyA::T(f_));
        }
        if (c == 'a' && var_ == 'T') {
            if (f_.e() == 1) fail("'a' is only defined over extension fields");
            ++pos_;
            return RatK::constant(f_, f_.gen());
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const Field& f_;
    std::string_view s_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace

RatK parse_ratk(const Field& f, std::string_view text) { return Parser(f, text, 'T').parse(); }

PolyA parse_poly(const Field& f, std::string_view text) {
    RatK v = parse_ratk(f, text);
    if (!v.integral()) throw std::invalid_argument("'" + std::string(text) + "' is not a polynomial");
    return v.num();
}

// ---------------------------------------------------------------- headers

json field_header(const Field& f) { return {{"q", f.q()}, {"modulus", f.modulus_string()}}; }

const Field& field_from_header(const json& j) {
    if (!j.is_object() || !j.contains("q")) throw std::invalid_argument("file header lacks q");
    const Field& base = Field::of_order(j.at("q").get<int>());
    const std::string mod = j.value("modulus", std::string());
    if (base.e() == 1) {
        if (!mod.empty()) throw std::invalid_argument("prime field header with a modulus");
        return base;
    }
    const Field& fp = Field::create(base.p(), 1);
    const RatK m = Parser(fp, mod, 'a').parse();
    if (!m.integral()) throw std::invalid_argument("modulus is not a polynomial");
    std::vector<int> c;
    for (fq_t x : m.num().coeffs()) c.push_back(static_cast<int>(x));
    return Field::create(base.p(), base.e(), c);
}

namespace {

void check_format(const json& j) {
    if (!j.is_object() || j.value("format", 0) != 1) throw std::invalid_argument("unsupported file format version");
}

json coeff_list(const TruncSeries& s) {
    json arr = json::array();
    for (int i = 0; i <= s.prec(); ++i)
        if (!s[i].is_zero()) arr.push_back({std::to_string(i), s[i].num().to_string(), s[i].den().to_string()});
    return arr;
}

TruncSeries coeffs_from_list(const Field& f, int prec, const json& arr) {
    TruncSeries s(f, prec);
    int last = -1;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("coefficient entries must be [pow, num, den]");
        const int pw = std::stoi(e[0].get<std::string>());
        if (pw <= last || pw > prec) throw std::invalid_argument("coefficient powers must increase within the precision");
        last = pw;
        s.set(pw, RatK(parse_poly(f, e[1].get<std::string>()), parse_poly(f, e[2].get<std::string>())));
    }
    return s;
}

}  // namespace

json series_to_json(const TruncSeries& s) {
    json j = {{"format", 1}};
    j.update(field_header(s.field()));
    j["prec"] = s.prec();
    j["coeffs"] = coeff_list(s);
    return j;
}

TruncSeries series_from_json(const json& j) {
    check_format(j);
    const Field& f = field_from_header(j);
    return coeffs_from_list(f, j.at("prec").get<int>(), j.at("coeffs"));
}

json aexpansion_to_json(const AExpansion& ax) {
    json j = {{"format", 1}};
    j.update(field_header(ax.field()));
    j["n"] = ax.n();
    j["max_degree"] = ax.max_degree();
    j["c0"] = {ax.c0().num().to_string(), ax.c0().den().to_string()};
    json arr = json::array();
    for (const auto& [a, c] : ax.coeffs()) arr.push_back({a.to_string(), c.num().to_string(), c.den().to_string()});
    j["coeffs"] = std::move(arr);
    return j;
}

AExpansion aexpansion_from_json(const json& j) {
    check_format(j);
    const Field& f = field_from_header(j);
    const auto& c0 = j.at("c0");
    AExpansion ax(f, j.at("n").get<int>(),
                  RatK(parse_poly(f, c0.at(0).get<std::string>()), parse_poly(f, c0.at(1).get<std::string>())),
                  j.at("max_degree").get<int>());
    for (const auto& e : j.at("coeffs")) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("coefficient entries must be [a, num, den]");
        ax.set(parse_poly(f, e[0].get<std::string>()),
               RatK(parse_poly(f, e[1].get<std::string>()), parse_poly(f, e[2].get<std::string>())));
    }
    return ax;
}

json goss_table_to_json(const GossTable& t) {
    json j = {{"format", 1}};
    j.update(field_header(t.field()));
    json alphas = json::array();
    for (const auto& a : t.alphas()) alphas.push_back({a.num().to_string(), a.den().to_string()});
    j["alphas"] = std::move(alphas);
    j["nmax"] = t.nmax();
    j["xprec"] = t.xprec();
    json polys = json::array();
    for (int n = 1; n <= t.nmax(); ++n) polys.push_back(coeff_list(t.G(n)));
    j["polys"] = std::move(polys);
    return j;
}

GossTable goss_table_from_json(const json& j) {
    check_format(j);
    const Field& f = field_from_header(j);
    std::vector<RatK> alphas;
    for (const auto& a : j.at("alphas"))
        alphas.emplace_back(parse_poly(f, a.at(0).get<std::string>()), parse_poly(f, a.at(1).get<std::string>()));
    GossTable t(f, std::move(alphas), j.at("nmax").get<int>(), j.value("xprec", -1));
    const auto& polys = j.at("polys");
    if (static_cast<int>(polys.size()) != t.nmax()) throw std::invalid_argument("goss table: wrong number of polynomials");
    for (int n = 1; n <= t.nmax(); ++n)
        if (!coeffs_from_list(f, t.xprec(), polys[n - 1]).identical(t.G(n)))
            throw std::invalid_argument("goss table: stored G_" + std::to_string(n) + " disagrees with its alphas");
    return t;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string series_to_text(const TruncSeries& s) {
    std::string out;
    for (int i = 0; i <= s.prec(); ++i) {
        if (s[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = s[i].to_string();
        const bool complex = c.find_first_of("+/") != std::string::npos;
        if (i == 0) {
            out += c;
            continue;
        }
        if (c != "1") out += (complex ? "(" + c + ")" : c) + "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(s.prec() + 1) + ")";
}

}  // namespace drinfeld
