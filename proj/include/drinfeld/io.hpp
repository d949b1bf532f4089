#pragma once

// Text syntax and canonical file formats.
//
// Polynomial syntax (printer output):
//   poly    := "0" | term ("+" term)*            terms in decreasing T-degree
//   term    := [coeff "*"] "T" ["^" k] | coeff
//   coeff   := integer in 0..p-1              (prime field)
//            | "(" poly_in_a ")" | poly_in_a  (extension field; parenthesized
//                                              when it has several terms and
//                                              multiplies a power of T)
//   ratio   := poly | factor "/" factor       factor = poly, parenthesized
//                                              when it has several terms
// The parser accepts any rational expression built from integers, "T", "a",
// "+", "-", "*", "/", "^" (nonnegative integer exponents) and parentheses.

#include <istream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "drinfeld/forms.hpp"
#include "drinfeld/goss.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

/// Throws std::invalid_argument with the offending position.
RatK parse_ratk(const Field& f, std::string_view text);
/// Throws std::invalid_argument if the expression is not a polynomial.
PolyA parse_poly(const Field& f, std::string_view text);

/// Field description used in file headers: {"q", "modulus"}.
nlohmann::json field_header(const Field& f);
/// Field named by a header; throws std::invalid_argument on mismatch or garbage.
const Field& field_from_header(const nlohmann::json& j);

/// {"format":1,"q":...,"modulus":...,"prec":N,"coeffs":[["pow","num","den"],...]}
nlohmann::json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

/// {"format":1,"q":...,"modulus":...,"n":...,"max_degree":D,"c0":["num","den"],"coeffs":[["a","num","den"],...]}
nlohmann::json aexpansion_to_json(const AExpansion& ax);
AExpansion aexpansion_from_json(const nlohmann::json& j);

/// {"format":1,"q":...,"modulus":...,"alphas":[[num,den],...],"nmax":...,"polys":[[[pow,num,den],...],...]}
nlohmann::json goss_table_to_json(const GossTable& t);
/// Rebuilds the table from its alphas and checks the stored polynomials.
GossTable goss_table_from_json(const nlohmann::json& j);

/// Canonical dump: two-space indent and a trailing newline.
std::string dump_canonical(const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);
/// Writes atomically (temporary file and rename).
void write_text_file(const std::string& path, const std::string& text);

/// Human-readable rendering: "c0 + c1*t + ... + O(t^{N+1})".
std::string series_to_text(const TruncSeries& s);

}  // namespace drinfeld
