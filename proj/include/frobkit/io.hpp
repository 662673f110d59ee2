#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "frobkit/canonical.hpp"
#include "frobkit/matrix.hpp"
#include "frobkit/poly.hpp"
#include "frobkit/triple.hpp"

namespace frobkit {

inline constexpr std::string_view kSchema = "frobkit/1";

/// Matrix text:
///
///   header := field rows cols [m=c0,c1,...]
///   field  := "Q" | q          (q a prime power)
///   then `rows` lines of `cols` whitespace-separated entries.
///
/// Entries are residues for prime fields (negatives accepted on input),
/// indices sum c_i p^i for extension fields and "a" or "a/b" over Q. The
/// optional m= gives a non-default extension modulus, low to high. Blank
/// lines and anything after '#' are ignored.
std::string format_matrix(const Mat& m);
Mat parse_matrix(std::string_view text);

/// Three matrix blocks in a row: A (n x n), v (n x 1), phi (1 x n).
std::string format_triple(const Triple& t);
Triple parse_triple(std::string_view text);

/// Whole file as a string; ParseError if it cannot be opened.
std::string read_file(const std::string& path);

nlohmann::json field_to_json(Field f);
Field field_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j);
nlohmann::json triple_to_json(const Triple& t);
Triple triple_from_json(const nlohmann::json& j);
nlohmann::json frobenius_to_json(const FrobeniusForm& f);
nlohmann::json elementary_to_json(const ElementaryDivisorForm& f);

}  // namespace frobkit
