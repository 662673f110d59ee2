#include "frobkit/io.hpp"

#include <fstream>
#include <sstream>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

using nlohmann::json;

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

// Non-empty lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto w = tokens(line);
    if (!w.empty()) out.push_back({number, std::move(w)});
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  raise(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_count(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail_at(line, std::string("bad ") + what + " '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    fail_at(line, std::string(what) + " out of range '" + s + "'");
  }
}

Field header_field(const Line& h) {
  const auto& w = h.words;
  if (w.size() != 3 && w.size() != 4) fail_at(h.number, "header must be 'field rows cols [m=...]'");
  if (w[0] == "Q") {
    if (w.size() == 4) fail_at(h.number, "a modulus makes no sense over Q");
    return Field::rationals();
  }
  const std::uint64_t q = parse_count(w[0], h.number, "field order");
  try {
    const Field base = Field::finite_order(q);
    if (w.size() == 3) return base;
    if (w[3].rfind("m=", 0) != 0) fail_at(h.number, "expected m=c0,c1,... after the shape");
    std::vector<std::uint32_t> modulus;
    std::stringstream ss(w[3].substr(2));
    std::string c;
    while (std::getline(ss, c, ','))
      modulus.push_back(static_cast<std::uint32_t>(parse_count(c, h.number, "modulus coefficient")));
    if (modulus.size() != base.degree() + 1) fail_at(h.number, "modulus degree does not match the field order");
    return Field::extension(base.characteristic(), modulus);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail_at(h.number, e.what());
  }
}

// Reads one matrix block starting at lines[pos]; advances pos.
Mat read_block(const std::vector<Line>& lines, std::size_t& pos) {
  if (pos >= lines.size()) raise(ErrorCode::ParseError, "missing matrix header");
  const Line& h = lines[pos++];
  const Field f = header_field(h);
  const auto rows = parse_count(h.words[1], h.number, "row count");
  const auto cols = parse_count(h.words[2], h.number, "column count");
  if (rows > 4096 || cols > 4096) fail_at(h.number, "matrix too large");
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  // A matrix with no columns has no row lines.
  if (cols == 0) return Mat(f, rows, 0);
  for (std::uint64_t i = 0; i < rows; ++i) {
    if (pos >= lines.size()) raise(ErrorCode::ParseError, "expected " + std::to_string(rows) + " rows, file ended");
    const Line& l = lines[pos++];
    if (l.words.size() != cols)
      fail_at(l.number, "expected " + std::to_string(cols) + " entries, got " + std::to_string(l.words.size()));
    for (const auto& w : l.words) {
      try {
        entries.push_back(f.parse(w));
      } catch (const Error& e) {
        fail_at(l.number, e.what());
      }
    }
  }
  return Mat(f, rows, cols, std::move(entries));
}

std::string header_of(const Mat& m) {
  const Field f = m.field();
  std::string h = f.is_finite() ? std::to_string(f.order()) : "Q";
  h += " " + std::to_string(m.rows()) + " " + std::to_string(m.cols());
  if (f.kind() == FieldKind::Extension && !(Field::finite(f.characteristic(), f.degree()) == f)) {
    h += " m=";
    const auto& mod = f.modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) h += (i ? "," : "") + std::to_string(mod[i]);
  }
  return h;
}

template <class F>
auto json_guard(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    raise(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

std::string format_matrix(const Mat& m) {
  std::string out = header_of(m) + "\n";
  if (m.cols() == 0) return out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

Mat parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t pos = 0;
  Mat m = read_block(lines, pos);
  if (pos != lines.size()) fail_at(lines[pos].number, "trailing content after the matrix");
  return m;
}

std::string format_triple(const Triple& t) {
  return format_matrix(t.A) + format_matrix(t.v) + format_matrix(t.phi);
}

Triple parse_triple(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t pos = 0;
  Mat a = read_block(lines, pos);
  Mat v = read_block(lines, pos);
  Mat phi = read_block(lines, pos);
  if (pos != lines.size()) fail_at(lines[pos].number, "trailing content after the triple");
  try {
    return Triple(std::move(a), std::move(v), std::move(phi));
  } catch (const Error& e) {
    raise(ErrorCode::ParseError, std::string("inconsistent triple: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json field_to_json(Field f) {
  if (!f.is_finite()) return {{"tag", "Q"}};
  json j{{"tag", f.tag()}, {"p", f.characteristic()}, {"k", f.degree()}, {"q", f.order()}};
  if (f.kind() == FieldKind::Extension) j["modulus"] = f.modulus();
  return j;
}

Field field_from_json(const json& j) {
  return json_guard([&] {
    if (j.at("tag").get<std::string>() == "Q") return Field::rationals();
    const auto p = j.at("p").get<std::uint64_t>();
    const auto k = j.at("k").get<unsigned>();
    if (j.contains("modulus") && k > 1) return Field::extension(p, j.at("modulus").get<std::vector<std::uint32_t>>());
    return Field::finite(p, k);
  });
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(std::move(r));
  }
  return {{"field", field_to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat matrix_from_json(const json& j) {
  return json_guard([&] {
    const Field f = field_from_json(j.at("field"));
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& e = j.at("entries");
    if (e.size() != rows) raise(ErrorCode::ParseError, "row count does not match 'rows'");
    std::vector<Elem> entries;
    for (const auto& r : e) {
      if (r.size() != cols) raise(ErrorCode::ParseError, "row length does not match 'cols'");
      for (const auto& x : r) entries.push_back(f.parse(x.get<std::string>()));
    }
    return Mat(f, rows, cols, std::move(entries));
  });
}

json poly_to_json(const Poly& f) {
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(x.to_string());
  return {{"field", field_to_json(f.field())}, {"coeffs", std::move(c)}, {"text", f.to_string()}};
}

Poly poly_from_json(const json& j) {
  return json_guard([&] {
    const Field f = field_from_json(j.at("field"));
    std::vector<Elem> c;
    for (const auto& x : j.at("coeffs")) c.push_back(f.parse(x.get<std::string>()));
    return Poly(f, std::move(c));
  });
}

json triple_to_json(const Triple& t) {
  return {{"A", matrix_to_json(t.A)}, {"v", matrix_to_json(t.v)}, {"phi", matrix_to_json(t.phi)}};
}

Triple triple_from_json(const json& j) {
  return json_guard([&] {
    return Triple(matrix_from_json(j.at("A")), matrix_from_json(j.at("v")), matrix_from_json(j.at("phi")));
  });
}

json frobenius_to_json(const FrobeniusForm& f) {
  json factors = json::array();
  for (const auto& p : f.invariant_factors) factors.push_back(poly_to_json(p));
  return {{"kind", "frobenius"},
          {"field", field_to_json(f.transform.field())},
          {"invariant_factors", std::move(factors)},
          {"transform", matrix_to_json(f.transform)},
          {"form", matrix_to_json(f.form())}};
}

json elementary_to_json(const ElementaryDivisorForm& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks)
    blocks.push_back({{"f", poly_to_json(b.f)}, {"s", b.s}, {"power", poly_to_json(b.power())}});
  return {{"kind", "elementary"},
          {"field", field_to_json(f.transform.field())},
          {"blocks", std::move(blocks)},
          {"transform", matrix_to_json(f.transform)},
          {"form", matrix_to_json(f.form())}};
}

}  // namespace frobkit
