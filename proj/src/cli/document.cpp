#include <fstream>
#include <set>
#include <sstream>

#include "zonoforge/cli.hpp"

namespace zonoforge::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParse, "field '" + field + "': " + what);
}

Rat parse_entry(const Json& v, const std::string& field) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rat(std::to_string(v.get<std::uint64_t>()))
                                  : Rat(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.detail());
    }
  }
  fail(field, "expected an integer or a rational string such as \"-3/4\"");
}

Vec parse_vector(const Json& v, const std::string& field, std::optional<std::size_t> len) {
  if (!v.is_array()) fail(field, "expected an array");
  if (len && v.size() != *len) {
    fail(field, "expected " + std::to_string(*len) + " entries, found " + std::to_string(v.size()));
  }
  Vec out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(parse_entry(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<Vec> parse_rows(const Json& v, const std::string& field, std::optional<std::size_t> nrows) {
  if (!v.is_array() || v.empty()) fail(field, "expected a nonempty array of rows");
  if (nrows && v.size() != *nrows) {
    fail(field, "expected " + std::to_string(*nrows) + " rows, found " + std::to_string(v.size()));
  }
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::string name = field + "[" + std::to_string(r) + "]";
    rows.push_back(parse_vector(v[r], name, rows.empty() ? std::nullopt : std::optional(rows[0].size())));
  }
  return rows;
}

// Columns of a row-major matrix.
std::vector<Vec> columns_of(const std::vector<Vec>& rows) {
  std::vector<Vec> cols(rows[0].size(), Vec(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) cols[c][r] = rows[r][c];
  return cols;
}

ColumnSet parse_index_set(const Json& v, const std::string& field, std::size_t limit) {
  if (!v.is_array()) fail(field, "expected an array of column indices");
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string name = field + "[" + std::to_string(k) + "]";
    if (!v[k].is_number_integer() || v[k].get<std::int64_t>() < 0) fail(name, "expected a nonnegative integer");
    const auto x = v[k].get<std::uint64_t>();
    if (x >= limit) fail(name, "column index " + std::to_string(x) + " out of range (N = " + std::to_string(limit) + ")");
    idx.push_back(static_cast<std::size_t>(x));
  }
  const ColumnSet s = ColumnSet::of(idx);
  if (s.size() != idx.size()) fail(field, "repeated column index");
  return s;
}

}  // namespace

ConfigDocument parse_document(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "document must be a JSON object");
  static const std::set<std::string> known{"name",  "description", "matrix", "b0", "lambda",
                                           "lambda_b0", "iprime",  "i",      "seed", "points"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) fail(key, "unknown field");
  }
  if (!j.contains("matrix")) fail("matrix", "required field is missing");

  ConfigDocument doc;
  const auto rows = parse_rows(j["matrix"], "matrix", std::nullopt);
  Config c;
  c.n = rows.size();
  c.columns = columns_of(rows);
  if (j.contains("b0")) c.b0 = columns_of(parse_rows(j["b0"], "b0", c.n));
  if (c.b0 && c.b0->size() != c.n) fail("b0", "expected an n x n matrix");
  if (j.contains("lambda")) c.lambda = parse_vector(j["lambda"], "lambda", c.size());
  if (j.contains("lambda_b0")) c.lambda_b0 = parse_vector(j["lambda_b0"], "lambda_b0", c.n);
  doc.config = validate(std::move(c));

  if (j.contains("iprime")) {
    const Json* sets = &j["iprime"];
    if (sets->is_object()) {
      for (const auto& [key, _] : sets->items()) {
        if (key != "sets" && key != "closed") fail("iprime." + key, "unknown field");
      }
      if (sets->contains("closed")) {
        if (!(*sets)["closed"].is_boolean()) fail("iprime.closed", "expected true or false");
        doc.iprime_closed = (*sets)["closed"].get<bool>();
      }
      if (!sets->contains("sets")) fail("iprime.sets", "required field is missing");
      sets = &(*sets)["sets"];
    }
    if (!sets->is_array()) fail("iprime", "expected a list of index lists");
    std::vector<ColumnSet> fam;
    for (std::size_t k = 0; k < sets->size(); ++k)
      fam.push_back(parse_index_set((*sets)[k], "iprime[" + std::to_string(k) + "]", doc.config.size()));
    doc.iprime = std::move(fam);
  }
  if (j.contains("i")) doc.i = parse_index_set(j["i"], "i", doc.config.size());
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<std::int64_t>() < 0) {
      fail("seed", "expected a nonnegative integer");
    }
    doc.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("points")) {
    const Json& p = j["points"];
    if (!p.is_array()) fail("points", "expected a list of points");
    PointSet pts;
    for (std::size_t k = 0; k < p.size(); ++k)
      pts.push_back(parse_vector(p[k], "points[" + std::to_string(k) + "]", doc.config.n));
    doc.points = std::move(pts);
  }
  return doc;
}

ConfigDocument parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                       ": malformed JSON");
  }
  return parse_document(j);
}

ConfigDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document_text(buf.str());
}

}  // namespace zonoforge::cli
