#include "gzono/report.hpp"

#include <algorithm>
#include <sstream>

#include "gzono/ngon.hpp"

namespace gzono {

namespace {
const BigInt kMaxSafeInteger = (BigInt(1) << 53) - 1;
}

nlohmann::json to_json(const BigInt& v) {
  if (v >= -kMaxSafeInteger && v <= kMaxSafeInteger) return v.convert_to<long long>();
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const auto digits = text.substr(!text.empty() && text[0] == '-' ? 1 : 0);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("not a decimal integer: " + text);
    return BigInt(text);
  }
  throw ParseError("expected an integer or a decimal string");
}

nlohmann::json to_json(const FaceVector& f) {
  auto out = nlohmann::json::array();
  for (const auto& c : f.counts()) out.push_back(to_json(c));
  return out;
}

FaceVector face_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("face vector must be a JSON array");
  std::vector<BigInt> counts;
  for (const auto& c : j) counts.push_back(bigint_from_json(c));
  try {
    return FaceVector(std::move(counts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string face_vector_csv(const FaceVector& f) {
  std::string header;
  std::string row;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k > 0) {
      header += ',';
      row += ',';
    }
    header += "f" + std::to_string(k);
    row += f[k].str();
  }
  return header + "\n" + row + "\n";
}

nlohmann::json to_json(const Graph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

nlohmann::json quad_tuple(const FlipQuad& q) {
  return {q.v[0] + 1, q.v[1] + 1, q.v[2] + 1, q.v[3] + 1};
}

nlohmann::json to_json(const FlipQuad& q) {
  nlohmann::json sides = nlohmann::json::object();
  for (int s = 1; s <= 4; ++s) sides[std::to_string(s)] = nlohmann::json::array();
  for (std::size_t x = 0; x < q.side.size(); ++x)
    if (q.side[x] != 0) sides[std::to_string(q.side[x])].push_back(x + 1);
  return {{"quad", quad_tuple(q)}, {"sides", sides}};
}

nlohmann::json to_json(const FlipPath& p) {
  auto out = nlohmann::json::array();
  for (const auto& q : p.steps) out.push_back(quad_tuple(q));
  return out;
}

namespace {

// rows[r][c]; empty strings are blank cells.
std::vector<std::vector<std::string>> table_cells(int max_n) {
  if (max_n < 2) throw PreconditionError("table needs max_n >= 2");
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"n"};
  for (int i = 0; i < max_n; ++i) header.push_back(std::to_string(i));
  header.push_back("Total");
  rows.push_back(header);
  for (int n = 2; n <= max_n; ++n) {
    const auto f = face_vector_formula(n);
    std::vector<std::string> row{std::to_string(n)};
    for (int i = 0; i < max_n; ++i) row.push_back(i < n ? f[i].str() : "");
    row.push_back(f.total().str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string ngon_table_text(int max_n) {
  const auto rows = table_cells(max_n);
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += c + 1 == row.size() ? " | " : "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
      if (c == 0) line += " |";
    }
    out << line << '\n';
  }
  return out.str();
}

std::string ngon_table_csv(int max_n) {
  auto rows = table_cells(max_n);
  rows[0].assign(1, "n");
  for (int i = 0; i < max_n; ++i) rows[0].push_back("f" + std::to_string(i));
  rows[0].push_back("total");
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c > 0 ? "," : "") << row[c];
    out << '\n';
  }
  return out.str();
}

}  // namespace gzono
