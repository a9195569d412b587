#include "cubeprof/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace cubeprof {

namespace {

std::vector<std::pair<Vertex, Vertex>> sorted_pairs(const Matching& m) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(m.size());
  for (const Edge& e : m.edges()) pairs.emplace_back(e.base, e.other());
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Vertex parse_bits(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(Dimension::kMax)) {
    throw Error(Errc::validation, "bad bitstring '" + std::string(bits) + "'");
  }
  Vertex v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(Errc::validation, "bad bitstring '" + std::string(bits) + "'");
    }
    v = (v << 1) | static_cast<Vertex>(c - '0');
  }
  return v;
}

CandidateMatching parse_json_matching(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::validation, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
      !doc["n"].is_number_integer() || !doc["edges"].is_array()) {
    throw Error(Errc::validation, R"(expected {"n": int, "edges": [[u, v], ...]})");
  }
  CandidateMatching c;
  c.n = doc["n"].get<int>();
  for (const auto& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      throw Error(Errc::validation, "edge entries must be [u, v] with non-negative integers");
    }
    c.pairs.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
  }
  return c;
}

CandidateMatching parse_edge_list(std::string_view text) {
  CandidateMatching c;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw Error(Errc::validation, "edge line '" + std::string(body) + "' needs two bitstrings");
    }
    if (a.size() != b.size() || (c.n != 0 && static_cast<int>(a.size()) != c.n)) {
      throw Error(Errc::validation, "bitstrings of differing width in '" + std::string(body) + "'");
    }
    c.n = static_cast<int>(a.size());
    c.pairs.emplace_back(parse_bits(a), parse_bits(b));
  }
  if (c.n == 0) throw Error(Errc::validation, "edge list is empty; dimension unknown");
  return c;
}

}  // namespace

std::string bitstring(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v >> i) & 1) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

std::string to_json(const Matching& m) {
  nlohmann::ordered_json doc;
  doc["n"] = m.dim().value();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : sorted_pairs(m)) doc["edges"].push_back({u, v});
  return doc.dump();
}

std::string to_edge_list(const Matching& m) {
  std::string out;
  const int n = m.dim().value();
  for (const auto& [u, v] : sorted_pairs(m)) {
    out += bitstring(u, n);
    out += ' ';
    out += bitstring(v, n);
    out += '\n';
  }
  return out;
}

std::string to_dot(const Matching& m) {
  static constexpr const char* kColours[] = {"red",    "blue",   "green3",   "gold",
                                             "magenta", "cyan3", "orange",   "purple"};
  const int n = m.dim().value();
  std::ostringstream os;
  os << "graph matching {\n  node [shape=point];\n";
  for (const Edge& e : m.edges()) {
    os << "  \"" << bitstring(e.base, n) << "\" -- \"" << bitstring(e.other(), n)
       << "\" [color=" << kColours[e.dir % 8] << ", label=" << (e.dir + 1) << "];\n";
  }
  os << "}\n";
  return os.str();
}

CandidateMatching parse_matching(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json_matching(body);
  return parse_edge_list(body);
}

Profile parse_profile(std::string_view text) {
  std::vector<std::uint64_t> counts;
  std::string_view rest = trim(text);
  if (rest.empty()) throw Error(Errc::validation, "empty profile");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(Errc::validation, "bad profile entry '" + std::string(item) + "'");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Profile(std::move(counts));
}

}  // namespace cubeprof
