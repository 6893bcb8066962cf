#include "ntdice/tournament.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <sstream>

#include "ntdice/error.hpp"

namespace ntdice {

namespace {

std::string pair_str(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::NTooSmall, "n must be >= 1, got " + std::to_string(n));
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

bool Tournament::beats(Vertex i, Vertex j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw Error(ErrorCode::VertexOutOfRange, pair_str(i, j) + " outside 1.." + std::to_string(n_));
  return adj_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] != 0;
}

int Tournament::out_degree(Vertex v) const {
  int d = 0;
  for (Vertex u = 1; u <= n_; ++u)
    if (u != v && beats(v, u)) ++d;
  return d;
}

std::vector<Edge> Tournament::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (Vertex i = 1; i <= n_; ++i)
    for (Vertex j = i + 1; j <= n_; ++j)
      out.push_back(beats(i, j) ? Edge{i, j} : Edge{j, i});
  return out;
}

Tournament from_edges(int n, std::span<const Edge> beats) {
  check_n(n);
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> adj(size * size, 0);
  for (const auto& [a, b] : beats) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside 1.." +
                      std::to_string(n));
    if (a == b) throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(a) + "," + std::to_string(a) + ")");
    const auto ab = (a - 1) * size + (b - 1);
    const auto ba = (b - 1) * size + (a - 1);
    if (adj[ab] || adj[ba])
      throw Error(ErrorCode::DuplicateEdge, "pair " + pair_str(std::min(a, b), std::max(a, b)) +
                                                " oriented more than once");
    adj[ab] = 1;
  }
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (!adj[(i - 1) * size + (j - 1)] && !adj[(j - 1) * size + (i - 1)])
        throw Error(ErrorCode::MissingEdge, "pair " + pair_str(i, j) + " has no direction");
  return Tournament(n, std::move(adj));
}

Tournament transitive(int n) {
  check_n(n);
  std::vector<Edge> e;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) e.push_back({i, j});
  return from_edges(n, e);
}

Tournament almost_transitive(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "almost-transitive needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> e;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) e.push_back(i == 1 && j == n ? Edge{n, 1} : Edge{i, j});
  return from_edges(n, e);
}

Tournament random_tournament(int n, std::uint64_t seed) {
  check_n(n);
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) e.push_back((rng() & 1U) ? Edge{i, j} : Edge{j, i});
  return from_edges(n, e);
}

Tournament paley(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p % 4 != 3)
    throw Error(ErrorCode::WrongResidueClass, std::to_string(p) + " is not congruent to 3 mod 4");
  std::vector<std::uint8_t> square(static_cast<std::size_t>(p), 0);
  for (long long x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = 1;
  std::vector<Edge> e;
  for (Vertex i = 1; i <= p; ++i)
    for (Vertex j = i + 1; j <= p; ++j)
      e.push_back(square[static_cast<std::size_t>(j - i)] ? Edge{i, j} : Edge{j, i});
  return from_edges(p, e);
}

TournamentFormat detect_tournament_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? TournamentFormat::Json : TournamentFormat::Matrix;
  }
  return TournamentFormat::Matrix;
}

namespace {

Tournament parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("beats"))
    throw Error(ErrorCode::SyntaxError, R"(expected {"n": <int>, "beats": [[i,j], ...]})");
  const auto& jn = doc["n"];
  const auto& jb = doc["beats"];
  if (!jn.is_number_integer() || !jb.is_array())
    throw Error(ErrorCode::SyntaxError, "\"n\" must be an integer and \"beats\" an array");
  std::vector<Edge> edges;
  edges.reserve(jb.size());
  for (const auto& item : jb) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw Error(ErrorCode::SyntaxError, "each beats entry must be a pair of integers");
    edges.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return from_edges(jn.get<int>(), edges);
}

Tournament parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok != "0" && tok != "1") throw Error(ErrorCode::SyntaxError, "matrix entry '" + tok + "' is not 0 or 1");
      row.push_back(tok == "1");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::SyntaxError, "empty matrix");
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(rows[r].size()) != n)
      throw Error(ErrorCode::SyntaxError, "row " + std::to_string(r + 1) + " has " +
                                              std::to_string(rows[r].size()) + " entries, expected " +
                                              std::to_string(n));
  std::vector<Edge> edges;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (rows[r][c]) edges.push_back({r + 1, c + 1});
  return from_edges(n, edges);
}

}  // namespace

Tournament parse_tournament(std::string_view text, TournamentFormat format) {
  return format == TournamentFormat::Json ? parse_json(text) : parse_matrix(text);
}

std::string serialize(const Tournament& t, TournamentFormat format) {
  if (format == TournamentFormat::Json) {
    nlohmann::ordered_json doc;
    doc["n"] = t.n();
    auto beats = nlohmann::ordered_json::array();
    for (const auto& e : t.edges()) beats.push_back({e.from, e.to});
    doc["beats"] = std::move(beats);
    return doc.dump() + "\n";
  }
  std::string out;
  for (Vertex r = 1; r <= t.n(); ++r) {
    for (Vertex c = 1; c <= t.n(); ++c) {
      if (c > 1) out += ' ';
      out += (r != c && t.beats(r, c)) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace ntdice
