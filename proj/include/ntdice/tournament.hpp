#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ntdice {

/// 1-based vertex label.
using Vertex = int;

/// An ordered pair (winner, loser).
struct Edge {
  Vertex from;
  Vertex to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A complete orientation of K_n on vertices 1..n.
///
/// Instances are only produced through the validating factories below, so a
/// Tournament in hand always has exactly one direction per vertex pair.
class Tournament {
 public:
  int n() const noexcept { return n_; }

  /// True iff i -> j. Both arguments must be in 1..n.
  bool beats(Vertex i, Vertex j) const;

  int out_degree(Vertex v) const;

  /// All n(n-1)/2 edges, ordered lexicographically by the pair {min, max}.
  std::vector<Edge> edges() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

  friend Tournament from_edges(int n, std::span<const Edge> beats);

 private:
  Tournament(int n, std::vector<std::uint8_t> adj) : n_(n), adj_(std::move(adj)) {}

  int n_ = 0;
  std::vector<std::uint8_t> adj_;  // row-major, adj_[(i-1)*n + (j-1)] == 1 iff i -> j
};

/// Validates and builds. Throws Error with MissingEdge, DuplicateEdge,
/// SelfLoop or VertexOutOfRange.
Tournament from_edges(int n, std::span<const Edge> beats);

Tournament transitive(int n);

/// i -> j for i < j, except n -> 1. Requires n >= 3.
Tournament almost_transitive(int n);

/// Each pair {i, j}, i < j, visited in lexicographic order, takes the low bit
/// of one std::mt19937_64 draw (seeded with `seed`): 1 means i -> j.
Tournament random_tournament(int n, std::uint64_t seed);

/// i -> j iff (j - i) is a nonzero square mod p. p must be a prime = 3 mod 4.
Tournament paley(int p);

enum class TournamentFormat { Json, Matrix };

Tournament parse_tournament(std::string_view text, TournamentFormat format);
std::string serialize(const Tournament& t, TournamentFormat format);

/// JSON when the first non-blank character is '{', otherwise matrix.
TournamentFormat detect_tournament_format(std::string_view text);

}  // namespace ntdice
