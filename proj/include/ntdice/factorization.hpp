#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntdice/tournament.hpp"

namespace ntdice {

/// Unordered vertex pair, stored as {min, max}.
struct VertexPair {
  Vertex lo;
  Vertex hi;

  static VertexPair of(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }
  bool contains(Vertex v) const noexcept { return lo == v || hi == v; }
  Vertex partner(Vertex v) const noexcept { return v == lo ? hi : lo; }

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

enum class Parity { Odd, Even };

/// One round of the factorization: pairs in column order (column j is
/// rounds[i-1][j-1]). The order is load-bearing for dice construction.
using Round = std::vector<VertexPair>;

/// Ordered edge partition of K_n into matchings.
///
/// The constructor does not validate; anything built outside odd_rounds and
/// even_rounds should be checked with verify_partition.
class OneFactorization {
 public:
  OneFactorization(int n, Parity parity, std::vector<Round> rounds);

  int n() const noexcept { return n_; }
  Parity parity() const noexcept { return parity_; }
  int round_count() const noexcept { return static_cast<int>(rounds_.size()); }
  const std::vector<Round>& rounds() const noexcept { return rounds_; }

  /// 1-based round index.
  const Round& round(int i) const;

  /// Column of the middle pair {i, n} in the even construction, i.e. (n+2)/4.
  int middle_column() const noexcept { return (n_ + 2) / 4; }

  /// Column of v in round i, 0 when absent. Indices are not range-checked.
  int column_of(int i, Vertex v) const noexcept {
    return column_[static_cast<std::size_t>(i - 1) * (static_cast<std::size_t>(n_) + 1) +
                   static_cast<std::size_t>(v)];
  }

  friend bool operator==(const OneFactorization& a, const OneFactorization& b) {
    return a.n_ == b.n_ && a.parity_ == b.parity_ && a.rounds_ == b.rounds_;
  }

 private:
  int n_;
  Parity parity_;
  std::vector<Round> rounds_;
  std::vector<int> column_;  // column_[(i-1)*(n+1) + v]; 0 = absent
};

struct Position {
  int round;
  std::optional<int> column;  // empty when the vertex sits out the round

  bool absent() const noexcept { return !column.has_value(); }
};

/// Round i (1..n) holds {i+j, i-j} mod n for j = 1..(n-1)/2, labels in 1..n.
/// Throws ParityError for even n; NTooSmall for n < 3.
OneFactorization odd_rounds(int n);

/// Rounds i = 1..n-1 for n = 2 mod 4: {i+j, i-j} for j <= (n-2)/4, then the
/// pair {i, n} at column (n+2)/4, then {i+j-1, i-j+1} up to j = n/2. Non-n
/// labels are reduced mod n-1 into 1..n-1. Throws ParityError otherwise.
OneFactorization even_rounds(int n);

/// Throws IndexOutOfRange for a bad round or vertex.
Position position_of(const OneFactorization& f, int round, Vertex vertex);

struct PartitionReport {
  bool partition_ok = true;        // every edge of K_n exactly once
  bool matchings_ok = true;        // no vertex twice in a round
  bool coverage_ok = true;         // odd: v absent exactly from round v; even: all present
  bool twice_per_column_ok = true; // even only: each m != n twice in every non-middle column
  std::vector<std::string> failures;

  bool ok() const noexcept { return partition_ok && matchings_ok && coverage_ok && twice_per_column_ok; }
};

PartitionReport verify_partition(const OneFactorization& f);

struct LeftCount {
  int less = 0;
  int greater = 0;
  int ties = 0;

  friend bool operator==(const LeftCount&, const LeftCount&) = default;
};

/// Over rounds containing both w and x: how often w's column is left of,
/// right of, or equal to x's.
LeftCount left_count(const OneFactorization& f, Vertex w, Vertex x);

enum class FactorFormat { Table, Json };

/// Table rows mirror the printed layout: "Y_1 | {2,7},{3,6},{4,5}".
std::string serialize(const OneFactorization& f, FactorFormat format);

}  // namespace ntdice
