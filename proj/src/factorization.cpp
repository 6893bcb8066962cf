#include "ntdice/factorization.hpp"

#include <nlohmann/json.hpp>

#include <set>

#include "ntdice/error.hpp"

namespace ntdice {

namespace {

// Representative of x mod m in 1..m.
int reduce(int x, int m) {
  const int r = x % m;
  return r <= 0 ? r + m : r;
}

}  // namespace

OneFactorization::OneFactorization(int n, Parity parity, std::vector<Round> rounds)
    : n_(n), parity_(parity), rounds_(std::move(rounds)) {
  const auto stride = static_cast<std::size_t>(n_) + 1;
  column_.assign(rounds_.size() * stride, 0);
  for (std::size_t i = 0; i < rounds_.size(); ++i) {
    for (std::size_t j = 0; j < rounds_[i].size(); ++j) {
      for (Vertex v : {rounds_[i][j].lo, rounds_[i][j].hi}) {
        if (v < 1 || v > n_) continue;
        auto& slot = column_[i * stride + static_cast<std::size_t>(v)];
        if (slot == 0) slot = static_cast<int>(j) + 1;
      }
    }
  }
}

const Round& OneFactorization::round(int i) const {
  if (i < 1 || i > round_count())
    throw Error(ErrorCode::IndexOutOfRange,
                "round " + std::to_string(i) + " outside 1.." + std::to_string(round_count()));
  return rounds_[static_cast<std::size_t>(i - 1)];
}

OneFactorization odd_rounds(int n) {
  if (n % 2 == 0) throw Error(ErrorCode::ParityError, "odd_rounds needs odd n, got " + std::to_string(n));
  if (n < 3) throw Error(ErrorCode::NTooSmall, "odd_rounds needs n >= 3, got " + std::to_string(n));
  const int k = (n - 1) / 2;
  std::vector<Round> rounds(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& r = rounds[static_cast<std::size_t>(i - 1)];
    r.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) r.push_back(VertexPair::of(reduce(i + j, n), reduce(i - j, n)));
  }
  return OneFactorization(n, Parity::Odd, std::move(rounds));
}

OneFactorization even_rounds(int n) {
  if (n < 2 || n % 4 != 2)
    throw Error(ErrorCode::ParityError, "even_rounds needs n = 2 mod 4, got " + std::to_string(n));
  const int m = n - 1;
  const int middle = (n + 2) / 4;
  std::vector<Round> rounds(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    auto& r = rounds[static_cast<std::size_t>(i - 1)];
    r.reserve(static_cast<std::size_t>(n / 2));
    for (int j = 1; j < middle; ++j) r.push_back(VertexPair::of(reduce(i + j, m), reduce(i - j, m)));
    r.push_back(VertexPair::of(i, n));
    for (int j = middle + 1; j <= n / 2; ++j)
      r.push_back(VertexPair::of(reduce(i + j - 1, m), reduce(i - j + 1, m)));
  }
  return OneFactorization(n, Parity::Even, std::move(rounds));
}

Position position_of(const OneFactorization& f, int round, Vertex vertex) {
  f.round(round);
  if (vertex < 1 || vertex > f.n())
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(f.n()));
  const int col = f.column_of(round, vertex);
  if (col == 0) return {round, std::nullopt};
  return {round, col};
}

PartitionReport verify_partition(const OneFactorization& f) {
  PartitionReport rep;
  const int n = f.n();
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    rep.failures.push_back(std::move(msg));
  };
  auto pair_str = [](const VertexPair& p) {
    return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
  };

  std::set<std::pair<int, int>> seen;
  for (int i = 1; i <= f.round_count(); ++i) {
    std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& p : f.round(i)) {
      if (p.lo < 1 || p.hi > n || p.lo >= p.hi) {
        fail(rep.partition_ok, "round " + std::to_string(i) + " holds invalid pair " + pair_str(p));
        continue;
      }
      if (!seen.insert({p.lo, p.hi}).second)
        fail(rep.partition_ok, "pair " + pair_str(p) + " appears more than once");
      ++hits[static_cast<std::size_t>(p.lo)];
      ++hits[static_cast<std::size_t>(p.hi)];
    }
    for (Vertex v = 1; v <= n; ++v) {
      const int h = hits[static_cast<std::size_t>(v)];
      if (h > 1) fail(rep.matchings_ok, "vertex " + std::to_string(v) + " repeated in round " + std::to_string(i));
      const bool should_appear = f.parity() == Parity::Even || v != i;
      if (should_appear && h == 0)
        fail(rep.coverage_ok, "vertex " + std::to_string(v) + " missing from round " + std::to_string(i));
      if (!should_appear && h != 0)
        fail(rep.coverage_ok, "vertex " + std::to_string(v) + " should sit out round " + std::to_string(i));
    }
  }
  const auto expected_edges = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (seen.size() != expected_edges)
    fail(rep.partition_ok, "covers " + std::to_string(seen.size()) + " of " +
                               std::to_string(expected_edges) + " edges");
  const int expected_rounds = f.parity() == Parity::Odd ? n : n - 1;
  if (f.round_count() != expected_rounds)
    fail(rep.coverage_ok, "has " + std::to_string(f.round_count()) + " rounds, expected " +
                              std::to_string(expected_rounds));

  if (f.parity() == Parity::Even) {
    const int cols = n / 2;
    for (int j = 1; j <= cols; ++j) {
      if (j == f.middle_column()) continue;
      std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
      for (const auto& r : f.rounds()) {
        if (static_cast<int>(r.size()) < j) continue;
        const auto& p = r[static_cast<std::size_t>(j - 1)];
        for (Vertex v : {p.lo, p.hi})
          if (v >= 1 && v <= n) ++hits[static_cast<std::size_t>(v)];
      }
      for (Vertex v = 1; v < n; ++v)
        if (hits[static_cast<std::size_t>(v)] != 2)
          fail(rep.twice_per_column_ok, "vertex " + std::to_string(v) + " appears " +
                                            std::to_string(hits[static_cast<std::size_t>(v)]) +
                                            " times in column " + std::to_string(j));
    }
  }
  return rep;
}

LeftCount left_count(const OneFactorization& f, Vertex w, Vertex x) {
  if (w == x) throw Error(ErrorCode::IndexOutOfRange, "left_count needs distinct vertices");
  LeftCount c;
  for (int i = 1; i <= f.round_count(); ++i) {
    const auto pw = position_of(f, i, w).column;
    const auto px = position_of(f, i, x).column;
    if (!pw || !px) continue;
    if (*pw < *px)
      ++c.less;
    else if (*pw > *px)
      ++c.greater;
    else
      ++c.ties;
  }
  return c;
}

std::string serialize(const OneFactorization& f, FactorFormat format) {
  if (format == FactorFormat::Json) {
    nlohmann::ordered_json doc;
    doc["n"] = f.n();
    doc["parity"] = f.parity() == Parity::Odd ? "odd" : "even";
    auto rounds = nlohmann::ordered_json::array();
    for (const auto& r : f.rounds()) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& p : r) row.push_back({p.lo, p.hi});
      rounds.push_back(std::move(row));
    }
    doc["rounds"] = std::move(rounds);
    return doc.dump() + "\n";
  }
  std::string out;
  for (int i = 1; i <= f.round_count(); ++i) {
    out += "Y_" + std::to_string(i) + " | ";
    const auto& r = f.round(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ',';
      out += "{" + std::to_string(r[j].lo) + "," + std::to_string(r[j].hi) + "}";
    }
    out += '\n';
  }
  return out;
}

}  // namespace ntdice
