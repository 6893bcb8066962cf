#include "ntdice/dice.hpp"

#include <algorithm>
#include <unordered_set>

#include "ntdice/error.hpp"
#include "ntdice/factorization.hpp"

namespace ntdice {

DiceSet make_dice_set(std::vector<Die> dice) {
  DiceSet d;
  d.n = static_cast<int>(dice.size());
  d.k = dice.empty() ? 0 : static_cast<int>(dice.front().size());
  std::unordered_set<Label> seen;
  for (std::size_t v = 0; v < dice.size(); ++v) {
    if (static_cast<int>(dice[v].size()) != d.k)
      throw Error(ErrorCode::SideCountMismatch, "die " + std::to_string(v + 1) + " has " +
                                                    std::to_string(dice[v].size()) + " faces, expected " +
                                                    std::to_string(d.k));
    for (Label l : dice[v])
      if (!seen.insert(l).second)
        throw Error(ErrorCode::DuplicateLabelAcrossDice, "label " + std::to_string(l) + " used twice");
  }
  d.dice = std::move(dice);
  return d;
}

Count face_wins(std::span<const Label> a, std::span<const Label> b) {
  Count wins = 0;
  for (Label x : a)
    for (Label y : b)
      if (x > y) ++wins;
  return wins;
}

Count face_wins_sorted(std::span<const Label> a, std::span<const Label> b) {
  std::vector<Label> sa(a.begin(), a.end());
  std::vector<Label> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  Count wins = 0;
  std::size_t below = 0;  // faces of b strictly less than the current face of a
  for (Label x : sa) {
    while (below < sb.size() && sb[below] < x) ++below;
    wins += static_cast<Count>(below);
  }
  return wins;
}

Matchup matchup(std::span<const Label> a, std::span<const Label> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::SideCountMismatch,
                std::to_string(a.size()) + " faces against " + std::to_string(b.size()));
  if (a.empty()) throw Error(ErrorCode::SideCountMismatch, "dice have no faces");
  const std::unordered_set<Label> in_a(a.begin(), a.end());
  for (Label y : b)
    if (in_a.contains(y))
      throw Error(ErrorCode::DuplicateLabelAcrossDice, "label " + std::to_string(y) + " on both dice");
  Matchup m;
  m.wins_a_over_b = face_wins(a, b);
  m.wins_b_over_a = face_wins(b, a);
  const auto k = static_cast<std::int64_t>(a.size());
  m.probability_a_beats_b = Probability(m.wins_a_over_b, k * k);
  return m;
}

Tournament dominance(const DiceSet& d) {
  const Probability half(1, 2);
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= d.n; ++i) {
    for (Vertex j = i + 1; j <= d.n; ++j) {
      const auto m = matchup(d.die(i), d.die(j));
      if (m.probability_a_beats_b == half)
        throw Error(ErrorCode::TieDetected, "dice " + std::to_string(i) + " and " + std::to_string(j) +
                                                " split " + std::to_string(m.wins_a_over_b) + "-" +
                                                std::to_string(m.wins_b_over_a));
      edges.push_back(m.probability_a_beats_b > half ? Edge{i, j} : Edge{j, i});
    }
  }
  return from_edges(d.n, edges);
}

int side_count(int n) {
  if (n <= 1) return 1;
  if (n % 2 == 1) return n;
  return n % 4 == 2 ? n - 1 : n + 1;
}

namespace {

// Face i of die v lies in block i: [n(i-1)+1, n*i]. The die sitting out a
// round takes the block's lowest label; a pair in column j takes the two
// labels starting at `base + 2j + shift`, the winner getting the higher one.
DiceSet fill_from_rounds(const Tournament& t, const OneFactorization& f, int shift, bool diagonal) {
  const int n = t.n();
  const int k = f.round_count();
  std::vector<Die> dice(static_cast<std::size_t>(n), Die(static_cast<std::size_t>(k)));
  for (int i = 1; i <= k; ++i) {
    const Label base = static_cast<Label>(n) * (i - 1);
    if (diagonal) dice[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = base + 1;
    const auto& round = f.round(i);
    for (std::size_t col = 0; col < round.size(); ++col) {
      const auto& p = round[col];
      const Label low = base + 2 * static_cast<Label>(col + 1) + shift;
      const bool lo_wins = t.beats(p.lo, p.hi);
      dice[static_cast<std::size_t>(p.lo - 1)][static_cast<std::size_t>(i - 1)] = lo_wins ? low + 1 : low;
      dice[static_cast<std::size_t>(p.hi - 1)][static_cast<std::size_t>(i - 1)] = lo_wins ? low : low + 1;
    }
  }
  DiceSet d;
  d.n = n;
  d.k = k;
  d.dice = std::move(dice);
  return d;
}

}  // namespace

DiceSet build_odd(const Tournament& t) {
  const int n = t.n();
  if (n % 2 == 0) throw Error(ErrorCode::ParityError, "build_odd needs odd n, got " + std::to_string(n));
  if (n == 1) return DiceSet{1, 1, {Die{1}}};
  return fill_from_rounds(t, odd_rounds(n), 0, true);
}

DiceSet build_even_2mod4(const Tournament& t) {
  const int n = t.n();
  if (n % 4 != 2)
    throw Error(ErrorCode::ParityError, "build_even_2mod4 needs n = 2 mod 4, got " + std::to_string(n));
  return fill_from_rounds(t, even_rounds(n), -1, false);
}

DiceSet build_0mod4(const Tournament& t) {
  const int n = t.n();
  if (n % 4 != 0)
    throw Error(ErrorCode::ParityError, "build_0mod4 needs n = 0 mod 4, got " + std::to_string(n));
  // Extend with vertex n+1 beating everyone, build n+1 odd-case dice, drop the new die.
  auto edges = t.edges();
  for (Vertex v = 1; v <= n; ++v) edges.push_back({n + 1, v});
  auto d = build_odd(from_edges(n + 1, edges));
  d.dice.pop_back();
  d.n = n;
  return d;
}

DiceSet build_dice(const Tournament& t) {
  const int n = t.n();
  if (n % 2 == 1) return build_odd(t);
  if (n % 4 == 2) return build_even_2mod4(t);
  return build_0mod4(t);
}

const PairEvidence* VerificationReport::first_mismatch() const {
  for (const auto& p : pairs)
    if (p.actual_winner != p.expected_winner) return &p;
  return nullptr;
}

VerificationReport verify(const DiceSet& d, const Tournament& t) {
  if (d.n != t.n())
    throw Error(ErrorCode::SideCountMismatch,
                std::to_string(d.n) + " dice for a tournament on " + std::to_string(t.n()) + " vertices");
  VerificationReport rep;
  const Probability half(1, 2);
  const Probability balanced = d.k > 0 ? half + Probability(1, 2 * static_cast<std::int64_t>(d.k) * d.k)
                                       : Probability(0);
  for (Vertex w = 1; w <= d.n; ++w) {
    for (Vertex x = w + 1; x <= d.n; ++x) {
      PairEvidence ev{w, x, t.beats(w, x) ? w : x, std::nullopt, matchup(d.die(w), d.die(x))};
      const auto& p = ev.result.probability_a_beats_b;
      if (p > half) ev.actual_winner = w;
      else if (p < half) ev.actual_winner = x;
      const std::string tag = "pair {" + std::to_string(w) + "," + std::to_string(x) + "}";
      if (ev.actual_winner != ev.expected_winner) {
        rep.realized = false;
        rep.failures.push_back(tag + ": expected " + std::to_string(ev.expected_winner) + " to win, wins " +
                               std::to_string(ev.result.wins_a_over_b) + "-" +
                               std::to_string(ev.result.wins_b_over_a));
      }
      const auto winner_p = p > half ? p : Probability(1) - p;
      if (winner_p != balanced) {
        rep.balance_ok = false;
        rep.failures.push_back(tag + ": winning probability " + to_string(winner_p) + " is not " +
                               to_string(balanced));
      }
      rep.pairs.push_back(std::move(ev));
    }
  }
  return rep;
}

AuditReport guaranteed_wins_audit(const DiceSet& d, const Tournament& t) {
  AuditReport rep;
  const Count k2 = static_cast<Count>(d.k) * d.k;
  rep.expected_loser_wins = (k2 - 1) / 2;
  rep.expected_winner_wins = (k2 + 1) / 2;
  if (k2 % 2 == 0) {
    rep.ok = false;
    rep.failures.push_back("side count " + std::to_string(d.k) + " is even; no (k^2 +- 1)/2 split");
  }
  for (Vertex w = 1; w <= d.n; ++w) {
    for (Vertex x = 1; x <= d.n; ++x) {
      if (w == x) continue;
      const Count wins = face_wins(d.die(w), d.die(x));
      const Count want = t.beats(w, x) ? rep.expected_winner_wins : rep.expected_loser_wins;
      if (wins != want) {
        rep.ok = false;
        rep.failures.push_back("die " + std::to_string(w) + " over die " + std::to_string(x) + ": " +
                               std::to_string(wins) + " face wins, expected " + std::to_string(want));
      }
    }
  }
  return rep;
}

bool is_balanced(const DiceSet& d) {
  if (d.k == 0) return false;
  const Probability target = Probability(1, 2) + Probability(1, 2 * static_cast<std::int64_t>(d.k) * d.k);
  for (Vertex w = 1; w <= d.n; ++w) {
    for (Vertex x = w + 1; x <= d.n; ++x) {
      const auto p = matchup(d.die(w), d.die(x)).probability_a_beats_b;
      if (p != target && Probability(1) - p != target) return false;
    }
  }
  return true;
}

DiceSet compact_labels(const DiceSet& d) {
  std::vector<Label> all;
  for (const auto& die : d.dice) all.insert(all.end(), die.begin(), die.end());
  std::sort(all.begin(), all.end());
  DiceSet out = d;
  for (auto& die : out.dice)
    for (auto& l : die)
      l = static_cast<Label>(std::lower_bound(all.begin(), all.end(), l) - all.begin()) + 1;
  return out;
}

std::string to_string(const Probability& p) {
  return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
}

}  // namespace ntdice
