#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ntdice/tournament.hpp"

namespace ntdice {

using Label = std::int64_t;
using Count = std::int64_t;
using Probability = boost::rational<std::int64_t>;

/// Faces of one die, index = column.
using Die = std::vector<Label>;

/// n dice with k faces each. dice[v-1][i-1] is face i of die v.
struct DiceSet {
  int n = 0;
  int k = 0;
  std::vector<Die> dice;

  const Die& die(Vertex v) const { return dice.at(static_cast<std::size_t>(v - 1)); }

  friend bool operator==(const DiceSet&, const DiceSet&) = default;
};

/// Builds a DiceSet from raw rows; throws SideCountMismatch on ragged rows
/// and DuplicateLabelAcrossDice when any label repeats anywhere.
DiceSet make_dice_set(std::vector<Die> dice);

struct Matchup {
  Count wins_a_over_b = 0;
  Count wins_b_over_a = 0;
  Probability probability_a_beats_b;

  friend bool operator==(const Matchup&, const Matchup&) = default;
};

/// Number of face pairs (x, y), x from a and y from b, with x > y.
/// Exhaustive enumeration; this is the reference counter everything else is
/// checked against.
Count face_wins(std::span<const Label> a, std::span<const Label> b);

/// Same count by sorting and merging, O(k log k).
Count face_wins_sorted(std::span<const Label> a, std::span<const Label> b);

/// Throws SideCountMismatch or DuplicateLabelAcrossDice.
Matchup matchup(std::span<const Label> a, std::span<const Label> b);

/// i -> j iff die i beats die j with probability > 1/2. Throws TieDetected.
Tournament dominance(const DiceSet& d);

/// Side count the construction uses for n dice: n for odd n, n-1 for
/// n = 2 mod 4, n+1 for n = 0 mod 4 (and 1 for n = 1).
int side_count(int n);

DiceSet build_dice(const Tournament& t);

DiceSet build_odd(const Tournament& t);
DiceSet build_even_2mod4(const Tournament& t);
DiceSet build_0mod4(const Tournament& t);

/// Evidence for one unordered pair {w, x}, w < x.
struct PairEvidence {
  Vertex w;
  Vertex x;
  Vertex expected_winner;
  std::optional<Vertex> actual_winner;  // empty on a tie
  Matchup result;                       // w against x
};

struct VerificationReport {
  bool realized = true;
  bool balance_ok = true;
  std::vector<PairEvidence> pairs;
  std::vector<std::string> failures;

  /// First pair whose direction disagrees with the tournament.
  const PairEvidence* first_mismatch() const;
};

/// Compares every pair of dice against t. Never throws on mismatch or tie;
/// throws SideCountMismatch when d and t disagree on n.
VerificationReport verify(const DiceSet& d, const Tournament& t);

struct AuditReport {
  bool ok = true;
  Count expected_loser_wins = 0;
  Count expected_winner_wins = 0;
  std::vector<std::string> failures;
};

/// Checks that every loser has exactly (k^2-1)/2 face wins and every winner
/// (k^2+1)/2, with counts taken from face_wins.
AuditReport guaranteed_wins_audit(const DiceSet& d, const Tournament& t);

/// Every ordered winner beats its opponent with probability exactly
/// 1/2 + 1/(2k^2).
bool is_balanced(const DiceSet& d);

/// Order-preserving relabeling onto 1..n*k.
DiceSet compact_labels(const DiceSet& d);

enum class DiceFormat { Json, Csv, Table };

std::string serialize(const DiceSet& d, DiceFormat format);

/// Accepts Json or Csv.
DiceSet parse_dice(std::string_view text, DiceFormat format);

/// Json when the first non-blank character is '{', otherwise Csv.
DiceFormat detect_dice_format(std::string_view text);

std::string to_string(const Probability& p);

}  // namespace ntdice
