#include "ntdice/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ntdice/dice.hpp"
#include "ntdice/error.hpp"
#include "ntdice/factorization.hpp"
#include "ntdice/tournament.hpp"

namespace ntdice::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, std::ostream& out, const std::string& data) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << data;
}

DiceSet load_dice(const std::string& path, std::istream& in) {
  const auto text = read_input(path, in);
  return parse_dice(text, detect_dice_format(text));
}

Tournament load_tournament(const std::string& path, std::istream& in) {
  const auto text = read_input(path, in);
  return parse_tournament(text, detect_tournament_format(text));
}

std::string verification_text(const VerificationReport& rep, int n, int k) {
  std::ostringstream os;
  os << "dice: " << n << "\n"
     << "sides: " << k << "\n"
     << "pairs: " << rep.pairs.size() << "\n"
     << "realized: " << (rep.realized ? "yes" : "no") << "\n"
     << "balanced: " << (rep.balance_ok ? "yes" : "no") << "\n";
  if (const auto* bad = rep.first_mismatch()) {
    os << "first mismatch: X_" << bad->w << " vs X_" << bad->x << " expected X_" << bad->expected_winner
       << " to win, face wins " << bad->result.wins_a_over_b << "-" << bad->result.wins_b_over_a << " ("
       << to_string(bad->result.probability_a_beats_b) << ")\n";
  }
  return os.str();
}

std::string verification_json(const VerificationReport& rep, int n, int k) {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["sides"] = k;
  doc["realized"] = rep.realized;
  doc["balanced"] = rep.balance_ok;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : rep.pairs) {
    nlohmann::ordered_json e;
    e["pair"] = {p.w, p.x};
    e["expected_winner"] = p.expected_winner;
    e["actual_winner"] = p.actual_winner ? nlohmann::ordered_json(*p.actual_winner) : nlohmann::ordered_json();
    e["wins"] = {p.result.wins_a_over_b, p.result.wins_b_over_a};
    e["probability"] = to_string(p.result.probability_a_beats_b);
    pairs.push_back(std::move(e));
  }
  doc["pairs"] = std::move(pairs);
  doc["failures"] = rep.failures;
  return doc.dump() + "\n";
}

// Row r, column c: '1' if r beats c, '0' if c beats r, '=' on a tie, '-' on the diagonal.
std::string stats_text(const DiceSet& d) {
  std::ostringstream os;
  os << "dice: " << d.n << "\n"
     << "sides: " << d.k << "\n"
     << "balanced: " << (is_balanced(d) ? "yes" : "no") << "\n"
     << "dominance:\n";
  const Probability half(1, 2);
  for (Vertex r = 1; r <= d.n; ++r) {
    for (Vertex c = 1; c <= d.n; ++c) {
      if (c > 1) os << ' ';
      if (r == c) {
        os << '-';
        continue;
      }
      const auto p = matchup(d.die(r), d.die(c)).probability_a_beats_b;
      os << (p > half ? '1' : p < half ? '0' : '=');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify sets of dice realizing tournaments", "ntdice"};
  app.require_subcommand(1);

  std::string output = "-";
  std::string format = "json";

  auto* gen = app.add_subcommand("gen", "Generate a tournament");
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  gen->add_option("--kind", kind, "Tournament family")
      ->required()
      ->check(CLI::IsMember({"transitive", "almost-transitive", "random", "paley"}));
  gen->add_option("--n", n, "Vertex count (the prime p for paley)")->required();
  gen->add_option("--seed", seed, "Seed for --kind random");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "matrix"}));
  gen->add_option("-o,--output", output, "Output path");

  auto* factor = app.add_subcommand("factor", "Print the ordered rounds of the K_n edge partition");
  factor->add_option("--n", n, "Vertex count (odd or 2 mod 4)")->required();
  factor->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  factor->add_option("-o,--output", output, "Output path");

  auto* build = app.add_subcommand("build", "Build dice realizing a tournament");
  std::string input = "-";
  bool compact = false;
  build->add_option("-i,--input", input, "Tournament (JSON or matrix)");
  build->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  build->add_flag("--compact", compact, "Relabel faces onto 1..n*k");
  build->add_option("-o,--output", output, "Output path");

  auto* verify_cmd = app.add_subcommand("verify", "Check that dice realize a tournament");
  std::string dice_path = "-";
  std::string tournament_path;
  verify_cmd->add_option("--dice", dice_path, "Dice (JSON or CSV)");
  verify_cmd->add_option("--tournament", tournament_path, "Tournament (JSON or matrix)")->required();
  verify_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  auto* matchup_cmd = app.add_subcommand("matchup", "Exact face wins and probability for one pair");
  std::vector<int> pair;
  matchup_cmd->add_option("--dice", dice_path, "Dice (JSON or CSV)");
  matchup_cmd->add_option("--pair", pair, "Two 1-based die indices")->required()->expected(2);
  matchup_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* stats = app.add_subcommand("stats", "Side count, balance and dominance matrix");
  stats->add_option("--dice", dice_path, "Dice (JSON or CSV)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      Tournament t = [&] {
        if (kind == "transitive") return transitive(n);
        if (kind == "almost-transitive") return almost_transitive(n);
        if (kind == "random") return random_tournament(n, seed);
        return paley(n);
      }();
      write_output(output, out,
                   serialize(t, format == "matrix" ? TournamentFormat::Matrix : TournamentFormat::Json));
      return kExitOk;
    }
    if (factor->parsed()) {
      if (n < 2 || n % 4 == 0)
        throw Error(ErrorCode::ParityError, "factor needs n odd (>= 3) or n = 2 mod 4, got " + std::to_string(n));
      const auto f = n % 2 == 1 ? odd_rounds(n) : even_rounds(n);
      write_output(output, out, serialize(f, format == "table" ? FactorFormat::Table : FactorFormat::Json));
      return kExitOk;
    }
    if (build->parsed()) {
      auto d = build_dice(load_tournament(input, in));
      if (compact) d = compact_labels(d);
      const auto fmt = format == "csv" ? DiceFormat::Csv : format == "table" ? DiceFormat::Table : DiceFormat::Json;
      write_output(output, out, serialize(d, fmt));
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (dice_path == "-" && tournament_path == "-")
        throw UsageError("--dice and --tournament cannot both read standard input");
      const auto d = load_dice(dice_path, in);
      const auto t = load_tournament(tournament_path, in);
      const auto rep = verify(d, t);
      out << (format == "json" ? verification_json(rep, d.n, d.k) : verification_text(rep, d.n, d.k));
      if (!rep.realized) {
        for (const auto& f : rep.failures) err << f << "\n";
        return kExitVerifyFailed;
      }
      return kExitOk;
    }
    if (matchup_cmd->parsed()) {
      const auto d = load_dice(dice_path, in);
      for (int v : pair)
        if (v < 1 || v > d.n)
          throw Error(ErrorCode::IndexOutOfRange, "die " + std::to_string(v) + " outside 1.." + std::to_string(d.n));
      const auto m = matchup(d.die(pair[0]), d.die(pair[1]));
      if (format == "json") {
        nlohmann::ordered_json doc;
        doc["pair"] = pair;
        doc["wins"] = {m.wins_a_over_b, m.wins_b_over_a};
        doc["probability"] = to_string(m.probability_a_beats_b);
        out << doc.dump() << "\n";
      } else {
        out << "X_" << pair[0] << " vs X_" << pair[1] << ": face wins " << m.wins_a_over_b << "-"
            << m.wins_b_over_a << " of " << static_cast<Count>(d.k) * d.k << ", P(X_" << pair[0] << " > X_"
            << pair[1] << ") = " << to_string(m.probability_a_beats_b) << "\n";
      }
      return kExitOk;
    }
    if (stats->parsed()) {
      out << stats_text(load_dice(dice_path, in));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ntdice::cli
