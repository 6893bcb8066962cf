#include <nlohmann/json.hpp>

#include <sstream>

#include "ntdice/dice.hpp"
#include "ntdice/error.hpp"

namespace ntdice {

DiceFormat detect_dice_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? DiceFormat::Json : DiceFormat::Csv;
  }
  return DiceFormat::Csv;
}

std::string serialize(const DiceSet& d, DiceFormat format) {
  switch (format) {
    case DiceFormat::Json: {
      nlohmann::ordered_json doc;
      doc["n"] = d.n;
      doc["sides"] = d.k;
      doc["dice"] = d.dice;
      return doc.dump() + "\n";
    }
    case DiceFormat::Csv: {
      std::string out;
      for (const auto& die : d.dice) {
        for (std::size_t i = 0; i < die.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(die[i]);
        }
        out += '\n';
      }
      return out;
    }
    case DiceFormat::Table: {
      std::size_t width = 1;
      for (const auto& die : d.dice)
        for (Label l : die) width = std::max(width, std::to_string(l).size());
      const std::size_t name_width = std::to_string(d.n).size() + 3;  // "X_" + digits + ":"
      std::string out;
      for (int v = 1; v <= d.n; ++v) {
        std::string name = "X_" + std::to_string(v) + ":";
        name.resize(name_width, ' ');
        out += name;
        for (Label l : d.die(v)) {
          const auto s = std::to_string(l);
          out += " | " + std::string(width - s.size(), ' ') + s;
        }
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

namespace {

DiceSet parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  if (!doc.is_object() || !doc.contains("dice") || !doc["dice"].is_array())
    throw Error(ErrorCode::SyntaxError, R"(expected {"n": <int>, "sides": <int>, "dice": [[...], ...]})");
  std::vector<Die> dice;
  for (const auto& row : doc["dice"]) {
    if (!row.is_array()) throw Error(ErrorCode::SyntaxError, "each die must be an array of labels");
    Die die;
    for (const auto& l : row) {
      if (!l.is_number_integer()) throw Error(ErrorCode::SyntaxError, "face labels must be integers");
      die.push_back(l.get<Label>());
    }
    dice.push_back(std::move(die));
  }
  auto d = make_dice_set(std::move(dice));
  if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<int>() != d.n))
    throw Error(ErrorCode::SyntaxError, "\"n\" does not match the number of dice");
  if (doc.contains("sides") && (!doc["sides"].is_number_integer() || doc["sides"].get<int>() != d.k))
    throw Error(ErrorCode::SideCountMismatch, "\"sides\" does not match the face count");
  return d;
}

DiceSet parse_csv(std::string_view text) {
  std::vector<Die> dice;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Die die;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      std::size_t used = 0;
      Label l = 0;
      try {
        l = std::stoll(cell, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError, "bad CSV cell '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t\r", used) != std::string::npos)
        throw Error(ErrorCode::SyntaxError, "bad CSV cell '" + cell + "'");
      die.push_back(l);
    }
    dice.push_back(std::move(die));
  }
  if (dice.empty()) throw Error(ErrorCode::SyntaxError, "no dice in CSV input");
  return make_dice_set(std::move(dice));
}

}  // namespace

DiceSet parse_dice(std::string_view text, DiceFormat format) {
  switch (format) {
    case DiceFormat::Json: return parse_json(text);
    case DiceFormat::Csv: return parse_csv(text);
    case DiceFormat::Table: break;
  }
  throw Error(ErrorCode::SyntaxError, "table output cannot be parsed back");
}

}  // namespace ntdice
