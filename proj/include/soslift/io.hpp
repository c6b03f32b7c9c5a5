#pragma once

// Text and JSON forms of permutations and fractions.
//
// One-line text: concatenated digits for m <= 9 ("2413"), space-separated
// integers for m >= 10. JSON: {"m": 4, "values": [2,4,1,3]} and
// {"num": p, "den": q}.

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "soslift/farey.hpp"
#include "soslift/permutation.hpp"

namespace soslift {

inline std::string format_permutation(const Permutation& p) {
  std::string out;
  const bool compact = p.degree() <= 9;
  for (int v : p.values()) {
    if (!compact && !out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

/// Parses either form of the one-line text. Whitespace or commas select the
/// separated form; otherwise each character is one digit (so m <= 9).
inline Permutation parse_permutation(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("malformed permutation '" + std::string(text) + "': " + why);
  };
  const bool separated = text.find_first_of(" \t,") != std::string_view::npos;
  std::vector<int> values;
  if (separated) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw bad("unexpected character '" + std::string(1, text[i]) + "'");
      if (j - i > 6) throw bad("entry too large");
      values.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
  } else {
    if (text.size() > 9) throw bad("compact form only for m <= 9; separate entries with spaces");
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad("unexpected character '" + std::string(1, c) + "'");
      values.push_back(c - '0');
    }
  }
  if (values.empty()) throw bad("empty");
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw bad(e.what());
  }
}

inline nlohmann::json to_json(const Permutation& p) {
  return {{"m", p.degree()}, {"values", std::vector<int>(p.values().begin(), p.values().end())}};
}

inline Permutation permutation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("values")) throw std::invalid_argument("permutation JSON needs \"values\"");
  auto values = j.at("values").get<std::vector<int>>();
  if (j.contains("m") && j.at("m").get<int>() != static_cast<int>(values.size())) {
    throw std::invalid_argument("permutation JSON: \"m\" disagrees with length of \"values\"");
  }
  return Permutation(std::move(values));
}

namespace detail {

inline nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

}  // namespace detail

inline nlohmann::json to_json(const Fraction& f) {
  return {{"num", detail::big_to_json(f.num())}, {"den", detail::big_to_json(f.den())}};
}

inline Fraction fraction_from_json(const nlohmann::json& j) {
  return {detail::big_from_json(j.at("num")), detail::big_from_json(j.at("den"))};
}

inline nlohmann::json to_json(const FareyInterval& f) {
  return {{"index", f.index}, {"lo", to_json(f.lo)}, {"hi", to_json(f.hi)}};
}

}  // namespace soslift
