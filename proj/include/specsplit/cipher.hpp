#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specsplit/frobenius.hpp"

namespace specsplit {

// Square grid of symbol codes. Code 0 is the pad that fills the tail beyond
// the original text, so byte values are stored as value + 1.
struct TextGrid {
  int side = 0;
  std::vector<std::vector<int>> cells;

  static constexpr int pad_code = 0;

  friend bool operator==(const TextGrid& a, const TextGrid& b) = default;
};

TextGrid encode_text(const std::string& text);  // side = ceil(sqrt(length))
std::string decode_text(const TextGrid& g);     // trailing pads dropped

// cells'[row_p(i)][col_p(j)] = cells[i][j]
TextGrid encrypt(const TextGrid& g, const Permutation& row_p, const Permutation& col_p);
TextGrid decrypt(const TextGrid& g, const Permutation& row_p, const Permutation& col_p);

enum class CrackStatus { Match, NoMatchHeuristic, Undetermined };

struct CrackResult {
  CrackStatus status = CrackStatus::Undetermined;
  std::optional<Permutation> row_perm;  // set iff Match; reproduces the ciphertext
  std::optional<Permutation> col_perm;
  std::string reason;
  EngineStats stats;
};

// Decides whether cipher is a row/column shuffle of plain. A Match is only
// reported after the recovered permutations decrypt the ciphertext back to
// the plain grid cell-exact.
CrackResult crack(const TextGrid& plain, const TextGrid& cipher, const EngineConfig& cfg);

DenseMatrix grid_matrix(const TextGrid& g);

std::string grid_json(const TextGrid& g);
TextGrid parse_grid_json(const std::string& text);  // ParseError on malformed input

std::string report_json(const CrackResult& r);

}  // namespace specsplit
