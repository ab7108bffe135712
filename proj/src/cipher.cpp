#include "specsplit/cipher.hpp"

#include <stdexcept>

#include "json.hpp"

#include "specsplit/io.hpp"

namespace specsplit {

TextGrid encode_text(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("cannot encode empty text");
  const std::size_t len = text.size();
  int side = 1;
  while (static_cast<std::size_t>(side) * side < len) ++side;
  TextGrid g;
  g.side = side;
  g.cells.assign(static_cast<std::size_t>(side),
                 std::vector<int>(static_cast<std::size_t>(side), TextGrid::pad_code));
  for (std::size_t t = 0; t < len; ++t) {
    g.cells[t / side][t % side] = static_cast<unsigned char>(text[t]) + 1;
  }
  return g;
}

std::string decode_text(const TextGrid& g) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(g.side) * g.side);
  for (const auto& row : g.cells) flat.insert(flat.end(), row.begin(), row.end());
  while (!flat.empty() && flat.back() == TextGrid::pad_code) flat.pop_back();
  std::string out;
  out.reserve(flat.size());
  for (int code : flat) {
    if (code <= 0 || code > 256) {
      throw std::invalid_argument("grid holds non-text code " + std::to_string(code));
    }
    out.push_back(static_cast<char>(code - 1));
  }
  return out;
}

TextGrid encrypt(const TextGrid& g, const Permutation& row_p, const Permutation& col_p) {
  if (row_p.size() != g.side || col_p.size() != g.side) {
    throw std::invalid_argument("permutation size does not match grid side");
  }
  TextGrid out;
  out.side = g.side;
  out.cells.assign(static_cast<std::size_t>(g.side),
                   std::vector<int>(static_cast<std::size_t>(g.side), 0));
  for (int i = 0; i < g.side; ++i) {
    for (int j = 0; j < g.side; ++j) {
      out.cells[row_p(i)][col_p(j)] = g.cells[i][j];
    }
  }
  return out;
}

TextGrid decrypt(const TextGrid& g, const Permutation& row_p, const Permutation& col_p) {
  if (row_p.size() != g.side || col_p.size() != g.side) {
    throw std::invalid_argument("permutation size does not match grid side");
  }
  TextGrid out;
  out.side = g.side;
  out.cells.assign(static_cast<std::size_t>(g.side),
                   std::vector<int>(static_cast<std::size_t>(g.side), 0));
  for (int i = 0; i < g.side; ++i) {
    for (int j = 0; j < g.side; ++j) {
      out.cells[i][j] = g.cells[row_p(i)][col_p(j)];
    }
  }
  return out;
}

DenseMatrix grid_matrix(const TextGrid& g) {
  DenseMatrix m(g.side);
  for (int i = 0; i < g.side; ++i) {
    for (int j = 0; j < g.side; ++j) {
      m.at(i, j) = static_cast<double>(g.cells[i][j]);
    }
  }
  return m;
}

CrackResult crack(const TextGrid& plain, const TextGrid& cipher, const EngineConfig& cfg) {
  if (plain.side != cipher.side) throw std::invalid_argument("grid sides differ");
  CrackResult res;
  FrobeniusResult fr = solve_frobenius(grid_matrix(plain), grid_matrix(cipher), cfg);
  res.stats = fr.stats;
  res.reason = fr.reason;
  switch (fr.status) {
    case FrobeniusStatus::NotEquivalentHeuristic:
      res.status = CrackStatus::NoMatchHeuristic;
      return res;
    case FrobeniusStatus::Undetermined:
      res.status = CrackStatus::Undetermined;
      return res;
    case FrobeniusStatus::Solution:
      break;
  }
  if (decrypt(cipher, fr.solution->row_perm, fr.solution->col_perm) == plain) {
    res.status = CrackStatus::Match;
    res.row_perm = fr.solution->row_perm;
    res.col_perm = fr.solution->col_perm;
    res.reason.clear();
  } else {
    res.status = CrackStatus::Undetermined;
    res.reason = "permutations do not reproduce the plaintext";
  }
  return res;
}

std::string grid_json(const TextGrid& g) {
  nlohmann::json j;
  j["side"] = g.side;
  j["cells"] = g.cells;
  return j.dump();
}

TextGrid parse_grid_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad grid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("side") || !j.contains("cells")) {
    throw ParseError("grid JSON must carry side and cells");
  }
  if (!j["side"].is_number_integer()) throw ParseError("grid side must be an integer");
  TextGrid g;
  g.side = j["side"].get<int>();
  if (g.side < 0) throw ParseError("grid side must be non-negative");
  const auto& cells = j["cells"];
  if (!cells.is_array() || cells.size() != static_cast<std::size_t>(g.side)) {
    throw ParseError("grid cells must hold side rows");
  }
  g.cells.reserve(static_cast<std::size_t>(g.side));
  for (const auto& row : cells) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(g.side)) {
      throw ParseError("grid rows must hold side entries");
    }
    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(g.side));
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 256) {
        throw ParseError("grid codes must be integers in [0, 256]");
      }
      r.push_back(v.get<int>());
    }
    g.cells.push_back(std::move(r));
  }
  return g;
}

std::string report_json(const CrackResult& r) {
  nlohmann::json j;
  switch (r.status) {
    case CrackStatus::Match:
      j["status"] = "match";
      break;
    case CrackStatus::NoMatchHeuristic:
      j["status"] = "no_match_heuristic";
      break;
    case CrackStatus::Undetermined:
      j["status"] = "undetermined";
      break;
  }
  j["row_perm"] =
      r.row_perm ? nlohmann::json(r.row_perm->map()) : nlohmann::json(nullptr);
  j["col_perm"] =
      r.col_perm ? nlohmann::json(r.col_perm->map()) : nlohmann::json(nullptr);
  j["reason"] = r.reason;
  j["stats"] = {
      {"iterations", r.stats.iterations},
      {"split_iteration", r.stats.split_iteration
                              ? nlohmann::json(*r.stats.split_iteration)
                              : nlohmann::json(nullptr)},
      {"solve_count", r.stats.solve_count},
      {"ambiguity_count", r.stats.ambiguity_count},
      {"refresh_count", r.stats.refresh_count},
      {"wall_ms", r.stats.wall_ms},
  };
  return j.dump(2);
}

}  // namespace specsplit
