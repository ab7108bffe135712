#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "specsplit/engine.hpp"
#include "specsplit/matrix.hpp"

namespace specsplit {

// The engine's vertex map mixes the two sides of the bipartite embedding, so
// no row/column permutation pair can be read off it.
class CrossBlockError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrobeniusSolution {
  Permutation row_perm;
  Permutation col_perm;
};

enum class FrobeniusStatus { Solution, NotEquivalentHeuristic, Undetermined };

struct FrobeniusResult {
  FrobeniusStatus status = FrobeniusStatus::Undetermined;
  std::optional<FrobeniusSolution> solution;  // set iff Solution; always verified
  std::string reason;
  EngineStats stats;
};

// [[0, F], [F^T, 0]] as a 2n x 2n symmetric matrix: vertex i is row i of f,
// vertex n+j is column j.
DenseSymMatrix bipartite_embed(const DenseMatrix& f);

// Splits a 2n-vertex map that keeps the row and column blocks separate;
// throws CrossBlockError otherwise.
FrobeniusSolution extract_permutations(const Permutation& p);

// result[row_p(i)][col_p(j)] = f[i][j]
DenseMatrix apply_row_col(const DenseMatrix& f, const Permutation& row_p,
                          const Permutation& col_p);

// True iff applying s to fa reproduces fb; exact when both matrices are
// integer-coded, within kWeightTolerance otherwise.
bool verify_frobenius(const DenseMatrix& fa, const DenseMatrix& fb,
                      const FrobeniusSolution& s);

FrobeniusResult solve_frobenius(const DenseMatrix& fa, const DenseMatrix& fb,
                                const EngineConfig& cfg);

std::string report_json(const FrobeniusResult& r);

}  // namespace specsplit
