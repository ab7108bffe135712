#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specsplit/matrix.hpp"

namespace specsplit {

enum class Schema { First, Second };

// Partial correspondence built by the engine. pmap[i] is the vertex of B
// matched to vertex i of A, or -1. Perturbations are placed only at matched
// positions, with the same magnitude on both sides at corresponding spots.
struct MatchState {
  int j = 0;  // committed iterations
  std::vector<int> pmap;
  std::vector<double> a_pert;
  std::vector<double> b_pert;
  std::vector<std::pair<double, double>> signatures;  // (norm, diagonal) per iteration
};

struct EngineConfig {
  double epsilon = 1.0;
  double tau_match = 1e-6;
  Schema schema = Schema::Second;
  // Give each iteration its own perturbation magnitude (bit-reversal ladder
  // over [1.25, 1.75)*epsilon). Uniform magnitudes leave exact norm ties on
  // vertex-transitive graphs that the greedy matcher then resolves blindly.
  bool stamped_perturbations = true;
  // Refactor after every committed perturbation instead of tracking inverses.
  bool baseline_solver = false;
  int threads = 0;  // 0 = all hardware threads

  // Instrumentation hook, called after each committed match with the
  // bookkeeping state and both working matrices.
  std::function<void(const MatchState&, const ShiftedMatrix&, const ShiftedMatrix&)>
      on_iteration;
};

struct EngineStats {
  int iterations = 0;
  std::optional<int> split_iteration;  // 1-based; second schema only
  long long solve_count = 0;           // linear-system solutions the algorithm consumed
  int ambiguity_count = 0;
  int refresh_count = 0;               // tracked-inverse rebuilds
  double wall_ms = 0.0;
};

enum class Verdict { Isomorphic, NotIsomorphicHeuristic, Undetermined };

struct IsoResult {
  Verdict verdict = Verdict::Undetermined;
  std::optional<Permutation> permutation;  // set iff Isomorphic; always verified
  std::optional<int> witness_iteration;    // set iff NotIsomorphicHeuristic; 0 = pre-check
  std::string reason;
  EngineStats stats;
};

// Every k whose norm and own-index component both lie within tau of x's,
// ordered by ascending norm discrepancy, ties by ascending k.
std::vector<int> match_candidates(
    const std::vector<double>& xj, int j,
    const std::vector<std::pair<int, std::vector<double>>>& candidates,
    double tau);

// True iff all pairwise gaps between norms exceed tau * (1 + max norm).
bool check_full_split(const std::vector<double>& norms, double tau);

// Magnitude committed at iteration j (0-based) on a size-n instance.
double perturbation_magnitude(const EngineConfig& cfg, int j, int n);

IsoResult run_first_schema(const ShiftedMatrix& a, const ShiftedMatrix& b,
                           const EngineConfig& cfg);
IsoResult run_second_schema(const ShiftedMatrix& a, const ShiftedMatrix& b,
                            const EngineConfig& cfg);
IsoResult run_engine(const ShiftedMatrix& a, const ShiftedMatrix& b,
                     const EngineConfig& cfg);

std::string report_json(const IsoResult& r);

}  // namespace specsplit
