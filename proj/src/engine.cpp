#include "specsplit/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "specsplit/kernels.hpp"
#include "specsplit/solver.hpp"

namespace specsplit {

namespace {

// Discrepancies within this relative width count as tied and fall back to the
// smallest index, so selection is stable against solver rounding.
constexpr double kTieBucket = 1e-7;

// Tracked inverses rebuild when a spot-checked residual exceeds this fraction
// of the solver contract.
constexpr double kResidualSlack = 0.25;

double vec_norm(const double* v, std::size_t n) {
  return std::sqrt(kernels::dot(v, v, n));
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Bit reversal of j over enough bits to separate n indices; in [0, 1).
double bit_reversal_fraction(int j, int n) {
  int bits = 1;
  while ((1 << bits) < n) ++bits;
  unsigned rev = 0;
  unsigned v = static_cast<unsigned>(j);
  for (int b = 0; b < bits; ++b) {
    rev = (rev << 1) | (v & 1u);
    v >>= 1;
  }
  return static_cast<double>(rev) / static_cast<double>(1u << bits);
}

bool is_checkpoint(int j) { return (j & (j - 1)) == 0 || j % 64 == 0; }

// Applies fn to contiguous column ranges covering [0, n). Each column is
// written by exactly one invocation, in the same fixed row order, so verdicts
// do not depend on the thread count.
void parallel_columns(int n, int threads, const std::function<void(int, int)>& fn) {
  if (threads <= 1 || n < 256) {
    fn(0, n);
    return;
  }
  const int nt = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nt) - 1);
  for (int t = 1; t < nt; ++t) {
    const int lo = static_cast<int>(static_cast<long long>(n) * t / nt);
    const int hi = static_cast<int>(static_cast<long long>(n) * (t + 1) / nt);
    pool.emplace_back(fn, lo, hi);
  }
  fn(0, static_cast<int>(static_cast<long long>(n) / nt));
  for (auto& th : pool) th.join();
}

bool diag_multisets_differ(const ShiftedMatrix& a, const ShiftedMatrix& b,
                           double tau) {
  const int n = a.n();
  std::vector<double> da(static_cast<std::size_t>(n));
  std::vector<double> db(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    da[i] = a.diag(i);
    db[i] = b.diag(i);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  for (int i = 0; i < n; ++i) {
    if (std::abs(da[i] - db[i]) > tau * (1.0 + std::abs(da[i]))) return true;
  }
  return false;
}

// One side of the run: the working matrix plus whatever makes its inverse
// columns cheap. Fast mode keeps the explicit inverse current through rank-1
// updates; baseline mode refactors after every committed perturbation.
struct Tracker {
  ShiftedMatrix work;
  bool baseline;
  int threads;
  EngineStats* stats;

  DenseMatrix inv{0};
  std::vector<double> colsq;
  std::optional<Factorization> fact;

  Tracker(const ShiftedMatrix& src, bool baseline_mode, int thread_count,
          EngineStats* st)
      : work(src), baseline(baseline_mode), threads(thread_count), stats(st) {}

  void init() {
    if (baseline) {
      fact.emplace(factor(work));
    } else {
      rebuild();
    }
  }

  void rebuild() {
    const int n = work.n();
    const Factorization f = factor(work);
    if (inv.n() != n) inv = DenseMatrix(n);
    for (int j = 0; j < n; ++j) {
      const std::vector<double> col = f.solve_basis(j);
      std::copy(col.begin(), col.end(), inv.row(j));
    }
    colsq.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      kernels::sq_accumulate(colsq.data(), inv.row(i), static_cast<std::size_t>(n));
    }
  }

  void bump(int t, double eps) {
    work.add_perturbation(t, eps);
    if (baseline) {
      fact.emplace(factor(work));
      return;
    }
    const int n = work.n();
    // snapshot of row t; it is both factors of the rank-1 correction
    const std::vector<double> u(inv.row(t), inv.row(t) + n);
    const double c = eps / (1.0 + eps * u[t]);
    std::fill(colsq.begin(), colsq.end(), 0.0);
    parallel_columns(n, threads, [&](int lo, int hi) {
      const std::size_t len = static_cast<std::size_t>(hi - lo);
      if (len == 0) return;
      for (int i = 0; i < n; ++i) {
        kernels::axpy_sq_accumulate(inv.row(i) + lo, u.data() + lo, -c * u[i],
                                    colsq.data() + lo, len);
      }
    });
  }

  struct Probe {
    double norm;
    double diag;
  };

  Probe committed(int k) {
    if (!baseline) return {std::sqrt(colsq[k]), inv.at(k, k)};
    const std::vector<double> z = fact->solve_basis(k);
    return {vec_norm(z.data(), z.size()), z[k]};
  }

  // Column k of the inverse after a tentative bump at k. The bumped system's
  // exact solution is the current column rescaled by 1/(1 + eps*M[k][k]).
  Probe tentative(int k, double eps) {
    if (!baseline) {
      const double mkk = inv.at(k, k);
      const double s = 1.0 / (1.0 + eps * mkk);
      return {s * std::sqrt(colsq[k]), s * mkk};
    }
    const std::vector<double> z = fact->solve_basis(k);
    const double s = 1.0 / (1.0 + eps * z[k]);
    return {s * vec_norm(z.data(), z.size()), s * z[k]};
  }

  std::vector<double> all_norms() {
    const int n = work.n();
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
      out[l] = baseline ? committed(l).norm : std::sqrt(colsq[l]);
    }
    return out;
  }

  // Drift guard: verify row t still solves its system; rebuild if not.
  void spot_check(int t) {
    if (baseline) return;
    const int n = work.n();
    const double* x = inv.row(t);
    double rsq = 0.0;
    for (int i = 0; i < n; ++i) {
      double ri = kernels::dot(work.base().row(i), x, static_cast<std::size_t>(n)) +
                  (work.shift(i) + work.perturb(i)) * x[i];
      if (i == t) ri -= 1.0;
      rsq += ri * ri;
    }
    const double bound =
        kResidualSlack * Factorization::residual_tolerance * std::sqrt(colsq[t]);
    if (std::sqrt(rsq) > bound) {
      rebuild();
      if (stats != nullptr) ++stats->refresh_count;
    }
  }
};

IsoResult run_impl(const ShiftedMatrix& a, const ShiftedMatrix& b,
                   const EngineConfig& cfg, bool second) {
  if (cfg.epsilon <= 0.0 || cfg.tau_match <= 0.0) {
    throw std::invalid_argument("epsilon and tau_match must be positive");
  }
  if (a.n() != b.n()) throw std::invalid_argument("dimension mismatch");

  const int n = a.n();
  IsoResult res;

  if (n == 0) {
    res.verdict = Verdict::Isomorphic;
    res.permutation = Permutation::identity(0);
    return res;
  }

  if (diag_multisets_differ(a, b, cfg.tau_match)) {
    res.verdict = Verdict::NotIsomorphicHeuristic;
    res.witness_iteration = 0;
    res.reason = "diagonal weight multisets differ";
    return res;
  }

  const double tau = cfg.tau_match;
  const int threads = resolve_threads(cfg.threads);
  Tracker ta(a, cfg.baseline_solver, threads, &res.stats);
  Tracker tb(b, cfg.baseline_solver, threads, &res.stats);

  std::vector<int> pmap(static_cast<std::size_t>(n), -1);
  std::vector<char> matched_b(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<double, double>> signatures;
  signatures.reserve(static_cast<std::size_t>(n));
  bool finished_by_split = false;

  try {
    ta.init();
    tb.init();

    for (int j = 0; j < n && !finished_by_split; ++j) {
      const double eps = perturbation_magnitude(cfg, j, n);
      ta.bump(j, eps);
      res.stats.solve_count += 1;
      if (is_checkpoint(j)) ta.spot_check(j);
      const Tracker::Probe xp = ta.committed(j);

      std::vector<std::pair<double, int>> hits;
      for (int k = 0; k < n; ++k) {
        if (matched_b[k]) continue;
        res.stats.solve_count += 1;
        const Tracker::Probe yp = tb.tentative(k, eps);
        const double disc = std::abs(xp.norm - yp.norm);
        if (disc <= tau * (1.0 + xp.norm) &&
            std::abs(xp.diag - yp.diag) <= tau * (1.0 + std::abs(xp.diag))) {
          hits.emplace_back(disc, k);
        }
      }

      if (hits.empty()) {
        if (res.stats.ambiguity_count > 0) {
          res.verdict = Verdict::Undetermined;
          res.reason = "dead end at iteration " + std::to_string(j + 1) +
                       " after ambiguous earlier matches";
        } else {
          res.verdict = Verdict::NotIsomorphicHeuristic;
          res.witness_iteration = j + 1;
          res.reason = "no matching vertex at iteration " + std::to_string(j + 1);
        }
        return res;
      }

      double dmin = hits[0].first;
      for (const auto& h : hits) dmin = std::min(dmin, h.first);
      const double bucket = dmin + kTieBucket * (1.0 + xp.norm);
      int pick = n;
      for (const auto& [disc, k] : hits) {
        if (disc <= bucket) pick = std::min(pick, k);
      }
      if (hits.size() > 1) ++res.stats.ambiguity_count;

      tb.bump(pick, eps);
      if (is_checkpoint(j)) tb.spot_check(pick);
      pmap[j] = pick;
      matched_b[pick] = 1;
      signatures.emplace_back(xp.norm, xp.diag);
      res.stats.iterations = j + 1;

      if (cfg.on_iteration) {
        MatchState st;
        st.j = j + 1;
        st.pmap = pmap;
        st.a_pert = ta.work.perturb_vector();
        st.b_pert = tb.work.perturb_vector();
        st.signatures = signatures;
        cfg.on_iteration(st, ta.work, tb.work);
      }

      if (second && !res.stats.split_iteration) {
        res.stats.solve_count += n;
        const std::vector<double> xnorms = ta.all_norms();
        if (check_full_split(xnorms, tau)) {
          res.stats.split_iteration = j + 1;
          if (j + 1 < n) {
            std::vector<double> bnorm(static_cast<std::size_t>(n), 0.0);
            for (int k = 0; k < n; ++k) {
              if (matched_b[k]) continue;
              res.stats.solve_count += 1;
              bnorm[k] = tb.committed(k).norm;
            }
            for (int l = j + 1; l < n; ++l) {
              int chosen = -1;
              int count = 0;
              for (int k = 0; k < n; ++k) {
                if (matched_b[k]) continue;
                if (std::abs(xnorms[l] - bnorm[k]) <= tau * (1.0 + xnorms[l])) {
                  ++count;
                  if (chosen < 0) chosen = k;
                }
              }
              if (count == 0) {
                if (res.stats.ambiguity_count > 0) {
                  res.verdict = Verdict::Undetermined;
                  res.reason = "dead end in norm-only finish at row " +
                               std::to_string(l) + " after ambiguous earlier matches";
                } else {
                  res.verdict = Verdict::NotIsomorphicHeuristic;
                  res.witness_iteration = j + 1;
                  res.reason = "no norm match for row " + std::to_string(l) +
                               " after full split";
                }
                return res;
              }
              if (count > 1) {
                res.verdict = Verdict::Undetermined;
                res.reason = "norm-only finish ambiguous at row " + std::to_string(l);
                return res;
              }
              pmap[l] = chosen;
              matched_b[chosen] = 1;
            }
          }
          finished_by_split = true;
        }
      }
    }
  } catch (const DominanceError& e) {
    res.verdict = Verdict::Undetermined;
    res.reason = std::string("solver: ") + e.what();
    return res;
  } catch (const NumericError& e) {
    res.verdict = Verdict::Undetermined;
    res.reason = std::string("solver: ") + e.what();
    return res;
  }

  const Permutation p = Permutation::from_map(pmap);
  const DenseSymMatrix eff_a(a.materialize());
  const DenseSymMatrix eff_b(b.materialize());
  if (verify_iso(eff_a, eff_b, p)) {
    res.verdict = Verdict::Isomorphic;
    res.permutation = p;
  } else {
    res.verdict = Verdict::Undetermined;
    res.reason = "matching completed but certificate verification failed";
  }
  return res;
}

IsoResult run_timed(const ShiftedMatrix& a, const ShiftedMatrix& b,
                    const EngineConfig& cfg, bool second) {
  const auto t0 = std::chrono::steady_clock::now();
  IsoResult res = run_impl(a, b, cfg, second);
  res.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace

std::vector<int> match_candidates(
    const std::vector<double>& xj, int j,
    const std::vector<std::pair<int, std::vector<double>>>& candidates,
    double tau) {
  const double xnorm = vec_norm(xj.data(), xj.size());
  const double xdiag = xj[static_cast<std::size_t>(j)];
  std::vector<std::pair<double, int>> hits;
  for (const auto& [k, yk] : candidates) {
    const double ynorm = vec_norm(yk.data(), yk.size());
    const double ydiag = yk[static_cast<std::size_t>(k)];
    const double disc = std::abs(xnorm - ynorm);
    if (disc <= tau * (1.0 + xnorm) &&
        std::abs(xdiag - ydiag) <= tau * (1.0 + std::abs(xdiag))) {
      hits.emplace_back(disc, k);
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<int> out;
  out.reserve(hits.size());
  for (const auto& [disc, k] : hits) out.push_back(k);
  return out;
}

bool check_full_split(const std::vector<double>& norms, double tau) {
  if (norms.size() < 2) return true;
  std::vector<double> s(norms);
  std::sort(s.begin(), s.end());
  const double gap = tau * (1.0 + s.back());
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] - s[i - 1] <= gap) return false;
  }
  return true;
}

double perturbation_magnitude(const EngineConfig& cfg, int j, int n) {
  if (!cfg.stamped_perturbations) return cfg.epsilon;
  return cfg.epsilon * (1.25 + 0.5 * bit_reversal_fraction(j, std::max(n, 2)));
}

IsoResult run_first_schema(const ShiftedMatrix& a, const ShiftedMatrix& b,
                           const EngineConfig& cfg) {
  return run_timed(a, b, cfg, false);
}

IsoResult run_second_schema(const ShiftedMatrix& a, const ShiftedMatrix& b,
                            const EngineConfig& cfg) {
  return run_timed(a, b, cfg, true);
}

IsoResult run_engine(const ShiftedMatrix& a, const ShiftedMatrix& b,
                     const EngineConfig& cfg) {
  return run_timed(a, b, cfg, cfg.schema == Schema::Second);
}

std::string report_json(const IsoResult& r) {
  nlohmann::json j;
  switch (r.verdict) {
    case Verdict::Isomorphic:
      j["verdict"] = "isomorphic";
      break;
    case Verdict::NotIsomorphicHeuristic:
      j["verdict"] = "not_isomorphic_heuristic";
      break;
    case Verdict::Undetermined:
      j["verdict"] = "undetermined";
      break;
  }
  j["permutation"] = r.permutation ? nlohmann::json(r.permutation->map())
                                   : nlohmann::json(nullptr);
  j["witness_iteration"] = r.witness_iteration
                               ? nlohmann::json(*r.witness_iteration)
                               : nlohmann::json(nullptr);
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
