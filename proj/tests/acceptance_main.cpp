// Acceptance battery. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. --stress adds the large instances (n=2500 regular
// graph, 100x100 cipher grid) with no time assertions.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specsplit/cipher.hpp"
#include "specsplit/engine.hpp"
#include "specsplit/frobenius.hpp"
#include "specsplit/generators.hpp"
#include "specsplit/matrix.hpp"
#include "specsplit/oracle.hpp"
#include "specsplit/solver.hpp"

using namespace specsplit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Graph random_graph(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.below(2) == 1) edges.push_back({i, j});
    }
  }
  return Graph::create(n, std::move(edges));
}

Graph toggle_random_edge(const Graph& g, Rng& rng) {
  const int n = g.n();
  int u = static_cast<int>(rng.below(n));
  int v = static_cast<int>(rng.below(n));
  while (v == u) v = static_cast<int>(rng.below(n));
  if (u > v) std::swap(u, v);
  auto edges = g.edges();
  const auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
    return e.u == u && e.v == v;
  });
  if (it != edges.end()) {
    edges.erase(it);
  } else {
    edges.push_back({u, v});
  }
  return Graph::create(n, std::move(edges));
}

DenseSymMatrix random_zero_diag(int n, Rng& rng) {
  DenseMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = rng.unit() * 4.0 - 2.0;
      m.at(i, j) = w;
      m.at(j, i) = w;
    }
  }
  return DenseSymMatrix(std::move(m));
}

std::string random_text(std::size_t len, Rng& rng) {
  std::string s(len, '\0');
  for (auto& c : s) c = static_cast<char>('A' + static_cast<int>(rng.below(26)));
  return s;
}

// Criterion 4 instances are regenerated for criterion 5, so the recipe
// lives in one place.
struct PlantedRect {
  DenseMatrix f;
  DenseMatrix g;
};

PlantedRect planted_rect(int t) {
  Rng rng(4000 + t);
  const int n = 2 + static_cast<int>(rng.below(49));
  DenseMatrix f(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) f.at(i, j) = rng.unit() * 6.0 - 3.0;
  }
  const auto rp = random_permutation(n, rng);
  const auto cp = random_permutation(n, rng);
  return {f, apply_row_col(f, rp, cp)};
}

// Soundness and recall over small graphs where exhaustive search is cheap.
Outcome criterion_1() {
  const auto t0 = Clock::now();
  const int planted_total = 600;
  int planted_ok = 0;
  int planted_undetermined = 0;
  int planted_rejected = 0;
  int unsound = 0;

  for (int t = 0; t < planted_total; ++t) {
    Rng rng(1000 + t);
    const int n = 2 + t % 6;
    const auto g = random_graph(n, rng);
    const auto [h, p] = scramble(g, 5000 + t);
    const auto r = run_engine(build_shifted_unweighted(g),
                              build_shifted_unweighted(h), EngineConfig{});
    if (r.verdict == Verdict::Isomorphic &&
        verify_iso(adjacency_matrix(g), adjacency_matrix(h), *r.permutation)) {
      ++planted_ok;
    } else if (r.verdict == Verdict::Undetermined) {
      ++planted_undetermined;
    } else {
      ++planted_rejected;
    }
  }

  for (int t = 0; t < 600; ++t) {
    Rng rng(2000 + t);
    const int n = 2 + t % 6;
    const auto g = random_graph(n, rng);
    const auto [h, p] = scramble(g, 6000 + t);
    const auto h2 = toggle_random_edge(h, rng);
    const auto r = run_engine(build_shifted_unweighted(g),
                              build_shifted_unweighted(h2), EngineConfig{});
    if (r.verdict == Verdict::Isomorphic &&
        !brute_force_iso(adjacency_matrix(g), adjacency_matrix(h2))) {
      ++unsound;
    }
  }

  const double secs = seconds_since(t0);
  const bool pass = unsound == 0 && planted_rejected == 0 &&
                    planted_ok * 100 >= planted_total * 99 && secs < 60.0;
  Outcome o;
  o.pass = pass;
  o.detail = "planted " + std::to_string(planted_ok) + "/" +
             std::to_string(planted_total) + " verified, " +
             std::to_string(planted_undetermined) + " undetermined, " +
             std::to_string(planted_rejected) + " rejected, " +
             std::to_string(unsound) + " unsound of 600 toggled, " +
             fmt(secs, 1) + "s";
  return o;
}

// Square torus family, scrambled, second schema.
Outcome criterion_2() {
  const auto t0 = Clock::now();
  int verified = 0;
  int splits_seen = 0;
  double ratio_lo = std::numeric_limits<double>::infinity();
  double ratio_hi = 0.0;

  for (int side = 3; side <= 20; ++side) {
    const auto g = torus_lattice(side, side);
    const auto [h, p] = scramble(g, 90 + side);
    EngineConfig cfg;
    cfg.schema = Schema::Second;
    const auto r = run_engine(build_shifted_unweighted(g),
                              build_shifted_unweighted(h), cfg);
    if (r.verdict == Verdict::Isomorphic &&
        verify_iso(adjacency_matrix(g), adjacency_matrix(h), *r.permutation)) {
      ++verified;
    }
    if (r.stats.split_iteration) {
      const double ratio = *r.stats.split_iteration / std::sqrt(double(g.n()));
      ratio_lo = std::min(ratio_lo, ratio);
      ratio_hi = std::max(ratio_hi, ratio);
      ++splits_seen;
    }
  }

  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = verified == 18 && secs < 600.0;
  o.detail = std::to_string(verified) + "/18 tori verified, split/sqrt(n) in [" +
             fmt(ratio_lo) + ", " + fmt(ratio_hi) + "] over " +
             std::to_string(splits_seen) + " runs, " + fmt(secs, 1) + "s";
  return o;
}

// Random 4-regular graphs at working sizes; n=2500 only under --stress.
Outcome criterion_3(bool stress) {
  std::vector<int> sizes = {100, 300, 500};
  if (stress) sizes.push_back(2500);

  Outcome o;
  o.pass = true;
  for (int n : sizes) {
    const auto t0 = Clock::now();
    const auto g = random_regular(n, 4, 300 + n);
    const auto [h, p] = scramble(g, 400 + n);
    EngineConfig cfg;
    // At this size the inverse column norms crowd together: gaps of order
    // 1e-7 between genuinely distinct vertices sit below the default
    // tolerance and read as ties. 1e-8 resolves them while staying two
    // decades above the solver's residual bound.
    if (n >= 2500) cfg.tau_match = 1e-8;
    const auto r = run_engine(build_shifted_unweighted(g),
                              build_shifted_unweighted(h), cfg);
    const double secs = seconds_since(t0);
    const bool ok =
        r.verdict == Verdict::Isomorphic &&
        verify_iso(adjacency_matrix(g), adjacency_matrix(h), *r.permutation);
    if (!ok) o.pass = false;
    if (n == 500 && secs >= 900.0) o.pass = false;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += "n=" + std::to_string(n) + (ok ? " verified " : " FAILED ") +
                fmt(secs, 1) + "s";
  }
  return o;
}

// Planted row/column shuffles of random real matrices.
Outcome criterion_4() {
  int solved = 0;
  int exact = 0;
  int oracle_checked = 0;
  int oracle_agreed = 0;

  for (int t = 0; t < 200; ++t) {
    const auto inst = planted_rect(t);
    const auto r = solve_frobenius(inst.f, inst.g, EngineConfig{});
    if (r.status != FrobeniusStatus::Solution) continue;
    ++solved;
    if (apply_row_col(inst.f, r.solution->row_perm, r.solution->col_perm) ==
        inst.g) {
      ++exact;
    }
    if (inst.f.n() <= 5) {
      ++oracle_checked;
      if (brute_force_frobenius(inst.f, inst.g)) ++oracle_agreed;
    }
  }

  Outcome o;
  o.pass = solved == 200 && exact == 200 && oracle_agreed == oracle_checked;
  o.detail = std::to_string(solved) + "/200 solved, " + std::to_string(exact) +
             " exact reproductions, oracle " + std::to_string(oracle_agreed) +
             "/" + std::to_string(oracle_checked);
  return o;
}

// The weighted shift construction must stay within its conditioning budget.
Outcome criterion_5() {
  int checked = 0;
  int violations = 0;
  double worst = 0.0;
  const double budget = 3.0 + 1e-12;

  for (int t = 0; t < 500; ++t) {
    Rng rng(5000 + t);
    const int n = 2 + static_cast<int>(rng.below(39));
    const auto m = random_zero_diag(n, rng);
    const double c = condition_bound(build_shifted_weighted(m));
    worst = std::max(worst, c);
    ++checked;
    if (c > budget) ++violations;
  }
  for (int t = 0; t < 200; ++t) {
    const auto inst = planted_rect(t);
    for (const DenseMatrix* f : {&inst.f, &inst.g}) {
      const double c =
          condition_bound(build_shifted_weighted(bipartite_embed(*f)));
      worst = std::max(worst, c);
      ++checked;
      if (c > budget) ++violations;
    }
  }

  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(checked) + " bounds checked, " +
             std::to_string(violations) + " above budget, worst " +
             fmt(worst, 6);
  return o;
}

// Double permutation cipher: planted shuffles recovered symbol-exact, and a
// corrupted ciphertext never passes.
Outcome criterion_6(bool stress) {
  Outcome o;
  o.pass = true;

  std::vector<std::size_t> lengths = {1024, 4096};
  if (stress) lengths.push_back(10000);
  for (std::size_t len : lengths) {
    const auto t0 = Clock::now();
    Rng rng(6000 + static_cast<std::uint64_t>(len));
    const auto text = random_text(len, rng);
    const auto plain = encode_text(text);
    const auto rp = random_permutation(plain.side, rng);
    const auto cp = random_permutation(plain.side, rng);
    const auto cipher = encrypt(plain, rp, cp);
    EngineConfig cfg;
    // Same tolerance note as the large regular graphs: a 100x100 grid packs
    // 200 norms into a narrow band, and their true gaps undercut 1e-6.
    if (len >= 10000) cfg.tau_match = 1e-8;
    const auto r = crack(plain, cipher, cfg);
    const bool ok = r.status == CrackStatus::Match &&
                    decrypt(cipher, *r.row_perm, *r.col_perm) == plain &&
                    decode_text(decrypt(cipher, *r.row_perm, *r.col_perm)) == text;
    if (!ok) o.pass = false;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += std::to_string(len) + " symbols" + (ok ? " cracked " : " FAILED ") +
                fmt(seconds_since(t0), 1) + "s";
  }

  int false_matches = 0;
  for (int t = 0; t < 100; ++t) {
    Rng rng(6500 + t);
    const auto text = random_text(256, rng);
    const auto plain = encode_text(text);
    auto cipher = encrypt(plain, random_permutation(16, rng),
                          random_permutation(16, rng));
    auto& cell = cipher.cells[rng.below(16)][rng.below(16)];
    cell = 1 + (cell + 7) % 256;
    if (crack(plain, cipher, EngineConfig{}).status == CrackStatus::Match) {
      ++false_matches;
    }
  }
  if (false_matches != 0) o.pass = false;
  o.detail += ", " + std::to_string(false_matches) + "/100 corrupted matched";
  return o;
}

// Wall-time scaling on the torus family, both schemas.
Outcome criterion_7() {
  const std::vector<int> sides = {8, 12, 16, 20};
  std::vector<double> ns;
  std::vector<double> t_first;
  std::vector<double> t_second;

  for (int side : sides) {
    const auto g = torus_lattice(side, side);
    const auto [h, p] = scramble(g, 700 + side);
    const auto a = build_shifted_unweighted(g);
    const auto b = build_shifted_unweighted(h);
    for (Schema schema : {Schema::First, Schema::Second}) {
      std::vector<double> reps;
      for (int rep = 0; rep < 3; ++rep) {
        EngineConfig cfg;
        cfg.schema = schema;
        const auto r = run_engine(a, b, cfg);
        if (r.verdict != Verdict::Isomorphic) {
          return {false, "side " + std::to_string(side) + " did not verify"};
        }
        reps.push_back(std::max(r.stats.wall_ms, 0.05));
      }
      std::sort(reps.begin(), reps.end());
      (schema == Schema::First ? t_first : t_second).push_back(reps[1]);
    }
    ns.push_back(double(side) * side);
  }

  // least squares slope of log t against log n
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int k = static_cast<int>(ns.size());
  for (int i = 0; i < k; ++i) {
    const double x = std::log(ns[i]);
    const double y = std::log(t_first[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);

  const double s1_400 = t_first.back();
  const double s2_400 = t_second.back();
  // 10 percent plus a small absolute floor of scheduling noise
  const bool second_ok = s2_400 <= 1.10 * s1_400 + 20.0;

  Outcome o;
  o.pass = exponent <= 4.5 && second_ok;
  o.detail = "first schema exponent " + fmt(exponent) + ", n=400 first " +
             fmt(s1_400, 1) + "ms vs second " + fmt(s2_400, 1) + "ms";
  return o;
}

// Relabeling the system relabels the solution: solving against a permuted
// matrix at the permuted index must give the permuted vector.
Outcome criterion_8() {
  int violations = 0;
  double worst = 0.0;

  for (int t = 0; t < 200; ++t) {
    Rng rng(8000 + t);
    const int n = 2 + static_cast<int>(rng.below(49));
    const auto m = random_zero_diag(n, rng);
    const auto p = random_permutation(n, rng);
    const auto a = build_shifted_weighted(m);
    const auto b = build_shifted_weighted(apply_permutation(m, p));
    const auto fa = factor(a);
    const auto fb = factor(b);
    const int j = static_cast<int>(rng.below(n));
    const auto x = fa.solve_basis(j);
    const auto y = fb.solve_basis(p(j));
    double err2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = y[p(i)] - x[i];
      err2 += d * d;
    }
    const double err = std::sqrt(err2);
    worst = std::max(worst, err);
    if (err > 1e-8) ++violations;
  }

  Outcome o;
  o.pass = violations == 0;
  o.detail = "200 relabelings, " + std::to_string(violations) +
             " above 1e-8, worst " + fmt(worst * 1e12, 3) + "e-12";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool stress = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--stress") {
      stress = true;
    } else {
      std::cerr << "usage: acceptance [--stress]\n";
      return 2;
    }
  }

  bool all = true;
  const auto report = [&](int id, Outcome o) {
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL")
              << " (" << o.detail << ")" << std::endl;
  };

  const auto guarded = [](auto&& fn) -> Outcome {
    try {
      return fn();
    } catch (const std::exception& e) {
      return {false, std::string("exception: ") + e.what()};
    }
  };

  report(1, guarded([&] { return criterion_1(); }));
  report(2, guarded([&] { return criterion_2(); }));
  report(3, guarded([&] { return criterion_3(stress); }));
  report(4, guarded([&] { return criterion_4(); }));
  report(5, guarded([&] { return criterion_5(); }));
  report(6, guarded([&] { return criterion_6(stress); }));
  report(7, guarded([&] { return criterion_7(); }));
  report(8, guarded([&] { return criterion_8(); }));
  return all ? 0 : 1;
}
