#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "specsplit/cipher.hpp"
#include "specsplit/engine.hpp"
#include "specsplit/frobenius.hpp"
#include "specsplit/generators.hpp"
#include "specsplit/io.hpp"

namespace {

using namespace specsplit;

// Exit codes: 0 positive verdict, 1 heuristic negative, 2 undetermined,
// 3 usage or input problems, 4 anything unexpected.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

struct EngineFlags {
  double epsilon = 1.0;
  double tau = 1e-6;
  std::string schema = "second";
  bool uniform_eps = false;
  bool baseline_solver = false;
  int threads = 0;
  std::string report_path;
};

void add_engine_flags(CLI::App* cmd, EngineFlags& f) {
  cmd->add_option("--epsilon", f.epsilon, "perturbation magnitude")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tau", f.tau, "matching tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--schema", f.schema, "first|second")
      ->check(CLI::IsMember({"first", "second"}));
  cmd->add_flag("--uniform-eps", f.uniform_eps,
                "same magnitude at every iteration");
  cmd->add_flag("--baseline-solver", f.baseline_solver,
                "refactor after every perturbation");
  cmd->add_option("--threads", f.threads, "0 = all cores")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--report", f.report_path, "also write the JSON report here");
}

EngineConfig to_config(const EngineFlags& f) {
  EngineConfig cfg;
  cfg.epsilon = f.epsilon;
  cfg.tau_match = f.tau;
  cfg.schema = f.schema == "first" ? Schema::First : Schema::Second;
  cfg.stamped_perturbations = !f.uniform_eps;
  cfg.baseline_solver = f.baseline_solver;
  cfg.threads = f.threads;
  return cfg;
}

void emit(const std::string& json, const std::string& report_path) {
  std::cout << json << '\n';
  if (!report_path.empty()) write_file(report_path, json + "\n");
}

int cmd_iso(const std::string& path_a, const std::string& path_b,
            const EngineFlags& flags) {
  const Graph ga = load_graph(path_a);
  const Graph gb = load_graph(path_b);
  if (ga.n() != gb.n()) {
    IsoResult res;
    res.verdict = Verdict::NotIsomorphicHeuristic;
    res.witness_iteration = 0;
    res.reason = "vertex counts differ";
    emit(report_json(res), flags.report_path);
    return kExitNo;
  }
  const ShiftedMatrix sa = ga.unweighted()
                               ? build_shifted_unweighted(ga)
                               : build_shifted_weighted(adjacency_matrix(ga));
  const ShiftedMatrix sb = gb.unweighted()
                               ? build_shifted_unweighted(gb)
                               : build_shifted_weighted(adjacency_matrix(gb));
  const IsoResult res = run_engine(sa, sb, to_config(flags));
  emit(report_json(res), flags.report_path);
  switch (res.verdict) {
    case Verdict::Isomorphic:
      return kExitYes;
    case Verdict::NotIsomorphicHeuristic:
      return kExitNo;
    case Verdict::Undetermined:
      return kExitUndetermined;
  }
  return kExitInternal;
}

int cmd_frobenius(const std::string& path_a, const std::string& path_b,
                  const EngineFlags& flags) {
  const DenseMatrix fa = load_matrix_csv(path_a);
  const DenseMatrix fb = load_matrix_csv(path_b);
  if (fa.n() != fb.n()) throw ParseError("matrices must have equal size");
  const FrobeniusResult res = solve_frobenius(fa, fb, to_config(flags));
  emit(report_json(res), flags.report_path);
  switch (res.status) {
    case FrobeniusStatus::Solution:
      return kExitYes;
    case FrobeniusStatus::NotEquivalentHeuristic:
      return kExitNo;
    case FrobeniusStatus::Undetermined:
      return kExitUndetermined;
  }
  return kExitInternal;
}

int cmd_cipher_encrypt(const std::string& text_path, const std::string& out_path,
                       std::uint64_t seed, const std::string& row_perm_path,
                       const std::string& col_perm_path) {
  const TextGrid plain = encode_text(read_file(text_path));
  Permutation row_p = Permutation::identity(plain.side);
  Permutation col_p = Permutation::identity(plain.side);
  if (!row_perm_path.empty() || !col_perm_path.empty()) {
    if (row_perm_path.empty() || col_perm_path.empty()) {
      throw ParseError("--row-perm and --col-perm must be given together");
    }
    row_p = load_permutation(row_perm_path);
    col_p = load_permutation(col_perm_path);
    if (row_p.size() != plain.side || col_p.size() != plain.side) {
      throw ParseError("permutation size does not match grid side " +
                       std::to_string(plain.side));
    }
  } else {
    Rng rng(seed);
    row_p = random_permutation(plain.side, rng);
    col_p = random_permutation(plain.side, rng);
  }
  write_file(out_path, grid_json(encrypt(plain, row_p, col_p)) + "\n");
  nlohmann::json j;
  j["side"] = plain.side;
  j["row_perm"] = row_p.map();
  j["col_perm"] = col_p.map();
  j["out"] = out_path;
  std::cout << j.dump(2) << '\n';
  return kExitYes;
}

int cmd_cipher_crack(const std::string& plain_path, const std::string& cipher_path,
                     const std::string& recovered_path, const EngineFlags& flags) {
  const TextGrid plain = encode_text(read_file(plain_path));
  const TextGrid cipher = parse_grid_json(read_file(cipher_path));
  if (plain.side != cipher.side) throw ParseError("grid sides differ");
  const CrackResult res = crack(plain, cipher, to_config(flags));
  emit(report_json(res), flags.report_path);
  if (res.status == CrackStatus::Match && !recovered_path.empty()) {
    write_file(recovered_path,
               decode_text(decrypt(cipher, *res.row_perm, *res.col_perm)));
  }
  switch (res.status) {
    case CrackStatus::Match:
      return kExitYes;
    case CrackStatus::NoMatchHeuristic:
      return kExitNo;
    case CrackStatus::Undetermined:
      return kExitUndetermined;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral splitting toolkit: graph isomorphism, matrix "
               "row/column equivalence, double permutation ciphers"};
  app.require_subcommand(1);

  EngineFlags flags;

  std::string iso_a;
  std::string iso_b;
  CLI::App* iso = app.add_subcommand("iso", "test two graph files for isomorphism");
  iso->add_option("graph_a", iso_a, "graph file")->required();
  iso->add_option("graph_b", iso_b, "graph file")->required();
  add_engine_flags(iso, flags);

  std::string frob_a;
  std::string frob_b;
  CLI::App* frob = app.add_subcommand(
      "frobenius", "can CSV matrix B be reached from A by row/column shuffles");
  frob->add_option("matrix_a", frob_a, "CSV matrix")->required();
  frob->add_option("matrix_b", frob_b, "CSV matrix")->required();
  add_engine_flags(frob, flags);

  CLI::App* cipher = app.add_subcommand("cipher", "double permutation ciphers");
  cipher->require_subcommand(1);

  std::string enc_text;
  std::string enc_out;
  std::uint64_t enc_seed = 1;
  std::string enc_row_perm;
  std::string enc_col_perm;
  CLI::App* enc = cipher->add_subcommand("encrypt", "grid-encode and shuffle a text");
  enc->add_option("text", enc_text, "input text file")->required();
  enc->add_option("--out", enc_out, "output grid JSON")->required();
  enc->add_option("--seed", enc_seed, "seed for generated permutations");
  enc->add_option("--row-perm", enc_row_perm, "row permutation JSON file");
  enc->add_option("--col-perm", enc_col_perm, "column permutation JSON file");

  std::string crack_plain;
  std::string crack_cipher;
  std::string crack_out;
  CLI::App* crk = cipher->add_subcommand("crack", "recover the permutations");
  crk->add_option("plain", crack_plain, "known plaintext file")->required();
  crk->add_option("cipher", crack_cipher, "ciphertext grid JSON")->required();
  crk->add_option("--out", crack_out, "write the recovered text here");
  add_engine_flags(crk, flags);

  CLI::App* gen = app.add_subcommand("gen", "write benchmark instances");
  gen->require_subcommand(1);

  int torus_rows = 3;
  int torus_cols = 3;
  std::string gen_out;
  CLI::App* gtorus = gen->add_subcommand("torus", "wraparound grid lattice");
  gtorus->add_option("rows", torus_rows, "row count")->required();
  gtorus->add_option("cols", torus_cols, "column count")->required();
  gtorus->add_option("--out", gen_out, "output graph file")->required();

  int reg_n = 0;
  int reg_k = 0;
  std::uint64_t gen_seed = 1;
  CLI::App* greg = gen->add_subcommand("regular", "random k-regular graph");
  greg->add_option("n", reg_n, "vertex count")->required();
  greg->add_option("k", reg_k, "degree")->required();
  greg->add_option("--seed", gen_seed, "generator seed");
  greg->add_option("--out", gen_out, "output graph file")->required();

  std::string scr_in;
  std::string scr_perm_out;
  CLI::App* gscr = gen->add_subcommand("scramble", "relabel a graph randomly");
  gscr->add_option("input", scr_in, "input graph file")->required();
  gscr->add_option("--seed", gen_seed, "generator seed");
  gscr->add_option("--out", gen_out, "output graph file")->required();
  gscr->add_option("--perm-out", scr_perm_out, "write the planted permutation here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (iso->parsed()) return cmd_iso(iso_a, iso_b, flags);
    if (frob->parsed()) return cmd_frobenius(frob_a, frob_b, flags);
    if (enc->parsed()) {
      return cmd_cipher_encrypt(enc_text, enc_out, enc_seed, enc_row_perm,
                                enc_col_perm);
    }
    if (crk->parsed()) {
      return cmd_cipher_crack(crack_plain, crack_cipher, crack_out, flags);
    }
    if (gtorus->parsed()) {
      save_graph(torus_lattice(torus_rows, torus_cols), gen_out);
      return kExitYes;
    }
    if (greg->parsed()) {
      save_graph(random_regular(reg_n, reg_k, gen_seed), gen_out);
      return kExitYes;
    }
    if (gscr->parsed()) {
      const auto [g, p] = scramble(load_graph(scr_in), gen_seed);
      save_graph(g, gen_out);
      if (!scr_perm_out.empty()) save_permutation(p, scr_perm_out);
      return kExitYes;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
