#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "specsplit/graph.hpp"
#include "specsplit/matrix.hpp"

namespace specsplit {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph text format:
//   n m
//   u v [w]        (m lines, 0-based endpoints, optional weight)
// The parser applies the same validation as Graph::create, so duplicate
// edges in either orientation, self loops and bad indices are rejected.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void save_graph(const Graph& g, const std::string& path);

// CSV matrices: n lines of n comma-separated reals.
DenseMatrix parse_matrix_csv(std::istream& in);
DenseMatrix load_matrix_csv(const std::string& path);
// Same format, but rejects asymmetric content.
DenseSymMatrix load_sym_matrix_csv(const std::string& path);
void write_matrix_csv(std::ostream& out, const DenseMatrix& m);
void save_matrix_csv(const DenseMatrix& m, const std::string& path);

// Permutations as JSON arrays, e.g. [2, 0, 1].
Permutation load_permutation(const std::string& path);
void save_permutation(const Permutation& p, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace specsplit
