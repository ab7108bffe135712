#include "specsplit/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace specsplit {

namespace {

double parse_double(const std::string& token, const char* what) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string("bad ") + what + ": '" + token + "'");
  }
  return value;
}

long parse_long(const std::string& token, const char* what) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  long value = 0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string("bad ") + what + ": '" + token + "'");
  }
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty graph file");
  const auto header = split_ws(line);
  if (header.size() != 2) throw ParseError("graph header must be 'n m'");
  const long n = parse_long(header[0], "vertex count");
  const long m = parse_long(header[1], "edge count");
  if (n < 0 || m < 0) throw ParseError("negative counts in graph header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw ParseError("unexpected end of edge list");
    const auto tok = split_ws(line);
    if (tok.size() != 2 && tok.size() != 3) {
      throw ParseError("edge line must be 'u v' or 'u v w': '" + line + "'");
    }
    Edge e;
    e.u = static_cast<int>(parse_long(tok[0], "edge endpoint"));
    e.v = static_cast<int>(parse_long(tok[1], "edge endpoint"));
    e.w = tok.size() == 3 ? parse_double(tok[2], "edge weight") : 1.0;
    edges.push_back(e);
  }
  while (std::getline(in, line)) {
    if (!split_ws(line).empty()) throw ParseError("trailing content after edge list");
  }
  try {
    return Graph::create(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph load_graph(const std::string& path) {
  auto in = open_in(path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  const bool weighted = !g.unweighted();
  out << std::setprecision(17);
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (weighted) out << ' ' << e.w;
    out << '\n';
  }
}

void save_graph(const Graph& g, const std::string& path) {
  auto out = open_out(path);
  write_graph(out, g);
}

DenseMatrix parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() && in.peek() == EOF) break;
    std::vector<double> row;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
      // trim surrounding blanks
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw ParseError("empty CSV cell");
      row.push_back(parse_double(cell.substr(b, e - b + 1), "matrix entry"));
    }
    if (row.empty()) throw ParseError("empty CSV row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix file");
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("matrix must be square");
  }
  return DenseMatrix::from_rows(rows);
}

DenseMatrix load_matrix_csv(const std::string& path) {
  auto in = open_in(path);
  return parse_matrix_csv(in);
}

DenseSymMatrix load_sym_matrix_csv(const std::string& path) {
  try {
    return DenseSymMatrix(load_matrix_csv(path));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in " + path);
  }
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& m) {
  out << std::setprecision(17);
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) out << ',';
      out << m.at(i, j);
    }
    out << '\n';
  }
}

void save_matrix_csv(const DenseMatrix& m, const std::string& path) {
  auto out = open_out(path);
  write_matrix_csv(out, m);
}

Permutation load_permutation(const std::string& path) {
  auto in = open_in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad permutation JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("permutation JSON must be an array");
  std::vector<int> map;
  map.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("permutation entries must be integers");
    map.push_back(v.get<int>());
  }
  try {
    return Permutation::from_map(std::move(map));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void save_permutation(const Permutation& p, const std::string& path) {
  auto out = open_out(path);
  out << nlohmann::json(p.map()).dump() << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace specsplit
