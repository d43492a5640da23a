#include "nrs/edge_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nrs {

namespace {

[[noreturn]] void fail(std::int64_t line, const std::string& what) {
  throw std::runtime_error("edge list, line " + std::to_string(line) + ": " + what);
}

}  // namespace

Hypergraph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(1, "missing header");
  std::istringstream hdr(line);
  std::string p, hyp;
  long long n = -1, r = -1, m = -1;
  if (!(hdr >> p >> hyp >> n >> r >> m) || p != "p" || hyp != "hyp")
    fail(1, "expected 'p hyp <n> <r> <m>'");
  std::string extra;
  if (hdr >> extra) fail(1, "trailing tokens in header");
  if (n < 0 || r < 1 || m < 0) fail(1, "header values out of range");

  std::vector<int> flat;
  flat.reserve((std::size_t)(m * r));
  std::int64_t lineno = 1;
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) fail(lineno + 1, "fewer edges than header declares");
    ++lineno;
    std::istringstream es(line);
    for (long long j = 0; j < r; ++j) {
      long long v;
      if (!(es >> v)) fail(lineno, "expected " + std::to_string(r) + " vertex ids");
      if (v < 0 || v >= n) fail(lineno, "vertex id out of range");
      flat.push_back((int)v);
    }
    if (es >> extra) fail(lineno, "trailing tokens after edge");
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
      fail(lineno, "more edges than header declares");
  }
  try {
    Hypergraph h((int)n, (int)r, std::move(flat));
    if (h.edge_count() != m) fail(lineno, "duplicate edges in input");
    return h;
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

Hypergraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
  out << "p hyp " << h.vertex_count() << ' ' << h.arity() << ' '
      << h.edge_count() << '\n';
  const std::int64_t m = h.edge_count();
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out << ' ';
      out << e[j];
    }
    out << '\n';
  }
}

void write_edge_list_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, h);
}

std::string to_edge_list_string(const Hypergraph& h) {
  std::ostringstream ss;
  write_edge_list(ss, h);
  return ss.str();
}

}  // namespace nrs
