#include "fractw/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fractw/error.hpp"

namespace fractw {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

RBGraph read_dimacs_rb(std::istream& in) {
  RBGraph g;
  bool have_problem = false;
  int declared_edges = 0, seen_edges = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;  // blank
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_problem) parse_fail(lineno, "duplicate problem line");
      std::string fmt;
      int n = 0, m = 0;
      if (!(ss >> fmt >> n >> m) || fmt != "edge")
        parse_fail(lineno, "expected 'p edge <n> <m>'");
      if (n < 0 || m < 0) parse_fail(lineno, "negative size in problem line");
      for (int i = 0; i < n; ++i) g.add_vertex();
      declared_edges = m;
      have_problem = true;
      continue;
    }
    if (tag == "e") {
      if (!have_problem) parse_fail(lineno, "edge before problem line");
      int u = 0, v = 0;
      if (!(ss >> u >> v)) parse_fail(lineno, "expected 'e <u> <v> [r|b]'");
      std::string col;
      EdgeColor color = EdgeColor::Blue;
      if (ss >> col) {
        if (col == "r")
          color = EdgeColor::Red;
        else if (col == "b")
          color = EdgeColor::Blue;
        else
          parse_fail(lineno, "unknown edge colour '" + col + "'");
      }
      if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
        parse_fail(lineno, "vertex out of range");
      if (u == v) parse_fail(lineno, "self-loop");
      try {
        g.add_edge(u - 1, v - 1, color);
      } catch (const Error&) {
        parse_fail(lineno, "duplicate edge");
      }
      ++seen_edges;
      continue;
    }
    parse_fail(lineno, "unknown line tag '" + tag + "'");
  }
  if (!have_problem) fail(Errc::parse_error, "missing problem line");
  if (seen_edges != declared_edges)
    fail(Errc::parse_error, "problem line declares " + std::to_string(declared_edges) +
                                " edges, file has " + std::to_string(seen_edges));
  return g;
}

RBGraph read_dimacs_rb_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot read " + path);
  return read_dimacs_rb(in);
}

void write_dimacs_rb(std::ostream& out, const RBGraph& g) {
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  g.for_each_edge([&](int u, int v, EdgeColor c) {
    out << "e " << u + 1 << " " << v + 1 << " " << edge_color_char(c) << "\n";
  });
}

void write_dimacs_rb_file(const RBGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  write_dimacs_rb(out, g);
}

}  // namespace fractw
