#pragma once

#include <iosfwd>
#include <string>

#include "fractw/rbgraph.hpp"

namespace fractw {

// DIMACS-style red/blue graph format. 1-indexed vertices in files.
//   c <comment>
//   p edge <n> <m>
//   e <u> <v> [r|b]     colour defaults to b when omitted
RBGraph read_dimacs_rb(std::istream& in);
RBGraph read_dimacs_rb_file(const std::string& path);
void write_dimacs_rb(std::ostream& out, const RBGraph& g);
void write_dimacs_rb_file(const RBGraph& g, const std::string& path);

}  // namespace fractw
