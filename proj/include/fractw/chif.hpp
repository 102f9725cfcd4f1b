#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fractw/rational.hpp"
#include "fractw/rbgraph.hpp"

namespace fractw {

// Vertex-count guard for independent-set enumeration; FRACTW_GUARD_N
// overrides the default of 30.
int mis_guard();

// All maximal independent sets of the underlying graph (edge colours are
// irrelevant here), as bitmasks, in increasing mask order. Fails with
// SizeGuard above mis_guard() vertices.
std::vector<std::uint64_t> enumerate_mis(const RBGraph& g);

// A self-contained optimality proof for the fractional chromatic number:
// cover_weights are a fractional colouring of total weight `value` over
// `sets`; vertex_weights are a fractional clique of the same total weight.
struct ChifCertificate {
  int n = 0;
  Rational value;
  std::vector<std::uint64_t> sets;
  std::vector<Rational> cover_weights;
  std::vector<Rational> vertex_weights;
};

// Exact fractional chromatic number with certificate, via rational simplex
// on the independent-set LP. The certificate is re-verified before return.
ChifCertificate chif_exact(const RBGraph& g);

// Checks the certificate against the graph from scratch: the sets are
// independent, the cover weights dominate every vertex, the vertex weights
// fit in every maximal independent set, and the two totals are equal.
// Returns a description of the first violation, or nothing when valid.
std::optional<std::string> verify_chif_certificate(const RBGraph& g, const ChifCertificate& cert);

// Is there an a:b colouring (b colours per vertex out of a, adjacent vertices
// disjoint)? Exact backtracking; rejects instances with more than 10^5
// candidate colour sets.
bool bfold_colorable(const RBGraph& g, int a, int b);

std::string certificate_to_json(const ChifCertificate& cert);
ChifCertificate certificate_from_json(const std::string& text);

}  // namespace fractw
