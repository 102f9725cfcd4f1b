#pragma once

#include <string>
#include <vector>

#include "fractw/chif.hpp"
#include "fractw/rbgraph.hpp"
#include "fractw/witness.hpp"

namespace fractw {

RBGraph gen_clique(int m, EdgeColor c = EdgeColor::Blue);
RBGraph gen_cycle(int n, EdgeColor c = EdgeColor::Blue);
// Kneser graph: vertices are the k-subsets of an n-set, edges join disjoint
// subsets (blue).
RBGraph gen_kneser(int n, int k);
// Mycielski construction over the blue edges of g; result is all blue.
RBGraph gen_mycielski(const RBGraph& g);

// A graph packaged for use as an adversary gadget: all edges blue, an
// elimination witness bounding its width, its clique number, and a verified
// optimality certificate for its fractional chromatic number.
struct Gadget {
  std::string name;
  RBGraph graph;
  EliminationWitness witness;
  int clique_no = 0;
  ChifCertificate cert;

  const Rational& q() const { return cert.value; }
  int width() const { return witness.width; }
};

Gadget gadget_clique(int m);
Gadget gadget_cycle(int n);        // odd n >= 3
Gadget gadget_kneser(int n, int k);
Gadget gadget_mycielski(const Gadget& base);

// The built-in non-clique gadgets (odd cycles and the Mycielski of the
// five-cycle), certified once and cached.
const std::vector<Gadget>& gadget_registry();

// Parse "clique:4", "cycle:7", "kneser:5,2", "mycielski:cycle:5".
Gadget gadget_by_name(const std::string& spec);

}  // namespace fractw
