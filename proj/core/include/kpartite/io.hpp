#pragma once

#include <iosfwd>
#include <string>

#include "kpartite/finder.hpp"
#include "kpartite/hypergraph.hpp"

namespace kpartite {

// Hypergraph text format ("kuh 1"):
//   kuh 1
//   <uniformity> <vertex_count> <edge_count>
//   <edge line> x edge_count
// Each edge line holds uniformity strictly increasing vertex ids, single
// spaces, canonical decimals, and lines appear in ascending colex-rank
// order. Every line ends in \n; no other whitespace. The parser rejects
// any deviation, so parse(render(x)) round-trips bit-exactly.
Hypergraph parse_hypergraph(std::istream& input,
                            EdgeStoreKind kind = EdgeStoreKind::kAuto);
void render_hypergraph(const Hypergraph& graph, std::ostream& output);
std::string render_hypergraph(const Hypergraph& graph);

// Witness text format ("kuw 1"):
//   kuw 1
//   <part count>
//   <part size> <sorted ids...> x part count
// Parts must each be strictly increasing; cross-part overlap is left to
// verification, not parsing.
PartiteWitness parse_witness(std::istream& input);
void render_witness(const PartiteWitness& witness, std::ostream& output);
std::string render_witness(const PartiteWitness& witness);

}  // namespace kpartite
