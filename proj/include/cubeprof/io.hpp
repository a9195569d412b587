#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubeprof/hypercube.hpp"

namespace cubeprof {

// Vertex as an n-character bitstring, coordinate n leftmost, coordinate 1 rightmost.
std::string bitstring(Vertex v, int n);

// {"n":N,"edges":[[u,v],...]} with u < v, pairs ascending. Compact, no newline.
std::string to_json(const Matching& m);

// One "u v" line per edge in bitstring form, same order as to_json.
std::string to_edge_list(const Matching& m);

// Graphviz rendering for inspection; edges coloured by direction.
std::string to_dot(const Matching& m);

// Accepts either the JSON or the edge-list format. The edge-list format
// carries no dimension, so it is taken from the bitstring width.
// Throws Errc::validation on malformed text.
CandidateMatching parse_matching(std::string_view text);

// "c1,c2,...,cn" -> Profile. Throws Errc::validation.
Profile parse_profile(std::string_view text);

}  // namespace cubeprof
