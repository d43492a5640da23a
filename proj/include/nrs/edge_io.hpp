#pragma once

#include <iosfwd>
#include <string>

#include "nrs/hypergraph.hpp"

namespace nrs {

// Plain-text edge list. The header line is "p hyp <n> <r> <m>", followed by
// m lines of r vertex ids each. write_edge_list always emits the canonical
// form: ids ascending within a line, lines in lexicographic order. The
// reader accepts any vertex order and re-canonicalizes, but rejects
// malformed input (bad header, wrong counts, ids out of range, repeats
// within an edge).
Hypergraph read_edge_list(std::istream& in);
Hypergraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Hypergraph& h);
void write_edge_list_file(const std::string& path, const Hypergraph& h);

std::string to_edge_list_string(const Hypergraph& h);

}  // namespace nrs
