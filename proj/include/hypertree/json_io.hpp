#pragma once

#include <string>
#include <vector>

#include "hypertree/hypergraph.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/structure.hpp"

namespace hypertree {

// Floats are emitted with 15 significant digits so identical runs produce
// byte-identical files.
std::string fmt_double(double x);

// Canonical on-disk form: {"n":<int>,"edges":[[...],...]} with sorted
// vertex lists and edges sorted lexicographically.
std::string to_json(const Hypergraph& g);

// Accepts the canonical form (extra whitespace allowed). Throws
// std::invalid_argument on malformed input.
Hypergraph hypergraph_from_json(const std::string& text);
Hypergraph hypergraph_from_file(const std::string& path);

std::string to_json(const SpectralResult& r);
std::string to_json(const PendantPathReport& r);

void write_file(const std::string& path, const std::string& content);

}  // namespace hypertree
