#pragma once

#include <string>

#include "twofold/graph.hpp"

namespace twofold {

// Standard graph6 text form of a simple graph. Sizes up to 258047 are
// supported (single-byte and 3-byte headers). Graphs with loops are rejected.
std::string graph6_encode(const Graph& g);

// Parse errors carry the offending byte offset in the message. A leading
// ">>graph6<<" marker is accepted and skipped.
Graph graph6_decode(const std::string& text);

std::string dot_export(const Graph& g);

// Debug format: first line n, then one "u v" pair per edge.
std::string adjacency_text_encode(const Graph& g);
Graph adjacency_text_decode(const std::string& text);

}  // namespace twofold
