#pragma once

#include <cstdint>
#include <iosfwd>

#include "fibtree/tree.hpp"

namespace fibtree {

enum class DumpFormat : std::uint8_t { text, csv, dot, record_stream };

const char* to_string(DumpFormat format) noexcept;

// Writes a fully annotated dump of the tree: per node its status, level,
// father, both spellings, and both node classes.
//   text          indented outline, one node per line
//   csv           header + one row per node
//   dot           Graphviz digraph; black nodes filled, white nodes outlined
//   record_stream one JSON object per node, streamable
void dump_tree(std::ostream& out, const TreeTable& tree, DumpFormat format);

} // namespace fibtree
