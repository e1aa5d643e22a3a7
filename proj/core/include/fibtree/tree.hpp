#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibtree/errors.hpp"
#include "fibtree/integer.hpp"
#include "fibtree/report.hpp"

namespace fibtree {

// Two rooted trees over the positive integers, generated level by level from
// the branching rules
//     black node  ->  black son, white son
//     white node  ->  black son, white son, white son
// with sons numbered left to right in breadth-first order.  The kind names
// the root's colour.
enum class TreeKind : std::uint8_t { white, black };

enum class Status : std::uint8_t { black, white };

const char* to_string(TreeKind kind) noexcept;
const char* to_string(Status status) noexcept;

using NodeId = std::uint64_t;

struct BuildLimits {
    // Levels 0..max_depth are generated.  Depth 14 keeps the white tree
    // around 1.6M nodes; raise explicitly (or via FIBTREE_MAX_DEPTH) for more.
    std::uint32_t max_depth = 14;
};

struct NodeRecord {
    NodeId node = 0;
    Status status = Status::black;
    std::uint32_t level = 0;
    NodeId father = 0;    // 0 for the root
    NodeId first_son = 0; // 0 while sons are not generated
    std::uint8_t son_count = 0;
};

// A fully materialised tree truncated at a fixed depth.  Nodes are stored in
// breadth-first (= numeric) order, so lookups are direct indexing.
class TreeTable {
public:
    // Builds levels 0..depth; throws depth_error if depth > limits.max_depth.
    static TreeTable build(TreeKind kind, std::uint32_t depth,
                           const BuildLimits& limits = {});

    TreeKind kind() const noexcept { return kind_; }
    std::uint32_t depth() const noexcept { return depth_; }

    // Total number of nodes (= id of the last node).
    NodeId node_count() const noexcept { return NodeId(records_.size()); }
    bool contains(NodeId node) const noexcept {
        return node >= 1 && node <= node_count();
    }

    Status status(NodeId node) const;
    std::uint32_t level(NodeId node) const;
    NodeId father(NodeId node) const; // 0 for the root

    // Sons exist only for nodes on levels 0..depth-1.
    bool sons_generated(NodeId node) const;
    NodeId first_son(NodeId node) const;  // throws if not generated
    std::uint8_t son_count(NodeId node) const;
    NodeId last_son(NodeId node) const;
    std::vector<NodeId> sons(NodeId node) const;

    const NodeRecord& node_info(NodeId node) const;

    // Inclusive id range of one level.
    NodeId level_begin(std::uint32_t level) const;
    NodeId level_end(std::uint32_t level) const;
    std::uint64_t level_size(std::uint32_t level) const;

    std::uint32_t level_of(NodeId node) const { return level(node); }

private:
    TreeKind kind_ = TreeKind::white;
    std::uint32_t depth_ = 0;
    std::vector<NodeRecord> records_;     // records_[i] is node i+1
    std::vector<NodeId> level_offsets_;   // level_offsets_[l] = first id of level l
};

// Convenience wrapper mirroring the table's named constructor.
inline TreeTable build_tree(TreeKind kind, std::uint32_t depth,
                            const BuildLimits& limits = {}) {
    return TreeTable::build(kind, depth, limits);
}

// --- Closed forms, independent of any TreeTable ----------------------------

// Number of nodes on one level: fib(2k+1) for the white tree, fib(2k) for
// the black tree.  Every built table must reproduce these counts exactly.
Integer level_count(TreeKind kind, std::uint32_t level);

// Number of levels needed to contain the given node (root = level 0):
// computed from the cumulative level sizes, without building a tree.
std::uint32_t level_of_number(TreeKind kind, const Integer& node);

// First and last node id of a level, from the cumulative closed forms
// (white: level k ends at fib(2k+2) - 1; black: level k ends at fib(2k+1)).
Integer level_first(TreeKind kind, std::uint32_t level);
Integer level_last(TreeKind kind, std::uint32_t level);

enum class Side : std::uint8_t { leftmost, rightmost };

struct ExtremalNode {
    Integer node;
    std::string fib_code; // Zeckendorf spelling of the node id
};

// The leftmost or rightmost node of a level, with its Zeckendorf spelling:
//   white leftmost  k>=1 : fib(2k)      = 1 0^(2k-1)
//   white rightmost k>=0 : fib(2k+2)-1  = 1 (01)^k
//   black leftmost  k>=1 : fib(2k-1)+1  = 1 0^(2k-3) 1   (k>=2); 2 -> "10"
//   black rightmost k>=0 : fib(2k+1)    = 1 0^2k
ExtremalNode extremal_node(TreeKind kind, std::uint32_t level, Side side);

struct LevelStats {
    std::uint32_t level = 0;
    Integer black;  // black nodes on the level
    Integer white;  // white nodes on the level
    Integer total;  // black + white
};

// Per-level status counts, counted from the built table.  They satisfy the
// coupled recurrences
//   white(n+1) = 2 white(n) + black(n),   black(n+1) = total(n),
// so the totals obey total(n+2) = 3 total(n+1) - total(n); verify_tree_shape
// asserts both against every level.
std::vector<LevelStats> level_stats(const TreeTable& table);

// --- Structural verification ----------------------------------------------

// Builds both trees to the given depth and checks, per level: son counts by
// status, breadth-first contiguity of son blocks, level sizes against the
// closed forms, extremal nodes against their spellings, and the status
// recurrences.  Known index discrepancies in published closed forms surface
// as warnings, never as violations.
Report verify_tree_shape(std::uint32_t depth, const BuildLimits& limits = {});

} // namespace fibtree
