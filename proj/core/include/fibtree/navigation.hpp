#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "fibtree/numeration.hpp"
#include "fibtree/report.hpp"
#include "fibtree/tree.hpp"

namespace fibtree {

// Closed-form status of a node in either tree, no tree build required.
// White tree: a node is black iff its Zeckendorf spelling has an odd number
// of trailing zeros.  Black tree: node nu at level k, rank m maps to white
// node fib(2k+2) + m - 1 (the black tree is the white tree's subtree under
// the root's black son, relabelled breadth-first), and the parity rule is
// applied there.  Both rules are swept against built tables by
// verify_theorems.
Status node_status(TreeKind kind, const Integer& node);

// Node classes of the black tree under Zeckendorf spellings: the node's
// status there plus the last two digits of its spelling.  Spellings
// 1 0^2k (k >= 1) — the rightmost node of each level — branch differently
// from other ...00 white nodes and get the separate class w00star.  Nodes 1
// and 2 predate the rules and are `exceptional`; a black node whose
// spelling ends "10" fits no class (the spelling "?110" would need the
// forbidden factor 11), so beyond node 2 that combination cannot occur and
// would also map to `exceptional`.
enum class FibNodeType : std::uint8_t {
    b00, b01, w00, w00star, w01, w10, exceptional
};

// Node classes of the black tree under golden spellings: status plus last
// digit.  Nodes 1 and 2 (spellings "1" and "2") are `exceptional`; the
// combination black + final 2 never occurs elsewhere and maps to
// `exceptional` as well.
enum class GoldenNodeType : std::uint8_t {
    b0, b1, w0, w1, w2, exceptional
};

const char* to_string(FibNodeType type) noexcept;
const char* to_string(GoldenNodeType type) noexcept;

enum class Numeration : std::uint8_t { fibonacci, golden };

const char* to_string(Numeration numeration) noexcept;

// How the code-shift successor of a black-tree node sits among its sons.
enum class SuccessorRelation : std::uint8_t {
    rightmost_son,          // successor = rightmost son
    rightmost_son_plus_one, // successor = rightmost son + 1
    base_case               // nodes 1 and 2: fixed by inspection
};

const char* to_string(SuccessorRelation relation) noexcept;

struct SuccessorResult {
    Integer node;               // value of the shifted spelling
    SuccessorRelation relation; // its place among the source's sons
    std::string code;           // the shifted spelling itself
};

// --- Classification --------------------------------------------------------

// Class of a black-tree node.  The table form reads the status from the
// table (which must be black-rooted; the node must be in range); the
// id-only form uses the closed-form status.
FibNodeType fib_type(const TreeTable& black_table, const Integer& node);
FibNodeType fib_type(const Integer& node);
GoldenNodeType golden_type(const TreeTable& black_table, const Integer& node);
GoldenNodeType golden_type(const Integer& node);

// Son classes, left to right, prescribed by a node's own class (black
// classes list 2, white classes 3).  `exceptional` yields an empty span —
// base-case sons come from a table, not from rules.
std::span<const FibNodeType> fib_son_types(FibNodeType type) noexcept;
std::span<const GoldenNodeType> golden_son_types(GoldenNodeType type) noexcept;

// Whether an adjacent pair of classes (node, node + 1) inside one level of
// the black tree is among the pairs the son rules can produce.  Pairs
// involving the exceptional base cases fall outside the rule system.
bool fib_pair_allowed(FibNodeType left, FibNodeType right) noexcept;
bool golden_pair_allowed(GoldenNodeType left, GoldenNodeType right) noexcept;

// --- Code-shift navigation -------------------------------------------------

// Successor maps of the black tree, defined for every node: appending "00"
// to the Zeckendorf spelling (or "0" to the golden spelling) lands on the
// node's rightmost son or the node after it, decided solely by the node's
// class: w00, w00star, w10 and w0 give the rightmost son; b00, b01, w01 and
// b0, b1, w1, w2 give rightmost son + 1.  The table forms additionally
// demand that the successor lie inside the table and throw a depth_error
// naming the required depth otherwise.
SuccessorResult successor_black_fib(const TreeTable& black_table, const Integer& node);
SuccessorResult successor_black_fib(const Integer& node);
SuccessorResult successor_black_golden(const TreeTable& black_table, const Integer& node);
SuccessorResult successor_black_golden(const Integer& node);

// Preferred-son maps of the white tree.  Appending "00" to a node's
// Zeckendorf spelling lands on its black (leftmost) son when the node is
// black and on its middle son when white; appending "0" to the golden
// spelling lands in both cases on the leftmost white son — the unique son
// whose golden spelling ends in 0.  Both hold for every node including the
// root.  Table forms require the node's sons to be generated.
Integer preferred_son_white(const TreeTable& white_table, const Integer& node);
Integer preferred_son_white(const Integer& node);
Integer preferred_son_golden(const TreeTable& white_table, const Integer& node);
Integer preferred_son_golden(const Integer& node);

// --- Bulk verification -----------------------------------------------------

// Builds the named tree to `depth` and sweeps every claim the class system
// makes for that tree and numeration:
//   black + fibonacci: son-class tables, adjacent-pair membership, the
//     successor relation for every node with sons (base cases excluded,
//     not failed), closed-form statuses, and the class census including
//     the emptiness of black-with-final-"10" beyond node 2.
//   black + golden: the same under golden spellings, plus the weight-family
//     discrepancy note.
//   white + fibonacci: the preferred-son equation and position for every
//     node with sons, and the trailing-zero status parity.
//   white + golden: the unique final-0 son, its equation and position.
// Known defects in published closed forms surface as warnings, never as
// violations.
Report verify_theorems(TreeKind kind, Numeration numeration,
                       std::uint32_t depth, const BuildLimits& limits = {});

// All four sweeps above at once.
Report verify_theorems(std::uint32_t depth, const BuildLimits& limits = {});

} // namespace fibtree
