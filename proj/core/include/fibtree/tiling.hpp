#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fibtree/integer.hpp"
#include "fibtree/report.hpp"
#include "fibtree/tree.hpp"

namespace fibtree {

// Combinatorial tile addressing for two tilings of the hyperbolic plane:
// a central tile surrounded by 5 (pentagrid) or 7 (heptagrid) sectors, each
// sector spanned by one copy of the white tree.
enum class GridKind : std::uint8_t { pentagrid, heptagrid };

const char* to_string(GridKind kind) noexcept;
std::uint32_t sector_count(GridKind kind) noexcept;

// Address of a tile: the central tile (sector 0, node 0) or a sector number
// in 1..sector_count plus a node of that sector's tree.
struct TileAddress {
    GridKind grid = GridKind::pentagrid;
    std::uint32_t sector = 0; // 0 = central tile
    Integer node = 0;         // 0 = central tile, else >= 1

    bool central() const noexcept { return sector == 0; }

    friend bool operator==(const TileAddress&, const TileAddress&) = default;
};

// Global id <-> address bijection: 0 is the central tile; id g >= 1 lives in
// sector ((g-1) mod sectors) + 1 as node ((g-1) div sectors) + 1, so
// consecutive ids cycle round the sectors.
TileAddress tile_address(GridKind grid, const Integer& global_id);
Integer tile_global_id(const TileAddress& address);

// "g0" for the central tile, else "s<sector>:n<node>".
std::string to_string(const TileAddress& address);
TileAddress parse_tile_address(GridKind grid, std::string_view text);

// Node ids along a sector tree's rightmost branch: level k ends at
// fib(2k+2) - 1 (1, 4, 12, 33, ...).
Integer rightmost_branch(std::uint32_t level);

// Strips: the sector tree splits into horizontal bands, band n owning the
// descendants of rightmost_branch(n) that are not descendants of
// rightmost_branch(n+1).  Every band is spanned by one copy of the tree
// pattern; `index_in_strip` is the breadth-first rank within the band.
struct StripAssignment {
    std::uint32_t strip = 0;          // band number n >= 0
    Integer index_in_strip = 0;       // 1-based breadth-first rank
    std::uint32_t level_in_strip = 0; // level relative to the band root
};

// Assignment of a sector-tree node to its band, computed from ancestor
// walks against the rightmost branch.  The table form requires a
// white-rooted table containing the node; the id-only form builds (and
// caches) the table it needs, subject to the depth cap.
StripAssignment strip_index(const TreeTable& white_table, const Integer& node);
StripAssignment strip_index(const Integer& node, const BuildLimits& limits = {});

// Builds the white tree and checks: the address bijection for both grids,
// round trips of the serialisation, the band partition (every node in
// exactly one band), band sizes level by level, and the status isomorphism
// between a band and the tree pattern (band roots are compared by branching
// degree, interior nodes by status).  The published leading-tile convention
// for bands surfaces as a warning.
Report verify_strip_partition(std::uint32_t depth, const BuildLimits& limits = {});

} // namespace fibtree
