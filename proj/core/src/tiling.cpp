#include "fibtree/tiling.hpp"

#include <optional>
#include <vector>

namespace fibtree {

const char* to_string(GridKind kind) noexcept {
    return kind == GridKind::pentagrid ? "pentagrid" : "heptagrid";
}

std::uint32_t sector_count(GridKind kind) noexcept {
    return kind == GridKind::pentagrid ? 5 : 7;
}

// --- Address bijection -------------------------------------------------------

TileAddress tile_address(GridKind grid, const Integer& global_id) {
    if (global_id < 0)
        throw validation_error("tile ids start at 0 (got " + global_id.str() +
                               ")");
    TileAddress address;
    address.grid = grid;
    if (global_id == 0) return address;
    const std::uint32_t sectors = sector_count(grid);
    const Integer based = global_id - 1;
    address.sector = (based % sectors).convert_to<std::uint32_t>() + 1;
    address.node = based / sectors + 1;
    return address;
}

Integer tile_global_id(const TileAddress& address) {
    const std::uint32_t sectors = sector_count(address.grid);
    if (address.central()) {
        if (address.node != 0)
            throw validation_error("the central tile carries node 0, not " +
                                   address.node.str());
        return 0;
    }
    if (address.sector > sectors)
        throw validation_error("sector " + std::to_string(address.sector) +
                               " does not exist in a " +
                               to_string(address.grid) + " (1.." +
                               std::to_string(sectors) + ")");
    if (address.node < 1)
        throw validation_error("sector nodes start at 1 (got " +
                               address.node.str() + ")");
    return (address.node - 1) * sectors + address.sector;
}

std::string to_string(const TileAddress& address) {
    if (address.central()) return "g0";
    return "s" + std::to_string(address.sector) + ":n" + address.node.str();
}

namespace {

[[noreturn]] void bad_address(std::string_view text, const std::string& why) {
    throw validation_error("tile address '" + std::string(text) + "' " + why);
}

Integer parse_digits(std::string_view text, std::string_view digits) {
    if (digits.empty()) bad_address(text, "is missing a number");
    for (char c : digits)
        if (c < '0' || c > '9') bad_address(text, "contains a non-digit");
    return Integer(std::string(digits));
}

} // namespace

TileAddress parse_tile_address(GridKind grid, std::string_view text) {
    if (text == "g0") {
        TileAddress address;
        address.grid = grid;
        return address;
    }
    if (text.empty() || text.front() != 's')
        bad_address(text, "must be 'g0' or 's<sector>:n<node>'");
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos || colon + 1 >= text.size() ||
        text[colon + 1] != 'n')
        bad_address(text, "must be 'g0' or 's<sector>:n<node>'");

    const Integer sector = parse_digits(text, text.substr(1, colon - 1));
    const Integer node = parse_digits(text, text.substr(colon + 2));
    const std::uint32_t sectors = sector_count(grid);
    if (sector < 1 || sector > sectors)
        bad_address(text, "names a sector outside 1.." + std::to_string(sectors));
    if (node < 1) bad_address(text, "names a node below 1");

    TileAddress address;
    address.grid = grid;
    address.sector = sector.convert_to<std::uint32_t>();
    address.node = node;
    return address;
}

// --- Bands of the sector tree -------------------------------------------------

Integer rightmost_branch(std::uint32_t level) {
    return fib(2 * std::size_t(level) + 2) - 1;
}

StripAssignment strip_index(const TreeTable& white_table, const Integer& node) {
    if (white_table.kind() != TreeKind::white)
        throw validation_error(
            "bands live on the white-rooted sector tree, not a black-rooted "
            "table");
    if (node < 1 || node > white_table.node_count())
        throw validation_error("node " + node.str() +
                               " is outside this table (1.." +
                               std::to_string(white_table.node_count()) + ")");
    const NodeId v = node.convert_to<NodeId>();
    const std::uint32_t j = white_table.level(v);

    std::vector<NodeId> ancestors(std::size_t(j) + 1);
    NodeId walk = v;
    for (std::uint32_t l = j;; --l) {
        ancestors[l] = walk;
        if (l == 0) break;
        walk = white_table.father(walk);
    }
    std::uint32_t band = 0;
    for (std::uint32_t l = 0; l <= j; ++l)
        if (ancestors[l] == white_table.level_end(l)) band = l;

    StripAssignment assignment;
    assignment.strip = band;
    assignment.level_in_strip = j - band;
    if (band == j) {
        assignment.index_in_strip = 1;
        return assignment;
    }
    // Leftmost band member on level j: the first-son walk from the band root.
    NodeId first = white_table.level_end(band);
    for (std::uint32_t step = band; step < j; ++step)
        first = white_table.first_son(first);
    assignment.index_in_strip =
        fib(2 * std::size_t(j - band) - 1) + (v - first) + 1;
    return assignment;
}

StripAssignment strip_index(const Integer& node, const BuildLimits& limits) {
    if (node < 1)
        throw validation_error("node ids start at 1 (got " + node.str() + ")");
    const std::uint32_t level = level_of_number(TreeKind::white, node);
    if (level > limits.max_depth)
        throw depth_error("node " + node.str() + " sits on level " +
                              std::to_string(level) + ", beyond the depth cap " +
                              std::to_string(limits.max_depth),
                          level);
    thread_local std::optional<TreeTable> cache;
    if (!cache || cache->depth() < level)
        cache.emplace(TreeTable::build(TreeKind::white, level, limits));
    return strip_index(*cache, node);
}

// --- Bulk verification ----------------------------------------------------------

namespace {

CheckResult make_check(std::string name, std::uint64_t first, std::uint64_t last,
                       std::string detail = {}) {
    CheckResult check;
    check.name = std::move(name);
    check.first = first;
    check.last = last;
    check.detail = std::move(detail);
    return check;
}

struct LeanAssignment {
    std::uint32_t strip = 0;
    std::uint64_t rank = 0;
    std::uint32_t level_in_strip = 0;
};

void sweep_addresses(Report& report, GridKind grid, std::uint64_t last) {
    CheckResult addresses =
        make_check(std::string(to_string(grid)) + "-address-round-trip", 0, last,
                   "id -> address -> id and text serialisation round trips");
    for (std::uint64_t g = 0; g <= last; ++g) {
        ++addresses.checked;
        const TileAddress address = tile_address(grid, g);
        bool ok = tile_global_id(address) == g;
        ok = ok && parse_tile_address(grid, to_string(address)) == address;
        if (g == 0) ok = ok && address.central();
        else
            ok = ok && address.sector >= 1 &&
                 address.sector <= sector_count(grid) && address.node >= 1;
        if (ok) ++addresses.passed;
        else addresses.record_violation("tile id " + std::to_string(g));
    }
    report.checks.push_back(std::move(addresses));
}

} // namespace

Report verify_strip_partition(std::uint32_t depth, const BuildLimits& limits) {
    const TreeTable white = TreeTable::build(TreeKind::white, depth, limits);
    const TreeTable pattern = TreeTable::build(TreeKind::black, depth, limits);
    Report report;
    report.title =
        "band partition of the sector tree, levels 0.." + std::to_string(depth);

    const std::uint64_t node_count = white.node_count();
    sweep_addresses(report, GridKind::pentagrid, node_count);
    sweep_addresses(report, GridKind::heptagrid, node_count);

    // One pass assigning every node; ranks must arrive densely in id order.
    std::vector<LeanAssignment> assigned(node_count + 1);
    std::vector<std::uint64_t> next_rank(std::size_t(depth) + 1, 1);
    CheckResult ranks = make_check(
        "band-partition-and-ranks", 1, node_count,
        "each node falls in one band; ranks run 1,2,... in id order");
    for (NodeId v = 1; v <= node_count; ++v) {
        ++ranks.checked;
        const StripAssignment a = strip_index(white, v);
        LeanAssignment& lean = assigned[v];
        lean.strip = a.strip;
        lean.rank = a.index_in_strip.convert_to<std::uint64_t>();
        lean.level_in_strip = a.level_in_strip;
        const bool ok = a.strip <= white.level(v) &&
                        a.level_in_strip == white.level(v) - a.strip &&
                        Integer(lean.rank) == a.index_in_strip &&
                        lean.rank == next_rank[a.strip];
        if (ok) {
            ++ranks.passed;
            ++next_rank[a.strip];
        } else {
            ranks.record_violation("node " + std::to_string(v));
        }
    }
    report.checks.push_back(std::move(ranks));

    CheckResult sizes = make_check(
        "band-block-sizes", 1, node_count,
        "band n holds fib(2(j - n)) nodes on absolute level j");
    for (std::uint32_t j = 0; j <= depth; ++j) {
        std::vector<std::uint64_t> per_band(std::size_t(j) + 2, 0);
        bool in_range = true;
        for (NodeId v = white.level_begin(j); v <= white.level_end(j); ++v) {
            if (assigned[v].strip > j) in_range = false;
            else ++per_band[assigned[v].strip];
        }
        for (std::uint32_t n = 0; n <= j; ++n) {
            ++sizes.checked;
            if (in_range && Integer(per_band[n]) == fib(2 * std::size_t(j - n)))
                ++sizes.passed;
            else
                sizes.record_violation("level " + std::to_string(j) + ", band " +
                                       std::to_string(n));
        }
    }
    report.checks.push_back(std::move(sizes));

    CheckResult statuses = make_check(
        "band-status-isomorphism", 1, node_count,
        "rank m >= 2 carries the tree pattern's status of m; each band root "
        "keeps exactly two sons in its band");
    for (NodeId v = 1; v <= node_count; ++v) {
        if (assigned[v].rank >= 2) {
            ++statuses.checked;
            if (white.status(v) == pattern.status(assigned[v].rank))
                ++statuses.passed;
            else statuses.record_violation("node " + std::to_string(v));
        } else if (white.sons_generated(v)) {
            ++statuses.checked;
            std::uint32_t in_band = 0;
            for (NodeId son = white.first_son(v); son <= white.last_son(v); ++son)
                if (assigned[son].strip == assigned[v].strip) ++in_band;
            if (in_band == 2) ++statuses.passed;
            else statuses.record_violation("band root " + std::to_string(v));
        } else {
            ++statuses.excluded;
        }
    }
    report.checks.push_back(std::move(statuses));

    CheckResult identity = make_check(
        "band-counting-identity", 0, depth,
        "fib(0) + fib(2) + ... + fib(2d) = fib(2d + 1)");
    Integer running = 0;
    for (std::uint32_t d = 0; d <= depth; ++d) {
        ++identity.checked;
        running += fib(2 * std::size_t(d));
        if (running == fib(2 * std::size_t(d) + 1)) ++identity.passed;
        else identity.record_violation("d = " + std::to_string(d));
    }
    report.checks.push_back(std::move(identity));

    CheckResult leading = make_check(
        "band-leading-tiles", 0, depth,
        "the rank-1 tiles are exactly the rightmost-branch nodes");
    std::uint64_t rank_one_seen = 0;
    for (NodeId v = 1; v <= node_count; ++v)
        if (assigned[v].rank == 1) ++rank_one_seen;
    for (std::uint32_t n = 0; n <= depth; ++n) {
        ++leading.checked;
        const Integer branch = rightmost_branch(n);
        const NodeId v = branch.convert_to<NodeId>();
        if (branch <= node_count && assigned[v].rank == 1 &&
            assigned[v].strip == n && assigned[v].level_in_strip == 0)
            ++leading.passed;
        else leading.record_violation("band " + std::to_string(n));
    }
    ++leading.checked;
    if (rank_one_seen == std::uint64_t(depth) + 1) ++leading.passed;
    else leading.record_violation("stray rank-1 tile");
    report.checks.push_back(std::move(leading));

    report.warnings.push_back(
        {"strip-leading-tile",
         "the band-leading tiles are the rightmost-branch nodes 1, 4, 12, 33, "
         "... = fib(2n+2) - 1; the published band index names fib(2n+1) - 1 = "
         "0, 2, 7, 20, ..., which do not lie on the rightmost branch"});
    return report;
}

} // namespace fibtree
