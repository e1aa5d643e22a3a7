#include "fibtree/tree.hpp"

#include "fibtree/numeration.hpp"

#include <utility>

namespace fibtree {

const char* to_string(TreeKind kind) noexcept {
    return kind == TreeKind::white ? "white" : "black";
}

const char* to_string(Status status) noexcept {
    return status == Status::black ? "black" : "white";
}

// --- Closed forms -------------------------------------------------------------

Integer level_count(TreeKind kind, std::uint32_t level) {
    return kind == TreeKind::white ? fib(2 * std::size_t(level) + 1)
                                   : fib(2 * std::size_t(level));
}

Integer level_first(TreeKind kind, std::uint32_t level) {
    if (kind == TreeKind::white) return fib(2 * std::size_t(level));
    return level == 0 ? Integer(1) : fib(2 * std::size_t(level) - 1) + 1;
}

Integer level_last(TreeKind kind, std::uint32_t level) {
    return kind == TreeKind::white ? fib(2 * std::size_t(level) + 2) - 1
                                   : fib(2 * std::size_t(level) + 1);
}

std::uint32_t level_of_number(TreeKind kind, const Integer& node) {
    if (node < 1)
        throw validation_error("node ids start at 1 (got " + node.str() + ")");
    std::uint32_t level = 0;
    while (level_last(kind, level) < node) ++level;
    return level;
}

ExtremalNode extremal_node(TreeKind kind, std::uint32_t level, Side side) {
    ExtremalNode result;
    if (side == Side::leftmost) {
        result.node = level_first(kind, level);
        if (level == 0)
            result.fib_code = "1";
        else if (kind == TreeKind::white)
            result.fib_code = "1" + std::string(2 * level - 1, '0');
        else if (level == 1)
            result.fib_code = "10";
        else
            result.fib_code = "1" + std::string(2 * level - 3, '0') + "1";
    } else {
        result.node = level_last(kind, level);
        if (kind == TreeKind::white) {
            result.fib_code.reserve(2 * level + 1);
            result.fib_code = "1";
            for (std::uint32_t i = 0; i < level; ++i) result.fib_code += "01";
        } else {
            result.fib_code = "1" + std::string(2 * level, '0');
        }
    }
    return result;
}

// --- TreeTable -----------------------------------------------------------------

TreeTable TreeTable::build(TreeKind kind, std::uint32_t depth,
                           const BuildLimits& limits) {
    if (depth > limits.max_depth)
        throw depth_error("depth " + std::to_string(depth) +
                              " exceeds the generation cap " +
                              std::to_string(limits.max_depth),
                          depth);
    const Integer total = level_last(kind, depth);
    if (total > (Integer(1) << 32))
        throw depth_error("a depth-" + std::to_string(depth) + " table holds " +
                              total.str() + " nodes, past the addressable size",
                          depth);

    TreeTable table;
    table.kind_ = kind;
    table.depth_ = depth;
    table.records_.resize(total.convert_to<std::size_t>());
    table.level_offsets_.resize(std::size_t(depth) + 1);

    NodeRecord& root = table.records_[0];
    root.node = 1;
    root.status = kind == TreeKind::white ? Status::white : Status::black;
    table.level_offsets_[0] = 1;

    NodeId next = 2;
    for (std::uint32_t lvl = 0; lvl < depth; ++lvl) {
        table.level_offsets_[lvl + 1] = next;
        const NodeId begin = table.level_offsets_[lvl];
        const NodeId end = next - 1;
        for (NodeId v = begin; v <= end; ++v) {
            NodeRecord& rec = table.records_[v - 1];
            const std::uint8_t count = rec.status == Status::black ? 2 : 3;
            rec.first_son = next;
            rec.son_count = count;
            for (std::uint8_t i = 0; i < count; ++i, ++next) {
                NodeRecord& son = table.records_[next - 1];
                son.node = next;
                son.status = i == 0 ? Status::black : Status::white;
                son.level = lvl + 1;
                son.father = v;
            }
        }
    }
    return table;
}

const NodeRecord& TreeTable::node_info(NodeId node) const {
    if (!contains(node))
        throw validation_error("node " + std::to_string(node) +
                               " is outside this table (1.." +
                               std::to_string(node_count()) + ")");
    return records_[node - 1];
}

Status TreeTable::status(NodeId node) const { return node_info(node).status; }

std::uint32_t TreeTable::level(NodeId node) const { return node_info(node).level; }

NodeId TreeTable::father(NodeId node) const { return node_info(node).father; }

bool TreeTable::sons_generated(NodeId node) const {
    return node_info(node).first_son != 0;
}

NodeId TreeTable::first_son(NodeId node) const {
    const NodeRecord& rec = node_info(node);
    if (rec.first_son == 0)
        throw validation_error("sons of node " + std::to_string(node) +
                               " were not generated: level " +
                               std::to_string(rec.level) +
                               " is this table's last");
    return rec.first_son;
}

std::uint8_t TreeTable::son_count(NodeId node) const {
    first_son(node); // validate
    return node_info(node).son_count;
}

NodeId TreeTable::last_son(NodeId node) const {
    return first_son(node) + node_info(node).son_count - 1;
}

std::vector<NodeId> TreeTable::sons(NodeId node) const {
    const NodeId first = first_son(node);
    std::vector<NodeId> out(node_info(node).son_count);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = first + i;
    return out;
}

NodeId TreeTable::level_begin(std::uint32_t level) const {
    if (level > depth_)
        throw validation_error("level " + std::to_string(level) +
                               " is beyond this table's depth " +
                               std::to_string(depth_));
    return level_offsets_[level];
}

NodeId TreeTable::level_end(std::uint32_t level) const {
    if (level > depth_)
        throw validation_error("level " + std::to_string(level) +
                               " is beyond this table's depth " +
                               std::to_string(depth_));
    return level == depth_ ? node_count() : level_offsets_[level + 1] - 1;
}

std::uint64_t TreeTable::level_size(std::uint32_t level) const {
    return level_end(level) - level_begin(level) + 1;
}

// --- Level statistics ------------------------------------------------------

std::vector<LevelStats> level_stats(const TreeTable& table) {
    std::vector<LevelStats> stats(std::size_t(table.depth()) + 1);
    for (std::uint32_t k = 0; k <= table.depth(); ++k) {
        LevelStats& row = stats[k];
        row.level = k;
        for (NodeId v = table.level_begin(k); v <= table.level_end(k); ++v)
            (table.status(v) == Status::black ? row.black : row.white) += 1;
        row.total = row.black + row.white;
    }
    return stats;
}

// --- Structural verification -------------------------------------------------

namespace {

std::size_t trailing_zeros(const std::string& code) {
    return code.size() - code.find_last_of('1') - 1;
}

void check_one_kind(Report& report, TreeKind kind, std::uint32_t depth,
                    const BuildLimits& limits) {
    const TreeTable table = TreeTable::build(kind, depth, limits);
    const std::string prefix = to_string(kind);

    CheckResult sizes;

    sizes.name = prefix + "-level-sizes";
    sizes.first = 0;
    sizes.last = depth;
    sizes.detail = "counted sizes and id ranges against the closed forms";
    for (std::uint32_t k = 0; k <= depth; ++k) {
        ++sizes.checked;
        if (Integer(table.level_size(k)) == level_count(kind, k) &&
            Integer(table.level_begin(k)) == level_first(kind, k) &&
            Integer(table.level_end(k)) == level_last(kind, k))
            ++sizes.passed;
        else
            sizes.record_violation("level " + std::to_string(k) +
                                   ": size or range off the closed form");
    }
    report.checks.push_back(std::move(sizes));

    CheckResult rules;

    rules.name = prefix + "-son-rules";
    rules.first = 1;
    rules.last = depth == 0 ? 1 : table.level_end(depth - 1);
    rules.detail = "black -> black,white; white -> black,white,white";
    for (NodeId v = 1; depth > 0 && v <= table.level_end(depth - 1); ++v) {
        ++rules.checked;
        const auto sons = table.sons(v);
        const std::size_t expected = table.status(v) == Status::black ? 2 : 3;
        bool ok = sons.size() == expected;
        for (std::size_t i = 0; ok && i < sons.size(); ++i) {
            const Status want = i == 0 ? Status::black : Status::white;
            ok = table.status(sons[i]) == want && table.father(sons[i]) == v &&
                 table.level(sons[i]) == table.level(v) + 1;
        }
        if (ok) ++rules.passed;
        else rules.record_violation("node " + std::to_string(v));
    }
    report.checks.push_back(std::move(rules));

    CheckResult blocks;

    blocks.name = prefix + "-son-block-adjacency";
    blocks.first = 0;
    blocks.last = depth == 0 ? 0 : depth - 1;
    blocks.detail = "son blocks tile the next level left to right";
    for (std::uint32_t k = 0; depth > 0 && k < depth; ++k) {
        ++blocks.checked;
        bool ok = true;
        NodeId expected_first = table.level_begin(k + 1);
        for (NodeId v = table.level_begin(k); ok && v <= table.level_end(k); ++v) {
            ok = table.first_son(v) == expected_first;
            expected_first = table.last_son(v) + 1;
        }
        ok = ok && expected_first == table.level_end(k + 1) + 1;
        if (ok) ++blocks.passed;
        else blocks.record_violation("level " + std::to_string(k));
    }
    report.checks.push_back(std::move(blocks));

    CheckResult extremal;

    extremal.name = prefix + "-extremal-spellings";
    extremal.first = 0;
    extremal.last = depth;
    extremal.detail = "leftmost/rightmost ids and their code words";
    for (std::uint32_t k = 0; k <= depth; ++k) {
        for (Side side : {Side::leftmost, Side::rightmost}) {
            ++extremal.checked;
            const ExtremalNode x = extremal_node(kind, k, side);
            const Integer expected_id = side == Side::leftmost
                                            ? Integer(table.level_begin(k))
                                            : Integer(table.level_end(k));
            if (x.node == expected_id &&
                zeck_encode(x.node).digits() == x.fib_code &&
                zeck_decode(x.fib_code) == x.node)
                ++extremal.passed;
            else
                extremal.record_violation("level " + std::to_string(k) + ", " +
                                          (side == Side::leftmost ? "leftmost"
                                                                  : "rightmost"));
        }
    }
    report.checks.push_back(std::move(extremal));

    CheckResult recurrences;

    recurrences.name = prefix + "-status-recurrences";
    recurrences.first = 1;
    recurrences.last = depth;
    recurrences.detail =
        "black(k) = total(k-1), white(k) = total(k-1) + white(k-1)";
    const auto stats = level_stats(table);
    for (std::size_t k = 1; k < stats.size(); ++k) {
        ++recurrences.checked;
        bool ok = stats[k].black == stats[k - 1].total &&
                  stats[k].white == stats[k - 1].total + stats[k - 1].white;
        if (k >= 2)
            ok = ok &&
                 stats[k].total == 3 * stats[k - 1].total - stats[k - 2].total;
        if (ok) ++recurrences.passed;
        else recurrences.record_violation("level " + std::to_string(k));
    }
    report.checks.push_back(std::move(recurrences));

    if (kind == TreeKind::white) {
        CheckResult totals;
        totals.name = "white-level-totals-are-weights";
        totals.first = 0;
        totals.last = depth;
        totals.detail = "total(k) = w(k+1), the digit-2 weight family";
        for (std::size_t k = 0; k < stats.size(); ++k) {
            ++totals.checked;
            if (stats[k].total == golden_weight(k + 1)) ++totals.passed;
            else totals.record_violation("level " + std::to_string(k));
        }
        report.checks.push_back(std::move(totals));

        CheckResult parity;

        parity.name = "white-status-parity";
        parity.first = 1;
        parity.last = table.node_count();
        parity.detail = "black iff the code word has an odd number of trailing zeros";
        FibCode code = zeck_encode(1);
        for (NodeId v = 1; v <= table.node_count(); ++v) {
            ++parity.checked;
            const Status expected = trailing_zeros(code.digits()) % 2 == 1
                                        ? Status::black
                                        : Status::white;
            if (table.status(v) == expected) ++parity.passed;
            else parity.record_violation("node " + std::to_string(v));
            code = zeck_increment(code);
        }
        report.checks.push_back(std::move(parity));
    }
}

} // namespace

Report verify_tree_shape(std::uint32_t depth, const BuildLimits& limits) {
    Report report;
    report.title =
        "tree shape, both roots, levels 0.." + std::to_string(depth);
    check_one_kind(report, TreeKind::white, depth, limits);
    check_one_kind(report, TreeKind::black, depth, limits);
    report.warnings.push_back(
        {"cor-white-rightmost",
         "the rightmost node of white level k is fib(2k+2) - 1 (1, 4, 12, 33, "
         "...), spelled 1 (01)^k; the published closed form names fib(2k) - 1, "
         "which sits below the level's leftmost node fib(2k)"});
    return report;
}

} // namespace fibtree
