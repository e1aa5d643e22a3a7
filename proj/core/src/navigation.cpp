#include "fibtree/navigation.hpp"

#include <array>
#include <map>
#include <utility>

namespace fibtree {

const char* to_string(FibNodeType type) noexcept {
    switch (type) {
        case FibNodeType::b00: return "b00";
        case FibNodeType::b01: return "b01";
        case FibNodeType::w00: return "w00";
        case FibNodeType::w00star: return "w00star";
        case FibNodeType::w01: return "w01";
        case FibNodeType::w10: return "w10";
        default: return "exceptional";
    }
}

const char* to_string(GoldenNodeType type) noexcept {
    switch (type) {
        case GoldenNodeType::b0: return "b0";
        case GoldenNodeType::b1: return "b1";
        case GoldenNodeType::w0: return "w0";
        case GoldenNodeType::w1: return "w1";
        case GoldenNodeType::w2: return "w2";
        default: return "exceptional";
    }
}

const char* to_string(Numeration numeration) noexcept {
    return numeration == Numeration::fibonacci ? "fibonacci" : "golden";
}

const char* to_string(SuccessorRelation relation) noexcept {
    switch (relation) {
        case SuccessorRelation::rightmost_son: return "rightmost_son";
        case SuccessorRelation::rightmost_son_plus_one:
            return "rightmost_son_plus_one";
        default: return "base_case";
    }
}

// --- Status ------------------------------------------------------------------

Status node_status(TreeKind kind, const Integer& node) {
    if (node < 1)
        throw validation_error("node ids start at 1 (got " + node.str() + ")");
    if (kind == TreeKind::white) {
        const FibCode code = zeck_encode(node);
        const std::size_t zeros =
            code.size() - code.digits().find_last_of('1') - 1;
        return zeros % 2 == 1 ? Status::black : Status::white;
    }
    // The black tree is the white tree's subtree under node 2, relabelled
    // breadth-first: rank m of black level k sits at white id fib(2k+2)+m-1.
    const std::uint32_t k = level_of_number(TreeKind::black, node);
    const Integer m = node - level_first(TreeKind::black, k) + 1;
    return node_status(TreeKind::white, fib(2 * std::size_t(k) + 2) + m - 1);
}

// --- Classification ----------------------------------------------------------

namespace {

FibNodeType classify_fib(Status status, const std::string& code) {
    const char next_to_last = code[code.size() - 2];
    const char last = code.back();
    if (status == Status::black) {
        if (next_to_last == '0' && last == '0') return FibNodeType::b00;
        if (next_to_last == '0' && last == '1') return FibNodeType::b01;
        return FibNodeType::exceptional; // black ending "10": only node 2
    }
    if (next_to_last == '0' && last == '0') {
        // 1 0^2k (an even number of zeros) — the rightmost spelling of its
        // level — branches apart from the other white ...00 nodes.
        const bool level_end = code.find('1', 1) == std::string::npos &&
                               code.size() % 2 == 1;
        return level_end ? FibNodeType::w00star : FibNodeType::w00;
    }
    if (next_to_last == '0' && last == '1') return FibNodeType::w01;
    return FibNodeType::w10; // "11" cannot occur
}

GoldenNodeType classify_golden(Status status, const std::string& code) {
    const char last = code.back();
    if (status == Status::black) {
        if (last == '0') return GoldenNodeType::b0;
        if (last == '1') return GoldenNodeType::b1;
        return GoldenNodeType::exceptional; // black ending 2: only node 2
    }
    if (last == '0') return GoldenNodeType::w0;
    return last == '1' ? GoldenNodeType::w1 : GoldenNodeType::w2;
}

void require_kind(const TreeTable& table, TreeKind kind, const char* what) {
    if (table.kind() != kind)
        throw validation_error(std::string(what) + " expects a " +
                               to_string(kind) + "-rooted table, got " +
                               to_string(table.kind()));
}

NodeId to_node_id(const TreeTable& table, const Integer& node) {
    if (node < 1 || node > table.node_count())
        throw validation_error("node " + node.str() +
                               " is outside this table (1.." +
                               std::to_string(table.node_count()) + ")");
    return node.convert_to<NodeId>();
}

} // namespace

FibNodeType fib_type(const TreeTable& black_table, const Integer& node) {
    require_kind(black_table, TreeKind::black, "fib_type");
    const NodeId v = to_node_id(black_table, node);
    if (v <= 2) return FibNodeType::exceptional;
    return classify_fib(black_table.status(v), zeck_encode(node).digits());
}

FibNodeType fib_type(const Integer& node) {
    if (node < 1)
        throw validation_error("node ids start at 1 (got " + node.str() + ")");
    if (node <= 2) return FibNodeType::exceptional;
    return classify_fib(node_status(TreeKind::black, node),
                        zeck_encode(node).digits());
}

GoldenNodeType golden_type(const TreeTable& black_table, const Integer& node) {
    require_kind(black_table, TreeKind::black, "golden_type");
    const NodeId v = to_node_id(black_table, node);
    if (v <= 2) return GoldenNodeType::exceptional;
    return classify_golden(black_table.status(v), golden_encode(node).digits());
}

GoldenNodeType golden_type(const Integer& node) {
    if (node < 1)
        throw validation_error("node ids start at 1 (got " + node.str() + ")");
    if (node <= 2) return GoldenNodeType::exceptional;
    return classify_golden(node_status(TreeKind::black, node),
                           golden_encode(node).digits());
}

// --- Son-class tables ----------------------------------------------------------

namespace {

using F = FibNodeType;
using G = GoldenNodeType;

constexpr std::array<F, 2> fib_sons_b00{F::b01, F::w10};
constexpr std::array<F, 2> fib_sons_b01{F::b01, F::w10};
constexpr std::array<F, 3> fib_sons_w00{F::b00, F::w01, F::w00};
constexpr std::array<F, 3> fib_sons_w00star{F::b01, F::w10, F::w00star};
constexpr std::array<F, 3> fib_sons_w01{F::b00, F::w01, F::w10};
constexpr std::array<F, 3> fib_sons_w10{F::b00, F::w01, F::w00};

constexpr std::array<G, 2> golden_sons_b0{G::b0, G::w1};
constexpr std::array<G, 2> golden_sons_b1{G::b1, G::w2};
constexpr std::array<G, 3> golden_sons_w0{G::b0, G::w1, G::w0};
constexpr std::array<G, 3> golden_sons_w1{G::b0, G::w1, G::w2};
constexpr std::array<G, 3> golden_sons_w2{G::b0, G::w1, G::w2};

} // namespace

std::span<const FibNodeType> fib_son_types(FibNodeType type) noexcept {
    switch (type) {
        case F::b00: return fib_sons_b00;
        case F::b01: return fib_sons_b01;
        case F::w00: return fib_sons_w00;
        case F::w00star: return fib_sons_w00star;
        case F::w01: return fib_sons_w01;
        case F::w10: return fib_sons_w10;
        default: return {};
    }
}

std::span<const GoldenNodeType> golden_son_types(GoldenNodeType type) noexcept {
    switch (type) {
        case G::b0: return golden_sons_b0;
        case G::b1: return golden_sons_b1;
        case G::w0: return golden_sons_w0;
        case G::w1: return golden_sons_w1;
        case G::w2: return golden_sons_w2;
        default: return {};
    }
}

bool fib_pair_allowed(FibNodeType left, FibNodeType right) noexcept {
    const auto collapse = [](F t) { return t == F::w00star ? F::w00 : t; };
    left = collapse(left);
    right = collapse(right);
    static constexpr std::pair<F, F> allowed[] = {
        {F::b00, F::w01}, {F::b01, F::w10}, {F::w00, F::b01}, {F::w10, F::b00},
        {F::w01, F::w00}, {F::w10, F::w00}, {F::w01, F::w10}};
    for (const auto& [a, b] : allowed)
        if (a == left && b == right) return true;
    return false;
}

bool golden_pair_allowed(GoldenNodeType left, GoldenNodeType right) noexcept {
    static constexpr std::pair<G, G> allowed[] = {{G::b0, G::w1}, {G::b1, G::w2},
                                                  {G::w1, G::b0}, {G::w2, G::b0},
                                                  {G::w1, G::w0}, {G::w1, G::w2}};
    for (const auto& [a, b] : allowed)
        if (a == left && b == right) return true;
    return false;
}

// --- Code-shift navigation -----------------------------------------------------

namespace {

SuccessorRelation fib_relation(FibNodeType type) noexcept {
    switch (type) {
        case F::w00:
        case F::w00star:
        case F::w10: return SuccessorRelation::rightmost_son;
        case F::b00:
        case F::b01:
        case F::w01: return SuccessorRelation::rightmost_son_plus_one;
        default: return SuccessorRelation::base_case;
    }
}

SuccessorRelation golden_relation(GoldenNodeType type) noexcept {
    switch (type) {
        case G::w0: return SuccessorRelation::rightmost_son;
        case G::b0:
        case G::b1:
        case G::w1:
        case G::w2: return SuccessorRelation::rightmost_son_plus_one;
        default: return SuccessorRelation::base_case;
    }
}

[[noreturn]] void throw_successor_depth(const Integer& node, const Integer& succ,
                                        const TreeTable& table) {
    const std::uint32_t needed = level_of_number(table.kind(), succ);
    throw depth_error("the successor " + succ.str() + " of node " + node.str() +
                          " lies on level " + std::to_string(needed) +
                          ", beyond this depth-" + std::to_string(table.depth()) +
                          " table",
                      needed);
}

} // namespace

SuccessorResult successor_black_fib(const Integer& node) {
    SuccessorResult result;
    result.code = zeck_encode(node).digits() + "00";
    result.node = zeck_decode(result.code);
    result.relation = fib_relation(fib_type(node));
    return result;
}

SuccessorResult successor_black_fib(const TreeTable& black_table,
                                    const Integer& node) {
    require_kind(black_table, TreeKind::black, "successor_black_fib");
    to_node_id(black_table, node);
    SuccessorResult result = successor_black_fib(node);
    if (result.node > black_table.node_count())
        throw_successor_depth(node, result.node, black_table);
    return result;
}

SuccessorResult successor_black_golden(const Integer& node) {
    SuccessorResult result;
    result.code = golden_encode(node).digits() + "0";
    result.node = golden_decode(result.code);
    result.relation = golden_relation(golden_type(node));
    return result;
}

SuccessorResult successor_black_golden(const TreeTable& black_table,
                                       const Integer& node) {
    require_kind(black_table, TreeKind::black, "successor_black_golden");
    to_node_id(black_table, node);
    SuccessorResult result = successor_black_golden(node);
    if (result.node > black_table.node_count())
        throw_successor_depth(node, result.node, black_table);
    return result;
}

namespace {

NodeId require_sons(const TreeTable& white_table, const Integer& node,
                    const char* what) {
    require_kind(white_table, TreeKind::white, what);
    const NodeId v = to_node_id(white_table, node);
    if (!white_table.sons_generated(v)) {
        const std::uint32_t needed = white_table.level(v) + 1;
        throw depth_error("sons of node " + node.str() + " sit on level " +
                              std::to_string(needed) + ", beyond this depth-" +
                              std::to_string(white_table.depth()) + " table",
                          needed);
    }
    return v;
}

} // namespace

Integer preferred_son_white(const Integer& node) {
    return zeck_decode(zeck_encode(node).digits() + "00");
}

Integer preferred_son_white(const TreeTable& white_table, const Integer& node) {
    require_sons(white_table, node, "preferred_son_white");
    return preferred_son_white(node);
}

Integer preferred_son_golden(const Integer& node) {
    return golden_decode(golden_encode(node).digits() + "0");
}

Integer preferred_son_golden(const TreeTable& white_table, const Integer& node) {
    require_sons(white_table, node, "preferred_son_golden");
    return preferred_son_golden(node);
}

// --- Bulk verification ----------------------------------------------------------

namespace {

// One incremental pass assigning every node its class; avoids re-encoding.
template <typename Type, typename Classify>
std::vector<Type> classify_all(const TreeTable& table, Classify classify) {
    std::vector<Type> types(std::size_t(table.node_count()) + 1,
                            Type::exceptional);
    FibCode code = zeck_encode(1);
    for (NodeId v = 1; v <= table.node_count(); ++v) {
        if (v > 2) types[v] = classify(table.status(v), v, code.digits());
        if (v < table.node_count()) code = zeck_increment(code);
    }
    return types;
}

CheckResult make_check(std::string name, std::uint64_t first, std::uint64_t last,
                       std::string detail = {}) {
    CheckResult check;
    check.name = std::move(name);
    check.first = first;
    check.last = last;
    check.detail = std::move(detail);
    return check;
}

void sweep_status(Report& report, const TreeTable& table) {
    CheckResult status = make_check(
        "status-closed-form", 1, table.node_count(),
        "arithmetic status formula against the generated statuses");
    for (NodeId v = 1; v <= table.node_count(); ++v) {
        ++status.checked;
        if (node_status(table.kind(), v) == table.status(v)) ++status.passed;
        else status.record_violation("node " + std::to_string(v));
    }
    report.checks.push_back(std::move(status));
}

template <typename Type, typename SonTypes, typename PairAllowed>
void sweep_classes(Report& report, const TreeTable& table,
                   const std::vector<Type>& types, SonTypes son_types,
                   PairAllowed pair_allowed, const char* prefix) {
    const std::uint32_t depth = table.depth();
    const NodeId last_father = depth == 0 ? 0 : table.level_end(depth - 1);

    CheckResult sons = make_check(std::string(prefix) + "-son-classes", 1,
                                  last_father,
                                  "each class prescribes its sons' classes");
    for (NodeId v = 1; v <= last_father; ++v) {
        if (types[v] == Type::exceptional) {
            ++sons.excluded;
            continue;
        }
        ++sons.checked;
        const auto expected = son_types(types[v]);
        bool ok = table.son_count(v) == expected.size();
        for (std::size_t i = 0; ok && i < expected.size(); ++i)
            ok = types[table.first_son(v) + i] == expected[i];
        if (ok) ++sons.passed;
        else sons.record_violation("node " + std::to_string(v));
    }
    report.checks.push_back(std::move(sons));

    CheckResult pairs = make_check(
        std::string(prefix) + "-adjacent-pairs", 1, table.node_count(),
        "in-level neighbour classes among the producible pairs");
    for (std::uint32_t k = 1; k <= depth; ++k) {
        for (NodeId v = table.level_begin(k); v < table.level_end(k); ++v) {
            // Pairs touching the pre-rule base cases, or sharing a base-case
            // father, fall outside the system: exactly (2,3) and (4,5) here.
            const bool outside =
                v <= 2 || (table.father(v) == table.father(v + 1) &&
                           table.father(v) <= 2);
            if (outside) {
                ++pairs.excluded;
                continue;
            }
            ++pairs.checked;
            if (pair_allowed(types[v], types[v + 1])) ++pairs.passed;
            else
                pairs.record_violation("nodes " + std::to_string(v) + "," +
                                       std::to_string(v + 1));
        }
    }
    report.checks.push_back(std::move(pairs));

    CheckResult census_check = make_check(
        std::string(prefix) + "-class-census", 1, table.node_count(),
        "exceptional = {1, 2}; every other class inhabited; none beyond them");
    std::map<Type, CensusEntry> census;
    for (NodeId v = 1; v <= table.node_count(); ++v) {
        ++census_check.checked;
        CensusEntry& entry = census[types[v]];
        ++entry.count;
        if (entry.first == 0) entry.first = v;
        if (v > 2 && types[v] == Type::exceptional)
            census_check.record_violation("node " + std::to_string(v) +
                                          " fits no class");
        else
            ++census_check.passed;
    }
    if (census[Type::exceptional].count != 2)
        census_check.record_violation("expected exactly two pre-rule nodes");
    for (const auto& [type, entry] : census) {
        CensusEntry named = entry;
        named.klass = std::string(prefix) + "-" + to_string(type);
        report.census.push_back(std::move(named));
    }
    report.checks.push_back(std::move(census_check));
}

template <typename Successor>
void sweep_successors(Report& report, const TreeTable& table,
                      Successor successor, const char* prefix,
                      NodeId base1_target, NodeId base2_target) {
    const std::uint32_t depth = table.depth();
    const NodeId last_father = depth == 0 ? 0 : table.level_end(depth - 1);
    CheckResult succ = make_check(
        std::string(prefix) + "-successor-relation", 1, last_father,
        "appended-zero spelling lands on the class-prescribed son slot");
    for (NodeId v = 1; v <= last_father; ++v) {
        const SuccessorResult s = successor(v);
        if (s.relation == SuccessorRelation::base_case) {
            ++succ.excluded;
            const NodeId target = v == 1 ? base1_target : base2_target;
            if (v > 2 || s.node != target)
                succ.record_violation("base case " + std::to_string(v));
            continue;
        }
        ++succ.checked;
        const Integer rightmost = table.last_son(v);
        const Integer expected =
            s.relation == SuccessorRelation::rightmost_son ? rightmost
                                                           : rightmost + 1;
        if (s.node == expected) ++succ.passed;
        else succ.record_violation("node " + std::to_string(v));
    }
    report.checks.push_back(std::move(succ));
}

void sweep_black_fib(Report& report, const TreeTable& table) {
    const auto types = classify_all<FibNodeType>(
        table, [](Status s, NodeId, const std::string& code) {
            return classify_fib(s, code);
        });
    sweep_status(report, table);
    sweep_classes(report, table, types,
                  [](FibNodeType t) { return fib_son_types(t); },
                  [](FibNodeType a, FibNodeType b) {
                      return fib_pair_allowed(a, b);
                  },
                  "fib");
    sweep_successors(report, table,
                     [](NodeId v) { return successor_black_fib(v); }, "fib", 3,
                     5);

    CheckResult level_ends = make_check(
        "fib-level-end-class", 0, table.depth(),
        "w00star appears exactly at each level's rightmost node");
    for (std::uint32_t k = 0; k <= table.depth(); ++k) {
        for (NodeId v = table.level_begin(k); v <= table.level_end(k); ++v) {
            if (v <= 2) continue;
            ++level_ends.checked;
            const bool is_star = types[v] == FibNodeType::w00star;
            if (is_star == (v == table.level_end(k))) ++level_ends.passed;
            else level_ends.record_violation("node " + std::to_string(v));
        }
    }
    report.checks.push_back(std::move(level_ends));

    report.warnings.push_back(
        {"fib-type-census",
         "published notes call the class of white nodes ending 01 empty and "
         "pair black nodes with a final-10 class; the sweep finds every "
         "non-exceptional class inhabited (w01 first at node 12) and no black "
         "spelling ending 10 beyond node 2"});
}

void sweep_black_golden(Report& report, const TreeTable& table) {
    std::vector<GoldenNodeType> types(std::size_t(table.node_count()) + 1,
                                      GoldenNodeType::exceptional);
    for (NodeId v = 3; v <= table.node_count(); ++v)
        types[v] = classify_golden(table.status(v), golden_encode(v).digits());
    sweep_status(report, table);
    sweep_classes(report, table, types,
                  [](GoldenNodeType t) { return golden_son_types(t); },
                  [](GoldenNodeType a, GoldenNodeType b) {
                      return golden_pair_allowed(a, b);
                  },
                  "golden");
    sweep_successors(report, table,
                     [](NodeId v) { return successor_black_golden(v); },
                     "golden", 3, 6);
    report.warnings.push_back(
        {"golden-weights",
         "the digit-2 weights must start 1, 3, 8, 21 for spellings to stay "
         "unique and the shift relations to close; the alternative start "
         "giving 1, 2, 5, 13 admits two spellings of 18 (1100 and 1021) and "
         "matches only the level totals of the two-son-rooted tree"});
}

void sweep_white_fib(Report& report, const TreeTable& table) {
    sweep_status(report, table);
    const std::uint32_t depth = table.depth();
    const NodeId last_father = depth == 0 ? 0 : table.level_end(depth - 1);
    CheckResult preferred = make_check(
        "fib-preferred-son", 1, last_father,
        "appending 00 names the black son of a black node, the middle son of "
        "a white one");
    FibCode code = zeck_encode(1);
    for (NodeId v = 1; v <= last_father; ++v) {
        ++preferred.checked;
        const Integer p = zeck_decode(code.digits() + "00");
        const NodeId expected = table.status(v) == Status::black
                                    ? table.first_son(v)
                                    : table.first_son(v) + 1;
        if (p == expected) ++preferred.passed;
        else preferred.record_violation("node " + std::to_string(v));
        code = zeck_increment(code);
    }
    report.checks.push_back(std::move(preferred));
}

void sweep_white_golden(Report& report, const TreeTable& table) {
    const std::uint32_t depth = table.depth();
    const NodeId last_father = depth == 0 ? 0 : table.level_end(depth - 1);
    CheckResult unique = make_check(
        "golden-unique-final-zero-son", 1, last_father,
        "exactly one son's golden spelling ends 0: the leftmost white son");
    CheckResult preferred = make_check(
        "golden-preferred-son", 1, last_father,
        "appending 0 names that son for black and white nodes alike");
    for (NodeId v = 1; v <= last_father; ++v) {
        const NodeId second_son = table.first_son(v) + 1;

        ++unique.checked;
        std::uint32_t enders = 0;
        bool second_ends_zero = false;
        for (NodeId son = table.first_son(v); son <= table.last_son(v); ++son) {
            if (golden_encode(son).digits().back() == '0') {
                ++enders;
                second_ends_zero = son == second_son;
            }
        }
        const bool second_is_white = table.status(second_son) == Status::white &&
                                     table.status(table.first_son(v)) ==
                                         Status::black;
        if (enders == 1 && second_ends_zero && second_is_white) ++unique.passed;
        else unique.record_violation("node " + std::to_string(v));

        ++preferred.checked;
        if (preferred_son_golden(Integer(v)) == second_son) ++preferred.passed;
        else preferred.record_violation("node " + std::to_string(v));
    }
    report.checks.push_back(std::move(unique));
    report.checks.push_back(std::move(preferred));
}

} // namespace

Report verify_theorems(TreeKind kind, Numeration numeration, std::uint32_t depth,
                       const BuildLimits& limits) {
    const TreeTable table = TreeTable::build(kind, depth, limits);
    Report report;
    report.title = std::string("class-system sweep: ") + to_string(kind) +
                   " tree, " + to_string(numeration) + " spellings, levels 0.." +
                   std::to_string(depth);
    if (kind == TreeKind::black) {
        if (numeration == Numeration::fibonacci) sweep_black_fib(report, table);
        else sweep_black_golden(report, table);
    } else {
        if (numeration == Numeration::fibonacci) sweep_white_fib(report, table);
        else sweep_white_golden(report, table);
    }
    return report;
}

Report verify_theorems(std::uint32_t depth, const BuildLimits& limits) {
    Report report =
        verify_theorems(TreeKind::white, Numeration::fibonacci, depth, limits);
    report.title = "class-system sweep: all four tree/numeration combinations, "
                   "levels 0.." +
                   std::to_string(depth);
    report.merge(
        verify_theorems(TreeKind::black, Numeration::fibonacci, depth, limits));
    report.merge(
        verify_theorems(TreeKind::white, Numeration::golden, depth, limits));
    report.merge(
        verify_theorems(TreeKind::black, Numeration::golden, depth, limits));
    return report;
}

} // namespace fibtree
