#include "fibtree/export.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

#include "fibtree/navigation.hpp"
#include "fibtree/numeration.hpp"

namespace fibtree {

const char* to_string(DumpFormat format) noexcept {
    switch (format) {
        case DumpFormat::text: return "text";
        case DumpFormat::csv: return "csv";
        case DumpFormat::dot: return "dot";
        default: return "record_stream";
    }
}

namespace {

// The per-node annotations every format draws from.
struct NodeRow {
    NodeId node;
    Status status;
    std::uint32_t level;
    NodeId father;
    std::string fib_code;
    std::string golden_code;
};

template <typename Emit>
void for_each_row(const TreeTable& tree, Emit emit) {
    FibCode code = zeck_encode(1);
    for (NodeId v = 1; v <= tree.node_count(); ++v) {
        NodeRow row{v,
                    tree.status(v),
                    tree.level(v),
                    tree.father(v),
                    code.digits(),
                    golden_encode(v).digits()};
        emit(row);
        if (v < tree.node_count()) code = zeck_increment(code);
    }
}

void write_csv(std::ostream& out, const TreeTable& tree) {
    out << "number,status,level,father,fib_code,golden_code,fib_type,"
           "golden_type\n";
    const bool classed = tree.kind() == TreeKind::black;
    for_each_row(tree, [&](const NodeRow& row) {
        out << row.node << ',' << to_string(row.status) << ',' << row.level
            << ',' << row.father << ',' << row.fib_code << ',' << row.golden_code
            << ',';
        if (classed)
            out << to_string(fib_type(tree, row.node)) << ','
                << to_string(golden_type(tree, row.node));
        else out << "-,-";
        out << '\n';
    });
}

void write_dot(std::ostream& out, const TreeTable& tree) {
    out << "digraph " << to_string(tree.kind()) << "_tree {\n"
        << "  rankdir=TB;\n"
        << "  node [shape=box, fontname=\"monospace\"];\n";
    const bool black_kind = tree.kind() == TreeKind::black;
    for_each_row(tree, [&](const NodeRow& row) {
        out << "  n" << row.node << " [label=\"" << row.node << "\\n"
            << row.fib_code << '"';
        if (row.status == Status::black)
            out << ", style=filled, fillcolor=gray25, fontcolor=white";
        out << "];\n";
    });
    for (NodeId v = 1; v <= tree.node_count(); ++v) {
        if (!tree.sons_generated(v)) continue;
        const Integer marked = black_kind ? successor_black_fib(v).node
                                          : preferred_son_white(v);
        for (NodeId son = tree.first_son(v); son <= tree.last_son(v); ++son) {
            out << "  n" << v << " -> n" << son;
            if (marked == son) out << " [style=bold]";
            out << ";\n";
        }
    }
    out << "}\n";
}

void write_record_stream(std::ostream& out, const TreeTable& tree) {
    const bool classed = tree.kind() == TreeKind::black;
    for_each_row(tree, [&](const NodeRow& row) {
        nlohmann::ordered_json record;
        record["number"] = row.node;
        record["status"] = to_string(row.status);
        record["level"] = row.level;
        record["father"] = row.father;
        record["fib_code"] = row.fib_code;
        record["golden_code"] = row.golden_code;
        if (classed) {
            record["fib_type"] = to_string(fib_type(tree, row.node));
            record["golden_type"] = to_string(golden_type(tree, row.node));
        }
        out << record.dump() << '\n';
    });
}

void write_outline(std::ostream& out, const TreeTable& tree) {
    for_each_row(tree, [&](const NodeRow& row) {
        out << std::string(2 * std::size_t(row.level), ' ') << row.node << ' '
            << to_string(row.status) << " fib=" << row.fib_code
            << " golden=" << row.golden_code << '\n';
    });
}

} // namespace

void dump_tree(std::ostream& out, const TreeTable& tree, DumpFormat format) {
    switch (format) {
        case DumpFormat::csv: write_csv(out, tree); break;
        case DumpFormat::dot: write_dot(out, tree); break;
        case DumpFormat::record_stream: write_record_stream(out, tree); break;
        default: write_outline(out, tree); break;
    }
}

} // namespace fibtree
