// Command-line front end: spell values in either numeration, inspect tree
// nodes, dump whole trees, and run the verification sweeps.
//
// Exit codes: 0 success, 1 verification violations, 2 usage errors,
// 3 invalid values or code words, 4 depth-cap overruns.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "fibtree/export.hpp"
#include "fibtree/navigation.hpp"
#include "fibtree/numeration.hpp"
#include "fibtree/report.hpp"
#include "fibtree/tiling.hpp"
#include "fibtree/tree.hpp"

namespace {

using namespace fibtree;

constexpr int exit_ok = 0;
constexpr int exit_violations = 1;
constexpr int exit_usage = 2;
constexpr int exit_bad_value = 3;
constexpr int exit_depth = 4;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return exit_usage;
}

Integer parse_natural(const std::string& text) {
    if (text.empty())
        throw validation_error("expected a base-10 natural number, got nothing");
    for (char c : text)
        if (c < '0' || c > '9')
            throw validation_error("the value '" + text +
                                   "' is not a base-10 natural number");
    return Integer(text);
}

int run_encode(bool fib, const std::string& value_text) {
    const Integer value = parse_natural(value_text);
    if (fib) std::cout << zeck_encode(value).digits() << "\n";
    else std::cout << golden_encode(value).digits() << "\n";
    return exit_ok;
}

int run_decode(bool fib, bool lenient, const std::string& word) {
    if (fib) {
        std::cout << zeck_decode(word) << "\n";
        return exit_ok;
    }
    if (!lenient) {
        std::cout << golden_decode(word) << "\n";
        return exit_ok;
    }
    const GoldenValue decoded = golden_decode_lenient(word);
    std::cout << decoded.value << "\n";
    if (!decoded.canonical)
        std::cout << "canonical: " << golden_encode(decoded.value).digits()
                  << "\n";
    return exit_ok;
}

int run_node(TreeKind kind, const std::string& value_text,
             const BuildLimits& limits) {
    const Integer value = parse_natural(value_text);
    const std::uint32_t level = level_of_number(kind, value);
    // One level deeper than the node, so its sons are materialised.
    const TreeTable table = TreeTable::build(kind, level + 1, limits);
    const NodeId id = value.convert_to<NodeId>();

    std::cout << "node: " << value << "\n";
    std::cout << "tree: " << to_string(kind) << "\n";
    std::cout << "status: " << to_string(table.status(id)) << "\n";
    std::cout << "level: " << level << "\n";
    if (table.father(id) != 0) std::cout << "father: " << table.father(id) << "\n";
    std::cout << "sons:";
    for (NodeId son : table.sons(id)) std::cout << ' ' << son;
    std::cout << "\n";
    std::cout << "fib_code: " << zeck_encode(value).digits() << "\n";
    std::cout << "golden_code: " << golden_encode(value).digits() << "\n";
    if (kind == TreeKind::black) {
        std::cout << "fib_type: " << to_string(fib_type(table, value)) << "\n";
        std::cout << "golden_type: " << to_string(golden_type(table, value))
                  << "\n";
        const SuccessorResult fib_succ = successor_black_fib(table, value);
        std::cout << "successor_fib: " << fib_succ.node << " ("
                  << to_string(fib_succ.relation) << ", " << fib_succ.code
                  << ")\n";
        const SuccessorResult golden_succ = successor_black_golden(table, value);
        std::cout << "successor_golden: " << golden_succ.node << " ("
                  << to_string(golden_succ.relation) << ", " << golden_succ.code
                  << ")\n";
    } else {
        std::cout << "preferred_son: " << preferred_son_white(table, value)
                  << "\n";
        std::cout << "preferred_son_golden: "
                  << preferred_son_golden(table, value) << "\n";
    }
    return exit_ok;
}

DumpFormat dump_format_of(const std::string& name) {
    if (name == "csv") return DumpFormat::csv;
    if (name == "dot") return DumpFormat::dot;
    if (name == "record-stream") return DumpFormat::record_stream;
    return DumpFormat::text;
}

int run_dump(TreeKind kind, std::uint32_t depth, const std::string& format,
             const BuildLimits& limits) {
    const TreeTable table = TreeTable::build(kind, depth, limits);
    dump_tree(std::cout, table, dump_format_of(format));
    return exit_ok;
}

int run_verify(const std::string& scope, std::uint64_t limit,
               std::uint32_t depth, const std::string& format,
               const BuildLimits& limits) {
    std::vector<Report> reports;
    if (scope == "codecs" || scope == "all")
        reports.push_back(verify_codecs(limit));
    if (scope == "theorems" || scope == "all") {
        reports.push_back(verify_tree_shape(depth, limits));
        reports.push_back(verify_theorems(TreeKind::white,
                                          Numeration::fibonacci, depth, limits));
        reports.push_back(verify_theorems(TreeKind::black,
                                          Numeration::fibonacci, depth, limits));
        reports.push_back(
            verify_theorems(TreeKind::white, Numeration::golden, depth, limits));
        reports.push_back(
            verify_theorems(TreeKind::black, Numeration::golden, depth, limits));
    }
    if (scope == "strips" || scope == "all")
        reports.push_back(verify_strip_partition(depth, limits));

    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    for (const Report& report : reports) {
        checks += report.checks.size();
        violations += report.total_violations();
    }

    const bool records = format == "record-stream";
    for (const Report& report : reports) {
        if (records) {
            write_records(std::cout, report);
        } else {
            write_text(std::cout, report);
            std::cout << "\n";
        }
    }
    if (!records) {
        if (violations == 0)
            std::cout << "verify: clean (" << checks << " checks, 0 violations)\n";
        else
            std::cout << "verify: FAILED (" << violations
                      << " violations across " << checks << " checks)\n";
    }
    return violations == 0 ? exit_ok : exit_violations;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numeration systems and son trees: spell, navigate, verify"};
    app.require_subcommand(1);

    std::uint32_t max_depth = 14;
    app.add_option("--max-depth", max_depth,
                   "depth cap for tree builds (overrides FIBTREE_MAX_DEPTH)")
        ->envname("FIBTREE_MAX_DEPTH");

    bool enc_fib = false, enc_golden = false;
    std::string enc_value;
    CLI::App* encode = app.add_subcommand("encode", "spell a value as a code word");
    encode->add_flag("--fib", enc_fib, "Zeckendorf spelling over 0/1");
    encode->add_flag("--golden", enc_golden, "golden spelling over 0/1/2");
    encode->add_option("value", enc_value, "value to spell")->required();

    bool dec_fib = false, dec_golden = false, dec_lenient = false;
    std::string dec_word;
    CLI::App* decode = app.add_subcommand("decode", "evaluate a code word");
    decode->add_flag("--fib", dec_fib, "Zeckendorf code word");
    decode->add_flag("--golden", dec_golden, "golden code word");
    decode->add_flag("--lenient", dec_lenient,
                     "accept non-canonical golden words; print the canonical "
                     "spelling when it differs");
    decode->add_option("word", dec_word, "code word to evaluate")->required();

    bool node_white = false, node_black = false;
    std::string node_value;
    CLI::App* node = app.add_subcommand("node", "describe one tree node");
    node->add_flag("--white", node_white, "three-son-rooted tree");
    node->add_flag("--black", node_black, "two-son-rooted tree");
    node->add_option("node", node_value, "node id (>= 1)")->required();

    bool dump_white = false, dump_black = false;
    std::uint32_t dump_depth = 0;
    std::string dump_format = "text";
    CLI::App* dump = app.add_subcommand("dump", "write a whole tree");
    dump->add_flag("--white", dump_white, "three-son-rooted tree");
    dump->add_flag("--black", dump_black, "two-son-rooted tree");
    dump->add_option("--depth", dump_depth, "levels 0..depth")->required();
    dump->add_option("--format", dump_format, "text | csv | dot | record-stream")
        ->check(CLI::IsMember({"text", "csv", "dot", "record-stream"}));

    std::string verify_scope = "all";
    std::uint64_t verify_limit = 100000;
    std::uint32_t verify_depth = 10;
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "run the verification sweeps");
    verify->add_option("--scope", verify_scope,
                       "codecs | theorems | strips | all")
        ->check(CLI::IsMember({"codecs", "theorems", "strips", "all"}));
    verify->add_option("--limit", verify_limit, "codec sweep bound");
    verify->add_option("--depth", verify_depth, "tree sweep depth");
    verify->add_option("--format", verify_format, "text | record-stream")
        ->check(CLI::IsMember({"text", "record-stream"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    const BuildLimits limits{max_depth};
    try {
        if (*encode) {
            if (enc_fib == enc_golden)
                return usage_error("encode needs exactly one of --fib/--golden");
            return run_encode(enc_fib, enc_value);
        }
        if (*decode) {
            if (dec_fib == dec_golden)
                return usage_error("decode needs exactly one of --fib/--golden");
            if (dec_lenient && dec_fib)
                return usage_error("--lenient applies only to --golden");
            return run_decode(dec_fib, dec_lenient, dec_word);
        }
        if (*node) {
            if (node_white == node_black)
                return usage_error("node needs exactly one of --white/--black");
            return run_node(node_white ? TreeKind::white : TreeKind::black,
                            node_value, limits);
        }
        if (*dump) {
            if (dump_white == dump_black)
                return usage_error("dump needs exactly one of --white/--black");
            return run_dump(dump_white ? TreeKind::white : TreeKind::black,
                            dump_depth, dump_format, limits);
        }
        if (*verify)
            return run_verify(verify_scope, verify_limit, verify_depth,
                              verify_format, limits);
    } catch (const depth_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_depth;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_value;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_violations;
    }
    return usage_error("no command given");
}
