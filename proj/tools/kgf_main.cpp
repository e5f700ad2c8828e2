// Command line front end for kgf presentations: validation, structural
// diagnostics, the four moves, saturation, pairing blocks and DOT export.
//
// Exit codes: 0 success, 1 validation or precondition failure (a report is
// printed), 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgf/kgf.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) {
            comma = csv.size();
        }
        if (comma > pos) {
            out.push_back(csv.substr(pos, comma - pos));
        }
        pos = comma + 1;
    }
    return out;
}

std::optional<kgf::ParseResult> parse_file(const std::string& path, int& code) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read '" << path << "'\n";
        code = kUsage;
        return std::nullopt;
    }
    auto parsed = kgf::parse(*text);
    if (!parsed.ok()) {
        std::cerr << path << ": parse errors\n" << kgf::to_text(parsed.diagnostics);
        code = kUsage;
        return std::nullopt;
    }
    return parsed;
}

std::optional<kgf::KGraph> load_kgraph(const std::string& path, int& code) {
    auto parsed = parse_file(path, code);
    if (!parsed) {
        return std::nullopt;
    }
    auto built = kgf::build_kgraph(parsed->presentation->skeleton, parsed->presentation->squares);
    if (!built.ok()) {
        std::cerr << path << ": not a valid k-graph\n" << kgf::to_text(built.report);
        code = kFailure;
        return std::nullopt;
    }
    return std::move(*built.kgraph);
}

bool write_stream(const std::string& path, const std::string& content, std::ostream& fallback) {
    if (path.empty()) {
        fallback << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    out << content;
    return true;
}

std::string forward_map_text(const kgf::MoveResult& result) {
    std::ostringstream os;
    for (const auto& v : result.output.vertices()) {
        auto it = result.forward_map.vertices.find(v);
        os << "vertex " << v << " = "
           << (it == result.forward_map.vertices.end() ? "-" : it->second) << "\n";
    }
    for (const auto& [id, e] : result.output.edges()) {
        os << "edge " << id << " =";
        auto it = result.forward_map.edges.find(id);
        if (it == result.forward_map.edges.end()) {
            os << " -";
        } else {
            for (const auto& p : it->second) {
                os << " " << p;
            }
        }
        os << "\n";
    }
    return os.str();
}

int emit_move(const kgf::MoveOutcome& outcome, const std::string& out_path,
              const std::string& map_path) {
    if (!outcome.ok()) {
        std::cerr << kgf::to_string(outcome.error->kind) << ": " << outcome.error->detail << "\n";
        return kFailure;
    }
    if (!write_stream(out_path, kgf::serialize(outcome.result->output), std::cout)) {
        return kUsage;
    }
    if (!write_stream(map_path, forward_map_text(*outcome.result), std::cerr)) {
        return kUsage;
    }
    return kOk;
}

int run_validate(const std::string& path, std::size_t kg4_max_len) {
    int code = kOk;
    auto parsed = parse_file(path, code);
    if (!parsed) {
        return code;
    }
    auto built = kgf::build_kgraph(parsed->presentation->skeleton, parsed->presentation->squares);
    if (!built.ok()) {
        std::cout << "invalid: square table violates (KG1)-(KG3)\n" << kgf::to_text(built.report);
        return kFailure;
    }
    auto kg4 = kgf::check_kg4(*built.kgraph, kg4_max_len);
    if (!kg4.ok) {
        std::cout << "invalid: unique factorization fails up to length " << kg4_max_len << "\n"
                  << kgf::to_text(kg4);
        return kFailure;
    }
    std::cout << "valid k-graph (squares checked, factorization unique to length "
              << kg4_max_len << ")\n";
    return kOk;
}

int run_info(const std::string& path) {
    int code = kOk;
    auto kg = load_kgraph(path, code);
    if (!kg) {
        return code;
    }
    const auto& sk = kg->skeleton();
    std::cout << "k: " << sk.k() << "\n";
    std::cout << "vertices: " << sk.vertices().size() << "\n";
    std::cout << "edges: " << sk.edges().size();
    for (int c = 1; c <= sk.k(); ++c) {
        std::cout << (c == 1 ? " (" : ", ") << "color " << c << ": " << sk.edge_count(c);
    }
    std::cout << ")\n";
    std::cout << "squares: " << kg->squares().size() / 2 << "\n";

    auto sink_report = kgf::sinks(*kg);
    std::cout << "sinks:";
    if (sink_report.entries.empty()) {
        std::cout << " none";
    }
    for (const auto& [v, c] : sink_report.entries) {
        std::cout << " " << v << "(color " << c << ")";
    }
    std::cout << "\n";

    auto source_report = kgf::sources(*kg);
    std::cout << "sources:";
    if (source_report.entries.empty()) {
        std::cout << " none";
    }
    for (const auto& [v, c] : source_report.entries) {
        std::cout << " " << v << "(color " << c << ")";
    }
    std::cout << "\n";

    auto complete = kgf::complete_edges(*kg);
    std::cout << "complete edges:";
    if (complete.empty()) {
        std::cout << " none";
    }
    for (const auto& ce : complete) {
        std::cout << " {";
        for (std::size_t i = 0; i < ce.edges.size(); ++i) {
            std::cout << (i ? "," : "") << ce.edges[i];
        }
        std::cout << "}" << ce.source << "->" << ce.range;
    }
    std::cout << "\n";

    for (int c = 1; c <= sk.k(); ++c) {
        auto m = kgf::adjacency_matrix(*kg, c);
        std::cout << "adjacency matrix color " << c << " (rows = range, order:";
        for (const auto& v : m.vertex_order) {
            std::cout << " " << v;
        }
        std::cout << "):\n";
        for (const auto& row : m.counts) {
            std::cout << " ";
            for (long n : row) {
                std::cout << " " << n;
            }
            std::cout << "\n";
        }
    }
    auto commute = kgf::matrices_commute(*kg);
    std::cout << "adjacency matrices commute: " << (commute.ok ? "yes" : "no") << "\n";
    if (!commute.ok) {
        std::cout << "  witness: colors (" << commute.color_i << "," << commute.color_j
                  << ") at range " << commute.range_vertex << ", source " << commute.source_vertex
                  << ": " << commute.left << " vs " << commute.right << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-colored directed multigraphs with factorization squares"};
    app.require_subcommand(1);
    int exit_code = kOk;

    auto* validate = app.add_subcommand("validate", "check the k-graph axioms");
    {
        auto file = std::make_shared<std::string>();
        auto max_len = std::make_shared<std::size_t>(3);
        validate->add_option("file", *file, "kgf presentation")->required();
        validate->add_option("--kg4-max-len", *max_len,
                             "brute-force unique-factorization check up to this path length");
        validate->callback(
            [&exit_code, file, max_len] { exit_code = run_validate(*file, *max_len); });
    }

    auto* info = app.add_subcommand("info", "counts, sinks, sources, matrices");
    {
        auto file = std::make_shared<std::string>();
        info->add_option("file", *file, "kgf presentation")->required();
        info->callback([&exit_code, file] { exit_code = run_info(*file); });
    }

    auto* insplit = app.add_subcommand("insplit", "in-split at a vertex");
    {
        auto file = std::make_shared<std::string>();
        auto vertex = std::make_shared<std::string>();
        auto e1 = std::make_shared<std::string>();
        auto e2 = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto map = std::make_shared<std::string>();
        insplit->add_option("file", *file)->required();
        insplit->add_option("--vertex", *vertex, "vertex to split")->required();
        insplit->add_option("--e1", *e1, "comma separated in-edges for v^1")->required();
        insplit->add_option("--e2", *e2, "comma separated in-edges for v^2")->required();
        insplit->add_option("--out", *out, "write the output graph here instead of stdout");
        insplit->add_option("--map", *map, "write the forward map here instead of stderr");
        insplit->callback([=, &exit_code] {
            int code = kOk;
            auto kg = load_kgraph(*file, code);
            if (!kg) {
                exit_code = code;
                return;
            }
            if (!kg->skeleton().has_vertex(*vertex)) {
                std::cerr << "error: unknown vertex '" << *vertex << "'\n";
                exit_code = kFailure;
                return;
            }
            kgf::InsplitPartition part{split_csv(*e1), split_csv(*e2)};
            for (const auto* side : {&part.e1, &part.e2}) {
                for (const auto& id : *side) {
                    if (!kg->skeleton().has_edge(id)) {
                        std::cerr << "error: unknown edge '" << id << "'\n";
                        exit_code = kFailure;
                        return;
                    }
                }
            }
            exit_code = emit_move(kgf::insplit(*kg, *vertex, part), *out, *map);
        });
    }

    auto* delay = app.add_subcommand("delay", "delay an edge");
    {
        auto file = std::make_shared<std::string>();
        auto edge = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto map = std::make_shared<std::string>();
        delay->add_option("file", *file)->required();
        delay->add_option("--edge", *edge, "edge to delay")->required();
        delay->add_option("--out", *out, "write the output graph here instead of stdout");
        delay->add_option("--map", *map, "write the forward map here instead of stderr");
        delay->callback([=, &exit_code] {
            int code = kOk;
            auto kg = load_kgraph(*file, code);
            if (!kg) {
                exit_code = code;
                return;
            }
            if (!kg->skeleton().has_edge(*edge)) {
                std::cerr << "error: unknown edge '" << *edge << "'\n";
                exit_code = kFailure;
                return;
            }
            exit_code = emit_move(kgf::delay(*kg, *edge), *out, *map);
        });
    }

    auto* delete_sink = app.add_subcommand("delete-sink", "delete a sink's down-set");
    {
        auto file = std::make_shared<std::string>();
        auto vertex = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto map = std::make_shared<std::string>();
        delete_sink->add_option("file", *file)->required();
        delete_sink->add_option("--vertex", *vertex, "sink to delete")->required();
        delete_sink->add_option("--out", *out, "write the output graph here instead of stdout");
        delete_sink->add_option("--map", *map, "write the forward map here instead of stderr");
        delete_sink->callback([=, &exit_code] {
            int code = kOk;
            auto kg = load_kgraph(*file, code);
            if (!kg) {
                exit_code = code;
                return;
            }
            if (!kg->skeleton().has_vertex(*vertex)) {
                std::cerr << "error: unknown vertex '" << *vertex << "'\n";
                exit_code = kFailure;
                return;
            }
            exit_code = emit_move(kgf::delete_sink(*kg, *vertex), *out, *map);
        });
    }

    auto* reduce = app.add_subcommand("reduce", "contract a complete edge at a vertex");
    {
        auto file = std::make_shared<std::string>();
        auto vertex = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto map = std::make_shared<std::string>();
        reduce->add_option("file", *file)->required();
        reduce->add_option("--vertex", *vertex, "vertex to remove")->required();
        reduce->add_option("--out", *out, "write the output graph here instead of stdout");
        reduce->add_option("--map", *map, "write the forward map here instead of stderr");
        reduce->callback([=, &exit_code] {
            int code = kOk;
            auto kg = load_kgraph(*file, code);
            if (!kg) {
                exit_code = code;
                return;
            }
            if (!kg->skeleton().has_vertex(*vertex)) {
                std::cerr << "error: unknown vertex '" << *vertex << "'\n";
                exit_code = kFailure;
                return;
            }
            exit_code = emit_move(kgf::reduce(*kg, *vertex), *out, *map);
        });
    }

    auto* saturation = app.add_subcommand("saturation", "hereditary saturated closure");
    {
        auto file = std::make_shared<std::string>();
        auto vertices = std::make_shared<std::string>();
        saturation->add_option("file", *file)->required();
        saturation->add_option("--vertices", *vertices, "comma separated seed set")->required();
        saturation->callback([=, &exit_code] {
            int code = kOk;
            auto kg = load_kgraph(*file, code);
            if (!kg) {
                exit_code = code;
                return;
            }
            std::set<std::string> seed;
            for (const auto& v : split_csv(*vertices)) {
                if (!kg->skeleton().has_vertex(v)) {
                    std::cerr << "error: unknown vertex '" << v << "'\n";
                    exit_code = kFailure;
                    return;
                }
                seed.insert(v);
            }
            for (const auto& v : kgf::saturation(*kg, seed)) {
                std::cout << v << "\n";
            }
            exit_code = kOk;
        });
    }

    auto* pairing = app.add_subcommand("pairing", "pairing blocks of a vertex's in-edges");
    {
        auto file = std::make_shared<std::string>();
        auto vertex = std::make_shared<std::string>();
        pairing->add_option("file", *file)->required();
        pairing->add_option("--vertex", *vertex)->required();
        pairing->callback([=, &exit_code] {
            int code = kOk;
            auto kg = load_kgraph(*file, code);
            if (!kg) {
                exit_code = code;
                return;
            }
            if (!kg->skeleton().has_vertex(*vertex)) {
                std::cerr << "error: unknown vertex '" << *vertex << "'\n";
                exit_code = kFailure;
                return;
            }
            for (const auto& block : kgf::pairing_blocks(*kg, *vertex).blocks) {
                for (std::size_t i = 0; i < block.size(); ++i) {
                    std::cout << (i ? " " : "") << block[i];
                }
                std::cout << "\n";
            }
            exit_code = kOk;
        });
    }

    auto* dot = app.add_subcommand("export-dot", "emit the 1-skeleton as DOT");
    {
        auto file = std::make_shared<std::string>();
        dot->add_option("file", *file)->required();
        dot->callback([=, &exit_code] {
            int code = kOk;
            auto kg = load_kgraph(*file, code);
            if (!kg) {
                exit_code = code;
                return;
            }
            std::cout << kgf::export_dot(*kg);
            exit_code = kOk;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return exit_code;
}
