#include "graphcomp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcomp/bipartite.hpp"
#include "graphcomp/combinatorics.hpp"
#include "graphcomp/multipartite.hpp"
#include "graphcomp/oracle.hpp"

namespace graphcomp {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDisagree = 2;

// bell(14) is about 1.9e8 partitions; beyond that the oracle needs --force.
constexpr std::int64_t kOracleVertexLimit = 14;

enum class Format { plain, csv, json };

struct GlobalOpts {
    Format format = Format::plain;
    std::string method; // empty means the command default
    bool all_methods = false;
    bool force = false;
    bool stable = false;
};

struct MethodResult {
    std::string method;
    BigInt value;
};

struct ScalarRecord {
    std::string query;
    std::vector<MethodResult> results;
    bool all_methods = false;
    double elapsed_ms = 0.0;
};

class Timer {
public:
    double stop_ms() const {
        auto delta = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(delta).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// CLI numeric arguments are unbounded decimals; parse exactly, then require
// the value to fit the machine range the algorithms index with.
std::uint64_t parse_u64_arg(const std::string& text, const char* what) {
    BigInt value;
    try {
        value = BigInt::from_string(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(what) + ": \"" + text + "\" is not an integer");
    }
    if (value.is_negative())
        throw std::invalid_argument(std::string(what) + " must be non-negative");
    if (!value.fits_uint64())
        throw std::invalid_argument(std::string(what) + " is too large to evaluate");
    return value.to_uint64();
}

int parse_int_arg(const std::string& text, const char* what) {
    std::uint64_t value = parse_u64_arg(text, what);
    if (value > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw std::invalid_argument(std::string(what) + " is too large to evaluate");
    return static_cast<int>(value);
}

std::string validate_method(const std::string& requested, const std::string& fallback,
                            std::initializer_list<const char*> allowed, const char* command) {
    if (requested.empty()) return fallback;
    for (const char* name : allowed) {
        if (requested == name) return requested;
    }
    std::string message = "invalid method \"" + requested + "\" for " + command + " (choose from";
    for (const char* name : allowed) message += std::string(" ") + name;
    message += ")";
    throw std::invalid_argument(message);
}

bool all_agree(const std::vector<MethodResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [&](const MethodResult& r) { return r.value == results.front().value; });
}

int emit_scalar(const ScalarRecord& record, const GlobalOpts& opts, std::ostream& out,
                std::ostream& err) {
    const bool agree = all_agree(record.results);
    switch (opts.format) {
    case Format::plain:
        if (record.all_methods) {
            for (const auto& r : record.results) out << r.method << " " << r.value << "\n";
            if (agree) {
                out << "agree " << record.results.front().value << "\n";
            } else {
                out << "disagree\n";
            }
        } else {
            out << record.results.front().value << "\n";
        }
        break;
    case Format::csv:
        out << "query,method,result\n";
        for (const auto& r : record.results) {
            out << csv_quote(record.query) << "," << r.method << "," << r.value << "\n";
        }
        break;
    case Format::json: {
        ordered_json doc;
        doc["query"] = record.query;
        if (record.all_methods) {
            ordered_json methods = ordered_json::array();
            for (const auto& r : record.results) {
                methods.push_back({{"method", r.method}, {"result", r.value.to_string()}});
            }
            doc["methods"] = std::move(methods);
            doc["agree"] = agree;
            if (agree) doc["result"] = record.results.front().value.to_string();
        } else {
            doc["method"] = record.results.front().method;
            doc["result"] = record.results.front().value.to_string();
        }
        if (!opts.stable) doc["elapsed_ms"] = record.elapsed_ms;
        out << doc.dump() << "\n";
        break;
    }
    }
    if (!agree) {
        err << "error: methods disagree on " << record.query << "\n";
        return kExitDisagree;
    }
    return kExitOk;
}

int emit_atable(const std::string& query, const std::string& method, const ATable& table,
                bool both, bool identical, double elapsed_ms, const GlobalOpts& opts,
                std::ostream& out, std::ostream& err) {
    switch (opts.format) {
    case Format::plain:
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << " ";
                out << row[i];
            }
            out << "\n";
        }
        if (both) out << (identical ? "identical\n" : "differ\n");
        break;
    case Format::csv:
        out << "m,i,value\n";
        for (std::size_t m = 0; m < table.rows.size(); ++m) {
            for (std::size_t i = 0; i < table.rows[m].size(); ++i) {
                out << m << "," << i << "," << table.rows[m][i] << "\n";
            }
        }
        if (both) err << (identical ? "identical\n" : "differ\n");
        break;
    case Format::json: {
        ordered_json doc;
        doc["query"] = query;
        doc["method"] = method;
        ordered_json rows = ordered_json::array();
        for (const auto& row : table.rows) {
            ordered_json cells = ordered_json::array();
            for (const auto& value : row) cells.push_back(value.to_string());
            rows.push_back(std::move(cells));
        }
        doc["rows"] = std::move(rows);
        if (both) doc["identical"] = identical;
        if (!opts.stable) doc["elapsed_ms"] = elapsed_ms;
        out << doc.dump() << "\n";
        break;
    }
    }
    if (both && !identical) {
        err << "error: a-table constructions disagree\n";
        return kExitDisagree;
    }
    return kExitOk;
}

int run_bipartite(const std::string& m_arg, const std::string& n_arg, const GlobalOpts& opts,
                  std::ostream& out, std::ostream& err) {
    const int m = parse_int_arg(m_arg, "m");
    const std::uint64_t n = parse_u64_arg(n_arg, "n");
    const std::string query = "bipartite " + std::to_string(m) + " " + std::to_string(n);

    const bool oracle_ok =
        n <= static_cast<std::uint64_t>(kOracleVertexLimit) &&
        static_cast<std::int64_t>(m) + static_cast<std::int64_t>(n) <= kOracleVertexLimit;

    auto run_method = [&](const std::string& method) -> BigInt {
        if (method == "formula") return count_bipartite(m, n);
        if (method == "egf") {
            if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
                throw std::invalid_argument("n is too large for the egf method");
            return count_bipartite_via_egf(m, static_cast<int>(n));
        }
        if (!oracle_ok && !opts.force)
            throw std::invalid_argument("oracle method needs m+n <= " +
                                        std::to_string(kOracleVertexLimit) +
                                        " (use --force to override)");
        if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
            throw std::invalid_argument("n is too large for the oracle method");
        return count_compositions(complete_bipartite(m, static_cast<int>(n)));
    };

    Timer timer;
    ScalarRecord record{query, {}, opts.all_methods, 0.0};
    if (opts.all_methods) {
        record.results.push_back({"formula", run_method("formula")});
        record.results.push_back({"egf", run_method("egf")});
        if (oracle_ok || opts.force) record.results.push_back({"oracle", run_method("oracle")});
    } else {
        const std::string method =
            validate_method(opts.method, "formula", {"formula", "egf", "oracle"}, "bipartite");
        record.results.push_back({method, run_method(method)});
    }
    record.elapsed_ms = timer.stop_ms();
    return emit_scalar(record, opts, out, err);
}

int run_multipartite(const std::vector<std::string>& part_args, const GlobalOpts& opts,
                     std::ostream& out, std::ostream& err) {
    std::vector<int> parts;
    parts.reserve(part_args.size());
    std::string query = "multipartite";
    for (const auto& arg : part_args) {
        parts.push_back(parse_int_arg(arg, "part size"));
        query += " " + std::to_string(parts.back());
    }
    const PartSpec spec(std::move(parts));
    const bool oracle_ok = spec.total_vertices() <= kOracleVertexLimit;

    auto run_method = [&](const std::string& method) -> BigInt {
        if (method == "egf") return count_multipartite(spec);
        if (!oracle_ok && !opts.force)
            throw std::invalid_argument("oracle method needs total vertices <= " +
                                        std::to_string(kOracleVertexLimit) +
                                        " (use --force to override)");
        return count_compositions(complete_multipartite(spec));
    };

    Timer timer;
    ScalarRecord record{query, {}, opts.all_methods, 0.0};
    if (opts.all_methods) {
        record.results.push_back({"egf", run_method("egf")});
        if (oracle_ok || opts.force) record.results.push_back({"oracle", run_method("oracle")});
    } else {
        const std::string method =
            validate_method(opts.method, "egf", {"egf", "oracle"}, "multipartite");
        record.results.push_back({method, run_method(method)});
    }
    record.elapsed_ms = timer.stop_ms();
    return emit_scalar(record, opts, out, err);
}

int run_connected_bipartite(const std::string& m_arg, const std::string& n_arg,
                            const GlobalOpts& opts, std::ostream& out, std::ostream& err) {
    const int m = parse_int_arg(m_arg, "m");
    const int n = parse_int_arg(n_arg, "n");
    const std::string query = "connected-bipartite " + std::to_string(m) + " " + std::to_string(n);
    if (m == 0 && n == 0)
        throw std::domain_error("connected-bipartite: (0,0) is outside the domain");

    const bool oracle_ok = static_cast<std::int64_t>(m) * n <= 20;
    auto run_method = [&](const std::string& method) -> BigInt {
        if (method == "egf") return connected_bipartite_count(m, n);
        return connected_bipartite_bruteforce(m, n); // enforces the m*n <= 20 limit itself
    };

    Timer timer;
    ScalarRecord record{query, {}, opts.all_methods, 0.0};
    if (opts.all_methods) {
        record.results.push_back({"egf", run_method("egf")});
        if (oracle_ok) record.results.push_back({"oracle", run_method("oracle")});
    } else {
        const std::string method =
            validate_method(opts.method, "egf", {"egf", "oracle"}, "connected-bipartite");
        record.results.push_back({method, run_method(method)});
    }
    record.elapsed_ms = timer.stop_ms();
    return emit_scalar(record, opts, out, err);
}

int run_atable(const std::string& max_arg, bool both, const GlobalOpts& opts, std::ostream& out,
               std::ostream& err) {
    const int max_row = parse_int_arg(max_arg, "M");
    const std::string query = "atable " + std::to_string(max_row);
    both = both || opts.all_methods;

    Timer timer;
    if (both) {
        ATable stirling = a_table_stirling(max_row);
        ATable recurrence = a_table_recurrence(max_row);
        const bool identical = stirling.rows == recurrence.rows;
        return emit_atable(query, "both", stirling, true, identical, timer.stop_ms(), opts, out,
                           err);
    }
    const std::string method =
        validate_method(opts.method, "stirling", {"stirling", "recurrence"}, "atable");
    ATable table = method == "stirling" ? a_table_stirling(max_row) : a_table_recurrence(max_row);
    return emit_atable(query, method, table, false, true, timer.stop_ms(), opts, out, err);
}

int run_graph(const std::string& path, bool use_stdin, const GlobalOpts& opts, std::ostream& out,
              std::ostream& err, std::istream& in) {
    std::string text;
    std::string query;
    if (use_stdin) {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
        query = "graph --stdin";
    } else {
        std::ifstream file(path);
        if (!file) throw std::runtime_error("cannot open graph file \"" + path + "\"");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
        query = "graph " + path;
    }

    Timer timer;
    Graph g = from_edge_list(text);
    if (g.vertex_count() > kOracleVertexLimit) {
        err << "warning: " << g.vertex_count() << " vertices means enumerating bell("
            << g.vertex_count() << ") set partitions; this may take a very long time\n";
        if (!opts.force)
            throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                        " vertices, above the " +
                                        std::to_string(kOracleVertexLimit) +
                                        "-vertex enumeration guard (use --force to override)");
    }
    ScalarRecord record{query, {{"oracle", count_compositions(g)}}, false, 0.0};
    record.elapsed_ms = timer.stop_ms();
    return emit_scalar(record, opts, out, err);
}

int run_stirling(const std::string& n_arg, const std::string& k_arg, const GlobalOpts& opts,
                 std::ostream& out, std::ostream& err) {
    const std::uint64_t n = parse_u64_arg(n_arg, "n");
    const std::uint64_t k = parse_u64_arg(k_arg, "k");
    const std::string query = "stirling " + std::to_string(n) + " " + std::to_string(k);
    if (k <= n && n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw std::invalid_argument("n is too large to evaluate");
    Timer timer;
    BigInt value = k > n ? BigInt(0)
                         : stirling2(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    ScalarRecord record{query, {{"triangle", std::move(value)}}, false, timer.stop_ms()};
    return emit_scalar(record, opts, out, err);
}

int run_bell(const std::string& n_arg, const GlobalOpts& opts, std::ostream& out,
             std::ostream& err) {
    const std::uint64_t n = parse_u64_arg(n_arg, "n");
    if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw std::invalid_argument("n is too large to evaluate");
    const std::string query = "bell " + std::to_string(n);
    Timer timer;
    ScalarRecord record{
        query, {{"triangle", bell(static_cast<std::int64_t>(n))}}, false, timer.stop_ms()};
    return emit_scalar(record, opts, out, err);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"Exact counting of graph compositions (partitions of a vertex set into "
                 "connected blocks), with cross-checking closed-form, generating-function "
                 "and enumeration methods"};
    app.name("graphcomp");
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts opts;
    const std::map<std::string, Format> format_names{
        {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", opts.format, "Output format: plain, csv or json")
        ->transform(CLI::CheckedTransformer(format_names));
    app.add_option("--method", opts.method, "Computation method (meaning depends on subcommand)");
    app.add_flag("--all-methods", opts.all_methods,
                 "Run every applicable method and fail on disagreement");
    app.add_flag("--force", opts.force, "Override enumeration size guards");
    app.add_flag("--stable", opts.stable, "Suppress timing output (byte-stable output)");

    std::function<int()> action;

    auto* bip = app.add_subcommand("bipartite", "Count compositions of K_{m,n}");
    std::string bip_m, bip_n;
    bip->add_option("m", bip_m, "Size of the first side")->required();
    bip->add_option("n", bip_n, "Size of the second side")->required();
    bip->callback([&]() { action = [&]() { return run_bipartite(bip_m, bip_n, opts, out, err); }; });

    auto* multi = app.add_subcommand("multipartite", "Count compositions of K_{a1,...,an}");
    std::vector<std::string> multi_parts;
    multi->add_option("parts", multi_parts, "Part sizes a1 ... an")->required()->expected(-1);
    multi->callback(
        [&]() { action = [&]() { return run_multipartite(multi_parts, opts, out, err); }; });

    auto* atab = app.add_subcommand("atable", "Print the coefficient table a_{m,i}");
    std::string atab_max;
    bool atab_both = false;
    atab->add_option("M", atab_max, "Maximum row")->required();
    atab->add_flag("--both", atab_both, "Build by both constructions and compare");
    atab->callback(
        [&]() { action = [&]() { return run_atable(atab_max, atab_both, opts, out, err); }; });

    auto* conn = app.add_subcommand("connected-bipartite",
                                    "Count connected labeled bipartite graphs on parts (m,n)");
    std::string conn_m, conn_n;
    conn->add_option("m", conn_m, "Size of the first side")->required();
    conn->add_option("n", conn_n, "Size of the second side")->required();
    conn->callback(
        [&]() { action = [&]() { return run_connected_bipartite(conn_m, conn_n, opts, out, err); }; });

    auto* graph = app.add_subcommand("graph", "Count compositions of an edge-list graph");
    std::string graph_path;
    bool graph_stdin = false;
    graph->add_option("path", graph_path, "Edge-list file");
    graph->add_flag("--stdin", graph_stdin, "Read the edge list from standard input");
    graph->callback([&]() {
        action = [&]() {
            if (graph_stdin != graph_path.empty())
                throw std::invalid_argument("graph: give exactly one of a path or --stdin");
            return run_graph(graph_path, graph_stdin, opts, out, err, in);
        };
    });

    auto* stir = app.add_subcommand("stirling", "Stirling number of the second kind S(n,k)");
    std::string stir_n, stir_k;
    stir->add_option("n", stir_n, "Set size")->required();
    stir->add_option("k", stir_k, "Block count")->required();
    stir->callback(
        [&]() { action = [&]() { return run_stirling(stir_n, stir_k, opts, out, err); }; });

    auto* bell_cmd = app.add_subcommand("bell", "Bell number (total set partitions)");
    std::string bell_n;
    bell_cmd->add_option("n", bell_n, "Set size")->required();
    bell_cmd->callback([&]() { action = [&]() { return run_bell(bell_n, opts, out, err); }; });

    std::vector<std::string> parse_args(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(parse_args.begin(), parse_args.end());
    try {
        app.parse(parse_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const bool uses_all_methods = bip->parsed() || multi->parsed() || conn->parsed() ||
                                  atab->parsed();
    if (opts.all_methods && !uses_all_methods) {
        err << "error: --all-methods is not applicable to this subcommand\n";
        return kExitError;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace graphcomp
