// Command-line front end over the C API (gp.h).
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

int exit_code_for(gp_status status) {
    switch (status) {
    case GP_OK: return kExitOk;
    case GP_ERR_CAP_EXCEEDED: return kExitCapExceeded;
    default: return kExitInputError;
    }
}

int report_failure(gp_status status) {
    std::cerr << "error: " << gp_status_name(status) << ": " << gp_last_error() << "\n";
    return exit_code_for(status);
}

struct GraphHandle {
    gp_graph* g = nullptr;
    ~GraphHandle() { gp_graph_free(g); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { gp_string_free(s); }
};

struct InputOptions {
    std::string family;
    std::vector<int> params;
    std::string base_path; // cone_over_mis base graph file
    std::string input_path;
    bool from_stdin = false;
    std::string format = "auto"; // auto | g6 | edges
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--family", in.family, "generate a family member (see `family --list`)");
    cmd->add_option("--params", in.params, "family parameters")->delimiter(',');
    cmd->add_option("--base", in.base_path, "base graph file for cone_over_mis");
    cmd->add_option("--input", in.input_path, "read a graph from a file");
    cmd->add_flag("--stdin", in.from_stdin, "read a graph from standard input");
    cmd->add_option("--format", in.format, "input format: auto, g6, edges")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream file(path, std::ios::binary);
    if (!file) return false;
    std::ostringstream buffer;
    buffer << file.rdbuf();
    out = buffer.str();
    return true;
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string first_line;
    while (std::getline(in, first_line)) {
        if (first_line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    long n, m;
    char extra;
    std::istringstream line(first_line);
    return bool(line >> n >> m) && !(line >> extra);
}

gp_status parse_graph_text(const std::string& text, const std::string& format, gp_graph** out) {
    if (format == "g6") return gp_graph_from_g6(text.c_str(), out);
    if (format == "edges") return gp_graph_from_edge_list(text.c_str(), out);
    return looks_like_edge_list(text) ? gp_graph_from_edge_list(text.c_str(), out)
                                      : gp_graph_from_g6(text.c_str(), out);
}

// Returns an exit code; on success fills handle (and landmarks when the
// input is a generated family and the caller wants them).
int load_graph(const InputOptions& in, GraphHandle& handle, std::string* landmarks_json = nullptr) {
    const int sources = int(!in.family.empty()) + int(!in.input_path.empty()) + int(in.from_stdin);
    if (sources != 1) {
        std::cerr << "error: exactly one input source required (--family, --input or --stdin)\n";
        return kExitInputError;
    }
    if (!in.family.empty()) {
        GraphHandle base;
        if (in.family == "cone_over_mis") {
            if (in.base_path.empty()) {
                std::cerr << "error: cone_over_mis requires --base FILE\n";
                return kExitInputError;
            }
            std::string text;
            if (!read_file(in.base_path, text)) {
                std::cerr << "error: cannot read " << in.base_path << "\n";
                return kExitInputError;
            }
            if (gp_status s = parse_graph_text(text, in.format, &base.g)) return report_failure(s);
        } else if (!in.base_path.empty()) {
            std::cerr << "error: --base only applies to cone_over_mis\n";
            return kExitInputError;
        }
        std::vector<int32_t> params(in.params.begin(), in.params.end());
        OwnedString lm;
        if (gp_status s = gp_family(in.family.c_str(), params.data(), params.size(), base.g,
                                    &handle.g, landmarks_json ? &lm.s : nullptr))
            return report_failure(s);
        if (landmarks_json && lm.s) *landmarks_json = lm.s;
        return kExitOk;
    }
    std::string text;
    if (in.from_stdin) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else if (!read_file(in.input_path, text)) {
        std::cerr << "error: cannot read " << in.input_path << "\n";
        return kExitInputError;
    }
    if (gp_status s = parse_graph_text(text, in.format, &handle.g)) return report_failure(s);
    return kExitOk;
}

std::string witness_text(const std::vector<int32_t>& witness, int32_t len) {
    std::string out = "{";
    for (int32_t i = 0; i < len; ++i) {
        if (i) out += ", ";
        out += std::to_string(witness[size_t(i)]);
    }
    return out + "}";
}

int run_compute(const InputOptions& in, bool with_witness, bool as_json) {
    GraphHandle handle;
    if (int code = load_graph(in, handle)) return code;
    int32_t value = 0, wlen = 0;
    std::vector<int32_t> witness(size_t(gp_graph_order(handle.g)), 0);
    if (gp_status s = gp_number(handle.g, &value, witness.data(), &wlen))
        return report_failure(s);
    if (as_json) {
        std::string out = "{\"gp\": " + std::to_string(value);
        if (with_witness) {
            out += ", \"witness\": [";
            for (int32_t i = 0; i < wlen; ++i)
                out += (i ? "," : "") + std::to_string(witness[size_t(i)]);
            out += "]";
        }
        std::cout << out << "}\n";
    } else {
        std::cout << "gp = " << value << "\n";
        if (with_witness) std::cout << "witness = " << witness_text(witness, wlen) << "\n";
    }
    return kExitOk;
}

int run_scan(const std::string& what, const InputOptions& in, bool as_json, int threads) {
    GraphHandle handle;
    if (int code = load_graph(in, handle)) return code;
    OwnedString rows;
    const gp_render_format fmt = as_json ? GP_RENDER_JSON : GP_RENDER_CSV;
    const gp_status s = what == "vertices" ? gp_vertex_scan(handle.g, fmt, threads, &rows.s)
                                           : gp_edge_scan(handle.g, fmt, threads, &rows.s);
    if (s) return report_failure(s);
    std::cout << rows.s;
    return kExitOk;
}

int run_family(const InputOptions& in, const std::string& emit, const std::string& landmarks_path,
               bool list_only) {
    if (list_only) {
        std::cout << gp_family_names() << "\n";
        return kExitOk;
    }
    if (in.family.empty()) {
        std::cerr << "error: family verb requires --family NAME\n";
        return kExitInputError;
    }
    GraphHandle handle;
    std::string landmarks;
    if (int code = load_graph(in, handle, &landmarks)) return code;
    OwnedString text;
    if (gp_status s = emit == "edges" ? gp_graph_to_edge_list(handle.g, &text.s)
                                      : gp_graph_to_g6(handle.g, &text.s))
        return report_failure(s);
    std::cout << text.s;
    if (emit != "edges") std::cout << "\n";
    if (landmarks_path.empty()) {
        std::cerr << landmarks << "\n"; // side channel
    } else {
        std::ofstream out(landmarks_path);
        out << landmarks << "\n";
    }
    return kExitOk;
}

int run_audit(const std::string& g6_path, int samples, uint64_t seed, int max_n, double p,
              const std::string& suite, bool as_json, int threads) {
    const int sources = int(!g6_path.empty()) + int(samples > 0) + int(!suite.empty());
    if (sources != 1) {
        std::cerr << "error: audit needs exactly one of --g6-stream, --samples, --suite\n";
        return kExitInputError;
    }
    gp_audit_options options{};
    options.threads = threads;
    std::string stream_text;
    if (!g6_path.empty()) {
        if (!read_file(g6_path, stream_text)) {
            std::cerr << "error: cannot read " << g6_path << "\n";
            return kExitInputError;
        }
        options.mode = GP_AUDIT_G6_TEXT;
        options.g6_text = stream_text.c_str();
    } else if (samples > 0) {
        options.mode = GP_AUDIT_RANDOM;
        options.samples = samples;
        options.seed = seed;
        options.max_order = max_n;
        options.edge_probability = p;
    } else {
        if (suite != "paper") {
            std::cerr << "error: unknown suite '" << suite << "' (expected: paper)\n";
            return kExitInputError;
        }
        options.mode = GP_AUDIT_PAPER_SUITE;
    }
    OwnedString summary;
    int64_t violations = 0;
    if (gp_status s = gp_audit(&options, as_json ? GP_RENDER_JSON : GP_RENDER_CSV, &summary.s,
                               &violations))
        return report_failure(s);
    std::cout << summary.s;
    return violations == 0 ? kExitOk : kExitViolation;
}

int run_oracle(const InputOptions& in, bool compare) {
    GraphHandle handle;
    if (int code = load_graph(in, handle)) return code;
    int32_t oracle_value = 0;
    if (gp_status s = gp_brute_force(handle.g, &oracle_value, nullptr, nullptr))
        return report_failure(s);
    std::cout << "gp = " << oracle_value << "\n";
    if (!compare) return kExitOk;
    int32_t solver_value = 0;
    if (gp_status s = gp_number(handle.g, &solver_value, nullptr, nullptr))
        return report_failure(s);
    std::cout << "solver = " << solver_value << "\n";
    if (solver_value != oracle_value) {
        std::cout << "MISMATCH\n";
        return kExitViolation;
    }
    std::cout << "match\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact general position toolkit"};
    app.require_subcommand(1);

    InputOptions compute_in;
    bool compute_witness = false, compute_json = false;
    auto* compute = app.add_subcommand("compute", "compute the gp number of a graph");
    add_input_options(compute, compute_in);
    compute->add_flag("--witness", compute_witness, "also print a maximum witness set");
    compute->add_flag("--json", compute_json, "JSON output");

    InputOptions scan_in;
    std::string scan_what;
    bool scan_json = false;
    int scan_threads = 1;
    auto* scan = app.add_subcommand("scan", "per-element deletion records");
    scan->add_option("what", scan_what, "vertices or edges")
        ->required()
        ->check(CLI::IsMember({"vertices", "edges"}));
    add_input_options(scan, scan_in);
    scan->add_flag("--json", scan_json, "JSON output (default CSV)");
    scan->add_option("--threads", scan_threads, "worker count (default 1)");

    InputOptions family_in;
    std::string family_emit = "g6", family_landmarks;
    bool family_list = false;
    auto* family = app.add_subcommand("family", "emit a generated family member");
    add_input_options(family, family_in);
    family->add_option("--emit", family_emit, "output format: g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}));
    family->add_option("--landmarks-out", family_landmarks,
                       "write the landmark map to a file instead of stderr");
    family->add_flag("--list", family_list, "list family names");

    std::string audit_g6, audit_suite;
    int audit_samples = 0, audit_max_n = 10, audit_threads = 1;
    uint64_t audit_seed = 1;
    double audit_p = 0.5;
    bool audit_json = false;
    auto* audit = app.add_subcommand("audit", "run the theorem audit over a corpus");
    audit->add_option("--g6-stream", audit_g6, "graph6 stream file, one graph per line");
    audit->add_option("--samples", audit_samples, "number of seeded random connected graphs");
    audit->add_option("--seed", audit_seed, "sampler seed");
    audit->add_option("--max-n", audit_max_n, "maximum order for sampled graphs");
    audit->add_option("--p", audit_p, "edge probability for sampled graphs");
    audit->add_option("--suite", audit_suite, "named corpus: paper");
    audit->add_flag("--json", audit_json, "JSON summary");
    audit->add_option("--threads", audit_threads, "worker count (default 1)");

    InputOptions oracle_in;
    bool oracle_compare = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force gp value (independent oracle)");
    add_input_options(oracle, oracle_in);
    oracle->add_flag("--compare", oracle_compare,
                     "also run the main solver and fail on mismatch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (compute->parsed()) return run_compute(compute_in, compute_witness, compute_json);
    if (scan->parsed()) return run_scan(scan_what, scan_in, scan_json, scan_threads);
    if (family->parsed()) return run_family(family_in, family_emit, family_landmarks, family_list);
    if (audit->parsed())
        return run_audit(audit_g6, audit_samples, audit_seed, audit_max_n, audit_p, audit_suite,
                         audit_json, audit_threads);
    if (oracle->parsed()) return run_oracle(oracle_in, oracle_compare);
    return kExitInputError;
}
