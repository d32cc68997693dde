#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hodge/graph.hpp"
#include "hodge/incidence.hpp"

namespace hodge {

/// Input rejected at parse time; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    std::size_t line_number;
};

struct ParsedInput {
    Graph graph;
    Orientation orientation;
    std::vector<std::string> names;  // vertex id -> original token
};

/// One edge per line, "u v"; '#' starts a comment; an optional leading header
/// "vertices N" switches to literal 0..N-1 integer labels (the only way to get
/// isolated vertices). Without it, tokens are names, relabelled in order of
/// first appearance. Orientation is first token -> second token.
ParsedInput parse_edgelist(std::string_view text);

/// Inverse of parse_edgelist up to names: header plus one "tail head" line per
/// edge, using integer ids. Original names are kept in comments.
std::string emit_edgelist(const Graph& g, const Orientation& o,
                          const std::vector<std::string>& names = {});

/// Standard graph6 decoding of a single line; canonical orientation downstream,
/// edge order lexicographic.
Graph parse_graph6(std::string_view line);

struct CheckResult {
    std::string name;
    bool pass;
    std::string kind;      // "exact" or "float"
    double measured = 0.0; // residual or measured quantity, when meaningful
    double tolerance = 0.0;
    std::string note;
};

struct VerifyParams {
    double cluster_tol = 1e-8;
    std::uint64_t oracle_budget = 10'000'000;
    std::uint64_t seed = 42;
    std::size_t random_vectors = 100;
    std::size_t random_orientations = 3;
};

/// The whole invariant battery against a single graph: incidence identities,
/// construction equivalence, orientation invariance, spectral consistency,
/// coefficient formulas, bounds and projectors where applicable.
std::vector<CheckResult> verify_graph(const Graph& g, const Orientation& o,
                                      const VerifyParams& params = {});

struct CliOptions {
    std::string command;
    std::optional<std::string> edgelist_text;
    std::optional<std::string> graph6;
    std::optional<std::string> family;
    std::vector<std::string> batch_lines;  // graph6, one per line
    bool batch = false;
    std::string input_label = "inline";
    std::string format = "json";
    double cluster_tol = 1e-8;
    std::uint64_t oracle_budget = 10'000'000;
    std::uint64_t seed = 42;
};

struct RunReport {
    nlohmann::json report;  // keys: input, command, results, checks, timings
    int exit_code = 0;      // 0 ok, 1 check failure, 2 input error
    std::string rendered;   // formatted per CliOptions::format
};

/// Dispatches one command: matrix, spectrum, charpoly, nullity, triangles,
/// bounds, family, verify. Never throws for input errors -- they come back as
/// exit code 2 with the message in the report.
RunReport run_command(const CliOptions& opts);

}  // namespace hodge
