#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodge/cli_io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph Helmholtzian (Hodge 1-Laplacian) spectra toolkit"};

    std::string command;
    app.add_option("command", command,
                   "matrix | spectrum | charpoly | nullity | triangles | bounds | family | verify")
        ->required();

    std::string input_file, graph6, family, batch_file;
    app.add_option("--input", input_file, "edge list file (one 'u v' per line)");
    app.add_option("--graph6", graph6, "graph6-encoded graph");
    app.add_option("--family", family, "family spec, e.g. windmill:2;2,2 or split:4,2");
    app.add_option("--batch", batch_file, "file of graph6 lines, one report per line");

    hodge::CliOptions opts;
    app.add_option("--format", opts.format, "json | csv | plain")->default_val("json");
    app.add_option("--cluster-tol", opts.cluster_tol, "eigenvalue clustering tolerance")
        ->default_val(1e-8);
    app.add_option("--oracle-budget", opts.oracle_budget,
                   "work budget for the coefficient oracle")
        ->default_val(10'000'000);
    app.add_option("--seed", opts.seed, "seed for randomised checks")->default_val(42);

    CLI11_PARSE(app, argc, argv);

    opts.command = command;
    try {
        if (!input_file.empty()) {
            opts.edgelist_text = read_file(input_file);
            opts.input_label = input_file;
        }
        if (!graph6.empty()) opts.graph6 = graph6;
        if (!family.empty()) opts.family = family;
        if (!batch_file.empty()) {
            opts.batch = true;
            std::string content = read_file(batch_file);
            std::istringstream lines(content);
            std::string line;
            while (std::getline(lines, line)) opts.batch_lines.push_back(line);
        }
    } catch (const std::exception& err) {
        std::cerr << err.what() << "\n";
        return 2;
    }

    hodge::RunReport report = hodge::run_command(opts);
    std::cout << report.rendered;
    return report.exit_code;
}
