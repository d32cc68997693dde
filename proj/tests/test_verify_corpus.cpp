#include <doctest.h>

#include <string>

#include "hodge/cli_io.hpp"
#include "support/corpus.hpp"

using namespace hodge;
namespace ts = hodge::testsupport;

// The full invariant battery over the exhaustive small corpus plus a random
// slice: every check of every module must hold on every graph.
TEST_CASE("verify passes on the whole small corpus") {
    std::vector<Graph> corpus = ts::exhaustive_connected_upto(6);
    std::vector<Graph> rnd = ts::random_corpus(50, 4242);
    corpus.insert(corpus.end(), rnd.begin(), rnd.end());

    std::size_t graphs = 0, checks = 0;
    for (const Graph& g : corpus) {
        Orientation o = canonical_orientation(g);
        VerifyParams params;
        params.random_vectors = 20;  // the acceptance suite covers the full count
        for (const CheckResult& c : verify_graph(g, o, params)) {
            ++checks;
            CHECK_MESSAGE(c.pass, c.name, " failed on n=", g.n(), " m=", g.m(),
                          " (measured ", c.measured, ", tol ", c.tolerance, ") ", c.note);
        }
        ++graphs;
    }
    CHECK(graphs == corpus.size());
    CHECK(checks > 20 * corpus.size());
}
