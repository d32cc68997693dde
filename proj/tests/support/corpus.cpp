#include "support/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hodge/cli_io.hpp"

namespace hodge::testsupport {

const char* worked_example_edgelist() {
    return "v2 v1\n"
           "v1 v3\n"
           "v4 v2\n"
           "v4 v3\n"
           "v4 v5\n"
           "v4 v6\n"
           "v4 v7\n"
           "v7 v8\n"
           "v4 v8\n";
}

Graph worked_example_graph() { return parse_edgelist(worked_example_edgelist()).graph; }

Orientation worked_example_orientation() {
    return parse_edgelist(worked_example_edgelist()).orientation;
}

std::vector<long long> worked_example_h() {
    return {
        2, -1, -1, 0, 0, 0, 0, 0, 0,  //
        -1, 2,  0, 1, 0, 0, 0, 0, 0,  //
        -1, 0,  2, 1, 1, 1, 1, 0, 1,  //
        0,  1,  1, 2, 1, 1, 1, 0, 1,  //
        0,  0,  1, 1, 2, 1, 1, 0, 1,  //
        0,  0,  1, 1, 1, 2, 1, 0, 1,  //
        0,  0,  1, 1, 1, 1, 3, 0, 0,  //
        0,  0,  0, 0, 0, 0, 0, 3, 0,  //
        0,  0,  1, 1, 1, 1, 0, 0, 3,
    };
}

std::vector<long long> worked_example_charpoly() {
    return {1, -21, 178, -802, 2105, -3293, 2996, -1452, 288, 0};
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, std::move(e));
}

Graph complete_graph_t(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph cocktail_party_graph(int k) {
    int n = 2 * k;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i != k) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

namespace {

// Canonical key: lexicographically smallest edge bitmask over all vertex
// permutations. Pair (i<j) maps to bit j*(j-1)/2 + i; fits 64 bits up to n=11.
std::uint64_t canonical_key(const Graph& g) {
    const int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t key = 0;
        for (const auto& [u, v] : g.edges()) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            key |= 1ull << (b * (b - 1) / 2 + a);
        }
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_key(int n, std::uint64_t key) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (key & (1ull << (j * (j - 1) / 2 + i))) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) { return components(g).count == 1; }

}  // namespace

std::vector<Graph> exhaustive_connected_upto(int max_n) {
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::set<std::uint64_t> seen;
        for (std::uint64_t mask = 1; mask < (1ull << pairs); ++mask) {
            Graph g = graph_from_key(n, mask);
            if (!is_connected(g)) continue;
            if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Graph> exhaustive_connected_max_edges(int max_edges) {
    // Grow connected graphs one edge at a time: either a chord between
    // existing vertices or a pendant edge to a fresh vertex reaches every
    // connected graph.
    std::vector<Graph> out;
    std::map<int, std::set<std::uint64_t>> seen_by_n;
    std::vector<Graph> level{complete_graph_t(2)};
    seen_by_n[2].insert(canonical_key(level.front()));
    out.push_back(level.front());
    for (int m = 2; m <= max_edges; ++m) {
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v)
                    if (!g.adjacent(u, v)) {
                        auto edges = g.edges();
                        edges.emplace_back(u, v);
                        Graph h(g.n(), std::move(edges));
                        auto key = canonical_key(h);
                        if (seen_by_n[h.n()].insert(key).second) next.push_back(std::move(h));
                    }
            for (int u = 0; u < g.n(); ++u) {
                auto edges = g.edges();
                edges.emplace_back(u, g.n());
                Graph h(g.n() + 1, std::move(edges));
                auto key = canonical_key(h);
                if (seen_by_n[h.n()].insert(key).second) next.push_back(std::move(h));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

Graph random_graph(std::mt19937_64& rng, int n, std::size_t m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min(m, pairs.size()));
    std::sort(pairs.begin(), pairs.end());
    return Graph(n, std::move(pairs));
}

std::vector<Graph> random_corpus(std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    while (out.size() < count) {
        int n = 2 + static_cast<int>(rng() % 11);  // 2..12
        // Density capped at 30 edges: covers complete graphs through K_8 and
        // half-dense 12-vertex graphs while exact polynomials stay quick.
        std::size_t max_m = std::min<std::size_t>(static_cast<std::size_t>(n) * (n - 1) / 2, 30);
        std::size_t m = 1 + rng() % max_m;
        out.push_back(random_graph(rng, n, m));
    }
    return out;
}

Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> dir;
    dir.reserve(g.m());
    for (const auto& [u, v] : g.edges()) {
        if (rng() & 1) dir.emplace_back(u, v);
        else dir.emplace_back(v, u);
    }
    return Orientation(g, std::move(dir));
}

std::optional<std::size_t> diameter_oracle(const Graph& g) {
    const int n = g.n();
    if (n == 0) return std::nullopt;
    const int inf = 1 << 28;
    std::vector<int> d(static_cast<std::size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0;
    for (const auto& [u, v] : g.edges())
        d[static_cast<std::size_t>(u) * n + v] = d[static_cast<std::size_t>(v) * n + u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(i) * n + j] =
                    std::min(d[static_cast<std::size_t>(i) * n + j],
                             d[static_cast<std::size_t>(i) * n + k] + d[static_cast<std::size_t>(k) * n + j]);
    int best = 0;
    for (int x : d) {
        if (x >= inf) return std::nullopt;
        best = std::max(best, x);
    }
    return static_cast<std::size_t>(best);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(63 + (n & 0x3f)));
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

bool spectra_match(const Spectrum& expected, const Spectrum& actual, double tol) {
    if (expected.entries.size() != actual.entries.size()) return false;
    double top = expected.entries.empty() ? 1.0 : std::max(1.0, expected.entries.front().value);
    for (std::size_t i = 0; i < expected.entries.size(); ++i) {
        if (expected.entries[i].multiplicity != actual.entries[i].multiplicity) return false;
        if (std::abs(expected.entries[i].value - actual.entries[i].value) > tol * top) return false;
    }
    return true;
}

std::string spectrum_to_string(const Spectrum& sp) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < sp.entries.size(); ++i) {
        if (i) out << ", ";
        out << sp.entries[i].value << ":" << sp.entries[i].multiplicity;
    }
    out << "}";
    return out.str();
}

}  // namespace hodge::testsupport
