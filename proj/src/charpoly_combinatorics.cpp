#include "hodge/charpoly_combinatorics.hpp"

#include <algorithm>
#include <limits>

#include "hodge/spectral.hpp"

namespace hodge {

namespace {

BigInt binom(long long n, int k) {
    if (n < k) return BigInt(0);
    BigInt r(1);
    for (int i = 0; i < k; ++i) r *= BigInt(n - i);
    for (int i = 2; i <= k; ++i) r = r.div_exact(BigInt(i));
    return r;
}

}  // namespace

ClosedFormCoeffs coeffs_closed_form(const Graph& g) {
    if (g.m() == 0) throw std::invalid_argument("coeffs_closed_form: graph has no edges");
    const std::size_t m = g.m();
    const auto tris = enumerate_triangles(g);
    const long long t = static_cast<long long>(tris.size());

    std::vector<long long> delta(m), weight(m);
    for (std::size_t e = 0; e < m; ++e) {
        delta[e] = static_cast<long long>(triangle_degree_edge(g, e));
        weight[e] = delta[e] + 2;
    }

    // Elementary symmetric sums of the diagonal weights, folded incrementally.
    BigInt e1, e2, e3;
    for (std::size_t e = 0; e < m; ++e) {
        BigInt w(weight[e]);
        e3 += e2 * w;
        e2 += e1 * w;
        e1 += w;
    }

    BigInt degree_pairs, degree_triples_term;
    for (int v = 0; v < g.n(); ++v) {
        degree_pairs += binom(g.degree(v), 2);
        // Triangles of the loop-free reduction through the star at v: triples
        // of neighbours with no edge among them. (Triples meeting >= 2
        // neighbour edges need the full inclusion-exclusion, not just the
        // first-order term Delta(v)*(d-2).)
        const auto& nb = g.neighbors(v);
        long long independent = 0;
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b])) continue;
                for (std::size_t c = b + 1; c < nb.size(); ++c)
                    if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c])) ++independent;
            }
        degree_triples_term += BigInt(independent);
    }

    ClosedFormCoeffs out;
    out.pair_product_sum = e2;
    out.degree_pair_sum = degree_pairs;
    out.triangle_term = BigInt(3 * t);
    out.c1 = -e1;
    out.c2 = e2 - degree_pairs + BigInt(3 * t);
    out.c31 = -e3;

    BigInt c32;
    for (std::size_t e = 0; e < m; ++e) {
        long long nbh = static_cast<long long>(edge_neighborhood_size(g, e));
        BigInt factor = degree_pairs - BigInt(3 * t) - BigInt(nbh) + BigInt(2 * delta[e]);
        c32 += factor * BigInt(weight[e]);
    }
    out.c32 = c32;
    out.c33 = BigInt(-2) * degree_triples_term;
    out.c3 = out.c31 + out.c32 + out.c33;
    return out;
}

std::size_t BasicSubgraph::order() const {
    std::size_t n = isolated.size() + 2 * matching.size();
    for (const auto& c : cycles) n += c.size();
    return n;
}

namespace {

struct Enumerator {
    const SignedLoopGraph& slg;
    std::size_t k;
    std::uint64_t budget;
    const std::function<void(const BasicSubgraph&)>& visit;

    std::vector<std::vector<std::pair<std::size_t, int>>> adj;  // (neighbor, sign), sorted
    std::vector<char> used;
    std::uint64_t work = 0;
    BasicSubgraph cur;

    Enumerator(const SignedLoopGraph& s, std::size_t k_, std::uint64_t b,
               const std::function<void(const BasicSubgraph&)>& v)
        : slg(s), k(k_), budget(b), visit(v) {
        adj.resize(slg.m);
        for (const auto& [i, j] : slg.pos_edges) {
            adj[i].emplace_back(j, 1);
            adj[j].emplace_back(i, 1);
        }
        for (const auto& [i, j] : slg.neg_edges) {
            adj[i].emplace_back(j, -1);
            adj[j].emplace_back(i, -1);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        used.assign(slg.m, 0);
    }

    void tick() {
        if (++work > budget) throw OracleBudgetExceeded();
    }

    void run() {
        cur.sign = 1;
        cur.vertex_weight = 1;
        descend(0, k);
    }

    void descend(std::size_t v, std::size_t need) {
        tick();
        if (need == 0) {
            visit(cur);
            return;
        }
        if (v >= slg.m) return;
        if (used[v]) {
            descend(v + 1, need);
            return;
        }

        // v not in the subgraph
        descend(v + 1, need);

        // v as an isolated vertex, weighted by its loop count
        unsigned long long w = slg.loops[v];
        if (cur.vertex_weight > std::numeric_limits<unsigned long long>::max() / w)
            throw std::overflow_error("coeff_ck_oracle: vertex weight product overflow");
        cur.isolated.push_back(v);
        cur.vertex_weight *= w;
        descend(v + 1, need - 1);
        cur.vertex_weight /= w;
        cur.isolated.pop_back();

        // v matched to a higher unused neighbor; edge sign squares away
        if (need >= 2) {
            for (const auto& [u, sgn] : adj[v]) {
                (void)sgn;
                if (u <= v || used[u]) continue;
                used[u] = 1;
                cur.matching.emplace_back(v, u);
                cur.sign = -cur.sign;
                descend(v + 1, need - 2);
                cur.sign = -cur.sign;
                cur.matching.pop_back();
                used[u] = 0;
            }
        }

        // v as the least vertex of a cycle
        if (need >= 3) {
            used[v] = 1;
            std::vector<std::size_t> path{v};
            extend_cycle(v, need, path, 1);
            used[v] = 0;
        }
    }

    void extend_cycle(std::size_t root, std::size_t need_total,
                      std::vector<std::size_t>& path, int path_sign) {
        tick();
        const std::size_t end = path.back();
        if (path.size() + 1 > need_total) return;
        for (const auto& [u, sgn] : adj[end]) {
            if (u <= root || used[u]) continue;
            used[u] = 1;
            path.push_back(u);
            // close the cycle; direction canonicalised by second < last
            if (path.size() >= 3 && path[1] < u) {
                for (const auto& [w2, closing] : adj[u]) {
                    if (w2 != root) continue;
                    int csign = path_sign * sgn * closing;
                    int parity_factor = (path.size() % 2 == 1) ? csign : -csign;
                    cur.cycles.push_back(path);
                    cur.sign *= parity_factor;
                    descend(root + 1, need_total - path.size());
                    cur.sign *= parity_factor;
                    cur.cycles.pop_back();
                    break;
                }
            }
            extend_cycle(root, need_total, path, path_sign * sgn);
            path.pop_back();
            used[u] = 0;
        }
    }
};

}  // namespace

void enumerate_basic_subgraphs(const SignedLoopGraph& slg, std::size_t k,
                               std::uint64_t work_budget,
                               const std::function<void(const BasicSubgraph&)>& visit) {
    if (k > slg.m) return;
    Enumerator en(slg, k, work_budget, visit);
    en.run();
}

BigInt coeff_ck_oracle(const Graph& g, const Orientation& o, std::size_t k,
                       std::uint64_t work_budget) {
    if (k > g.m()) throw std::invalid_argument("coeff_ck_oracle: k exceeds edge count");
    SignedLoopGraph slg = build_signed_loop_graph(g, o);
    BigInt total;
    enumerate_basic_subgraphs(slg, k, work_budget, [&](const BasicSubgraph& b) {
        unsigned long long pow2 = 1ull << b.cycles.size();
        BigInt term(static_cast<long long>(b.vertex_weight));
        term *= BigInt(static_cast<long long>(pow2));
        if (b.sign < 0) term = -term;
        total += term;
    });
    if (k % 2 == 1) total = -total;
    return total;
}

bool loop_shift_check(const Graph& g, const Orientation& o) {
    SignedLoopGraph slg = build_signed_loop_graph(g, o);
    CharPoly with_loops = charpoly_of(slg.adjacency());
    IntMatrix reduced = slg.adjacency();
    for (std::size_t i = 0; i < reduced.rows(); ++i) reduced.at(i, i) -= BigInt(2);
    CharPoly shifted = charpoly_of(reduced);
    return with_loops.coeffs == poly_compose_shift(shifted.coeffs, -2);
}

}  // namespace hodge
