#include "hodge/incidence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hodge {

Orientation::Orientation(const Graph& g, std::vector<std::pair<int, int>> directed)
    : dir_(std::move(directed)) {
    if (dir_.size() != g.m())
        throw std::invalid_argument("Orientation: size does not match edge count");
    for (std::size_t e = 0; e < dir_.size(); ++e) {
        auto [t, h] = dir_[e];
        auto [u, v] = g.edge(e);
        bool same = (t == u && h == v) || (t == v && h == u);
        if (!same || t == h)
            throw std::invalid_argument("Orientation: edge " + std::to_string(e) +
                                        " does not match the graph");
    }
}

Orientation Orientation::with_edge_flipped(std::size_t e) const {
    Orientation o = *this;
    std::swap(o.dir_[e].first, o.dir_[e].second);
    return o;
}

Orientation canonical_orientation(const Graph& g) {
    std::vector<std::pair<int, int>> dir;
    dir.reserve(g.m());
    for (const auto& [u, v] : g.edges())
        dir.emplace_back(std::min(u, v), std::max(u, v));
    return Orientation(g, std::move(dir));
}

IntMatrix build_B(const Graph& g, const Orientation& o) {
    if (g.m() == 0) throw std::invalid_argument("build_B: graph has no edges");
    IntMatrix B(g.m(), g.n());
    for (std::size_t e = 0; e < g.m(); ++e) {
        B.at(e, o.tail(e)) = BigInt(-1);
        B.at(e, o.head(e)) = BigInt(1);
    }
    return B;
}

int triangle_edge_sign(const Triangle& t, int tail, int head) {
    // Consecutive pairs of the cycle i->j->k->i.
    if ((tail == t.i && head == t.j) || (tail == t.j && head == t.k) ||
        (tail == t.k && head == t.i))
        return 1;
    return -1;
}

IntMatrix build_C(const Graph& g, const Orientation& o) {
    const auto tris = enumerate_triangles(g);
    IntMatrix C(tris.size(), g.m());
    for (std::size_t e = 0; e < g.m(); ++e) {
        int tl = o.tail(e), hd = o.head(e);
        for (std::size_t r = 0; r < tris.size(); ++r)
            if (tris[r].contains(tl) && tris[r].contains(hd))
                C.at(r, e) = BigInt(triangle_edge_sign(tris[r], tl, hd));
    }
    return C;
}

}  // namespace hodge
