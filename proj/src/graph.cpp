#include "hodge/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace hodge {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    neighbors_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge " + std::to_string(i) + " endpoint out of range");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at edge " + std::to_string(i));
        if (adj_[static_cast<std::size_t>(u) * n_ + v])
            throw std::invalid_argument("Graph: duplicate edge at index " + std::to_string(i));
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
        adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
        neighbors_[u].push_back(v);
        neighbors_[v].push_back(u);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [a, b] = edges_[i];
        if ((a == u && b == v) || (a == v && b == u)) return i;
    }
    return std::nullopt;
}

bool Graph::is_complete() const {
    return m() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

bool Graph::is_regular() const {
    for (int u = 1; u < n_; ++u)
        if (degree(u) != degree(0)) return false;
    return true;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
    std::vector<Triangle> out;
    // Each triangle i<j<k is discovered once, from edge {i,j} with k > j.
    for (const auto& e : g.edges()) {
        int u = std::min(e.first, e.second);
        int v = std::max(e.first, e.second);
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        std::size_t a = 0, b = 0;
        while (a < nu.size() && b < nv.size()) {
            if (nu[a] < nv[b]) ++a;
            else if (nu[a] > nv[b]) ++b;
            else {
                if (nu[a] > v) out.push_back({u, v, nu[a]});
                ++a;
                ++b;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t triangle_degree_edge(const Graph& g, std::size_t e) {
    if (e >= g.m()) throw std::out_of_range("triangle_degree_edge: edge index");
    auto [u, v] = g.edge(e);
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::size_t a = 0, b = 0, count = 0;
    while (a < nu.size() && b < nv.size()) {
        if (nu[a] < nv[b]) ++a;
        else if (nu[a] > nv[b]) ++b;
        else { ++count; ++a; ++b; }
    }
    return count;
}

std::size_t triangle_degree_vertex(const Graph& g, int u) {
    if (u < 0 || u >= g.n()) throw std::out_of_range("triangle_degree_vertex: vertex index");
    const auto& nb = g.neighbors(u);
    std::size_t count = 0;
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (g.adjacent(nb[a], nb[b])) ++count;
    return count;
}

std::size_t edge_neighborhood_size(const Graph& g, std::size_t e) {
    if (e >= g.m()) throw std::out_of_range("edge_neighborhood_size: edge index");
    auto [u, v] = g.edge(e);
    return static_cast<std::size_t>(g.degree(u) + g.degree(v) - 2);
}

Components components(const Graph& g) {
    Components c{0, std::vector<int>(g.n(), -1)};
    for (int s = 0; s < g.n(); ++s) {
        if (c.label[s] != -1) continue;
        int id = static_cast<int>(c.count++);
        std::queue<int> q;
        q.push(s);
        c.label[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (c.label[w] == -1) {
                    c.label[w] = id;
                    q.push(w);
                }
        }
    }
    return c;
}

std::optional<std::size_t> diameter(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    std::size_t best = 0;
    std::vector<int> dist(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        for (int v = 0; v < g.n(); ++v) {
            if (dist[v] == -1) return std::nullopt;
            best = std::max(best, static_cast<std::size_t>(dist[v]));
        }
    }
    return best;
}

}  // namespace hodge
