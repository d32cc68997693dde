#include "hodge/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace hodge {

namespace {

std::vector<std::pair<int, int>> sorted_edges(std::vector<std::pair<int, int>> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("FamilySpec: bad integer '" + std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        out.push_back(parse_int(s.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == s.size()) break;
    }
    return out;
}

// Splits at top-level occurrences of sep, respecting parentheses.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("FamilySpec: empty spec");

    FamilySpec spec;
    if (text.starts_with("join(") && text.ends_with(")")) {
        auto inner = text.substr(5, text.size() - 6);
        auto args = split_top_level(inner, ',');
        if (args.size() != 2) throw std::invalid_argument("FamilySpec: join takes two factors");
        spec.variant = Variant::join;
        spec.left = std::make_shared<FamilySpec>(parse(args[0]));
        spec.right = std::make_shared<FamilySpec>(parse(args[1]));
        return spec;
    }
    if (text.starts_with("hseq(") && text.ends_with(")")) {
        auto inner = text.substr(5, text.size() - 6);
        auto pieces = split_top_level(inner, ';');
        if (pieces.empty()) throw std::invalid_argument("FamilySpec: hseq needs a seed");
        spec.variant = Variant::h_integral_seq;
        spec.seed = std::make_shared<FamilySpec>(parse(pieces[0]));
        for (std::size_t i = 1; i < pieces.size(); ++i) {
            auto st = parse_int_list(pieces[i]);
            if (st.size() != 2) throw std::invalid_argument("FamilySpec: hseq step needs s,t");
            spec.steps.emplace_back(st[0], st[1]);
        }
        return spec;
    }

    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("FamilySpec: expected '<name>:<args>' in '" + std::string(text) + "'");
    std::string_view name = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);

    if (name == "complete") {
        spec.variant = Variant::complete;
        spec.order = parse_int(args);
        if (spec.order < 1) throw std::invalid_argument("FamilySpec: complete order must be >= 1");
    } else if (name == "multipartite" || name == "bipartite") {
        spec.variant = Variant::multipartite;
        spec.parts = parse_int_list(args);
        if (name == "bipartite" && spec.parts.size() != 2)
            throw std::invalid_argument("FamilySpec: bipartite takes two parts");
        for (int p : spec.parts)
            if (p < 1) throw std::invalid_argument("FamilySpec: part sizes must be >= 1");
    } else if (name == "windmill") {
        auto halves = split_top_level(args, ';');
        if (halves.size() != 2) throw std::invalid_argument("FamilySpec: windmill is n0;n1,...,nk");
        spec.variant = Variant::windmill;
        spec.hub = parse_int(halves[0]);
        spec.parts = parse_int_list(halves[1]);
        if (spec.hub < 1) throw std::invalid_argument("FamilySpec: windmill hub must be >= 1");
        for (int p : spec.parts)
            if (p < 1) throw std::invalid_argument("FamilySpec: part sizes must be >= 1");
    } else if (name == "split") {
        auto st = parse_int_list(args);
        if (st.size() != 2) throw std::invalid_argument("FamilySpec: split takes s,t");
        spec.variant = Variant::complete_split;
        spec.split_s = st[0];
        spec.split_t = st[1];
        if (spec.split_s < 1 || spec.split_t < 1)
            throw std::invalid_argument("FamilySpec: split sizes must be >= 1");
    } else if (name == "threshold") {
        spec.variant = Variant::threshold;
        for (char c : args) {
            if (c == ',') continue;
            if (c != '0' && c != '1')
                throw std::invalid_argument("FamilySpec: threshold code must be binary");
            spec.bits.push_back(c - '0');
        }
        if (spec.bits.empty()) throw std::invalid_argument("FamilySpec: empty threshold code");
    } else {
        throw std::invalid_argument("FamilySpec: unknown family '" + std::string(name) + "'");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    auto join_ints = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    switch (variant) {
        case Variant::complete: return "complete:" + std::to_string(order);
        case Variant::multipartite: return "multipartite:" + join_ints(parts);
        case Variant::windmill: return "windmill:" + std::to_string(hub) + ";" + join_ints(parts);
        case Variant::complete_split:
            return "split:" + std::to_string(split_s) + "," + std::to_string(split_t);
        case Variant::threshold: {
            std::string s = "threshold:";
            for (int b : bits) s += static_cast<char>('0' + b);
            return s;
        }
        case Variant::join: return "join(" + left->to_string() + "," + right->to_string() + ")";
        case Variant::h_integral_seq: {
            std::string s = "hseq(" + seed->to_string();
            for (const auto& [a, b] : steps)
                s += ";" + std::to_string(a) + "," + std::to_string(b);
            return s + ")";
        }
    }
    return {};
}

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph multipartite_graph(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of[v++] = static_cast<int>(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph windmill_graph(int hub, const std::vector<int>& parts) {
    int n = hub;
    for (int p : parts) n += p;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < hub; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    int base = hub;
    for (int p : parts) {
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) edges.emplace_back(base + i, base + j);
        base += p;
    }
    return Graph(n, sorted_edges(std::move(edges)));
}

Graph threshold_graph(const std::vector<int>& bits) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < static_cast<int>(bits.size()); ++i)
        if (bits[i] == 1)
            for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
    return Graph(static_cast<int>(bits.size()), sorted_edges(std::move(edges)));
}

}  // namespace

Graph join_graphs(const Graph& g1, const Graph& g2) {
    if (g1.n() == 0 || g2.n() == 0) throw std::invalid_argument("join_graphs: empty factor");
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + g1.n(), v + g1.n());
    for (int u = 0; u < g1.n(); ++u)
        for (int v = 0; v < g2.n(); ++v) edges.emplace_back(u, g1.n() + v);
    return Graph(g1.n() + g2.n(), sorted_edges(std::move(edges)));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + g1.n(), v + g1.n());
    return Graph(g1.n() + g2.n(), std::move(edges));
}

Graph add_isolated_vertices(const Graph& g, int count) {
    if (count < 0) throw std::invalid_argument("add_isolated_vertices: negative count");
    return Graph(g.n() + count, g.edges());
}

Graph gen_family(const FamilySpec& spec) {
    switch (spec.variant) {
        case FamilySpec::Variant::complete:
            return complete_graph(spec.order);
        case FamilySpec::Variant::multipartite:
            return multipartite_graph(spec.parts);
        case FamilySpec::Variant::windmill:
            return windmill_graph(spec.hub, spec.parts);
        case FamilySpec::Variant::complete_split:
            return windmill_graph(spec.split_t, std::vector<int>(spec.split_s, 1));
        case FamilySpec::Variant::threshold:
            return threshold_graph(spec.bits);
        case FamilySpec::Variant::join:
            return join_graphs(gen_family(*spec.left), gen_family(*spec.right));
        case FamilySpec::Variant::h_integral_seq: {
            auto graphs = h_integral_sequence(*spec.seed, spec.steps);
            return graphs.back();
        }
    }
    throw std::logic_error("gen_family: unhandled variant");
}

namespace {

Spectrum merge_exact(std::map<long long, long long, std::greater<>> multi) {
    Spectrum sp;
    sp.kind = Spectrum::Kind::exact_integer;
    for (const auto& [value, mult] : multi)
        if (mult > 0) sp.entries.push_back({static_cast<double>(value), static_cast<std::size_t>(mult)});
    return sp;
}

Spectrum windmill_spectrum(long long hub, const std::vector<int>& parts) {
    long long n = hub;
    for (int p : parts) n += p;
    std::map<long long, long long, std::greater<>> multi;
    multi[n] += hub * (hub + 1) / 2;
    multi[hub] += hub * (static_cast<long long>(parts.size()) - 1);
    for (int p : parts) multi[hub + p] += (2 * hub + p) * (p - 1) / 2;
    return merge_exact(std::move(multi));
}

}  // namespace

Spectrum closed_form_spectrum(const FamilySpec& spec) {
    switch (spec.variant) {
        case FamilySpec::Variant::complete: {
            if (spec.order < 2) throw std::domain_error("closed_form_spectrum: K_1 has no edges");
            std::map<long long, long long, std::greater<>> multi;
            multi[spec.order] = static_cast<long long>(spec.order) * (spec.order - 1) / 2;
            return merge_exact(std::move(multi));
        }
        case FamilySpec::Variant::complete_split:
            // s = 1 degenerates to the complete graph on t+1 vertices
            if (spec.split_s == 1) {
                FamilySpec k;
                k.variant = FamilySpec::Variant::complete;
                k.order = spec.split_t + 1;
                return closed_form_spectrum(k);
            }
            return windmill_spectrum(spec.split_t, std::vector<int>(spec.split_s, 1));
        case FamilySpec::Variant::windmill:
            return windmill_spectrum(spec.hub, spec.parts);
        case FamilySpec::Variant::multipartite: {
            const auto& parts = spec.parts;
            long long k = static_cast<long long>(parts.size());
            if (k < 2) throw std::domain_error("closed_form_spectrum: one part has no edges");
            long long n = 0;
            for (int p : parts) n += p;
            std::map<long long, long long, std::greater<>> multi;
            multi[n] += k * (k - 1) / 2;
            for (int p : parts) multi[n - p] += (k - 1) * (p - 1);
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j) {
                    long long ni = parts[i], nj = parts[j];
                    multi[n - ni - nj] += ni * nj - ni - nj + 1;
                }
            return merge_exact(std::move(multi));
        }
        case FamilySpec::Variant::threshold:
            return threshold_spectrum_iterative(spec.bits);
        default:
            throw std::domain_error("closed_form_spectrum: no closed form for " + spec.to_string());
    }
}

Spectrum n_matrix_spectrum(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("n_matrix_spectrum: empty part list");
    long long n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("n_matrix_spectrum: parts must be >= 1");
        n += p;
    }
    std::map<long long, long long, std::greater<>> multi;
    multi[n + 1] += 1;
    for (int p : parts) multi[p + 1] += p - 1;
    multi[1] += static_cast<long long>(parts.size()) - 1;
    return merge_exact(std::move(multi));
}

HelmholtzianMatrix join_block_matrix(const Graph& g1, const Graph& g2) {
    if (g1.n() == 0 || g2.n() == 0) throw std::invalid_argument("join_block_matrix: empty factor");
    const std::size_t m1 = g1.m(), m2 = g2.m();
    const std::size_t n1 = g1.n(), n2 = g2.n();
    const std::size_t m = m1 + m2 + n1 * n2;
    HelmholtzianMatrix h{IntMatrix(m, m), HelmholtzianBuild::join_blocks};

    if (m1 > 0) {
        HelmholtzianMatrix h1 = build_H_direct(g1, canonical_orientation(g1));
        for (std::size_t i = 0; i < m1; ++i)
            for (std::size_t j = 0; j < m1; ++j) h.mat.at(i, j) = h1.mat.at(i, j);
        for (std::size_t i = 0; i < m1; ++i) h.mat.at(i, i) += BigInt(static_cast<long long>(n2));
    }
    if (m2 > 0) {
        HelmholtzianMatrix h2 = build_H_direct(g2, canonical_orientation(g2));
        for (std::size_t i = 0; i < m2; ++i)
            for (std::size_t j = 0; j < m2; ++j) h.mat.at(m1 + i, m1 + j) = h2.mat.at(i, j);
        for (std::size_t i = 0; i < m2; ++i)
            h.mat.at(m1 + i, m1 + i) += BigInt(static_cast<long long>(n1));
    }
    // Cross block over V(G1) x V(G2): complement adjacency in each coordinate,
    // diagonal d1(u) + d2(v) + 2.
    const std::size_t base = m1 + m2;
    for (std::size_t u = 0; u < n1; ++u)
        for (std::size_t v = 0; v < n2; ++v) {
            std::size_t row = base + u * n2 + v;
            h.mat.at(row, row) =
                BigInt(g1.degree(static_cast<int>(u)) + g2.degree(static_cast<int>(v)) + 2);
            for (std::size_t v2 = 0; v2 < n2; ++v2)
                if (v2 != v && !g2.adjacent(static_cast<int>(v), static_cast<int>(v2)))
                    h.mat.at(row, base + u * n2 + v2) = BigInt(1);
            for (std::size_t u2 = 0; u2 < n1; ++u2)
                if (u2 != u && !g1.adjacent(static_cast<int>(u), static_cast<int>(u2)))
                    h.mat.at(row, base + u2 * n2 + v) = BigInt(1);
        }
    return h;
}

Spectrum join_regular_spectrum(const Graph& g1, const Graph& g2) {
    if (g1.n() == 0 || g2.n() == 0) throw std::invalid_argument("join_regular_spectrum: empty factor");
    if (!g1.is_regular() || !g2.is_regular())
        throw std::invalid_argument("join_regular_spectrum: factors must be regular");
    const double r1 = g1.n() ? g1.degree(0) : 0.0;
    const double r2 = g2.n() ? g2.degree(0) : 0.0;
    const double n1 = g1.n(), n2 = g2.n();

    auto h_values = [](const Graph& g) {
        std::vector<double> vals;
        if (g.m() > 0) {
            HelmholtzianMatrix h = build_H_direct(g, canonical_orientation(g));
            vals = sym_eigen(h.mat.to_double(), h.m()).values;
        }
        return vals;
    };
    auto adjacency_values = [](const Graph& g) {
        std::vector<double> a(static_cast<std::size_t>(g.n()) * g.n(), 0.0);
        for (const auto& [u, v] : g.edges()) {
            a[static_cast<std::size_t>(u) * g.n() + v] = 1.0;
            a[static_cast<std::size_t>(v) * g.n() + u] = 1.0;
        }
        return sym_eigen(a, g.n()).values;  // descending; front is the regularity
    };

    std::vector<double> values;
    for (double l : h_values(g1)) values.push_back(l + n2);
    for (double l : h_values(g2)) values.push_back(l + n1);
    values.push_back(n1 + n2);
    std::vector<double> mu1 = adjacency_values(g1);
    std::vector<double> mu2 = adjacency_values(g2);
    for (std::size_t k = 1; k < mu2.size(); ++k) values.push_back(n1 + r2 - mu2[k]);
    for (std::size_t j = 1; j < mu1.size(); ++j) values.push_back(n2 + r1 - mu1[j]);
    for (std::size_t j = 1; j < mu1.size(); ++j)
        for (std::size_t k = 1; k < mu2.size(); ++k) values.push_back(r1 + r2 - mu1[j] - mu2[k]);

    std::sort(values.begin(), values.end(), std::greater<>());
    const double scale = std::max(1.0, values.front());
    Spectrum sp;
    sp.kind = Spectrum::Kind::clustered_float;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i - 1] - values[i] > 1e-8 * scale) {
            double mean = 0.0;
            for (std::size_t j = start; j < i; ++j) mean += values[j];
            mean /= static_cast<double>(i - start);
            sp.entries.push_back({mean, i - start});
            start = i;
        }
    }
    return sp;
}

Spectrum threshold_spectrum_iterative(const std::vector<int>& bits) {
    if (bits.empty()) throw std::invalid_argument("threshold_spectrum_iterative: empty code");
    bool any_edge = false;
    for (std::size_t i = 1; i < bits.size(); ++i) any_edge |= bits[i] == 1;
    if (!any_edge)
        throw std::invalid_argument("threshold_spectrum_iterative: code generates an edgeless graph");

    std::vector<long long> h_spec;               // any order
    std::vector<long long> lap_spec = {0};       // kept sorted descending
    for (std::size_t i = 1; i < bits.size(); ++i) {
        const long long q = static_cast<long long>(i);  // vertices before this step
        if (bits[i] == 0) {
            lap_spec.push_back(0);
            continue;
        }
        // Dominating vertex: previous Laplacian values (one zero dropped)
        // shift by one, both spectra gain the new order.
        std::vector<long long> new_h = h_spec;
        for (long long& v : new_h) ++v;
        for (std::size_t j = 0; j + 1 < lap_spec.size(); ++j) new_h.push_back(lap_spec[j] + 1);
        new_h.push_back(q + 1);

        std::vector<long long> new_lap;
        new_lap.push_back(q + 1);
        for (std::size_t j = 0; j + 1 < lap_spec.size(); ++j) new_lap.push_back(lap_spec[j] + 1);
        new_lap.push_back(0);

        h_spec = std::move(new_h);
        lap_spec = std::move(new_lap);
        std::sort(lap_spec.begin(), lap_spec.end(), std::greater<>());
    }
    return Spectrum::exact(std::move(h_spec));
}

IntMatrix laplacian_matrix(const Graph& g) {
    IntMatrix l(g.n(), g.n());
    for (int v = 0; v < g.n(); ++v) l.at(v, v) = BigInt(g.degree(v));
    for (const auto& [u, v] : g.edges()) {
        l.at(u, v) = BigInt(-1);
        l.at(v, u) = BigInt(-1);
    }
    return l;
}

HIntegralResult laplacian_integral_test(const Graph& g, double cluster_tol) {
    return integer_spectrum_confirm(laplacian_matrix(g), cluster_tol);
}

std::vector<Graph> h_integral_sequence(const FamilySpec& seed,
                                       const std::vector<std::pair<int, int>>& steps) {
    return h_integral_sequence(gen_family(seed), steps);
}

std::vector<Graph> h_integral_sequence(const Graph& g,
                                       const std::vector<std::pair<int, int>>& steps) {
    if (!laplacian_integral_test(g).is_integral)
        throw std::invalid_argument("h_integral_sequence: seed is not Laplacian-integral");
    if (g.m() > 0) {
        HelmholtzianMatrix h = build_H_direct(g, canonical_orientation(g));
        if (!h_integral_test(h).is_integral)
            throw std::invalid_argument("h_integral_sequence: seed is not H-integral");
    }

    std::vector<Graph> out{g};
    for (const auto& [s, t] : steps) {
        if (s < 1 || t < 0) throw std::invalid_argument("h_integral_sequence: bad step");
        Graph expanded = add_isolated_vertices(out.back(), t);
        Graph next = join_graphs(complete_graph(s), expanded);
        HelmholtzianMatrix h = build_H_direct(next, canonical_orientation(next));
        if (!h_integral_test(h).is_integral)
            throw std::logic_error("h_integral_sequence: generated graph failed the integral test");
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace hodge
