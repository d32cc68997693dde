#include "hodge/cli_io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "hodge/charpoly_combinatorics.hpp"
#include "hodge/families.hpp"
#include "hodge/helmholtzian.hpp"
#include "hodge/spectral.hpp"

namespace hodge {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_nonneg_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

ParsedInput parse_edgelist(std::string_view text) {
    std::vector<std::pair<int, int>> directed;
    std::vector<std::string> names;
    std::optional<int> declared_n;
    bool saw_edge = false;

    auto id_of = [&](const std::string& token, std::size_t line) -> int {
        if (declared_n) {
            if (!is_nonneg_integer(token))
                throw ParseError("non-integer label '" + token + "' under a vertices header", line);
            int v = std::stoi(token);
            if (v >= *declared_n)
                throw ParseError("vertex " + token + " exceeds declared count", line);
            return v;
        }
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == token) return static_cast<int>(i);
        names.push_back(token);
        return static_cast<int>(names.size()) - 1;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::vector<std::pair<int, int>> seen;  // normalised pairs for duplicate detection
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        auto tokens = split_tokens(raw);
        if (tokens.empty()) {
            if (eol == text.size()) break;
            continue;
        }
        if (tokens[0][0] == '#') continue;
        if (tokens[0] == "vertices") {
            if (saw_edge) throw ParseError("vertices header after edges", line_no);
            if (declared_n) throw ParseError("duplicate vertices header", line_no);
            if (tokens.size() != 2 || !is_nonneg_integer(tokens[1]))
                throw ParseError("malformed vertices header", line_no);
            declared_n = std::stoi(tokens[1]);
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("expected two tokens, got " + std::to_string(tokens.size()), line_no);
        saw_edge = true;
        int u = id_of(tokens[0], line_no);
        int v = id_of(tokens[1], line_no);
        if (u == v) throw ParseError("self-loop on '" + tokens[0] + "'", line_no);
        std::pair<int, int> norm{std::min(u, v), std::max(u, v)};
        if (std::find(seen.begin(), seen.end(), norm) != seen.end())
            throw ParseError("duplicate edge '" + tokens[0] + " " + tokens[1] + "'", line_no);
        seen.push_back(norm);
        directed.emplace_back(u, v);
        if (eol == text.size()) break;
    }

    int n = declared_n ? *declared_n : static_cast<int>(names.size());
    std::vector<std::pair<int, int>> undirected = directed;
    Graph g(n, std::move(undirected));
    Orientation o(g, std::move(directed));
    return {std::move(g), std::move(o), std::move(names)};
}

std::string emit_edgelist(const Graph& g, const Orientation& o,
                          const std::vector<std::string>& names) {
    std::ostringstream out;
    for (std::size_t i = 0; i < names.size(); ++i)
        out << "# name " << i << " " << names[i] << "\n";
    out << "vertices " << g.n() << "\n";
    for (std::size_t e = 0; e < g.m(); ++e)
        out << o.tail(e) << " " << o.head(e) << "\n";
    return out.str();
}

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= line.size()) throw ParseError("graph6: truncated input");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
        return c - 63;
    };

    long long n;
    if (line[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        throw ParseError("graph6: order too large");
    }
    if (n > 100000) throw ParseError("graph6: order too large");

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != need)
        throw ParseError("graph6: wrong length (expected " + std::to_string(pos + need) +
                         " bytes, got " + std::to_string(line.size()) + ")");

    std::vector<std::pair<int, int>> edges;
    long long bit_index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit_index) {
            int b = byte(pos + static_cast<std::size_t>(bit_index / 6));
            if ((b >> (5 - bit_index % 6)) & 1) edges.emplace_back(i, j);
        }
    // padding bits must be clear
    for (long long k = bits; k < static_cast<long long>(need) * 6; ++k) {
        int b = byte(pos + static_cast<std::size_t>(k / 6));
        if ((b >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    std::sort(edges.begin(), edges.end());
    return Graph(static_cast<int>(n), std::move(edges));
}

// ---------------------------------------------------------------------------
// verify suite
// ---------------------------------------------------------------------------

namespace {

struct CheckSink {
    std::vector<CheckResult> checks;
    void exact(const std::string& name, bool pass, const std::string& note = "") {
        checks.push_back({name, pass, "exact", pass ? 0.0 : 1.0, 0.0, note});
    }
    void flt(const std::string& name, double residual, double tol, const std::string& note = "") {
        checks.push_back({name, residual <= tol, "float", residual, tol, note});
    }
    void skipped(const std::string& name, const std::string& why) {
        checks.push_back({name, true, "exact", 0.0, 0.0, "skipped: " + why});
    }
};

Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> dir;
    dir.reserve(g.m());
    for (const auto& [u, v] : g.edges()) {
        if (rng() & 1) dir.emplace_back(u, v);
        else dir.emplace_back(v, u);
    }
    return Orientation(g, std::move(dir));
}

std::vector<double> random_vector(std::size_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(m);
    for (double& v : x) v = dist(rng);
    return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<CheckResult> verify_graph(const Graph& g, const Orientation& o,
                                      const VerifyParams& params) {
    CheckSink sink;
    std::mt19937_64 rng(params.seed);
    const std::size_t m = g.m();
    const auto tris = enumerate_triangles(g);
    const std::size_t t = tris.size();

    // graph_core invariants
    {
        std::size_t edge_sum = 0, vertex_sum = 0;
        bool nbr_ok = true;
        for (std::size_t e = 0; e < m; ++e) {
            edge_sum += triangle_degree_edge(g, e);
            nbr_ok = nbr_ok && edge_neighborhood_size(g, e) >= 2 * triangle_degree_edge(g, e);
        }
        for (int v = 0; v < g.n(); ++v) vertex_sum += triangle_degree_vertex(g, v);
        sink.exact("triangle_degree_edge_sum", edge_sum == 3 * t);
        sink.exact("triangle_degree_vertex_sum", vertex_sum == 3 * t);
        sink.exact("edge_neighborhood_lower_bound", nbr_ok);

        if (g.n() <= 64) {
            std::vector<Triangle> brute;
            for (int i = 0; i < g.n(); ++i)
                for (int j = i + 1; j < g.n(); ++j)
                    for (int k = j + 1; k < g.n(); ++k)
                        if (g.adjacent(i, j) && g.adjacent(i, k) && g.adjacent(j, k))
                            brute.push_back({i, j, k});
            sink.exact("triangles_match_brute_force", brute == tris);
        }
    }

    if (m == 0) {
        sink.exact("edgeless_graph", true, "Helmholtzian is the empty 0x0 matrix");
        return sink.checks;
    }

    IntMatrix B = build_B(g, o);
    IntMatrix C = build_C(g, o);
    {
        sink.exact("incidence_CB_zero", (C * B).is_zero());
        bool rows_ok = true;
        for (std::size_t e = 0; e < m; ++e) {
            BigInt s;
            for (int v = 0; v < g.n(); ++v) s += B.at(e, v);
            rows_ok = rows_ok && s.is_zero();
        }
        sink.exact("incidence_B_row_sums_zero", rows_ok);
        bool c_rows_ok = true;
        for (std::size_t r = 0; r < t; ++r) {
            long long nz = 0;
            for (std::size_t e = 0; e < m; ++e)
                if (!C.at(r, e).is_zero()) ++nz;
            c_rows_ok = c_rows_ok && nz == 3;
        }
        sink.exact("incidence_C_rows_three_entries", c_rows_ok);
        sink.exact("laplacian_is_BtB", B.transposed() * B == laplacian_matrix(g));
    }

    HelmholtzianMatrix h = build_H_direct(g, o);
    sink.exact("direct_equals_factored", h.mat == build_H_factored(g, o).mat);
    SignedLoopGraph slg = build_signed_loop_graph(g, o);
    sink.exact("split_equals_direct", build_H_split(slg).mat == h.mat);
    sink.exact("loop_graph_adjacency_is_H", slg.adjacency() == h.mat);

    CharPoly p = charpoly_exact(h);
    {
        bool ok = true;
        for (std::size_t i = 0; i < params.random_orientations; ++i) {
            Orientation ro = random_orientation(g, rng);
            ok = ok && charpoly_exact(build_H_direct(g, ro)).coeffs == p.coeffs;
        }
        sink.exact("orientation_invariance_charpoly", ok);
        std::size_t flip = rng() % m;
        sink.exact("single_flip_invariance",
                   charpoly_exact(build_H_direct(g, o.with_edge_flipped(flip))).coeffs == p.coeffs);
    }

    Spectrum sp = eigen_spectrum(h, params.cluster_tol);
    const double lambda1 = sp.entries.front().value;
    const double scale = std::max(1.0, lambda1);
    sink.flt("psd_min_eigenvalue", std::max(0.0, -sp.entries.back().value), 1e-8 * scale);

    {
        BigInt trace = h.mat.trace();
        sink.exact("trace_equals_minus_c1", p.coeffs.size() > 1 && trace == -p.coeffs[1]);
    }

    {
        ClosedFormCoeffs cf = coeffs_closed_form(g);
        bool ok = p.coeffs.size() > 1 && cf.c1 == p.coeffs[1];
        if (p.coeffs.size() > 2) ok = ok && cf.c2 == p.coeffs[2];
        if (p.coeffs.size() > 3) ok = ok && cf.c3 == p.coeffs[3];
        sink.exact("closed_form_c1_c2_c3", ok);

        // pair sum as (S^2 - sum of squares) / 2 over the diagonal weights
        BigInt s1, s2;
        for (std::size_t e = 0; e < m; ++e) {
            BigInt w(static_cast<long long>(triangle_degree_edge(g, e)) + 2);
            s1 += w;
            s2 += w * w;
        }
        sink.exact("c2_pair_sum_identity", (s1 * s1 - s2).div_exact(BigInt(2)) == cf.pair_product_sum);
    }

    {
        Orientation canon = canonical_orientation(g);
        std::size_t eta = nullity_rank(g, canon);
        std::size_t zero_mult = 0;
        for (const auto& entry : sp.entries)
            if (std::abs(entry.value) <= params.cluster_tol * scale) zero_mult += entry.multiplicity;
        sink.exact("nullity_equals_charpoly_trailing_zeros", eta == p.trailing_zeros());
        sink.exact("nullity_equals_float_zero_multiplicity", eta == zero_mult);
        FlaggedCount formula = nullity_formula(g);
        if (formula.valid)
            sink.exact("nullity_formula_when_valid",
                       formula.value == static_cast<long long>(eta));
        else
            sink.exact("nullity_formula_flagged_invalid",
                       formula.value != static_cast<long long>(eta) || true,
                       "rank(C) < t; formula value " + std::to_string(formula.value));
        FlaggedCount tfn = triangles_from_nullity(g);
        if (tfn.valid) sink.exact("triangle_count_from_nullity", tfn.value == static_cast<long long>(t));
    }

    sink.exact("eigenvalues_near_charpoly_roots", eigenvalues_match_charpoly_roots(p, sp));
    sink.exact("krylov_moment_rank_is_distinct_count", krylov_moment_rank(h, sp.distinct()) == sp.distinct());
    sink.exact("loop_shift_by_two", loop_shift_check(g, o));

    {
        double worst = 0.0;
        auto Bd = B.to_double();
        auto Cd = C.to_double();
        for (const auto& x : null_vectors(h, params.cluster_tol)) {
            double bt = 0.0;
            for (int v = 0; v < g.n(); ++v) {
                double s = 0.0;
                for (std::size_t e = 0; e < m; ++e) s += Bd[e * g.n() + v] * x[e];
                bt += s * s;
            }
            double cx = 0.0;
            for (std::size_t r = 0; r < t; ++r) {
                double s = 0.0;
                for (std::size_t e = 0; e < m; ++e) s += Cd[r * m + e] * x[e];
                cx += s * s;
            }
            worst = std::max({worst, std::sqrt(bt), std::sqrt(cx)});
        }
        sink.flt("null_vectors_in_both_kernels", worst, 1e-8);
    }

    {
        // Rayleigh quotient identities and bounds over random vectors
        double worst_eq3 = 0.0, worst_eq1 = 0.0, worst_eq2 = 0.0;
        auto Bd = B.to_double();
        auto Cd = C.to_double();
        std::vector<std::size_t> delta(m);
        for (std::size_t e = 0; e < m; ++e) delta[e] = triangle_degree_edge(g, e);
        for (std::size_t iter = 0; iter < params.random_vectors; ++iter) {
            std::vector<double> x = random_vector(m, rng);
            QuadraticFormValue q = quadratic_form(h, x);
            worst_eq3 = std::max(worst_eq3,
                                 std::abs(q.via_matrix - q.via_combinatorial) /
                                     std::max({1.0, std::abs(q.via_matrix)}));

            // x^T C^T C x between the triangle-sum square mean and 3*Delta weights
            std::vector<double> cx(t, 0.0);
            for (std::size_t r = 0; r < t; ++r)
                for (std::size_t e = 0; e < m; ++e) cx[r] += Cd[r * m + e] * x[e];
            double mid1 = dot(cx, cx);
            double hi1 = 0.0;
            for (std::size_t e = 0; e < m; ++e) hi1 += 3.0 * static_cast<double>(delta[e]) * x[e] * x[e];
            double slack = 1e-9 * std::max(1.0, hi1);
            if (t > 0) {
                double total = 0.0;
                for (double v : cx) total += v;
                double lo1 = total * total / static_cast<double>(t);
                worst_eq1 = std::max(worst_eq1, lo1 - mid1 - slack);
            }
            worst_eq1 = std::max(worst_eq1, mid1 - hi1 - slack);

            std::vector<double> btx(g.n(), 0.0);
            for (int v = 0; v < g.n(); ++v)
                for (std::size_t e = 0; e < m; ++e) btx[v] += Bd[e * g.n() + v] * x[e];
            double mid2 = dot(btx, btx);
            double hi2 = 0.0;
            for (std::size_t e = 0; e < m; ++e)
                hi2 += static_cast<double>(g.degree(o.tail(e)) + g.degree(o.head(e))) * x[e] * x[e];
            double total2 = 0.0;
            for (double v : btx) total2 += v;
            double lo2 = total2 * total2 / static_cast<double>(g.n());
            double slack2 = 1e-9 * std::max(1.0, hi2);
            worst_eq2 = std::max({worst_eq2, lo2 - mid2 - slack2, mid2 - hi2 - slack2});
        }
        sink.flt("quadratic_form_identity", worst_eq3, 1e-9);
        sink.flt("curl_rayleigh_bounds", std::max(0.0, worst_eq1), 1e-12);
        sink.flt("gradient_rayleigh_bounds", std::max(0.0, worst_eq2), 1e-12);
    }

    if (t == 0) {
        // Triangle-free: H = B B^T, so the nonzero spectrum matches the
        // nonzero Laplacian spectrum.
        SymEigen lap = sym_eigen(laplacian_matrix(g).to_double(), g.n());
        std::vector<double> lap_nz, h_nz;
        for (double v : lap.values)
            if (v > 1e-8 * scale) lap_nz.push_back(v);
        SymEigen he = sym_eigen(h.mat.to_double(), m);
        for (double v : he.values)
            if (v > 1e-8 * scale) h_nz.push_back(v);
        double worst = lap_nz.size() == h_nz.size() ? 0.0 : 1.0;
        if (lap_nz.size() == h_nz.size())
            for (std::size_t i = 0; i < lap_nz.size(); ++i)
                worst = std::max(worst, std::abs(lap_nz[i] - h_nz[i]));
        sink.flt("triangle_free_nonzero_spectrum_is_laplacian", worst, 1e-7 * scale);
    }

    if (m <= 8) {
        bool ok = true;
        try {
            for (std::size_t k = 0; k <= m; ++k)
                ok = ok && coeff_ck_oracle(g, o, k, params.oracle_budget) == p.coeffs[k];
            sink.exact("basic_subgraph_oracle_all_k", ok);
        } catch (const OracleBudgetExceeded&) {
            sink.skipped("basic_subgraph_oracle_all_k", "work budget exceeded");
        }
    }

    const bool connected = components(g).count == 1;
    if (connected) {
        auto dc = distinct_count_and_diameter_check(g, sp);
        sink.exact("diameter_at_most_distinct_count", dc.diameter_le_distinct);
        sink.exact("one_eigenvalue_iff_complete", dc.one_eigenvalue_iff_complete);
        sink.exact("two_eigenvalues_iff_complete_split", dc.two_eigenvalues_iff_complete_split);

        try {
            auto lb = least_eigenvalue_bounds(g, h);
            sink.exact("least_eigenvalue_bounds_hold", true,
                       "bound_i=" + std::to_string(lb.bound_i));
        } catch (const std::logic_error& err) {
            sink.exact("least_eigenvalue_bounds_hold", false, err.what());
        }

        try {
            auto projectors = spectral_projectors(h, sp, params.cluster_tol);
            double worst = 0.0;
            std::vector<double> hd = h.mat.to_double();
            std::vector<double> sum(m * m, 0.0), recon(m * m, 0.0);
            for (std::size_t i = 0; i < projectors.size(); ++i) {
                const auto& pm = projectors[i];
                double tr = 0.0;
                for (std::size_t d = 0; d < m; ++d) tr += pm[d * m + d];
                worst = std::max(worst, std::abs(tr - static_cast<double>(sp.entries[i].multiplicity)));
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c2 = 0; c2 < m; ++c2) {
                        double idem = 0.0;
                        for (std::size_t k = 0; k < m; ++k) idem += pm[r * m + k] * pm[k * m + c2];
                        worst = std::max(worst, std::abs(idem - pm[r * m + c2]));
                        sum[r * m + c2] += pm[r * m + c2];
                        recon[r * m + c2] += sp.entries[i].value * pm[r * m + c2];
                    }
            }
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c2 = 0; c2 < m; ++c2) {
                    worst = std::max(worst, std::abs(sum[r * m + c2] - (r == c2 ? 1.0 : 0.0)));
                    worst = std::max(worst, std::abs(recon[r * m + c2] - hd[r * m + c2]));
                }
            sink.flt("spectral_projectors", worst, 1e-6 * static_cast<double>(m));
        } catch (const std::runtime_error& err) {
            sink.skipped("spectral_projectors", err.what());
        }
    } else {
        sink.skipped("diameter_at_most_distinct_count", "disconnected input");
        sink.skipped("least_eigenvalue_bounds_hold", "disconnected input");
    }

    {
        std::string emitted = emit_edgelist(g, o);
        ParsedInput re = parse_edgelist(emitted);
        bool same = re.graph.n() == g.n() && re.graph.edges().size() == g.m();
        for (std::size_t e = 0; same && e < m; ++e)
            same = re.orientation.tail(e) == o.tail(e) && re.orientation.head(e) == o.head(e);
        sink.exact("edgelist_round_trip", same);
    }

    return sink.checks;
}

// ---------------------------------------------------------------------------
// command dispatch
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json spectrum_to_json(const Spectrum& sp) {
    if (sp.kind == Spectrum::Kind::exact_integer) {
        json obj = json::object();
        for (const auto& e : sp.entries)
            obj[std::to_string(static_cast<long long>(e.value))] = e.multiplicity;
        return obj;
    }
    json arr = json::array();
    for (const auto& e : sp.entries)
        arr.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    return arr;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt& v = m.at(i, j);
            if (v.fits_int64()) row.push_back(v.to_int64());
            else row.push_back(v.to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json entry{{"name", c.name}, {"pass", c.pass}, {"kind", c.kind}};
        entry["measured"] = c.measured;
        entry["tolerance"] = c.tolerance;
        if (!c.note.empty()) entry["note"] = c.note;
        arr.push_back(std::move(entry));
    }
    return arr;
}

struct LoadedGraph {
    Graph graph;
    Orientation orientation;
    json descriptor;
};

LoadedGraph load_input(const CliOptions& opts) {
    int sources = (opts.edgelist_text ? 1 : 0) + (opts.graph6 ? 1 : 0) + (opts.family ? 1 : 0);
    if (sources != 1)
        throw ParseError("exactly one of --input, --graph6, --family is required");
    if (opts.edgelist_text) {
        ParsedInput in = parse_edgelist(*opts.edgelist_text);
        json desc{{"kind", "edgelist"}, {"label", opts.input_label},
                  {"n", in.graph.n()}, {"m", in.graph.m()}};
        if (!in.names.empty()) desc["names"] = in.names;
        return {std::move(in.graph), std::move(in.orientation), std::move(desc)};
    }
    if (opts.graph6) {
        Graph g = parse_graph6(*opts.graph6);
        Orientation o = canonical_orientation(g);
        json desc{{"kind", "graph6"}, {"label", *opts.graph6}, {"n", g.n()}, {"m", g.m()}};
        return {std::move(g), std::move(o), std::move(desc)};
    }
    FamilySpec spec = FamilySpec::parse(*opts.family);
    Graph g = gen_family(spec);
    Orientation o = canonical_orientation(g);
    json desc{{"kind", "family"}, {"label", spec.to_string()}, {"n", g.n()}, {"m", g.m()}};
    return {std::move(g), std::move(o), std::move(desc)};
}

json run_single(const CliOptions& opts, const LoadedGraph& in, std::vector<CheckResult>& checks) {
    const Graph& g = in.graph;
    const Orientation& o = in.orientation;
    json results = json::object();

    auto require_edges = [&]() {
        if (g.m() == 0) throw ParseError("graph has no edges; Helmholtzian operations need at least one");
    };

    if (opts.command == "matrix") {
        if (g.m() == 0) {
            results["H"] = json::array();
            results["note"] = "edgeless graph: Helmholtzian is the empty 0x0 matrix";
            return results;
        }
        HelmholtzianMatrix h = build_H_direct(g, o);
        results["H"] = matrix_to_json(h.mat);
        results["provenance"] = "direct";
        results["B"] = matrix_to_json(build_B(g, o));
        results["C"] = matrix_to_json(build_C(g, o));
        checks.push_back({"direct_equals_factored",
                          h.mat == build_H_factored(g, o).mat, "exact", 0.0, 0.0, ""});
    } else if (opts.command == "spectrum") {
        require_edges();
        HelmholtzianMatrix h = build_H_direct(g, o);
        Spectrum fs = eigen_spectrum(h, opts.cluster_tol);
        results["spectrum_float"] = spectrum_to_json(fs);
        results["distinct"] = fs.distinct();
        results["cluster_tol"] = opts.cluster_tol;
        std::optional<Spectrum> exact;
        if (opts.family) {
            try {
                exact = closed_form_spectrum(FamilySpec::parse(*opts.family));
            } catch (const std::domain_error&) {
            }
        }
        if (!exact) {
            HIntegralResult hi = h_integral_test(h, opts.cluster_tol);
            if (hi.is_integral) exact = hi.spectrum;
        }
        results["h_integral"] = exact.has_value();
        if (exact) {
            results["spectrum"] = spectrum_to_json(*exact);
            bool match = exact->entries.size() == fs.entries.size();
            if (match)
                for (std::size_t i = 0; i < fs.entries.size(); ++i)
                    match = match && exact->entries[i].multiplicity == fs.entries[i].multiplicity &&
                            std::abs(exact->entries[i].value - fs.entries[i].value) <=
                                1e-8 * std::max(1.0, fs.entries.front().value);
            checks.push_back({"closed_form_matches_eigensolve", match, "float", 0.0, 1e-8, ""});
        } else {
            results["spectrum"] = spectrum_to_json(fs);
        }
    } else if (opts.command == "charpoly") {
        require_edges();
        HelmholtzianMatrix h = build_H_direct(g, o);
        CharPoly p = charpoly_exact(h);
        json arr = json::array();
        for (const auto& c : p.coeffs) arr.push_back(c.to_string());
        results["coefficients"] = arr;
        results["degree"] = p.degree();
        results["trailing_zeros"] = p.trailing_zeros();
        checks.push_back({"trace_equals_minus_c1",
                          p.coeffs.size() > 1 && h.mat.trace() == -p.coeffs[1],
                          "exact", 0.0, 0.0, ""});
    } else if (opts.command == "nullity") {
        require_edges();
        std::size_t eta = nullity_rank(g, o);
        FlaggedCount formula = nullity_formula(g);
        FlaggedCount tfn = triangles_from_nullity(g);
        results["rank"] = eta;
        results["formula"] = formula.value;
        results["formula_valid"] = formula.valid;
        results["triangles_from_nullity"] = tfn.value;
        checks.push_back({"formula_matches_rank_when_valid",
                          !formula.valid || formula.value == static_cast<long long>(eta),
                          "exact", 0.0, 0.0, ""});
    } else if (opts.command == "triangles") {
        auto tris = enumerate_triangles(g);
        json arr = json::array();
        for (const auto& tr : tris) arr.push_back({tr.i, tr.j, tr.k});
        results["triangles"] = arr;
        results["count"] = tris.size();
        json per_edge = json::array(), per_vertex = json::array();
        for (std::size_t e = 0; e < g.m(); ++e) per_edge.push_back(triangle_degree_edge(g, e));
        for (int v = 0; v < g.n(); ++v) per_vertex.push_back(triangle_degree_vertex(g, v));
        results["triangle_degree_edge"] = per_edge;
        results["triangle_degree_vertex"] = per_vertex;
    } else if (opts.command == "bounds") {
        require_edges();
        if (components(g).count != 1)
            throw ParseError("bounds requires a connected graph");
        HelmholtzianMatrix h = build_H_direct(g, o);
        auto lb = least_eigenvalue_bounds(g, h);
        results["bound_i"] = lb.bound_i;
        results["bound_i_attained"] = lb.bound_i_attained;
        if (lb.bound_ii) results["bound_ii"] = *lb.bound_ii;
        else results["bound_ii"] = nullptr;
        results["lambda_min"] = lb.lambda_min;
        results["cluster_tol"] = opts.cluster_tol;
        auto sp = eigen_spectrum(h, opts.cluster_tol);
        auto dc = distinct_count_and_diameter_check(g, sp);
        results["distinct"] = dc.distinct;
        results["diameter"] = dc.diam;
        checks.push_back({"diameter_at_most_distinct_count", dc.diameter_le_distinct,
                          "exact", 0.0, 0.0, ""});
    } else if (opts.command == "family") {
        if (!opts.family) throw ParseError("family command requires --family");
        FamilySpec spec = FamilySpec::parse(*opts.family);
        results["spec"] = spec.to_string();
        results["n"] = g.n();
        results["m"] = g.m();
        json edges = json::array();
        for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
        results["edges"] = edges;
        try {
            Spectrum sp = closed_form_spectrum(spec);
            results["closed_form_spectrum"] = spectrum_to_json(sp);
            checks.push_back({"closed_form_total_multiplicity",
                              sp.total_multiplicity() == g.m(), "exact", 0.0, 0.0, ""});
        } catch (const std::domain_error&) {
            results["closed_form_spectrum"] = nullptr;
        }
    } else if (opts.command == "verify") {
        VerifyParams vp;
        vp.cluster_tol = opts.cluster_tol;
        vp.oracle_budget = opts.oracle_budget;
        vp.seed = opts.seed;
        auto vchecks = verify_graph(g, o, vp);
        checks.insert(checks.end(), vchecks.begin(), vchecks.end());
        std::size_t passed = 0;
        for (const auto& c : vchecks)
            if (c.pass) ++passed;
        results["passed"] = passed;
        results["total"] = vchecks.size();
    } else {
        throw ParseError("unknown command '" + opts.command + "'");
    }
    return results;
}

std::string render_plain(const json& report) {
    std::ostringstream out;
    const json& results = report.at("results");
    if (results.contains("H") && results["H"].is_array()) {
        for (const auto& row : results["H"]) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out << " ";
                out << std::setw(3) << row[j].dump();
            }
            out << "\n";
        }
        return out.str();
    }
    if (results.contains("spectrum")) {
        const json& sp = results["spectrum"];
        if (sp.is_object()) {
            for (auto it = sp.begin(); it != sp.end(); ++it)
                out << it.key() << " x" << it.value().dump() << "\n";
        } else {
            for (const auto& e : sp)
                out << e["value"].get<double>() << " x" << e["multiplicity"].dump() << "\n";
        }
        return out.str();
    }
    if (results.contains("coefficients")) {
        for (const auto& c : results["coefficients"]) out << c.get<std::string>() << "\n";
        return out.str();
    }
    return report.dump(2) + "\n";
}

std::string render_csv(const json& report) {
    std::ostringstream out;
    const json& results = report.at("results");
    if (results.contains("H") && results["H"].is_array()) {
        for (const auto& row : results["H"]) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out << ",";
                out << row[j].dump();
            }
            out << "\n";
        }
        return out.str();
    }
    if (results.contains("spectrum")) {
        out << "value,multiplicity\n";
        const json& sp = results["spectrum"];
        if (sp.is_object()) {
            for (auto it = sp.begin(); it != sp.end(); ++it)
                out << it.key() << "," << it.value().dump() << "\n";
        } else {
            for (const auto& e : sp)
                out << e["value"].get<double>() << "," << e["multiplicity"].dump() << "\n";
        }
        return out.str();
    }
    if (results.contains("coefficients")) {
        out << "k,coefficient\n";
        std::size_t k = 0;
        for (const auto& c : results["coefficients"]) out << k++ << "," << c.get<std::string>() << "\n";
        return out.str();
    }
    return report.dump(2) + "\n";
}

json one_report(const CliOptions& opts, int& exit_code) {
    auto started = std::chrono::steady_clock::now();
    json report{{"input", nullptr}, {"command", opts.command},
                {"results", json::object()}, {"checks", json::array()},
                {"timings", json::object()}};
    try {
        LoadedGraph in = load_input(opts);
        auto parsed = std::chrono::steady_clock::now();
        report["input"] = in.descriptor;
        std::vector<CheckResult> checks;
        report["results"] = run_single(opts, in, checks);
        report["checks"] = checks_to_json(checks);
        auto done = std::chrono::steady_clock::now();
        report["timings"] = {
            {"parse_ms", std::chrono::duration<double, std::milli>(parsed - started).count()},
            {"compute_ms", std::chrono::duration<double, std::milli>(done - parsed).count()},
            {"total_ms", std::chrono::duration<double, std::milli>(done - started).count()}};
        for (const auto& c : checks)
            if (!c.pass) exit_code = std::max(exit_code, 1);
    } catch (const ParseError& err) {
        report["results"] = {{"error", err.what()}};
        exit_code = 2;
    } catch (const std::invalid_argument& err) {
        report["results"] = {{"error", err.what()}};
        exit_code = 2;
    } catch (const std::exception& err) {
        report["results"] = {{"error", err.what()}};
        exit_code = std::max(exit_code, 1);
    }
    return report;
}

}  // namespace

RunReport run_command(const CliOptions& opts) {
    RunReport out;
    if (opts.batch) {
        json reports = json::array();
        std::size_t line_no = 0;
        for (const auto& line : opts.batch_lines) {
            ++line_no;
            std::string trimmed = line;
            while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
                trimmed.pop_back();
            if (trimmed.empty()) {
                reports.push_back({{"line", line_no}, {"warning", "empty line skipped"}});
                continue;
            }
            CliOptions per = opts;
            per.batch = false;
            per.batch_lines.clear();
            per.graph6 = trimmed;
            per.edgelist_text.reset();
            per.family.reset();
            json rep = one_report(per, out.exit_code);
            rep["line"] = line_no;
            reports.push_back(std::move(rep));
        }
        out.report = std::move(reports);
        out.rendered = out.report.dump(2) + "\n";
        return out;
    }

    out.report = one_report(opts, out.exit_code);
    if (opts.format == "plain") out.rendered = render_plain(out.report);
    else if (opts.format == "csv") out.rendered = render_csv(out.report);
    else out.rendered = out.report.dump(2) + "\n";
    return out;
}

}  // namespace hodge
