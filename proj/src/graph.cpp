#include "fcg/graph.hpp"

#include "fcg/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fcg {

namespace {

std::string vname(const FullyColouredGraph& g, Colour s) { return g.colours[s]; }

}  // namespace

void check_graph_dimensions(const FullyColouredGraph& g) {
    const int n = g.vertex_count;
    const int k = g.rank();
    if (n <= 0) throw MalformedInput("graph needs at least one vertex");
    std::set<std::string> labels(g.colours.begin(), g.colours.end());
    if (static_cast<int>(labels.size()) != k)
        throw MalformedInput("duplicate colour labels");
    if (static_cast<int>(g.action.size()) != n)
        throw MalformedInput("action table has wrong vertex dimension");
    if (static_cast<int>(g.m_table.size()) != n)
        throw MalformedInput("m-table has wrong vertex dimension");
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(g.action[v].size()) != k)
            throw MalformedInput("action row has wrong colour dimension");
        if (static_cast<int>(g.m_table[v].size()) != k)
            throw MalformedInput("m row has wrong colour dimension");
        for (int s = 0; s < k; ++s)
            if (static_cast<int>(g.m_table[v][s].size()) != k)
                throw MalformedInput("m row has wrong colour dimension");
        for (int s = 0; s < k; ++s) {
            Vertex w = g.action[v][s];
            if (w != kNoVertex && (w < 0 || w >= n))
                throw MalformedInput("action target out of range");
        }
    }
    if (g.base < 0 || g.base >= n) throw MalformedInput("base vertex out of range");
}

bool FullyColouredGraph::total() const {
    for (const auto& row : action)
        for (Vertex w : row)
            if (w == kNoVertex) return false;
    return true;
}

Colour FullyColouredGraph::colour_index(const std::string& label) const {
    for (int s = 0; s < rank(); ++s)
        if (colours[s] == label) return s;
    throw DomainError("unknown colour label: " + label);
}

Vertex FullyColouredGraph::act_word(Vertex v, const std::vector<Colour>& w) const {
    for (Colour s : w) {
        if (v == kNoVertex) return kNoVertex;
        v = action[v][s];
    }
    return v;
}

FullyColouredGraph FullyColouredGraph::blank(std::vector<std::string> colour_labels,
                                             int vertices) {
    FullyColouredGraph g;
    g.colours = std::move(colour_labels);
    g.vertex_count = vertices;
    const int k = g.rank();
    g.action.assign(vertices, std::vector<Vertex>(k, kNoVertex));
    g.m_table.assign(vertices, std::vector<std::vector<int>>(k, std::vector<int>(k, 2)));
    for (int v = 0; v < vertices; ++v)
        for (int s = 0; s < k; ++s) g.m_table[v][s][s] = 1;
    return g;
}

std::vector<std::string> validate_graph(const FullyColouredGraph& g) {
    check_graph_dimensions(g);
    std::vector<std::string> report;
    const int n = g.vertex_count;
    const int k = g.rank();
    auto note = [&](std::string msg) { report.push_back(std::move(msg)); };

    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < k; ++s) {
            Vertex w = g.act(v, s);
            if (w == kNoVertex) continue;
            if (g.act(w, s) != v) {
                std::ostringstream os;
                os << "involution fails at (v=" << v << ", s=" << vname(g, s)
                   << "): (vs)s = " << g.act(w, s);
                note(os.str());
            }
        }
        for (int s = 0; s < k; ++s) {
            if (g.m(v, s, s) != 1) {
                std::ostringstream os;
                os << "m(v;s,s) != 1 at (v=" << v << ", s=" << vname(g, s) << ")";
                note(os.str());
            }
            for (int t = 0; t < k; ++t) {
                if (s != t && g.m(v, s, t) < 2) {
                    std::ostringstream os;
                    os << "m(v;s,t) < 2 for distinct colours at (v=" << v << ", s="
                       << vname(g, s) << ", t=" << vname(g, t) << ")";
                    note(os.str());
                }
                if (g.m(v, s, t) != g.m(v, t, s)) {
                    std::ostringstream os;
                    os << "m symmetry fails at (v=" << v << ", s=" << vname(g, s)
                       << ", t=" << vname(g, t) << ")";
                    note(os.str());
                }
                Vertex w = g.act(v, s);
                if (w != kNoVertex && g.m(v, s, t) != g.m(w, s, t)) {
                    std::ostringstream os;
                    os << "m(v;s,t) != m(vs;s,t) at (v=" << v << ", s=" << vname(g, s)
                       << ", t=" << vname(g, t) << ")";
                    note(os.str());
                }
            }
        }
        // Alternating relation (st)^k, checked when the walk stays explored.
        for (int s = 0; s < k; ++s) {
            for (int t = s + 1; t < k; ++t) {
                int mv = g.m(v, s, t);
                if (mv == kInfiniteM) continue;
                Vertex cur = v;
                bool defined = true;
                for (int i = 0; i < mv && defined; ++i) {
                    cur = g.act(cur, s);
                    if (cur == kNoVertex) { defined = false; break; }
                    cur = g.act(cur, t);
                    if (cur == kNoVertex) defined = false;
                }
                if (defined && cur != v) {
                    std::ostringstream os;
                    os << "(st)^m is not the identity at (v=" << v << ", s="
                       << vname(g, s) << ", t=" << vname(g, t) << ", m=" << mv << ")";
                    note(os.str());
                }
            }
        }
    }

    // #R divides 2m(R;s,t) on every closed 2-residue with finite m.
    for (int s = 0; s < k; ++s) {
        for (int t = s + 1; t < k; ++t) {
            for (const Residue& r : two_residues(g, s, t)) {
                if (!residue_closed(g, r)) continue;
                int mv = g.m(r.through_vertex, s, t);
                if (mv == kInfiniteM) continue;
                long long size = static_cast<long long>(r.vertices.size());
                if ((2LL * mv) % size != 0) {
                    std::ostringstream os;
                    os << "#R does not divide 2m at (v=" << r.through_vertex << ", s="
                       << vname(g, s) << ", t=" << vname(g, t) << "): #R=" << size
                       << ", m=" << mv;
                    note(os.str());
                }
            }
        }
    }
    return report;
}

Residue residue(const FullyColouredGraph& g, Vertex v, std::vector<Colour> I) {
    if (v < 0 || v >= g.vertex_count) throw DomainError("residue: vertex out of range");
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (Colour s : I)
        if (s < 0 || s >= g.rank()) throw DomainError("residue: colour out of range");

    std::vector<char> seen(g.vertex_count, 0);
    std::deque<Vertex> queue{v};
    seen[v] = 1;
    std::vector<Vertex> orbit;
    while (!queue.empty()) {
        Vertex cur = queue.front();
        queue.pop_front();
        orbit.push_back(cur);
        for (Colour s : I) {
            Vertex w = g.act(cur, s);
            if (w != kNoVertex && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return Residue{std::move(I), std::move(orbit), v};
}

bool residue_closed(const FullyColouredGraph& g, const Residue& r) {
    for (Vertex v : r.vertices)
        for (Colour s : r.colour_subset)
            if (g.act(v, s) == kNoVertex) return false;
    return true;
}

std::vector<Residue> two_residues(const FullyColouredGraph& g, Colour s, Colour t) {
    std::vector<Residue> out;
    std::vector<char> done(g.vertex_count, 0);
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        if (done[v]) continue;
        Residue r = residue(g, v, {s, t});
        for (Vertex w : r.vertices) done[w] = 1;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<int> bfs_depths(const FullyColouredGraph& g, Vertex from) {
    std::vector<int> depth(g.vertex_count, -1);
    std::deque<Vertex> queue{from};
    depth[from] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (int s = 0; s < g.rank(); ++s) {
            Vertex w = g.act(v, s);
            if (w != kNoVertex && depth[w] < 0) {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return depth;
}

int distance(const FullyColouredGraph& g, Vertex v, Vertex w) {
    if (v < 0 || v >= g.vertex_count || w < 0 || w >= g.vertex_count)
        throw DomainError("distance: vertex out of range");
    int d = bfs_depths(g, v)[w];
    if (d < 0) throw NoPathError("vertices lie in different components");
    return d;
}

bool is_connected(const FullyColouredGraph& g) {
    auto depth = bfs_depths(g, 0);
    return std::none_of(depth.begin(), depth.end(), [](int d) { return d < 0; });
}

FullyColouredGraph product(const FullyColouredGraph& g1, const FullyColouredGraph& g2) {
    for (const auto& c : g1.colours)
        for (const auto& d : g2.colours)
            if (c == d)
                throw DomainError("product: colour label '" + c + "' in both factors; relabel required");

    FullyColouredGraph g;
    g.colours = g1.colours;
    g.colours.insert(g.colours.end(), g2.colours.begin(), g2.colours.end());
    const int n1 = g1.vertex_count, n2 = g2.vertex_count;
    const int k1 = g1.rank(), k2 = g2.rank();
    g.vertex_count = n1 * n2;
    g.base = g1.base * n2 + g2.base;
    g.action.assign(g.vertex_count, std::vector<Vertex>(k1 + k2, kNoVertex));
    g.m_table.assign(g.vertex_count,
                     std::vector<std::vector<int>>(k1 + k2, std::vector<int>(k1 + k2, 2)));
    for (int v1 = 0; v1 < n1; ++v1) {
        for (int v2 = 0; v2 < n2; ++v2) {
            Vertex v = v1 * n2 + v2;
            for (int s = 0; s < k1; ++s) {
                Vertex w1 = g1.act(v1, s);
                g.action[v][s] = w1 == kNoVertex ? kNoVertex : w1 * n2 + v2;
            }
            for (int s = 0; s < k2; ++s) {
                Vertex w2 = g2.act(v2, s);
                g.action[v][k1 + s] = w2 == kNoVertex ? kNoVertex : v1 * n2 + w2;
            }
            for (int s = 0; s < k1; ++s)
                for (int t = 0; t < k1; ++t) g.m_table[v][s][t] = g1.m(v1, s, t);
            for (int s = 0; s < k2; ++s)
                for (int t = 0; t < k2; ++t) g.m_table[v][k1 + s][k1 + t] = g2.m(v2, s, t);
        }
    }
    return g;
}

namespace {

/// Induced graph on a residue, restricted to its colour subset.
FullyColouredGraph extract_residue_graph(const FullyColouredGraph& g, const Residue& r) {
    std::map<Vertex, Vertex> index;
    for (size_t i = 0; i < r.vertices.size(); ++i)
        index[r.vertices[i]] = static_cast<Vertex>(i);
    FullyColouredGraph out;
    for (Colour s : r.colour_subset) out.colours.push_back(g.colours[s]);
    out.vertex_count = static_cast<int>(r.vertices.size());
    out.base = index.at(r.through_vertex);
    const int k = static_cast<int>(r.colour_subset.size());
    out.action.assign(out.vertex_count, std::vector<Vertex>(k, kNoVertex));
    out.m_table.assign(out.vertex_count,
                       std::vector<std::vector<int>>(k, std::vector<int>(k, 1)));
    for (Vertex v : r.vertices) {
        Vertex nv = index.at(v);
        for (int i = 0; i < k; ++i) {
            Vertex w = g.act(v, r.colour_subset[i]);
            out.action[nv][i] = w == kNoVertex ? kNoVertex : index.at(w);
            for (int j = 0; j < k; ++j)
                out.m_table[nv][i][j] = g.m(v, r.colour_subset[i], r.colour_subset[j]);
        }
    }
    return out;
}

}  // namespace

bool is_irreducible(const FullyColouredGraph& g) {
    const int k = g.rank();
    if (k <= 1) return true;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        if (mask > ((~mask) & ((1u << k) - 1))) continue;  // (A,B) once
        std::vector<Colour> A, B;
        for (int s = 0; s < k; ++s) (mask >> s & 1 ? A : B).push_back(s);
        bool cross_two = true;
        for (int v = 0; v < g.vertex_count && cross_two; ++v)
            for (Colour a : A)
                for (Colour b : B)
                    if (g.m(v, a, b) != 2) { cross_two = false; break; }
        if (!cross_two) continue;
        FullyColouredGraph ga = extract_residue_graph(g, residue(g, g.base, A));
        FullyColouredGraph gb = extract_residue_graph(g, residue(g, g.base, B));
        if (isomorphic(g, product(ga, gb), false)) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<Vertex>> extend_iso(const FullyColouredGraph& g1,
                                              const FullyColouredGraph& g2,
                                              const std::vector<Colour>& cmap,
                                              Vertex v0, Vertex w0) {
    const int n = g1.vertex_count;
    const int k = g1.rank();
    std::vector<Vertex> f(n, kNoVertex), finv(n, kNoVertex);
    f[v0] = w0;
    finv[w0] = v0;
    std::deque<Vertex> queue{v0};
    int mapped = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (int s = 0; s < k; ++s)
            for (int t = 0; t < k; ++t)
                if (g1.m(v, s, t) != g2.m(f[v], cmap[s], cmap[t])) return std::nullopt;
        for (int s = 0; s < k; ++s) {
            Vertex v2 = g1.act(v, s);
            Vertex w2 = g2.act(f[v], cmap[s]);
            if ((v2 == kNoVertex) != (w2 == kNoVertex)) return std::nullopt;
            if (v2 == kNoVertex) continue;
            if (f[v2] == kNoVertex) {
                if (finv[w2] != kNoVertex) return std::nullopt;
                f[v2] = w2;
                finv[w2] = v2;
                ++mapped;
                queue.push_back(v2);
            } else if (f[v2] != w2) {
                return std::nullopt;
            }
        }
    }
    if (mapped != n) return std::nullopt;  // g1 must be connected
    return f;
}

}  // namespace

std::optional<Isomorphism> isomorphic(const FullyColouredGraph& g1,
                                      const FullyColouredGraph& g2,
                                      bool allow_colour_permutation) {
    if (g1.vertex_count != g2.vertex_count || g1.rank() != g2.rank())
        return std::nullopt;
    const int k = g1.rank();

    std::vector<std::vector<Colour>> candidates;
    if (!allow_colour_permutation) {
        std::vector<Colour> cmap(k);
        try {
            for (int s = 0; s < k; ++s) cmap[s] = g2.colour_index(g1.colours[s]);
        } catch (const DomainError&) {
            return std::nullopt;  // label sets differ
        }
        candidates.push_back(std::move(cmap));
    } else {
        std::vector<Colour> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do candidates.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }

    for (const auto& cmap : candidates)
        for (Vertex w = 0; w < g2.vertex_count; ++w)
            if (auto f = extend_iso(g1, g2, cmap, 0, w))
                return Isomorphism{cmap, std::move(*f)};
    return std::nullopt;
}

std::optional<Isomorphism> isomorphic_pointed(const FullyColouredGraph& g1,
                                              const FullyColouredGraph& g2) {
    if (g1.vertex_count != g2.vertex_count || g1.rank() != g2.rank())
        return std::nullopt;
    const int k = g1.rank();
    std::vector<Colour> cmap(k);
    try {
        for (int s = 0; s < k; ++s) cmap[s] = g2.colour_index(g1.colours[s]);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    if (auto f = extend_iso(g1, g2, cmap, g1.base, g2.base))
        return Isomorphism{cmap, std::move(*f)};
    return std::nullopt;
}

nlohmann::json graph_to_json(const FullyColouredGraph& g) {
    nlohmann::json j;
    j["colours"] = g.colours;
    j["vertices"] = g.vertex_count;
    j["base"] = g.base;
    nlohmann::json action = nlohmann::json::array();
    for (const auto& row : g.action) {
        nlohmann::json r = nlohmann::json::array();
        for (Vertex w : row) {
            if (w == kNoVertex)
                r.push_back(nullptr);
            else
                r.push_back(w);
        }
        action.push_back(std::move(r));
    }
    j["action"] = std::move(action);
    nlohmann::json mt = nlohmann::json::array();
    for (const auto& row : g.m_table) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& sub : row) {
            nlohmann::json rr = nlohmann::json::array();
            for (int m : sub) {
                if (m == kInfiniteM)
                    rr.push_back("inf");
                else
                    rr.push_back(m);
            }
            r.push_back(std::move(rr));
        }
        mt.push_back(std::move(r));
    }
    j["m"] = std::move(mt);
    return j;
}

FullyColouredGraph graph_from_json(const nlohmann::json& j) {
    FullyColouredGraph g;
    try {
        g.colours = j.at("colours").get<std::vector<std::string>>();
        g.vertex_count = j.at("vertices").get<int>();
        g.base = j.value("base", 0);
        for (const auto& row : j.at("action")) {
            std::vector<Vertex> r;
            for (const auto& x : row)
                r.push_back(x.is_null() ? kNoVertex : x.get<Vertex>());
            g.action.push_back(std::move(r));
        }
        for (const auto& row : j.at("m")) {
            std::vector<std::vector<int>> r;
            for (const auto& sub : row) {
                std::vector<int> rr;
                for (const auto& x : sub) {
                    if (x.is_string()) {
                        if (x.get<std::string>() != "inf")
                            throw MalformedInput("m entry must be an integer or \"inf\"");
                        rr.push_back(kInfiniteM);
                    } else {
                        rr.push_back(x.get<int>());
                    }
                }
                r.push_back(std::move(rr));
            }
            g.m_table.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("bad graph JSON: ") + e.what());
    }
    check_graph_dimensions(g);
    return g;
}

std::string graph_to_dot(const FullyColouredGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count; ++v)
        for (int s = 0; s < g.rank(); ++s) {
            Vertex w = g.act(v, s);
            if (w != kNoVertex && v < w)
                os << "  " << v << " -- " << w << " [label=\"" << g.colours[s] << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace fcg
