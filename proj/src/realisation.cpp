#include "fcg/realisation.hpp"

#include "fcg/errors.hpp"
#include "fcg/linear.hpp"
#include "fcg/sequences.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fcg {

namespace {

long long nmul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegrityError("frame entry overflow");
    return r;
}
long long nadd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw IntegrityError("frame entry overflow");
    return r;
}

}  // namespace

IMat transport_frame(const FullyColouredGraph& g, const IMat& frame, Vertex v, Colour s) {
    const int d = frame.n;
    IMat out = frame;
    for (int row = 0; row < d; ++row) {
        long long x = nmul(-1, frame.at(row, s));
        for (int t = 0; t < d; ++t) {
            if (t == s) continue;
            x = nadd(x, nmul(n_value(g.m(v, s, t)), frame.at(row, t)));
        }
        out.at(row, s) = x;
    }
    return out;
}

Realisation realise(const FullyColouredGraph& g) {
    // Only shape and m-domain preconditions are enforced here; axiom-level
    // damage (a doctored m-table) surfaces as a closure failure below.
    check_graph_dimensions(g);
    for (int v = 0; v < g.vertex_count; ++v)
        for (int s = 0; s < g.rank(); ++s)
            for (int t = 0; t < g.rank(); ++t)
                if (s != t) n_value(g.m(v, s, t));

    const int d = g.rank();
    Realisation r;
    r.graph = g;
    r.base = g.base;
    r.frames.assign(g.vertex_count, IMat{});

    std::vector<int> parent(g.vertex_count, -1);
    std::vector<char> seen(g.vertex_count, 0);
    r.frames[g.base] = IMat::identity(d);
    seen[g.base] = 1;
    std::deque<Vertex> queue{g.base};
    std::vector<Vertex> order;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int s = 0; s < d; ++s) {
            Vertex w = g.act(v, s);
            if (w == kNoVertex || seen[w]) continue;
            seen[w] = 1;
            parent[w] = v;
            r.frames[w] = transport_frame(g, r.frames[v], v, s);
            queue.push_back(w);
        }
    }
    for (Vertex v = 0; v < g.vertex_count; ++v)
        if (!seen[v]) throw DomainError("realise: graph is not connected from its base");

    // Non-tree edges must close.
    for (Vertex v : order) {
        for (int s = 0; s < d; ++s) {
            Vertex w = g.act(v, s);
            if (w == kNoVertex) continue;
            if (transport_frame(g, r.frames[v], v, s) == r.frames[w]) continue;
            std::vector<Vertex> cycle;
            for (Vertex x = v; x != -1; x = parent[x]) cycle.push_back(x);
            std::reverse(cycle.begin(), cycle.end());
            std::vector<Vertex> back;
            for (Vertex x = w; x != -1; x = parent[x]) back.push_back(x);
            cycle.insert(cycle.end(), back.begin(), back.end());
            throw NotRealisableError("frame transport fails to close across the edge (" +
                                         std::to_string(v) + "," + g.colours[s] + "," +
                                         std::to_string(w) + ")",
                                     cycle);
        }
    }
    return r;
}

bool verify_chamber_disjointness(const Realisation& r) {
    const int d = r.graph.rank();
    for (Vertex v = 0; v < r.graph.vertex_count; ++v) {
        for (Vertex w = v + 1; w < r.graph.vertex_count; ++w) {
            // sum_s a_s q(v,s) = sum_s b_s q(w,s) with all a_s, b_s > 0.
            std::vector<Constraint> system;
            for (int row = 0; row < d; ++row) {
                std::vector<Int> c(2 * d, 0);
                for (int s = 0; s < d; ++s) {
                    c[s] = r.frames[v].at(row, s);
                    c[d + s] = -r.frames[w].at(row, s);
                }
                system.push_back(eq(std::move(c)));
            }
            for (int s = 0; s < 2 * d; ++s) {
                std::vector<Int> c(2 * d, 0);
                c[s] = 1;
                system.push_back(gt(std::move(c)));
            }
            if (fm_feasible(system)) return false;
        }
    }
    return true;
}

namespace {

struct Vec2 {
    long long x = 0, y = 0;
    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

Vec2 primitive(Vec2 v) {
    long long g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    if (g > 1) {
        v.x /= g;
        v.y /= g;
    }
    return v;
}

long long cross(Vec2 a, Vec2 b) { return nadd(nmul(a.x, b.y), -nmul(a.y, b.x)); }

// Circular order starting from the positive x-axis, counterclockwise.
bool angle_less(Vec2 a, Vec2 b) {
    auto half = [](Vec2 v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
}

// Half-space feasibility: some nonzero f vanishing on the shared columns with
// f(g) >= 0 on every moving generator.
bool halfspace_exists(const std::vector<std::vector<long long>>& shared,
                      const std::vector<std::vector<long long>>& moving, int d) {
    std::vector<Constraint> system;
    for (const auto& c : shared) {
        std::vector<Int> row(c.begin(), c.end());
        system.push_back(eq(std::move(row)));
    }
    std::vector<Int> total(d, 0);
    for (const auto& gcol : moving) {
        std::vector<Int> row(gcol.begin(), gcol.end());
        for (int i = 0; i < d; ++i) total[i] += row[i];
        system.push_back(ge(std::move(row)));
    }
    system.push_back(gt(std::move(total)));
    return fm_feasible(system);
}

}  // namespace

bool verify_residue_walls(const Realisation& r) {
    const FullyColouredGraph& g = r.graph;
    const int d = g.rank();
    for (Colour s = 0; s < d; ++s) {
        for (Colour t = s + 1; t < d; ++t) {
            for (const Residue& res : two_residues(g, s, t)) {
                int mv = g.m(res.through_vertex, s, t);
                bool closed = residue_closed(g, res);
                // Columns outside {s,t} are shared across the residue.
                for (Vertex v : res.vertices)
                    for (int c = 0; c < d; ++c)
                        if (c != s && c != t &&
                            r.frames[v].col(c) != r.frames[res.through_vertex].col(c))
                            return false;

                if (mv != kInfiniteM && !closed) continue;  // not decidable from a ball
                if (mv != kInfiniteM) {
                    if (static_cast<int>(res.vertices.size()) != 2 * mv) return false;
                    // Project onto the (s,t)-coordinate plane of the through frame.
                    IMat inv = inverse_unimodular(r.frames[res.through_vertex]);
                    auto project = [&](const std::vector<long long>& col) {
                        Vec2 p;
                        for (int i = 0; i < d; ++i) {
                            p.x = nadd(p.x, nmul(inv.at(s, i), col[i]));
                            p.y = nadd(p.y, nmul(inv.at(t, i), col[i]));
                        }
                        return p;
                    };
                    std::vector<Vec2> rays;
                    std::vector<std::pair<Vec2, Vec2>> chambers;
                    for (Vertex v : res.vertices) {
                        Vec2 ps = primitive(project(r.frames[v].col(s)));
                        Vec2 pt = primitive(project(r.frames[v].col(t)));
                        if (cross(ps, pt) == 0) return false;  // degenerate sector
                        rays.push_back(ps);
                        rays.push_back(pt);
                        chambers.emplace_back(std::min(ps, pt), std::max(ps, pt));
                    }
                    std::sort(rays.begin(), rays.end());
                    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
                    if (static_cast<int>(rays.size()) != 2 * mv) return false;
                    // k distinct wall lines: rays come in antipodal pairs.
                    std::set<Vec2> rayset(rays.begin(), rays.end());
                    for (Vec2 v : rays)
                        if (!rayset.count({-v.x, -v.y})) return false;
                    // Chambers are exactly the sectors between adjacent rays.
                    std::sort(rays.begin(), rays.end(), angle_less);
                    std::set<std::pair<Vec2, Vec2>> sectors;
                    for (size_t i = 0; i < rays.size(); ++i) {
                        Vec2 a = rays[i], b = rays[(i + 1) % rays.size()];
                        sectors.emplace(std::min(a, b), std::max(a, b));
                    }
                    std::set<std::pair<Vec2, Vec2>> cset(chambers.begin(), chambers.end());
                    if (cset != sectors || cset.size() != chambers.size()) return false;
                } else {
                    // Infinite m: all chambers within one closed half-space
                    // whose boundary contains the shared face.
                    std::vector<std::vector<long long>> shared, moving;
                    for (int c = 0; c < d; ++c)
                        if (c != s && c != t)
                            shared.push_back(r.frames[res.through_vertex].col(c));
                    for (Vertex v : res.vertices) {
                        moving.push_back(r.frames[v].col(s));
                        moving.push_back(r.frames[v].col(t));
                    }
                    if (!halfspace_exists(shared, moving, d)) return false;
                }
            }
        }
    }
    return true;
}

bool halfspace_check(const Realisation& r, int samples) {
    const FullyColouredGraph& g = r.graph;
    const int n = g.vertex_count;
    const int d = g.rank();
    const bool is_total = g.total();
    std::vector<std::vector<int>> depth(n);
    for (Vertex v = 0; v < n; ++v) depth[v] = bfs_depths(g, v);

    // In a truncated ball, in-ball distances can exceed true distances when a
    // geodesic leaves the ball. d(x,y) is certified exact when no escaping
    // path can be shorter: d_ball(x,y) + depth(x) + depth(y) <= 2R + 1.
    const auto& base_depth = depth[g.base];
    int radius = *std::max_element(base_depth.begin(), base_depth.end());
    auto certified = [&](Vertex x, Vertex y) {
        if (is_total) return true;
        return depth[x][y] >= 0 &&
               depth[x][y] + base_depth[x] + base_depth[y] <= 2 * radius + 1;
    };

    std::vector<IMat> inverses(n);
    for (Vertex v = 0; v < n; ++v) inverses[v] = inverse_unimodular(r.frames[v]);

    auto valid_triple = [&](Vertex vp, Colour s, Vertex w) {
        Vertex v = g.act(vp, s);
        if (v == kNoVertex) return false;
        if (depth[v][w] < 0 || depth[vp][w] < 0) return false;
        if (!certified(v, w) || !certified(vp, w)) return false;
        return depth[v][w] == 1 + depth[vp][w];
    };

    long long total = 0;
    for (Vertex vp = 0; vp < n; ++vp)
        for (int s = 0; s < d; ++s)
            for (Vertex w = 0; w < n; ++w)
                if (valid_triple(vp, s, w)) ++total;
    long long stride = 1;
    if (samples > 0 && total > samples) stride = total / samples;

    long long index = 0;
    for (Vertex vp = 0; vp < n; ++vp) {
        for (int s = 0; s < d; ++s) {
            for (Vertex w = 0; w < n; ++w) {
                if (!valid_triple(vp, s, w)) continue;
                if (index++ % stride != 0) continue;
                // s-coordinate of every q(w,t) in the frame of v'.
                for (int t = 0; t < d; ++t) {
                    long long coord = 0;
                    for (int i = 0; i < d; ++i)
                        coord = nadd(coord, nmul(inverses[vp].at(s, i), r.frames[w].at(i, t)));
                    if (coord < 0) return false;
                }
            }
        }
    }
    return true;
}

ConvexityOutcome convexity_spot_check(const Realisation& r, int samples) {
    const FullyColouredGraph& g = r.graph;
    if (!g.total()) return ConvexityOutcome::Skipped;
    const int n = g.vertex_count;
    const int d = g.rank();
    std::vector<IMat> inverses(n);
    for (Vertex v = 0; v < n; ++v) inverses[v] = inverse_unimodular(r.frames[v]);

    auto interior_point = [&](Vertex v) {
        std::vector<long long> p(d, 0);
        for (int row = 0; row < d; ++row)
            for (int c = 0; c < d; ++c) p[row] = nadd(p[row], r.frames[v].at(row, c));
        return p;
    };
    auto covered = [&](const std::vector<long long>& p) {
        for (Vertex u = 0; u < n; ++u) {
            bool inside = true;
            for (int row = 0; row < d && inside; ++row) {
                long long coord = 0;
                for (int i = 0; i < d; ++i)
                    coord = nadd(coord, nmul(inverses[u].at(row, i), p[i]));
                if (coord < 0) inside = false;
            }
            if (inside) return true;
        }
        return false;
    };

    long long total = static_cast<long long>(n) * (n - 1) / 2;
    long long stride = samples > 0 && total > samples ? total / samples : 1;
    long long index = 0;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) {
            if (index++ % stride != 0) continue;
            auto pv = interior_point(v);
            auto pw = interior_point(w);
            for (int lambda = 1; lambda <= 3; ++lambda) {
                std::vector<long long> p(d);
                for (int i = 0; i < d; ++i)
                    p[i] = nadd(nmul(lambda, pv[i]), nmul(4 - lambda, pw[i]));
                if (!covered(p)) throw IntegrityError("segment point escapes the chamber union");
            }
        }
    }
    return ConvexityOutcome::Passed;
}

nlohmann::json realisation_to_json(const Realisation& r) {
    nlohmann::json j;
    j["graph"] = graph_to_json(r.graph);
    j["base"] = r.base;
    nlohmann::json frames = nlohmann::json::array();
    for (const IMat& f : r.frames) frames.push_back(f.a);  // column-major
    j["frames"] = std::move(frames);
    return j;
}

Realisation realisation_from_json(const nlohmann::json& j) {
    Realisation r;
    try {
        r.graph = graph_from_json(j.at("graph"));
        r.base = j.value("base", 0);
        const int d = r.graph.rank();
        for (const auto& row : j.at("frames")) {
            IMat f(d);
            auto entries = row.get<std::vector<long long>>();
            if (static_cast<int>(entries.size()) != d * d)
                throw MalformedInput("frame entry count mismatch");
            f.a = std::move(entries);
            r.frames.push_back(std::move(f));
        }
        if (static_cast<int>(r.frames.size()) != r.graph.vertex_count)
            throw MalformedInput("frame count does not match vertex count");
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("bad realisation JSON: ") + e.what());
    }
    return r;
}

}  // namespace fcg
