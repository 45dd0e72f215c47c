#include "fcg/fixtures.hpp"

#include "fcg/errors.hpp"
#include "fcg/exact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace fcg {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {  // apply p, then q
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

bool is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

int perm_order(const Perm& p) {
    Perm cur = p;
    int k = 1;
    while (!is_identity(cur)) {
        cur = compose(cur, p);
        ++k;
        if (k > 1000) throw IntegrityError("permutation order runaway");
    }
    return k;
}

}  // namespace

FullyColouredGraph cayley_graph(const std::vector<std::vector<int>>& generator_perms,
                                std::vector<std::string> colour_names) {
    const int k = static_cast<int>(generator_perms.size());
    if (k == 0 || colour_names.size() != generator_perms.size())
        throw MalformedInput("cayley_graph: generator/colour mismatch");
    const size_t deg = generator_perms.front().size();
    for (const Perm& p : generator_perms) {
        if (p.size() != deg) throw MalformedInput("cayley_graph: ragged permutations");
        if (!is_identity(compose(p, p)))
            throw DomainError("cayley_graph: generators must be involutions");
    }

    std::vector<std::vector<int>> m(k, std::vector<int>(k, 1));
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
            if (s != t) m[s][t] = perm_order(compose(generator_perms[s], generator_perms[t]));

    Perm id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::map<Perm, int> index{{id, 0}};
    std::vector<Perm> elements{id};
    std::deque<int> queue{0};
    std::vector<std::vector<Vertex>> action;
    action.emplace_back(k, kNoVertex);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int s = 0; s < k; ++s) {
            Perm next = compose(elements[v], generator_perms[s]);
            auto [it, inserted] = index.emplace(next, static_cast<int>(elements.size()));
            if (inserted) {
                elements.push_back(next);
                action.emplace_back(k, kNoVertex);
                queue.push_back(it->second);
            }
            action[v][s] = it->second;
        }
    }

    FullyColouredGraph g;
    g.colours = std::move(colour_names);
    g.vertex_count = static_cast<int>(elements.size());
    g.base = 0;
    g.action = std::move(action);
    g.m_table.assign(g.vertex_count, m);
    return g;
}

FullyColouredGraph symmetric_group_graph(int letters) {
    if (letters < 2) throw DomainError("symmetric_group_graph: needs at least 2 letters");
    std::vector<std::vector<int>> gens;
    std::vector<std::string> names;
    for (int i = 0; i + 1 < letters; ++i) {
        Perm p(letters);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        gens.push_back(std::move(p));
        names.push_back("s" + std::to_string(i + 1));
    }
    return cayley_graph(gens, std::move(names));
}

FullyColouredGraph d4_graph() {
    // Evenly-signed permutations of 4 letters acting on the 8 signed symbols
    // 0..3 = +1..+4, 4..7 = -1..-4.
    auto transposition = [](int i) {  // (i, i+1) on letters
        Perm p(8);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i], p[i + 1]);
        std::swap(p[i + 4], p[i + 5]);
        return p;
    };
    Perm s0(8);  // e1 -> -e2, e2 -> -e1
    std::iota(s0.begin(), s0.end(), 0);
    s0[0] = 5;
    s0[1] = 4;
    s0[4] = 1;
    s0[5] = 0;
    std::vector<std::vector<int>> gens{s0, transposition(0), transposition(1), transposition(2)};
    return cayley_graph(gens, {"s0", "s1", "s2", "s3"});
}

FullyColouredGraph dihedral_graph(int m) {
    if (m < 2 || m == kInfiniteM) throw DomainError("dihedral_graph: m must be finite and >= 2");
    FullyColouredGraph g = FullyColouredGraph::blank({"s", "t"}, 2 * m);
    for (int v = 0; v < 2 * m; ++v) {
        g.action[v][0] = v % 2 == 0 ? v + 1 : v - 1;              // s: 2i <-> 2i+1
        g.action[v][1] = v % 2 == 0 ? (v + 2 * m - 1) % (2 * m)   // t: 2i <-> 2i-1
                                    : (v + 1) % (2 * m);
        g.m_table[v][0][1] = g.m_table[v][1][0] = m;
    }
    return g;
}

FullyColouredGraph rank1_graph() {
    FullyColouredGraph g = FullyColouredGraph::blank({"s"}, 2);
    g.action[0][0] = 1;
    g.action[1][0] = 0;
    return g;
}

FullyColouredGraph remark62_fixture() {
    // V = (Z/2)^3, r = 100, s = 010, t = 001 acting by xor.
    FullyColouredGraph g = FullyColouredGraph::blank({"r", "s", "t"}, 8);
    const int masks[3] = {4, 2, 1};
    for (int v = 0; v < 8; ++v) {
        for (int s = 0; s < 3; ++s) g.action[v][s] = v ^ masks[s];
        if (v < 4) g.m_table[v][1][2] = g.m_table[v][2][1] = 4;  // <s,t> = {0,1,2,3}
    }
    return g;
}

namespace {

FullyColouredGraph matrix_walk_ball(const std::vector<IMat>& reflections,
                                    std::vector<std::string> colour_names, int radius,
                                    int off_diagonal_m) {
    const int k = static_cast<int>(reflections.size());
    const int d = reflections.front().n;
    auto mul = [&](const IMat& a, const IMat& b) {
        IMat r(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                long long x = 0;
                for (int l = 0; l < d; ++l) x += a.at(i, l) * b.at(l, j);
                r.at(i, j) = x;
            }
        return r;
    };

    std::map<IMat, int> index;
    std::vector<IMat> elements{IMat::identity(d)};
    index[elements[0]] = 0;
    std::vector<int> depth{0};
    std::vector<std::vector<Vertex>> action{std::vector<Vertex>(k, kNoVertex)};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (depth[v] == radius) continue;  // keep the ball a metric ball
        for (int s = 0; s < k; ++s) {
            IMat next = mul(elements[v], reflections[s]);
            auto it = index.find(next);
            if (it == index.end()) {
                int id = static_cast<int>(elements.size());
                elements.push_back(next);
                index.emplace(std::move(next), id);
                depth.push_back(depth[v] + 1);
                action.emplace_back(k, kNoVertex);
                queue.push_back(id);
                action[v][s] = id;
                action[id][s] = v;
            } else {
                action[v][s] = it->second;
                action[it->second][s] = v;
            }
        }
    }

    FullyColouredGraph g;
    g.colours = std::move(colour_names);
    g.vertex_count = static_cast<int>(elements.size());
    g.base = 0;
    g.action = std::move(action);
    g.m_table.assign(g.vertex_count,
                     std::vector<std::vector<int>>(k, std::vector<int>(k, off_diagonal_m)));
    for (int v = 0; v < g.vertex_count; ++v)
        for (int s = 0; s < k; ++s) g.m_table[v][s][s] = 1;
    return g;
}

std::vector<IMat> a2tilde_reflections() {
    // Simple reflections in the root basis: sigma_i(a_i) = -a_i,
    // sigma_i(a_j) = a_j + a_i for j != i (all bonds m = 3).
    std::vector<IMat> out;
    for (int i = 0; i < 3; ++i) {
        IMat m = IMat::identity(3);
        for (int j = 0; j < 3; ++j) m.at(i, j) = j == i ? -1 : 1;
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

FullyColouredGraph a2tilde_ball(int radius) {
    if (radius < 1) throw DomainError("a2tilde_ball: radius must be positive");
    return matrix_walk_ball(a2tilde_reflections(), {"r", "s", "t"}, radius, 3);
}

std::vector<int> a2tilde_sphere_sizes(int radius) {
    FullyColouredGraph g = a2tilde_ball(radius);
    std::vector<int> depth = bfs_depths(g, g.base);
    std::vector<int> spheres(radius + 1, 0);
    for (int dep : depth) {
        if (dep < 0 || dep > radius) throw IntegrityError("ball vertex beyond its radius");
        ++spheres[dep];
    }
    return spheres;
}

FullyColouredGraph mixed_hexagon_ball() {
    // Vertices: central hexagon 0..5, its r-partners 6..11, two completing
    // pairs 12/13 ({r,s}-hexagon through 2,3) and 14/15 ({r,t}-hexagon
    // through 5,0).
    FullyColouredGraph g = FullyColouredGraph::blank({"r", "s", "t"}, 16);
    const Colour R = 0, S = 1, T = 2;
    auto link = [&](Vertex a, Colour c, Vertex b) {
        g.action[a][c] = b;
        g.action[b][c] = a;
    };
    link(0, S, 1);
    link(2, S, 3);
    link(4, S, 5);
    link(1, T, 2);
    link(3, T, 4);
    link(5, T, 0);
    for (Vertex v = 0; v < 6; ++v) link(v, R, v + 6);
    link(6, S, 7);    // square on {r,s} through 0,1
    link(7, T, 8);    // square on {r,t} through 1,2
    link(8, S, 12);   // hexagon on {r,s} through 2,3
    link(12, R, 13);
    link(13, S, 9);
    link(9, T, 10);   // square on {r,t} through 3,4
    link(10, S, 11);  // square on {r,s} through 4,5
    link(11, T, 14);  // hexagon on {r,t} through 5,0
    link(14, R, 15);
    link(15, T, 6);

    auto set_m = [&](std::initializer_list<Vertex> vs, Colour a, Colour b, int m) {
        for (Vertex v : vs) g.m_table[v][a][b] = g.m_table[v][b][a] = m;
    };
    set_m({0, 1, 2, 3, 4, 5}, S, T, 3);
    set_m({2, 3, 8, 9, 12, 13}, R, S, 3);
    set_m({5, 0, 11, 6, 14, 15}, R, T, 3);
    // The outer {s,t}-paths already walk four steps, so their (open) residues
    // need m = 3.
    set_m({6, 7, 8, 12, 15}, S, T, 3);
    set_m({9, 10, 11, 13, 14}, S, T, 3);
    return g;
}

FullyColouredGraph infinite_dihedral_ball(int radius) {
    if (radius < 1) throw DomainError("infinite_dihedral_ball: radius must be positive");
    const int n = 2 * radius + 1;
    FullyColouredGraph g = FullyColouredGraph::blank({"s", "t"}, n);
    g.base = radius;  // path position 0 sits in the middle
    for (int j = -radius; j + 1 <= radius; ++j) {
        int colour = ((j % 2) + 2) % 2 == 0 ? 0 : 1;  // edge (j, j+1): s when j even
        g.action[j + radius][colour] = j + 1 + radius;
        g.action[j + 1 + radius][colour] = j + radius;
    }
    for (int v = 0; v < n; ++v) g.m_table[v][0][1] = g.m_table[v][1][0] = kInfiniteM;
    return g;
}

}  // namespace fcg
