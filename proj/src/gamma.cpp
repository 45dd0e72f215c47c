#include "fcg/gamma.hpp"

#include "fcg/errors.hpp"
#include "fcg/fixtures.hpp"
#include "fcg/sequences.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace fcg {

MValue m_value(const RelationSet& q, const Shape& u, int s, int t) {
    if (s == t) throw DomainError("m_value: colours must be distinct");
    Generator second = q.star(u.at(t), Word{u.at(s)});  // [u nabla s](t)
    auto rel = q.relation_through(u.at(s), second);
    const int p = rel.k;
    Shape cur = u;
    for (int loops = 1; loops <= 4; ++loops) {
        for (int i = 0; i < p; ++i) {
            cur = nabla(q, cur, s);
            cur = nabla(q, cur, t);
        }
        if (cur == u) {
            int m = p * loops;
            if (m != 2 && m != 3)
                throw IntegrityError("m_value: walk closed at m=" + std::to_string(m) +
                                     ", outside {2,3}");
            return {m, p, *rel.word};
        }
    }
    throw IntegrityError("m_value: alternating walk failed to close within the loop cap");
}

namespace {

long long nmul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegrityError("gamma frame entry overflow");
    return r;
}
long long nadd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw IntegrityError("gamma frame entry overflow");
    return r;
}

/// Wall-crossing frame update: column s becomes -q_s + sum_t n(u;s,t) q_t,
/// with n read off m_value at the departing object.
IMat cross_frame(const RelationSet& q, const Shape& u, const IMat& frame, int s) {
    const int d = frame.n;
    IMat out = frame;
    std::vector<int> n(d, 0);
    for (int t = 0; t < d; ++t)
        if (t != s) n[t] = n_value(m_value(q, u, s, t).m);
    for (int row = 0; row < d; ++row) {
        long long x = nmul(-1, frame.at(row, s));
        for (int t = 0; t < d; ++t)
            if (t != s) x = nadd(x, nmul(n[t], frame.at(row, t)));
        out.at(row, s) = x;
    }
    return out;
}

using StateKey = std::pair<std::vector<Generator>, std::vector<long long>>;

StateKey key_of(const GammaState& st) { return {st.object.assign, st.matrix.a}; }

}  // namespace

AdmissibleGraph build_gamma(const RelationSet& q, const Shape& u, int radius_cap) {
    validate_shape(u);
    if (radius_cap < 1) throw DomainError("build_gamma: radius cap must be positive");
    const int d = u.rank();

    AdmissibleGraph ag;
    ag.base_vertex = 0;
    ag.complete = true;
    ag.states.push_back({u, IMat::identity(d)});
    std::map<StateKey, int> index{{key_of(ag.states[0]), 0}};
    std::vector<int> depth{0};
    std::vector<std::vector<Vertex>> action{std::vector<Vertex>(d, kNoVertex)};

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (depth[v] == radius_cap) {
            ag.complete = false;  // unexpanded frontier
            continue;
        }
        for (int s = 0; s < d; ++s) {
            GammaState next;
            next.object = nabla(q, ag.states[v].object, s);
            next.matrix = cross_frame(q, ag.states[v].object, ag.states[v].matrix, s);
            auto [it, inserted] = index.emplace(key_of(next), static_cast<int>(ag.states.size()));
            int w = it->second;
            if (inserted) {
                ag.states.push_back(std::move(next));
                depth.push_back(depth[v] + 1);
                action.emplace_back(d, kNoVertex);
                queue.push_back(w);
            }
            action[v][s] = w;
            action[w][s] = v;
        }
    }

    FullyColouredGraph& g = ag.graph;
    g.colours = u.colours;
    g.vertex_count = static_cast<int>(ag.states.size());
    g.base = ag.base_vertex;
    g.action = std::move(action);
    g.m_table.assign(g.vertex_count,
                     std::vector<std::vector<int>>(d, std::vector<int>(d, 1)));
    for (int v = 0; v < g.vertex_count; ++v)
        for (int s = 0; s < d; ++s)
            for (int t = s + 1; t < d; ++t) {
                int m = m_value(q, ag.states[v].object, s, t).m;
                g.m_table[v][s][t] = g.m_table[v][t][s] = m;
            }
    return ag;
}

Shape full_shape(int n) {
    Shape u;
    u.n = n;
    for (Generator g : generators(n)) {
        u.colours.push_back(format_generator(g));
        u.assign.push_back(g);
    }
    if (u.colours.empty()) throw DomainError("full_shape: n = 0 has no generators");
    return u;
}

GammaState kn_apply(const RelationSet& q, const Word& word, int cap) {
    if (static_cast<int>(word.size()) > cap)
        throw InconclusiveError("kn_apply: word longer than the exploration cap");
    for (Generator g : word)
        if (g.b > q.n())
            throw DomainError("kn_apply: letter " + format_generator(g) + " outside T_" +
                              std::to_string(q.n()));
    Shape u = full_shape(q.n());
    GammaState state{u, IMat::identity(u.rank())};
    for (Generator g : word) {
        int s = -1;
        for (int i = 0; i < state.object.rank(); ++i)
            if (state.object.at(i) == g) { s = i; break; }
        if (s < 0)
            throw IntegrityError("kn_apply: no colour carries the letter " + format_generator(g));
        GammaState next;
        next.object = nabla(q, state.object, s);
        next.matrix = cross_frame(q, state.object, state.matrix, s);
        state = std::move(next);
    }
    return state;
}

AdmissibleGraph kn_closure(const RelationSet& q, int radius_cap) {
    return build_gamma(q, full_shape(q.n()), radius_cap);
}

std::vector<CyclicProbeEntry> probe_cyclic_conjecture(const RelationSet& q, const Shape& u,
                                                      int radius_cap) {
    AdmissibleGraph base = build_gamma(q, u, radius_cap);
    if (!base.complete)
        throw InconclusiveError("probe_cyclic_conjecture: Gamma(u) does not complete within the cap");
    const int period = static_cast<int>(u.support().size());
    std::vector<CyclicProbeEntry> out;
    for (int j = 0; j < period; ++j) {
        CyclicProbeEntry entry;
        entry.shift = j;
        AdmissibleGraph shifted = build_gamma(q, cyclic_permute(u, j), radius_cap);
        entry.completed = shifted.complete;
        entry.isomorphic =
            shifted.complete && isomorphic(base.graph, shifted.graph, true).has_value();
        out.push_back(entry);
    }
    return out;
}

namespace {

Rank4Entry rank4_entry(const std::string& name, const RelationSet& q, const Shape& u,
                       int radius_cap, const FullyColouredGraph& a4,
                       const FullyColouredGraph& d4) {
    Rank4Entry e;
    e.name = name;
    AdmissibleGraph ag = build_gamma(q, u, radius_cap);
    e.complete = ag.complete;
    e.vertices = ag.graph.vertex_count;
    if (!ag.complete) return e;
    e.realisable = check_realisable_233(ag.graph).realisable;
    e.irreducible = is_irreducible(ag.graph);
    e.m_in_23 = true;
    for (int v = 0; v < ag.graph.vertex_count && e.m_in_23; ++v)
        for (int s = 0; s < ag.graph.rank() && e.m_in_23; ++s)
            for (int t = 0; t < ag.graph.rank(); ++t)
                if (s != t && ag.graph.m(v, s, t) != 2 && ag.graph.m(v, s, t) != 3) {
                    e.m_in_23 = false;
                    break;
                }
    e.isomorphic_a4 = isomorphic(ag.graph, a4, true).has_value();
    e.isomorphic_d4 = isomorphic(ag.graph, d4, true).has_value();
    return e;
}

}  // namespace

Rank4Report rank4_catalog(int radius_cap) {
    FullyColouredGraph a4 = symmetric_group_graph(5);
    FullyColouredGraph d4 = d4_graph();

    Shape u13;
    u13.n = 5;
    u13.colours = {"r", "s", "t", "u"};
    u13.assign = {{0, 2}, {0, 3}, {0, 4}, {1, 5}};
    Shape u15;
    u15.n = 6;
    u15.colours = {"r", "s", "t", "u"};
    u15.assign = {{0, 2}, {0, 4}, {1, 5}, {3, 6}};

    Rank4Report report;
    report.a4_vertices = a4.vertex_count;
    report.d4_vertices = d4.vertex_count;
    report.u13 = rank4_entry("u13", RelationSet::build(u13.n), u13, radius_cap, a4, d4);
    report.u15 = rank4_entry("u15", RelationSet::build(u15.n), u15, radius_cap, a4, d4);
    return report;
}

}  // namespace fcg
