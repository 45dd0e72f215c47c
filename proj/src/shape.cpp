#include "fcg/shape.hpp"

#include "fcg/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace fcg {

int Shape::colour_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
        if (colours[i] == label) return i;
    throw DomainError("shape has no colour labelled " + label);
}

std::vector<int> Shape::support() const {
    std::set<int> pts;
    for (Generator g : assign) {
        pts.insert(g.a);
        pts.insert(g.b);
    }
    return {pts.begin(), pts.end()};
}

void validate_shape(const Shape& u) {
    if (u.colours.size() != u.assign.size())
        throw MalformedInput("shape: colour/assignment size mismatch");
    std::set<std::string> labels(u.colours.begin(), u.colours.end());
    if (labels.size() != u.colours.size()) throw DomainError("shape: duplicate colour labels");
    std::set<Generator> gens(u.assign.begin(), u.assign.end());
    if (gens.size() != u.assign.size()) throw DomainError("shape: assignment is not injective");
    for (Generator g : u.assign)
        if (g.a < 0 || g.a >= g.b || g.b > u.n)
            throw DomainError("shape: generator " + format_generator(g) + " out of bounds for n=" +
                              std::to_string(u.n));
}

Shape parse_shape(int n, std::string_view text) {
    Shape u;
    u.n = n;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string_view entry =
            text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        if (!entry.empty()) {
            size_t eq = entry.find('=');
            if (eq == std::string_view::npos)
                throw MalformedInput("shape entry '" + std::string(entry) +
                                     "' is not of the form colour=a,b");
            u.colours.emplace_back(entry.substr(0, eq));
            u.assign.push_back(parse_generator(entry.substr(eq + 1)));
        }
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    if (u.colours.empty()) throw MalformedInput("shape text is empty");
    validate_shape(u);
    return u;
}

std::string format_shape(const Shape& u) {
    std::ostringstream os;
    for (int i = 0; i < u.rank(); ++i) {
        if (i) os << ';';
        os << u.colours[i] << '=' << format_generator(u.assign[i]);
    }
    return os.str();
}

Shape nabla(const RelationSet& q, const Shape& u, int s) {
    Shape out = u;
    for (int t = 0; t < u.rank(); ++t) {
        if (t == s) continue;
        out.assign[t] = (*q.relation_through(u.at(t), u.at(s)).word)[2];
    }
    return out;
}

std::vector<Shape> orbit_closure(const RelationSet& q, const Shape& u) {
    validate_shape(u);
    std::set<std::vector<Generator>> seen{u.assign};
    std::deque<Shape> queue{u};
    std::vector<Shape> orbit;
    while (!queue.empty()) {
        Shape cur = std::move(queue.front());
        queue.pop_front();
        for (int s = 0; s < u.rank(); ++s) {
            Shape next = nabla(q, cur, s);
            if (seen.insert(next.assign).second) queue.push_back(next);
        }
        orbit.push_back(std::move(cur));
    }
    return orbit;
}

namespace {

std::vector<std::pair<int, int>> relabelled_chords(const Shape& u,
                                                   const std::map<int, int>& f) {
    std::vector<std::pair<int, int>> out;
    out.reserve(u.assign.size());
    for (Generator g : u.assign) {
        int x = f.at(g.a), y = f.at(g.b);
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> canonical_shape(const Shape& u, ShapeQuotient quotient) {
    std::vector<int> supp = u.support();
    const int k = static_cast<int>(supp.size());
    std::map<int, int> inc, dec;
    for (int i = 0; i < k; ++i) {
        inc[supp[i]] = i;
        dec[supp[i]] = k - 1 - i;
    }
    auto up = relabelled_chords(u, inc);
    auto down = relabelled_chords(u, dec);
    if (quotient == ShapeQuotient::SimS) {
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
    }
    return std::min(up, down);
}

bool is_reducible_shape(const RelationSet& q, const Shape& u) {
    const int k = u.rank();
    if (k <= 1) return false;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        if (mask > ((~mask) & ((1u << k) - 1))) continue;
        bool all_commute = true;
        for (int a = 0; a < k && all_commute; ++a) {
            if (!(mask >> a & 1)) continue;
            for (int b = 0; b < k; ++b) {
                if (mask >> b & 1) continue;
                if (q.relation_through(u.at(a), u.at(b)).k != 2) {
                    all_commute = false;
                    break;
                }
            }
        }
        if (all_commute) return true;
    }
    return false;
}

Shape cyclic_permute(const Shape& u, int j) {
    std::vector<int> supp = u.support();
    const int k = static_cast<int>(supp.size());
    std::map<int, int> f;
    for (int i = 0; i < k; ++i) f[supp[i]] = supp[((i + j) % k + k) % k];
    Shape out = u;
    for (size_t i = 0; i < out.assign.size(); ++i) {
        int x = f.at(u.assign[i].a), y = f.at(u.assign[i].b);
        out.assign[i] = {std::min(x, y), std::max(x, y)};
    }
    return out;
}

Rank3Classification classify_shapes_rank3(int n) {
    if (n < 6) throw DomainError("classify_shapes_rank3: needs n >= 6 (six-point supports)");
    RelationSet q = RelationSet::build(n);
    std::vector<Generator> gens = generators(5);  // chords on points 0..5

    // Irreducible 3-chord sets whose support is an initial segment {0..k-1}.
    std::vector<Shape> all;
    const int g = static_cast<int>(gens.size());
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int l = j + 1; l < g; ++l) {
                Shape u;
                u.n = n;
                u.colours = {"r", "s", "t"};
                u.assign = {gens[i], gens[j], gens[l]};
                std::set<Generator> distinct(u.assign.begin(), u.assign.end());
                if (distinct.size() != 3) continue;
                std::vector<int> supp = u.support();
                if (supp.back() != static_cast<int>(supp.size()) - 1) continue;
                if (is_reducible_shape(q, u)) continue;
                all.push_back(std::move(u));
            }

    // Quotient by ~_s.
    std::map<std::vector<std::pair<int, int>>, int> class_of;
    std::vector<ShapeClass> classes;
    for (const Shape& u : all) {
        auto key = canonical_shape(u, ShapeQuotient::SimS);
        if (!class_of.count(key)) {
            class_of[key] = static_cast<int>(classes.size());
            ShapeClass c;
            c.representative = key;
            classes.push_back(std::move(c));
        }
        classes[class_of[key]].members.push_back(key);
    }
    for (ShapeClass& c : classes) {
        std::sort(c.members.begin(), c.members.end());
        c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    }

    // Known representatives fix the labels L1..L6.
    const std::vector<std::vector<std::pair<int, int>>> named = {
        {{0, 2}, {1, 3}, {2, 4}},  // L1
        {{0, 2}, {1, 3}, {1, 4}},  // L2
        {{0, 2}, {0, 3}, {1, 4}},  // L3
        {{0, 3}, {1, 4}, {2, 5}},  // L4
        {{0, 2}, {1, 4}, {3, 5}},  // L5
        {{0, 3}, {1, 5}, {2, 4}},  // L6
    };
    for (ShapeClass& c : classes) {
        for (size_t i = 0; i < named.size(); ++i) {
            Shape probe;
            probe.n = n;
            probe.colours = {"r", "s", "t"};
            for (auto [a, b] : named[i]) probe.assign.push_back({a, b});
            if (canonical_shape(probe, ShapeQuotient::SimS) == c.representative) {
                c.label = "L" + std::to_string(i + 1);
                break;
            }
        }
        if (c.label.empty()) c.label = "unnamed";
    }
    std::sort(classes.begin(), classes.end(),
              [](const ShapeClass& a, const ShapeClass& b) { return a.label < b.label; });
    class_of.clear();
    for (size_t i = 0; i < classes.size(); ++i)
        for (const auto& key : classes[i].members) class_of[key] = static_cast<int>(i);

    // Merge classes linked through nabla orbits (isomorphism in the groupoid).
    std::vector<int> parent(classes.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Shape& u : all) {
        int cu = find(class_of.at(canonical_shape(u, ShapeQuotient::SimS)));
        for (const Shape& v : orbit_closure(q, u)) {
            auto key = canonical_shape(v, ShapeQuotient::SimS);
            auto it = class_of.find(key);
            if (it == class_of.end()) continue;  // reducible or out-of-range member
            int cv = find(it->second);
            if (cu != cv) parent[cv] = cu;
            cu = find(cu);
        }
    }

    Rank3Classification out;
    out.sim_s_classes = classes;
    std::map<int, std::vector<std::string>> groups;
    for (size_t i = 0; i < classes.size(); ++i)
        groups[find(static_cast<int>(i))].push_back(classes[i].label);
    for (auto& [root, labels] : groups) {
        std::sort(labels.begin(), labels.end());
        out.merged.push_back(labels);
    }
    std::sort(out.merged.begin(), out.merged.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return out;
}

}  // namespace fcg
