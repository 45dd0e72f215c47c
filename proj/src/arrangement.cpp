#include "fcg/arrangement.hpp"

#include "fcg/errors.hpp"
#include "fcg/linear.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fcg {

std::vector<Form> parse_forms(std::istream& in) {
    std::vector<Form> forms;
    std::string line;
    size_t dim = 0;
    while (std::getline(in, line)) {
        std::istringstream is(line);
        Form f;
        long long x;
        while (is >> x) f.emplace_back(x);
        if (!is.eof() && is.fail()) throw MalformedInput("forms file: non-integer token in '" + line + "'");
        if (f.empty()) continue;
        if (dim == 0) dim = f.size();
        if (f.size() != dim) throw MalformedInput("forms file: ragged line '" + line + "'");
        if (std::all_of(f.begin(), f.end(), [](const Int& v) { return v == 0; }))
            throw MalformedInput("forms file: zero form");
        forms.push_back(std::move(f));
    }
    if (forms.empty()) throw MalformedInput("forms file: no forms");
    return forms;
}

std::vector<Form> parse_forms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open forms file: " + path);
    return parse_forms(in);
}

namespace {

Int dot(const Form& f, const std::vector<Int>& x) {
    Int s = 0;
    for (size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
    return s;
}

int sign_of(const Int& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

/// Integer points ordered by increasing max-norm, lexicographic within a
/// shell, until every form is nonzero.
std::vector<Int> seed_point(const std::vector<Form>& forms) {
    const int d = static_cast<int>(forms.front().size());
    for (long long norm = 1; norm <= 1024; ++norm) {
        std::vector<long long> p(d, -norm);
        for (;;) {
            long long maxnorm = 0;
            for (long long c : p) maxnorm = std::max(maxnorm, c < 0 ? -c : c);
            if (maxnorm == norm) {  // inner points were scanned in earlier shells
                std::vector<Int> x(p.begin(), p.end());
                bool ok = true;
                for (const Form& f : forms)
                    if (dot(f, x) == 0) { ok = false; break; }
                if (ok) return x;
            }
            int i = d - 1;
            while (i >= 0 && p[i] == norm) {
                p[i] = -norm;
                --i;
            }
            if (i < 0) break;
            ++p[i];
        }
    }
    throw MalformedInput("no generic integer seed point within the scan bound");
}

std::string flip(std::string sv, size_t i) {
    sv[i] = sv[i] == '+' ? '-' : '+';
    return sv;
}

std::vector<Constraint> chamber_system(const std::vector<Form>& forms, const std::string& sv) {
    std::vector<Constraint> system;
    for (size_t i = 0; i < forms.size(); ++i) {
        std::vector<Int> c = forms[i];
        if (sv[i] == '-')
            for (Int& x : c) x = -x;
        system.push_back(gt(std::move(c)));
    }
    return system;
}

}  // namespace

std::vector<std::string> arrangement_chambers(const std::vector<Form>& forms) {
    auto seed = seed_point(forms);
    std::string sv;
    for (const Form& f : forms) sv.push_back(sign_of(dot(f, seed)) > 0 ? '+' : '-');

    std::set<std::string> chambers{sv};
    std::deque<std::string> queue{sv};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < forms.size(); ++i) {
            std::string nb = flip(cur, i);
            if (chambers.count(nb)) continue;
            // Shared facet on H_i, then the flipped strict system.
            std::vector<Constraint> wall = chamber_system(forms, cur);
            wall[i] = eq(forms[i]);
            if (!fm_feasible(wall)) continue;
            if (!fm_feasible(chamber_system(forms, nb))) continue;
            chambers.insert(nb);
            queue.push_back(nb);
        }
    }
    return {chambers.begin(), chambers.end()};
}

namespace {

/// Canonical reduced row echelon form over Q, rows rescaled to primitive
/// integer vectors.
std::vector<std::vector<Int>> rref(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    const size_t d = rows.front().size();
    std::vector<std::vector<Rat>> w;
    for (const auto& r : rows) w.emplace_back(r.begin(), r.end());
    size_t rr = 0;
    for (size_t col = 0; col < d && rr < w.size(); ++col) {
        size_t p = rr;
        while (p < w.size() && w[p][col] == 0) ++p;
        if (p == w.size()) continue;
        std::swap(w[rr], w[p]);
        Rat piv = w[rr][col];
        for (size_t j = 0; j < d; ++j) w[rr][j] /= piv;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i == rr || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (size_t j = 0; j < d; ++j) w[i][j] -= f * w[rr][j];
        }
        ++rr;
    }
    std::vector<std::vector<Int>> out;
    for (size_t i = 0; i < rr; ++i) {
        // Clear denominators, normalise primitive.
        Int lcm = 1;
        for (const Rat& x : w[i]) {
            Int den = denominator(x);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::vector<Int> row(d);
        for (size_t j = 0; j < d; ++j)
            row[j] = static_cast<Int>(numerator(w[i][j]) * (lcm / denominator(w[i][j])));
        normalise_primitive(row);
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int rank_of(const std::vector<std::vector<Int>>& rows) {
    return static_cast<int>(rref(rows).size());
}

/// Primitive integer kernel direction of a rank d-1 row set.
std::vector<Int> kernel_direction(const std::vector<std::vector<Int>>& rows, int d) {
    auto r = rref(rows);
    // Identify the free column.
    std::vector<char> is_pivot(d, 0);
    for (const auto& row : r) {
        for (int j = 0; j < d; ++j)
            if (row[j] != 0) {
                is_pivot[j] = 1;
                break;
            }
    }
    int free_col = -1;
    for (int j = 0; j < d; ++j)
        if (!is_pivot[j]) { free_col = j; break; }
    if (free_col < 0) throw IntegrityError("kernel_direction: rows have full rank");

    // Back-substitute with the free variable set to a common denominator.
    std::vector<Rat> x(d, 0);
    x[free_col] = 1;
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        int lead = -1;
        for (int j = 0; j < d; ++j)
            if ((*it)[j] != 0) { lead = j; break; }
        Rat sum = 0;
        for (int j = lead + 1; j < d; ++j) sum += Rat((*it)[j]) * x[j];
        x[lead] = -sum / Rat((*it)[lead]);
    }
    Int lcm = 1;
    for (const Rat& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<Int> out(d);
    for (int j = 0; j < d; ++j) out[j] = static_cast<Int>(numerator(x[j]) * (lcm / denominator(x[j])));
    normalise_primitive(out);
    return out;
}

}  // namespace

FullyColouredGraph dual_graph(const std::vector<Form>& forms) {
    const int d = static_cast<int>(forms.front().size());
    {
        std::vector<std::vector<Int>> rows(forms.begin(), forms.end());
        if (rank_of(rows) != d)
            throw UnsupportedArrangement("arrangement is not essential");
    }
    std::vector<std::string> chambers = arrangement_chambers(forms);
    const int nch = static_cast<int>(chambers.size());
    std::map<std::string, int> chamber_index;
    for (int i = 0; i < nch; ++i) chamber_index[chambers[i]] = i;

    // Rays: sign-consistent directions on rank d-1 intersections.
    std::vector<std::vector<Int>> rays;
    std::set<std::vector<Int>> ray_set;
    std::vector<char> choose(forms.size(), 0);
    std::fill(choose.end() - (d - 1), choose.end(), 1);
    std::sort(choose.begin(), choose.end());
    do {
        std::vector<std::vector<Int>> rows;
        for (size_t i = 0; i < forms.size(); ++i)
            if (choose[i]) rows.push_back(forms[i]);
        if (rank_of(rows) != d - 1) continue;
        std::vector<Int> v = kernel_direction(rows, d);
        for (int sgn = 0; sgn < 2; ++sgn) {
            std::vector<Int> dir = v;
            if (sgn) for (Int& x : dir) x = -x;
            if (ray_set.insert(dir).second) rays.push_back(dir);
        }
    } while (std::next_permutation(choose.begin(), choose.end()));
    std::sort(rays.begin(), rays.end());

    // Signs of every ray on every form; chamber membership.
    const int nr = static_cast<int>(rays.size());
    std::vector<std::vector<int>> ray_sign(nr, std::vector<int>(forms.size()));
    for (int r = 0; r < nr; ++r)
        for (size_t i = 0; i < forms.size(); ++i) ray_sign[r][i] = sign_of(dot(forms[i], rays[r]));

    auto ray_in_chamber = [&](int r, int c) {
        for (size_t i = 0; i < forms.size(); ++i) {
            if (ray_sign[r][i] == 0) continue;
            if ((ray_sign[r][i] > 0) != (chambers[c][i] == '+')) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> chamber_rays(nch);
    for (int c = 0; c < nch; ++c) {
        for (int r = 0; r < nr; ++r)
            if (ray_in_chamber(r, c)) chamber_rays[c].push_back(r);
        if (static_cast<int>(chamber_rays[c].size()) != d)
            throw UnsupportedArrangement("chamber " + chambers[c] + " has " +
                                         std::to_string(chamber_rays[c].size()) +
                                         " extreme rays; simplicial chambers need exactly " +
                                         std::to_string(d));
        IMat mat(d);
        for (int col = 0; col < d; ++col)
            for (int row = 0; row < d; ++row)
                mat.at(row, col) = static_cast<long long>(rays[chamber_rays[c][col]][row]);
        if (det(mat) == 0)
            throw UnsupportedArrangement("chamber " + chambers[c] + " has dependent rays");
    }

    // Neighbours share exactly d-1 rays.
    std::map<std::vector<int>, std::vector<int>> facet_to_chambers;
    for (int c = 0; c < nch; ++c) {
        for (int drop = 0; drop < d; ++drop) {
            std::vector<int> facet;
            for (int i = 0; i < d; ++i)
                if (i != drop) facet.push_back(chamber_rays[c][i]);
            facet_to_chambers[facet].push_back(c);
        }
    }
    for (const auto& [facet, cs] : facet_to_chambers)
        if (cs.size() != 2)
            throw UnsupportedArrangement("a codimension-1 face is not shared by exactly two chambers");

    // Colour rays by propagation from the seed chamber.
    std::vector<int> ray_colour(nr, -1);
    for (int i = 0; i < d; ++i) ray_colour[chamber_rays[0][i]] = i;
    std::deque<int> queue{0};
    std::vector<char> visited(nch, 0);
    visited[0] = 1;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int drop = 0; drop < d; ++drop) {
            std::vector<int> facet;
            for (int i = 0; i < d; ++i)
                if (i != drop) facet.push_back(chamber_rays[c][i]);
            const auto& pair = facet_to_chambers.at(facet);
            int other = pair[0] == c ? pair[1] : pair[0];
            int dropped_colour = ray_colour[chamber_rays[c][drop]];
            if (dropped_colour < 0) throw IntegrityError("uncoloured ray during propagation");
            int new_ray = -1;
            for (int rr : chamber_rays[other])
                if (std::find(facet.begin(), facet.end(), rr) == facet.end()) new_ray = rr;
            if (ray_colour[new_ray] == -1)
                ray_colour[new_ray] = dropped_colour;
            else if (ray_colour[new_ray] != dropped_colour)
                throw UnsupportedArrangement("ray colouring propagation conflict");
            if (!visited[other]) {
                visited[other] = 1;
                queue.push_back(other);
            }
        }
    }
    for (int c = 0; c < nch; ++c) {
        std::set<int> cols;
        for (int r : chamber_rays[c]) {
            if (ray_colour[r] < 0) throw UnsupportedArrangement("ray left uncoloured");
            cols.insert(ray_colour[r]);
        }
        if (static_cast<int>(cols.size()) != d)
            throw UnsupportedArrangement("chamber with repeated ray colours");
    }

    // Assemble the graph.
    FullyColouredGraph g;
    for (int i = 0; i < d; ++i) g.colours.push_back("c" + std::to_string(i));
    g.vertex_count = nch;
    g.base = 0;
    g.action.assign(nch, std::vector<Vertex>(d, kNoVertex));
    g.m_table.assign(nch, std::vector<std::vector<int>>(d, std::vector<int>(d, 1)));
    auto ray_of_colour = [&](int c, int colour) {
        for (int r : chamber_rays[c])
            if (ray_colour[r] == colour) return r;
        throw IntegrityError("chamber misses a colour");
    };
    for (int c = 0; c < nch; ++c) {
        for (int s = 0; s < d; ++s) {
            std::vector<int> facet;
            int drop_ray = ray_of_colour(c, s);
            for (int r : chamber_rays[c])
                if (r != drop_ray) facet.push_back(r);
            const auto& pair = facet_to_chambers.at(facet);
            g.action[c][s] = pair[0] == c ? pair[1] : pair[0];
        }
    }
    for (int c = 0; c < nch; ++c) {
        for (int s = 0; s < d; ++s) {
            for (int t = 0; t < d; ++t) {
                if (s == t) continue;
                // Codim-2 face spanned by the rays of the other colours.
                std::vector<int> face_rays;
                for (int r : chamber_rays[c])
                    if (ray_colour[r] != s && ray_colour[r] != t) face_rays.push_back(r);
                std::vector<int> tau(forms.size());
                for (size_t i = 0; i < forms.size(); ++i) {
                    bool all_zero = true;
                    for (int r : face_rays)
                        if (ray_sign[r][i] != 0) all_zero = false;
                    tau[i] = all_zero ? 0 : (chambers[c][i] == '+' ? 1 : -1);
                }
                int count = 0;
                for (int other = 0; other < nch; ++other) {
                    bool consistent = true;
                    for (size_t i = 0; i < forms.size() && consistent; ++i) {
                        if (tau[i] == 0) continue;
                        if ((tau[i] > 0) != (chambers[other][i] == '+')) consistent = false;
                    }
                    if (consistent) ++count;
                }
                if (count % 2 != 0)
                    throw UnsupportedArrangement("odd chamber count around a codim-2 face");
                g.m_table[c][s][t] = count / 2;
            }
        }
    }
    return g;
}

int form_rank(const std::vector<Form>& forms) { return rank_of(forms); }

IntersectionLattice build_intersection_lattice(const std::vector<Form>& forms) {
    std::map<std::vector<std::vector<Int>>, int> index;
    IntersectionLattice lattice;
    auto add = [&](std::vector<std::vector<Int>> basis, int codim) {
        if (index.count(basis)) return false;
        index[basis] = static_cast<int>(lattice.elements.size());
        lattice.elements.push_back({std::move(basis), codim, 0});
        return true;
    };
    add({}, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const Form& f : forms) {
            auto rows = lattice.elements[cur].basis;
            rows.push_back(f);
            auto next = rref(std::move(rows));
            int codim = static_cast<int>(next.size());
            if (codim == lattice.elements[cur].codim) continue;  // f contains this subspace
            int before = static_cast<int>(lattice.elements.size());
            if (add(std::move(next), codim)) queue.push_back(before);
        }
    }
    std::sort(lattice.elements.begin(), lattice.elements.end(),
              [](const LatticeElement& a, const LatticeElement& b) {
                  return a.codim != b.codim ? a.codim < b.codim : a.basis < b.basis;
              });

    // contains(x, y): subspace x contains subspace y, i.e. span(x.basis) is
    // inside span(y.basis).
    auto contains = [&](const LatticeElement& x, const LatticeElement& y) {
        for (const auto& row : x.basis) {
            auto probe = y.basis;
            probe.push_back(row);
            if (static_cast<int>(rref(std::move(probe)).size()) != y.codim) return false;
        }
        return true;
    };
    for (size_t i = 0; i < lattice.elements.size(); ++i) {
        LatticeElement& x = lattice.elements[i];
        if (x.codim == 0) {
            x.mu = 1;
            continue;
        }
        Int sum = 0;
        for (size_t j = 0; j < i; ++j) {
            const LatticeElement& y = lattice.elements[j];
            if (y.codim >= x.codim) continue;
            if (contains(y, x)) sum += y.mu;
        }
        x.mu = -sum;
    }
    return lattice;
}

std::vector<Int> intersection_poincare(const std::vector<Form>& forms) {
    IntersectionLattice lattice = build_intersection_lattice(forms);
    int maxcodim = 0;
    for (const auto& e : lattice.elements) maxcodim = std::max(maxcodim, e.codim);
    std::vector<Int> coeffs(maxcodim + 1, 0);
    for (const auto& e : lattice.elements) coeffs[e.codim] += boost::multiprecision::abs(e.mu);
    return coeffs;
}

std::vector<Int> bracket_product(const std::vector<int>& ns) {
    std::vector<Int> poly{1};
    for (int n : ns) {
        std::vector<Int> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * n;
        }
        poly = std::move(next);
    }
    return poly;
}

Int evaluate_poly(const std::vector<Int>& coeffs, const Int& t) {
    Int value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * t + *it;
    return value;
}

}  // namespace fcg
