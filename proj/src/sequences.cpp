#include "fcg/sequences.hpp"

#include "fcg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fcg {

int n_value(int m) {
    switch (m) {
        case 2: return 0;
        case 3: return 1;
        case kInfiniteM: return 2;
        default: {
            std::ostringstream os;
            os << "m-value " << m << " outside {2,3,inf}";
            throw DomainError(os.str());
        }
    }
}

std::vector<int> canonical_cycle(std::vector<int> seq) {
    if (seq.empty()) return seq;
    std::vector<int> best = seq;
    auto consider = [&](std::vector<int> v) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v < best) best = v;
            std::rotate(v.begin(), v.begin() + 1, v.end());
        }
    };
    consider(seq);
    std::reverse(seq.begin(), seq.end());
    consider(seq);
    return best;
}

std::vector<StructureSequence> structure_sequences(const FullyColouredGraph& g) {
    const int k = g.rank();
    std::vector<StructureSequence> out;
    for (Colour s = 0; s < k; ++s) {
        for (Colour t = s + 1; t < k; ++t) {
            for (const Residue& res : two_residues(g, s, t)) {
                if (!residue_closed(g, res)) continue;
                int mv = g.m(res.through_vertex, s, t);
                n_value(mv);  // domain check
                if (mv == kInfiniteM) continue;
                for (Colour r = 0; r < k; ++r) {
                    if (r == s || r == t) continue;
                    std::vector<int> entries;
                    entries.reserve(2 * mv);
                    Vertex v = res.through_vertex;
                    for (int i = 0; i < mv; ++i) {
                        entries.push_back(n_value(g.m(v, r, s)));
                        v = g.act(v, s);
                        entries.push_back(n_value(g.m(v, r, t)));
                        v = g.act(v, t);
                    }
                    StructureSequence seq;
                    seq.s = s;
                    seq.t = t;
                    seq.r = r;
                    seq.through_vertex = res.through_vertex;
                    seq.entries = canonical_cycle(std::move(entries));
                    out.push_back(std::move(seq));
                }
            }
        }
    }
    return out;
}

namespace {

bool hexagon_condition(const std::vector<int>& e) {
    // (-1)^i (e_i - e_{i+3}) constant over i.
    int c = e[0] - e[3];
    return -(e[1] - e[4]) == c && e[2] - e[5] == c;
}

}  // namespace

RealisabilityVerdict check_realisable_233(const FullyColouredGraph& g) {
    auto axioms = validate_graph(g);
    if (!axioms.empty())
        throw DomainError("check_realisable_233: graph fails validation: " + axioms.front());
    RealisabilityVerdict verdict;
    verdict.realisable = true;
    for (StructureSequence& seq : structure_sequences(g)) {
        const auto& e = seq.entries;
        if (e.size() == 4) {
            if (e[0] != e[2] || e[1] != e[3]) {
                verdict.realisable = false;
                verdict.violations.emplace_back(std::move(seq),
                                                "length-4 sequence is not of the form (n1,n2,n1,n2)");
            }
        } else if (e.size() == 6) {
            if (!hexagon_condition(e)) {
                verdict.realisable = false;
                verdict.violations.emplace_back(
                    std::move(seq), "length-6 sequence fails the alternating-difference condition");
            }
        }
    }
    return verdict;
}

std::set<std::vector<int>> enumerate_valid_hexagons() {
    std::set<std::vector<int>> out;
    std::vector<int> e(6);
    for (e[0] = 0; e[0] < 3; ++e[0])
        for (e[1] = 0; e[1] < 3; ++e[1])
            for (e[2] = 0; e[2] < 3; ++e[2])
                for (e[3] = 0; e[3] < 3; ++e[3])
                    for (e[4] = 0; e[4] < 3; ++e[4])
                        for (e[5] = 0; e[5] < 3; ++e[5])
                            if (hexagon_condition(e)) out.insert(canonical_cycle(e));
    return out;
}

std::string sequence_to_string(const std::vector<int>& seq) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) os << ',';
        os << seq[i];
    }
    os << ')';
    return os.str();
}

}  // namespace fcg
