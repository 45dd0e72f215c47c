#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fcg/arrangement.hpp"
#include "fcg/errors.hpp"
#include "fcg/fixtures.hpp"
#include "fcg/gamma.hpp"
#include "fcg/graph.hpp"
#include "fcg/realisation.hpp"
#include "fcg/relations.hpp"
#include "fcg/sequences.hpp"
#include "fcg/shape.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;        // success / positive verdict
constexpr int kNegative = 1;  // clean negative mathematical verdict
constexpr int kError = 2;     // operational failure

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

fcg::FullyColouredGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fcg::MalformedInput("cannot open graph file: " + path);
    json j;
    in >> j;
    return fcg::graph_from_json(j);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw fcg::MalformedInput("cannot open output file: " + path);
    out << text;
}

void output_graph(const fcg::FullyColouredGraph& g, const std::string& out_path, bool dot) {
    json j = fcg::graph_to_json(g);
    if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
    if (dot)
        std::cout << fcg::graph_to_dot(g);
    else
        emit(j);
}

json vector_to_json(const std::vector<fcg::Int>& v) {
    json arr = json::array();
    for (const fcg::Int& x : v) arr.push_back(static_cast<long long>(x));
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for fully coloured graphs, interval-reversal relations,\n"
                 "admissible graphs and simplicial hyperplane arrangements"};
    app.require_subcommand(1);
    int rc = kOk;

    // qn --n N
    {
        auto* cmd = app.add_subcommand("qn", "list the relation word set");
        auto n = std::make_shared<int>(0);
        cmd->add_option("--n", *n, "alphabet parameter")->required();
        cmd->callback([n, &rc] {
            fcg::RelationSet q = fcg::RelationSet::build(*n);
            json j;
            j["n"] = *n;
            j["count"] = q.words().size();
            json words = json::array();
            for (const fcg::Word& w : q.words()) words.push_back(fcg::format_word(w));
            j["words"] = std::move(words);
            emit(j);
            rc = kOk;
        });
    }

    // star --n N a b
    {
        auto* cmd = app.add_subcommand("star", "wall-relabelling operation a*b");
        auto n = std::make_shared<int>(0);
        auto toks = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--n", *n, "alphabet parameter")->required();
        cmd->add_option("letters", *toks, "two generator tokens a,b")->expected(2);
        cmd->callback([n, toks, &rc] {
            fcg::RelationSet q = fcg::RelationSet::build(*n);
            fcg::Generator a = fcg::parse_generator((*toks)[0]);
            fcg::Generator b = fcg::parse_generator((*toks)[1]);
            json j;
            j["result"] = fcg::format_generator(q.star(a, {b}));
            emit(j);
            rc = kOk;
        });
    }

    // act --n N g x
    {
        auto* cmd = app.add_subcommand("act", "permutation action of a generator on 1..n");
        auto n = std::make_shared<int>(0);
        auto gen = std::make_shared<std::string>();
        auto x = std::make_shared<int>(0);
        cmd->add_option("--n", *n, "alphabet parameter")->required();
        cmd->add_option("generator", *gen, "generator token a,b")->required();
        cmd->add_option("x", *x, "point in 1..n")->required();
        cmd->callback([n, gen, x, &rc] {
            json j;
            j["result"] = fcg::perm_action(*n, fcg::parse_generator(*gen), *x);
            emit(j);
            rc = kOk;
        });
    }

    // build --n N --shape S --cap C [--out file] [--dot]
    {
        auto* cmd = app.add_subcommand("build", "construct the admissible graph of a shape");
        auto n = std::make_shared<int>(0);
        auto shape = std::make_shared<std::string>();
        auto cap = std::make_shared<int>(64);
        auto out = std::make_shared<std::string>();
        auto dot = std::make_shared<bool>(false);
        cmd->add_option("--n", *n, "alphabet parameter")->required();
        cmd->add_option("--shape", *shape, "shape text, e.g. r=0,2;s=1,3;t=2,4")->required();
        cmd->add_option("--cap", *cap, "BFS radius cap");
        cmd->add_option("--out", *out, "write graph JSON to file");
        cmd->add_flag("--dot", *dot, "emit DOT instead of JSON");
        cmd->callback([n, shape, cap, out, dot, &rc] {
            fcg::RelationSet q = fcg::RelationSet::build(*n);
            fcg::AdmissibleGraph ag = fcg::build_gamma(q, fcg::parse_shape(*n, *shape), *cap);
            json j = fcg::graph_to_json(ag.graph);
            j["complete"] = ag.complete;
            if (!out->empty()) write_file(*out, j.dump(2) + "\n");
            if (*dot)
                std::cout << fcg::graph_to_dot(ag.graph);
            else
                emit(j);
            rc = kOk;
        });
    }

    // check graph.json
    {
        auto* cmd = app.add_subcommand("check", "validate a graph and run the realisability criterion");
        auto path = std::make_shared<std::string>();
        cmd->add_option("graph", *path, "graph JSON file")->required();
        cmd->callback([path, &rc] {
            fcg::FullyColouredGraph g = load_graph(*path);
            json j;
            auto axioms = fcg::validate_graph(g);
            j["valid"] = axioms.empty();
            j["axiomViolations"] = axioms;
            if (!axioms.empty()) {
                j["realisable"] = nullptr;
                emit(j);
                rc = kNegative;
                return;
            }
            fcg::RealisabilityVerdict verdict = fcg::check_realisable_233(g);
            j["realisable"] = verdict.realisable;
            json viols = json::array();
            for (const auto& [seq, reason] : verdict.violations) {
                json v;
                v["sequence"] = seq.entries;
                v["colours"] = {g.colours[seq.s], g.colours[seq.t], g.colours[seq.r]};
                v["throughVertex"] = seq.through_vertex;
                v["reason"] = reason;
                viols.push_back(std::move(v));
            }
            j["violations"] = std::move(viols);
            emit(j);
            rc = verdict.realisable ? kOk : kNegative;
        });
    }

    // realise graph.json [--out file]
    {
        auto* cmd = app.add_subcommand("realise", "compute the standard realisation frames");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("graph", *path, "graph JSON file")->required();
        cmd->add_option("--out", *out, "write realisation JSON to file");
        cmd->callback([path, out, &rc] {
            fcg::FullyColouredGraph g = load_graph(*path);
            try {
                fcg::Realisation r = fcg::realise(g);
                json j = fcg::realisation_to_json(r);
                if (!out->empty()) write_file(*out, j.dump(2) + "\n");
                emit(j);
                rc = kOk;
            } catch (const fcg::NotRealisableError& e) {
                json j;
                j["realisable"] = false;
                j["reason"] = e.what();
                j["witnessCycle"] = e.witness_cycle;
                emit(j);
                rc = kNegative;
            }
        });
    }

    // verify realisation.json
    {
        auto* cmd = app.add_subcommand("verify",
                                       "chamber disjointness, residue walls and half-space checks");
        auto path = std::make_shared<std::string>();
        auto samples = std::make_shared<int>(0);
        cmd->add_option("realisation", *path, "realisation JSON file")->required();
        cmd->add_option("--samples", *samples, "half-space sample budget (0 = exhaustive)");
        cmd->callback([path, samples, &rc] {
            std::ifstream in(*path);
            if (!in) throw fcg::MalformedInput("cannot open realisation file: " + *path);
            json input;
            in >> input;
            fcg::Realisation r = fcg::realisation_from_json(input);
            json j;
            bool disjoint = fcg::verify_chamber_disjointness(r);
            bool walls = fcg::verify_residue_walls(r);
            bool halfspace = fcg::halfspace_check(r, *samples);
            j["disjoint"] = disjoint;
            j["walls"] = walls;
            j["halfspace"] = halfspace;
            emit(j);
            rc = disjoint && walls && halfspace ? kOk : kNegative;
        });
    }

    // chambers --forms file
    {
        auto* cmd = app.add_subcommand("chambers", "sign vectors of the arrangement chambers");
        auto forms = std::make_shared<std::string>();
        cmd->add_option("--forms", *forms, "forms file")->required();
        cmd->callback([forms, &rc] {
            auto chambers = fcg::arrangement_chambers(fcg::parse_forms_file(*forms));
            json j;
            j["count"] = chambers.size();
            j["chambers"] = chambers;
            emit(j);
            rc = kOk;
        });
    }

    // dual --forms file [--out file] [--dot]
    {
        auto* cmd = app.add_subcommand("dual", "fully coloured graph dual to an arrangement");
        auto forms = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto dot = std::make_shared<bool>(false);
        cmd->add_option("--forms", *forms, "forms file")->required();
        cmd->add_option("--out", *out, "write graph JSON to file");
        cmd->add_flag("--dot", *dot, "emit DOT instead of JSON");
        cmd->callback([forms, out, dot, &rc] {
            fcg::FullyColouredGraph g = fcg::dual_graph(fcg::parse_forms_file(*forms));
            output_graph(g, *out, *dot);
            rc = kOk;
        });
    }

    // poincare --forms file
    {
        auto* cmd = app.add_subcommand("poincare", "Poincaré polynomial of the intersection lattice");
        auto forms = std::make_shared<std::string>();
        cmd->add_option("--forms", *forms, "forms file")->required();
        cmd->callback([forms, &rc] {
            auto coeffs = fcg::intersection_poincare(fcg::parse_forms_file(*forms));
            emit(vector_to_json(coeffs));
            rc = kOk;
        });
    }

    // iso a.json b.json [--perm]
    {
        auto* cmd = app.add_subcommand("iso", "coloured-graph isomorphism");
        auto pa = std::make_shared<std::string>();
        auto pb = std::make_shared<std::string>();
        auto perm = std::make_shared<bool>(false);
        cmd->add_option("a", *pa, "first graph JSON file")->required();
        cmd->add_option("b", *pb, "second graph JSON file")->required();
        cmd->add_flag("--perm", *perm, "allow colour permutations");
        cmd->callback([pa, pb, perm, &rc] {
            fcg::FullyColouredGraph a = load_graph(*pa);
            fcg::FullyColouredGraph b = load_graph(*pb);
            auto iso = fcg::isomorphic(a, b, *perm);
            json j;
            j["isomorphic"] = iso.has_value();
            if (iso) {
                json cmap;
                for (int s = 0; s < a.rank(); ++s)
                    cmap[a.colours[s]] = b.colours[iso->colour_map[s]];
                j["colourMap"] = std::move(cmap);
                j["vertexMap"] = iso->vertex_map;
            }
            emit(j);
            rc = iso ? kOk : kNegative;
        });
    }

    // classify3 --n N
    {
        auto* cmd = app.add_subcommand("classify3", "rank-3 shape classification");
        auto n = std::make_shared<int>(6);
        cmd->add_option("--n", *n, "alphabet parameter (>= 6)");
        cmd->callback([n, &rc] {
            fcg::Rank3Classification cls = fcg::classify_shapes_rank3(*n);
            json j;
            j["simSClassCount"] = cls.sim_s_classes.size();
            json classes = json::array();
            for (const fcg::ShapeClass& c : cls.sim_s_classes) {
                json jc;
                jc["label"] = c.label;
                json rep = json::array();
                for (auto [a, b] : c.representative)
                    rep.push_back(std::to_string(a) + "," + std::to_string(b));
                jc["representative"] = std::move(rep);
                classes.push_back(std::move(jc));
            }
            j["classes"] = std::move(classes);
            j["mergedClassCount"] = cls.merged.size();
            j["merged"] = cls.merged;
            emit(j);
            rc = kOk;
        });
    }

    // rank4 --cap C
    {
        auto* cmd = app.add_subcommand("rank4", "irreducible rank-4 catalog report");
        auto cap = std::make_shared<int>(64);
        cmd->add_option("--cap", *cap, "BFS radius cap");
        cmd->callback([cap, &rc] {
            fcg::Rank4Report rep = fcg::rank4_catalog(*cap);
            auto entry = [](const fcg::Rank4Entry& e) {
                json j;
                j["complete"] = e.complete;
                j["vertices"] = e.vertices;
                j["realisable"] = e.realisable;
                j["irreducible"] = e.irreducible;
                j["mIn23"] = e.m_in_23;
                j["isomorphicA4"] = e.isomorphic_a4;
                j["isomorphicD4"] = e.isomorphic_d4;
                return j;
            };
            json j;
            j["u13"] = entry(rep.u13);
            j["u15"] = entry(rep.u15);
            j["a4Vertices"] = rep.a4_vertices;
            j["d4Vertices"] = rep.d4_vertices;
            emit(j);
            rc = rep.u13.complete && rep.u15.complete ? kOk : kNegative;
        });
    }

    // kneq --n N w1 w2
    {
        auto* cmd = app.add_subcommand("kneq", "word equality in the presented group");
        auto n = std::make_shared<int>(0);
        auto words = std::make_shared<std::vector<std::string>>();
        auto cap = std::make_shared<int>(4096);
        cmd->add_option("--n", *n, "alphabet parameter")->required();
        cmd->add_option("words", *words, "two quoted words")->expected(2);
        cmd->add_option("--cap", *cap, "exploration cap");
        cmd->callback([n, words, cap, &rc] {
            fcg::RelationSet q = fcg::RelationSet::build(*n);
            fcg::GammaState a = fcg::kn_apply(q, fcg::parse_word((*words)[0]), *cap);
            fcg::GammaState b = fcg::kn_apply(q, fcg::parse_word((*words)[1]), *cap);
            bool equal = a.object == b.object && a.matrix == b.matrix;
            json j;
            j["equal"] = equal;
            emit(j);
            rc = equal ? kOk : kNegative;
        });
    }

    // probe-cyclic --n N --shape S --cap C
    {
        auto* cmd = app.add_subcommand("probe-cyclic",
                                       "compare Gamma over cyclic permutations of a shape");
        auto n = std::make_shared<int>(0);
        auto shape = std::make_shared<std::string>();
        auto cap = std::make_shared<int>(64);
        cmd->add_option("--n", *n, "alphabet parameter")->required();
        cmd->add_option("--shape", *shape, "shape text")->required();
        cmd->add_option("--cap", *cap, "BFS radius cap");
        cmd->callback([n, shape, cap, &rc] {
            fcg::RelationSet q = fcg::RelationSet::build(*n);
            auto entries = fcg::probe_cyclic_conjecture(q, fcg::parse_shape(*n, *shape), *cap);
            json j = json::array();
            bool all = true;
            for (const fcg::CyclicProbeEntry& e : entries) {
                json je;
                je["shift"] = e.shift;
                je["completed"] = e.completed;
                je["isomorphic"] = e.isomorphic;
                all = all && e.isomorphic;
                j.push_back(std::move(je));
            }
            emit(j);
            rc = all ? kOk : kNegative;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return rc;
}
