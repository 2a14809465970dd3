// Command-line front end. Graph arguments accept a graph6 string, a path to
// an edge-list file, or the prefix "named:NAME"; single-graph subcommands
// also take --named NAME. Exit codes: 0 success, 1 disproved assertion,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homg/algebra.hpp"
#include "homg/classify.hpp"
#include "homg/cores.hpp"
#include "homg/graph.hpp"
#include "homg/homsolver.hpp"
#include "homg/iso.hpp"
#include "homg/relations.hpp"

namespace {

using nlohmann::json;

homg::Graph resolve_graph(const std::string& arg, const std::string& named_arg) {
    if (!named_arg.empty()) return homg::named(named_arg);
    if (arg.rfind("named:", 0) == 0) return homg::named(arg.substr(6));
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open " + arg);
        return homg::read_edge_list(in);
    }
    return homg::graph6_decode(arg);
}

homg::Relation load_relation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return homg::read_relation(in);
}

homg::WallMatrix load_wall(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return homg::read_wall(in);
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    return out.str();
}

json verdict_json(const homg::ProjectivityVerdict& v) {
    json j;
    j["status"] = homg::to_string(v.status);
    j["reason"] = v.reason;
    if (v.pp_certificate) {
        j["pp_certificate"] = {{"family", v.pp_certificate->family},
                               {"param", v.pp_certificate->param},
                               {"neq_arity", v.pp_certificate->neq_arity}};
    } else {
        j["pp_certificate"] = nullptr;
    }
    if (v.search_certificate) {
        j["search_certificate"] = {
            {"bound", v.search_certificate->bound},
            {"arities", v.search_certificate->arities_checked}};
    } else {
        j["search_certificate"] = nullptr;
    }
    if (v.witness) {
        j["witness"] = {{"arity", v.witness->arity}, {"table", v.witness->table}};
        j["witness_kind"] = v.witness_kind;
    } else {
        j["witness"] = nullptr;
        j["witness_kind"] = nullptr;
    }
    return j;
}

void print_verdict(const homg::ProjectivityVerdict& v) {
    std::cout << "status: " << homg::to_string(v.status) << '\n';
    if (!v.reason.empty()) std::cout << "reason: " << v.reason << '\n';
    if (v.pp_certificate)
        std::cout << "pp certificate: family " << v.pp_certificate->family
                  << ", param " << v.pp_certificate->param
                  << ", defines disequality on " << v.pp_certificate->neq_arity
                  << " vertices\n";
    if (v.search_certificate)
        std::cout << "search certificate: no semiprojection at arities 2.."
                  << v.search_certificate->bound << '\n';
    if (v.witness)
        std::cout << "witness (" << v.witness_kind << ", arity "
                  << v.witness->arity
                  << ", table in tuple-index order): " << join_ints(v.witness->table)
                  << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph homomorphism algebra toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // hom
    std::string hom_g, hom_h;
    bool hom_json = false;
    auto* hom_cmd = app.add_subcommand("hom", "find a homomorphism G -> H");
    hom_cmd->add_option("G", hom_g, "source graph")->required();
    hom_cmd->add_option("H", hom_h, "target graph")->required();
    hom_cmd->add_flag("--json", hom_json, "structured output");
    hom_cmd->callback([&] {
        homg::Graph g = resolve_graph(hom_g, "");
        homg::Graph h = resolve_graph(hom_h, "");
        auto result = homg::find_hom(g, h);
        if (hom_json) {
            json j;
            j["exists"] = result.has_value();
            if (result)
                j["map"] = result->image;
            else
                j["map"] = nullptr;
            std::cout << j.dump() << '\n';
        } else if (result) {
            std::cout << "homomorphism: " << join_ints(result->image) << '\n';
        } else {
            std::cout << "none\n";
        }
    });

    // core
    std::string core_g, core_named;
    bool core_json = false;
    auto* core_cmd = app.add_subcommand("core", "compute the core of G");
    core_cmd->add_option("G", core_g, "graph");
    core_cmd->add_option("--named", core_named, "bundled graph name");
    core_cmd->add_flag("--json", core_json, "structured output");
    core_cmd->callback([&] {
        homg::Graph g = resolve_graph(core_g, core_named);
        homg::Graph c = homg::compute_core(g);
        std::string g6 = homg::graph6_encode(homg::relabel(c, homg::canon(c).perm));
        if (core_json) {
            json j;
            j["g6"] = g6;
            j["vertices"] = c.n();
            j["edges"] = c.edge_count();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "core: " << g6 << " (" << c.n() << " vertices, "
                      << c.edge_count() << " edges)\n";
        }
    });

    // is-core
    std::string iscore_g, iscore_named;
    bool iscore_json = false;
    auto* iscore_cmd = app.add_subcommand("is-core", "test whether G is a core");
    iscore_cmd->add_option("G", iscore_g, "graph");
    iscore_cmd->add_option("--named", iscore_named, "bundled graph name");
    iscore_cmd->add_flag("--json", iscore_json, "structured output");
    iscore_cmd->callback([&] {
        homg::Graph g = resolve_graph(iscore_g, iscore_named);
        bool core = homg::is_core(g);
        if (iscore_json) {
            json j;
            j["is_core"] = core;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (core ? "core\n" : "not a core\n");
        }
    });

    // odd-girth
    std::string og_g, og_named;
    bool og_json = false;
    auto* og_cmd = app.add_subcommand("odd-girth", "smallest odd cycle length");
    og_cmd->add_option("G", og_g, "graph");
    og_cmd->add_option("--named", og_named, "bundled graph name");
    og_cmd->add_flag("--json", og_json, "structured output");
    og_cmd->callback([&] {
        homg::Graph g = resolve_graph(og_g, og_named);
        auto og = homg::odd_girth(g);
        if (og_json) {
            json j;
            if (og)
                j["odd_girth"] = *og;
            else
                j["odd_girth"] = nullptr;
            std::cout << j.dump() << '\n';
        } else if (og) {
            std::cout << *og << '\n';
        } else {
            std::cout << "none (bipartite)\n";
        }
    });

    // poly
    std::string poly_g, poly_named;
    int poly_arity = 2;
    bool poly_idem = false, poly_json = false;
    auto* poly_cmd = app.add_subcommand("poly", "find a polymorphism of H");
    poly_cmd->add_option("H", poly_g, "graph");
    poly_cmd->add_option("--named", poly_named, "bundled graph name");
    poly_cmd->add_option("--arity", poly_arity, "arity m")->required();
    poly_cmd->add_flag("--idempotent", poly_idem, "pin the diagonal");
    poly_cmd->add_flag("--json", poly_json, "structured output");
    poly_cmd->callback([&] {
        homg::Graph h = resolve_graph(poly_g, poly_named);
        homg::PartialMap pins;
        if (poly_idem) {
            long long size = 1;
            for (int i = 0; i < poly_arity; ++i) size *= h.n();
            pins = homg::PartialMap(static_cast<int>(size));
            for (int x = 0; x < h.n(); ++x) {
                std::vector<int> diag(poly_arity, x);
                pins.set(static_cast<int>(homg::encode_tuple(diag, h.n())), x);
            }
        }
        auto f = homg::find_polymorphism(h, poly_arity, pins);
        if (poly_json) {
            json j;
            j["exists"] = f.has_value();
            if (f)
                j["table"] = f->table;
            else
                j["table"] = nullptr;
            std::cout << j.dump() << '\n';
        } else if (f) {
            std::cout << "polymorphism (tuple-index order): " << join_ints(f->table)
                      << '\n';
        } else {
            std::cout << "none\n";
        }
    });

    // semiproj
    std::string semi_g, semi_named;
    int semi_arity = 2;
    bool semi_json = false;
    auto* semi_cmd = app.add_subcommand("semiproj", "search for a semiprojection");
    semi_cmd->add_option("H", semi_g, "graph");
    semi_cmd->add_option("--named", semi_named, "bundled graph name");
    semi_cmd->add_option("--arity", semi_arity, "arity m >= 2")->required();
    semi_cmd->add_flag("--json", semi_json, "structured output");
    semi_cmd->callback([&] {
        homg::Graph h = resolve_graph(semi_g, semi_named);
        auto f = homg::find_semiprojection(h, semi_arity);
        if (semi_json) {
            json j;
            j["exists"] = f.has_value();
            if (f)
                j["table"] = f->table;
            else
                j["table"] = nullptr;
            std::cout << j.dump() << '\n';
        } else if (f) {
            std::cout << "semiprojection (tuple-index order): "
                      << join_ints(f->table) << '\n';
        } else {
            std::cout << "none\n";
        }
    });

    // projective
    std::string proj_g, proj_named;
    bool proj_json = false;
    auto* proj_cmd = app.add_subcommand("projective", "projectivity verdict");
    proj_cmd->add_option("H", proj_g, "graph");
    proj_cmd->add_option("--named", proj_named, "bundled graph name");
    proj_cmd->add_flag("--json", proj_json, "structured output");
    proj_cmd->callback([&] {
        homg::Graph h = resolve_graph(proj_g, proj_named);
        auto v = homg::is_projective(h, true);
        if (proj_json)
            std::cout << verdict_json(v).dump() << '\n';
        else
            print_verdict(v);
    });

    // decompose
    std::string dec_g, dec_named;
    bool dec_json = false;
    auto* dec_cmd = app.add_subcommand("decompose",
                                       "factor H as a categorical product");
    dec_cmd->add_option("H", dec_g, "graph");
    dec_cmd->add_option("--named", dec_named, "bundled graph name");
    dec_cmd->add_flag("--json", dec_json, "structured output");
    dec_cmd->callback([&] {
        homg::Graph h = resolve_graph(dec_g, dec_named);
        auto factors = homg::decompose(h);
        if (dec_json) {
            json j;
            j["decomposable"] = factors.has_value();
            if (factors) {
                j["factors"] = {homg::graph6_encode(homg::relabel(
                                    factors->first,
                                    homg::canon(factors->first).perm)),
                                homg::graph6_encode(homg::relabel(
                                    factors->second,
                                    homg::canon(factors->second).perm))};
            } else {
                j["factors"] = nullptr;
            }
            std::cout << j.dump() << '\n';
        } else if (factors) {
            std::cout << "decomposable: "
                      << homg::graph6_encode(homg::relabel(
                             factors->first, homg::canon(factors->first).perm))
                      << " x "
                      << homg::graph6_encode(homg::relabel(
                             factors->second, homg::canon(factors->second).perm))
                      << '\n';
        } else {
            std::cout << "indecomposable\n";
        }
    });

    // classify-cores
    int cls_n = 7, cls_jobs = 1;
    bool cls_unsafe = false, cls_json = false;
    auto* cls_cmd = app.add_subcommand("classify-cores",
                                       "enumerate all cores on n vertices");
    cls_cmd->add_option("--n", cls_n, "vertex count")->required();
    cls_cmd->add_option("--jobs", cls_jobs, "worker threads");
    cls_cmd->add_flag("--unsafe-n8", cls_unsafe,
                      "allow the exploratory 8-vertex scan");
    cls_cmd->add_flag("--json", cls_json, "structured output");
    cls_cmd->callback([&] {
        auto records = homg::classify_cores(cls_n, cls_jobs, cls_unsafe);
        if (cls_n == 8)
            std::cout << "# exploratory 8-vertex scan: no exactness claim\n";
        int matched = 0;
        for (const auto& rec : records) {
            if (!rec.matched_name.empty()) ++matched;
            if (cls_json) {
                std::cout << homg::record_json_line(rec) << '\n';
            } else {
                std::cout << rec.g6 << "  vertices " << rec.vertex_count
                          << "  edges " << rec.edge_count << "  status "
                          << homg::to_string(rec.verdict.status);
                if (!rec.matched_name.empty())
                    std::cout << "  name " << rec.matched_name;
                std::cout << '\n';
            }
        }
        std::cout << "summary: " << records.size() << " cores on " << cls_n
                  << " vertices, " << matched << " matched to bundled graphs\n";
        static const int expected[] = {0, 1, 1, 1, 1, 2, 2, 10};
        if (cls_n <= 7) {
            bool ok = static_cast<int>(records.size()) == expected[cls_n] &&
                      matched == static_cast<int>(records.size());
            if (!ok) {
                std::cout << "assertion failed: expected " << expected[cls_n]
                          << " cores, all matched\n";
                rc = 1;
            }
        }
    });

    // verify-conjecture
    int vc_n = 7, vc_jobs = 1;
    bool vc_json = false;
    auto* vc_cmd = app.add_subcommand(
        "verify-conjecture", "projective iff indecomposable, cores up to n");
    vc_cmd->add_option("--n", vc_n, "largest vertex count")->required();
    vc_cmd->add_option("--jobs", vc_jobs, "worker threads");
    vc_cmd->add_flag("--json", vc_json, "structured output");
    vc_cmd->callback([&] {
        auto report = homg::verify_conjecture(vc_n, vc_jobs);
        if (vc_json) {
            json j;
            j["max_n"] = report.max_n;
            j["cores_checked"] = report.cores_checked;
            j["counterexamples"] = json::array();
            for (const auto& rec : report.counterexamples)
                j["counterexamples"].push_back(json::parse(
                    homg::record_json_line(rec)));
            j["undecided"] = json::array();
            for (const auto& rec : report.undecided)
                j["undecided"].push_back(json::parse(homg::record_json_line(rec)));
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "checked " << report.cores_checked
                      << " connected cores on 3.." << report.max_n
                      << " vertices\n";
            for (const auto& rec : report.counterexamples)
                std::cout << "counterexample: " << rec.g6 << '\n';
            for (const auto& rec : report.undecided)
                std::cout << "undecided: " << rec.g6 << '\n';
            if (report.counterexamples.empty() && report.undecided.empty())
                std::cout << "no counterexamples\n";
        }
        if (!report.counterexamples.empty()) rc = 1;
    });

    // ppdef
    std::string ppd_g, ppd_named, ppd_template;
    int ppd_param = 0;
    bool ppd_json = false;
    auto* ppd_cmd = app.add_subcommand(
        "ppdef", "evaluate a bundled disequality pp-definition on H");
    ppd_cmd->add_option("H", ppd_g, "graph");
    ppd_cmd->add_option("--named", ppd_named, "bundled graph name");
    ppd_cmd->add_option("--template", ppd_template, "template family")->required();
    ppd_cmd->add_option("--param", ppd_param, "template parameter");
    ppd_cmd->add_flag("--json", ppd_json, "structured output");
    ppd_cmd->callback([&] {
        homg::Graph h = resolve_graph(ppd_g, ppd_named);
        homg::PPFormula f = homg::neq_pp_template(ppd_template, ppd_param);
        homg::Relation rel = homg::pp_evaluate(f, h);
        bool matches = rel == homg::neq_relation(h.n());
        if (ppd_json) {
            json j;
            j["template"] = ppd_template;
            j["param"] = ppd_param;
            j["free_variables"] = f.free_count;
            j["existential_variables"] = f.exist_count;
            j["atoms"] = f.atoms.size();
            j["size"] = rel.size();
            j["matches_neq"] = matches;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "template " << ppd_template << " (param " << ppd_param
                      << "): " << f.exist_count << " existential variables, "
                      << f.atoms.size() << " atoms\n";
            std::cout << "evaluates to " << rel.size() << " tuples; "
                      << (matches ? "equals" : "differs from")
                      << " disequality on " << h.n() << " vertices\n";
        }
        if (!matches) rc = 1;
    });

    // qfpp
    std::string qf_rel, qf_g, qf_named;
    bool qf_json = false;
    auto* qf_cmd = app.add_subcommand(
        "qfpp", "decide quantifier-free pp-definability of R from H");
    qf_cmd->add_option("R", qf_rel, "relation file")->required();
    qf_cmd->add_option("H", qf_g, "graph");
    qf_cmd->add_option("--named", qf_named, "bundled graph name");
    qf_cmd->add_flag("--json", qf_json, "structured output");
    qf_cmd->callback([&] {
        homg::Relation r = load_relation(qf_rel);
        homg::Graph h = resolve_graph(qf_g, qf_named);
        bool definable = homg::qfpp_definable(r, h);
        if (qf_json) {
            json j;
            j["definable"] = definable;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (definable ? "definable\n" : "not definable\n");
        }
    });

    // wall
    std::string wall_mat, wall_rel, wall_g, wall_named;
    bool wall_json = false;
    auto* wall_cmd = app.add_subcommand(
        "wall", "check a wall and search for a constant-tuple witness");
    wall_cmd->add_option("M", wall_mat, "wall matrix file")->required();
    wall_cmd->add_option("R", wall_rel, "relation file")->required();
    wall_cmd->add_option("H", wall_g, "graph");
    wall_cmd->add_option("--named", wall_named, "bundled graph name");
    wall_cmd->add_flag("--json", wall_json, "structured output");
    wall_cmd->callback([&] {
        homg::WallMatrix m = load_wall(wall_mat);
        homg::Relation r = load_relation(wall_rel);
        homg::Graph h = resolve_graph(wall_g, wall_named);
        bool ok = homg::check_wall(m, r, h);
        std::optional<int> witness;
        if (ok) witness = homg::triviality_witness(m, r, h);
        if (wall_json) {
            json j;
            j["wall"] = ok;
            if (witness)
                j["witness"] = *witness;
            else
                j["witness"] = nullptr;
            std::cout << j.dump() << '\n';
        } else if (!ok) {
            std::cout << "not a wall\n";
        } else if (witness) {
            std::cout << "wall holds; constant tuple on vertex " << *witness
                      << '\n';
        } else {
            std::cout << "wall holds; no constant tuple found\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
