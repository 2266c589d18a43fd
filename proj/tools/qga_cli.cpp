// Command-line front end: parse algebra documents, run the library
// operations, and print deterministic reports (text by default, canonical
// JSON with --json, Graphviz with --emit dot on surface verbs).
//
// Exit codes: 0 = ran and produced a verdict (including "Unknown"),
// 1 = parse/validation error, 2 = an infinite object was requested
// without a truncation bound.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qga/classify.hpp"
#include "qga/constructions.hpp"
#include "qga/dg.hpp"
#include "qga/homology.hpp"
#include "qga/io.hpp"
#include "qga/paths.hpp"
#include "qga/surface.hpp"

namespace {

using qga::json;

int default_max_len() {
    if (const char* env = std::getenv("QGA_MAX_LEN")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

qga::Idempotent parse_vertex_list(const qga::Algebra& a,
                                  const std::string& csv) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) names.push_back(cur);
    return qga::Idempotent::from_names(a, names);
}

qga::RelationSubset parse_J(const qga::Algebra& a, const std::string& csv) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        auto dot = cur.find('.');
        if (dot == std::string::npos)
            throw qga::InvalidAlgebraError(
                "relation pairs are written first.second: " + cur);
        pairs.emplace_back(cur.substr(0, dot), cur.substr(dot + 1));
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return qga::relation_subset_from_names(a, pairs);
}

std::string sp_text(bool smooth, bool proper) {
    std::string s = smooth ? "smooth" : "not-smooth";
    s += proper ? ", proper" : ", not-proper";
    return s;
}

json invariants_json(const qga::SurfaceInvariants& s) {
    json j;
    j["genus"] = s.genus;
    j["boundary_components"] = s.boundary_components;
    j["boundary_circ"] = s.boundary_circ;
    j["boundary_bullet"] = s.boundary_bullet;
    j["punctures_circ"] = s.punctures_circ;
    j["punctures_bullet"] = s.punctures_bullet;
    j["euler_characteristic"] = s.euler_characteristic;
    return j;
}

void print_invariants(const qga::SurfaceInvariants& s) {
    std::cout << "genus: " << s.genus << "\n"
              << "boundary_components: " << s.boundary_components << "\n"
              << "boundary_circ: " << s.boundary_circ << "\n"
              << "boundary_bullet: " << s.boundary_bullet << "\n"
              << "punctures_circ: " << s.punctures_circ << "\n"
              << "punctures_bullet: " << s.punctures_bullet << "\n"
              << "euler_characteristic: " << s.euler_characteristic << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded gentle algebra toolkit"};
    app.require_subcommand(1);

    bool use_json = false;
    app.add_flag("--json", use_json, "emit canonical JSON documents");

    std::string input, input2, remove_csv, keep_csv, j_csv, emit, shifts;
    int max_len = default_max_len();
    bool unbounded = false;
    bool via_dual = false;

    auto add_common = [&](CLI::App* cmd, bool second_input = false) {
        cmd->fallthrough();
        cmd->add_option("input", input, "algebra document")->required();
        if (second_input)
            cmd->add_option("input2", input2, "second document")->required();
        cmd->add_option("--max-len", max_len, "truncation bound");
        cmd->add_flag("--unbounded", unbounded,
                      "fail (exit 2) instead of truncating infinite objects");
        return cmd;
    };

    auto* validate = add_common(app.add_subcommand("validate", "gentleness report"));
    auto* dual = add_common(app.add_subcommand("dual", "quadratic dual document"));
    auto* cut = add_common(app.add_subcommand("cut", "vertex-removal algebra"));
    cut->add_option("--remove", remove_csv, "vertices to remove")->required();
    auto* corner = add_common(app.add_subcommand("corner", "corner algebra"));
    corner->add_option("--keep", keep_csv, "vertices to keep")->required();
    corner->add_flag("--via-dual", via_dual, "compute through the dual route");
    auto* resolve = add_common(app.add_subcommand("resolve", "partial dg resolution"));
    resolve->add_option("--J", j_csv, "relation pairs first.second, comma separated");
    auto* checkres =
        add_common(app.add_subcommand("check-resolution",
                                      "verify d*d = 0 and the homotopy identity"));
    checkres->add_option("--J", j_csv, "relation pairs first.second");
    auto* invariants =
        add_common(app.add_subcommand("invariants", "surface invariants"));
    auto* surface = add_common(app.add_subcommand("surface", "ribbon model"));
    surface->add_option("--emit", emit, "output format (dot)");
    auto* ext = add_common(app.add_subcommand("ext", "table of simple Homs"));
    ext->add_option("--shifts", shifts, "shift interval lo:hi");
    auto* presilting =
        add_common(app.add_subcommand("presilting", "positive-degree path test"));
    presilting->add_option("--keep", keep_csv, "kept vertices")->required();
    auto* presmc =
        add_common(app.add_subcommand("presmc", "negative-shift Ext test"));
    presmc->add_option("--keep", keep_csv, "kept vertices")->required();
    auto* classify = add_common(app.add_subcommand("classify", "existence verdicts"));
    auto* recollement =
        add_common(app.add_subcommand("recollement", "cut/corner triple report"));
    recollement->add_option("--remove", remove_csv, "vertices to remove")->required();
    auto* iso =
        add_common(app.add_subcommand("iso", "graded isomorphism test"), true);

    CLI11_PARSE(app, argc, argv);

    try {
        qga::Algebra a = qga::load_algebra_file(input);

        if (*validate) {
            auto rep = qga::validate_gentle(a);
            if (use_json) {
                json j;
                j["gentle"] = rep.is_gentle;
                auto v = json::array();
                for (const auto& viol : rep.violations)
                    v.push_back({{"condition", viol.condition},
                                 {"witness", viol.witness}});
                j["violations"] = v;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "gentle: " << (rep.is_gentle ? "true" : "false")
                          << "\n";
                for (const auto& viol : rep.violations)
                    std::cout << viol.condition << ": " << viol.witness << "\n";
            }
        } else if (*dual) {
            std::cout << qga::serialize_algebra(qga::quadratic_dual(a));
        } else if (*cut) {
            auto e = parse_vertex_list(a, remove_csv);
            if (unbounded && !qga::idempotent_cut_finite(a, e))
                throw qga::InfiniteEnumerationError(
                    "vertex removal yields infinitely many generators");
            std::cout << qga::serialize_algebra(qga::idempotent_cut(a, e, max_len));
        } else if (*corner) {
            auto e = parse_vertex_list(a, keep_csv);
            if (unbounded && !qga::corner_finite(a, e))
                throw qga::InfiniteEnumerationError(
                    "corner algebra has infinitely many generators");
            auto c = via_dual ? qga::corner_via_dual(a, e, max_len)
                              : qga::corner_algebra(a, e, max_len);
            std::cout << qga::serialize_algebra(c);
        } else if (*resolve) {
            auto J = parse_J(a, j_csv);
            if (unbounded && !qga::is_AJ_finite(a, J))
                throw qga::InfiniteEnumerationError(
                    "the resolution has infinitely many generators");
            std::cout << qga::serialize_dg(qga::build_AJ(a, J, max_len));
        } else if (*checkres) {
            auto J = parse_J(a, j_csv);
            auto dg = qga::build_AJ(a, J, max_len);
            auto d2 = qga::check_differential(dg);
            auto hom = qga::check_homotopy(a, J, max_len);
            if (use_json) {
                json j;
                j["finite"] = qga::is_AJ_finite(a, J);
                j["d_squared_zero"] = d2.ok;
                j["homotopy_identity"] = hom.ok;
                if (!d2.ok) j["d_squared_detail"] = d2.detail;
                if (!hom.ok) j["homotopy_detail"] = hom.detail;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "finite: "
                          << (qga::is_AJ_finite(a, J) ? "true" : "false") << "\n";
                std::cout << "d_squared_zero: " << (d2.ok ? "pass" : "fail")
                          << (d2.ok ? "" : " (" + d2.detail + ")") << "\n";
                std::cout << "homotopy_identity: " << (hom.ok ? "pass" : "fail")
                          << (hom.ok ? "" : " (" + hom.detail + ")") << "\n";
            }
        } else if (*invariants) {
            auto s = qga::surface_invariants(a);
            if (use_json)
                std::cout << invariants_json(s).dump(2) << "\n";
            else
                print_invariants(s);
        } else if (*surface) {
            auto m = qga::assemble_ribbon(a);
            if (emit == "dot") {
                std::cout << qga::ribbon_to_dot(a, m);
            } else {
                std::cout << "arcs: " << m.num_arcs << "\n";
                std::cout << "boundary_points: " << m.linear_chains.size()
                          << "\n";
                std::cout << "circ_punctures: " << m.cyclic_chains.size() << "\n";
                int interior = 0;
                for (const auto& f : m.faces)
                    if (!f.boundary) ++interior;
                std::cout << "bullet_punctures: " << interior << "\n";
            }
        } else if (*ext) {
            std::optional<std::pair<int, int>> range;
            if (!shifts.empty()) {
                auto colon = shifts.find(':');
                if (colon == std::string::npos)
                    throw qga::InvalidAlgebraError("--shifts expects lo:hi");
                range = {std::stoi(shifts.substr(0, colon)),
                         std::stoi(shifts.substr(colon + 1))};
            }
            auto t = qga::ext_table(a, range);
            if (use_json) {
                std::cout << qga::ext_table_to_json(a, t).dump(2) << "\n";
            } else {
                for (const auto& e : t.entries) {
                    std::cout << "Hom(S_" << a.quiver.vertex(e.i) << ", S_"
                              << a.quiver.vertex(e.j) << "[" << e.l
                              << "]) dim " << e.dim << ":";
                    for (const auto& p : e.basis)
                        std::cout << " " << qga::path_to_string(a, p);
                    std::cout << "\n";
                }
            }
        } else if (*presilting) {
            auto e = parse_vertex_list(a, keep_csv);
            auto rep = qga::is_presilting_projective(a, e);
            std::cout << "presilting: " << (rep.ok ? "true" : "false") << "\n";
            if (rep.witness)
                std::cout << (rep.witness_is_cycle ? "positive cycle: "
                                                   : "positive path: ")
                          << qga::path_to_string(a, *rep.witness) << "\n";
        } else if (*presmc) {
            auto e = parse_vertex_list(a, keep_csv);
            auto rep = qga::is_preSMC_simples(a, e);
            std::cout << "presmc: " << (rep.ok ? "true" : "false") << "\n";
            if (rep.witness)
                std::cout << "nonpositive-shift witness: "
                          << qga::path_to_string(a, *rep.witness) << "\n";
        } else if (*classify) {
            auto shape = qga::detect_An_shape(a);
            auto verdict = qga::silting_existence(a);
            bool exc = qga::has_full_exceptional_sequence(a);
            auto order = qga::exceptional_sequence_acyclic(a);
            auto g11 = qga::g11_equivalences(a);
            auto existence_str = [](qga::Existence v) {
                switch (v) {
                    case qga::Existence::Exists: return "Exists";
                    case qga::Existence::NotExists: return "NotExists";
                    default: return "Unknown";
                }
            };
            if (use_json) {
                json j;
                if (shape) {
                    json js;
                    js["n"] = shape->n;
                    auto params = json::array();
                    for (auto [ai, bi] : shape->params)
                        params.push_back({ai, bi});
                    js["params"] = params;
                    j["shape"] = js;
                } else {
                    j["shape"] = nullptr;
                }
                j["exceptional"] = exc;
                if (order) {
                    auto o = json::array();
                    for (int v : *order) o.push_back(a.quiver.vertex(v));
                    j["exceptional_sequence"] = o;
                } else {
                    j["exceptional_sequence"] = nullptr;
                }
                j["silting"] = {{"question", "silting object exists"},
                                {"value", existence_str(verdict.value)},
                                {"rule", verdict.rule},
                                {"evidence", verdict.evidence}};
                j["g11"] = {{"all_corners_nontrivial", g11.all_corners_nontrivial},
                            {"all_arcs_loops", g11.all_arcs_loops},
                            {"one_boundary_one_circ", g11.one_boundary_one_circ},
                            {"agree", g11.agree}};
                std::cout << j.dump(2) << "\n";
            } else {
                if (shape) {
                    std::cout << "shape: n=" << shape->n << " params:";
                    for (auto [ai, bi] : shape->params)
                        std::cout << " (" << ai << "," << bi << ")";
                    std::cout << "\n";
                } else {
                    std::cout << "shape: none\n";
                }
                std::cout << "exceptional: " << (exc ? "true" : "false") << "\n";
                if (order) {
                    std::cout << "exceptional_sequence:";
                    for (int v : *order) std::cout << " " << a.quiver.vertex(v);
                    std::cout << "\n";
                } else {
                    std::cout << "exceptional_sequence: none\n";
                }
                std::cout << "silting: " << existence_str(verdict.value) << " ["
                          << verdict.rule << ": " << verdict.evidence << "]\n";
                std::cout << "g11_agree: " << (g11.agree ? "true" : "false")
                          << "\n";
            }
        } else if (*recollement) {
            auto e = parse_vertex_list(a, remove_csv);
            auto cut_alg = qga::idempotent_cut(a, e, max_len);
            auto corner_alg = qga::corner_algebra(a, e, max_len);
            auto rep = qga::two_out_of_three(a, e, max_len);
            if (use_json) {
                json j;
                j["cut"] = qga::algebra_to_json(cut_alg);
                j["algebra"] = qga::algebra_to_json(a);
                j["corner"] = qga::algebra_to_json(corner_alg);
                auto sp = [](const qga::SmoothProper& f) {
                    return json{{"smooth", f.smooth}, {"proper", f.proper}};
                };
                j["flags"] = {{"cut", sp(rep.cut)},
                              {"algebra", sp(rep.whole)},
                              {"corner", sp(rep.corner)}};
                j["all_finite"] = rep.all_finite;
                j["consistent"] = rep.consistent;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "cut (" << sp_text(rep.cut.smooth, rep.cut.proper)
                          << "):\n"
                          << qga::serialize_algebra(cut_alg);
                std::cout << "algebra ("
                          << sp_text(rep.whole.smooth, rep.whole.proper) << ")\n";
                std::cout << "corner ("
                          << sp_text(rep.corner.smooth, rep.corner.proper)
                          << "):\n"
                          << qga::serialize_algebra(corner_alg);
                std::cout << "two_out_of_three: "
                          << (rep.consistent ? "consistent" : "VIOLATION")
                          << "\n";
            }
        } else if (*iso) {
            qga::Algebra b = qga::load_algebra_file(input2);
            auto m = qga::graded_iso(a, b);
            std::cout << "isomorphic: " << (m ? "true" : "false") << "\n";
            if (m) {
                for (int v = 0; v < a.quiver.num_vertices(); ++v)
                    std::cout << "  " << a.quiver.vertex(v) << " -> "
                              << b.quiver.vertex(m->vertex_map[v]) << "\n";
            }
        }
    } catch (const qga::InfiniteEnumerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qga::InvalidAlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
