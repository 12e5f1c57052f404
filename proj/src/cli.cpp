#include "actdim/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "actdim/bounds.hpp"
#include "actdim/complex.hpp"
#include "actdim/coxeter.hpp"
#include "actdim/embed.hpp"
#include "actdim/error.hpp"
#include "actdim/fungroup.hpp"
#include "actdim/gluing.hpp"
#include "actdim/homology.hpp"
#include "actdim/nerve.hpp"
#include "actdim/posets.hpp"

namespace actdim::cli {

namespace {

using json = nlohmann::ordered_json;

json complex_json(const SimplicialComplex& k) {
    json verts = json::array();
    for (Vertex v : k.vertices()) verts.push_back(k.name(v));
    json facets = json::array();
    for (const auto& f : k.facets()) {
        json names = json::array();
        for (Vertex v : f) names.push_back(k.name(v));
        facets.push_back(names);
    }
    return {{"vertices", verts}, {"facets", facets}};
}

json group_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.str());
    return {{"betti", g.betti}, {"torsion", torsion}};
}

std::string types_string(const std::vector<CoxeterType>& types) {
    std::string out;
    for (std::size_t i = 0; i < types.size(); ++i) out += (i ? " x " : "") + types[i].name();
    return out;
}

std::string subset_string(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

std::size_t enumeration_cap(std::size_t flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("ARTIN_ACTDIM_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw ParseError(0, "ARTIN_ACTDIM_CAP is not a nonnegative integer");
        return static_cast<std::size_t>(v);
    }
    return kDefaultEnumerationCap;
}

void cmd_classify(const std::string& path, bool as_json, std::ostream& out) {
    const auto m = read_coxeter_file(path);
    const auto comps = irreducible_components(m);
    const auto order = group_order(m);
    if (as_json) {
        json cs = json::array();
        for (const auto& c : comps) {
            json verts = json::array();
            for (int v : c.vertices) verts.push_back(v + 1);
            cs.push_back({{"vertices", verts}, {"type", classify_irreducible(c.matrix).name()}});
        }
        json j{{"rank", m.rank()}, {"components", cs}, {"finite", order.has_value()},
               {"order", order ? json(order->str()) : json(nullptr)}};
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& c : comps) out << subset_string(c.vertices) << ": " << classify_irreducible(c.matrix).name() << "\n";
    out << "finite: " << (order ? "yes" : "no") << "\n";
    out << "order: " << (order ? order->str() : std::string("infinite")) << "\n";
}

void cmd_nerve(const std::string& path, bool as_json, std::ostream& out) {
    const auto n = build_nerve(read_coxeter_file(path));
    if (as_json) {
        json j = complex_json(n.complex);
        json faces = json::array();
        for (const auto& f : spherical_faces(n)) {
            json types = json::array();
            for (const auto& t : f.types) types.push_back(t.name());
            json names = json::array();
            for (Vertex v : f.simplex) names.push_back(n.complex.name(v));
            faces.push_back({{"simplex", names}, {"types", types}, {"irreducible", f.irreducible}});
        }
        j["faces"] = faces;
        out << j.dump(2) << "\n";
        return;
    }
    out << "# nerve, dimension " << dimension(n.complex) << "\n";
    for (const auto& f : spherical_faces(n))
        out << "# " << simplex_to_string(n.complex, f.simplex) << " " << types_string(f.types)
            << (f.irreducible ? " irreducible" : "") << "\n";
    out << format_complex(n.complex);
}

void cmd_homology(const std::string& path, int p, bool reduced, bool as_json, std::ostream& out) {
    const auto k = read_complex_file(path);
    const int d = dimension(k);
    if (p != 0) {
        json betti = json::array();
        for (int i = 0; i <= d; ++i) {
            const auto b = homology_mod_p(k, i, p, reduced);
            if (as_json)
                betti.push_back(b);
            else
                out << "dim H_" << i << "(F_" << p << ") = " << b << "\n";
        }
        if (as_json) out << json{{"p", p}, {"reduced", reduced}, {"betti", betti}}.dump(2) << "\n";
        return;
    }
    json hs = json::array(), cs = json::array();
    for (int i = 0; i <= d; ++i) {
        const auto h = homology(k, i, reduced);
        const auto c = cohomology(k, i, reduced);
        if (as_json) {
            json hj = group_json(h);
            hj["degree"] = i;
            hs.push_back(hj);
            json cj = group_json(c);
            cj["degree"] = i;
            cs.push_back(cj);
        } else {
            out << "H_" << i << " = " << h.to_string() << "\n";
            out << "H^" << i << " = " << c.to_string() << "\n";
        }
    }
    if (as_json) out << json{{"reduced", reduced}, {"homology", hs}, {"cohomology", cs}}.dump(2) << "\n";
}

void cmd_pi1(const std::string& path, std::size_t budget, bool as_json, std::ostream& out) {
    const auto k = read_complex_file(path);
    const auto p = edge_path_presentation(k);
    const auto s = tietze_simplify(p, budget);
    const auto ab = abelianization(s);
    const auto gen = generation_certificate(k, budget);
    const auto normal = normal_generation_certificate(k, budget);
    const auto triv = triviality_certificate(k, budget);
    if (as_json) {
        auto cert = [](const Certificate& c) { return json{{"verdict", to_string(c.verdict)}, {"witness", c.witness}}; };
        json j{{"presentation", p.to_string()},
               {"simplified", s.to_string()},
               {"generators", s.generators.size()},
               {"abelianization", group_json(ab)},
               {"generation", cert(gen)},
               {"normal_generation", cert(normal)},
               {"triviality", cert(triv)}};
        out << j.dump(2) << "\n";
        return;
    }
    out << "edge-path presentation: " << p.generators.size() << " generators, " << p.relators.size() << " relators\n";
    out << "simplified: " << s.to_string() << "\n";
    out << "abelianization: " << ab.to_string() << "\n";
    out << "generation: " << to_string(gen.verdict) << "\n";
    out << "normal generation: " << to_string(normal.verdict) << "\n";
    out << "triviality: " << to_string(triv.verdict) << " (" << triv.witness << ")\n";
}

void cmd_bounds(const std::string& path, const ReportOptions& opts, bool as_json, std::ostream& out) {
    const auto r = report(read_coxeter_file(path), opts);
    if (as_json)
        out << to_json(r).dump(2) << "\n";
    else
        out << format_report(r);
}

void emit_complex(const SimplicialComplex& k, const std::string& header, bool as_json, std::ostream& out) {
    if (as_json) {
        out << complex_json(k).dump(2) << "\n";
        return;
    }
    out << "# " << header << "\n" << format_complex(k);
}

void cmd_basic(const std::string& path, std::size_t cap, const std::string& table_path, bool as_json,
               std::ostream& out) {
    const auto u = basic_construction(read_coxeter_file(path), cap);
    const auto rep = verify_basic_construction(u);
    json action = json::array();
    for (std::size_t i = 0; i < u.action.size(); ++i)
        action.push_back({{"generator", "s" + std::to_string(i + 1)}, {"images", u.action[i]}});
    json table{{"vertices", u.complex.names()}, {"action", action}};
    if (!table_path.empty()) {
        std::ofstream f(table_path);
        if (!f) throw ParseError(0, "cannot write " + table_path);
        f << table.dump(2) << "\n";
    }
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (as_json) {
        json j{{"order", u.group_order}, {"complex", complex_json(u.complex)}, {"f_vector", u.complex.f_vector()},
               {"action_table", table}, {"verification", {{"passed", rep.passed()}, {"checks", checks}}}};
        out << j.dump(2) << "\n";
        return;
    }
    out << "# basic construction, |W| = " << u.group_order << "\n";
    out << "# f-vector:";
    for (auto f : u.complex.f_vector()) out << " " << f;
    out << "\n";
    for (const auto& c : rep.checks) out << "# " << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    out << format_complex(u.complex);
}

void cmd_embed(const std::string& path, int budget, bool as_json, std::ostream& out) {
    const auto k = read_complex_file(path);
    const auto gate = embeddable_in_contractible(k);
    const int d = dimension(k);
    if (gate.status != EmbedStatus::Embeddable) {
        if (as_json)
            out << json{{"status", to_string(gate.status)}, {"reason", gate.reason}}.dump(2) << "\n";
        else
            out << "status: " << to_string(gate.status) << "\nreason: " << gate.reason << "\n";
        return;
    }
    const auto r = d <= 1 ? embed_dim1(k) : embed_general(k, budget);
    if (as_json) {
        json j = to_json(r);
        j["reason"] = gate.reason;
        j["complex"] = complex_json(*r.complex);
        out << j.dump(2) << "\n";
        return;
    }
    out << "# status: " << to_string(r.status) << "\n";
    out << "# acyclic: " << (r.acyclic ? "yes" : "no") << "\n";
    out << "# pi1: " << to_string(r.pi1->verdict) << "\n";
    for (const auto& t : r.trace) out << "# " << t << "\n";
    out << format_complex(*r.complex);
}

void cmd_gluing(const std::string& path, bool as_json, std::ostream& out) {
    const auto g = build_ledger(read_complex_file(path));
    const auto rep = verify_ledger(g);
    if (as_json) {
        out << to_json(g, rep).dump(2) << "\n";
        return;
    }
    out << "d = " << g.d << ", " << g.pieces.size() << " pieces, " << g.interfaces.size() << " interfaces\n";
    for (const auto& c : rep.checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checked, " << c.failures
            << " failures)\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Action-dimension toolkit for Artin groups", "actdim"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    std::string input, simplex_text, table_path;
    int mod_p = 0;
    bool reduced = false;
    ReportOptions opts;
    std::size_t cap = 0;
    int embed_budget = kDefaultEmbedBudget;
    std::size_t tietze_budget = kDefaultTietzeBudget;

    auto add = [&](const std::string& name, const std::string& desc, const std::string& what) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option(what, input, what)->required();
        sub->add_flag("--json", as_json, "JSON output");
        return sub;
    };
    auto* classify_cmd = add("classify", "Classify the irreducible components of a Coxeter matrix", "coxmat");
    auto* nerve_cmd = add("nerve", "Nerve with spherical labels", "coxmat");
    auto* homology_cmd = add("homology", "Integral homology and cohomology", "complex");
    homology_cmd->add_option("--mod", mod_p, "Betti numbers over F_p");
    homology_cmd->add_flag("--reduced", reduced, "Reduced groups in degree 0");
    auto* pi1_cmd = add("pi1", "Edge-path presentation and certificates", "complex");
    pi1_cmd->add_option("--budget", tietze_budget, "Tietze move budget");
    auto* bounds_cmd = add("bounds", "Action-dimension bounds", "coxmat");
    bounds_cmd->add_flag("--assert-kpi1", opts.assert_kpi1, "Assume the K(pi,1) property");
    bounds_cmd->add_flag("--product-rule", opts.product_rule, "Heuristic product lower bound");
    auto* octa_cmd = add("octa", "Octahedralization", "complex");
    auto* subdivide_cmd = add("subdivide", "Barycentric subdivision", "complex");
    auto* dual_cmd = add("dualcone", "Dual cone of a simplex", "complex");
    dual_cmd->add_option("simplex", simplex_text, "comma separated vertex names")->required();
    auto* basic_cmd = add("basic", "Basic construction for a finite Coxeter group", "coxmat");
    auto* cap_opt = basic_cmd->add_option("--cap", cap, "Enumeration cap");
    basic_cmd->add_option("--action-table", table_path, "Write the action table as JSON");
    auto* embed_cmd = add("embed", "Contractible complex of the same dimension", "complex");
    embed_cmd->add_option("--budget", embed_budget, "Attachment passes");
    auto* gluing_cmd = add("gluing", "Dimension ledger of the gluing construction", "complex");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) cmd_classify(input, as_json, out);
        else if (nerve_cmd->parsed()) cmd_nerve(input, as_json, out);
        else if (homology_cmd->parsed()) cmd_homology(input, mod_p, reduced, as_json, out);
        else if (pi1_cmd->parsed()) cmd_pi1(input, tietze_budget, as_json, out);
        else if (bounds_cmd->parsed()) cmd_bounds(input, opts, as_json, out);
        else if (octa_cmd->parsed())
            emit_complex(octahedralize(read_complex_file(input)), "octahedralization", as_json, out);
        else if (subdivide_cmd->parsed())
            emit_complex(barycentric_subdivision(read_complex_file(input)), "barycentric subdivision", as_json, out);
        else if (dual_cmd->parsed()) {
            const auto k = read_complex_file(input);
            emit_complex(dual_cone(k, parse_simplex(k, simplex_text)), "dual cone of [" + simplex_text + "]", as_json,
                         out);
        } else if (basic_cmd->parsed())
            cmd_basic(input, enumeration_cap(cap, cap_opt->count() > 0), table_path, as_json, out);
        else if (embed_cmd->parsed()) cmd_embed(input, embed_budget, as_json, out);
        else if (gluing_cmd->parsed()) cmd_gluing(input, as_json, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace actdim::cli
