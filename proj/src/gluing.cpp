#include "actdim/gluing.hpp"

#include <algorithm>

namespace actdim {

namespace {

std::vector<Simplex> all_simplices(const SimplicialComplex& k) {
    std::vector<Simplex> out;
    for (int d = 0; d <= k.top_dimension(); ++d)
        out.insert(out.end(), k.simplices(d).begin(), k.simplices(d).end());
    return out;
}

nlohmann::ordered_json names(const SimplicialComplex& k, const Simplex& s) {
    auto out = nlohmann::ordered_json::array();
    for (Vertex v : s) out.push_back(k.name(v));
    return out;
}

}  // namespace

GluingLedger build_ledger(const SimplicialComplex& k, const std::optional<std::map<Simplex, int>>& extended_dims) {
    GluingLedger g;
    g.complex = k;
    g.d = dimension(k);
    const auto cells = all_simplices(k);
    for (const auto& s : cells) {
        StratumPiece p;
        p.simplex = s;
        p.i = s.dimension();
        p.dim_local = 2 * p.i + 1;
        p.dim_thickening = 2 * (g.d - p.i);
        p.dim_total = p.dim_local + p.dim_thickening;
        p.h = p.i;
        if (extended_dims) {
            if (auto it = extended_dims->find(s); it != extended_dims->end()) p.h = it->second;
        }
        p.base_dim = p.h >= 0 ? 2 * p.h + 1 : 0;
        p.disk_dim = p.dim_local - p.base_dim;
        g.pieces.push_back(p);
    }
    for (const auto& tau : cells) {
        DemandEntry entry{tau, {}, {}};
        for (const auto& sigma : cells) {
            if (sigma.dimension() >= tau.dimension() || !sigma.is_face_of(tau)) continue;
            InterfaceSpec f;
            f.face = sigma;
            f.coface = tau;
            f.i = sigma.dimension();
            f.j = tau.dimension();
            f.local = 2 * f.i + 1;
            f.link = 2 * (f.j - f.i) - 1;
            f.normal = 2 * (g.d - f.j);
            f.total = f.local + f.link + f.normal;
            g.interfaces.push_back(f);
            entry.faces.push_back(sigma);
            entry.sub_demand.push_back((std::size_t{1} << sigma.size()) - 2);
        }
        g.demands.push_back(std::move(entry));
    }
    return g;
}

bool LedgerReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LedgerCheck& c) { return c.passed; });
}

LedgerReport verify_ledger(const GluingLedger& g) {
    LedgerCheck a{"(a) piece dimension 2d+1"}, b{"(b) interface dimension 2d"},
        c{"(c) thickened link splitting"}, dd{"(d) demand counts"}, e{"(e) local splitting"};
    for (const auto& p : g.pieces) {
        ++a.checked;
        if (p.dim_total != 2 * g.d + 1) ++a.failures;
        ++e.checked;
        if (p.base_dim + p.disk_dim != p.dim_local || p.disk_dim < 0 || p.dim_local != 2 * p.i + 1) ++e.failures;
    }
    for (const auto& f : g.interfaces) {
        ++b.checked;
        if (f.total != 2 * g.d) ++b.failures;
        // Codimensions k = d − i and l = d − j; T(τ, Lk) splits as D^{2(k−l)−1} × D^{2l}.
        const int k = g.d - f.i;
        const int l = g.d - f.j;
        ++c.checked;
        if (f.link != 2 * (k - l) - 1 || f.normal != 2 * l || f.local != 2 * f.i + 1) ++c.failures;
    }
    const auto cells = all_simplices(g.complex);
    for (const auto& entry : g.demands) {
        ++dd.checked;
        const auto proper = static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [&](const Simplex& s) {
            return s.dimension() < entry.simplex.dimension() && s.is_face_of(entry.simplex);
        }));
        bool ok = entry.faces.size() == proper && entry.sub_demand.size() == entry.faces.size();
        for (std::size_t r = 0; ok && r < entry.faces.size(); ++r) {
            const auto below = static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [&](const Simplex& s) {
                return s.dimension() < entry.faces[r].dimension() && s.is_face_of(entry.faces[r]);
            }));
            ok = entry.sub_demand[r] == below;
        }
        if (!ok) ++dd.failures;
    }
    LedgerReport report;
    for (auto* x : {&a, &b, &c, &dd, &e}) {
        x->passed = x->failures == 0;
        report.checks.push_back(*x);
    }
    return report;
}

nlohmann::ordered_json to_json(const GluingLedger& g, const LedgerReport& report) {
    const auto& k = g.complex;
    nlohmann::ordered_json j;
    j["d"] = g.d;
    auto pieces = nlohmann::ordered_json::array();
    for (const auto& p : g.pieces)
        pieces.push_back({{"simplex", names(k, p.simplex)},
                          {"i", p.i},
                          {"local", p.dim_local},
                          {"thickening", p.dim_thickening},
                          {"total", p.dim_total},
                          {"split", {p.base_dim, p.disk_dim}}});
    j["pieces"] = pieces;
    auto interfaces = nlohmann::ordered_json::array();
    for (const auto& f : g.interfaces)
        interfaces.push_back({{"face", names(k, f.face)},
                              {"coface", names(k, f.coface)},
                              {"dims", {f.local, f.link, f.normal}},
                              {"total", f.total}});
    j["interfaces"] = interfaces;
    auto demands = nlohmann::ordered_json::array();
    for (const auto& entry : g.demands) {
        auto faces = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < entry.faces.size(); ++r)
            faces.push_back({{"face", names(k, entry.faces[r])}, {"copies", entry.sub_demand[r]}});
        demands.push_back({{"simplex", names(k, entry.simplex)}, {"count", entry.faces.size()}, {"faces", faces}});
    }
    j["demands"] = demands;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"failures", c.failures}});
    j["verification"] = {{"passed", report.passed()}, {"checks", checks}, {"note", "copy demands are worst case"}};
    return j;
}

}  // namespace actdim
