#include "actdim/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "actdim/error.hpp"
#include "actdim/homology.hpp"

namespace actdim {

namespace {

// Table of action dimensions of irreducible spherical Artin groups.
int tabulated_actdim(const CoxeterType& t) {
    switch (t.family) {
        case CoxeterFamily::A:
        case CoxeterFamily::B:
        case CoxeterFamily::D: return 2 * t.rank - 1;
        case CoxeterFamily::I2: return 3;
        case CoxeterFamily::H: return t.rank == 3 ? 5 : 7;
        case CoxeterFamily::F: return 7;
        case CoxeterFamily::E: return t.rank == 6 ? 11 : t.rank == 7 ? 13 : 15;
        case CoxeterFamily::Infinite: break;
    }
    throw Error(ErrorKind::NotSpherical, "type is not spherical");
}

const char* kQuoteLower = "connected spherical label on sigma => actdim >= 2 dim(sigma) + 1 (subgroup monotonicity)";
const char* kQuoteProduct =
    "heuristic: reducible spherical label => actdim >= sum over factors of (2 rank - 1); additivity not established";
const char* kQuoteSimplex = "L a simplex => spherical Artin group, K(pi,1) holds";
const char* kQuoteFlag = "L flag => K(pi,1) holds";
const char* kQuoteAsserted = "K(pi,1) assumed by the caller";
const char* kQuoteUpper = "K(pi,1) and H^n(L;Z) = 0 and (n = 2 => pi1(L) generated by rk H1(L) elements) => actdim <= 2n + 1";
const char* kQuoteGdim = "K(pi,1) => gdim <= n + 1, and actdim <= 2 gdim";
const char* kQuoteRaagExact = "right-angled, L flag, H_n(L;Z/2) != 0 => actdim = 2n + 2";
const char* kQuoteRaagUpper = "right-angled, L flag, H_n(L;Z/2) = 0, n != 2 => actdim <= 2n + 1";
const char* kQuotePi1 = "pi1 condition checked as plain generation, which implies normal generation";
const char* kQuoteExact = "lower bound meets upper bound";

std::vector<std::string> names_of(const SimplicialComplex& k, const Simplex& s) {
    std::vector<std::string> out;
    for (Vertex v : s) out.push_back(k.name(v));
    return out;
}

}  // namespace

int spherical_actdim(const CoxeterType& t) {
    const int value = tabulated_actdim(t);
    if (value != 2 * spherical_gdim(t) - 1) throw std::logic_error("actdim table disagrees with 2 rank - 1");
    return value;
}

int spherical_gdim(const CoxeterType& t) {
    if (!t.is_finite()) throw Error(ErrorKind::NotSpherical, "type is not spherical");
    return t.rank;
}

int spherical_gdim(const CoxeterMatrix& m) {
    if (!is_finite(m)) throw Error(ErrorKind::NotSpherical, "Coxeter group is infinite");
    return m.rank();
}

LowerBound lower_bound(const NerveLabeling& n, bool use_product_rule) {
    LowerBound best;
    bool found = false;
    for (const auto& f : n.faces) {
        if (!f.irreducible) continue;
        const int v = 2 * f.simplex.dimension() + 1;
        if (!found || v > best.value) {
            best = {v, names_of(n.complex, f.simplex), "lower-spherical"};
            found = true;
        }
    }
    if (use_product_rule) {
        for (const auto& f : n.faces) {
            if (f.irreducible) continue;
            int v = 0;
            for (const auto& t : f.types) v += spherical_actdim(t);
            if (v > best.value) best = {v, names_of(n.complex, f.simplex), "lower-product"};
        }
    }
    return best;
}

std::string to_string(KPi1Status s) {
    switch (s) {
        case KPi1Status::VerifiedFlag: return "Verified(Flag)";
        case KPi1Status::VerifiedSimplex: return "Verified(Simplex)";
        case KPi1Status::Asserted: return "Asserted";
        case KPi1Status::Unknown: return "Unknown";
    }
    return "Unknown";
}

KPi1Status kpi1_status(const SimplicialComplex& l, bool assert_kpi1) {
    if (l.facets().size() == 1) return KPi1Status::VerifiedSimplex;
    if (is_flag(l)) return KPi1Status::VerifiedFlag;
    if (assert_kpi1) return KPi1Status::Asserted;
    return KPi1Status::Unknown;
}

UpperBound upper_bound(const NerveLabeling& n, KPi1Status kpi1, bool top_coh_zero,
                       const std::optional<Certificate>& pi1) {
    const int d = dimension(n.complex);
    if (kpi1 == KPi1Status::Unknown) return {std::nullopt, "none"};
    const bool pi1_ok = d != 2 || (pi1 && pi1->verdict == Verdict::Verified);
    if (top_coh_zero && pi1_ok) return {2 * d + 1, "upper-2n+1"};
    return {2 * d + 2, "upper-gdim"};
}

bool is_right_angled(const CoxeterMatrix& m) {
    for (int i = 0; i < m.rank(); ++i)
        for (int j = i + 1; j < m.rank(); ++j)
            if (m(i, j) != 2 && m(i, j) != kInfinity) return false;
    return true;
}

RaagResult raag_rule(const NerveLabeling& n) {
    if (!is_right_angled(n.matrix) || !is_flag(n.complex))
        throw Error(ErrorKind::NotRightAngled, "rule needs labels in {2, inf} and a flag nerve");
    RaagResult r;
    r.k = dimension(n.complex);
    r.mod2_betti = homology_mod_p(n.complex, r.k, 2, r.k == 0);
    if (r.mod2_betti > 0)
        r.exact = 2 * r.k + 2;
    else if (r.k != 2)
        r.upper = 2 * r.k + 1;
    return r;
}

BoundReport report(const CoxeterMatrix& m, const ReportOptions& options) {
    const auto n = build_nerve(m);
    const auto& l = n.complex;
    BoundReport r;
    r.nerve_dim = dimension(l);

    r.lower = lower_bound(n, options.product_rule);
    r.provenance.push_back({r.lower.rule, r.lower.rule == "lower-product" ? kQuoteProduct : kQuoteLower});

    r.kpi1 = kpi1_status(l, options.assert_kpi1);
    switch (r.kpi1) {
        case KPi1Status::VerifiedSimplex: r.provenance.push_back({"kpi1-simplex", kQuoteSimplex}); break;
        case KPi1Status::VerifiedFlag: r.provenance.push_back({"kpi1-flag", kQuoteFlag}); break;
        case KPi1Status::Asserted: r.provenance.push_back({"kpi1-asserted", kQuoteAsserted}); break;
        case KPi1Status::Unknown: break;
    }
    r.top_coh_zero = is_top_cohomology_trivial(l);
    if (r.nerve_dim == 2) {
        if (is_connected(l))
            r.pi1 = generation_certificate(l, options.tietze_budget);
        else
            r.pi1 = Certificate{Verdict::Unknown, "nerve is disconnected; no edge-path group"};
        r.provenance.push_back({"pi1-generation", kQuotePi1});
    }
    r.upper = upper_bound(n, r.kpi1, r.top_coh_zero, r.pi1);
    if (r.upper.value)
        r.provenance.push_back({r.upper.rule, r.upper.rule == "upper-2n+1" ? kQuoteUpper : kQuoteGdim});

    if (is_right_angled(m) && is_flag(l)) {
        const auto raag = raag_rule(n);
        if (raag.exact) {
            r.lower = {*raag.exact, {}, "raag-exact"};
            r.upper = {*raag.exact, "raag-exact"};
            r.provenance.push_back({"raag-exact", kQuoteRaagExact});
        } else if (raag.upper && (!r.upper.value || *raag.upper < *r.upper.value)) {
            r.upper = {*raag.upper, "raag-upper"};
            r.provenance.push_back({"raag-upper", kQuoteRaagUpper});
        } else if (raag.upper) {
            r.provenance.push_back({"raag-upper", kQuoteRaagUpper});
        }
    }

    if (r.upper.value && r.lower.value > *r.upper.value)
        throw std::logic_error("lower bound exceeds upper bound");
    if (r.upper.value && r.lower.value == *r.upper.value) {
        r.exact = r.lower.value;
        r.provenance.push_back({"exact", kQuoteExact});
    }
    return r;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["nerve_dim"] = r.nerve_dim;
    j["lower"] = {{"value", r.lower.value}, {"witness", r.lower.witness}};
    j["upper"] = {{"value", r.upper.value ? nlohmann::ordered_json(*r.upper.value) : nlohmann::ordered_json(nullptr)},
                  {"rule", r.upper.rule}};
    j["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json(nullptr);
    j["conditions"] = {{"kpi1", to_string(r.kpi1)},
                       {"topCohZero", r.top_coh_zero},
                       {"pi1", r.pi1 ? to_string(r.pi1->verdict) : std::string("NotApplicable")}};
    auto prov = nlohmann::ordered_json::array();
    for (const auto& p : r.provenance) prov.push_back({{"rule", p.rule}, {"quote", p.quote}});
    j["provenance"] = prov;
    return j;
}

std::string format_report(const BoundReport& r) {
    std::ostringstream os;
    auto witness = [&] {
        std::string w = "[";
        for (std::size_t i = 0; i < r.lower.witness.size(); ++i) w += (i ? "," : "") + r.lower.witness[i];
        return w + "]";
    };
    os << "nerve dimension: " << r.nerve_dim << "\n";
    os << "lower bound: " << r.lower.value << " (" << r.lower.rule << ", witness " << witness() << ")\n";
    os << "upper bound: " << (r.upper.value ? std::to_string(*r.upper.value) : "unknown") << " (" << r.upper.rule
       << ")\n";
    os << "exact: " << (r.exact ? std::to_string(*r.exact) : "none") << "\n";
    os << "K(pi,1): " << to_string(r.kpi1) << "\n";
    os << "H^n(L;Z) = 0: " << (r.top_coh_zero ? "yes" : "no") << "\n";
    os << "pi1 condition: " << (r.pi1 ? to_string(r.pi1->verdict) + " (plain generation)" : "NotApplicable") << "\n";
    os << "provenance:\n";
    for (const auto& p : r.provenance) os << "  " << p.rule << ": " << p.quote << "\n";
    return os.str();
}

}  // namespace actdim
