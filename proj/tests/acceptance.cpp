// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "actdim/bounds.hpp"
#include "actdim/complex.hpp"
#include "actdim/coxeter.hpp"
#include "actdim/embed.hpp"
#include "actdim/gluing.hpp"
#include "actdim/group_model.hpp"
#include "actdim/homology.hpp"
#include "actdim/nerve.hpp"
#include "actdim/posets.hpp"
#include "fixtures.hpp"

using namespace actdim;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;     // first failure, or a summary
    std::ostringstream log;  // serialized results, compared across runs

    void expect(bool ok, const std::string& what) {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

void exact_bound(Outcome& o, const std::string& label, const CoxeterMatrix& m, int expect) {
    const auto r = report(m);
    o.log << label << " " << to_json(r).dump() << "\n";
    o.expect(r.exact == expect, label + ": exact " + (r.exact ? std::to_string(*r.exact) : "none") + ", expected " +
                                    std::to_string(expect));
}

void spherical_table(Outcome& o) {
    CoxeterMatrix e6 = type_e(6), e7 = type_e(7), e8 = type_e(8);
    exact_bound(o, "H3", type_h(3), 5);
    exact_bound(o, "F4", type_f4(), 7);
    exact_bound(o, "H4", type_h(4), 7);
    exact_bound(o, "E6", e6, 11);
    exact_bound(o, "E7", e7, 13);
    exact_bound(o, "E8", e8, 15);
    for (int n = 1; n <= 8; ++n) exact_bound(o, "A" + std::to_string(n), type_a(n), 2 * n - 1);
    for (int n = 2; n <= 8; ++n) exact_bound(o, "B" + std::to_string(n), type_b(n), 2 * n - 1);
    for (int n = 4; n <= 8; ++n) exact_bound(o, "D" + std::to_string(n), type_d(n), 2 * n - 1);
    for (int p = 3; p <= 12; ++p) exact_bound(o, "I2(" + std::to_string(p) + ")", type_i2(p), 3);
}

void pipeline(Outcome& o) {
    // Nerve 2 - 1 - 3 with the single label 3 on {1,2}.
    const auto tree = CoxeterMatrix(3).set(0, 1, 3).set(1, 2, kInfinity);
    const auto r = report(tree);
    o.log << "tree " << to_json(r).dump() << "\n";
    o.expect(r.exact == 3, "tree nerve: exact value is not 3");
    o.expect(r.lower.rule == "lower-spherical" && r.lower.witness == std::vector<std::string>{"1", "2"},
             "tree nerve: lower bound not witnessed by the dihedral edge");
    o.expect(r.upper.rule == "upper-2n+1" && r.upper.value == 3, "tree nerve: upper bound is not 2*1+1");

    // Two triangles on a common edge, labels 2 except the free pair {1,4}.
    const auto flag2 = CoxeterMatrix(4).set(0, 3, kInfinity);
    const auto s = report(flag2);
    o.log << "flag2 " << to_json(s).dump() << "\n";
    o.expect(s.nerve_dim == 2 && s.kpi1 == KPi1Status::VerifiedFlag, "2-dim nerve: not flag");
    o.expect(s.top_coh_zero, "2-dim nerve: H^2 nonzero");
    o.expect(s.pi1 && s.pi1->verdict == Verdict::Verified, "2-dim nerve: pi1 certificate not Verified");
    o.expect(s.upper.value == 5, "2-dim nerve: upper bound is not 5");
}

void raag(Outcome& o) {
    const auto square = CoxeterMatrix(4).set(0, 2, kInfinity).set(1, 3, kInfinity);
    const auto r = report(square);
    o.log << "square " << to_json(r).dump() << "\n";
    o.expect(r.exact == 4 && r.upper.rule == "raag-exact", "right-angled 4-cycle: exact value is not 4");

    // Path 1-2-3-4 as commuting graph.
    const auto path = CoxeterMatrix(4).set(0, 2, kInfinity).set(0, 3, kInfinity).set(1, 3, kInfinity);
    const auto raag = raag_rule(build_nerve(path));
    const auto t = report(path);
    o.log << "path " << to_json(t).dump() << "\n";
    o.expect(raag.upper == 3 && !raag.exact, "right-angled tree: rule does not give upper 3");
    o.expect(t.upper.value == 3, "right-angled tree: report upper is not 3");
}

// Relabel by a random permutation and check the type is unchanged.
void classify_case(Outcome& o, std::mt19937& rng, const CoxeterMatrix& m, const std::string& expect) {
    std::vector<int> perm(static_cast<std::size_t>(m.rank()));
    for (int i = 0; i < m.rank(); ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto name = classify_irreducible(m).name();
    const auto relabeled = classify_irreducible(permute(m, perm)).name();
    o.log << expect << " " << name << " " << relabeled << "\n";
    o.expect(name == expect && relabeled == expect, "classified " + name + "/" + relabeled + ", expected " + expect);
}

CoxeterMatrix chain(const std::vector<int>& labels) {
    CoxeterMatrix m(static_cast<int>(labels.size()) + 1);
    for (std::size_t i = 0; i < labels.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i) + 1, labels[i]);
    return m;
}

void classification(Outcome& o) {
    std::mt19937 rng(2024);
    for (int n = 1; n <= 8; ++n) classify_case(o, rng, type_a(n), "A" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) classify_case(o, rng, type_b(n), "B" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) classify_case(o, rng, type_d(n), "D" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) classify_case(o, rng, type_e(n), "E" + std::to_string(n));
    classify_case(o, rng, type_f4(), "F4");
    classify_case(o, rng, type_h(3), "H3");
    classify_case(o, rng, type_h(4), "H4");
    for (int p = 5; p <= 12; ++p) classify_case(o, rng, type_i2(p), "I2(" + std::to_string(p) + ")");

    // Affine diagrams.
    std::vector<std::pair<std::string, CoxeterMatrix>> affine;
    affine.emplace_back("A~2", CoxeterMatrix(3).set(0, 1, 3).set(1, 2, 3).set(0, 2, 3));
    CoxeterMatrix a5t(6);
    for (int i = 0; i < 6; ++i) a5t.set(i, (i + 1) % 6, 3);
    affine.emplace_back("A~5", a5t);
    affine.emplace_back("B~3", CoxeterMatrix(4).set(0, 2, 3).set(1, 2, 3).set(2, 3, 4));
    affine.emplace_back("C~3", chain({4, 3, 4}));
    affine.emplace_back("D~4", CoxeterMatrix(5).set(0, 2, 3).set(1, 2, 3).set(2, 3, 3).set(2, 4, 3));
    affine.emplace_back("E~6", CoxeterMatrix(7).set(0, 1, 3).set(1, 2, 3).set(2, 3, 3).set(3, 4, 3).set(2, 5, 3).set(5, 6, 3));
    affine.emplace_back("E~7", CoxeterMatrix(8).set(0, 1, 3).set(1, 2, 3).set(2, 3, 3).set(3, 4, 3).set(4, 5, 3).set(5, 6, 3).set(3, 7, 3));
    affine.emplace_back("E~8", CoxeterMatrix(9).set(0, 1, 3).set(1, 2, 3).set(2, 3, 3).set(3, 4, 3).set(4, 5, 3).set(5, 6, 3).set(6, 7, 3).set(2, 8, 3));
    affine.emplace_back("F~4", chain({3, 3, 4, 3}));
    affine.emplace_back("G~2", chain({6, 3}));
    affine.emplace_back("I~1", CoxeterMatrix(2).set(0, 1, kInfinity));
    for (const auto& [label, m] : affine) {
        const auto name = classify_irreducible(m).name();
        o.log << label << " " << name << "\n";
        o.expect(name == "Infinite" && !is_finite(m), label + " classified " + name);
    }

    std::vector<std::pair<std::string, CoxeterMatrix>> enumerated;
    for (int n = 1; n <= 5; ++n) enumerated.emplace_back("A" + std::to_string(n), type_a(n));
    for (int n = 2; n <= 4; ++n) enumerated.emplace_back("B" + std::to_string(n), type_b(n));
    enumerated.emplace_back("D4", type_d(4));
    enumerated.emplace_back("F4", type_f4());
    enumerated.emplace_back("H3", type_h(3));
    enumerated.emplace_back("H4", type_h(4));
    for (int p = 3; p <= 12; ++p) enumerated.emplace_back("I2(" + std::to_string(p) + ")", type_i2(p));
    for (const auto& [label, m] : enumerated) {
        const auto formula = group_order(m);
        const auto counted = enumerate_group(m, 15000).size();
        o.log << label << " " << formula->str() << " " << counted << "\n";
        o.expect(*formula == BigInt(counted), label + ": order " + formula->str() + " but enumerated " +
                                                  std::to_string(counted));
    }
}

void homology_suite(Outcome& o) {
    for (int k = 0; k <= 4; ++k) {
        const auto h = homology(simplex_boundary(k), k, true);  // reduced, so S^0 gives Z
        o.log << "sphere" << k << " " << h.to_string() << "\n";
        o.expect(h.betti == 1 && h.torsion.empty(), "boundary of the " + std::to_string(k + 1) + "-simplex: H_k = " +
                                                        h.to_string());
    }
    const auto rp = fixtures::rp2();
    const auto h1 = homology(rp, 1), c2 = cohomology(rp, 2);
    o.log << "rp2 " << h1.to_string() << " " << c2.to_string() << "\n";
    o.expect(h1.to_string() == "Z/2", "RP2 H_1 = " + h1.to_string());
    o.expect(c2.to_string() == "Z/2", "RP2 H^2 = " + c2.to_string());
    const auto t1 = homology(fixtures::torus7(), 1);
    o.log << "torus " << t1.to_string() << "\n";
    o.expect(t1.to_string() == "Z^2", "torus H_1 = " + t1.to_string());

    std::mt19937 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        const auto k = fixtures::random_complex(rng, 1 + static_cast<int>(rng() % 8), 6);
        const int d = dimension(k);
        for (int i = 1; i < d; ++i)
            o.expect((boundary_matrix(k, i) * boundary_matrix(k, i + 1)).isZero(),
                     "boundary of boundary nonzero on random complex " + std::to_string(trial));
        for (int i = 0; i <= d; ++i) {
            const auto h = homology(k, i);
            const auto c = cohomology(k, i);
            o.log << h.to_string() << "|" << c.to_string() << " ";
            // H^i ≅ Hom(H_i, ℤ) ⊕ Ext(H_{i-1}, ℤ).
            bool ok = c.betti == h.betti;
            if (i > 0) ok = ok && c.torsion == homology(k, i - 1).torsion;
            else ok = ok && c.torsion.empty();
            for (int p : {2, 3}) {
                std::size_t expect = h.betti;
                for (const auto& t : h.torsion) expect += (t % p == 0);
                if (i > 0)
                    for (const auto& t : homology(k, i - 1).torsion) expect += (t % p == 0);
                ok = ok && homology_mod_p(k, i, p) == expect;
            }
            o.expect(ok, "universal coefficients fail on random complex " + std::to_string(trial) + " degree " +
                             std::to_string(i));
        }
        o.log << "\n";
    }
}

void basic_constructions(Outcome& o) {
    const std::vector<std::pair<std::string, CoxeterMatrix>> groups{
        {"A1", type_a(1)},        {"A1xA1", direct_sum(type_a(1), type_a(1))},
        {"I2(3)", type_i2(3)},    {"I2(5)", type_i2(5)},
        {"A3", type_a(3)},        {"B3", type_b(3)},
    };
    for (const auto& [label, m] : groups) {
        const auto u = basic_construction(m);
        const auto rep = verify_basic_construction(u);
        o.log << label << " |W|=" << u.group_order << " f=";
        for (auto f : u.complex.f_vector()) o.log << f << ",";
        o.log << "\n";
        for (const auto& c : rep.checks) {
            o.log << "  " << (c.passed ? "ok " : "no ") << c.name << ": " << c.detail << "\n";
            o.expect(c.passed, label + ": " + c.name + " failed (" + c.detail + ")");
        }
    }
}

SimplicialComplex cross_polytope_boundary(int axes) {
    std::vector<std::string> names;
    for (int i = 0; i < axes; ++i) {
        names.push_back("p" + std::to_string(i));
        names.push_back("m" + std::to_string(i));
    }
    std::vector<Simplex> facets;
    for (unsigned signs = 0; signs < (1u << axes); ++signs) {
        std::vector<Vertex> f;
        for (int i = 0; i < axes; ++i) f.push_back(2 * i + static_cast<Vertex>((signs >> i) & 1u));
        facets.emplace_back(f);
    }
    return SimplicialComplex(names, facets);
}

void octahedralization(Outcome& o) {
    for (int k = 0; k <= 3; ++k) {
        const bool iso = is_isomorphic(octahedralize(standard_simplex(k)), cross_polytope_boundary(k + 1));
        o.log << "simplex" << k << " " << iso << "\n";
        o.expect(iso, "O(simplex " + std::to_string(k) + ") is not the cross-polytope boundary");
    }
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        // Pairs with at most six vertices in total.
        const int na = 1 + static_cast<int>(rng() % 5);
        const int nb = 1 + static_cast<int>(rng() % static_cast<unsigned>(6 - na));
        const auto a = fixtures::random_complex(rng, na, na, "a");
        const auto b = fixtures::random_complex(rng, nb, nb, "b");
        const auto lhs = octahedralize(join(a, b));
        const auto rhs = join(octahedralize(a), octahedralize(b));
        const bool iso = is_isomorphic(lhs, rhs);
        o.log << format_complex(a) << "*\n" << format_complex(b) << "= " << iso << "\n";
        o.expect(iso, "O(A * B) differs from O(A) * O(B) in trial " + std::to_string(trial));
    }
}

void gluing(Outcome& o) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = fixtures::random_complex(rng, 1 + static_cast<int>(rng() % 8), 5);
        const auto g = build_ledger(k);
        const auto rep = verify_ledger(g);
        o.log << to_json(g, rep)["verification"].dump() << "\n";
        for (const auto& c : rep.checks)
            o.expect(c.passed, c.name + " failed on random complex " + std::to_string(trial));
        for (const auto& entry : g.demands) {
            std::size_t faces = 0;
            for (int d = 0; d < entry.simplex.dimension(); ++d)
                for (const auto& s : k.simplices(d)) faces += s.is_face_of(entry.simplex);
            o.expect(entry.faces.size() == faces, "demand cardinality differs from the face count");
        }
    }
}

void embedding(Outcome& o) {
    const auto forest = fixtures::make(6, {{0, 1}, {1, 2}, {3, 4}, {5}});
    const auto f = embed_dim1(forest);
    o.log << "forest " << to_json(f).dump() << " " << format_complex(*f.complex);
    o.expect(f.complex && is_connected(*f.complex) && f.complex->top_dimension() == 1 &&
                 f.complex->euler_characteristic() == 1 && is_subcomplex(*f.complex, forest),
             "forest did not become a tree");

    const auto circle = embeddable_in_contractible(fixtures::cycle(5));
    o.log << "circle " << to_string(circle.status) << " " << circle.reason << "\n";
    o.expect(circle.status == EmbedStatus::NotEmbeddable, "circle reported " + to_string(circle.status));

    const auto ann = fixtures::annulus();
    const auto r = embed_general(ann);
    o.log << "annulus " << to_json(r).dump() << "\n" << format_complex(*r.complex);
    o.expect(r.status == EmbedStatus::Embeddable && r.complex, "annulus not embedded");
    if (r.complex) {
        o.expect(r.complex->euler_characteristic() == 1, "annulus: chi(C) != 1");
        o.expect(r.complex->top_dimension() == 2 && is_subcomplex(*r.complex, ann), "annulus: C is not a 2-dim extension");
        o.expect(is_acyclic(*r.complex), "annulus: C is not acyclic");
    }
    o.expect(r.pi1 && r.pi1->verdict == Verdict::Verified, "annulus: pi1(C) = 1 not verified");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "spherical action dimension table", 10, spherical_table},
        {2, "bound pipeline on flag nerves", 10, pipeline},
        {3, "right-angled rule", 10, raag},
        {4, "classification and group orders", 60, classification},
        {5, "homology oracle suite", 60, homology_suite},
        {6, "basic construction", 120, basic_constructions},
        {7, "octahedralization", 60, octahedralization},
        {8, "gluing ledger", 30, gluing},
        {9, "embedding", 30, embedding},
    };

    auto run_one = [](const Criterion& c, double& seconds) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.passed && seconds > c.limit_seconds) {
            o.passed = false;
            o.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
        }
        return o;
    };

    bool all = true;
    std::map<int, std::string> first_logs;
    for (const auto& c : criteria) {
        double seconds = 0;
        auto o = run_one(c, seconds);
        first_logs[c.id] = o.log.str();
        all = all && o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << seconds << " s)";
        if (!o.passed) std::cout << ": " << o.detail;
        std::cout << "\n";
    }

    // Criterion 10: a second run must serialize identically.
    std::string mismatch;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        double seconds = 0;
        const auto o = run_one(c, seconds);
        if (o.log.str() != first_logs[c.id] && mismatch.empty()) mismatch = "criterion " + std::to_string(c.id);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && mismatch.empty();
    std::cout << (mismatch.empty() ? "PASS" : "FAIL") << " 10 determinism (" << seconds << " s)";
    if (!mismatch.empty()) std::cout << ": output of " << mismatch << " changed between runs";
    std::cout << "\n";
    return all ? 0 : 1;
}
