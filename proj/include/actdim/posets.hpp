#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "actdim/complex.hpp"
#include "actdim/coxeter.hpp"
#include "actdim/fungroup.hpp"
#include "actdim/group_model.hpp"
#include "actdim/nerve.hpp"

namespace actdim {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Finite poset given by its order matrix leq(i, j) ⇔ i ≤ j.
class Poset {
public:
    /// Validates reflexivity, antisymmetry and transitivity (InvalidArgument).
    Poset(std::vector<std::string> names, BoolMatrix leq);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    bool leq(std::size_t i, std::size_t j) const { return leq_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    /// Pairs (i, j) with j covering i, lexicographic.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

private:
    std::vector<std::string> names_;
    BoolMatrix leq_;
};

/// Simplices of K under inclusion, in (dimension, lexicographic) order and
/// named like barycentric_subdivision vertices. Throws EmptyComplex.
Poset face_poset(const SimplicialComplex& k);

/// face_poset with a bottom element "{}" placed first.
Poset augmented_poset(const SimplicialComplex& k);

/// Chains of P; vertex i is element i.
SimplicialComplex order_complex(const Poset& p);

/// Chains of simplices containing s, as a subcomplex of the barycentric
/// subdivision (whose name table it keeps). Throws NotASimplex.
SimplicialComplex dual_cone(const SimplicialComplex& k, const Simplex& s);

/// Poset whose elements carry generator subsets (0-based, increasing); the
/// empty subset is the trivial group.
struct PosetOfGroups {
    Poset poset;
    std::vector<std::vector<int>> labels;
};

/// Checks that labels grow along the order (InvalidArgument otherwise).
PosetOfGroups make_poset_of_groups(Poset p, std::vector<std::vector<int>> labels);

/// Over S(L): the label of σ is its vertex set, the bottom gets the trivial group.
PosetOfGroups artin_poset_of_groups(const NerveLabeling& n);

/// Extends a poset of groups over P(L) (or S(L)) to P(C) (or S(C)) by
/// label(σ) = label(σ ∩ L), trivial when σ misses L. L and C are matched by
/// vertex names. Throws NotFullSubcomplex unless L is full in C.
PosetOfGroups extend_over_embedding(const PosetOfGroups& g, const SimplicialComplex& l,
                                    const SimplicialComplex& c);

/// Braid word s_i s_j s_i ... of length m.
Word alternating_word(int i, int j, int m);

/// Generators a_v for every v occurring in a label, named "a<v+1>"; one braid
/// relator per pair {i, j} lying in a common label.
Presentation colimit_presentation(const PosetOfGroups& g, const CoxeterMatrix& m);

/// U(W, |S(Δ)|) for a finite Coxeter group W.
struct BasicConstruction {
    CoxeterMatrix matrix;
    std::size_t group_order = 0;
    /// Subsets S of the generators in (size, lexicographic) order; index 0 is ∅.
    std::vector<std::vector<int>> strata;
    SimplicialComplex complex;
    std::vector<std::size_t> vertex_stratum;     // stratum index of each vertex
    std::vector<std::size_t> vertex_coset;       // BFS index of the minimal coset representative
    std::vector<std::vector<Vertex>> action;     // action[i][v] = s_i · v
    std::vector<Vertex> fundamental_domain;      // identity-coset vertices, by stratum
    std::vector<std::string> group_words;        // shortest word of each element, BFS order
};

/// Vertices are cosets gW_S named "<word of g>@{i,j}"; simplices are coset
/// chains of a common g along chains of S. Throws NotFinite or CapExceeded.
BasicConstruction basic_construction(const CoxeterMatrix& m, std::size_t cap = kDefaultEnumerationCap);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct BasicConstructionReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

BasicConstructionReport verify_basic_construction(const BasicConstruction& u);

}  // namespace actdim
