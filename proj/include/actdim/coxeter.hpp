#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "actdim/scalar.hpp"

namespace actdim {

/// Label for a pair of generators with no relation.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Symmetric matrix of labels m(i,j) with unit diagonal and off-diagonal
/// entries in {2, 3, ...} ∪ {∞}. Indices are 0-based.
class CoxeterMatrix {
public:
    /// Rank n matrix with every off-diagonal label 2.
    explicit CoxeterMatrix(int rank);
    /// Validates symmetry, diagonal and labels.
    explicit CoxeterMatrix(Eigen::MatrixXi entries);

    int rank() const { return static_cast<int>(entries_.rows()); }
    int operator()(int i, int j) const { return entries_(i, j); }
    const Eigen::MatrixXi& entries() const { return entries_; }

    /// Sets m(i,j) = m(j,i) = label.
    CoxeterMatrix& set(int i, int j, int label);

    bool operator==(const CoxeterMatrix& other) const { return entries_ == other.entries_; }

private:
    Eigen::MatrixXi entries_;
};

/// An edge {i, j} of the Coxeter diagram (m(i,j) ≥ 3) with its label.
struct DiagramEdge {
    int i;
    int j;
    int label;
};

/// Edges of the Coxeter diagram in lexicographic order.
std::vector<DiagramEdge> diagram_edges(const CoxeterMatrix& m);

enum class CoxeterFamily { A, B, D, E, F, H, I2, Infinite };

/// Irreducible type. Rank-2 labels 3 and 4 are reported as A2 and B2, so
/// I2(p) always has p ≥ 5.
struct CoxeterType {
    CoxeterFamily family = CoxeterFamily::Infinite;
    int rank = 0;
    int p = 0;  // dihedral label, I2 only

    bool is_finite() const { return family != CoxeterFamily::Infinite; }
    /// "A3", "I2(7)", "E8", "Infinite".
    std::string name() const;
    /// Group order; nullopt for Infinite.
    std::optional<BigInt> order() const;

    bool operator==(const CoxeterType&) const = default;
};

struct Component {
    std::vector<int> vertices;  // increasing, indices into the parent matrix
    CoxeterMatrix matrix;
};

/// Connected components of the diagram, ordered by least vertex.
std::vector<Component> irreducible_components(const CoxeterMatrix& m);

bool is_irreducible(const CoxeterMatrix& m);

/// Throws NotIrreducible for a disconnected diagram.
CoxeterType classify_irreducible(const CoxeterMatrix& m);

/// Types of all components, in component order.
std::vector<CoxeterType> classify(const CoxeterMatrix& m);

bool is_finite(const CoxeterMatrix& m);

/// Product of the component orders; nullopt when infinite.
std::optional<BigInt> group_order(const CoxeterMatrix& m);

/// Restriction to S × S for an increasing, nonempty index list. Throws EmptySubset.
CoxeterMatrix parabolic_submatrix(const CoxeterMatrix& m, std::span<const int> subset);

namespace detail {

/// Classification of a connected diagram together with the order in which
/// its vertices play the standard generators of the A/B/D models. For the
/// other types the order is the identity.
struct Layout {
    CoxeterType type;
    std::vector<int> order;
};

Layout classify_layout(const CoxeterMatrix& irreducible);

}  // namespace detail

// coxmat format: first line "rank n", then "i j m" lines with 1-based indices,
// m an integer ≥ 2 or "inf". Unlisted pairs are 2; duplicates are an error.
CoxeterMatrix parse_coxeter_matrix(std::istream& in);
CoxeterMatrix parse_coxeter_matrix(std::string_view text);
CoxeterMatrix read_coxeter_file(const std::string& path);
std::string format_coxeter_matrix(const CoxeterMatrix& m);

// Standard irreducible matrices, generators numbered along the diagram.
CoxeterMatrix type_a(int n);
CoxeterMatrix type_b(int n);
CoxeterMatrix type_d(int n);
CoxeterMatrix type_e(int n);
CoxeterMatrix type_f4();
CoxeterMatrix type_h(int n);
CoxeterMatrix type_i2(int p);

/// Direct sum (block diagonal with label 2 between the blocks).
CoxeterMatrix direct_sum(const CoxeterMatrix& a, const CoxeterMatrix& b);

/// m'(i,j) = m(perm[i], perm[j]).
CoxeterMatrix permute(const CoxeterMatrix& m, std::span<const int> perm);

}  // namespace actdim
