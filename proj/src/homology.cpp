#include "actdim/homology.hpp"

#include <sstream>

#include "actdim/error.hpp"

namespace actdim {

std::string AbelianGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << "^" << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

namespace {

struct Factors {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
};

Factors smith_factors(const DenseMatrix<std::int64_t>& a) {
    Factors out;
    auto collect = [&](const auto& snf) {
        out.rank = snf.rank;
        for (const auto& f : snf.factors)
            if (f != 1) out.torsion.push_back(to_big(f));
    };
    try {
        collect(smith_normal_form<std::int64_t>(a));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
        collect(smith_normal_form<BigInt>(a.cast<BigInt>()));
    }
    return out;
}

AbelianGroup cokernel_of(std::size_t generators, const Factors& f) {
    return {generators - f.rank, f.torsion};
}

void check_degree(const SimplicialComplex& k, int dim) {
    const int d = dimension(k);
    if (dim < 0 || dim > d)
        throw Error(ErrorKind::DimensionOutOfRange,
                    "degree " + std::to_string(dim) + " outside [0, " + std::to_string(d) + "]");
}

// Rank of ∂_dim, counting the augmentation in degree 0 only when reduced.
std::size_t boundary_rank(const SimplicialComplex& k, int dim, bool reduced) {
    if (dim == 0) return reduced && !k.empty() ? 1 : 0;
    if (dim > k.top_dimension()) return 0;
    return smith_factors(boundary_matrix(k, dim)).rank;
}

std::size_t rank_mod_p(DenseMatrix<std::int64_t> a, std::int64_t p) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = ((a(i, j) % p) + p) % p;
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1, b = x, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index c = 0; c < a.cols() && row < a.rows(); ++c) {
        Eigen::Index piv = row;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.row(row).swap(a.row(piv));
        const std::int64_t s = inv(a(row, c));
        for (Eigen::Index j = c; j < a.cols(); ++j) a(row, j) = a(row, j) * s % p;
        for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
            const std::int64_t f = a(i, c);
            if (f == 0) continue;
            for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) = ((a(i, j) - f * a(row, j)) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

template <typename Scalar>
DenseMatrix<Scalar> boundary_matrix(const SimplicialComplex& k, int dim) {
    if (dim < 0 || dim > k.top_dimension()) return DenseMatrix<Scalar>(0, 0);
    const auto& cells = k.simplices(dim);
    if (dim == 0) return DenseMatrix<Scalar>::Constant(1, static_cast<Eigen::Index>(cells.size()), Scalar(1));
    DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(k.simplices(dim - 1).size()),
                                                      static_cast<Eigen::Index>(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t i = 0; i < cells[c].size(); ++i) {
            const auto row = *k.index_of(cells[c].facet_without(i));
            d(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
        }
    }
    return d;
}

template DenseMatrix<std::int64_t> boundary_matrix<std::int64_t>(const SimplicialComplex&, int);
template DenseMatrix<BigInt> boundary_matrix<BigInt>(const SimplicialComplex&, int);

std::vector<DenseMatrix<std::int64_t>> boundary_matrices(const SimplicialComplex& k) {
    std::vector<DenseMatrix<std::int64_t>> out;
    for (int d = 1; d <= k.top_dimension(); ++d) out.push_back(boundary_matrix(k, d));
    return out;
}

AbelianGroup cokernel(const DenseMatrix<std::int64_t>& relations) {
    return cokernel_of(static_cast<std::size_t>(relations.cols()), smith_factors(relations));
}

HomologyGroup homology(const SimplicialComplex& k, int dim, bool reduced) {
    check_degree(k, dim);
    const std::size_t cells = k.simplices(dim).size();
    const std::size_t rank_out = boundary_rank(k, dim, reduced);
    Factors in;
    if (dim + 1 <= k.top_dimension()) in = smith_factors(boundary_matrix(k, dim + 1));
    return {cells - rank_out - in.rank, in.torsion};
}

HomologyGroup cohomology(const SimplicialComplex& k, int dim, bool reduced) {
    check_degree(k, dim);
    const std::size_t cells = k.simplices(dim).size();
    // δ^dim = ∂_{dim+1}ᵀ leaves C^dim; δ^{dim-1} = ∂_dimᵀ arrives.
    std::size_t rank_out = 0;
    if (dim + 1 <= k.top_dimension()) rank_out = smith_factors(boundary_matrix(k, dim + 1).transpose()).rank;
    Factors in;
    if (dim > 0)
        in = smith_factors(boundary_matrix(k, dim).transpose());
    else if (reduced)
        in.rank = 1;
    return {cells - rank_out - in.rank, in.torsion};
}

std::size_t homology_mod_p(const SimplicialComplex& k, int dim, int p, bool reduced) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    check_degree(k, dim);
    const std::size_t cells = k.simplices(dim).size();
    std::size_t rank_out = dim == 0 ? (reduced ? 1 : 0) : rank_mod_p(boundary_matrix(k, dim), p);
    std::size_t rank_in = dim + 1 <= k.top_dimension() ? rank_mod_p(boundary_matrix(k, dim + 1), p) : 0;
    return cells - rank_out - rank_in;
}

std::size_t h1_rank(const SimplicialComplex& k) {
    if (k.top_dimension() < 1) return 0;
    return homology(k, 1).betti;
}

bool is_top_cohomology_trivial(const SimplicialComplex& k) {
    const int d = dimension(k);
    return cohomology(k, d, d == 0).trivial();
}

bool is_acyclic(const SimplicialComplex& k) {
    if (k.empty()) return false;
    const int d = k.top_dimension();
    std::vector<Factors> f(static_cast<std::size_t>(d) + 2);
    for (int i = 1; i <= d; ++i) f[static_cast<std::size_t>(i)] = smith_factors(boundary_matrix(k, i));
    f[0].rank = 1;
    for (int i = 0; i <= d; ++i) {
        const auto& out = f[static_cast<std::size_t>(i)];
        const auto& in = f[static_cast<std::size_t>(i) + 1];
        if (k.simplices(i).size() != out.rank + in.rank || !in.torsion.empty()) return false;
    }
    return true;
}

DenseMatrix<std::int64_t> cycle_basis(const SimplicialComplex& k, int dim) {
    check_degree(k, dim);
    const auto cells = static_cast<Eigen::Index>(k.simplices(dim).size());
    if (dim == 0) return DenseMatrix<std::int64_t>::Identity(cells, cells);
    const auto snf = smith_normal_form<std::int64_t>(boundary_matrix(k, dim), true);
    const auto r = static_cast<Eigen::Index>(snf.rank);
    return snf.right->rightCols(cells - r);
}

bool is_boundary(const SimplicialComplex& k, int dim, const Eigen::VectorX<std::int64_t>& z) {
    check_degree(k, dim);
    if (dim + 1 > k.top_dimension()) return z.isZero();
    const auto snf = smith_normal_form<std::int64_t>(boundary_matrix(k, dim + 1), true);
    const Eigen::VectorX<std::int64_t> y = (*snf.left) * z;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (static_cast<std::size_t>(i) < snf.rank) {
            if (y(i) % snf.factors[static_cast<std::size_t>(i)] != 0) return false;
        } else if (y(i) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace actdim
