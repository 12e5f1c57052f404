#pragma once

#include <vector>

#include "actdim/complex.hpp"
#include "actdim/coxeter.hpp"

namespace actdim {

/// A simplex of the nerve with its spherical parabolic data.
struct NerveFace {
    Simplex simplex;
    CoxeterMatrix matrix;            // parabolic submatrix on the simplex
    std::vector<CoxeterType> types;  // component types, in component order
    bool irreducible = false;        // exactly one component
};

/// Nerve of a Coxeter matrix. Vertex v (named "v+1") is the generator s_v;
/// a vertex set spans a simplex iff its parabolic subgroup is finite.
struct NerveLabeling {
    CoxeterMatrix matrix;
    SimplicialComplex complex;
    std::vector<NerveFace> faces;  // aligned with complex.simplices(0), simplices(1), ...

    /// Throws NotASimplex for a non-face.
    const NerveFace& face(const Simplex& s) const;
};

NerveLabeling build_nerve(const CoxeterMatrix& m);

/// All faces with their component types, in (dimension, lexicographic) order.
std::vector<NerveFace> spherical_faces(const NerveLabeling& n);

}  // namespace actdim
