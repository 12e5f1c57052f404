#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "actdim/complex.hpp"
#include "actdim/smith.hpp"

namespace actdim {

/// Letters are ±(i+1) for generator i; a negative letter is an inverse.
using Word = std::vector<int>;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    /// "<a, b | a b A^-1 ...>" style rendering, deterministic.
    std::string to_string() const;
    bool operator==(const Presentation&) const = default;
};

/// Free and cyclic reduction.
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

inline constexpr std::size_t kDefaultTietzeBudget = 100'000;

/// Edge-path group based at `base`: one generator per edge outside a BFS
/// spanning tree (ties broken by vertex order), one relator per triangle.
/// Generators are named "a-b" after the edge. Throws NotConnected.
Presentation edge_path_presentation(const SimplicialComplex& k, Vertex base);
/// Based at the least vertex.
Presentation edge_path_presentation(const SimplicialComplex& k);

/// Repeatedly eliminates a generator occurring exactly once in the shortest
/// possible relator, with free/cyclic reduction and removal of empty or
/// duplicate relators. Stops after `budget` elementary moves.
Presentation tietze_simplify(const Presentation& p, std::size_t budget = kDefaultTietzeBudget,
                             std::vector<std::string>* trace = nullptr);

/// Abelianization, from the Smith form of the exponent-sum matrix.
AbelianGroup abelianization(const Presentation& p);

enum class Verdict { Verified, Refuted, Unknown };
std::string to_string(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Unknown;
    std::string witness;
};

/// π_1(K) generated by rk H_1(K) elements. Never Refuted. Throws NotConnected.
Certificate generation_certificate(const SimplicialComplex& k, std::size_t budget = kDefaultTietzeBudget);

/// π_1(K) normally generated by rk H_1(K) elements: Verified by plain
/// generation, or when killing some r surviving generators trivializes the
/// simplified presentation. Never Refuted. Throws NotConnected.
Certificate normal_generation_certificate(const SimplicialComplex& k,
                                          std::size_t budget = kDefaultTietzeBudget);

/// π_1(K) = 1: Verified when simplification reaches no generators, Refuted
/// when H_1(K) ≠ 0, otherwise Unknown. Throws NotConnected.
Certificate triviality_certificate(const SimplicialComplex& k, std::size_t budget = kDefaultTietzeBudget);

}  // namespace actdim
