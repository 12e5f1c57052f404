#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "actdim/coxeter.hpp"

namespace actdim {

/// Canonical encoding of a group element; equal codes mean equal elements.
struct GroupElement {
    std::vector<std::int64_t> code;
    bool operator==(const GroupElement&) const = default;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Faithful model of one irreducible finite Coxeter group.
///
/// A(n) acts by permutations of n+1 points, B(n) and D(n) by signed
/// permutations, I2(p) by (rotation, flip) pairs, E and F by integer matrices
/// in the root basis (stored as rationals), H by matrices over ℚ(√5).
class ComponentModel {
public:
    virtual ~ComponentModel() = default;
    virtual std::size_t code_size() const = 0;
    virtual void identity(std::span<std::int64_t> out) const = 0;
    /// Generator at position `local` of the component's vertex list.
    virtual void generator(int local, std::span<std::int64_t> out) const = 0;
    virtual void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                          std::span<std::int64_t> out) const = 0;
    virtual void inverse(std::span<const std::int64_t> a, std::span<std::int64_t> out) const = 0;
    virtual std::string representation() const = 0;
};

/// Product of component models for a finite Coxeter matrix.
class GroupModel {
public:
    /// Throws NotFinite when the matrix has an infinite component.
    explicit GroupModel(const CoxeterMatrix& m);

    int rank() const { return rank_; }
    GroupElement identity() const;
    /// Generator s_i, 0-based.
    GroupElement generator(int i) const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    /// Component types and representations, e.g. "A2:permutations x A1:permutations".
    std::string describe() const;

private:
    struct Part {
        std::unique_ptr<const ComponentModel> model;
        std::vector<int> vertices;  // global generator for each local position
        std::size_t offset = 0;
        CoxeterType type;
    };
    int rank_ = 0;
    std::size_t code_size_ = 0;
    std::vector<Part> parts_;
    std::vector<std::pair<std::size_t, int>> locate_;  // generator -> (part, local position)
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// All elements of a finite Coxeter group in breadth-first order over
/// generator words (right multiplication, generators by index), together
/// with the right and left multiplication tables by generators.
struct EnumeratedGroup {
    std::vector<GroupElement> elements;
    std::vector<std::size_t> parent;       // BFS parent; the identity is its own parent
    std::vector<int> last_generator;       // -1 for the identity
    std::vector<std::vector<std::size_t>> right;  // right[g][i] = index of g·s_i
    std::vector<std::vector<std::size_t>> left;   // left[g][i]  = index of s_i·g

    std::size_t size() const { return elements.size(); }
    /// Shortest word, e.g. "e" or "s1s2s1" (1-based generator numbers).
    std::string word(std::size_t g) const;
    /// Generator indices of the shortest word, left to right.
    std::vector<int> word_indices(std::size_t g) const;
};

/// Throws NotFinite for an infinite group and CapExceeded when |W| > cap.
EnumeratedGroup enumerate_group(const CoxeterMatrix& m, std::size_t cap = kDefaultEnumerationCap);

}  // namespace actdim
