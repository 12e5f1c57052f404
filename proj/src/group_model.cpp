#include "actdim/group_model.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "actdim/error.hpp"

namespace actdim {

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : g.code) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

// Permutations of {0..n} for A(n).
class PermutationModel final : public ComponentModel {
public:
    explicit PermutationModel(int rank) : points_(static_cast<std::size_t>(rank) + 1) {}
    std::size_t code_size() const override { return points_; }
    void identity(std::span<std::int64_t> out) const override {
        for (std::size_t i = 0; i < points_; ++i) out[i] = static_cast<std::int64_t>(i);
    }
    void generator(int local, std::span<std::int64_t> out) const override {
        identity(out);
        std::swap(out[local], out[local + 1]);
    }
    void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                  std::span<std::int64_t> out) const override {
        for (std::size_t i = 0; i < points_; ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    }
    void inverse(std::span<const std::int64_t> a, std::span<std::int64_t> out) const override {
        for (std::size_t i = 0; i < points_; ++i) out[static_cast<std::size_t>(a[i])] = static_cast<std::int64_t>(i);
    }
    std::string representation() const override { return "permutations"; }

private:
    std::size_t points_;
};

// Signed permutations of n coordinates: entry i holds ±(j+1) when e_i ↦ ±e_j.
class SignedPermutationModel final : public ComponentModel {
public:
    SignedPermutationModel(int rank, bool even) : n_(static_cast<std::size_t>(rank)), even_(even) {}
    std::size_t code_size() const override { return n_; }
    void identity(std::span<std::int64_t> out) const override {
        for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<std::int64_t>(i) + 1;
    }
    void generator(int local, std::span<std::int64_t> out) const override {
        identity(out);
        if (local == 0) {
            if (even_) {
                out[0] = -2;
                out[1] = -1;
            } else {
                out[0] = -1;
            }
            return;
        }
        const auto k = static_cast<std::size_t>(local);
        if (even_ && k == 1) {
            std::swap(out[0], out[1]);
            return;
        }
        std::swap(out[k - 1], out[k]);
    }
    void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                  std::span<std::int64_t> out) const override {
        for (std::size_t i = 0; i < n_; ++i) {
            const std::int64_t v = b[i];
            const std::int64_t img = a[static_cast<std::size_t>((v < 0 ? -v : v) - 1)];
            out[i] = v < 0 ? -img : img;
        }
    }
    void inverse(std::span<const std::int64_t> a, std::span<std::int64_t> out) const override {
        for (std::size_t i = 0; i < n_; ++i) {
            const std::int64_t v = a[i];
            const auto j = static_cast<std::size_t>((v < 0 ? -v : v) - 1);
            out[j] = v < 0 ? -static_cast<std::int64_t>(i + 1) : static_cast<std::int64_t>(i + 1);
        }
    }
    std::string representation() const override {
        return even_ ? "even signed permutations" : "signed permutations";
    }

private:
    std::size_t n_;
    bool even_;
};

// r^k s^f in the dihedral group of order 2p; generators s and r·s.
class DihedralModel final : public ComponentModel {
public:
    explicit DihedralModel(int p) : p_(p) {}
    std::size_t code_size() const override { return 2; }
    void identity(std::span<std::int64_t> out) const override { out[0] = 0; out[1] = 0; }
    void generator(int local, std::span<std::int64_t> out) const override {
        out[0] = local == 0 ? 0 : 1;
        out[1] = 1;
    }
    void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                  std::span<std::int64_t> out) const override {
        const std::int64_t k = a[0] + (a[1] ? -b[0] : b[0]);
        out[0] = ((k % p_) + p_) % p_;
        out[1] = a[1] ^ b[1];
    }
    void inverse(std::span<const std::int64_t> a, std::span<std::int64_t> out) const override {
        out[0] = a[1] ? a[0] : (p_ - a[0]) % p_;
        out[1] = a[1];
    }
    std::string representation() const override { return "rotation-reflection pairs"; }

private:
    std::int64_t p_;
};

// Exact scalar encodings.
template <typename Scalar>
struct Codec;

template <>
struct Codec<Rational> {
    static constexpr std::size_t width = 2;
    static void put(const Rational& x, std::int64_t* out) {
        out[0] = x.numerator();
        out[1] = x.denominator();
    }
    static Rational get(const std::int64_t* in) { return Rational(in[0], in[1]); }
    static constexpr const char* name = "rational matrices";
};

template <>
struct Codec<QSqrt5> {
    static constexpr std::size_t width = 4;
    static void put(const QSqrt5& x, std::int64_t* out) {
        Codec<Rational>::put(x.rational_part(), out);
        Codec<Rational>::put(x.sqrt5_part(), out + 2);
    }
    static QSqrt5 get(const std::int64_t* in) {
        return {Codec<Rational>::get(in), Codec<Rational>::get(in + 2)};
    }
    static constexpr const char* name = "matrices over Q(sqrt5)";
};

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Gauss–Jordan inverse over an exact field; pivots on any nonzero entry.
template <typename Scalar>
Mat<Scalar> exact_inverse(Mat<Scalar> a) {
    const Eigen::Index n = a.rows();
    Mat<Scalar> inv = Mat<Scalar>::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && a(p, c) == Scalar(0)) ++p;
        if (p == n) throw Error(ErrorKind::InvalidArgument, "singular matrix");
        a.row(c).swap(a.row(p));
        inv.row(c).swap(inv.row(p));
        const Scalar d = a(c, c);
        for (Eigen::Index j = 0; j < n; ++j) {
            a(c, j) = a(c, j) / d;
            inv(c, j) = inv(c, j) / d;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c || a(r, c) == Scalar(0)) continue;
            const Scalar f = a(r, c);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(c, j);
                inv(r, j) = inv(r, j) - f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Reflections s_i = I + e_i·C.row(i) over an exact scalar.
template <typename Scalar>
class ReflectionMatrixModel final : public ComponentModel {
public:
    explicit ReflectionMatrixModel(Mat<Scalar> coefficients) : c_(std::move(coefficients)) {}
    std::size_t code_size() const override {
        return static_cast<std::size_t>(c_.size()) * Codec<Scalar>::width;
    }
    void identity(std::span<std::int64_t> out) const override {
        encode(Mat<Scalar>::Identity(c_.rows(), c_.cols()), out);
    }
    void generator(int local, std::span<std::int64_t> out) const override {
        Mat<Scalar> s = Mat<Scalar>::Identity(c_.rows(), c_.cols());
        s.row(local) += c_.row(local);
        encode(s, out);
    }
    void multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                  std::span<std::int64_t> out) const override {
        encode(decode(a).lazyProduct(decode(b)), out);
    }
    void inverse(std::span<const std::int64_t> a, std::span<std::int64_t> out) const override {
        encode(exact_inverse<Scalar>(decode(a)), out);
    }
    std::string representation() const override { return Codec<Scalar>::name; }

private:
    Mat<Scalar> decode(std::span<const std::int64_t> in) const {
        Mat<Scalar> m(c_.rows(), c_.cols());
        const std::int64_t* p = in.data();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i, p += Codec<Scalar>::width) m(i, j) = Codec<Scalar>::get(p);
        return m;
    }
    void encode(const Mat<Scalar>& m, std::span<std::int64_t> out) const {
        std::int64_t* p = out.data();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i, p += Codec<Scalar>::width) Codec<Scalar>::put(m(i, j), p);
    }

    Mat<Scalar> c_;
};

// Negated Cartan matrix of a crystallographic diagram; for a label 4 or 6 the
// long entry sits below the diagonal.
Mat<Rational> cartan_coefficients(const CoxeterMatrix& m) {
    const int n = m.rank();
    Mat<Rational> c = Mat<Rational>::Constant(n, n, Rational(0));
    for (int i = 0; i < n; ++i) {
        c(i, i) = Rational(-2);
        for (int j = i + 1; j < n; ++j) {
            switch (m(i, j)) {
                case 2: break;
                case 3: c(i, j) = c(j, i) = Rational(1); break;
                case 4: c(i, j) = Rational(1); c(j, i) = Rational(2); break;
                case 6: c(i, j) = Rational(1); c(j, i) = Rational(3); break;
                default: throw Error(ErrorKind::InvalidArgument, "label is not crystallographic");
            }
        }
    }
    return c;
}

// Coefficients 2·cos(π/m) of the geometric representation for labels 2, 3, 5.
Mat<QSqrt5> golden_coefficients(const CoxeterMatrix& m) {
    const int n = m.rank();
    Mat<QSqrt5> c = Mat<QSqrt5>::Constant(n, n, QSqrt5(0));
    for (int i = 0; i < n; ++i) {
        c(i, i) = QSqrt5(-2);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            switch (m(i, j)) {
                case 2: break;
                case 3: c(i, j) = QSqrt5(1); break;
                case 5: c(i, j) = QSqrt5::golden(); break;
                default: throw Error(ErrorKind::InvalidArgument, "label outside {2,3,5}");
            }
        }
    }
    return c;
}

}  // namespace

GroupModel::GroupModel(const CoxeterMatrix& m) : rank_(m.rank()) {
    locate_.resize(static_cast<std::size_t>(rank_));
    for (const auto& comp : irreducible_components(m)) {
        const auto layout = detail::classify_layout(comp.matrix);
        const auto& type = layout.type;
        if (!type.is_finite())
            throw Error(ErrorKind::NotFinite, "component " + std::to_string(comp.vertices.front() + 1) +
                                                  " generates an infinite Coxeter group");
        Part part;
        part.type = type;
        part.offset = code_size_;
        switch (type.family) {
            case CoxeterFamily::A:
                part.model = std::make_unique<PermutationModel>(type.rank);
                break;
            case CoxeterFamily::B:
                part.model = std::make_unique<SignedPermutationModel>(type.rank, false);
                break;
            case CoxeterFamily::D:
                part.model = std::make_unique<SignedPermutationModel>(type.rank, true);
                break;
            case CoxeterFamily::I2:
                part.model = std::make_unique<DihedralModel>(type.p);
                break;
            case CoxeterFamily::E:
            case CoxeterFamily::F:
                part.model = std::make_unique<ReflectionMatrixModel<Rational>>(cartan_coefficients(comp.matrix));
                break;
            case CoxeterFamily::H:
                part.model = std::make_unique<ReflectionMatrixModel<QSqrt5>>(golden_coefficients(comp.matrix));
                break;
            case CoxeterFamily::Infinite:
                break;
        }
        for (int local : layout.order) part.vertices.push_back(comp.vertices[static_cast<std::size_t>(local)]);
        for (std::size_t pos = 0; pos < part.vertices.size(); ++pos)
            locate_[static_cast<std::size_t>(part.vertices[pos])] = {parts_.size(), static_cast<int>(pos)};
        code_size_ += part.model->code_size();
        parts_.push_back(std::move(part));
    }
}

GroupElement GroupModel::identity() const {
    GroupElement e{std::vector<std::int64_t>(code_size_)};
    for (const auto& p : parts_)
        p.model->identity(std::span(e.code).subspan(p.offset, p.model->code_size()));
    return e;
}

GroupElement GroupModel::generator(int i) const {
    if (i < 0 || i >= rank_) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    GroupElement g = identity();
    const auto [part, local] = locate_[static_cast<std::size_t>(i)];
    const auto& p = parts_[part];
    p.model->generator(local, std::span(g.code).subspan(p.offset, p.model->code_size()));
    return g;
}

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement out{std::vector<std::int64_t>(code_size_)};
    for (const auto& p : parts_) {
        const auto n = p.model->code_size();
        p.model->multiply(std::span(a.code).subspan(p.offset, n), std::span(b.code).subspan(p.offset, n),
                          std::span(out.code).subspan(p.offset, n));
    }
    return out;
}

GroupElement GroupModel::inverse(const GroupElement& a) const {
    GroupElement out{std::vector<std::int64_t>(code_size_)};
    for (const auto& p : parts_) {
        const auto n = p.model->code_size();
        p.model->inverse(std::span(a.code).subspan(p.offset, n), std::span(out.code).subspan(p.offset, n));
    }
    return out;
}

std::string GroupModel::describe() const {
    std::string out;
    for (const auto& p : parts_) {
        if (!out.empty()) out += " x ";
        out += p.type.name() + ":" + p.model->representation();
    }
    return out;
}

std::string EnumeratedGroup::word(std::size_t g) const {
    const auto idx = word_indices(g);
    if (idx.empty()) return "e";
    std::string out;
    for (int i : idx) out += "s" + std::to_string(i + 1);
    return out;
}

std::vector<int> EnumeratedGroup::word_indices(std::size_t g) const {
    std::vector<int> out;
    while (last_generator[g] >= 0) {
        out.push_back(last_generator[g]);
        g = parent[g];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

EnumeratedGroup enumerate_group(const CoxeterMatrix& m, std::size_t cap) {
    const auto order = group_order(m);
    if (!order) throw Error(ErrorKind::NotFinite, "cannot enumerate an infinite Coxeter group");
    if (*order > BigInt(cap))
        throw Error(ErrorKind::CapExceeded, "group order " + order->str() + " exceeds the cap " +
                                                std::to_string(cap));
    const GroupModel model(m);
    const int n = m.rank();
    std::vector<GroupElement> gens;
    for (int i = 0; i < n; ++i) gens.push_back(model.generator(i));

    EnumeratedGroup out;
    std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
    auto add = [&](GroupElement g, std::size_t parent, int gen) {
        auto [it, inserted] = index.emplace(std::move(g), out.elements.size());
        if (inserted) {
            if (out.elements.size() >= cap)
                throw Error(ErrorKind::CapExceeded, "enumeration exceeded the cap");
            out.elements.push_back(it->first);
            out.parent.push_back(parent);
            out.last_generator.push_back(gen);
            out.right.emplace_back(static_cast<std::size_t>(n));
        }
        return it->second;
    };
    add(model.identity(), 0, -1);
    for (std::size_t t = 0; t < out.elements.size(); ++t) {
        for (int i = 0; i < n; ++i) {
            auto h = model.multiply(out.elements[t], gens[static_cast<std::size_t>(i)]);
            const std::size_t id = add(std::move(h), t, i);
            out.right[t][static_cast<std::size_t>(i)] = id;
        }
    }
    out.left.assign(out.elements.size(), std::vector<std::size_t>(static_cast<std::size_t>(n)));
    for (std::size_t g = 0; g < out.elements.size(); ++g)
        for (int i = 0; i < n; ++i)
            out.left[g][static_cast<std::size_t>(i)] =
                index.at(model.multiply(gens[static_cast<std::size_t>(i)], out.elements[g]));
    return out;
}

}  // namespace actdim
