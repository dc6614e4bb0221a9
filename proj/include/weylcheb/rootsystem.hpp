#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylcheb/types.hpp"

namespace weylcheb {

enum class AlgebraId { A1, A2, C2, G2 };

std::string_view to_string(AlgebraId a);
std::optional<AlgebraId> parse_algebra(std::string_view s);
std::size_t rank_of(AlgebraId a);

/// Square matrix of size rank x rank, row-major.
template <class T>
class SmallMatrix {
public:
    SmallMatrix() = default;
    explicit SmallMatrix(std::size_t n) : n_(n) {
        for (auto& v : a_) v = T(0);
    }

    static SmallMatrix identity(std::size_t n) {
        SmallMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * kMaxRank + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * kMaxRank + j]; }

    friend SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y) {
        SmallMatrix r(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t j = 0; j < x.n_; ++j) {
                T s(0);
                for (std::size_t k = 0; k < x.n_; ++k) s += x(i, k) * y(k, j);
                r(i, j) = s;
            }
        return r;
    }

    friend bool operator==(const SmallMatrix& x, const SmallMatrix& y) {
        if (x.n_ != y.n_) return false;
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t j = 0; j < x.n_; ++j)
                if (x(i, j) != y(i, j)) return false;
        return true;
    }

    friend bool operator<(const SmallMatrix& x, const SmallMatrix& y) {
        for (std::size_t i = 0; i < x.n_ * x.n_; ++i) {
            const auto& u = x(i / x.n_, i % x.n_);
            const auto& v = y(i / x.n_, i % x.n_);
            if (u != v) return u < v;
        }
        return false;
    }

private:
    std::array<T, kMaxRank * kMaxRank> a_{};
    std::size_t n_ = 0;
};

using IntMatrix = SmallMatrix<std::int64_t>;
using RationalMatrix = SmallMatrix<Rational>;

/// A Weyl group element acting on weight coordinates (column j is the image of lambda_j).
struct WeylElement {
    IntMatrix matrix;
    int det = 1;
    int word_length = 0;
    /// Shortest generator word found by the closure, as 1-based generator indices.
    std::vector<int> word;
};

std::string word_to_string(const std::vector<int>& word);

class RootSystem {
public:
    AlgebraId algebra;
    IntMatrix cartan;
    RationalMatrix cartan_inverse;
    /// Full Weyl group in breadth-first order; elements[0] is the identity.
    std::vector<WeylElement> elements;
    /// Generator reflections w_1..w_d, as indices into `elements`.
    std::vector<std::size_t> generators;
    Weight rho;
    /// Inner products (lambda_i, lambda_j), short roots normalized to length^2 = 2.
    RationalMatrix gram;
    /// Positive roots in weight coordinates.
    std::vector<Weight> positive_roots;

    std::size_t rank() const noexcept { return cartan.size(); }
    std::size_t order() const noexcept { return elements.size(); }
    const WeylElement& identity() const { return elements.front(); }
    const WeylElement& generator(std::size_t i) const { return elements.at(generators.at(i)); }

    /// Simple root alpha_i in weight coordinates (row i of the Cartan matrix).
    Weight simple_root(std::size_t i) const;
    Weight fundamental_weight(std::size_t i) const { return Weight::unit(rank(), i); }

    /// Inner product via the gram matrix.
    Rational inner(const Weight& mu, const Weight& nu) const;

    /// Sum of root coordinates scaled by the Cartan determinant; strictly
    /// increasing along the dominance order.
    std::int64_t scaled_height(const Weight& mu) const;

    /// Dominant element of the orbit of mu, found by repeated simple reflections.
    Weight to_dominant(const Weight& mu) const;

    /// Distinct elements of the orbit W.mu, sorted.
    std::vector<Weight> orbit(const Weight& mu) const;

    /// Number of group elements fixing mu.
    std::size_t stabilizer_order(const Weight& mu) const;

    /// Index into `elements` of the element with this matrix, if any.
    std::optional<std::size_t> find(const IntMatrix& m) const;

    /// Matrix of the product of a generator word (1-based indices), left to right.
    IntMatrix word_matrix(const std::vector<int>& word) const;

private:
    std::array<std::int64_t, kMaxRank> height_coeffs_{};
    friend RootSystem build_root_system(AlgebraId algebra);
};

RootSystem build_root_system(AlgebraId algebra);

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& mu);
Weight act(const IntMatrix& m, const Weight& mu);

std::vector<Rational> to_root_coords(const RootSystem& rs, const Weight& mu);

bool is_dominant(const RootSystem& rs, const Weight& mu);
bool is_strictly_dominant(const RootSystem& rs, const Weight& mu);

/// Returns (w, w.mu) with w.mu dominant, by search over the whole group.
std::pair<WeylElement, Weight> dominant_representative(const RootSystem& rs, const Weight& mu);

}  // namespace weylcheb
