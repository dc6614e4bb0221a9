#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace weylcheb {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::size_t kMaxRank = 2;

// Coordinates stay far below this bound for every index range the library targets.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 31;

/// Fixed-capacity integer tuple of length 1..kMaxRank. `Tag` separates
/// lattice weights from polynomial multidegrees at the type level.
template <class Tag>
class IntTuple {
public:
    IntTuple() = default;

    explicit IntTuple(std::size_t rank) : rank_(rank) {
        if (rank == 0 || rank > kMaxRank) throw std::invalid_argument("IntTuple: unsupported rank");
    }

    IntTuple(std::initializer_list<std::int64_t> values) : IntTuple(values.size()) {
        std::size_t i = 0;
        for (auto v : values) c_[i++] = v;
    }

    static IntTuple unit(std::size_t rank, std::size_t i) {
        IntTuple t(rank);
        t.c_[i] = 1;
        return t;
    }

    std::size_t size() const noexcept { return rank_; }
    std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
    std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }

    const std::int64_t* begin() const noexcept { return c_.data(); }
    const std::int64_t* end() const noexcept { return c_.data() + rank_; }

    std::int64_t total() const noexcept {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank_; ++i) s += c_[i];
        return s;
    }

    bool is_zero() const noexcept {
        for (std::size_t i = 0; i < rank_; ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    IntTuple& operator+=(const IntTuple& o) {
        check_rank(o);
        for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
        guard();
        return *this;
    }
    IntTuple& operator-=(const IntTuple& o) {
        check_rank(o);
        for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
        guard();
        return *this;
    }
    IntTuple& operator*=(std::int64_t k) {
        for (std::size_t i = 0; i < rank_; ++i) c_[i] *= k;
        guard();
        return *this;
    }

    friend IntTuple operator+(IntTuple a, const IntTuple& b) { return a += b; }
    friend IntTuple operator-(IntTuple a, const IntTuple& b) { return a -= b; }
    friend IntTuple operator*(std::int64_t k, IntTuple a) { return a *= k; }
    friend IntTuple operator-(IntTuple a) { return a *= -1; }

    friend bool operator==(const IntTuple& a, const IntTuple& b) noexcept {
        if (a.rank_ != b.rank_) return false;
        for (std::size_t i = 0; i < a.rank_; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    // Lexicographic, first coordinate most significant.
    friend std::strong_ordering operator<=>(const IntTuple& a, const IntTuple& b) noexcept {
        if (auto r = a.rank_ <=> b.rank_; r != 0) return r;
        for (std::size_t i = 0; i < a.rank_; ++i)
            if (auto r = a.c_[i] <=> b.c_[i]; r != 0) return r;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntTuple& t) {
        os << '(';
        for (std::size_t i = 0; i < t.rank_; ++i) os << (i ? "," : "") << t.c_[i];
        return os << ')';
    }

private:
    void check_rank(const IntTuple& o) const {
        if (o.rank_ != rank_) throw std::invalid_argument("IntTuple: rank mismatch");
    }
    void guard() const {
        for (std::size_t i = 0; i < rank_; ++i)
            assert(c_[i] < kCoordLimit && c_[i] > -kCoordLimit);
    }

    std::array<std::int64_t, kMaxRank> c_{};
    std::size_t rank_ = 0;
};

struct WeightTag {};
struct DegreeTag {};

/// Integer coordinates in the fundamental-weight basis.
using Weight = IntTuple<WeightTag>;
/// Exponent tuple of a monomial in the generalized cosines.
using Degrees = IntTuple<DegreeTag>;

inline Degrees to_degrees(const Weight& w) {
    Degrees d(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) d[i] = w[i];
    return d;
}

inline Weight to_weight(const Degrees& d) {
    Weight w(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) w[i] = d[i];
    return w;
}

// Errors. The "alarm" kinds indicate an upstream bug rather than bad input.

class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonDivisible : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotInvariant : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NonDominantLeader : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConvolutionNotTerminating : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class AllPointsSingular : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace weylcheb
