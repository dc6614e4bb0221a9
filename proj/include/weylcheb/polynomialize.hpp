#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "weylcheb/laurent.hpp"
#include "weylcheb/orbit.hpp"
#include "weylcheb/rootsystem.hpp"
#include "weylcheb/xypoly.hpp"

namespace weylcheb {

/// Coefficients of a W-invariant Laurent polynomial on dominant exponents.
/// The full polynomial is recovered by spreading each term over its orbit.
using DominantPart = std::map<Weight, Rational>;

DominantPart dominant_part(const LaurentPoly& f);

/// Dominant part of P * X where P is W-invariant (given by its dominant part)
/// and X is an arbitrary Laurent polynomial that is also W-invariant.
DominantPart multiply_invariant(const RootSystem& rs, const DominantPart& p, const LaurentPoly& x);

/// The generalized-cosine variables of one kind, with the data the greedy
/// reduction needs. Copies share one monomial power cache.
class VariableBasis {
public:
    VariableBasis(RootSystem rs, Kind kind);

    const RootSystem& root_system() const noexcept { return rs_; }
    Kind kind() const noexcept { return kind_; }
    std::size_t rank() const noexcept { return rs_.rank(); }

    const std::vector<LaurentPoly>& var_laurents() const noexcept { return vars_; }
    /// Leading weight of variable i is the fundamental weight e_i.
    const std::vector<Weight>& leading_weights() const noexcept { return leading_weights_; }
    /// Coefficient at the leading weight: 1 for the second kind, |Stab(lambda_i)| for the first.
    const std::vector<Rational>& leading_coeffs() const noexcept { return leading_coeffs_; }

    /// Dominant part of the product of variable powers, cached.
    const DominantPart& power(const Degrees& degrees) const;

    /// Value of variable i at the identity, i.e. the sum of its coefficients.
    Rational value_at_identity(std::size_t i) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<Degrees, DominantPart> powers;
    };

    RootSystem rs_;
    Kind kind_;
    std::vector<LaurentPoly> vars_;
    std::vector<Weight> leading_weights_;
    std::vector<Rational> leading_coeffs_;
    std::shared_ptr<Cache> cache_;
};

struct ReduceStats {
    std::size_t steps = 0;
    std::size_t step_bound = 0;
};

/// Expresses a W-invariant Laurent polynomial in the basis variables by
/// eliminating the highest dominant term until nothing is left.
XYPoly reduce(const VariableBasis& basis, const LaurentPoly& f, ReduceStats* stats = nullptr);

/// Substitutes the variable Laurent polynomials into p.
LaurentPoly expand(const VariableBasis& basis, const XYPoly& p);

enum class Dominance { Less, Greater, Equal, Incomparable };

Dominance dominance_compare(const RootSystem& rs, const Weight& mu, const Weight& nu);

/// Number of dominant weights nu with nu <= mu in the dominance order.
std::size_t count_dominant_below(const RootSystem& rs, const Weight& mu);

/// Number of dominant weights lying below at least one of `tops`.
std::size_t count_dominant_below(const RootSystem& rs, std::span<const Weight> tops);

}  // namespace weylcheb
