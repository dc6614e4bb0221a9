#include "weylcheb/polynomialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weylcheb {

namespace {

// Dominance-compatible total order for picking the next leader: scaled height
// first, then lexicographic.
struct LeaderKey {
    std::int64_t height;
    Weight weight;
    auto operator<=>(const LeaderKey&) const = default;
};

}  // namespace

DominantPart dominant_part(const LaurentPoly& f) {
    DominantPart d;
    for (const auto& [e, c] : f.terms())
        if (std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v >= 0; })) d.emplace(e, c);
    return d;
}

DominantPart multiply_invariant(const RootSystem& rs, const DominantPart& p, const LaurentPoly& x) {
    std::set<Weight> candidates;
    for (const auto& [s, c] : p)
        for (const auto& w : rs.elements) {
            const Weight ws = act(w.matrix, s);
            for (const auto& [t, ct] : x.terms()) {
                Weight v = ws + t;
                if (is_dominant(rs, v)) candidates.insert(v);
            }
        }
    DominantPart out;
    Rational sum;
    for (const auto& v : candidates) {
        sum = 0;
        for (const auto& [t, ct] : x.terms()) {
            auto it = p.find(rs.to_dominant(v - t));
            if (it != p.end()) sum += it->second * ct;
        }
        if (sgn(sum) != 0) out.emplace(v, sum);
    }
    return out;
}

VariableBasis::VariableBasis(RootSystem rs, Kind kind)
    : rs_(std::move(rs)), kind_(kind), vars_(variable_laurents(rs_, kind)), cache_(std::make_shared<Cache>()) {
    for (std::size_t i = 0; i < rank(); ++i) {
        const Weight lead = rs_.fundamental_weight(i);
        const Rational c = vars_[i].coeff(lead);
        if (sgn(c) == 0) throw std::logic_error("VariableBasis: variable lacks its leading weight");
        for (const auto& [e, coeff] : vars_[i].terms())
            if (e != lead && rs_.scaled_height(e) >= rs_.scaled_height(lead))
                throw std::logic_error("VariableBasis: leading weight is not maximal");
        leading_weights_.push_back(lead);
        leading_coeffs_.push_back(c);
    }
    cache_->powers.emplace(Degrees(rank()), DominantPart{{Weight(rank()), Rational(1)}});
}

const DominantPart& VariableBasis::power(const Degrees& degrees) const {
    std::lock_guard lock(cache_->mutex);
    auto& powers = cache_->powers;
    if (auto it = powers.find(degrees); it != powers.end()) return it->second;

    // Walk down to a cached ancestor, then multiply back up one variable at a time.
    std::vector<std::pair<Degrees, std::size_t>> chain;
    Degrees d = degrees;
    while (!powers.contains(d)) {
        std::size_t i = 0;
        while (d[i] == 0) ++i;
        chain.emplace_back(d, i);
        d[i] -= 1;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        Degrees below = it->first;
        below[it->second] -= 1;
        // std::map references stay valid across insertions.
        const DominantPart& base = powers.at(below);
        powers.emplace(it->first, multiply_invariant(rs_, base, vars_[it->second]));
    }
    return powers.at(degrees);
}

Rational VariableBasis::value_at_identity(std::size_t i) const {
    Rational s(0);
    for (const auto& [e, c] : vars_.at(i).terms()) s += c;
    return s;
}

XYPoly reduce(const VariableBasis& basis, const LaurentPoly& f, ReduceStats* stats) {
    const RootSystem& rs = basis.root_system();
    if (f.rank() != rs.rank()) throw RankMismatch("reduce: rank mismatch");
    XYPoly result(rs.rank());
    if (f.is_zero()) {
        if (stats) *stats = {};
        return result;
    }

    for (std::size_t g : rs.generators)
        if (apply_weyl(f, rs.elements[g]) != f) throw NotInvariant("reduce: input is not W-invariant");

    LeaderKey top{rs.scaled_height(f.terms().begin()->first), f.terms().begin()->first};
    for (const auto& [e, c] : f.terms()) top = std::max(top, LeaderKey{rs.scaled_height(e), e});
    if (!is_dominant(rs, top.weight)) {
        std::ostringstream os;
        os << "reduce: maximal term " << top.weight << " is not dominant";
        throw NonDominantLeader(os.str());
    }

    // Only dominant coefficients are tracked: an invariant polynomial whose
    // dominant part vanishes is zero.
    DominantPart remaining = dominant_part(f);

    // Every leader lies below some dominant term of f, and each is visited once.
    std::vector<Weight> tops;
    for (const auto& [e, c] : remaining) tops.push_back(e);
    const std::size_t bound = count_dominant_below(rs, tops);
    std::size_t steps = 0;
    while (!remaining.empty()) {
        auto lead = remaining.begin();
        LeaderKey best{rs.scaled_height(lead->first), lead->first};
        for (auto it = remaining.begin(); it != remaining.end(); ++it) {
            LeaderKey k{rs.scaled_height(it->first), it->first};
            if (best < k) {
                best = k;
                lead = it;
            }
        }
        const Degrees degrees = to_degrees(lead->first);
        Rational lc(1);
        for (std::size_t i = 0; i < degrees.size(); ++i)
            for (std::int64_t k = 0; k < degrees[i]; ++k) lc *= basis.leading_coeffs()[i];
        const Rational t = lead->second / lc;
        result.add_term(degrees, t);

        const Weight leader = lead->first;
        for (const auto& [e, c] : basis.power(degrees)) {
            auto [it, inserted] = remaining.try_emplace(e, -t * c);
            if (!inserted) {
                it->second -= t * c;
                if (sgn(it->second) == 0) remaining.erase(it);
            }
        }
        if (remaining.contains(leader)) throw std::logic_error("reduce: leader did not cancel");
        if (++steps > bound) throw std::logic_error("reduce: elimination exceeded its step bound");
    }
    if (stats) *stats = {steps, bound};
    return result;
}

LaurentPoly expand(const VariableBasis& basis, const XYPoly& p) {
    if (p.rank() != basis.rank()) throw RankMismatch("expand: rank mismatch");
    const std::size_t rank = basis.rank();
    LaurentPoly out(rank);
    std::vector<std::vector<LaurentPoly>> powers(rank);
    for (std::size_t i = 0; i < rank; ++i) powers[i].push_back(LaurentPoly::constant(rank, Rational(1)));
    for (const auto& [d, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(rank, c);
        for (std::size_t i = 0; i < rank; ++i) {
            auto& pw = powers[i];
            while (static_cast<std::int64_t>(pw.size()) <= d[i]) pw.push_back(pw.back() * basis.var_laurents()[i]);
            if (d[i] > 0) term = term * pw[static_cast<std::size_t>(d[i])];
        }
        out += term;
    }
    return out;
}

Dominance dominance_compare(const RootSystem& rs, const Weight& mu, const Weight& nu) {
    if (mu == nu) return Dominance::Equal;
    auto nonneg = [](const std::vector<Rational>& c) {
        return std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) >= 0; });
    };
    if (nonneg(to_root_coords(rs, nu - mu))) return Dominance::Less;
    if (nonneg(to_root_coords(rs, mu - nu))) return Dominance::Greater;
    return Dominance::Incomparable;
}

std::size_t count_dominant_below(const RootSystem& rs, std::span<const Weight> tops) {
    std::int64_t h = -1;
    for (const auto& t : tops) h = std::max(h, rs.scaled_height(t));
    if (h < 0) return 0;
    const std::size_t rank = rs.rank();
    std::vector<std::int64_t> limit(rank);
    for (std::size_t i = 0; i < rank; ++i) limit[i] = h / rs.scaled_height(rs.fundamental_weight(i));

    std::size_t count = 0;
    Weight nu(rank);
    // Odometer over the box of candidate dominant weights.
    for (;;) {
        const bool below = std::any_of(tops.begin(), tops.end(), [&](const Weight& t) {
            const Dominance d = dominance_compare(rs, nu, t);
            return d == Dominance::Less || d == Dominance::Equal;
        });
        count += below;
        std::size_t i = 0;
        while (i < rank && nu[i] == limit[i]) nu[i++] = 0;
        if (i == rank) break;
        nu[i] += 1;
    }
    return count;
}

std::size_t count_dominant_below(const RootSystem& rs, const Weight& mu) {
    return count_dominant_below(rs, std::span<const Weight>(&mu, 1));
}

}  // namespace weylcheb
