#pragma once

// Test-only reference computations. None of these call into the library's
// algorithmic paths; they rebuild the objects from first principles.

#include <array>
#include <map>
#include <set>
#include <vector>

#include "weylcheb/laurent.hpp"
#include "weylcheb/rootsystem.hpp"
#include "weylcheb/types.hpp"

namespace weylcheb::oracle {

using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

inline Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

/// Order of the group generated by simple reflections acting on the root
/// basis: s_i(alpha_j) = alpha_j - C_ji alpha_i.
inline std::size_t group_order_on_roots(const Mat2& cartan) {
    std::vector<Mat2> gens;
    for (int i = 0; i < 2; ++i) {
        Mat2 s{};  // column j = image of alpha_j in root coordinates
        for (int j = 0; j < 2; ++j) {
            s[j][j] += 1;
            s[i][j] -= cartan[j][i];
        }
        gens.push_back(s);
    }
    std::set<Mat2> seen{{{{1, 0}, {0, 1}}}};
    std::vector<Mat2> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& u : frontier)
            for (const auto& g : gens) {
                const Mat2 v = mul(u, g);
                if (seen.insert(v).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

/// G2 generator action on weight coordinates as a literal table:
/// w1 l1 = l2 - l1, w1 l2 = l2, w2 l1 = l1, w2 l2 = 3 l1 - l2.
inline Weight g2_apply(int gen, const Weight& mu) {
    const std::int64_t a = mu[0], b = mu[1];
    if (gen == 1) return Weight{-a, a + b};
    return Weight{a + 3 * b, -b};
}

/// Orbit of mu under G2 with multiplicities, by walking every word of
/// length <= 6 and de-duplicating elements through their action on a
/// generic weight.
inline std::vector<std::pair<Weight, int>> g2_signed_images(const Weight& mu) {
    const Weight probe{7, 11};
    std::map<Weight, std::pair<Weight, int>> by_element;  // probe image -> (mu image, sign)
    std::vector<std::pair<std::pair<Weight, Weight>, int>> frontier{{{probe, mu}, 1}};
    by_element.emplace(probe, std::pair{mu, 1});
    for (int len = 0; len < 6; ++len) {
        std::vector<std::pair<std::pair<Weight, Weight>, int>> next;
        for (const auto& [pm, sign] : frontier)
            for (int g = 1; g <= 2; ++g) {
                const Weight p = g2_apply(g, pm.first);
                const Weight v = g2_apply(g, pm.second);
                if (by_element.emplace(p, std::pair{v, -sign}).second) next.push_back({{p, v}, -sign});
            }
        frontier = std::move(next);
    }
    std::vector<std::pair<Weight, int>> out;
    for (const auto& [p, vs] : by_element) out.push_back(vs);
    return out;
}

/// Weyl dimension of the G2 module with highest weight a l1 + b l2, written
/// out over the six positive roots (l1 short).
inline Integer g2_dimension(std::int64_t a, std::int64_t b) {
    const Integer p = Integer(a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5);
    return p / 120;
}

/// A1 character of the (n+1)-dimensional module: z^n + z^{n-2} + ... + z^{-n}.
inline LaurentPoly a1_character(std::int64_t n) {
    LaurentPoly p(1);
    for (std::int64_t k = -n; k <= n; k += 2) p.add_term(Weight{k}, Rational(1));
    return p;
}

}  // namespace weylcheb::oracle
