#include "weylcheb/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace weylcheb {

std::string_view to_string(AlgebraId a) {
    switch (a) {
        case AlgebraId::A1: return "a1";
        case AlgebraId::A2: return "a2";
        case AlgebraId::C2: return "c2";
        case AlgebraId::G2: return "g2";
    }
    return "?";
}

std::optional<AlgebraId> parse_algebra(std::string_view s) {
    std::string lower(s);
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "a1") return AlgebraId::A1;
    if (lower == "a2") return AlgebraId::A2;
    if (lower == "c2") return AlgebraId::C2;
    if (lower == "g2") return AlgebraId::G2;
    return std::nullopt;
}

std::size_t rank_of(AlgebraId a) { return a == AlgebraId::A1 ? 1 : 2; }

std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (int g : word) os << 'w' << g;
    return os.str();
}

namespace {

struct GeneratorTable {
    IntMatrix cartan;
    std::vector<IntMatrix> generators;
};

IntMatrix make(std::size_t n, std::initializer_list<std::int64_t> rows) {
    IntMatrix m(n);
    std::size_t k = 0;
    for (auto v : rows) {
        m(k / n, k % n) = v;
        ++k;
    }
    return m;
}

// Cartan matrices use C_ij = 2(a_i,a_j)/(a_j,a_j), so a_1 is the short root in C2 and G2.
// Generator tables give w_i on weight coordinates; column j is w_i(lambda_j).
GeneratorTable generator_table(AlgebraId a) {
    switch (a) {
        case AlgebraId::A1:
            return {make(1, {2}), {make(1, {-1})}};
        case AlgebraId::A2:
            return {make(2, {2, -1, -1, 2}), {make(2, {-1, 0, 1, 1}), make(2, {1, 1, 0, -1})}};
        case AlgebraId::C2:
            return {make(2, {2, -1, -2, 2}), {make(2, {-1, 0, 1, 1}), make(2, {1, 2, 0, -1})}};
        case AlgebraId::G2:
            // w1 l1 = l2 - l1, w1 l2 = l2, w2 l1 = l1, w2 l2 = 3 l1 - l2
            return {make(2, {2, -1, -3, 2}), {make(2, {-1, 0, 1, 1}), make(2, {1, 3, 0, -1})}};
    }
    throw std::invalid_argument("unknown algebra");
}

std::int64_t determinant(const IntMatrix& m) {
    if (m.size() == 1) return m(0, 0);
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

RationalMatrix inverse(const IntMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix r(n);
    const Rational d(determinant(m));
    if (n == 1) {
        r(0, 0) = Rational(1) / d;
    } else {
        r(0, 0) = Rational(m(1, 1)) / d;
        r(0, 1) = Rational(-m(0, 1)) / d;
        r(1, 0) = Rational(-m(1, 0)) / d;
        r(1, 1) = Rational(m(0, 0)) / d;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j).canonicalize();
    return r;
}

}  // namespace

Weight act(const IntMatrix& m, const Weight& mu) {
    Weight r(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < mu.size(); ++j) s += m(i, j) * mu[j];
        r[i] = s;
    }
    return r;
}

Weight act(const RootSystem&, const WeylElement& w, const Weight& mu) {
    if (w.matrix.size() != mu.size()) throw RankMismatch("act: rank mismatch");
    return act(w.matrix, mu);
}

Weight RootSystem::simple_root(std::size_t i) const {
    Weight a(rank());
    for (std::size_t j = 0; j < rank(); ++j) a[j] = cartan(i, j);
    return a;
}

Rational RootSystem::inner(const Weight& mu, const Weight& nu) const {
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += gram(i, j) * mu[i] * nu[j];
    return s;
}

std::int64_t RootSystem::scaled_height(const Weight& mu) const {
    std::int64_t h = 0;
    for (std::size_t j = 0; j < rank(); ++j) h += height_coeffs_[j] * mu[j];
    return h;
}

Weight RootSystem::to_dominant(const Weight& mu) const {
    Weight v = mu;
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (v[i] < 0) {
                const auto k = v[i];
                for (std::size_t j = 0; j < rank(); ++j) v[j] -= k * cartan(i, j);
                moved = true;
            }
        }
        if (!moved) return v;
    }
}

std::vector<Weight> RootSystem::orbit(const Weight& mu) const {
    std::set<Weight> seen;
    for (const auto& w : elements) seen.insert(act(w.matrix, mu));
    return {seen.begin(), seen.end()};
}

std::size_t RootSystem::stabilizer_order(const Weight& mu) const {
    return static_cast<std::size_t>(
        std::count_if(elements.begin(), elements.end(), [&](const WeylElement& w) { return act(w.matrix, mu) == mu; }));
}

std::optional<std::size_t> RootSystem::find(const IntMatrix& m) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].matrix == m) return i;
    return std::nullopt;
}

IntMatrix RootSystem::word_matrix(const std::vector<int>& word) const {
    IntMatrix m = IntMatrix::identity(rank());
    for (int g : word) m = m * generator(static_cast<std::size_t>(g - 1)).matrix;
    return m;
}

RootSystem build_root_system(AlgebraId algebra) {
    auto table = generator_table(algebra);
    const std::size_t n = table.cartan.size();

    RootSystem rs;
    rs.algebra = algebra;
    rs.cartan = table.cartan;
    rs.cartan_inverse = inverse(table.cartan);

    // Breadth-first closure under right multiplication by generators; the
    // first word reaching a matrix is a shortest one.
    rs.elements.push_back({IntMatrix::identity(n), 1, 0, {}});
    std::map<IntMatrix, std::size_t> index{{rs.elements[0].matrix, 0}};
    std::size_t frontier_begin = 0;
    while (frontier_begin < rs.elements.size()) {
        const std::size_t frontier_end = rs.elements.size();
        for (std::size_t u = frontier_begin; u < frontier_end; ++u) {
            for (std::size_t g = 0; g < table.generators.size(); ++g) {
                IntMatrix m = rs.elements[u].matrix * table.generators[g];
                if (index.contains(m)) continue;
                WeylElement w;
                w.matrix = m;
                w.word = rs.elements[u].word;
                w.word.push_back(static_cast<int>(g + 1));
                w.word_length = static_cast<int>(w.word.size());
                w.det = static_cast<int>(determinant(m));
                index.emplace(m, rs.elements.size());
                rs.elements.push_back(std::move(w));
            }
        }
        frontier_begin = frontier_end;
    }
    for (const auto& g : table.generators) rs.generators.push_back(index.at(g));

    rs.rho = Weight(n);
    for (std::size_t i = 0; i < n; ++i) rs.rho[i] = 1;

    // Half squared root lengths: C_ij |a_j|^2 = C_ji |a_i|^2, shortest root length^2 = 2.
    std::vector<Rational> half_len(n, Rational(1));
    if (n == 2 && table.cartan(0, 1) != 0) {
        half_len[1] = Rational(table.cartan(1, 0), table.cartan(0, 1));
        half_len[1].canonicalize();
        const Rational lo = std::min(half_len[0], half_len[1]);
        for (auto& h : half_len) h /= lo;
    }
    // (lambda_i, alpha_j) = delta_ij |a_j|^2 / 2 gives gram = D C^{-T}.
    rs.gram = RationalMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.gram(i, j) = half_len[i] * rs.cartan_inverse(j, i);

    const Integer det(determinant(table.cartan));
    for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < n; ++i) s += rs.cartan_inverse(j, i);
        s *= abs(det);
        assert(s.get_den() == 1 && s > 0);
        rs.height_coeffs_[j] = s.get_num().get_si();
    }

    std::set<Weight> roots;
    for (std::size_t i = 0; i < n; ++i) {
        auto orb = rs.orbit(rs.simple_root(i));
        roots.insert(orb.begin(), orb.end());
    }
    for (const auto& r : roots) {
        auto c = to_root_coords(rs, r);
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; })) rs.positive_roots.push_back(r);
    }
    return rs;
}

std::vector<Rational> to_root_coords(const RootSystem& rs, const Weight& mu) {
    if (mu.size() != rs.rank()) throw RankMismatch("to_root_coords: rank mismatch");
    std::vector<Rational> c(rs.rank(), Rational(0));
    for (std::size_t i = 0; i < rs.rank(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j) c[i] += rs.cartan_inverse(j, i) * mu[j];
    return c;
}

bool is_dominant(const RootSystem&, const Weight& mu) {
    return std::all_of(mu.begin(), mu.end(), [](std::int64_t v) { return v >= 0; });
}

bool is_strictly_dominant(const RootSystem&, const Weight& mu) {
    return std::all_of(mu.begin(), mu.end(), [](std::int64_t v) { return v > 0; });
}

std::pair<WeylElement, Weight> dominant_representative(const RootSystem& rs, const Weight& mu) {
    for (const auto& w : rs.elements) {
        Weight v = act(w.matrix, mu);
        if (is_dominant(rs, v)) return {w, v};
    }
    throw std::logic_error("dominant_representative: orbit misses the dominant chamber");
}

}  // namespace weylcheb
