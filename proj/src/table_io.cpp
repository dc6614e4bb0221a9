#include "weylcheb/table_io.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace weylcheb {

std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "latex") return OutputFormat::Latex;
    if (s == "plain") return OutputFormat::Plain;
    return std::nullopt;
}

std::vector<Weight> print_order(const PolynomialTable& t) {
    std::vector<Weight> keys;
    for (const auto& [k, p] : t.polys) keys.push_back(k);
    std::stable_sort(keys.begin(), keys.end(), [](const Weight& a, const Weight& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a[0] > b[0];
    });
    return keys;
}

namespace {

std::string index_label(const Weight& w, std::string_view sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? sep : "") << w[i];
    return os.str();
}

}  // namespace

std::string render_table(const PolynomialTable& t, OutputFormat fmt) {
    const auto order = print_order(t);
    const char* symbol = t.kind == Kind::Second ? "U" : "\\Phi";
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            nlohmann::json j;
            j["schema"] = 1;
            j["algebra"] = std::string(to_string(t.algebra));
            j["kind"] = std::string(to_string(t.kind));
            j["max_m"] = t.max_m;
            j["max_n"] = t.max_n;
            auto arr = nlohmann::json::array();
            for (const auto& k : order) {
                nlohmann::json rec;
                rec["m"] = k[0];
                rec["n"] = k.size() > 1 ? k[1] : 0;
                rec["poly"] = format_poly(t.polys.at(k), PolyFormat::Plain);
                arr.push_back(std::move(rec));
            }
            j["polynomials"] = std::move(arr);
            os << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Latex: {
            os << "\\begin{align*}\n";
            for (std::size_t i = 0; i < order.size(); ++i) {
                os << symbol << "_{" << index_label(order[i], ",") << "} &= "
                   << format_poly(t.polys.at(order[i]), PolyFormat::Latex) << (i + 1 < order.size() ? "\\\\" : "")
                   << '\n';
            }
            os << "\\end{align*}\n";
            break;
        }
        case OutputFormat::Plain: {
            const char* plain_symbol = t.kind == Kind::Second ? "U" : "Phi";
            for (const auto& k : order)
                os << plain_symbol << '[' << index_label(k, ",") << "] = " << format_poly(t.polys.at(k)) << '\n';
            break;
        }
    }
    return os.str();
}

PolynomialTable table_from_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("table_from_json: unsupported schema");
    PolynomialTable t;
    const auto algebra = parse_algebra(j.at("algebra").get<std::string>());
    const auto kind = parse_kind(j.at("kind").get<std::string>());
    if (!algebra || !kind) throw std::invalid_argument("table_from_json: bad algebra or kind");
    t.algebra = *algebra;
    t.kind = *kind;
    t.max_m = j.at("max_m").get<std::int64_t>();
    t.max_n = j.at("max_n").get<std::int64_t>();
    const std::size_t rank = rank_of(t.algebra);
    for (const auto& rec : j.at("polynomials")) {
        const auto m = rec.at("m").get<std::int64_t>();
        const auto n = rec.at("n").get<std::int64_t>();
        t.polys.emplace(rank == 1 ? Weight{m} : Weight{m, n}, parse_poly(rec.at("poly").get<std::string>(), rank));
    }
    return t;
}

std::map<Weight, XYPoly> table_from_latex(std::string_view text, std::size_t rank) {
    static const std::regex line(R"(^(?:U|\\Phi)_\{(-?\d+)(?:,(-?\d+))?\} &= (.*?)(?:\\\\)?$)");
    std::map<Weight, XYPoly> out;
    std::istringstream in{std::string(text)};
    std::string s;
    while (std::getline(in, s)) {
        std::smatch mt;
        if (!std::regex_match(s, mt, line)) continue;
        const std::int64_t m = std::stoll(mt[1].str());
        const Weight key = rank == 1 ? Weight{m} : Weight{m, std::stoll(mt[2].str())};
        out.emplace(key, parse_poly(mt[3].str(), rank));
    }
    return out;
}

}  // namespace weylcheb
