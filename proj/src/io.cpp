#include "skylr/io.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>

#include "skylr/error.hpp"

namespace skylr {

std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || end != item.data() + item.size())
            throw Error(ErrorCode::Parse, "cannot read '" + std::string(item) + "' in '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

WeakComposition parse_weak(std::string_view text) { return WeakComposition(parse_ints(text)); }
Composition parse_composition(std::string_view text) { return Composition(parse_ints(text)); }
Partition parse_partition(std::string_view text) { return Partition(parse_ints(text)); }

SkewShape parse_skew(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(parse_weak(text));
    return SkewShape(parse_weak(text.substr(0, slash)), parse_weak(text.substr(slash + 1)));
}

namespace {

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

Json to_json(const Filling& f) {
    Json j;
    j["shape"] = {{"outer", f.shape().outer().vec()}, {"inner", f.shape().inner().vec()}};
    j["basement"] = std::string(to_string(f.basement().kind()));
    if (f.basement().kind() == BasementKind::Custom) j["basement_values"] = f.basement().values();
    j["n"] = f.n();
    j["rows"] = f.data_rows();
    return j;
}

Filling filling_from_json(const Json& j) {
    const Json shape = field<Json>(j, "shape");
    const auto outer = field<std::vector<int>>(shape, "outer");
    const auto inner = shape.contains("inner") ? field<std::vector<int>>(shape, "inner") : std::vector<int>(outer.size(), 0);
    const BasementKind kind = basement_kind_from_string(field<std::string>(j, "basement"));
    const Basement b = kind == BasementKind::Custom ? Basement::custom(field<std::vector<int>>(j, "basement_values"))
                                                    : Basement::of(kind, outer.size());
    const int n = j.contains("n") ? field<int>(j, "n") : static_cast<int>(outer.size());
    return Filling(SkewShape(WeakComposition(outer), WeakComposition(inner)), b, n,
                   field<std::vector<std::vector<int>>>(j, "rows"));
}

Json to_json(const ContreTableau& t) {
    return {{"shape", t.shape().vec()}, {"inner", t.inner().vec()}, {"rows", t.data_rows()}};
}

ContreTableau ct_from_json(const Json& j) {
    const Partition inner = j.contains("inner") ? Partition(field<std::vector<int>>(j, "inner")) : Partition{};
    return ContreTableau(Partition(field<std::vector<int>>(j, "shape")), inner,
                         field<std::vector<std::vector<int>>>(j, "rows"));
}

namespace {

Json coeff_json(const Coeff& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

Coeff coeff_from_json(const Json& j) {
    if (j.is_number_integer()) return Coeff(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Coeff(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::Parse, "bad coefficient " + j.dump());
}

}  // namespace

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.sorted_terms()) terms.push_back({{"e", e}, {"c", coeff_json(c)}});
    return {{"n", p.n()}, {"terms", terms}};
}

Polynomial poly_from_json(const Json& j) {
    Polynomial p(field<std::size_t>(j, "n"));
    for (const Json& t : field<Json>(j, "terms")) p.add_term(field<std::vector<int>>(t, "e"), coeff_from_json(t.at("c")));
    return p;
}

Json to_json(const ExpansionReport& r) {
    auto table = [](const std::map<std::vector<int>, Coeff>& m) {
        Json out = Json::array();
        for (const auto& [k, c] : m) out.push_back({{"shape", k}, {"c", coeff_json(c)}});
        return out;
    };
    Json j{{"rule", std::string(to_string(r.rule))},
           {"shape", r.shape},
           {"lambda", r.lambda},
           {"n", r.n},
           {"pass", r.pass()},
           {"identity_holds", r.identity_holds},
           {"coefficients_agree", r.coefficients_agree},
           {"counted", table(r.counted)},
           {"solved", table(r.solved)}};
    if (r.first_discrepancy) j["first_discrepancy"] = *r.first_discrepancy;
    return j;
}

namespace {

std::string draw(const SkewShape& shape, const Basement& basement, const std::function<std::string(int, int)>& entry) {
    const bool large = basement.kind() == BasementKind::Large;
    const auto base = [&](int row) { return large ? std::string("*") : std::to_string(basement(row)); };
    const int rows = static_cast<int>(shape.rows());
    std::size_t base_w = 0, cell_w = 1;
    std::vector<std::vector<std::string>> cells(shape.rows());
    for (int i = 1; i <= rows; ++i) {
        base_w = std::max(base_w, base(i).size());
        const int inner = shape.inner()[static_cast<std::size_t>(i - 1)];
        for (int k = 1; k <= shape.outer()[static_cast<std::size_t>(i - 1)]; ++k) {
            std::string tok = k <= inner ? "[" + base(i) + "]" : entry(i, k);
            cell_w = std::max(cell_w, tok.size());
            cells[static_cast<std::size_t>(i - 1)].push_back(std::move(tok));
        }
    }
    std::string out;
    for (int i = 1; i <= rows; ++i) {
        const std::string b = base(i);
        out += std::string(base_w - b.size(), ' ') + b + " |";
        for (const std::string& tok : cells[static_cast<std::size_t>(i - 1)])
            out += " " + std::string(cell_w - tok.size(), ' ') + tok;
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render(const Filling& f) {
    return draw(f.shape(), f.basement(), [&](int i, int k) { return std::to_string(f.value(i, k)); });
}

std::string render(const SkewShape& shape, const Basement& basement) {
    if (basement.rows() != shape.rows())
        throw Error(ErrorCode::ShapeMismatch, "basement and shape disagree on the number of rows");
    return draw(shape, basement, [](int, int) { return std::string("."); });
}

std::string render(const ContreTableau& t) {
    std::size_t w = 1;
    for (const auto& row : t.data_rows())
        for (int v : row) w = std::max(w, std::to_string(v).size());
    std::string out;
    for (int r = 1; r <= static_cast<int>(t.rows()); ++r) {
        std::string line;
        for (int c = 1; c <= t.row_length(r); ++c) {
            if (c > 1) line += ' ';
            const std::string tok = t.is_skew_cell(r, c) ? std::to_string(t.value(r, c)) : std::string();
            line += std::string(w - tok.size(), ' ') + tok;
        }
        out += line + '\n';
    }
    return out;
}

}  // namespace skylr
