#pragma once

#include "json.hpp"
#include <string>
#include <string_view>
#include <vector>

#include "skylr/contretab.hpp"
#include "skylr/lrrules.hpp"
#include "skylr/poly.hpp"
#include "skylr/skyline.hpp"

namespace skylr {

using Json = nlohmann::json;

/// "2,0,3" -> {2,0,3}; the empty string is the empty sequence.
std::vector<int> parse_ints(std::string_view text);
WeakComposition parse_weak(std::string_view text);
Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);
/// "delta/gamma", or "delta" for a straight shape.
SkewShape parse_skew(std::string_view text);

Json to_json(const Filling& f);
Filling filling_from_json(const Json& j);
Json to_json(const ContreTableau& t);
ContreTableau ct_from_json(const Json& j);
/// {"n":..,"terms":[{"e":[..],"c":..}]}, terms in increasing lexicographic order.
/// Coefficients beyond 64 bits are written as decimal strings.
Json to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);
Json to_json(const ExpansionReport& r);

/// Basement column, a bar, then the cells; inner cells in brackets and
/// large-basement values shown as '*'.
std::string render(const Filling& f);
/// An unfilled diagram: data cells drawn as '.'.
std::string render(const SkewShape& shape, const Basement& basement);
/// Rows of entries with inner cells left blank.
std::string render(const ContreTableau& t);

}  // namespace skylr
