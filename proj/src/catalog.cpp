#include "splitting/catalog.hpp"

#include "splitting/notation.hpp"

#include <array>
#include <stdexcept>

namespace splitting {

namespace {

using F = MethodFamily;

// Symmetric fourth-order methods are h followed by transpose(h) for a
// three-unit head h with alpha_1 = +1.
constexpr std::array<CatalogEntry, 20> entries{{
    {"Z1_1", "(1)", Target::Sum, 1, F::Integer, "single pass"},
    {"Z2_1", "(1)(1)^T", Target::Sum, 2, F::Integer, "symmetric second order"},
    {"Z3_1", "(1)^T(1)(1)(1)(1)^T(-2)^T(1)(1)(1)", Target::Sum, 3, F::Integer, ""},
    {"Z3_2", "(1)^T(4)(2)(-5)^T(2)^T(3)(2)(2)^T(1)", Target::Sum, 3, F::Integer, ""},
    {"Z3_3", "(1)^T(2)(2)(-3)^T(1)^T(2)(1)^T", Target::Sum, 3, F::Integer, ""},
    {"Z3_4", "(3)(-4)^T(1)(3)(2)^T(1)", Target::Sum, 3, F::Integer, ""},
    {"Z3_5", "(5)^T(7)(12)(-13)^T(1)", Target::Sum, 3, F::Integer, "5^3 + 7^3 + 12^3 + 1^3 = 13^3"},
    {"Z4_1", "(1)^T(1)(1)^T(-2)(1)^T(1)^T(1)^T(1)^T(1)(1)^T(1)(1)(1)(1)(-2)^T(1)(1)^T(1)", Target::Sum, 4, F::Integer,
     ""},
    {"Z4_2", "(1)^T(2)(1)^T(-3)^T(2)(2)(1)(2)^T(2)^T(-3)(2)^T(1)(1)(1)^T", Target::Sum, 4, F::Integer, ""},
    {"Z4_3", "(1)^T(2)(3)^T(1)^T(-4)(3)^T(3)(-4)^T(1)(3)(2)^T(1)", Target::Sum, 4, F::Integer,
     "published fifth-order residual row appears with A1 and A2 exchanged"},
    {"Z4_4", "(6)^T(-7)(1)^T(1)(5)^T(5)(1)^T(1)(-7)^T(6)", Target::Sum, 4, F::Integer, ""},
    {"R3_1",
     "(0.451525513208585723409578820)(0.630880954030002500791663663)^T"
     "(1.136710925213995714728206549)^T(-1.219117392452583938929449032)",
     Target::Sum, 3, F::Irrational, "shortest third-order method"},
    {"R4_1",
     "(0.675603595979828817023843904)(0.675603595979828817023843904)^T(-0.851207191959657634047687809)"
     "(-0.851207191959657634047687809)^T(0.675603595979828817023843904)(0.675603595979828817023843904)^T",
     Target::Sum, 4, F::Irrational, "alpha = (+, -, +); also known for two operators"},
    {"R4_2",
     "(-1.075035037431900314780251056)(1.024607977441460486144230714)^T(0.550427059990439828636020342)^T"
     "(0.550427059990439828636020342)(1.024607977441460486144230714)(-1.075035037431900314780251056)^T",
     Target::Sum, 4, F::Irrational, "alpha = (+, -, -)"},
    {"R4_3",
     "(0.938925888779098070854126976)(-1.002122279211397565598116356)(0.563196390432299494743989380)^T"
     "(0.563196390432299494743989380)(-1.002122279211397565598116356)^T(0.938925888779098070854126976)^T",
     Target::Sum, 4, F::Irrational, "alpha = (+, +, -)"},
    {"R4_4",
     "(1.087752928204421689142747144)(-1.131212302433601022822197398)(0.543459374229179333679450254)"
     "(0.543459374229179333679450254)^T(-1.131212302433601022822197398)^T(1.087752928204421689142747144)^T",
     Target::Sum, 4, F::Irrational, "alpha = (+, +, +)"},
    {"C4_18", "[(1)(1)^T]^4[(-2)(-2)^T][(1)(1)^T]^4", Target::Sum, 4, F::Composed,
     "second-order unit raised with eight b = 1 and one b = -2"},
    {"C6_594",
     "<C4>^16[(-2)(-2)^T]^4[(4)(4)^T][(-2)(-2)^T]^4<C4>^16", Target::Sum, 6, F::Composed,
     "fourth-order unit raised with 32 b = 1 and one b = -2"},
    {"COMM4", "(-2)^T(2)^T[(-1)(1)]^{12}[(1)(-1)]^4", Target::Commutator, 4, F::Commutator, "approximates exp([A1, A2])"},
    {"COMM5", "<COMM4><COMM4:-1>", Target::Commutator, 5, F::Commutator,
     "COMM4 followed by COMM4 with every coefficient negated"},
}};

// Expand the two catalog-internal macros used above.
std::string expand(std::string_view notation) {
    std::string out;
    for (std::size_t i = 0; i < notation.size();) {
        if (notation[i] != '<') {
            out += notation[i++];
            continue;
        }
        std::size_t close = notation.find('>', i);
        std::string_view key = notation.substr(i + 1, close - i - 1);
        i = close + 1;
        if (key == "C4") {
            out += '[';
            out += catalog_entry("C4_18").notation;
            out += ']';
        } else if (key == "COMM4") {
            out += catalog_entry("COMM4").notation;
        } else if (key == "COMM4:-1") {
            out += format_method(scale(parse_method(catalog_entry("COMM4").notation), Coefficient(-1)));
        } else {
            throw std::logic_error("unknown catalog macro");
        }
    }
    return out;
}

} // namespace

std::span<const CatalogEntry> catalog() { return entries; }

bool has_catalog_entry(std::string_view id) {
    for (const auto& e : entries)
        if (e.id == id) return true;
    return false;
}

const CatalogEntry& catalog_entry(std::string_view id) {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw std::out_of_range("unknown catalog id '" + std::string(id) + "'");
}

std::string catalog_notation(std::string_view id) { return expand(catalog_entry(id).notation); }

Method catalog_method(std::string_view id) {
    const auto& e = catalog_entry(id);
    return parse_method(expand(e.notation), e.target);
}

} // namespace splitting
