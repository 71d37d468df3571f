#pragma once

#include "splitting/method.hpp"

#include <span>
#include <string>
#include <string_view>

namespace splitting {

enum class MethodFamily { Integer, Irrational, Composed, Commutator };

struct CatalogEntry {
    std::string_view id;
    std::string_view notation; // may reference other entries; see catalog_notation
    Target target;
    int claimed_order;
    MethodFamily family;
    std::string_view note;
};

/// Every bundled method. Irrational constants are 27-digit decimal strings.
std::span<const CatalogEntry> catalog();

/// Throws std::out_of_range for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);
bool has_catalog_entry(std::string_view id);

/// Entry notation with catalog shorthands expanded; still may use brackets.
std::string catalog_notation(std::string_view id);

Method catalog_method(std::string_view id);

} // namespace splitting
