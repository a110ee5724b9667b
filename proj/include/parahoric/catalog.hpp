#pragma once

// Built-in group specifications: split classical examples, the folded
// quasi-split shapes, triality, and the GLmD(n,d,[m1,...]) inner-form
// family parsed from the entry name.

#include <optional>
#include <string>
#include <vector>

#include "parahoric/satake.hpp"

namespace parahoric::catalog {

struct CatalogEntry {
    std::string name;
    std::string description;
    satake::GroupSpec spec;
};

// Names of the fixed entries, listing order stable.
std::vector<std::string> catalog_names();

// Fixed entry or GLmD family instance; throws unknown_name_error otherwise.
// Every entry is structurally validated while it is built.
CatalogEntry catalog_lookup(const std::string& name);

struct GlmdShape {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<std::size_t> partition;
};

// Parses "GLmD(n,d,[m1,m2,...])"; nullopt when the name has a different
// shape, unknown_name_error when it has this shape but invalid numbers.
std::optional<GlmdShape> parse_glmd(const std::string& name);

}  // namespace parahoric::catalog
