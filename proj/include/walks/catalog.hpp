#pragma once

#include <string>
#include <vector>

#include "walks/stepset.hpp"

namespace walks {

struct CatalogEntry {
    int model_id = 0;
    StepSet steps;
    std::string expected_nature;  // "DF", "alg", "D-alg", "D-trans", "?" etc.
    std::string source_note;
};

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File format: one model per line, `id, step-list, expected-nature, source`.
// Step lists use ';' as the in-field separator. Lines starting with '#' are
// comments.
std::vector<CatalogEntry> load_catalog(const std::string& path);
void save_catalog(const std::string& path, const std::vector<CatalogEntry>& entries);

// Builds the catalog of all 74 nonsingular unweighted small-step sets up to
// x<->y reflection. The first 14 ids follow the established numbering of
// previously studied three-quadrant models; the rest are ordered
// canonically.
std::vector<CatalogEntry> builtin_catalog();

}  // namespace walks
