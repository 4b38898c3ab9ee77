#ifndef DOFREGION_CLI_REPORT_HPP
#define DOFREGION_CLI_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dofregion/polytope.hpp"

namespace dofregion::cli {

using Json = nlohmann::ordered_json;

/// "d1 + d2 <= 3/2"
std::string format_inequality(const LinearInequality& inequality);

/// Entries as "p/q" strings.
Json rational_array(const VectorXr& values);
Json inequality_json(const LinearInequality& inequality);

/// { "facets": [...], "vertices": [...] }
Json region_json(const HPolytope& facets, const VPolytope& vertices);

/**
 * Plot data: vertices, each facet with its incident vertex indices, and the
 * edges of the vertex graph. Indices refer to the vertex list.
 */
Json plot_json(const HPolytope& facets, const VPolytope& vertices);

void write_facets(std::ostream& out, const HPolytope& facets);
void write_vertices(std::ostream& out, const VPolytope& vertices);

/// 1-based labels separated by spaces.
std::string format_labels(const std::vector<int>& zero_based);

}  // namespace dofregion::cli

#endif  // DOFREGION_CLI_REPORT_HPP
