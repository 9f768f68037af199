#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tanmax/interior.hpp"
#include "tanmax/kernels.hpp"
#include "tanmax/maximal.hpp"
#include "tanmax/space.hpp"

namespace tanmax {

/// Full-precision decimal form that round-trips a double exactly.
std::string format_double(double v);

/// CSV export of a point cloud: index, coordinates, weight.
void write_points_csv(const HomogeneousSpace& space, const std::string& path);

/// CSV export of a boundary field: point index, value.
void write_field_csv(const BoundaryFunction& f, const std::string& path);

/// CSV export of an interior field: point index, scale, value.
void write_interior_csv(const InteriorFunction& u, const std::string& path);

nlohmann::json cover_result_json(const CoverResult& cover);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace tanmax
