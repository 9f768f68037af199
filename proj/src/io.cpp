#include "tanmax/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tanmax {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

void write_points_csv(const HomogeneousSpace& space, const std::string& path) {
  std::string csv = "index";
  for (int q = 0; q < space.ambient_dim; ++q) csv += ",x" + std::to_string(q);
  csv += ",weight\n";
  for (int i = 0; i < space.size(); ++i) {
    csv += std::to_string(i);
    for (int q = 0; q < space.ambient_dim; ++q)
      csv += "," + format_double(space.point(i)[q]);
    csv += "," + format_double(space.weights[i]) + "\n";
  }
  write_text_file(path, csv);
}

void write_field_csv(const BoundaryFunction& f, const std::string& path) {
  std::string csv = "index,value\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    csv += std::to_string(i) + "," + format_double(f[i]) + "\n";
  write_text_file(path, csv);
}

void write_interior_csv(const InteriorFunction& u, const std::string& path) {
  std::string csv = "index,scale,value\n";
  for (int i = 0; i < u.n; ++i)
    for (int k = u.k_lo; k <= u.k_hi; ++k)
      csv += std::to_string(i) + "," + format_double(HomogeneousSpace::scale_of_level(k)) +
             "," + format_double(u.at(i, k)) + "\n";
  write_text_file(path, csv);
}

nlohmann::json cover_result_json(const CoverResult& cover) {
  nlohmann::json j;
  j["dilation"] = cover.dilation;
  j["balls"] = nlohmann::json::array();
  for (const Ball& b : cover.selected)
    j["balls"].push_back({{"center", b.center}, {"radius", b.radius}});
  return j;
}

}  // namespace tanmax
