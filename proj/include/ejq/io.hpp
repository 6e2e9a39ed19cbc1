#pragma once

#include <string>
#include <vector>

#include "ejq/info.hpp"
#include "ejq/polygon.hpp"
#include "ejq/spectral.hpp"

namespace ejq::io {

// 12 significant digits, fixed-point for ordinary magnitudes; the Infinite
// divergence value renders as the literal "inf".
std::string format_real(double x);
std::string format_value(const DivergenceValue& v);

Element element_from_json_text(const std::string& text);
std::string element_to_json_text(const Element& e);

struct StateList {
  AlgebraDescriptor algebra;
  std::vector<StateElement> states;
};
StateList states_from_json_text(const std::string& text);

poly::PolygonSpace polygon_from_json_text(const std::string& text);

std::string read_file(const std::string& path);

enum class ReportFormat { Table, Csv, Json };
ReportFormat format_from_name(const std::string& name);

// One tabular report per run: metadata lines plus a single table.
struct Report {
  std::string title;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(ReportFormat format) const;
};

}  // namespace ejq::io
