#include "ejq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ejq::io {

using nlohmann::json;

std::string format_real(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  if (x == 0.0) return "0.000000000000";
  const double ax = std::abs(x);
  char buf[64];
  if (ax >= 1e12 || ax < 1e-4) {
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    return buf;
  }
  int digits_before = 0;
  double t = ax;
  while (t >= 1.0) {
    t /= 10.0;
    ++digits_before;
  }
  const int decimals = std::max(0, 12 - digits_before);
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

std::string format_value(const DivergenceValue& v) {
  return v.infinite ? "inf" : format_real(v.value);
}

namespace {

json require_field(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw std::invalid_argument("missing field " + path + "." + key);
  return j.at(key);
}

AlgebraDescriptor algebra_from_json(const json& j) {
  const std::string kind = require_field(j, "kind", "algebra").get<std::string>();
  if (kind == "spin") {
    const int d = require_field(j, "d", "algebra").get<int>();
    return AlgebraDescriptor::spin(d);
  }
  if (kind == "herm") {
    const std::string base = require_field(j, "base", "algebra").get<std::string>();
    const int n = require_field(j, "n", "algebra").get<int>();
    return AlgebraDescriptor::herm(ring_from_name(base), n);
  }
  if (kind == "albert") return AlgebraDescriptor::albert();
  throw std::invalid_argument("unknown algebra kind: " + kind);
}

json algebra_to_json(const AlgebraDescriptor& alg) {
  json j;
  switch (alg.kind) {
    case AlgebraKind::Spin:
      j["kind"] = "spin";
      j["d"] = alg.spin_d;
      break;
    case AlgebraKind::Herm:
      j["kind"] = "herm";
      j["base"] = ring_name(alg.herm_ring);
      j["n"] = alg.herm_n;
      break;
    case AlgebraKind::Albert:
      j["kind"] = "albert";
      break;
  }
  return j;
}

Element element_from_data(const AlgebraDescriptor& alg, const json& data) {
  if (alg.kind == AlgebraKind::Spin) {
    const double s = require_field(data, "s", "data").get<double>();
    const json vj = require_field(data, "v", "data");
    if (!vj.is_array() || static_cast<int>(vj.size()) != alg.spin_d)
      throw std::invalid_argument("data.v must be an array of length d");
    std::vector<double> v;
    for (const auto& x : vj) v.push_back(x.get<double>());
    return Element::spin(alg.spin_d, s, std::move(v));
  }
  const int n = alg.matrix_n();
  const Ring ring = alg.matrix_ring();
  if (!data.is_array() || static_cast<int>(data.size()) != n)
    throw std::invalid_argument("data must be an n x n array of coefficient arrays");
  std::vector<Coefficient> entries(n * n, Coefficient::zero(ring));
  for (int i = 0; i < n; ++i) {
    const json& row = data.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("data row " + std::to_string(i) + " must have length n");
    for (int j = 0; j < n; ++j) {
      const json& cj = row.at(j);
      if (!cj.is_array() || static_cast<int>(cj.size()) != ring_dim(ring))
        throw std::invalid_argument("data[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "] must be a length-" + std::to_string(ring_dim(ring)) +
                                    " array");
      Coefficient c = Coefficient::zero(ring);
      for (int k = 0; k < ring_dim(ring); ++k) c.c[k] = cj.at(k).get<double>();
      entries[i * n + j] = c;
    }
  }
  return Element::matrix(alg, std::move(entries));
}

json element_data_to_json(const Element& e) {
  if (e.algebra().kind == AlgebraKind::Spin) {
    json data;
    data["s"] = e.spin_s();
    data["v"] = e.spin_v();
    return data;
  }
  const int n = e.algebra().matrix_n();
  const int dim = ring_dim(e.algebra().matrix_ring());
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      json c = json::array();
      for (int k = 0; k < dim; ++k) c.push_back(e.at(i, j).c[k]);
      row.push_back(c);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Element element_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("element parse error: ") + e.what());
  }
  const AlgebraDescriptor alg = algebra_from_json(require_field(j, "algebra", "$"));
  return element_from_data(alg, require_field(j, "data", "$"));
}

std::string element_to_json_text(const Element& e) {
  json j;
  j["algebra"] = algebra_to_json(e.algebra());
  j["data"] = element_data_to_json(e);
  return j.dump(2);
}

StateList states_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state list parse error: ") + e.what());
  }
  StateList out;
  out.algebra = algebra_from_json(require_field(j, "algebra", "$"));
  const json states = require_field(j, "states", "$");
  if (!states.is_array() || states.empty())
    throw std::invalid_argument("states must be a nonempty array");
  for (const auto& data : states)
    out.states.push_back(make_state(element_from_data(out.algebra, data)));
  return out;
}

poly::PolygonSpace polygon_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("polygon parse error: ") + e.what());
  }
  const json verts = require_field(j, "vertices", "$");
  if (!verts.is_array() || verts.size() < 3)
    throw std::invalid_argument("vertices must be an array of at least 3 points");
  std::vector<poly::Point> points;
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != 2)
      throw std::invalid_argument("each vertex must be a [\"p/q\",\"r/s\"] pair");
    points.push_back(
        {poly::parse_rational(v.at(0).get<std::string>()), poly::parse_rational(v.at(1).get<std::string>())});
  }
  return poly::make_polygon(std::move(points));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ReportFormat format_from_name(const std::string& name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string Report::render(ReportFormat format) const {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Table: {
      if (!title.empty()) out << title << "\n";
      for (const auto& [k, v] : metadata) out << k << ": " << v << "\n";
      if (!columns.empty()) {
        std::vector<size_t> width(columns.size());
        for (size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
        for (const auto& row : rows)
          for (size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
        auto emit_row = [&](const std::vector<std::string>& row) {
          for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size())
              for (size_t k = row[c].size(); k < width[c]; ++k) out << ' ';
          }
          out << "\n";
        };
        emit_row(columns);
        for (const auto& row : rows) emit_row(row);
      }
      break;
    }
    case ReportFormat::Csv: {
      // RFC 4180: CRLF separators.
      for (const auto& [k, v] : metadata) out << csv_escape(k) << "," << csv_escape(v) << "\r\n";
      if (!columns.empty()) {
        for (size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_escape(columns[c]);
        out << "\r\n";
        for (const auto& row : rows) {
          for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(row[c]);
          out << "\r\n";
        }
      }
      break;
    }
    case ReportFormat::Json: {
      json j;
      if (!title.empty()) j["title"] = title;
      for (const auto& [k, v] : metadata) j["meta"][k] = v;
      j["columns"] = columns;
      json jr = json::array();
      for (const auto& row : rows) jr.push_back(row);
      j["rows"] = jr;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace ejq::io
