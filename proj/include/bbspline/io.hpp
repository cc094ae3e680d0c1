#pragma once

// JSON ingestion of knot vectors, curves and surfaces; CSV export of tables,
// curve points and surface grids.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bbspline/bbf.hpp"
#include "bbspline/geometry.hpp"
#include "bbspline/knots.hpp"

namespace bbspline {

/// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class V>
V get_as(const nlohmann::json& j, const char* what) {
  try {
    return j.get<V>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("bad value for ") + what);
  }
}

template <class T>
void append_point(const nlohmann::json& p, int d, std::vector<T>& out) {
  const auto coords = get_as<std::vector<double>>(p, "point");
  if (static_cast<int>(coords.size()) != d) throw FormatError("point has wrong dimension");
  for (double x : coords) out.push_back(static_cast<T>(x));
}

}  // namespace detail

/// Shortest decimal string that reads back to the same value.
template <class F>
std::string format_real(F x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// 17 significant digits.
inline std::string format_real17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

template <class T = double>
KnotVector<T> knots_from_json(const nlohmann::json& j) {
  const int m = detail::get_as<int>(detail::field(j, "degree"), "degree");
  const int n = detail::get_as<int>(detail::field(j, "n"), "n");
  const auto raw_knots = detail::get_as<std::vector<double>>(detail::field(j, "knots"), "knots");
  std::vector<T> knots(raw_knots.begin(), raw_knots.end());
  try {
    KnotVector<T> kv(m, n, std::move(knots));
    require_valid(kv);
    return kv;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

template <class T>
nlohmann::json to_json(const KnotVector<T>& kv) {
  std::vector<double> knots;
  for (const auto& t : kv.knots()) knots.push_back(static_cast<double>(t));
  return {{"degree", kv.degree()}, {"n", kv.n()}, {"knots", knots}};
}

template <class T = double>
BSplineCurve<T> curve_from_json(const nlohmann::json& j) {
  auto kv = knots_from_json<T>(j);
  const int d = detail::get_as<int>(detail::field(j, "d"), "d");
  const auto& ctrl = detail::field(j, "control");
  if (!ctrl.is_array()) throw FormatError("control must be an array of points");
  if (static_cast<int>(ctrl.size()) != kv.basis_count()) throw FormatError("control must hold n+m points");
  if (d < 1) throw FormatError("d must be >= 1");
  std::vector<T> w;
  for (const auto& p : ctrl) detail::append_point(p, d, w);
  try {
    return BSplineCurve<T>(std::move(kv), d, std::move(w));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

template <class T>
nlohmann::json to_json(const BSplineCurve<T>& c) {
  auto j = to_json(c.knots());
  j["d"] = c.dim();
  auto ctrl = nlohmann::json::array();
  for (int i = -c.degree(); i < c.knots().n(); ++i) {
    std::vector<double> p;
    for (const auto& x : c.control(i)) p.push_back(static_cast<double>(x));
    ctrl.push_back(p);
  }
  j["control"] = ctrl;
  return j;
}

template <class T = double>
TensorProductSurface<T> surface_from_json(const nlohmann::json& j) {
  auto ku = knots_from_json<T>(detail::field(j, "u"));
  auto kv = knots_from_json<T>(detail::field(j, "v"));
  const int d = detail::get_as<int>(detail::field(j, "d"), "d");
  if (d < 1) throw FormatError("d must be >= 1");
  const auto& net = detail::field(j, "net");
  if (!net.is_array() || static_cast<int>(net.size()) != ku.basis_count())
    throw FormatError("net must hold n1+m1 rows");
  std::vector<T> w;
  for (const auto& row : net) {
    if (!row.is_array() || static_cast<int>(row.size()) != kv.basis_count())
      throw FormatError("each net row must hold n2+m2 points");
    for (const auto& p : row) detail::append_point(p, d, w);
  }
  try {
    return TensorProductSurface<T>(std::move(ku), std::move(kv), d, std::move(w));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

template <class T>
nlohmann::json to_json(const TensorProductSurface<T>& s) {
  auto net = nlohmann::json::array();
  const int m1 = s.knots_u().degree();
  const int m2 = s.knots_v().degree();
  for (int i = -m1; i < s.knots_u().n(); ++i) {
    auto row = nlohmann::json::array();
    for (int l = -m2; l < s.knots_v().n(); ++l) {
      std::vector<double> p;
      for (const auto& x : s.control(i, l)) p.push_back(static_cast<double>(x));
      row.push_back(p);
    }
    net.push_back(row);
  }
  return {{"u", to_json(s.knots_u())}, {"v", to_json(s.knots_v())}, {"d", s.dim()}, {"net", net}};
}

/// Header `j,i,k,b`, span-major, row-major, column-ascending.
template <class T>
void write_table_csv(std::ostream& out, const BBCoeffTable<T>& table) {
  const int m = table.degree();
  out << "j,i,k,b\n";
  for (int j : table.spans())
    for (int i = j - m; i <= j; ++i)
      for (int k = 0; k <= m; ++k)
        out << j << ',' << i << ',' << k << ',' << format_real17(static_cast<double>(table.row(j, i)[static_cast<std::size_t>(k)]))
            << '\n';
}

/// Reads a table written by write_table_csv for a knot vector with n spans.
/// The degree is inferred from the column range.
inline BBCoeffTable<double> read_table_csv(std::istream& in, int n) {
  std::string line;
  if (!std::getline(in, line) || line != "j,i,k,b") throw FormatError("table CSV: expected header j,i,k,b");
  struct Entry {
    int j, i, k;
    double b;
  };
  std::vector<Entry> entries;
  int m = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Entry e{};
    std::istringstream ss(line);
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ss >> e.j >> c1 >> e.i >> c2 >> e.k >> c3 >> e.b) || c1 != ',' || c2 != ',' || c3 != ',')
      throw FormatError("table CSV: bad line: " + line);
    m = std::max(m, e.k);
    entries.push_back(e);
  }
  std::vector<int> spans;
  for (const auto& e : entries) {
    if (e.j < 0 || e.j >= n) throw FormatError("table CSV: span index out of range");
    if (spans.empty() || spans.back() != e.j) spans.push_back(e.j);
  }
  std::vector<int> sorted = spans;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw FormatError("table CSV: spans must be contiguous");
  BBCoeffTable<double> table(m, n, sorted);
  for (const auto& e : entries) {
    if (e.i < e.j - m || e.i > e.j || e.k < 0) throw FormatError("table CSV: entry outside active block");
    table.row(e.j, e.i)[static_cast<std::size_t>(e.k)] = e.b;
  }
  return table;
}

/// One parameter per line; blank lines and lines starting with '#' skipped.
inline std::vector<double> read_params(std::istream& in) {
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    double x = 0;
    const char* begin = line.data() + first;
    const char* end = line.data() + line.find_last_not_of(" \t\r") + 1;
    const auto res = std::from_chars(begin, end, x);
    if (res.ec != std::errc() || res.ptr != end) throw FormatError("bad parameter: " + line);
    out.push_back(x);
  }
  return out;
}

inline void write_coord_header(std::ostream& out, int d) {
  for (int c = 0; c < d; ++c) out << ",x" << c;
  out << '\n';
}

/// Header `u,x0,...`; points holds params.size() consecutive d-vectors.
template <class T>
void write_points_csv(std::ostream& out, const std::vector<T>& params, int d, const std::vector<T>& points) {
  out << 'u';
  write_coord_header(out, d);
  for (std::size_t p = 0; p < params.size(); ++p) {
    out << format_real(params[p]);
    for (int c = 0; c < d; ++c) out << ',' << format_real(points[p * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)]);
    out << '\n';
  }
}

/// Header `u,w,x0,...`; grid is row-major in u.
template <class T>
void write_grid_csv(std::ostream& out, const std::vector<T>& us, const std::vector<T>& ws, int d,
                    const std::vector<T>& grid) {
  out << "u,w";
  write_coord_header(out, d);
  std::size_t q = 0;
  for (const auto& u : us)
    for (const auto& w : ws) {
      out << format_real(u) << ',' << format_real(w);
      for (int c = 0; c < d; ++c) out << ',' << format_real(grid[q++]);
      out << '\n';
    }
}

}  // namespace bbspline
