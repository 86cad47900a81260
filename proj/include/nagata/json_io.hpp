#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagata/cover.hpp"
#include "nagata/maps.hpp"
#include "nagata/metric_space.hpp"

namespace nagata {

using json = nlohmann::ordered_json;

// Numbers cross the JSON boundary as plain doubles in float mode and as
// "p/q" strings in exact mode; +infinity is always the string "inf".
template <typename S>
json scalar_to_json(const S& x) {
  if constexpr (std::is_floating_point_v<S>) {
    if (std::isinf(x)) return json("inf");
    return json(x);
  } else {
    return json(format_rational(x));
  }
}

template <typename S>
json ext_to_json(const ExtValue<S>& x) {
  if (x.infinite) return json("inf");
  return scalar_to_json(x.value);
}

template <typename S>
S scalar_from_json(const json& j) {
  if (j.is_number()) {
    if constexpr (std::is_floating_point_v<S>) {
      return j.get<S>();
    } else {
      if (j.is_number_integer()) return S(j.get<long long>());
      return parse_scalar<S>(j.dump());
    }
  }
  if (j.is_string()) return parse_scalar<S>(j.get<std::string>());
  throw std::invalid_argument("expected a number or 'p/q' string");
}

// ---- finite metric spaces ----

template <typename S>
json space_to_json(const FiniteMetricSpace<S>& X) {
  json j;
  j["labels"] = X.labels();
  json rows = json::array();
  for (int i = 0; i < X.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < X.size(); ++k) row.push_back(scalar_to_json(X(i, k)));
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  return j;
}

template <typename S>
FiniteMetricSpace<S> space_from_json(const json& j) {
  if (!j.contains("labels") || !j.contains("dist"))
    throw StructuralError("space json needs 'labels' and 'dist'");
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  const json& rows = j.at("dist");
  if (!rows.is_array()) throw StructuralError("'dist' must be an array of rows");
  DenseMatrix<S> m(rows.size(), rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != rows.size())
      throw StructuralError("distance table is not square");
    for (size_t k = 0; k < row.size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = scalar_from_json<S>(row[k]);
  }
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

// ---- covers and decompositions ----

template <typename S>
json cover_to_json(const Cover<S>& U) {
  json j;
  json elems = json::array();
  for (const auto& e : U.elements) {
    json labels = json::array();
    for (int x : e) labels.push_back(U.space->label(x));
    elems.push_back(std::move(labels));
  }
  j["elements"] = std::move(elems);
  return j;
}

template <typename S>
json decomposition_to_json(const FamilyDecomposition<S>& D) {
  json j = cover_to_json(D.cover);
  json families = json::array();
  for (int f = 0; f < D.family_count; ++f) {
    json fam = json::array();
    for (size_t e = 0; e < D.family_of.size(); ++e)
      if (D.family_of[e] == f) fam.push_back(e);
    families.push_back(std::move(fam));
  }
  j["families"] = std::move(families);
  j["r"] = scalar_to_json(D.r);
  return j;
}

struct ParsedCover {
  std::vector<std::vector<int>> elements;
  std::vector<std::vector<int>> families;  // empty when absent
  bool has_r = false;
  std::string r_text;
};

inline ParsedCover parse_cover_shape(const json& j, const std::vector<std::string>& labels) {
  ParsedCover out;
  if (!j.contains("elements")) throw std::invalid_argument("cover json needs 'elements'");
  auto index_of = [&](const std::string& l) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    throw std::out_of_range("cover mentions unknown label: " + l);
  };
  for (const json& e : j.at("elements")) {
    std::vector<int> pts;
    for (const json& p : e) pts.push_back(index_of(p.get<std::string>()));
    out.elements.push_back(std::move(pts));
  }
  if (j.contains("families")) {
    for (const json& fam : j.at("families"))
      out.families.push_back(fam.get<std::vector<int>>());
  }
  if (j.contains("r")) {
    out.has_r = true;
    out.r_text = j.at("r").is_string() ? j.at("r").get<std::string>() : j.at("r").dump();
  }
  return out;
}

template <typename S>
Cover<S> cover_from_json(const json& j, const FiniteMetricSpace<S>& X) {
  auto parsed = parse_cover_shape(j, X.labels());
  return make_cover(X, std::move(parsed.elements));
}

template <typename S>
FamilyDecomposition<S> decomposition_from_json(const json& j, const FiniteMetricSpace<S>& X) {
  auto parsed = parse_cover_shape(j, X.labels());
  if (parsed.families.empty() || !parsed.has_r)
    throw std::invalid_argument("decomposition json needs 'families' and 'r'");
  Cover<S> cover = make_cover(X, std::move(parsed.elements));
  std::vector<int> family_of(cover.elements.size(), -1);
  for (size_t f = 0; f < parsed.families.size(); ++f)
    for (int e : parsed.families[f]) {
      if (e < 0 || e >= cover.element_count())
        throw std::out_of_range("family references element out of range");
      family_of[static_cast<size_t>(e)] = static_cast<int>(f);
    }
  for (int fam : family_of)
    if (fam < 0) throw std::invalid_argument("element missing from every family");
  return FamilyDecomposition<S>{std::move(cover), std::move(family_of),
                                static_cast<int>(parsed.families.size()),
                                parse_scalar<S>(parsed.r_text)};
}

// ---- partial maps ----

enum class TargetKind { Real, Vector, Simplex, SimplexBoundary, Space };

template <typename S>
struct ParsedMap {
  TargetKind kind = TargetKind::Real;
  std::vector<int> domain;
  std::vector<S> real_values;
  DenseMatrix<S> vector_values;  // also simplex weights
  NormTag tag = NormTag::L1;
  int ambient = 0;
  std::optional<FiniteMetricSpace<S>> target_space;
  std::vector<int> space_values;
  S lambda{};
};

template <typename S>
ParsedMap<S> map_from_json(const json& j, const FiniteMetricSpace<S>& X) {
  ParsedMap<S> out;
  if (!j.contains("domain") || !j.contains("target") || !j.contains("values"))
    throw std::invalid_argument("map json needs 'domain', 'target', 'values'");
  for (const json& l : j.at("domain")) out.domain.push_back(X.index_of(l.get<std::string>()));
  out.lambda = j.contains("lambda") ? scalar_from_json<S>(j.at("lambda")) : S(0);

  const json& t = j.at("target");
  std::string kind = t.at("kind").get<std::string>();
  const json& values = j.at("values");
  auto value_of = [&](int domain_pos) -> const json& {
    return values.at(X.label(out.domain[static_cast<size_t>(domain_pos)]));
  };
  if (kind == "real") {
    out.kind = TargetKind::Real;
    for (size_t a = 0; a < out.domain.size(); ++a)
      out.real_values.push_back(scalar_from_json<S>(value_of(static_cast<int>(a))));
  } else if (kind == "vector" || kind == "simplex" || kind == "simplex_boundary") {
    out.kind = kind == "vector" ? TargetKind::Vector
               : kind == "simplex" ? TargetKind::Simplex
                                   : TargetKind::SimplexBoundary;
    out.ambient = kind == "vector" ? t.at("n").get<int>() : t.at("vertices").get<int>();
    if (t.contains("norm"))
      out.tag = t.at("norm").get<std::string>() == "l2" ? NormTag::L2 : NormTag::L1;
    out.vector_values = DenseMatrix<S>(out.domain.size(), out.ambient);
    for (size_t a = 0; a < out.domain.size(); ++a) {
      const json& row = value_of(static_cast<int>(a));
      if (static_cast<int>(row.size()) != out.ambient)
        throw std::invalid_argument("map value has wrong dimension");
      for (int c = 0; c < out.ambient; ++c)
        out.vector_values(static_cast<Eigen::Index>(a), c) = scalar_from_json<S>(row[static_cast<size_t>(c)]);
    }
  } else if (kind == "space") {
    out.kind = TargetKind::Space;
    out.target_space = space_from_json<S>(t.at("space"));
    for (size_t a = 0; a < out.domain.size(); ++a)
      out.space_values.push_back(out.target_space->index_of(
          value_of(static_cast<int>(a)).template get<std::string>()));
  } else {
    throw std::invalid_argument("unknown map target kind: " + kind);
  }
  return out;
}

// ---- point-cloud CSV: one point per row, columns are coordinates ----

template <typename S>
DenseMatrix<S> points_from_csv(const std::string& text) {
  std::vector<std::vector<S>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<S> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      auto b = cell.find_first_not_of(" \t\r");
      auto e = cell.find_last_not_of(" \t\r");
      if (b == std::string::npos) continue;
      row.push_back(parse_scalar<S>(cell.substr(b, e - b + 1)));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw StructuralError("empty point cloud");
  DenseMatrix<S> m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw StructuralError("point cloud rows have unequal lengths");
    for (size_t c = 0; c < rows[i].size(); ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
  }
  return m;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

inline std::string load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace nagata
