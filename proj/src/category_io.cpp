#include <fstream>
#include <set>
#include <sstream>

#include "tubealg/category.hpp"

#include <nlohmann/json.hpp>

namespace tubealg {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorKind::ParseError, "category file: " + msg);
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) parse_fail("unknown field '" + it.key() + "' in " + where);
}

}  // namespace

FusionCategoryData category_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
  if (!j.is_object()) parse_fail("top level is not an object");
  reject_unknown_fields(
      j, {"schema_version", "labels", "unit", "dual", "grading", "fusion", "qdim", "trivial_F", "F"},
      "top level");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    parse_fail("missing schema_version");
  if (j["schema_version"].get<int>() != 1)
    throw Error(ErrorKind::SchemaVersionMismatch,
                "unsupported schema_version " + std::to_string(j["schema_version"].get<int>()));
  for (const char* req : {"labels", "unit", "dual", "fusion"})
    if (!j.contains(req)) parse_fail(std::string("missing field '") + req + "'");

  FusionCategoryData cat;
  if (!j["labels"].is_array() || j["labels"].empty()) parse_fail("labels must be a nonempty array");
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) parse_fail("labels must be strings");
    cat.labels.push_back(l.get<std::string>());
  }
  int n = cat.size();
  auto label_index = [&](const json& v, const std::string& where) {
    if (!v.is_string()) parse_fail(where + ": expected a label string");
    std::string s = v.get<std::string>();
    for (int i = 0; i < n; ++i)
      if (cat.labels[i] == s) return i;
    parse_fail(where + ": unknown label '" + s + "'");
    return -1;
  };

  cat.unit = label_index(j["unit"], "unit");

  if (!j["dual"].is_object()) parse_fail("dual must be an object");
  cat.dual.assign(n, -1);
  for (auto it = j["dual"].begin(); it != j["dual"].end(); ++it) {
    int a = label_index(json(it.key()), "dual key");
    cat.dual[a] = label_index(it.value(), "dual value");
  }
  for (int a = 0; a < n; ++a) {
    if (cat.dual[a] < 0) parse_fail("dual map is missing label '" + cat.labels[a] + "'");
    if (cat.dual[cat.dual[a]] != a)
      parse_fail("dual map is not involutive at label '" + cat.labels[a] + "'");
  }

  cat.fusion.assign(static_cast<size_t>(n) * n * n, 0);
  if (!j["fusion"].is_array()) parse_fail("fusion must be an array of triples");
  for (const auto& t : j["fusion"]) {
    if (!t.is_array() || t.size() != 3) parse_fail("fusion entries must be [a,b,c] triples");
    int a = label_index(t[0], "fusion"), b = label_index(t[1], "fusion"), c = label_index(t[2], "fusion");
    auto& slot = cat.fusion[(a * n + b) * n + c];
    if (slot) parse_fail("duplicate fusion triple (multiplicity-free categories only)");
    slot = 1;
  }

  if (j.contains("grading")) {
    const json& g = j["grading"];
    if (!g.is_object()) parse_fail("grading must be an object");
    reject_unknown_fields(g, {"elements", "mult", "sector"}, "grading");
    for (const char* req : {"elements", "mult", "sector"})
      if (!g.contains(req)) parse_fail(std::string("grading missing field '") + req + "'");
    std::vector<std::string> elems;
    for (const auto& e : g["elements"]) elems.push_back(e.get<std::string>());
    std::vector<std::vector<std::string>> table;
    for (const auto& row : g["mult"]) {
      table.emplace_back();
      for (const auto& e : row) table.back().push_back(e.get<std::string>());
    }
    Grading gr;
    try {
      gr.group = FiniteGroup::from_table(elems, table);
    } catch (const Error& e) {
      parse_fail(e.what());
    }
    gr.sector.assign(n, -1);
    for (auto it = g["sector"].begin(); it != g["sector"].end(); ++it) {
      int a = label_index(json(it.key()), "grading sector key");
      gr.sector[a] = gr.group.element_by_name(it.value().get<std::string>());
    }
    for (int a = 0; a < n; ++a)
      if (gr.sector[a] < 0) parse_fail("grading sector missing label '" + cat.labels[a] + "'");
    cat.grading = gr;
  }

  if (j.contains("qdim")) {
    if (!j["qdim"].is_object()) parse_fail("qdim must be an object");
    cat.qdim.assign(n, -1.0);
    for (auto it = j["qdim"].begin(); it != j["qdim"].end(); ++it) {
      int a = label_index(json(it.key()), "qdim key");
      if (!it.value().is_number()) parse_fail("qdim values must be numbers");
      cat.qdim[a] = it.value().get<double>();
      if (cat.qdim[a] <= 0) parse_fail("qdim must be positive at '" + cat.labels[a] + "'");
    }
    for (int a = 0; a < n; ++a)
      if (cat.qdim[a] < 0) parse_fail("qdim missing label '" + cat.labels[a] + "'");
  } else {
    FusionCategoryData tmp = cat;
    tmp.qdim.assign(n, 1.0);
    cat.qdim = perron_frobenius_dims(tmp);
  }
  cat.total_dim_sq = 0;
  for (double d : cat.qdim) cat.total_dim_sq += d * d;

  bool triv = j.contains("trivial_F") && j["trivial_F"].get<bool>();
  cat.fsym.assign(static_cast<size_t>(n) * n * n * n * n * n, Cplx(0, 0));
  if (triv) {
    if (j.contains("F") && !j["F"].empty()) parse_fail("trivial_F set but F entries present");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f)
                if (cat.admissible_F(a, b, c, d, e, f)) cat.F_ref(a, b, c, d, e, f) = 1.0;
  } else {
    if (!j.contains("F")) parse_fail("missing F entries (or set trivial_F)");
    std::vector<bool> given(cat.fsym.size(), false);
    for (const auto& entry : j["F"]) {
      if (!entry.is_object()) parse_fail("F entries must be objects");
      reject_unknown_fields(entry, {"a", "b", "c", "d", "e", "f", "re", "im"}, "F entry");
      int a = label_index(entry.at("a"), "F.a"), b = label_index(entry.at("b"), "F.b");
      int c = label_index(entry.at("c"), "F.c"), d = label_index(entry.at("d"), "F.d");
      int e = label_index(entry.at("e"), "F.e"), f = label_index(entry.at("f"), "F.f");
      if (!cat.admissible_F(a, b, c, d, e, f))
        parse_fail("F entry off the admissibility support");
      double re = entry.value("re", 0.0), im = entry.value("im", 0.0);
      size_t idx = ((((static_cast<size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f;
      if (given[idx]) parse_fail("duplicate F entry");
      given[idx] = true;
      cat.fsym[idx] = Cplx(re, im);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f)
                if (cat.admissible_F(a, b, c, d, e, f)) {
                  size_t idx = ((((static_cast<size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f;
                  if (!given[idx])
                    parse_fail("missing admissible F entry at " + cat.labels[a] + "," + cat.labels[b] +
                               "," + cat.labels[c] + ";" + cat.labels[d]);
                }
  }
  return cat;
}

std::string category_to_json_text(const FusionCategoryData& cat) {
  json j;
  j["schema_version"] = 1;
  j["labels"] = cat.labels;
  j["unit"] = cat.labels[cat.unit];
  json dual = json::object();
  for (int a = 0; a < cat.size(); ++a) dual[cat.labels[a]] = cat.labels[cat.dual[a]];
  j["dual"] = dual;
  json fusion = json::array();
  int n = cat.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cat.N(a, b, c)) fusion.push_back({cat.labels[a], cat.labels[b], cat.labels[c]});
  j["fusion"] = fusion;
  json qdim = json::object();
  for (int a = 0; a < n; ++a) qdim[cat.labels[a]] = cat.qdim[a];
  j["qdim"] = qdim;
  if (cat.grading) {
    const Grading& gr = *cat.grading;
    json g;
    g["elements"] = gr.group.names;
    json mult = json::array();
    for (int i = 0; i < gr.group.size(); ++i) {
      json row = json::array();
      for (int k = 0; k < gr.group.size(); ++k) row.push_back(gr.group.names[gr.group.op(i, k)]);
      mult.push_back(row);
    }
    g["mult"] = mult;
    json sector = json::object();
    for (int a = 0; a < n; ++a) sector[cat.labels[a]] = gr.group.names[cat.sector(a)];
    g["sector"] = sector;
    j["grading"] = g;
  }
  bool triv = true;
  for (int a = 0; a < n && triv; ++a)
    for (int b = 0; b < n && triv; ++b)
      for (int c = 0; c < n && triv; ++c)
        for (int d = 0; d < n && triv; ++d)
          for (int e = 0; e < n && triv; ++e)
            for (int f = 0; f < n && triv; ++f)
              if (cat.admissible_F(a, b, c, d, e, f) &&
                  std::abs(cat.F(a, b, c, d, e, f) - 1.0) > 1e-15)
                triv = false;
  if (triv) {
    j["trivial_F"] = true;
  } else {
    json F = json::array();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f)
                if (cat.admissible_F(a, b, c, d, e, f)) {
                  Cplx v = cat.F(a, b, c, d, e, f);
                  json entry;
                  entry["a"] = cat.labels[a];
                  entry["b"] = cat.labels[b];
                  entry["c"] = cat.labels[c];
                  entry["d"] = cat.labels[d];
                  entry["e"] = cat.labels[e];
                  entry["f"] = cat.labels[f];
                  entry["re"] = v.real();
                  entry["im"] = v.imag();
                  F.push_back(entry);
                }
    j["F"] = F;
  }
  return j.dump(2) + "\n";
}

FusionCategoryData load_category(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return category_from_json_text(ss.str());
}

void save_category(const FusionCategoryData& cat, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot open '" + path + "' for writing");
  out << category_to_json_text(cat);
}

}  // namespace tubealg
