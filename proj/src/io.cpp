/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "utri/io.hpp"

namespace utri {

namespace {

template <class T>
Json matrix_json(const UTMatrix<T>& u, const char* ring) {
  Json entries = Json::array();
  for (std::size_t j = 1; j <= u.size(); ++j) {
    for (std::size_t k = j; k <= u.size(); ++k) {
      const T& v = u.at(j, k);
      if constexpr (std::is_same_v<T, FieldValue>) {
        if (v.is_exact_zero()) continue;
      } else {
        if (v.is_zero()) continue;
      }
      entries.push_back(Json{{"j", j}, {"k", k}, {"value", v.to_string()}});
    }
  }
  return Json{{"n", u.size()}, {"ring", ring}, {"entries", std::move(entries)}};
}

[[noreturn]] void malformed(const std::string& what) { raise(ErrorKind::invalid_argument, "matrix JSON: " + what); }

std::string value_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  malformed("entry value must be a string or an integer");
}

}  // namespace

Json to_json(const FieldMatrix& u) { return matrix_json(u, "field"); }
Json to_json(const PolyMatrix& u) { return matrix_json(u, "poly"); }

FieldMatrix field_matrix_from_json(const Json& doc, const Field& field) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) malformed("missing size \"n\"");
  if (doc.contains("ring") && doc["ring"] != "field") malformed("expected ring \"field\"");
  const std::size_t n = doc["n"].get<std::size_t>();
  if (n == 0) malformed("n must be >= 1");
  FieldMatrix u(field, n);
  if (!doc.contains("entries")) return u;
  if (!doc["entries"].is_array()) malformed("\"entries\" must be an array");
  for (const auto& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("j") || !e.contains("k") || !e.contains("value")) {
      malformed("entries need j, k and value");
    }
    const auto j = e["j"].get<std::size_t>();
    const auto k = e["k"].get<std::size_t>();
    if (j < 1 || j > k || k > n) malformed("entry (" + std::to_string(j) + "," + std::to_string(k) + ") out of range");
    u.at(j, k) = field.parse_value(value_text(e["value"]));
  }
  return u;
}

std::vector<FieldMatrix> matrices_from_json(const Json& doc, const Field& field) {
  std::vector<FieldMatrix> out;
  const Json* list = &doc;
  if (doc.is_object() && doc.contains("matrices")) list = &doc["matrices"];
  if (list->is_array()) {
    for (const auto& m : *list) out.push_back(field_matrix_from_json(m, field));
  } else {
    out.push_back(field_matrix_from_json(*list, field));
  }
  if (out.empty()) malformed("no matrices");
  return out;
}

Json to_json(const Classification& c) {
  Json out;
  if (c.order) {
    out["r"] = *c.order;
  } else {
    out["r"] = "cap";
  }
  out["n"] = c.n;
  out["case"] = to_string(c.image_case);
  out["band"] = c.band;
  out["affine_dim"] = c.affine_dim;
  return out;
}

Json to_json(const OrderReport& report) {
  Json out;
  if (report.order) {
    out["r"] = *report.order;
  } else {
    out["r"] = "cap";
  }
  out["max_n"] = report.max_n;
  if (report.witness) {
    const OrderWitness& w = *report.witness;
    Json wj{{"size", w.size}, {"row", w.row}, {"col", w.col}, {"entry", w.entry.to_string()}};
    if (w.point) {
      Json point = Json::object();
      for (const auto& [key, v] : *w.point) point[key.to_string()] = v.to_string();
      wj["point"] = std::move(point);
    }
    out["witness"] = std::move(wj);
  }
  return out;
}

Json to_json(const VerifyReport& report) {
  Json out{{"passed", report.passed},
           {"evaluators_agree", report.evaluators_agree},
           {"exact", report.exact},
           {"mismatches", report.mismatches},
           {"max_residual", report.max_residual},
           {"structured_residual", report.structured_residual},
           {"band_ok", report.band_ok}};
  if (report.open_set_value) out["open_set_value"] = report.open_set_value->to_string();
  out["product"] = to_json(report.product);
  return out;
}

Json to_json(const WitnessResult& result) {
  Json out;
  out["status"] = result.status == WitnessStatus::exact ? "exact" : "approximate";
  out["order"] = result.order;
  Json mats = Json::array();
  for (const auto& u : result.matrices) mats.push_back(to_json(u));
  out["matrices"] = std::move(mats);
  out["product"] = to_json(result.product);
  if (result.target) out["target"] = to_json(*result.target);
  if (result.open_set) out["open_set"] = result.open_set->to_string();
  Json verify = to_json(result.verification);
  verify.erase("product");
  out["verify"] = std::move(verify);

  const WitnessDiagnostics& d = result.diagnostics;
  Json diag{{"mode", d.mode}, {"retries", d.retries}, {"leading_tuple", d.leading_tuple},
            {"assignments_merged", d.assignments_merged}};
  Json diagonals = Json::array();
  for (const auto& row : d.diagonals) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    diagonals.push_back(std::move(r));
  }
  diag["diagonals"] = std::move(diagonals);
  diag["notes"] = d.notes;
  out["diagnostics"] = std::move(diag);
  return out;
}

Json to_json(const SweepPlan& plan) {
  Json entries = Json::array();
  for (const auto& e : plan.entries) {
    Json chain = Json::array();
    for (const auto& key : e.chain) chain.push_back(key.to_string());
    entries.push_back(Json{{"s", e.s},
                           {"t", e.t},
                           {"band", e.band},
                           {"fresh", e.fresh.to_string()},
                           {"chain", std::move(chain)},
                           {"new", e.new_positions.size()},
                           {"old", e.old_positions.size()}});
  }
  return Json{{"r", plan.r}, {"n", plan.n}, {"leading_tuple", plan.leading_tuple}, {"entries", std::move(entries)}};
}

}  // namespace utri
