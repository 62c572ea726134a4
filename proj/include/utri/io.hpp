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

#ifndef UTRI_IO_HPP
#define UTRI_IO_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "utri/analysis.hpp"
#include "utri/solver.hpp"
#include "utri/triangular.hpp"

namespace utri {

using Json = nlohmann::ordered_json;

/// {"n", "ring": "field", "entries": [{"j", "k", "value"}]}; zero entries omitted.
Json to_json(const FieldMatrix& u);
/// Same layout with "ring": "poly" and values in the cpoly grammar.
Json to_json(const PolyMatrix& u);
/// Errors: invalid_argument (malformed document), syntax (bad value).
FieldMatrix field_matrix_from_json(const Json& doc, const Field& field);

/// Accepts a single matrix, an array of matrices, or an object with a
/// "matrices" array (as written by to_json(WitnessResult)).
std::vector<FieldMatrix> matrices_from_json(const Json& doc, const Field& field);

Json to_json(const Classification& c);
Json to_json(const OrderReport& report);
Json to_json(const VerifyReport& report);
Json to_json(const WitnessResult& result);
Json to_json(const SweepPlan& plan);

}  // namespace utri

#endif  // UTRI_IO_HPP
