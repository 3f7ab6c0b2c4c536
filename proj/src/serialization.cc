// Copyright 2026 The clusterqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterqec/serialization.h"

#include "clusterqec/errors.h"

namespace clusterqec {
namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json pauli_list(const std::vector<PauliString>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) {
        arr.push_back(p.to_string());
    }
    return arr;
}

}  // namespace

Json to_json(const Lattice& lattice) {
    Json j;
    j["dimension"] = lattice.dimension();
    j["lengths"] = lattice.lengths();
    Json b = Json::array();
    for (auto x : lattice.boundaries()) {
        b.push_back(boundary_name(x));
    }
    j["boundaries"] = b;
    j["num_vertices"] = lattice.num_vertices();
    return j;
}

Json to_json(const Graph& graph) {
    Json j;
    j["num_vertices"] = graph.num_vertices();
    Json edges = Json::array();
    for (auto [u, v] : graph.edges()) {
        edges.push_back({u, v});
    }
    j["edges"] = edges;
    return j;
}

Json to_json(const StabilizerGroup& group) {
    Json j;
    j["num_qubits"] = group.num_qubits();
    j["num_generators"] = group.num_generators();
    j["num_logical_qubits"] = group.num_logical_qubits();
    j["generators"] = pauli_list(group.generators());
    return j;
}

Json to_json(const QubitSubset& subset) { return Json(subset.qubits()); }

Json to_json(const DenseMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const WeightReport& report, bool include_timing) {
    Json j;
    j["min_support"] = report.min_support;
    j["witness"] = report.witness.to_string();
    j["witness_support"] = report.witness.support();
    j["coefficients"] = report.coefficients.to_string();
    j["method"] = method_name(report.method);
    j["elements_scanned"] = report.elements_scanned;
    j["exhaustive"] = report.exhaustive;
    j["heuristic"] = report.heuristic;
    if (include_timing) {
        j["wall_time_seconds"] = report.wall_seconds;
    }
    return j;
}

Json to_json(const SubsetSweepResult& result) {
    Json j;
    j["passed"] = result.passed;
    j["first_failure"] = result.first_failure ? to_json(*result.first_failure) : Json(nullptr);
    j["subsets_checked"] = result.subsets_checked;
    return j;
}

Json to_json(const SyndromeTable& table) {
    Json j;
    j["generator_order"] = pauli_list(table.generator_order);
    j["max_error_support"] = table.max_support;
    j["assume_qubit"] = table.assume_qubit ? Json(*table.assume_qubit) : Json(nullptr);
    j["num_errors"] = table.num_errors;
    j["num_syndromes"] = table.entries.size();
    j["pure"] = table.pure;
    Json collisions = Json::array();
    for (const auto& s : table.collisions()) {
        collisions.push_back(s.to_string());
    }
    j["collisions"] = collisions;
    Json entries = Json::object();
    for (const auto& [syn, errs] : table.entries) {
        entries[syn.to_string()] = pauli_list(errs);
    }
    j["entries"] = entries;
    return j;
}

std::string one_based_label(const PauliString& error) {
    auto s = error.support();
    if (s.size() != 1) {
        return "";
    }
    return std::string(1, pauli_char(error.at(s[0]))) + std::to_string(s[0] + 1);
}

Json to_json(const Identification& id) {
    Json j;
    j["status"] = identify_status_name(id.status);
    Json cands = Json::array();
    for (const auto& e : id.candidates) {
        Json c;
        c["error"] = e.to_string();
        c["support"] = e.support();
        std::string label = one_based_label(e);
        c["label"] = label.empty() ? Json(nullptr) : Json(label);
        cands.push_back(c);
    }
    j["candidates"] = cands;
    return j;
}

Json to_json(const PatternRates& rates) {
    Json j;
    j["p_X"] = rates.p_x;
    j["p_Y"] = rates.p_y;
    j["p_Z"] = rates.p_z;
    j["p_other"] = rates.p_other;
    return j;
}

Json to_json(const LineFit& fit) {
    Json j;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["slope_stderr"] = fit.slope_stderr;
    j["intercept_stderr"] = fit.intercept_stderr;
    return j;
}

Json to_json(const RateFit& fit) {
    Json j;
    j["X"] = to_json(fit.x);
    j["Y"] = to_json(fit.y);
    j["Z"] = to_json(fit.z);
    j["XY"] = to_json(fit.xy);
    j["T1_est_us"] = optional_number(fit.t1_est_us);
    j["T2_est_us"] = optional_number(fit.t2_est_us);
    j["num_points"] = fit.num_points;
    j["weighted"] = fit.weighted;
    return j;
}

Json to_json(const LogicalUniformity& verdict, bool include_timing) {
    Json j;
    j["uniform"] = verdict.uniform;
    j["stabilizer"] = to_json(verdict.stabilizer_report, include_timing);
    j["coset"] = to_json(verdict.coset_report, include_timing);
    return j;
}

Json to_json(const MinimalASearch& search, bool include_timing) {
    Json j;
    j["found"] = search.witness.has_value();
    j["minimal_size"] = search.witness ? Json(search.witness->size()) : Json(nullptr);
    j["witness"] = search.witness ? to_json(*search.witness) : Json(nullptr);
    j["candidates_checked"] = search.candidates_checked;
    j["stabilizer"] = to_json(search.stabilizer_report, include_timing);
    j["coset"] = search.coset_report ? to_json(*search.coset_report, include_timing) : Json(nullptr);
    return j;
}

std::vector<PauliString> generators_from_json(const Json& j) {
    const Json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("generators")) {
            throw InvalidInput("JSON object has no \"generators\" member");
        }
        arr = &j.at("generators");
    }
    if (!arr->is_array()) {
        throw InvalidInput("generators must be a JSON array of Pauli strings");
    }
    std::vector<PauliString> out;
    for (const auto& e : *arr) {
        if (!e.is_string()) {
            throw InvalidInput("generator entries must be strings");
        }
        out.push_back(PauliString::parse(e.get<std::string>()));
    }
    return out;
}

}  // namespace clusterqec
