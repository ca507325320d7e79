#include "roughlim/serialize.hpp"

#include <algorithm>

namespace roughlim {

Json rational_to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const Json& value) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const DomainError& e) {
            throw SchemaError(e.what());
        }
    }
    throw SchemaError("expected a rational as an integer or \"p/q\" string, got " + value.dump());
}

Json space_to_json(const Space& space) {
    Json matrix = Json::array();
    for (const auto& row : space.matrix()) {
        Json jrow = Json::array();
        for (const auto& entry : row) jrow.push_back(rational_to_json(entry));
        matrix.push_back(std::move(jrow));
    }
    return Json{{"labels", space.labels()}, {"matrix", std::move(matrix)}};
}

Space space_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("matrix")) {
        throw SchemaError("space document must be an object with \"labels\" and \"matrix\"");
    }
    const Json& jlabels = doc["labels"];
    const Json& jmatrix = doc["matrix"];
    if (!jlabels.is_array() || jlabels.empty()) {
        throw SchemaError("\"labels\" must be a nonempty array of strings");
    }
    std::vector<std::string> labels;
    labels.reserve(jlabels.size());
    for (const Json& l : jlabels) {
        if (!l.is_string()) throw SchemaError("\"labels\" must contain only strings");
        labels.push_back(l.get<std::string>());
    }
    if (!jmatrix.is_array() || jmatrix.size() != labels.size()) {
        throw SchemaError("\"matrix\" must be a square array matching the label count");
    }
    Matrix matrix;
    matrix.reserve(jmatrix.size());
    for (const Json& jrow : jmatrix) {
        if (!jrow.is_array() || jrow.size() != labels.size()) {
            throw SchemaError("\"matrix\" must be a square array matching the label count");
        }
        std::vector<Rational> row;
        row.reserve(jrow.size());
        for (const Json& entry : jrow) row.push_back(rational_from_json(entry));
        matrix.push_back(std::move(row));
    }
    try {
        return make_space(std::move(labels), std::move(matrix));
    } catch (const StructuralError& e) {
        throw SchemaError(e.what());
    }
}

Json sequence_to_json(const Sequence& seq) {
    return Json{{"prefix", seq.prefix}, {"cycle", seq.cycle}};
}

Sequence sequence_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("cycle")) {
        throw SchemaError("sequence document must be an object with \"cycle\"");
    }
    const auto indices = [](const Json& arr, const char* what) {
        if (!arr.is_array()) throw SchemaError(std::string("\"") + what + "\" must be an array");
        std::vector<PointIndex> out;
        out.reserve(arr.size());
        for (const Json& v : arr) {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
                throw SchemaError(std::string("\"") + what +
                                  "\" must contain nonnegative point indices");
            }
            out.push_back(v.get<PointIndex>());
        }
        return out;
    };
    Sequence seq;
    if (doc.contains("prefix")) seq.prefix = indices(doc["prefix"], "prefix");
    seq.cycle = indices(doc["cycle"], "cycle");
    if (seq.cycle.empty()) throw SchemaError("\"cycle\" must be nonempty");
    return seq;
}

Json roughness_report_to_json(const Space& space, const RoughnessReport& report) {
    return Json{{"candidate", space.label(report.candidate)},
                {"r_two", rational_to_json(report.r_two)},
                {"r_right", rational_to_json(report.r_right)},
                {"r_left", rational_to_json(report.r_left)}};
}

Json axiom_violation_to_json(const AxiomViolation& violation, const Space* space) {
    Json witness = Json::array();
    for (PointIndex i : violation.witness) {
        if (space != nullptr) {
            witness.push_back(space->label(i));
        } else {
            witness.push_back(i);
        }
    }
    return Json{{"axiom", axiom_name(violation.axiom)},
                {"witness", std::move(witness)},
                {"lhs", rational_to_json(violation.lhs)},
                {"rhs", rational_to_json(violation.rhs)}};
}

Json point_set_to_json(const Space& space, const PointSet& set) {
    std::vector<std::string> labels;
    labels.reserve(set.size());
    for (PointIndex p : set) labels.push_back(space.label(p));
    std::sort(labels.begin(), labels.end());
    return labels;
}

Json topology_to_json(const Topology& topology) {
    std::vector<std::vector<std::string>> opens;
    opens.reserve(topology.opens.size());
    for (std::uint64_t mask : topology.opens) {
        const PointSet set = from_mask(mask, topology.space.points());
        std::vector<std::string> labels;
        labels.reserve(set.size());
        for (PointIndex p : set) labels.push_back(topology.space.label(p));
        std::sort(labels.begin(), labels.end());
        opens.push_back(std::move(labels));
    }
    std::sort(opens.begin(), opens.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return opens;
}

} // namespace roughlim
