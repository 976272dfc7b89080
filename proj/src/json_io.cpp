#include "rainbow/json_io.hpp"

#include <algorithm>

namespace rainbow {

namespace {

using nlohmann::json;

int require_int(const json& value, const std::string& what) {
    if (!value.is_number_integer()) {
        throw Error(ErrorCode::ParseError, what + " must be an integer");
    }
    return value.get<int>();
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!document.is_object() || !document.contains("t") || !document.contains("sets")) {
        throw Error(ErrorCode::ParseError, "instance must be an object with \"t\" and \"sets\"");
    }

    const int t = require_int(document["t"], "\"t\"");
    if (t < 3) {
        throw Error(ErrorCode::ParseError, "\"t\" must be at least 3");
    }
    if (!document["sets"].is_array()) {
        throw Error(ErrorCode::ParseError, "\"sets\" must be an array of vertex lists");
    }

    const CycleContext context(t);
    Instance instance{context, {}};
    int index = 0;
    for (const auto& entry : document["sets"]) {
        ++index;
        const std::string label = "set " + std::to_string(index);
        if (!entry.is_array()) {
            throw Error(ErrorCode::ParseError, label + " must be an array", index - 1);
        }
        std::vector<int> members;
        members.reserve(entry.size());
        for (const auto& raw : entry) {
            const int vertex = require_int(raw, "vertex in " + label);
            if (vertex < 1 || vertex > t) {
                throw Error(ErrorCode::ParseError,
                            label + " contains vertex " + std::to_string(vertex) +
                                " outside [1, " + std::to_string(t) + "]",
                            index - 1);
            }
            members.push_back(vertex - 1);
        }
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
            throw Error(ErrorCode::ParseError, label + " contains a duplicate vertex", index - 1);
        }
        instance.family.emplace_back(context, std::move(members));
    }
    return instance;
}

json instance_to_json(const Instance& instance) {
    json sets = json::array();
    for (const auto& member_set : instance.family) {
        json vertices = json::array();
        for (int v : member_set.members()) vertices.push_back(v + 1);
        sets.push_back(std::move(vertices));
    }
    return json{{"t", instance.context.order()}, {"sets", std::move(sets)}};
}

json certificate_to_json(const RainbowCertificate& certificate) {
    json assignment = json::array();
    for (std::size_t i = 0; i < certificate.assignment.size(); ++i) {
        assignment.push_back(json::array({i + 1, certificate.assignment[i] + 1}));
    }

    json permutation = json::array();
    for (int p : certificate.trace.permutation) permutation.push_back(p + 1);

    json trace{{"rho", certificate.trace.rotation},
               {"permutation", std::move(permutation)},
               {"k", certificate.trace.k},
               {"case", static_cast<int>(certificate.trace.case_tag)},
               {"r", certificate.trace.r},
               {"window_start", certificate.trace.window_start}};
    return json{{"assignment", std::move(assignment)}, {"trace", std::move(trace)}};
}

std::vector<std::pair<int, int>> parse_certificate_assignment(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!document.is_object() || !document.contains("assignment") ||
        !document["assignment"].is_array()) {
        throw Error(ErrorCode::ParseError,
                    "certificate must be an object with an \"assignment\" array");
    }

    std::vector<std::pair<int, int>> assignment;
    for (const auto& entry : document["assignment"]) {
        if (!entry.is_array() || entry.size() != 2) {
            throw Error(ErrorCode::ParseError,
                        "assignment entries must be [set_index, vertex] pairs");
        }
        const int index = require_int(entry[0], "assignment set index");
        const int vertex = require_int(entry[1], "assignment vertex");
        assignment.emplace_back(index - 1, vertex - 1);
    }
    return assignment;
}

json scan_report_to_json(const ScanReport& report) {
    json failing = json::array();
    for (const auto& failure : report.failures) failing.push_back(instance_to_json(failure));
    return json{{"t", report.cycle_order},
                {"s", report.set_size},
                {"families", report.families},
                {"failures", report.failures.size()},
                {"failing", std::move(failing)},
                {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace rainbow
