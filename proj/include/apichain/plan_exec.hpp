#pragma once

#include "apichain/client.hpp"
#include "apichain/plan_check.hpp"

#include <map>
#include <string>
#include <vector>

namespace apichain {

struct Limits {
    int max_calls = 64;
};

struct TraceEntry {
    std::string api;
    nlohmann::json args;
    std::string response_digest;  // fnv1a of the serialized payload
};

struct ExecutionResult {
    nlohmann::json value;
    std::vector<TraceEntry> trace;
    int api_calls = 0;  // always == trace.size()
    double wall_time_ms = 0.0;
};

struct PlanExecError : std::runtime_error {
    enum class Kind { Api, EmptySelection, CallBudget, Runtime };
    Kind kind;
    int step_line;
    PlanExecError(Kind k, const std::string& message, int line)
        : std::runtime_error(message), kind(k), step_line(line) {}
};

/// Run a checked plan. Steps execute in order; foreach bodies run once per
/// element in list order; every API call is recorded in the trace. Exceeding
/// the call budget aborts before the offending call is issued. Deterministic
/// given a deterministic client.
ExecutionResult execute_plan(const TypedPlan& plan,
                             const std::map<std::string, nlohmann::json>& inputs,
                             ApiClient& client, const Limits& limits = {});

}  // namespace apichain
