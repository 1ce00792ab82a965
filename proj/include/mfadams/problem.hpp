#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mfadams/adams.hpp"
#include "mfadams/catalog.hpp"

namespace mfadams {

using Json = nlohmann::ordered_json;

struct Task {
    std::string command;                // validate|chi|homology|tensor|adams|pairing|theta|verify-suite
    std::vector<std::string> objects;   // referenced object names
    std::string suite;                  // for verify-suite
    std::optional<long> cutoff;
    std::optional<long> window;
    std::optional<int> prime;
    bool strict = false;

    bool operator==(const Task& rhs) const = default;
};

struct ProblemFile {
    RingPtr ring;
    std::vector<std::pair<std::string, LinearFactorization>> objects;
    std::vector<Task> tasks;

    const LinearFactorization& object(const std::string& name) const;
    bool operator==(const ProblemFile& rhs) const;
};

// Parses and fully validates a problem document; every object must pass
// validate and live over the file's ring.
ProblemFile parse_problem(const std::string& text);

std::string serialize_problem(const ProblemFile& problem);

Json serialize_object(const LinearFactorization& x);
LinearFactorization parse_object(const RingPtr& ring, const Json& spec, const std::string& name);

enum class TaskStatus { Ok, VerifyFailed, TailUnverified };

struct TaskResult {
    Json record;
    TaskStatus status = TaskStatus::Ok;
};

// Executes one task; domain errors surface as exceptions, verification
// failures and strict-mode tail escalations through the status.
TaskResult run_task(const Task& task, const ProblemFile& problem,
                    const HomologyOptions& base_options);

std::string render_table(const Json& record);

}  // namespace mfadams
