#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mfadams/problem.hpp"
#include "mfadams/verify.hpp"

namespace {

using namespace mfadams;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitTailUnverified = 3;

struct GlobalOptions {
    std::string input;
    std::string output = "json";
    int prime = 2;
    long cutoff = -1;
    long window = -1;
    bool strict = false;
};

HomologyOptions homology_options(const GlobalOptions& g) {
    HomologyOptions opts;
    if (g.cutoff >= 0) opts.cutoff = g.cutoff;
    if (g.window >= 0) opts.window = g.window;
    opts.strict = g.strict;
    return opts;
}

ProblemFile load_problem(const GlobalOptions& g) {
    if (g.input.empty()) throw ParseError("this command needs --input FILE");
    std::ifstream in(g.input);
    if (!in) throw ParseError("cannot open input file '" + g.input + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

void emit(const GlobalOptions& g, const Json& record) {
    if (g.output == "table") {
        std::cout << render_table(record);
    } else {
        std::cout << record.dump(2) << "\n";
    }
}

int worst(int a, int b) {
    // Verification failures dominate tail warnings.
    if (a == kExitVerifyFailed || b == kExitVerifyFailed) return kExitVerifyFailed;
    return std::max(a, b);
}

int status_code(TaskStatus status) {
    switch (status) {
        case TaskStatus::VerifyFailed: return kExitVerifyFailed;
        case TaskStatus::TailUnverified: return kExitTailUnverified;
        default: return kExitOk;
    }
}

int run_single_task(const GlobalOptions& g, Task task) {
    ProblemFile problem = load_problem(g);
    task.strict = task.strict || g.strict;
    TaskResult result = run_task(task, problem, homology_options(g));
    emit(g, result.record);
    return status_code(result.status);
}

int cmd_run(const GlobalOptions& g) {
    ProblemFile problem = load_problem(g);
    int code = kExitOk;
    Json records = Json::array();
    for (const auto& task : problem.tasks) {
        TaskResult result = run_task(task, problem, homology_options(g));
        records.push_back(result.record);
        code = worst(code, status_code(result.status));
    }
    if (g.output == "table") {
        for (const auto& r : records) std::cout << render_table(r);
    } else {
        std::cout << records.dump(2) << "\n";
    }
    return code;
}

int cmd_catalog(const GlobalOptions& g, const std::string& dump_name) {
    if (!dump_name.empty()) {
        LinearFactorization x = catalog_object(dump_name, g.prime);
        Json record = serialize_object(x);
        std::cout << record.dump(2) << "\n";
        return kExitOk;
    }
    Json records = Json::array();
    for (const auto& entry : catalog_entries()) {
        LinearFactorization x = entry.build(g.prime);
        ValidationReport v = validate(x);
        Json j;
        j["name"] = entry.name;
        j["description"] = entry.description;
        j["construction"] = entry.construction;
        j["ring"] = x.ring->describe();
        j["even_rank"] = x.even_rank();
        j["odd_rank"] = x.odd_rank();
        j["potential"] = x.potential.to_string();
        j["valid"] = v.pass;
        if (entry.expected_chi) j["chi"] = *entry.expected_chi;
        records.push_back(std::move(j));
        if (!v.pass) {
            std::cerr << "catalog entry '" << entry.name << "' failed validation\n";
            return kExitVerifyFailed;
        }
    }
    if (g.output == "table") {
        for (const auto& r : records) {
            std::cout << r.value("name", std::string()) << "  " << r.value("ring", std::string())
                      << "  ranks (" << r.value("even_rank", 0) << "," << r.value("odd_rank", 0)
                      << ")  f = " << r.value("potential", std::string()) << "\n    "
                      << r.value("description", std::string()) << "\n";
        }
    } else {
        std::cout << records.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite) {
    SuiteReport report = run_verify_suite(suite, g.prime, homology_options(g));
    Json cases = Json::array();
    for (const auto& c : report.cases) {
        cases.push_back(Json{{"name", c.name},
                             {"pass", c.pass},
                             {"detail", c.detail},
                             {"ms", c.milliseconds}});
    }
    Json record;
    record["operation"] = "verify";
    record["inputs"] = Json{{"suite", suite}, {"prime", g.prime}};
    record["value"] =
        Json{{"passed", report.passed()}, {"failed", report.failed()}, {"cases", cases}};
    record["warnings"] = Json::array();
    emit(g, record);
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mfadams: exact matrix factorizations, cyclic Adams operations, and the "
                 "theta pairing over weighted-graded rings"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--input", g.input, "problem file (JSON)");
    app.add_option("--output", g.output, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--p", g.prime, "prime of the coefficient field / Adams degree");
    app.add_option("--cutoff", g.cutoff, "homology degree cutoff override");
    app.add_option("--window", g.window, "trailing clear-window override");
    app.add_flag("--strict", g.strict, "escalate unverified finite length to an error");

    std::string object_a, object_b, suite_name, dump_name;

    auto* validate_cmd = app.add_subcommand("validate", "check one object");
    validate_cmd->add_option("object", object_a)->required();
    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a potential-zero object");
    chi_cmd->add_option("object", object_a)->required();
    auto* homology_cmd = app.add_subcommand("homology", "degreewise homology report");
    homology_cmd->add_option("object", object_a)->required();
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two objects");
    tensor_cmd->add_option("left", object_a)->required();
    tensor_cmd->add_option("right", object_b)->required();
    auto* adams_cmd = app.add_subcommand("adams", "cyclic Adams operation on an object");
    adams_cmd->add_option("object", object_a)->required();
    auto* pairing_cmd = app.add_subcommand("pairing", "chi pairing of two objects (right twisted)");
    pairing_cmd->add_option("left", object_a)->required();
    pairing_cmd->add_option("right", object_b)->required();
    auto* theta_cmd = app.add_subcommand("theta", "theta pairing of two objects");
    theta_cmd->add_option("left", object_a)->required();
    theta_cmd->add_option("right", object_b)->required();
    auto* catalog_cmd = app.add_subcommand("catalog", "list built-in example objects");
    catalog_cmd->add_option("name", dump_name, "dump one entry as a JSON object spec");
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite_name, "axioms | keylemma | theta | kunneth")->required();
    auto* run_cmd = app.add_subcommand("run", "execute the tasks listed in the problem file");

    for (CLI::App* sub : {validate_cmd, chi_cmd, homology_cmd, tensor_cmd, adams_cmd, pairing_cmd,
                          theta_cmd, catalog_cmd, verify_cmd, run_cmd})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        auto make_task = [&](const std::string& command, int nargs) {
            Task task;
            task.command = command;
            task.objects.push_back(object_a);
            if (nargs > 1) task.objects.push_back(object_b);
            if (app.count("--p")) task.prime = g.prime;
            return task;
        };
        if (validate_cmd->parsed()) return run_single_task(g, make_task("validate", 1));
        if (chi_cmd->parsed()) return run_single_task(g, make_task("chi", 1));
        if (homology_cmd->parsed()) return run_single_task(g, make_task("homology", 1));
        if (tensor_cmd->parsed()) return run_single_task(g, make_task("tensor", 2));
        if (adams_cmd->parsed()) return run_single_task(g, make_task("adams", 1));
        if (pairing_cmd->parsed()) return run_single_task(g, make_task("pairing", 2));
        if (theta_cmd->parsed()) return run_single_task(g, make_task("theta", 2));
        if (catalog_cmd->parsed()) return cmd_catalog(g, dump_name);
        if (verify_cmd->parsed()) return cmd_verify(g, suite_name);
        if (run_cmd->parsed()) return cmd_run(g);
    } catch (const TailUnverifiedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTailUnverified;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
