#include "mfadams/problem.hpp"

#include <algorithm>
#include <sstream>

#include "mfadams/verify.hpp"

namespace mfadams {

const LinearFactorization& ProblemFile::object(const std::string& name) const {
    for (const auto& [n, x] : objects) {
        if (n == name) return x;
    }
    throw DomainError("unknown object '" + name + "'");
}

bool ProblemFile::operator==(const ProblemFile& rhs) const {
    return same_ring(ring, rhs.ring) && objects == rhs.objects && tasks == rhs.tasks;
}

namespace {

GradedMap parse_map(const RingPtr& ring, const Json& spec, const FreeGradedModule& source,
                    const FreeGradedModule& target, const std::string& where) {
    if (!spec.is_object() || !spec.contains("entries"))
        throw ParseError(where + ": expected {\"shift\": s, \"entries\": [[...]]}");
    long shift = spec.value("shift", 0L);
    const Json& entries = spec.at("entries");
    if (!entries.is_array() || entries.size() != target.rank())
        throw ParseError(where + ": entries must have " + std::to_string(target.rank()) +
                         " rows");
    GradedMap map(ring, source, target, shift);
    for (size_t i = 0; i < target.rank(); ++i) {
        const Json& row = entries.at(i);
        if (!row.is_array() || row.size() != source.rank())
            throw ParseError(where + ": row " + std::to_string(i) + " must have " +
                             std::to_string(source.rank()) + " columns");
        for (size_t j = 0; j < source.rank(); ++j) {
            const Json& cell = row.at(j);
            if (!cell.is_string())
                throw ParseError(where + ": entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be a polynomial string");
            map.set(i, j, GradedPoly::parse(ring, cell.get<std::string>()));
        }
    }
    return map;
}

std::vector<long> parse_degrees(const Json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + " must be an array of integers");
    std::vector<long> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParseError(where + " must contain integers");
        out.push_back(v.get<long>());
    }
    return out;
}

}  // namespace

LinearFactorization parse_object(const RingPtr& ring, const Json& spec, const std::string& name) {
    if (!spec.is_object()) throw ParseError("object '" + name + "' must be a JSON object");
    if (spec.contains("catalog")) {
        std::string cname = spec.at("catalog").get<std::string>();
        LinearFactorization x = catalog_object(cname, ring->prime);
        if (!same_ring(x.ring, ring))
            throw ParseError("catalog object '" + cname + "' lives over " + x.ring->describe() +
                             ", not the problem ring " + ring->describe());
        return x;
    }
    if (spec.contains("koszul")) {
        const Json& k = spec.at("koszul");
        if (!k.contains("g") || !k.at("g").is_array())
            throw ParseError("object '" + name + "': koszul needs a list g");
        std::vector<GradedPoly> g, a;
        for (const auto& s : k.at("g")) g.push_back(GradedPoly::parse(ring, s.get<std::string>()));
        if (k.contains("a")) {
            for (const auto& s : k.at("a"))
                a.push_back(GradedPoly::parse(ring, s.get<std::string>()));
        } else {
            a.assign(g.size(), GradedPoly::zero(ring));
        }
        return koszul_factorization(ring, g, a);
    }
    for (const char* key : {"even_degrees", "odd_degrees", "alpha", "beta", "potential"}) {
        if (!spec.contains(key))
            throw ParseError("object '" + name + "' is missing field '" + key + "'");
    }
    FreeGradedModule even{parse_degrees(spec.at("even_degrees"), name + ".even_degrees")};
    FreeGradedModule odd{parse_degrees(spec.at("odd_degrees"), name + ".odd_degrees")};
    GradedMap alpha = parse_map(ring, spec.at("alpha"), odd, even, name + ".alpha");
    GradedMap beta = parse_map(ring, spec.at("beta"), even, odd, name + ".beta");
    GradedPoly potential = GradedPoly::parse(ring, spec.at("potential").get<std::string>());
    return make_factorization(ring, std::move(potential), std::move(even), std::move(odd),
                              std::move(alpha), std::move(beta));
}

Json serialize_object(const LinearFactorization& x) {
    Json out;
    out["even_degrees"] = x.even.generator_degrees;
    out["odd_degrees"] = x.odd.generator_degrees;
    auto dump_map = [](const GradedMap& m) {
        Json j;
        j["shift"] = m.shift();
        Json rows = Json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).to_string());
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        return j;
    };
    out["alpha"] = dump_map(x.alpha);
    out["beta"] = dump_map(x.beta);
    out["potential"] = x.potential.to_string();
    return out;
}

namespace {

Task parse_task(const Json& spec, size_t index) {
    if (!spec.is_object()) throw ParseError("task " + std::to_string(index) + " must be an object");
    Task task;
    if (!spec.contains("command") || !spec.at("command").is_string())
        throw ParseError("task " + std::to_string(index) + " needs a \"command\"");
    task.command = spec.at("command").get<std::string>();
    static const std::vector<std::string> known = {"validate", "chi",     "homology",
                                                   "tensor",   "adams",   "pairing",
                                                   "theta",    "verify-suite"};
    if (std::find(known.begin(), known.end(), task.command) == known.end())
        throw ParseError("task " + std::to_string(index) + ": unknown command '" + task.command +
                         "'");
    if (spec.contains("object")) task.objects.push_back(spec.at("object").get<std::string>());
    if (spec.contains("left")) task.objects.push_back(spec.at("left").get<std::string>());
    if (spec.contains("right")) task.objects.push_back(spec.at("right").get<std::string>());
    if (spec.contains("suite")) task.suite = spec.at("suite").get<std::string>();
    if (spec.contains("cutoff")) task.cutoff = spec.at("cutoff").get<long>();
    if (spec.contains("window")) task.window = spec.at("window").get<long>();
    if (spec.contains("prime")) task.prime = spec.at("prime").get<int>();
    if (spec.contains("strict")) task.strict = spec.at("strict").get<bool>();

    const bool needs_one = task.command == "validate" || task.command == "chi" ||
                           task.command == "homology" || task.command == "adams";
    const bool needs_two =
        task.command == "tensor" || task.command == "pairing" || task.command == "theta";
    if (needs_one && task.objects.size() != 1)
        throw ParseError("task '" + task.command + "' needs exactly one object");
    if (needs_two && task.objects.size() != 2)
        throw ParseError("task '" + task.command + "' needs left and right objects");
    if (task.command == "verify-suite" && task.suite.empty())
        throw ParseError("verify-suite task needs a \"suite\"");
    return task;
}

ProblemFile parse_problem_document(const Json& doc) {
    if (!doc.is_object() || !doc.contains("ring"))
        throw ParseError("problem file must be an object with a \"ring\"");
    const Json& r = doc.at("ring");
    for (const char* key : {"variables", "weights", "prime"}) {
        if (!r.contains(key)) throw ParseError(std::string("ring is missing \"") + key + "\"");
    }
    std::vector<std::string> vars;
    for (const auto& v : r.at("variables")) vars.push_back(v.get<std::string>());
    std::vector<long> weights;
    for (const auto& w : r.at("weights")) weights.push_back(w.get<long>());
    RingPtr ring;
    try {
        ring = make_ring(std::move(vars), std::move(weights), r.at("prime").get<int>());
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad ring: ") + e.what());
    }

    ProblemFile problem;
    problem.ring = ring;
    if (doc.contains("objects")) {
        if (!doc.at("objects").is_object()) throw ParseError("\"objects\" must be a JSON object");
        for (const auto& [name, spec] : doc.at("objects").items()) {
            LinearFactorization x = parse_object(ring, spec, name);
            ValidationReport report = validate(x);
            if (!report.pass) {
                std::ostringstream os;
                os << "object '" << name << "' fails validation:";
                for (const auto& f : report.failures) os << "\n  " << f;
                throw ParseError(os.str());
            }
            problem.objects.emplace_back(name, std::move(x));
        }
    }
    if (doc.contains("tasks")) {
        if (!doc.at("tasks").is_array()) throw ParseError("\"tasks\" must be an array");
        size_t index = 0;
        for (const auto& t : doc.at("tasks")) {
            Task task = parse_task(t, index++);
            for (const auto& name : task.objects) problem.object(name);  // existence check
            problem.tasks.push_back(std::move(task));
        }
    }
    return problem;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_problem_document(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed problem file: ") + e.what());
    }
}

std::string serialize_problem(const ProblemFile& problem) {
    Json doc;
    doc["ring"] = {{"variables", problem.ring->variables},
                   {"weights", problem.ring->weights},
                   {"prime", problem.ring->prime}};
    Json objects = Json::object();
    for (const auto& [name, x] : problem.objects) objects[name] = serialize_object(x);
    doc["objects"] = std::move(objects);
    Json tasks = Json::array();
    for (const auto& t : problem.tasks) {
        Json j;
        j["command"] = t.command;
        if (t.command == "tensor" || t.command == "pairing" || t.command == "theta") {
            j["left"] = t.objects.at(0);
            j["right"] = t.objects.at(1);
        } else if (!t.objects.empty()) {
            j["object"] = t.objects.at(0);
        }
        if (!t.suite.empty()) j["suite"] = t.suite;
        if (t.cutoff) j["cutoff"] = *t.cutoff;
        if (t.window) j["window"] = *t.window;
        if (t.prime) j["prime"] = *t.prime;
        if (t.strict) j["strict"] = true;
        tasks.push_back(std::move(j));
    }
    doc["tasks"] = std::move(tasks);
    return doc.dump(2) + "\n";
}

namespace {

HomologyOptions task_options(const Task& task, const HomologyOptions& base) {
    HomologyOptions opts = base;
    if (task.cutoff) opts.cutoff = task.cutoff;
    if (task.window) opts.window = task.window;
    if (task.strict) opts.strict = true;
    return opts;
}

Json per_degree_json(const HomologyReport& report) {
    Json arr = Json::array();
    for (const auto& row : report.per_degree)
        arr.push_back({row.degree, row.h0, row.h1});
    return arr;
}

Json homology_value(const HomologyReport& report) {
    Json v;
    v["len_h0"] = report.len_h0;
    v["len_h1"] = report.len_h1;
    v["chi"] = report.chi;
    v["cutoff"] = report.cutoff_used;
    v["window"] = report.window_used;
    v["tail_window_clear"] = report.tail_window_clear;
    return v;
}

}  // namespace

TaskResult run_task(const Task& task, const ProblemFile& problem,
                    const HomologyOptions& base_options) {
    HomologyOptions opts = task_options(task, base_options);
    TaskResult result;
    Json& record = result.record;
    record["operation"] = task.command;
    Json inputs = Json::object();
    if (task.objects.size() == 1) inputs["object"] = task.objects[0];
    if (task.objects.size() == 2) {
        inputs["left"] = task.objects[0];
        inputs["right"] = task.objects[1];
    }
    if (!task.suite.empty()) inputs["suite"] = task.suite;
    if (task.prime) inputs["prime"] = *task.prime;
    record["inputs"] = std::move(inputs);
    Json warnings = Json::array();

    auto note_tail = [&](const HomologyReport& report) {
        for (const auto& w : report.warnings) warnings.push_back(w);
        if (!report.tail_window_clear) {
            if (opts.strict) result.status = TaskStatus::TailUnverified;
        }
    };

    if (task.command == "validate") {
        ValidationReport v = validate(problem.object(task.objects[0]));
        record["value"] = Json{{"pass", v.pass}, {"failures", v.failures}};
    } else if (task.command == "chi") {
        HomologyReport report = homology_report(problem.object(task.objects[0]), opts);
        note_tail(report);
        record["value"] = report.chi;
        record["per_degree_evidence"] = per_degree_json(report);
    } else if (task.command == "homology") {
        HomologyReport report = homology_report(problem.object(task.objects[0]), opts);
        note_tail(report);
        record["value"] = homology_value(report);
        record["per_degree_evidence"] = per_degree_json(report);
    } else if (task.command == "tensor") {
        LinearFactorization z = tensor_product(problem.object(task.objects[0]),
                                               problem.object(task.objects[1]));
        ValidationReport v = validate(z);
        record["value"] = Json{{"even_rank", z.even_rank()},
                               {"odd_rank", z.odd_rank()},
                               {"potential", z.potential.to_string()},
                               {"valid", v.pass}};
        record["object"] = serialize_object(z);
    } else if (task.command == "adams") {
        int p = task.prime.value_or(problem.ring->prime);
        VirtualClass v = adams_operation(VirtualClass::of(problem.object(task.objects[0])), p);
        Json terms = Json::array();
        for (const auto& [c, x] : v.terms())
            terms.push_back(Json{{"coefficient", c},
                                 {"even_rank", x.even_rank()},
                                 {"odd_rank", x.odd_rank()}});
        Json value;
        value["terms"] = std::move(terms);
        if (v.potential().is_zero()) {
            long chi = 0;
            for (const auto& [c, x] : v.terms()) {
                HomologyReport report = homology_report(x, opts);
                note_tail(report);
                chi += c * report.chi;
            }
            value["chi"] = chi;
        }
        record["value"] = std::move(value);
    } else if (task.command == "pairing" || task.command == "theta") {
        VirtualClass left = VirtualClass::of(problem.object(task.objects[0]));
        VirtualClass right = VirtualClass::of(problem.object(task.objects[1]));
        long total = 0;
        Json evidence = Json::array();
        for (const auto& [cv, x] : left.terms()) {
            for (const auto& [cw, y] : right.terms()) {
                LinearFactorization z = tensor_product(x, negate_potential(y));
                HomologyReport report = homology_report(z, opts);
                note_tail(report);
                total += cv * cw * report.chi;
                evidence.push_back(Json{{"chi", report.chi},
                                        {"per_degree", per_degree_json(report)}});
            }
        }
        record["value"] = total;
        record["per_degree_evidence"] = std::move(evidence);
    } else if (task.command == "verify-suite") {
        int p = task.prime.value_or(problem.ring ? problem.ring->prime : 2);
        SuiteReport suite = run_verify_suite(task.suite, p, opts);
        Json cases = Json::array();
        for (const auto& c : suite.cases)
            cases.push_back(Json{{"name", c.name},
                                 {"pass", c.pass},
                                 {"detail", c.detail},
                                 {"ms", c.milliseconds}});
        record["value"] = Json{{"passed", suite.passed()},
                               {"failed", suite.failed()},
                               {"cases", std::move(cases)}};
        if (!suite.all_pass()) result.status = TaskStatus::VerifyFailed;
    } else {
        throw DomainError("unknown command '" + task.command + "'");
    }
    record["warnings"] = std::move(warnings);
    return result;
}

std::string render_table(const Json& record) {
    std::ostringstream os;
    os << record.value("operation", std::string("?"));
    if (record.contains("inputs")) {
        for (const auto& [k, v] : record.at("inputs").items()) {
            os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        }
    }
    os << "\n";
    if (record.contains("value")) {
        const Json& v = record.at("value");
        if (v.is_primitive()) {
            os << "  value: " << v.dump() << "\n";
        } else {
            for (const auto& [k, val] : v.items()) {
                if (k == "cases" && val.is_array()) {
                    for (const auto& c : val) {
                        os << "  [" << (c.value("pass", false) ? "PASS" : "FAIL") << "] "
                           << c.value("name", std::string()) << " (" << c.value("ms", 0.0)
                           << " ms)";
                        std::string detail = c.value("detail", std::string());
                        if (!detail.empty()) os << " -- " << detail;
                        os << "\n";
                    }
                } else {
                    os << "  " << k << ": " << val.dump() << "\n";
                }
            }
        }
    }
    if (record.contains("per_degree_evidence") && record.at("per_degree_evidence").is_array() &&
        !record.at("per_degree_evidence").empty() &&
        record.at("per_degree_evidence").front().is_array()) {
        os << "  degree  h0  h1\n";
        for (const auto& row : record.at("per_degree_evidence")) {
            os << "  " << row.at(0).get<long>() << "  " << row.at(1).get<long>() << "  "
               << row.at(2).get<long>() << "\n";
        }
    }
    for (const auto& w : record.value("warnings", Json::array()))
        os << "  warning: " << w.get<std::string>() << "\n";
    return os.str();
}

}  // namespace mfadams
