#include "extvan/config.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace extvan {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
    raise(ErrorCode::ConfigError, "config key '" + key + "': " + why);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ConfigError, "cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        raise(ErrorCode::ConfigError, std::string("config is not valid JSON: ") + e.what());
    }
    return j;
}

FieldSpec parse_field(const json& j) {
    if (!j.is_object()) bad_key("field", "must be an object");
    std::string kind = j.value("kind", "");
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_unsigned()) bad_key("field.p", "must be a positive integer");
        return FieldSpec::prime(j["p"].get<std::uint64_t>());
    }
    if (kind == "rationals") return FieldSpec::rationals();
    bad_key("field.kind", "must be \"prime\" or \"rationals\"");
}

AlgebraConfig parse_algebra(const json& j) {
    AlgebraConfig a;
    if (j.contains("preset")) {
        std::string preset = j["preset"].get<std::string>();
        if (preset == "truncated-polynomial")
            a.kind = AlgebraConfig::Kind::TruncatedPolynomial;
        else if (preset == "quantum-ci")
            a.kind = AlgebraConfig::Kind::QuantumCI;
        else if (preset == "exterior")
            a.kind = AlgebraConfig::Kind::Exterior;
        else if (preset == "klein-four")
            a.kind = AlgebraConfig::Kind::KleinFour;
        else if (preset == "cyclic")
            a.kind = AlgebraConfig::Kind::Cyclic;
        else if (preset == "symmetric")
            a.kind = AlgebraConfig::Kind::Symmetric;
        else
            bad_key("algebra.preset", "unknown preset: " + preset);
        a.c = j.value("c", std::size_t{1});
        a.a = j.value("a", std::size_t{2});
        a.q = j.contains("q") ? (j["q"].is_string() ? j["q"].get<std::string>()
                                                    : std::to_string(j["q"].get<std::int64_t>()))
                              : std::string("1");
        a.group_order = j.value("n", std::size_t{2});
        return a;
    }
    if (j.contains("group_table_csv")) {
        a.kind = AlgebraConfig::Kind::GroupTableFile;
        a.path = j["group_table_csv"].get<std::string>();
        return a;
    }
    if (j.contains("structure_constants")) {
        a.kind = AlgebraConfig::Kind::StructureConstantsFile;
        a.path = j["structure_constants"].get<std::string>();
        return a;
    }
    bad_key("algebra", "needs a preset, a group_table_csv, or a structure_constants file");
}

ModuleConfig parse_module(const json& j, const std::string& key) {
    ModuleConfig m;
    if (!j.is_object()) bad_key(key, "must be an object");
    std::string kind = j.value("kind", "");
    if (kind == "trivial")
        m.kind = StandardModuleKind::Trivial;
    else if (kind == "regular")
        m.kind = StandardModuleKind::Regular;
    else if (kind == "syzygy") {
        m.kind = StandardModuleKind::Syzygy;
        if (!j.contains("index")) bad_key(key + ".index", "syzygy module needs an index");
        m.syzygy_index = j["index"].get<std::size_t>();
    } else
        bad_key(key + ".kind", "must be trivial, regular, or syzygy");
    return m;
}

ActingRingConfig parse_acting(const json& j) {
    ActingRingConfig a;
    if (!j.is_object()) bad_key("acting_ring", "must be an object");
    std::string choice = j.value("choice", "");
    if (choice == "ext-generators") {
        a.choice = ActingRingConfig::Choice::ExtGenerators;
        a.max_degree = j.value("max_degree", std::size_t{6});
    } else if (choice == "degree-two-operators") {
        a.choice = ActingRingConfig::Choice::DegreeTwoOperators;
    } else if (choice == "explicit") {
        a.choice = ActingRingConfig::Choice::Explicit;
        if (!j.contains("degrees") || !j["degrees"].is_array())
            bad_key("acting_ring.degrees", "explicit choice needs a degree array");
        for (const auto& d : j["degrees"]) a.degrees.push_back(d.get<int>());
    } else
        bad_key("acting_ring.choice",
                "must be ext-generators, degree-two-operators, or explicit");
    return a;
}

}  // namespace

RunConfig parse_run_config(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object()) raise(ErrorCode::ConfigError, "config root must be an object");
    if (j.value("schema_version", 0) != 1) bad_key("schema_version", "must be 1");
    RunConfig cfg;
    if (!j.contains("field")) bad_key("field", "missing");
    cfg.field = parse_field(j["field"]);
    if (j.contains("dims_csv")) {
        cfg.dims_csv = j["dims_csv"].get<std::string>();
    } else {
        if (!j.contains("algebra")) bad_key("algebra", "missing (or give dims_csv)");
        cfg.algebra = parse_algebra(j["algebra"]);
        if (j.contains("module_m")) cfg.module_m = parse_module(j["module_m"], "module_m");
        if (j.contains("module_n")) cfg.module_n = parse_module(j["module_n"], "module_n");
    }
    if (j.contains("n_max")) cfg.n_max = j["n_max"].get<std::size_t>();
    if (j.contains("acting_ring")) cfg.acting = parse_acting(j["acting_ring"]);
    if (j.contains("guard")) cfg.guard = j["guard"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("holdout_from")) cfg.holdout_from = j["holdout_from"].get<std::int64_t>();
    if (j.contains("limits")) {
        const auto& l = j["limits"];
        if (l.contains("max_algebra_dim"))
            cfg.limits.max_algebra_dim = l["max_algebra_dim"].get<std::size_t>();
        if (l.contains("max_differential_entries"))
            cfg.limits.max_differential_entries = l["max_differential_entries"].get<std::size_t>();
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        static const char* known[] = {"schema_version", "field",     "algebra",     "dims_csv",
                                      "module_m",       "module_n",  "n_max",       "acting_ring",
                                      "guard",          "seed",      "trials",      "holdout_from",
                                      "limits"};
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) bad_key(key, "unknown key");
    }
    return cfg;
}

std::vector<std::vector<std::size_t>> parse_group_table_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ConfigError, "cannot open group table: " + path);
    std::string line;
    if (!std::getline(in, line)) raise(ErrorCode::ConfigError, "group table is empty");
    // header row: element labels, fixes the expected size
    std::size_t n = 1 + static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
    std::vector<std::vector<std::size_t>> table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::size_t> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(static_cast<std::size_t>(std::stoull(cell)));
            } catch (const std::exception&) {
                raise(ErrorCode::ConfigError, "group table entry is not an index: " + cell);
            }
        }
        if (row.size() != n) raise(ErrorCode::ConfigError, "group table row width mismatch");
        table.push_back(std::move(row));
    }
    if (table.size() != n) raise(ErrorCode::ConfigError, "group table is not square");
    return table;
}

std::vector<std::int64_t> parse_dims_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ConfigError, "cannot open dimension window: " + path);
    std::vector<std::int64_t> dims;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        std::string value = comma == std::string::npos ? line : line.substr(comma + 1);
        if (first) {
            first = false;
            // tolerate a header row
            if (value.find_first_not_of("0123456789 \t\r-") != std::string::npos) continue;
        }
        try {
            dims.push_back(std::stoll(value));
        } catch (const std::exception&) {
            raise(ErrorCode::ConfigError, "dimension entry is not an integer: " + value);
        }
    }
    if (dims.empty()) raise(ErrorCode::ConfigError, "dimension window is empty");
    return dims;
}

}  // namespace extvan
