#include "resmax/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "resmax/errors.hpp"
#include "resmax/subset.hpp"
#include "resmax/text.hpp"

namespace resmax {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw ParseError(std::string("instance is missing the \"") + name +
                         "\" field");
    }
    return *it;
}

double as_number(const json& j, const char* name) {
    if (!j.is_number()) {
        throw ParseError(std::string("field \"") + name + "\" must be a number");
    }
    return j.get<double>();
}

int as_int(const json& j, const char* name) {
    if (!j.is_number_integer()) {
        throw ParseError(std::string("field \"") + name +
                         "\" must be an integer");
    }
    return j.get<int>();
}

std::vector<double> as_number_array(const json& j, const char* name) {
    if (!j.is_array()) {
        throw ParseError(std::string("field \"") + name + "\" must be an array");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& item : j) out.push_back(as_number(item, name));
    return out;
}

std::shared_ptr<ObjectiveOracle> parse_modular(const json& j) {
    return std::make_shared<ModularFunction>(
        as_number_array(require_field(j, "weights"), "weights"));
}

std::shared_ptr<ObjectiveOracle> parse_tabular(const json& j) {
    int m = as_int(require_field(j, "m"), "m");
    if (m < 1 || m > TabularFunction::kMaxGroundSize) {
        throw ParseError("tabular \"m\" must be in [1, " +
                         std::to_string(TabularFunction::kMaxGroundSize) +
                         "], got " + std::to_string(m));
    }
    const json& values = require_field(j, "values");
    if (!values.is_object()) {
        throw ParseError("field \"values\" must be an object keyed by subset");
    }
    const std::size_t expected = std::size_t{1} << m;
    std::vector<double> table(expected, 0.0);
    std::vector<char> seen(expected, 0);
    for (const auto& [key, value] : values.items()) {
        Subset subset = Subset::parse(key, m);
        uint32_t mask = subset.to_mask();
        if (seen[mask]) {
            throw ParseError("subset " + subset.to_string() +
                             " appears twice in \"values\"");
        }
        seen[mask] = 1;
        table[mask] = as_number(value, "values");
    }
    for (std::size_t mask = 0; mask < expected; ++mask) {
        if (!seen[mask]) {
            std::vector<int> members;
            for (int v = 0; v < m; ++v) {
                if (mask & (std::size_t{1} << v)) members.push_back(v);
            }
            throw ParseError("\"values\" is missing subset " +
                             Subset(members, m).to_string());
        }
    }
    return std::make_shared<TabularFunction>(m, std::move(table));
}

std::shared_ptr<ObjectiveOracle> parse_coverage(const json& j) {
    std::vector<double> weights = as_number_array(
        require_field(j, "universe_weights"), "universe_weights");
    const json& covers_json = require_field(j, "covers");
    if (!covers_json.is_array()) {
        throw ParseError("field \"covers\" must be an array of arrays");
    }
    std::vector<std::vector<int>> covers;
    covers.reserve(covers_json.size());
    for (const json& row : covers_json) {
        if (!row.is_array()) {
            throw ParseError("field \"covers\" must be an array of arrays");
        }
        std::vector<int> items;
        items.reserve(row.size());
        for (const json& item : row) items.push_back(as_int(item, "covers"));
        covers.push_back(std::move(items));
    }
    return std::make_shared<WeightedCoverageFunction>(std::move(weights),
                                                      std::move(covers));
}

std::shared_ptr<ObjectiveOracle> parse_logdet(const json& j) {
    int d = as_int(require_field(j, "d"), "d");
    if (d < 1) {
        throw ParseError("logdet \"d\" must be at least 1, got " +
                         std::to_string(d));
    }
    const json& matrices_json = require_field(j, "matrices");
    if (!matrices_json.is_array() || matrices_json.empty()) {
        throw ParseError("field \"matrices\" must be a non-empty array");
    }
    std::vector<DenseMatrix> matrices;
    matrices.reserve(matrices_json.size());
    for (const json& mat : matrices_json) {
        if (!mat.is_array() || mat.size() != static_cast<std::size_t>(d)) {
            throw ParseError("each matrix must be an array of " +
                             std::to_string(d) + " rows");
        }
        std::vector<double> entries;
        entries.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
        for (const json& row : mat) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
                throw ParseError("each matrix row must hold " +
                                 std::to_string(d) + " numbers");
            }
            for (const json& entry : row) {
                entries.push_back(as_number(entry, "matrices"));
            }
        }
        matrices.emplace_back(d, std::move(entries));
    }
    return std::make_shared<LogDetFunction>(std::move(matrices));
}

std::shared_ptr<ObjectiveOracle> parse_logdet_random(const json& j) {
    int m = as_int(require_field(j, "m"), "m");
    int d = as_int(require_field(j, "d"), "d");
    const json& seed_json = require_field(j, "seed");
    if (!seed_json.is_number_integer() ||
        (!seed_json.is_number_unsigned() && seed_json.get<long long>() < 0)) {
        throw ParseError("field \"seed\" must be a non-negative integer");
    }
    uint64_t seed = seed_json.get<uint64_t>();
    return std::make_shared<LogDetFunction>(random_psd_instance(m, d, seed));
}

}  // namespace

std::shared_ptr<ObjectiveOracle> parse_instance(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("instance is not valid JSON");
    }
    if (!j.is_object()) {
        throw ParseError("instance must be a JSON object");
    }
    const json& type = require_field(j, "type");
    if (!type.is_string()) {
        throw ParseError("field \"type\" must be a string");
    }
    const std::string name = type.get<std::string>();
    if (name == "modular") return parse_modular(j);
    if (name == "tabular") return parse_tabular(j);
    if (name == "coverage") return parse_coverage(j);
    if (name == "logdet") return parse_logdet(j);
    if (name == "logdet_random") return parse_logdet_random(j);
    throw ParseError("unknown instance type \"" + name + "\"");
}

std::shared_ptr<ObjectiveOracle> load_instance(const std::string& path) {
    return parse_instance(read_text_file(path));
}

std::string serialize_logdet_instance(const LogDetFunction& f) {
    const int d = f.dim();
    std::string out = "{\"type\":\"logdet\",\"d\":" + std::to_string(d) +
                      ",\"matrices\":[";
    for (std::size_t i = 0; i < f.matrices().size(); ++i) {
        if (i > 0) out += ',';
        const DenseMatrix& mat = f.matrices()[i];
        out += '[';
        for (int r = 0; r < d; ++r) {
            if (r > 0) out += ',';
            out += '[';
            for (int c = 0; c < d; ++c) {
                if (c > 0) out += ',';
                out += format_double(mat.at(r, c));
            }
            out += ']';
        }
        out += ']';
    }
    out += "]}";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write file: " + path);
    }
    out << content;
    if (!out) {
        throw Error("failed while writing file: " + path);
    }
}

}  // namespace resmax
