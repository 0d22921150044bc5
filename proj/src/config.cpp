#include "thl/config.hpp"

#include "thl/errors.hpp"
#include "thl/fixtures.hpp"
#include "thl/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace thl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& path, const std::string& what) {
    throw ParseError(source + ": field '" + path + "': " + what);
}

const json& member(const json& obj, const char* key, const std::string& source, const std::string& path) {
    if (!obj.is_object()) fail(source, path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(source, path.empty() ? key : path + "." + key, "missing");
    return *it;
}

Rational read_rational(const json& v, const std::string& source, const std::string& path) {
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
    if (!v.is_string()) fail(source, path, "expected a rational as an integer or a \"p/q\" string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(source, path, e.what());
    }
}

std::size_t read_index(const json& v, const std::string& source, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(source, path, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<std::string> read_names(const json& v, const std::string& source, const std::string& path) {
    if (!v.is_array() || v.empty()) fail(source, path, "expected a nonempty list of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) fail(source, path + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

AlgVec read_vector(const json& v, std::size_t d, const std::string& source, const std::string& path) {
    if (!v.is_array() || v.size() != d) fail(source, path, "expected " + std::to_string(d) + " coordinates");
    AlgVec out;
    for (std::size_t i = 0; i < d; ++i) {
        Rational c = read_rational(v[i], source, path + "[" + std::to_string(i) + "]");
        if (c != 0) out.emplace_back(i, c);
    }
    return out;
}

Algebra read_algebra(const json& j, const std::string& source) {
    std::vector<std::string> names = read_names(member(j, "basis", source, "algebra"), source, "algebra.basis");
    const std::size_t d = names.size();
    std::size_t unit = read_index(member(j, "unit", source, "algebra"), source, "algebra.unit");
    if (unit >= d) fail(source, "algebra.unit", "index out of range");
    const json& m = member(j, "mult", source, "algebra");
    if (!m.is_array() || m.size() != d) fail(source, "algebra.mult", "expected " + std::to_string(d) + " rows");
    std::vector<std::vector<AlgVec>> mult(d, std::vector<AlgVec>(d));
    for (std::size_t a = 0; a < d; ++a) {
        std::string row = "algebra.mult[" + std::to_string(a) + "]";
        if (!m[a].is_array() || m[a].size() != d) fail(source, row, "expected " + std::to_string(d) + " entries");
        for (std::size_t b = 0; b < d; ++b)
            mult[a][b] = read_vector(m[a][b], d, source, row + "[" + std::to_string(b) + "]");
    }
    Algebra alg = make_algebra(std::move(names), AlgVec{{unit, Rational(1)}}, std::move(mult));
    validate_algebra(alg);
    return alg;
}

FiniteGroupAction read_group(const json& j, const Algebra& alg, const std::string& source) {
    std::vector<std::string> names = read_names(member(j, "elements", source, "group"), source, "group.elements");
    const std::size_t r = names.size();
    auto lookup = [&](const json& v, const std::string& path) {
        if (!v.is_string()) fail(source, path, "expected an element name");
        for (std::size_t k = 0; k < r; ++k)
            if (names[k] == v.get<std::string>()) return k;
        fail(source, path, "unknown element '" + v.get<std::string>() + "'");
    };
    const json& t = member(j, "table", source, "group");
    if (!t.is_array() || t.size() != r) fail(source, "group.table", "expected " + std::to_string(r) + " rows");
    std::vector<std::vector<std::size_t>> table(r, std::vector<std::size_t>(r));
    for (std::size_t a = 0; a < r; ++a) {
        std::string row = "group.table[" + std::to_string(a) + "]";
        if (!t[a].is_array() || t[a].size() != r) fail(source, row, "expected " + std::to_string(r) + " entries");
        for (std::size_t b = 0; b < r; ++b) table[a][b] = lookup(t[a][b], row + "[" + std::to_string(b) + "]");
    }
    const json& act = member(j, "action", source, "group");
    std::vector<AlgebraMap> action;
    for (const std::string& name : names) {
        std::string path = "group.action." + name;
        const json& cols = member(act, name.c_str(), source, "group.action");
        if (!cols.is_array() || cols.size() != alg.dim)
            fail(source, path, "expected " + std::to_string(alg.dim) + " image columns");
        std::vector<SparseVector> images;
        for (std::size_t c = 0; c < alg.dim; ++c)
            images.push_back(read_vector(cols[c], alg.dim, source, path + "[" + std::to_string(c) + "]"));
        action.push_back(AlgebraMap{SparseMatrix::from_columns(alg.dim, std::move(images))});
    }
    FiniteGroupAction g = make_group_action(std::move(names), std::move(table), std::move(action));
    validate_action(alg, g);
    return g;
}

TaskSpec read_task(const json& j, const std::string& source) {
    TaskSpec t;
    if (!j.is_object()) fail(source, "task", "expected an object");
    if (auto it = j.find("command"); it != j.end()) {
        if (!it->is_string()) fail(source, "task.command", "expected a string");
        t.command = it->get<std::string>();
    }
    if (auto it = j.find("max_degree"); it != j.end()) t.max_degree = read_index(*it, source, "task.max_degree");
    if (auto it = j.find("twist"); it != j.end()) {
        if (!it->is_string()) fail(source, "task.twist", "expected an element name");
        t.twist = it->get<std::string>();
    }
    if (auto it = j.find("lambda_coinvariants"); it != j.end()) {
        if (!it->is_boolean()) fail(source, "task.lambda_coinvariants", "expected true or false");
        t.lambda_coinvariants = it->get<bool>();
    }
    if (auto it = j.find("format"); it != j.end()) {
        if (!it->is_string() || (*it != "human" && *it != "machine"))
            fail(source, "task.format", "expected \"human\" or \"machine\"");
        t.format = it->get<std::string>();
    }
    return t;
}

} // namespace

std::size_t JobConfig::twist_element() const {
    std::string name = task.twist ? *task.twist : default_twist ? *default_twist : group.names[group.identity];
    if (auto i = group.index_of(name)) return *i;
    throw ValidationError("twist element '" + name + "' is not in the group");
}

JobConfig parse_config(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
    JobConfig job;
    job.name = source;
    if (auto it = j.find("name"); it != j.end() && it->is_string()) job.name = it->get<std::string>();
    job.algebra = read_algebra(member(j, "algebra", source, ""), source);
    if (j.contains("group")) {
        job.group = read_group(j["group"], job.algebra, source);
    } else {
        job.group = trivial_group(job.algebra);
    }
    if (j.contains("task")) job.task = read_task(j["task"], source);
    return job;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

JobConfig fixture_job(const std::string& name) {
    const Fixture& f = find_fixture(name);
    JobConfig job;
    job.name = f.name;
    job.algebra = f.algebra;
    job.group = f.group;
    job.default_degree = f.default_degree;
    job.default_twist = f.twist;
    return job;
}

} // namespace thl
