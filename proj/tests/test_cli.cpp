#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

#include "isk4/families.hpp"
#include "isk4/graph6.hpp"

using json = nlohmann::json;
using namespace isk4;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ISK4LAB_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    f << body;
}

// Minimal JSON-schema checker covering the subset the shipped schema uses:
// type, enum, properties/required/additionalProperties, items, oneOf, $ref.
struct SchemaChecker {
    const json& root;

    bool type_ok(const json& value, const std::string& t) const {
        if (t == "object") return value.is_object();
        if (t == "array") return value.is_array();
        if (t == "string") return value.is_string();
        if (t == "integer") return value.is_number_integer();
        if (t == "number") return value.is_number();
        if (t == "boolean") return value.is_boolean();
        if (t == "null") return value.is_null();
        return false;
    }

    const json& resolve(const json& schema) const {
        if (schema.contains("$ref")) {
            std::string ref = schema["$ref"];
            REQUIRE(ref.rfind("#/", 0) == 0);
            const json* cur = &root;
            size_t pos = 2;
            while (pos < ref.size()) {
                size_t next = ref.find('/', pos);
                std::string key = ref.substr(pos, next == std::string::npos ? next : next - pos);
                cur = &cur->at(key);
                pos = next == std::string::npos ? ref.size() : next + 1;
            }
            return *cur;
        }
        return schema;
    }

    bool check(const json& value, const json& schema_in) const {
        const json& schema = resolve(schema_in);
        if (schema.contains("oneOf")) {
            int hits = 0;
            for (const auto& alt : schema["oneOf"])
                if (check(value, alt)) ++hits;
            return hits == 1;
        }
        if (schema.contains("enum")) {
            for (const auto& e : schema["enum"])
                if (value == e) return true;
            return false;
        }
        if (schema.contains("type") && !type_ok(value, schema["type"])) return false;
        if (value.is_object()) {
            if (schema.contains("required"))
                for (const auto& r : schema["required"])
                    if (!value.contains(r.get<std::string>())) return false;
            const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
            bool extra_ok = !schema.contains("additionalProperties") ||
                            schema["additionalProperties"].get<bool>();
            for (const auto& [k, v] : value.items()) {
                if (props && props->contains(k)) {
                    if (!check(v, props->at(k))) return false;
                } else if (!extra_ok) {
                    return false;
                }
            }
        }
        if (value.is_array() && schema.contains("items"))
            for (const auto& item : value)
                if (!check(item, schema["items"])) return false;
        return true;
    }
};

json schema() {
    std::ifstream f(std::string(ISK4LAB_SOURCE_DIR) + "/schemas/report.schema.json");
    REQUIRE(f);
    return json::parse(f);
}

}  // namespace

TEST_CASE("cli: decompose a complete bipartite graph") {
    write_file("/tmp/isk4lab_k33.g6", write_graph6(complete_bipartite(3, 3)) + "\n");
    auto r = run("decompose /tmp/isk4lab_k33.g6 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "decompose");
    CHECK(j["results"][0]["decomposition"]["outcome"] == "complete_bipartite");
    CHECK(j["results"][0]["decomposition"]["verified"] == true);
    json sch = schema();
    CHECK(SchemaChecker{sch}.check(j, sch));
}

TEST_CASE("cli: color rejects the Petersen graph with a witness") {
    write_file("/tmp/isk4lab_pet.g6", write_graph6(petersen_graph()) + "\n");
    auto r = run("color /tmp/isk4lab_pet.g6 --format json");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j["results"][0]["error"]["type"] == "out_of_class");
    CHECK(j["results"][0]["error"]["predicate"] == "isk4-free");
    CHECK(!j["results"][0]["error"]["witness"].empty());
    json sch = schema();
    CHECK(SchemaChecker{sch}.check(j, sch));
}

TEST_CASE("cli: color a 5-cycle") {
    write_file("/tmp/isk4lab_c5.g6", write_graph6(cycle_graph(5)) + "\n");
    auto r = run("color /tmp/isk4lab_c5.g6 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["results"][0]["proper"] == true);
    json sch = schema();
    CHECK(SchemaChecker{sch}.check(j, sch));
}

TEST_CASE("cli: analyze validates against the schema") {
    write_file("/tmp/isk4lab_mix.g6",
               write_graph6(complete_graph(4)) + "\n" + write_graph6(theta_graph(3, 2)) + "\n");
    auto r = run("analyze /tmp/isk4lab_mix.g6 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["results"].size() == 2);
    CHECK(j["results"][0]["profile"]["witnesses"]["triangle"].is_array());
    CHECK(j["results"][1]["profile"]["series_parallel"] == true);
    json sch = schema();
    CHECK(SchemaChecker{sch}.check(j, sch));
}

TEST_CASE("cli: verify suite and hunt exit codes") {
    auto r = run("verify lemma_ca --n 6 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["report"]["violations"].empty());
    json sch = schema();
    CHECK(SchemaChecker{sch}.check(j, sch));

    auto h = run("hunt conj1 --n 5 --format json");
    CHECK(h.exit_code == 0);
    json hj = json::parse(h.out);
    CHECK(SchemaChecker{sch}.check(hj, sch));
}

TEST_CASE("cli: verify accepts a corpus file") {
    write_file("/tmp/isk4lab_corpus.g6",
               write_graph6(cycle_graph(5)) + "\n" + write_graph6(complete_graph(4)) + "\n");
    auto r = run("verify theorem_maindecomp --corpus /tmp/isk4lab_corpus.g6 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["report"]["graphs_scanned"] == 1);
}

TEST_CASE("cli: gen emits decodable graph6 with filters applied") {
    auto r = run("gen --n 5 --filter triangle-free,connected");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        Graph g = parse_graph6(line);
        CHECK(g.vertex_count() == 5);
        CHECK(is_connected(g));
        ++count;
    }
    // connected triangle-free graphs on 5 vertices
    CHECK(count == 6);
}

TEST_CASE("cli: usage and io errors exit 2") {
    CHECK(run("decompose /tmp/isk4lab_does_not_exist.g6").exit_code == 2);
    CHECK(run("verify not_a_suite --n 5").exit_code == 2);
    CHECK(run("gen --n 11").exit_code == 2);  // cap exceeded without filters
    write_file("/tmp/isk4lab_bad.g6", "~~~broken\n");
    CHECK(run("decompose /tmp/isk4lab_bad.g6").exit_code == 2);
}

TEST_CASE("cli: verify output is deterministic across runs and jobs") {
    auto a = run("verify lemma_w1 --n 7 --format json");
    auto b = run("verify lemma_w1 --n 7 --jobs 3 --format json");
    json ja = json::parse(a.out), jb = json::parse(b.out);
    ja["report"].erase("wall_seconds");
    jb["report"].erase("wall_seconds");
    CHECK(ja == jb);
}

TEST_CASE("cli: text and json modes carry the same facts") {
    write_file("/tmp/isk4lab_c5.g6", write_graph6(cycle_graph(5)) + "\n");
    auto t = run("decompose /tmp/isk4lab_c5.g6");
    auto j = run("decompose /tmp/isk4lab_c5.g6 --format json");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("series_parallel") != std::string::npos);
    json parsed = json::parse(j.out);
    CHECK(parsed["results"][0]["decomposition"]["outcome"] == "series_parallel");
}
