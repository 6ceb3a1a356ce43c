#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dicyclic/cli.hpp"

using dicyclic::cli::run_cli;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// The subset of JSON Schema used by the fixture: type, required, properties, items, enum.
void validate(const Json& schema, const Json& value, const std::string& path, std::vector<std::string>& errors)
{
    if (schema.contains("type")) {
        const auto t = schema["type"].get<std::string>();
        const bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                        (t == "string" && value.is_string()) || (t == "number" && value.is_number());
        if (!ok) {
            errors.push_back(path + ": expected " + t);
            return;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"])
            found = found || e == value;
        if (!found)
            errors.push_back(path + ": value not in enum");
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>()))
                errors.push_back(path + ": missing " + key.get<std::string>());
    if (schema.contains("properties"))
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key))
                validate(sub, value[key], path + "." + key, errors);
    if (schema.contains("items"))
        for (std::size_t i = 0; i < value.size(); ++i)
            validate(schema["items"], value[i], path + "[" + std::to_string(i) + "]", errors);
}

std::vector<std::string> schema_errors(const Json& doc)
{
    std::ifstream f(fs::path(DICYCLIC_FIXTURES) / "report_schema.json");
    const auto schema = Json::parse(f);
    std::vector<std::string> errors;
    validate(schema, doc, "$", errors);
    return errors;
}

fs::path fresh_dir(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("dicyclic_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST(Cli, CensusTypes)
{
    auto r = run({"census", "--n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = Json::parse(r.out);
    EXPECT_TRUE(schema_errors(doc).empty());
    const auto& data = doc["report"]["claims"][0]["data"];
    EXPECT_EQ(data["unordered"].size(), 2u);
    EXPECT_EQ(data["automorphism_group_order"], 12);

    r = run({"census", "--n", "4"});
    ASSERT_EQ(r.code, 0);
    doc = Json::parse(r.out);
    EXPECT_EQ(doc["report"]["claims"][0]["data"]["unordered"].size(), 1u);
    EXPECT_EQ(doc["report"]["claims"][0]["data"]["unordered"][0]["type"], Json::parse("[8,4,4]"));
}

TEST(Cli, EverySubcommandMatchesTheSchema)
{
    const std::vector<std::vector<std::string>> invocations{
        {"census", "--n", "5"},
        {"monodromy", "--n", "3", "--case", "II"},
        {"hyper", "--n", "4"},
        {"pseudo-real", "--n", "2", "--q", "2"},
        {"curves", "--n", "3", "--model", "Rn_cyclic", "--trials", "20"},
        {"genus", "--n", "4", "--mode", "pure"},
    };
    for (const auto& args : invocations) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
        const auto doc = Json::parse(r.out);
        const auto errors = schema_errors(doc);
        EXPECT_TRUE(errors.empty()) << args[0] << ": " << (errors.empty() ? "" : errors.front());
        EXPECT_EQ(doc["report"]["command"], args[0]);
        EXPECT_EQ(doc["report"]["status"], "pass");
    }
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"census"}).code, 2);
    EXPECT_EQ(run({"census", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"census", "--n", "abc"}).code, 2);
    EXPECT_EQ(run({"monodromy", "--n", "4", "--case", "II"}).code, 2);
    EXPECT_EQ(run({"monodromy", "--n", "4", "--case", "III"}).code, 2);
    EXPECT_EQ(run({"hyper", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"pseudo-real", "--n", "2", "--q", "1"}).code, 2);
    EXPECT_EQ(run({"curves", "--n", "3", "--model", "Xn"}).code, 2);
    EXPECT_EQ(run({"curves", "--n", "4", "--model", "Rn_cyclic"}).code, 2);
    EXPECT_EQ(run({"genus", "--n", "3", "--g-max", "1"}).code, 3);
    EXPECT_EQ(run({"hyper", "--n", "3", "--gamma-max", "0", "--r-max", "0"}).code, 3);
    EXPECT_EQ(run({"paper-report", "--n-range", "5..3", "--out", "x"}).code, 2);
    EXPECT_EQ(run({"paper-report", "--n-range", "1..3", "--out", "x"}).code, 2);
    EXPECT_EQ(run({"paper-report", "--n-range", "three", "--out", "x"}).code, 2);
    EXPECT_EQ(run({"curves", "--n", "3", "--model", "Sn_cyclic", "--tol", "1e-30"}).code, 1);
}

TEST(Cli, DotExport)
{
    const auto dir = fresh_dir("dot");
    const auto file = dir / "n3.dot";
    const auto r = run({"monodromy", "--n", "3", "--case", "I", "--dot", file.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(file);
    std::stringstream ss;
    ss << f.rdbuf();
    const auto dot = ss.str();
    EXPECT_EQ(dot.rfind("graph dessin {", 0), 0u);
    std::size_t edges = 0;
    for (auto pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1))
        ++edges;
    EXPECT_EQ(edges, 12u);
}

TEST(Cli, FullReportIsDeterministic)
{
    const auto a = fresh_dir("full_a"), b = fresh_dir("full_b");
    const auto ra = run({"paper-report", "--n-range", "2..4", "--out", a.string(), "--trials", "30"});
    const auto rb = run({"paper-report", "--n-range", "2..4", "--out", b.string(), "--trials", "30"});
    // n = 3 exhibits the quotient-genus counterexample, so the run reports a failing claim
    EXPECT_EQ(ra.code, 1);
    EXPECT_EQ(rb.code, 1);
    EXPECT_TRUE(fs::exists(a / "summary.md"));
    for (int n = 2; n <= 4; ++n) {
        const auto name = "n" + std::to_string(n) + ".json";
        std::ifstream fa(a / name), fb(b / name);
        const auto da = Json::parse(fa), db = Json::parse(fb);
        EXPECT_TRUE(schema_errors(da).empty());
        EXPECT_EQ(da["report"], db["report"]) << name;
        for (const auto& c : da["report"]["claims"])
            if (c["status"] == "fail") {
                EXPECT_EQ(c["id"], "covering.quotient_genus") << name;
            }
    }
    std::ifstream two(a / "n2.json");
    EXPECT_EQ(Json::parse(two)["report"]["status"], "pass");
}

TEST(Cli, HelpExitsCleanly)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("paper-report"), std::string::npos);
}
