#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"

using dirichlet::cli::ExitCode;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json j() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dirichlet::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(DIRICHLET_FIXTURES) + "/" + name; }

const json* bound(const json& rep, const std::string& name) {
    for (const auto& b : rep["bounds"]) {
        if (b["name"] == name) return &b;
    }
    return nullptr;
}

} // namespace

TEST(CliSpectrum, Families) {
    auto star = cli({"spectrum", "--family", "star:3"});
    ASSERT_EQ(star.code, ExitCode::kOk) << star.err;
    EXPECT_DOUBLE_EQ(star.j()["lambda1"].get<double>(), 3.0);
    EXPECT_EQ(star.j()["eigenfunction"], json::array({1.0}));

    auto path = cli({"spectrum", "--family", "path:5"});
    ASSERT_EQ(path.code, ExitCode::kOk);
    const double lam = path.j()["lambda1"].get<double>();
    EXPECT_NEAR(lam, 4 * std::pow(std::sin(std::numbers::pi / 8), 2), 1e-11);
    EXPECT_EQ(path.j()["eigenvalues"].size(), 3u);
}

TEST(CliSpectrum, GraphFile) {
    auto r = cli({"spectrum", fixture("slp_2_1_0_1_0.json")});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    auto ev = r.j()["eigenvalues"];
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0].get<double>(), (5 - std::sqrt(5.0)) / 2, 1e-11);
    EXPECT_NEAR(ev[1].get<double>(), (5 + std::sqrt(5.0)) / 2, 1e-11);
}

TEST(CliSpectrum, Mohar) {
    auto r = cli({"spectrum", "--family", "mohar:10,3"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_TRUE(r.j()["holds"].get<bool>());
    EXPECT_GE(r.j()["mu2"].get<double>(), r.j()["lower_4_over_nD"].get<double>());
}

TEST(CliBounds, StarCertifiesWithEquality) {
    auto r = cli({"bounds", "--family", "star:3"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    auto j = r.j();
    EXPECT_DOUBLE_EQ(j["lambda1"].get<double>(), 3.0);
    ASSERT_NE(bound(j, "edge_ratio"), nullptr);
    EXPECT_TRUE((*bound(j, "edge_ratio"))["equality"].get<bool>());
    EXPECT_TRUE((*bound(j, "min_degree"))["equality"].get<bool>());
}

TEST(CliBounds, PathCliquesProduct) {
    auto r = cli({"bounds", "--family", "pc:2,3", "--format", "table"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_NE(r.out.find("CERTIFIED"), std::string::npos);
    auto pos = r.err.find("= ");
    ASSERT_NE(pos, std::string::npos);
    const double product = std::stod(r.err.substr(pos + 2));
    EXPECT_GE(product, 1.0);
    EXPECT_LE(product, 12.0);
}

TEST(CliBounds, RecheckReport) {
    auto bad = cli({"bounds", "--report", fixture("corrupted_report.json")});
    EXPECT_EQ(bad.code, ExitCode::kCertificationFailure);
    EXPECT_FALSE((*bound(bad.j(), "volume_radius"))["holds"].get<bool>());
    EXPECT_EQ(cli({"bounds", "--report", fixture("missing.json")}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({"bounds", "--report", fixture("slp_2_1_0_1_0.json")}).code, ExitCode::kValidationError);
}

TEST(CliDecompose, Examples) {
    auto tc = cli({"decompose", "--family", "path:5", "--method", "tree-center"});
    ASSERT_EQ(tc.code, ExitCode::kOk) << tc.err;
    EXPECT_EQ(tc.j()["p"], 1);
    EXPECT_EQ(tc.j()["max_length"], 2);

    auto forest = cli({"decompose", "--family", "star:3"});
    ASSERT_EQ(forest.code, ExitCode::kOk);
    EXPECT_EQ(forest.j()["paths"], json::array({json::array({0, 1})}));

    auto not_tree = cli({"decompose", "--family", "pc:2,2", "--method", "tree-center"});
    EXPECT_EQ(not_tree.code, ExitCode::kValidationError);
}

TEST(CliExtremal, SmallCases) {
    auto r = cli({"extremal", "-a", "1", "-k", "3"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_EQ(r.j()["checks"].size(), 3u);
    for (const auto& c : r.j()["checks"]) EXPECT_TRUE(c["passed"].get<bool>());

    auto even = cli({"extremal", "-a", "1", "-k", "4", "--which", "ak+2", "--jobs", "2"});
    ASSERT_EQ(even.code, ExitCode::kOk);
    EXPECT_EQ(even.j()["checks"][0]["search"]["argmax"].size(), 3u);

    auto na = cli({"extremal", "-a", "1", "-k", "2", "--which", "ak+2", "--format", "table"});
    EXPECT_EQ(na.code, ExitCode::kOk);
    EXPECT_NE(na.out.find("n/a"), std::string::npos);

    EXPECT_EQ(cli({"extremal", "-a", "1", "-k", "9"}).code, ExitCode::kValidationError);
}

TEST(CliErrors, ValidationExitCode) {
    EXPECT_EQ(cli({"spectrum", "--family", "star:3", "--tol", "-1"}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({"spectrum", "--family", "hexagon:3"}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({"spectrum", "--family", "star:x"}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({"spectrum", "--family", "mohar:2"}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({"bounds", "--family", "mohar:3,2"}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({"spectrum"}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({}).code, ExitCode::kValidationError);
    EXPECT_EQ(cli({"spectrum", "--format", "xml", "--family", "star:3"}).code, ExitCode::kValidationError);
}

TEST(CliOutput, DeterministicJson) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"bounds", "--family", "random:30", "--seed", "7"},
          std::vector<std::string>{"extremal", "-a", "1", "-k", "4", "--jobs", "3"},
          std::vector<std::string>{"decompose", "--family", "random-tree:60"}}) {
        auto first = cli(args);
        auto second = cli(args);
        EXPECT_EQ(first.code, second.code);
        EXPECT_EQ(first.out, second.out);
    }
}

TEST(CliOutput, GenerateRoundTrips) {
    auto gen = cli({"generate", "--family", "pc:2,3"});
    ASSERT_EQ(gen.code, ExitCode::kOk);
    auto g = gen.j();
    EXPECT_EQ(g["boundary"].size(), 2u);
    auto csv = cli({"spectrum", "--family", "path:4", "--format", "csv"});
    EXPECT_EQ(csv.out.substr(0, 17), "index,eigenvalue\n");
}
