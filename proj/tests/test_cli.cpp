/**************************************************************************
 * test_cli.cpp
 *
 * Copyright 2026 The tgrs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "support/oracles.hpp"
#include "support/reference_data.hpp"
#include "tgrs/cli.hpp"

using namespace tgrs;
using cli::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "tgrs");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "tgrs_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string write_params(const std::string& name, const json& doc) {
    const std::string path = scratch(name);
    std::ofstream(path) << doc.dump();
    return path;
}

json gf37_doc(std::size_t k, const std::vector<std::int64_t>& eta) {
    return {{"q", 37}, {"n", 18}, {"k", k}, {"ell", eta.size() - 1}, {"alpha", testdata::gf37_alpha},
            {"v", testdata::gf37_v}, {"eta", eta}};
}

json gf7_doc(const std::vector<std::int64_t>& eta) {
    return {{"q", 7}, {"k", 3}, {"alpha", testdata::gf7_alpha}, {"v", testdata::gf7_alpha}, {"eta", eta}};
}

std::vector<std::vector<std::int64_t>> rows_of(const json& m) {
    const std::size_t r = m.at("rows"), c = m.at("cols");
    std::vector<std::vector<std::int64_t>> out(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) out[i].push_back(m.at("data")[i * c + j]);
    return out;
}

}  // namespace

TEST(Params, ParsesPrimeField) {
    const TgrsParams p = cli::parse_params(gf37_doc(2, testdata::so_k2_eta));
    EXPECT_EQ(p.n(), 18u);
    EXPECT_EQ(p.k(), 2u);
    EXPECT_EQ(p.ell(), 3u);
    EXPECT_EQ(cli::parse_params(cli::params_to_json(p)).v(), p.v());
}

TEST(Params, DefaultsVToOnes) {
    json doc = gf7_doc({0, 0, 3, 0});
    doc.erase("v");
    const TgrsParams p = cli::parse_params(doc);
    for (auto x : p.v()) EXPECT_EQ(x.v, 1u);
}

TEST(Params, ExtensionFieldElementsAsArrays) {
    const Field f = Field::of_order(9);
    json doc = {{"q", 9}, {"k", 2}, {"alpha", {{1}, {2}, {0, 1}, {1, 1}}}, {"eta", {{0, 1}}}};
    const TgrsParams p = cli::parse_params(doc);
    EXPECT_EQ(p.alpha()[2], f.from_coeffs(std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(cli::params_to_json(p)["alpha"][3], json({1, 1}));
    doc["modulus"] = f.modulus();
    EXPECT_NO_THROW(cli::parse_params(doc));
    doc["modulus"] = {2, 1, 1};  // x^2 + x + 2: another irreducible quadratic
    EXPECT_NO_THROW(cli::parse_params(doc));
    doc["modulus"] = {2, 0, 1};  // x^2 - 1 is reducible
    EXPECT_THROW(cli::parse_params(doc), cli::ParamsError);
    doc.erase("modulus");
    doc["alpha"][0] = 1;  // integers are not accepted for extension fields
    EXPECT_THROW(cli::parse_params(doc), cli::ParamsError);
}

TEST(Params, ErrorsNameTheKey) {
    auto path_of = [](const json& doc) {
        try {
            cli::parse_params(doc);
        } catch (const cli::ParamsError& e) {
            return e.path();
        }
        return std::string("<none>");
    };
    json doc = gf7_doc({0, 0, 3, 0});
    doc.erase("eta");
    EXPECT_EQ(path_of(doc), "eta");
    doc = gf7_doc({0, 0, 3, 0});
    doc["alpha"] = {1, 2, 3, 2, 5};
    EXPECT_EQ(path_of(doc), "alpha");
    doc = gf7_doc({0, 0, 3, 0});
    doc["alpha"][1] = 9;
    EXPECT_EQ(path_of(doc), "alpha[1]");
    doc = gf7_doc({0, 0, 0, 0});
    EXPECT_EQ(path_of(doc), "eta");
    doc = gf7_doc({0, 0, 3, 0});
    doc["v"][4] = 0;
    EXPECT_EQ(path_of(doc), "v");
    doc = gf7_doc({0, 0, 3, 0});
    doc["n"] = 6;
    EXPECT_EQ(path_of(doc), "n");
    doc = gf7_doc({0, 0, 3, 0});
    doc["ell"] = 2;
    EXPECT_EQ(path_of(doc), "ell");
    doc = gf7_doc({0, 0, 3, 0});
    doc["q"] = 12;
    EXPECT_EQ(path_of(doc), "q");
    doc = gf7_doc({0, 0, 3, 0});
    doc["k"] = "three";
    EXPECT_EQ(path_of(doc), "k");
    doc = gf7_doc({0, 0, 3, 0});
    doc["k"] = 1;
    EXPECT_EQ(path_of(doc), "k");
}

TEST(MatrixJson, RoundTrip) {
    const Field f = Field::of_order(25);
    std::mt19937_64 rng(3);
    const Matrix m = oracle::random_matrix(f, 3, 5, rng);
    const json j = cli::matrix_to_json(m);
    EXPECT_EQ(j["rows"], 3);
    EXPECT_EQ(j["cols"], 5);
    EXPECT_EQ(j["data"].size(), 15u);
    EXPECT_EQ(cli::matrix_from_json(f, j), m);
    json bad = j;
    bad["data"].erase(0);
    EXPECT_THROW(cli::matrix_from_json(f, bad), cli::ParamsError);
}

TEST(CliBuild, SelfOrthogonalK2MatchesPrintedG) {
    const auto path = write_params("so_k2.json", gf37_doc(2, testdata::so_k2_eta));
    const Result r = run({"build", "--params", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    EXPECT_EQ(rep["tool"], "tgrs");
    EXPECT_EQ(rep["command"], "build");
    EXPECT_EQ(rep["seed"], 0);
    EXPECT_EQ(rows_of(rep["G"]), testdata::so_k2_G);
    EXPECT_EQ(rep["u"], json(testdata::gf37_u));
    EXPECT_EQ(rep["rank_G"], 2);
    EXPECT_EQ(rep["rank_H"], 16);
    EXPECT_EQ(rep["G_Ht_zero"], true);
}

TEST(CliBuild, OutputRoundTrips) {
    // Re-ingest the emitted matrices and recompute ranks and G H^T = 0.
    for (const auto& eta : testdata::nmds_etas) {
        const auto path = write_params("rt.json", gf7_doc(eta));
        const auto out = scratch("rt_report.json");
        ASSERT_EQ(run({"build", "--params", path, "--out", out}).code, 0);
        std::ifstream in(out);
        const json rep = json::parse(in);
        const TgrsParams p = cli::parse_params(rep["params"]);
        const Matrix G = cli::matrix_from_json(p.field(), rep["G"], "G");
        const Matrix H = cli::matrix_from_json(p.field(), rep["H"], "H");
        EXPECT_EQ(G, generator_matrix(p));
        EXPECT_EQ(rank(G), rep["rank_G"].get<std::size_t>());
        EXPECT_EQ(rank(H), rep["rank_H"].get<std::size_t>());
        EXPECT_EQ((G * H.transpose()).is_zero(), rep["G_Ht_zero"].get<bool>());
        EXPECT_TRUE(rep["G_Ht_zero"].get<bool>());
    }
}

TEST(CliBuild, MissingEta) {
    json doc = gf7_doc({0, 0, 3, 0});
    doc.erase("eta");
    const Result r = run({"build", "--params", write_params("no_eta.json", doc)});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("eta"), std::string::npos) << r.err;
}

TEST(CliBuild, DuplicateAlpha) {
    json doc = gf7_doc({0, 0, 3, 0});
    doc["alpha"] = {1, 2, 3, 3, 5};
    const Result r = run({"build", "--params", write_params("dup.json", doc)});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("alpha"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("repeats"), std::string::npos) << r.err;
}

TEST(CliBuild, InputErrors) {
    EXPECT_EQ(run({"build", "--params", scratch("does_not_exist.json")}).code, 2);
    const auto path = scratch("garbage.json");
    std::ofstream(path) << "{ not json";
    EXPECT_EQ(run({"build", "--params", path}).code, 2);
    EXPECT_EQ(run({"build"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliClassify, NmdsExample) {
    const Result r = run({"classify", "--params", write_params("nmds.json", gf7_doc({0, 0, 3, 0}))});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    EXPECT_EQ(rep["mds_class"], "NMDS");
    EXPECT_EQ(rep["d"], 2);
    EXPECT_EQ(rep["d_dual"], 3);
    EXPECT_EQ(rep["nmds"]["by_distance"], true);
    EXPECT_EQ(rep["nmds"]["by_criterion"], true);
    EXPECT_EQ(rep["nmds"]["agree"], true);
}

TEST(CliClassify, SelfOrthogonalK7) {
    const Result r = run({"classify", "--params", write_params("so_k7.json", gf37_doc(7, testdata::so_k7_eta))});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    EXPECT_EQ(rep["d"], 10);
    EXPECT_EQ(rep["defect"], 2);
    EXPECT_EQ(rep["mds_class"], "2-MDS");
    EXPECT_EQ(rep["projective"], true);
    EXPECT_EQ(rep["self_orthogonal"], true);
    EXPECT_EQ(rep["self_dual"], false);
    EXPECT_EQ(rep["nmds"]["agree"], true);
    EXPECT_EQ(rows_of(rep["G"]), testdata::so_k7_G);
}

TEST(CliClassify, BudgetMarker) {
    const auto path = write_params("so_k7_b.json", gf37_doc(7, testdata::so_k7_eta));
    const Result r = run({"classify", "--params", path, "--budget", "10"});
    EXPECT_EQ(r.code, 3);
    const json rep = json::parse(r.out);
    EXPECT_EQ(rep["d"], "budget_exceeded");
    EXPECT_EQ(rep["budget_exceeded"], true);
    EXPECT_EQ(rep["mds_class"], "budget_exceeded");
    EXPECT_EQ(rep["self_orthogonal"], true);  // budget-free facts still reported
}

TEST(CliSchur, Certificate) {
    const json doc = {{"q", 13}, {"k", 5}, {"alpha", {1, 2, 3, 4, 5, 6, 7, 8, 9}}, {"eta", {1, 1, 1}}};
    const Result r = run({"schur", "--params", write_params("schur.json", doc)});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    EXPECT_EQ(rep["compared"], "dual_square");
    EXPECT_EQ(rep["grs_schur_sq_dual_dim"], 7);
    EXPECT_GE(rep["schur_sq_dual_dim"].get<int>(), 8);
    EXPECT_EQ(rep["non_grs_certificate"]["which"], "dual_square");
}

TEST(CliReference, AllPassAndDeterministic) {
    const Result a = run({"paper-examples"});
    const Result b = run({"paper-examples"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
    EXPECT_NE(a.out.find("ALL PASS (8/8 fixtures)"), std::string::npos) << a.out;
    const auto p1 = scratch("ex1.json"), p2 = scratch("ex2.json");
    ASSERT_EQ(run({"paper-examples", "--out", p1, "--seed", "5"}).code, 0);
    ASSERT_EQ(run({"paper-examples", "--out", p2, "--seed", "5"}).code, 0);
    std::ifstream f1(p1), f2(p2);
    const std::string s1((std::istreambuf_iterator<char>(f1)), {}), s2((std::istreambuf_iterator<char>(f2)), {});
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(json::parse(s1)["seed"], 5);
    EXPECT_EQ(json::parse(s1)["all_pass"], true);
}

TEST(CliReference, FixturesAgreeWithTestData) {
    const auto fx = cli::default_reference_fixtures();
    ASSERT_EQ(fx.size(), 8u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(fx[i].eta, testdata::nmds_etas[i]);
        EXPECT_EQ((*fx[i].G)[2], testdata::nmds_G_row2[i]);
    }
    EXPECT_EQ(*fx[6].G, testdata::so_k2_G);
    EXPECT_EQ(*fx[7].G, testdata::so_k7_G);
    EXPECT_EQ(*fx[6].u, testdata::gf37_u);
}

TEST(CliReference, TamperedFixtureFails) {
    auto fx = cli::default_reference_fixtures();
    fx.resize(1);
    fx[0].d = 3;
    std::ostringstream out;
    EXPECT_EQ(cli::run_reference_examples(fx, out), 1);
    EXPECT_NE(out.str().find("FAIL nmds-gf7-eta-0-0-3-0 d: expected 3, computed 2"), std::string::npos) << out.str();

    fx = cli::default_reference_fixtures();
    fx.resize(1);
    (*fx[0].G)[2][1] = 5;
    out.str("");
    EXPECT_EQ(cli::run_reference_examples(fx, out), 1);
    EXPECT_NE(out.str().find("G[2][1] 5 -> 4"), std::string::npos) << out.str();
}

TEST(CliSearch, NmdsFindsAllSixTwists) {
    const Result r = run({"search", "--mode", "nmds", "--q", "7", "--n", "5", "--k", "3", "--ell", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    std::set<std::vector<std::int64_t>> found;
    for (const auto& h : rep["hits"]) {
        found.insert(h["eta"].get<std::vector<std::int64_t>>());
        EXPECT_EQ(h["certificate"]["d"], 2);
        EXPECT_EQ(h["certificate"]["d_dual"], 3);
    }
    for (const auto& eta : testdata::nmds_etas) EXPECT_TRUE(found.count(eta)) << json(eta).dump();
    EXPECT_EQ(rep["count"], rep["hits"].size());
    EXPECT_EQ(rep["eta_space"], 2400);
}

TEST(CliSearch, EnumerationIndex) {
    // eta's index is its base-q value with eta_0 most significant.
    const Result r = run({"search", "--mode", "nmds", "--q", "7", "--n", "5", "--k", "3", "--ell", "3",
                          "--start-index", "21", "--limit", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    ASSERT_EQ(rep["count"], 1);
    EXPECT_EQ(rep["hits"][0]["index"], 21);
    EXPECT_EQ(rep["hits"][0]["eta"], json({0, 0, 3, 0}));
}

TEST(CliSearch, NonGrsLimit) {
    const Result r =
        run({"search", "--mode", "non_grs", "--q", "13", "--n", "9", "--k", "5", "--ell", "2", "--limit", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    ASSERT_EQ(rep["count"], 5);
    for (const auto& h : rep["hits"]) {
        EXPECT_EQ(h["certificate"]["which"], "dual_square");
        EXPECT_GE(h["certificate"]["computed_dim"].get<int>(), 8);
    }
}

TEST(CliSearch, SelfOrthogonalReproducesK2) {
    const Result r = run({"search", "--mode", "self_orthogonal", "--q", "37", "--n", "18", "--k", "2", "--ell", "3",
                          "--mu", "36", "--start-index", "52060", "--limit", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rep = json::parse(r.out);
    ASSERT_EQ(rep["count"], 1);
    const json& h = rep["hits"][0];
    EXPECT_EQ(h["eta"], json(testdata::so_k2_eta));
    EXPECT_EQ(h["alpha"], json(testdata::gf37_alpha));
    EXPECT_EQ(h["v"], json(testdata::gf37_v));
    EXPECT_EQ(h["lambda"], 1);

    // Without a fixed mu or start, the stream still reaches the same construction.
    const Result all = run({"search", "--mode", "self_orthogonal", "--q", "37", "--n", "18", "--k", "2", "--ell",
                            "3", "--start-index", "52060", "--limit", "4"});
    ASSERT_EQ(all.code, 0);
    bool seen = false;
    const json stream = json::parse(all.out);
    for (const auto& hit : stream["hits"])
        seen = seen || (hit["mu"] == 36 && hit["v"] == json(testdata::gf37_v) && hit["eta"] == h["eta"]);
    EXPECT_TRUE(seen);
}

TEST(CliSearch, SeedRotatesDeterministically) {
    const std::vector<std::string> args = {"search", "--mode", "non_grs", "--q", "13", "--n", "9",
                                           "--k",    "5",      "--ell",   "2",  "--limit", "3"};
    auto with_seed = args;
    with_seed.insert(with_seed.end(), {"--seed", "42"});
    const Result a = run(with_seed), b = run(with_seed), c = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(json::parse(a.out)["first_index"], json::parse(c.out)["first_index"]);
    EXPECT_EQ(json::parse(a.out)["seed"], 42);
}

TEST(CliSearch, CsvAndEmptyResult) {
    const Result r = run({"search", "--mode", "nmds", "--q", "7", "--n", "5", "--k", "3", "--ell", "3",
                          "--start-index", "21", "--limit", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "index,eta,d,d_dual\n21,0 0 3 0,2,3\n");
    // q = 7, n = 4, k = 2, ell = 0: the sweep finishes and an empty stream is not an error.
    const Result e = run({"search", "--mode", "self_orthogonal", "--q", "7", "--n", "4", "--k", "2", "--ell", "0"});
    EXPECT_EQ(e.code, 2);  // 4 does not divide 6
    const Result z = run({"search", "--mode", "self_orthogonal", "--q", "7", "--n", "6", "--k", "2", "--ell", "2"});
    EXPECT_EQ(z.code, 0) << z.err;
    EXPECT_EQ(json::parse(z.out)["count"], 0);
}

TEST(CliSearch, BudgetStops) {
    const Result r = run({"search", "--mode", "nmds", "--q", "7", "--n", "5", "--k", "3", "--ell", "3",
                          "--budget", "3"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(r.out)["budget_exceeded"], true);
}
