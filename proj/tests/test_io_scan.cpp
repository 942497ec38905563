#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace detloci;
using namespace testsupport;

TEST(Json, ParseDegreeData) {
    auto d = degree_data_from_string(R"({"b":[0,0],"a":[1,1,1],"n":1})");
    EXPECT_EQ(d, twisted_cubic());
    auto e = degree_data_from_string(R"({"b":[0],"a":[1,1],"n":0,"char":101})");
    EXPECT_EQ(e.charK, 101);
}

TEST(Json, ParseErrors) {
    EXPECT_THROW(degree_data_from_string("{"), InputError);
    EXPECT_THROW(degree_data_from_string("[1,2]"), InputError);
    EXPECT_THROW(degree_data_from_string(R"({"b":[0],"a":[1,1]})"), InputError);
    EXPECT_THROW(degree_data_from_string(R"({"b":[0.5],"a":[1,1],"n":1})"), InputError);
    EXPECT_THROW(degree_data_from_string(R"({"b":[0],"a":[1,1],"n":1,"char":"x"})"), InputError);
    EXPECT_THROW(degree_data_from_string(R"({"b":[0],"a":[1],"n":1})"), SizeError);
    EXPECT_THROW(degree_data_from_string(R"({"b":[0],"a":[1,1],"n":1,"char":9})"), CharError);
}

TEST(Json, RoundTrip) {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 50; ++k) {
        auto d = random_nonempty(rng);
        EXPECT_EQ(degree_data_from_json(to_json(d)), d);
    }
}

TEST(Json, Reports) {
    auto r = to_json(dimension_report(curve_3x6()));
    EXPECT_EQ(r["dimW"], "64");
    EXPECT_EQ(r["dimWBound"], "64");
    EXPECT_EQ(r["crossCheckOK"], true);
    EXPECT_EQ(to_json(dimension_report(validate({0}, {0, 2}, 1))), json({{"empty", true}}));
    auto h = to_json(hilbert_polynomial(curve_3x7()));
    EXPECT_EQ(h["poly"], json({"-14", "21"}));
    EXPECT_EQ(h["degree"], "21");
    EXPECT_EQ(h["genus"], 15);
    EXPECT_TRUE(to_json(hilbert_polynomial(surface_2x6()))["genus"].is_null());
    auto v = to_json(classify(surface_2x6()));
    EXPECT_EQ(v["dim"]["rule"], "R5");
    EXPECT_EQ(v["component"]["status"], "Conditional");
    EXPECT_EQ(v["component"]["missing"].size(), 2u);
    EXPECT_EQ(to_json(eagon_northcott(twisted_cubic())), json::parse("[[0],[-2,-2,-2],[-3,-3]]"));
}

TEST(Json, MatrixEntries) {
    auto j = to_json(lemma_matrix(twisted_cubic(), LemmaVariant::Standard));
    EXPECT_EQ(j["entries"].size(), 6u);
    EXPECT_EQ(j["entries"][0]["terms"][0]["e"], json({0, 1, 0, 0}));
}

TEST(Scan, EqualDegreeRowsMatchConjecture) {
    ScanRange r;
    r.t = {1, 3};
    r.c = {2, 5};
    r.n = {0, 2};
    r.degreeBox = 2;
    std::ostringstream os;
    const auto rows = run_scan(r, os, 2);
    EXPECT_EQ(rows, 3u * 4u * 3u * 2u);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, kScanHeader);
    std::size_t seen = 0;
    while (std::getline(is, line)) {
        ++seen;
        std::vector<std::string> cols;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) cols.push_back(f);
        if (!line.empty() && line.back() == ',') cols.emplace_back();
        ASSERT_EQ(cols.size(), 17u) << line;
        EXPECT_EQ(cols[6], "0");
        EXPECT_EQ(cols[10], cols[11]) << line;
        EXPECT_EQ(cols[12], "1");
    }
    EXPECT_EQ(seen, rows);
}

TEST(Scan, DeterministicAcrossThreadCounts) {
    ScanRange r;
    r.t = {1, 2};
    r.c = {2, 3};
    r.n = {0, 1};
    r.degreeBox = 2;
    r.mode = ScanRange::Mode::Full;
    std::ostringstream a, b, c;
    run_scan(r, a, 1);
    run_scan(r, b, 3);
    run_scan(r, c, 1);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str(), c.str());
}

TEST(Scan, EmptyShapesAreFlagged) {
    ScanRange r;
    r.t = {1, 1};
    r.c = {2, 2};
    r.n = {1, 1};
    r.degreeBox = 2;
    r.mode = ScanRange::Mode::Full;
    std::ostringstream os;
    run_scan(r, os, 1);
    EXPECT_NE(os.str().find("1,2,1,0,0,0 2,1,,,,,,,Empty,,Unknown,\n"), std::string::npos);
    EXPECT_EQ(scan_row(validate({0}, {0, 2}, 1), false), "1,2,1,0,0,0 2,1,,,,,,,Empty,,Unknown,");
}

TEST(Scan, RangeValidation) {
    ScanRange r;
    r.t = {2, 1};
    EXPECT_THROW(scan_instances(r), InputError);
    r = ScanRange{};
    r.c = {1, 2};
    EXPECT_THROW(scan_instances(r), SizeError);
    r = ScanRange{};
    r.charK = 6;
    EXPECT_THROW(scan_instances(r), CharError);
    r = ScanRange{};
    r.degreeBox = 0;
    EXPECT_THROW(scan_instances(r), InputError);
}
