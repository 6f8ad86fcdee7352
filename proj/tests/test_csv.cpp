#include <doctest.h>

#include <fstream>

#include "qsmote/csv.hpp"
#include "qsmote/errors.hpp"
#include "test_util.hpp"

using namespace qsmote;

namespace {

std::string write_temp(const std::string& tag, const std::string& contents) {
    const auto dir = testutil::temp_dir("csv_" + tag);
    const auto path = dir / "data.csv";
    std::ofstream out(path);
    out << contents;
    return path.string();
}

}  // namespace

TEST_CASE("labels encode by order of first appearance") {
    const std::string path = write_temp("encode", "x,label\n1.0,B\n2.0,A\n3.0,B\n");
    const LoadedCsv csv = load_csv(path);
    CHECK(csv.data.y == std::vector<int>{0, 1, 0});
    CHECK(csv.label_names == std::vector<std::string>{"B", "A"});
    CHECK(csv.feature_names == std::vector<std::string>{"x"});
    CHECK(csv.data.x(2, 0) == 3.0);
}

TEST_CASE("non-numeric columns are rejected by name") {
    const std::string path = write_temp(
        "timestamp", "Time_Stamp,x,label\n2024-12-24 10:00,1.0,0\n2024-12-24 10:05,2.0,1\n");
    try {
        load_csv(path);
        FAIL("expected NonNumericFeature");
    } catch (const NonNumericFeature& e) {
        CHECK(std::string(e.what()).find("Time_Stamp") != std::string::npos);
    }
}

TEST_CASE("the committed fixture loads with its documented shape") {
    const LoadedCsv csv = load_csv(testutil::fixture("blobs4.csv"));
    CHECK(csv.data.n_rows() == 300);
    CHECK(csv.data.n_features() == 6);
    CHECK(csv.data.n_classes() == 4);
    const auto counts = class_counts(csv.data.y);
    CHECK(counts.at(0) == 200);
    CHECK(counts.at(1) == 50);
    CHECK(counts.at(2) == 30);
    CHECK(counts.at(3) == 20);
}

TEST_CASE("error taxonomy distinguishes structural problems") {
    CHECK_THROWS_AS(load_csv("/nonexistent/nope.csv"), EmptyFile);
    CHECK_THROWS_AS(load_csv(write_temp("empty", "")), EmptyFile);
    CHECK_THROWS_AS(load_csv(write_temp("headeronly", "x,label\n")), EmptyFile);
    CHECK_THROWS_AS(load_csv(write_temp("nolabel", "x,y\n1,2\n")), MissingLabelColumn);
    CHECK_THROWS_AS(load_csv(write_temp("nan", "x,label\nnan,0\n1.0,1\n")), NaNValue);
    CHECK_THROWS_AS(load_csv(write_temp("inf", "x,label\ninf,0\n1.0,1\n")), NaNValue);
}

TEST_CASE("custom label column names work") {
    const std::string path = write_temp("fault", "a,fault,b\n1,bad,2\n3,good,4\n");
    const LoadedCsv csv = load_csv(path, "fault");
    CHECK(csv.feature_names == std::vector<std::string>{"a", "b"});
    CHECK(csv.data.y == std::vector<int>{0, 1});
    CHECK(csv.data.x(1, 1) == 4.0);
}

TEST_CASE("write then load round-trips exactly") {
    Rng rng = make_rng(21);
    LoadedCsv csv;
    csv.data.x = testutil::random_matrix(25, 4, rng) * 1e3;
    csv.data.x(0, 0) = 1.0 / 3.0;
    csv.data.x(1, 1) = -7.25e-13;
    for (int i = 0; i < 25; ++i) csv.data.y.push_back(static_cast<int>(uniform_below(rng, 3)));
    // first appearances in 0,1,2 order so the reload encoding matches
    csv.data.y[0] = 0;
    csv.data.y[1] = 1;
    csv.data.y[2] = 2;
    csv.feature_names = {"a", "b", "c", "d"};
    csv.label_names = {"zero", "one", "two"};

    const auto dir = testutil::temp_dir("roundtrip");
    write_dataset_csv((dir / "out.csv").string(), csv);
    const LoadedCsv back = load_csv((dir / "out.csv").string());

    CHECK(back.data.x == csv.data.x);  // %.17g round trip is exact
    CHECK(back.data.y == csv.data.y);
    CHECK(back.label_names == csv.label_names);
}
