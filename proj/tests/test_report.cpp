#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ehrlab/report.hpp"

using namespace ehrlab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("sweep covers counts, bijection, roots and interlacing") {
    SweepOptions opt;
    opt.max_d = 3;
    opt.max_k = 2;
    const SweepReport rep = run_sweep(opt);
    CHECK(rep.failures == 0);
    // 18 count rows (2 families x 3 dims x k=0..2), 6 bijection, 3 roots,
    // 2 interlacing pairs
    CHECK(rep.rows.size() == 29);

    const ReportRow& first = rep.rows.front();
    CHECK(first.kind == "count");
    CHECK(first.polytope == "Astar");
    CHECK(first.d == 1);
    CHECK(first.k.value() == 0);
    CHECK(first.count.value() == 1);
    CHECK(first.boundary.value() == 0);
    CHECK(first.pass);

    CHECK_THROWS_AS(run_sweep({0, 1, kDefaultBudget, 1e-8, 1e-6}), std::invalid_argument);
}

TEST_CASE("serializations are deterministic byte for byte") {
    SweepOptions opt;
    opt.max_d = 2;
    opt.max_k = 2;
    const std::string csv_a = to_csv(run_sweep(opt));
    const std::string csv_b = to_csv(run_sweep(opt));
    CHECK(csv_a == csv_b);
    CHECK(to_json_text(run_sweep(opt)) == to_json_text(run_sweep(opt)));
}

TEST_CASE("CSV shape") {
    SweepOptions opt;
    opt.max_d = 3;
    opt.max_k = 2;
    const std::string csv = to_csv(run_sweep(opt));
    CHECK(csv.rfind("kind,polytope,d,k,count,boundary,source,pass,detail\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.find("count,Cstar,3,2,35,26,formula+enumeration,PASS,") != std::string::npos);
    CHECK(csv.find("bijection,Cstar,2,1,4,,roundtrip,PASS,b_size=4") != std::string::npos);
    CHECK(csv.find("interlace,Cstar,1,,,,closed-form,PASS,upper=2;strict=true") !=
          std::string::npos);
}

TEST_CASE("JSON shape keeps counts as decimal strings") {
    SweepOptions opt;
    opt.max_d = 2;
    opt.max_k = 1;
    const nlohmann::json j = nlohmann::json::parse(to_json_text(run_sweep(opt)));
    CHECK(j["max_d"] == 2);
    CHECK(j["max_k"] == 1);
    CHECK(j["failures"] == 0);
    REQUIRE(j["rows"].is_array());
    const auto& row = j["rows"][0];
    CHECK(row["kind"] == "count");
    REQUIRE(row["count"].is_string());
    CHECK(row["count"] == "1");
    CHECK(row["k"] == 0);
}

TEST_CASE("fixed-precision float formatting") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(1e-12) == "1e-12");
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("report files are written atomically") {
    const std::string path = "report_roundtrip_test.csv";
    const std::string body = "kind,polytope\ncount,Astar\n";
    REQUIRE(write_text_file(path, body));
    CHECK(slurp(path) == body);
    REQUIRE(write_text_file(path, body + "more\n"));  // overwrite in place
    CHECK(slurp(path) == body + "more\n");
    CHECK_FALSE(std::ifstream(path + ".tmp").good());  // no temp residue
    std::remove(path.c_str());

    CHECK_FALSE(write_text_file("no-such-dir-ehrlab/out.csv", body));
    CHECK_FALSE(std::ifstream("no-such-dir-ehrlab/out.csv").good());
}
