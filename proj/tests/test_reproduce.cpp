#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "qlsat/reproduce.hpp"

using namespace qlsat;

namespace {

ReproduceOptions small_options(std::vector<int> dims) {
    ReproduceOptions opt;
    opt.dims = std::move(dims);
    opt.samples = 12;
    return opt;
}

int count_status(const ReproduceReport& r, TheoremCheck::Status s) {
    int n = 0;
    for (const TheoremCheck& c : r.checks) n += (c.status == s);
    return n;
}

}  // namespace

TEST_CASE("every battery passes at dimensions 2 and 3", "[reproduce]") {
    ReproduceReport r = run_reproduction(small_options({2, 3}));
    CHECK(r.checks.size() == 11);
    CHECK(count_status(r, TheoremCheck::Status::Fail) == 0);
    CHECK(count_status(r, TheoremCheck::Status::Skipped) == 0);
    CHECK(r.all_passed());

    std::string text = report_to_text(r);
    CHECK(text.find("all checks passed") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("dimension 1 skips the separation batteries and passes the rest", "[reproduce]") {
    ReproduceReport r = run_reproduction(small_options({1}));
    CHECK(r.all_passed());
    CHECK(count_status(r, TheoremCheck::Status::Fail) == 0);
    // The subspace witness and everything built on it needs d >= 2.
    CHECK(count_status(r, TheoremCheck::Status::Skipped) == 4);

    std::string text = report_to_text(r);
    CHECK(text.find("SKIPPED") != std::string::npos);
    CHECK(text.find("needs dimension at least 2") != std::string::npos);
}

TEST_CASE("reports are deterministic given options", "[reproduce]") {
    ReproduceOptions opt = small_options({2});
    std::string a = report_to_text(run_reproduction(opt));
    std::string b = report_to_text(run_reproduction(opt));
    CHECK(a == b);
}

TEST_CASE("the sink sees each check as it completes, in report order", "[reproduce]") {
    std::vector<std::string> streamed;
    ReproduceReport r = run_reproduction(small_options({2}), [&](const TheoremCheck& c) {
        streamed.push_back(c.name);
    });
    REQUIRE(streamed.size() == r.checks.size());
    for (std::size_t i = 0; i < streamed.size(); ++i) CHECK(streamed[i] == r.checks[i].name);
}

TEST_CASE("check lines carry status, name and counts", "[reproduce]") {
    TheoremCheck c;
    c.name = "sample claim";
    c.status = TheoremCheck::Status::Pass;
    c.detail = "42 checks";
    CHECK(check_to_text(c) == "PASS    sample claim (42 checks)");

    c.status = TheoremCheck::Status::Skipped;
    c.detail = "";
    CHECK(check_to_text(c) == "SKIPPED sample claim");
}

TEST_CASE("options are validated before any battery runs", "[reproduce]") {
    ReproduceOptions opt;
    opt.dims = {};
    CHECK_THROWS_AS(run_reproduction(opt), error);
    opt.dims = {0};
    CHECK_THROWS_AS(run_reproduction(opt), error);
    opt.dims = {2};
    opt.samples = 0;
    CHECK_THROWS_AS(run_reproduction(opt), error);
}

TEST_CASE("the separator witness needs two dimensions of room", "[reproduce]") {
    CHECK_THROWS_AS(separator_std_witness(1), dimension_mismatch);
    CHECK(separator_std_witness(5).at(0).ambient() == 5);
    CHECK(print(separator_formula()) == "(p0 & (p1 | p2)) & ~((p0 & p1) | (p0 & p2))");
}
