#include "apcheck/report.hpp"
#include "apcheck/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace apcheck;

TEST_CASE("report round trip") {
    RunReport rep;
    rep.command = "scan condbound";
    rep.config = {{"limit", 1000}};
    CheckRecord r;
    r.name = "argmin";
    r.inputs = {{"limit", 1000}};
    r.observed = {{"argmin", 24}, {"ratio", 0.9439739413323746}};
    r.expected = {{"argmin", 24}};
    r.status = CheckStatus::pass;
    r.wall_ms = 1.25;
    rep.add(r);
    CheckRecord i;
    i.name = "note";
    i.status = CheckStatus::info;
    rep.add(i);
    rep.wall_ms = 2.5;

    auto j = rep.to_json();
    auto back = RunReport::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.command == rep.command);
    CHECK(back.checks.size() == 2);
    CHECK(back.checks[0].observed["ratio"] == rep.checks[0].observed["ratio"]);
}

TEST_CASE("exit code depends only on hard failures") {
    RunReport rep;
    CheckRecord info;
    info.status = CheckStatus::info;
    rep.add(info);
    CheckRecord skip;
    skip.status = CheckStatus::skip;
    rep.add(skip);
    CHECK(rep.exit_code() == 0);

    CheckRecord fail;
    fail.status = CheckStatus::fail;
    rep.add(fail);
    CHECK(rep.exit_code() == 1);
    CHECK(rep.failures() == 1);
}

TEST_CASE("criteria are deterministic for a fixed seed") {
    VerifyProfile prof = VerifyProfile::quick();
    auto a = criterion_order4(prof);
    auto b = criterion_order4(prof);
    CHECK(a.observed == b.observed);
    auto c = criterion_frey_identities(prof);
    auto d = criterion_frey_identities(prof);
    CHECK(c.observed == d.observed);
    prof.seed ^= 1;  // a different seed still passes, possibly along another path
    CHECK(criterion_order4(prof).status == CheckStatus::pass);
}

TEST_CASE("status strings") {
    CHECK(status_from_string("pass") == CheckStatus::pass);
    CHECK(status_from_string(to_string(CheckStatus::skip)) == CheckStatus::skip);
    CHECK_THROWS(status_from_string("bogus"));
}
