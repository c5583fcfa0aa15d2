#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hardylab/registry.hpp"

using namespace hardylab;

TEST_CASE("lookup normalizes aliases and rejects unknown ids") {
    CHECK(find_record("CoV-P>=2") != nullptr);
    CHECK(find_record("CoV-P>=2")->id == "CoV-PGE2");
    CHECK(find_record("CoV-P≥2") != nullptr); // the unicode form
    CHECK(find_record("hlp-1d") != nullptr);
    CHECK(find_record("no-such-id") == nullptr);
    CHECK_THROWS_AS(require_record("no-such-id"), RegistryError);
    try {
        require_record("no-such-id");
    } catch (const RegistryError& e) {
        CHECK(std::string(e.what()).find("HLP-1D") != std::string::npos);
    }
}

TEST_CASE("every id maps to exactly one anchor") {
    std::set<std::string> ids, anchors;
    for (const auto& rec : registry()) {
        CHECK(ids.insert(rec.id).second);
        CHECK(anchors.insert(rec.anchor).second);
        CHECK_FALSE(rec.statement.empty());
        CHECK_FALSE(rec.defaults.empty());
    }
    CHECK(registry().size() >= 30);
}

TEST_CASE("boundary Hardy margin vanishes along the near-extremal family") {
    const InequalityRecord& rec = require_record("W-HARDY-BDRY");
    double prev_rel = 1e300;
    for (double eps : {0.4, 0.2, 0.1, 0.05, 0.02, 0.005}) {
        MarginCase c;
        c.domain_id = "ball";
        c.n = 2;
        c.size = 1.0;
        c.family = "power";
        c.family_params = {{"eps", eps}};
        c.params = {{"q", 2.0}, {"s", 2.0}};
        MarginInputs in = build_case_inputs(rec, c, {});
        MarginResult r = evaluate_margin(rec, in);
        CHECK(r.pass);
        CHECK(r.margin >= 0.0);
        double rel = r.margin / r.lhs.value;
        CHECK(rel < prev_rel);
        prev_rel = rel;
    }
    CHECK(prev_rel < 0.025);
}

TEST_CASE("ball series margin with the adapted six-piece profile") {
    const InequalityRecord& rec = require_record("L1-BALL-SERIES");
    MarginCase c;
    c.domain_id = "ball";
    c.n = 3;
    c.size = 1.0;
    c.family = "sixpiece-boundary";
    c.family_params = {{"delta", 0.1}, {"p", 4.0}};
    c.params = {{"s", 3.5}, {"gamma", 2.0}};
    MarginInputs in = build_case_inputs(rec, c, {});
    MarginResult r = evaluate_margin(rec, in);
    CHECK(r.pass);
    CHECK(r.margin >= 0.0);
}

TEST_CASE("change-of-variables margin on the interval with a smooth bump") {
    const InequalityRecord& rec = require_record("CoV-P>=2");
    MarginCase c;
    c.domain_id = "interval";
    c.n = 1;
    c.size = 1.0;
    c.family = "bump";
    c.family_params = {{"center", 0.5}, {"width", 0.3}};
    c.params = {{"p", 3.0}, {"s", 0.5}};
    MarginInputs in = build_case_inputs(rec, c, {});
    MarginResult r = evaluate_margin(rec, in);
    CHECK(r.pass);
    CHECK(r.margin >= 0.0);
}

TEST_CASE("registry hypotheses are enforced by name") {
    const InequalityRecord& l1c = require_record("L1-C");
    MarginCase c;
    c.domain_id = "punctured-space";
    c.n = 2;
    c.size = 1.0;
    c.family = "annulus";
    c.family_params = {{"delta", 0.1}, {"eta", 0.5}};
    c.params = {{"s", 3.0}};
    MarginInputs in = build_case_inputs(l1c, c, {});
    CHECK_THROWS_AS(evaluate_margin(l1c, in), RegistryError);
    try {
        evaluate_margin(l1c, in);
    } catch (const RegistryError& e) {
        CHECK(std::string(e.what()).find("mean-convexity") != std::string::npos);
    }

    const InequalityRecord& hlp = require_record("HLP-1D");
    MarginCase c2;
    c2.domain_id = "interval";
    c2.n = 1;
    c2.size = 1.0;
    c2.family = "power";
    c2.family_params = {{"eps", 0.2}};
    c2.params = {{"s", 0.5}, {"q", 2.0}, {"form", 1.0}};
    CHECK_THROWS(evaluate_margin(hlp, build_case_inputs(hlp, c2, {})));
}

TEST_CASE("sup-norm bound is attained by the extremal profile") {
    // the margin collapses to zero on the matched extremal
    const InequalityRecord& rec = require_record("SOB-SUP");
    MarginCase c = rec.defaults.front();
    MarginInputs in = build_case_inputs(rec, c, {});
    MarginResult r = evaluate_margin(rec, in);
    CHECK(r.pass);
    CHECK(std::abs(r.margin) <= 1e-6 * r.lhs.value);
}

TEST_CASE("one-dimensional sup bound is attained by the tent") {
    const InequalityRecord& rec = require_record("MORREY-1D");
    MarginCase c;
    c.domain_id = "interval";
    c.n = 1;
    c.size = 1.0;
    c.family = "tent-origin";
    c.family_params = {{"center", 0.5}, {"width", 0.5}};
    c.params = {{"p", 2.0}};
    MarginInputs in = build_case_inputs(rec, c, {});
    MarginResult r = evaluate_margin(rec, in);
    CHECK(r.pass);
    CHECK(std::abs(r.margin) <= 1e-6 * r.lhs.value);
}

TEST_CASE("existential constants escalate and are reported") {
    const InequalityRecord& rec = require_record("HS-ORIG");
    CHECK(rec.existential_constant);
    MarginCase c = rec.defaults.front();
    MarginInputs in = build_case_inputs(rec, c, {});
    MarginResult r = evaluate_margin(rec, in);
    CHECK(r.pass);
    CHECK(r.constant_used >= 1.0);
}

TEST_CASE("quotient scale invariance across domain sizes") {
    const InequalityRecord& rec = require_record("W-HARDY-BDRY");
    QuadratureConfig tight;
    tight.rel_tol = 1e-12;
    auto quotient_on = [&](double R) {
        MarginCase c;
        c.domain_id = "ball";
        c.n = 2;
        c.size = 1.0;
        c.family = "power";
        c.family_params = {{"eps", 0.3}};
        c.params = {{"q", 2.0}, {"s", 2.5}};
        MarginInputs in = build_case_inputs(rec, c, tight);
        in.domain = Domain::ball(2, R);
        in.profile = in.profile->rescaled(R);
        MarginResult r = evaluate_margin(rec, in);
        return r.lhs.value / r.rhs.value;
    };
    double q1 = quotient_on(1.0);
    for (double R : {2.0, 0.5}) {
        CHECK(std::abs(quotient_on(R) - q1) <= 1e-10 * std::abs(q1));
    }
}
