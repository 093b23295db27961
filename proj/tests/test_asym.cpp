#include "doctest.h"

#include "hz/asym.hpp"

#include <random>

using namespace hz;

TEST_SUITE("asym") {

TEST_CASE("target names round-trip") {
    for (AsymTarget t : {AsymTarget::FkN_inf, AsymTarget::FkN_zero, AsymTarget::pair_inf, AsymTarget::pair_zero, AsymTarget::lambert})
        CHECK(parse_asym_target(asym_target_name(t)) == t);
    CHECK_THROWS_AS(parse_asym_target("nope"), DomainError);
}

TEST_CASE("expansion within its remainder bound at random points") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0, 1);
    struct Range {
        AsymQuery q;
        double lo, hi;
    };
    std::vector<Range> rs = {
        {{AsymTarget::FkN_inf, 2, 1, 1}, 15, 200},  {{AsymTarget::FkN_inf, 1.5, 2.5, 1}, 5, 50},
        {{AsymTarget::FkN_zero, 2, 2, 1}, 0.02, 0.2}, {{AsymTarget::FkN_zero, 1, 3, 1}, 0.02, 0.2},
        {{AsymTarget::pair_inf, 3, 1, 1}, 30, 200}, {{AsymTarget::pair_zero, 3, 3, 1}, 0.05, 0.3},
        {{AsymTarget::pair_zero, 1, 1, 1}, 0.05, 0.5}, {{AsymTarget::lambert, 0, 3, 1}, 0.03, 0.2},
    };
    for (const auto& r : rs)
        for (int i = 0; i < 5; ++i) {
            // log-uniform in [lo, hi]
            double x = r.lo * std::pow(r.hi / r.lo, u(rng));
            IdentityReport rep = check_asym(r.q, x);
            INFO(to_json(rep));
            CHECK(rep.pass);
        }
}

TEST_CASE("complex argument for F_{k,N} at infinity, including the left half plane") {
    for (cplx x : {cplx(30, 20), cplx(-25, 15), cplx(5, -40)}) {
        IdentityReport rep = check_asym({AsymTarget::FkN_inf, 2, 1, 1}, x);
        INFO(to_json(rep));
        CHECK(rep.pass);
    }
}

TEST_CASE("optimal truncation stops at the smallest term") {
    // x = 3: the smallest term is near n = 3 pi, well above rounding
    AsymResult r = ext_F_asym_inf({2, 1}, 3.0);
    auto fixed = [](int T) {
        AsymOptions o;
        o.fixed_terms = T;
        return ext_F_asym_inf({2, 1}, 3.0, o);
    };
    AsymResult s = fixed(r.terms_used - 1), s2 = fixed(r.terms_used - 2);
    CHECK(s.terms_used == r.terms_used - 1);
    // first_omitted of T - 1 terms is the last included term: no larger than its neighbours
    CHECK(s.first_omitted <= r.first_omitted);
    CHECK(s.first_omitted <= s2.first_omitted);
    CHECK(r.remainder_bound >= r.first_omitted);
}

TEST_CASE("fixed truncation error scales with the first omitted power") {
    for (auto [q, x] : {std::pair{AsymQuery{AsymTarget::FkN_inf, 2, 3, 1}, 20.0}, {AsymQuery{AsymTarget::pair_inf, 3, 1, 1}, 40.0},
                        {AsymQuery{AsymTarget::FkN_zero, 3, 3, 1}, 0.1}, {AsymQuery{AsymTarget::lambert, 0, 1, 1}, 0.1}}) {
        IdentityReport r = check_asym_scaling(q, x);
        INFO(to_json(r));
        CHECK(r.pass);
    }
}

TEST_CASE("exponentially dominated cases follow the phased error model") {
    for (auto [q, x] : {std::pair{AsymQuery{AsymTarget::pair_zero, 1, 3, 1}, 0.1}, {AsymQuery{AsymTarget::lambert, 0, 3, 2}, 0.05}}) {
        IdentityReport r = check_asym_scaling(q, x);
        INFO(to_json(r));
        CHECK(r.pass);
        CHECK(r.abs_residual < 0.01 * std::abs(r.rhs));
    }
}

TEST_CASE("printed small-x and Lambert series are off by more than the bound") {
    for (auto [q, x] : {std::pair{AsymQuery{AsymTarget::pair_zero, 3, 1, 1}, 0.2}, {AsymQuery{AsymTarget::lambert, 0, 1, 1}, 0.1}}) {
        AsymOptions po;
        po.printed = true;
        AsymResult p = asym_eval(q, x, po), c = asym_eval(q, x);
        EvalOutcome d = asym_direct(q, x);
        CHECK(std::abs(c.value - d.value) <= c.remainder_bound + d.abs_err);
        CHECK(std::abs(p.value - d.value) > 100 * (c.remainder_bound + d.abs_err));
    }
}

TEST_CASE("domain gates") {
    CHECK_THROWS_AS(ext_F_asym_zero({5, 3}, 0.1), DomainError);
    CHECK_THROWS_AS(pair_asym_zero({2, 3}, 0.1), DomainError);
    CHECK_THROWS_AS(lambert_asym(1, 2, 0.1), DomainError);
    CHECK_THROWS_AS(lambert_asym(0, 1, 0.1), DomainError);
}

}  // TEST_SUITE
