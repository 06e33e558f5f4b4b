#include <doctest.h>

#include <random>

#include "schreier/implicit.hpp"

using namespace schreier;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

SparseVector ones(std::uint32_t lo, std::uint32_t hi) {
    SparseVector x;
    for (std::uint32_t k = lo; k <= hi; ++k) x.set(k, Rat(1));
    return x;
}

} // namespace

TEST_CASE("theta schedules") {
    ThetaSchedule std_theta = ThetaSchedule::standard();
    CHECK(std_theta.theta(1) == Rat(1, 4)); // 2^(-n-1)
    CHECK(std_theta.theta(3) == Rat(1, 16));
    CHECK(std_theta.total() == Rat(1, 2));
    // sum_{n>N} theta_n^2 for the standard schedule: (1/16) 4^-N / (3/4)
    CHECK(std_theta.sq_tail(0) == Rat(1, 12));
    CHECK(std_theta.sq_tail(1) == Rat(1, 48));

    CHECK(ThetaSchedule::parse("geometric:1/2").theta(2) == Rat(1, 8));
    CHECK(ThetaSchedule::parse("geometric:1/4:1/2").theta(1) == Rat(1, 4));
    CHECK_THROWS_AS(ThetaSchedule::geometric(Rat(1), Rat(1, 2)), DomainError);
    CHECK_THROWS_AS(ThetaSchedule::parse("harmonic:1"), ParseError);
}

TEST_CASE("z_norm fixes immediately on a basis vector") {
    FamilyEval ev;
    auto [v, trace] = z_norm(ev, O("1"), parse_family("S(1)"), ThetaSchedule::standard(),
                             SparseVector::basis(1), parse_rational("2^-40"));
    REQUIRE(v.exact.has_value());
    CHECK(*v.exact == 1);
    CHECK(trace.termination == IterationTrace::Termination::FixedPoint);
    CHECK(trace.iterations == 1);
}

TEST_CASE("z_norm of zero") {
    FamilyEval ev;
    auto [v, trace] = z_norm(ev, O("1"), parse_family("S(1)"), ThetaSchedule::standard(),
                             SparseVector(), parse_rational("2^-40"));
    CHECK(*v.exact == 0);
}

TEST_CASE("z_norm on a small pair keeps the base value") {
    FamilyEval ev;
    // x = e2 + e3 over the sup-norm base: the aggregate sqrt(sum (2 theta_n)^2)
    // = sqrt(1/3) stays below the base norm 1, so the value fixes at 1
    SparseVector x = ones(2, 3);
    auto [v, trace] = z_norm(ev, O("1"), parse_family("S(0)"), ThetaSchedule::standard(), x,
                             parse_rational("2^-40"));
    REQUIRE(v.exact.has_value());
    CHECK(*v.exact == 1);
    CHECK(trace.termination == IterationTrace::Termination::FixedPoint);

    // components are theta_n times the two-singleton partition sum
    for (unsigned n : {1u, 2u, 3u}) {
        NormValue comp = z_norm_component(ev, O("1"), parse_family("S(0)"),
                                          ThetaSchedule::standard(), x,
                                          parse_rational("2^-40"), 64, n);
        REQUIRE(comp.exact.has_value());
        CHECK(*comp.exact == Rat(1, Int(1) << n)); // 2 theta_n = 2^-n
    }
}

TEST_CASE("z_norm components on a basis vector equal theta_n") {
    FamilyEval ev;
    for (unsigned n : {1u, 2u, 4u}) {
        NormValue comp = z_norm_component(ev, O("1"), parse_family("S(1)"),
                                          ThetaSchedule::standard(), SparseVector::basis(1),
                                          parse_rational("2^-40"), 64, n);
        REQUIRE(comp.exact.has_value());
        CHECK(*comp.exact == ThetaSchedule::standard().theta(n));
    }
}

TEST_CASE("z_norm exceeds the base on spread-out mass") {
    FamilyEval ev;
    // eight unit coordinates on {8..15} over the sup base: the singleton
    // partition at n=1 is admissible, so the aggregate reaches sqrt(64/12)
    SparseVector x = ones(8, 15);
    auto [v, trace] = z_norm(ev, O("1"), parse_family("S(0)"), ThetaSchedule::standard(), x,
                             parse_rational("2^-40"));
    CHECK(trace.termination == IterationTrace::Termination::FixedPoint);
    // sqrt(16/3) = 2.3094...
    CHECK(rat_to_double(v.lower) == doctest::Approx(2.3094).epsilon(1e-3));
    CHECK(v.upper - v.lower < parse_rational("2^-40"));
    CHECK(v.lower > 2);

    // trace is monotone and below the majorant ||x||_1 / (1 - total)
    Rat majorant = x.l1() / (1 - ThetaSchedule::standard().total());
    for (std::size_t k = 1; k < trace.steps.size(); ++k) {
        CHECK(trace.steps[k].lower >= trace.steps[k - 1].lower);
        CHECK(trace.steps[k].upper <= majorant);
    }
}

TEST_CASE("z_norm monotonicity and bound on random vectors") {
    FamilyEval ev;
    std::mt19937_64 rng(4242u);
    ThetaSchedule theta = ThetaSchedule::standard();
    for (int t = 0; t < 12; ++t) {
        SparseVector x;
        unsigned count = 1 + rng() % 6;
        for (unsigned i = 0; i < count; ++i) {
            std::int64_t numv = static_cast<std::int64_t>(rng() % 9) - 4;
            if (numv) x.set(1 + rng() % 12, Rat(numv, Int(1 + rng() % 3)));
        }
        if (x.is_zero()) continue;
        auto [v, trace] = z_norm(ev, O("1"), parse_family("S(0)"), theta, x,
                                 parse_rational("2^-30"));
        Rat majorant = x.l1() / (1 - theta.total());
        Rat base = *schreier_norm(ev, parse_family("S(0)"), x).exact;
        REQUIRE(v.lower >= base);
        REQUIRE(v.upper <= majorant);
        REQUIRE(trace.termination == IterationTrace::Termination::FixedPoint);
        for (std::size_t k = 1; k < trace.steps.size(); ++k)
            REQUIRE(trace.steps[k].lower >= trace.steps[k - 1].lower);
    }
}

TEST_CASE("z_norm with gamma=2 admissibility") {
    FamilyEval ev;
    // gamma = 2: the level families are S(fundamental(w^2, n)) = S(w*n)
    SparseVector x = ones(4, 9);
    auto [v, trace] = z_norm(ev, O("2"), parse_family("S(0)"), ThetaSchedule::standard(), x,
                             parse_rational("2^-30"));
    CHECK(v.lower >= 1);
    CHECK(v.upper <= x.l1() * 2);
    CHECK_THROWS_AS(z_norm(ev, O("0"), parse_family("S(0)"), ThetaSchedule::standard(), x,
                           parse_rational("2^-30")),
                    DomainError);
}

TEST_CASE("mixed_schreier_norm") {
    FamilyEval ev;
    SparseVector e12 = ones(1, 2);
    NormValue v = mixed_schreier_norm(ev, O("w"), e12);
    CHECK(*v.exact == Rat(1, 2));

    CHECK(*mixed_schreier_norm(ev, O("w"), SparseVector()).exact == 0);
    CHECK(*mixed_schreier_norm(ev, O("w"), SparseVector::basis(1)).exact == Rat(1, 2));

    CHECK_THROWS_AS(mixed_schreier_norm(ev, O("w+1"), e12), DomainError);

    // x on {4..9}: at n=1 the best S(1) set is {5..9} of mass 5, scaled 1/2;
    // at n=2 the whole support is admissible (mass 6) but scaled 1/4; the
    // sup is 5/2
    SparseVector x = ones(4, 9);
    CHECK(*mixed_schreier_norm(ev, O("w"), x).exact == Rat(5, 2));
}

TEST_CASE("mixed-norm instance inequality at lambda = w") {
    FamilyEval ev;
    std::mt19937_64 rng(777u);
    for (int t = 0; t < 10; ++t) {
        SparseVector x;
        for (unsigned i = 0; i < 6; ++i) {
            std::int64_t numv = static_cast<std::int64_t>(rng() % 9) - 4;
            if (numv) x.set(1 + rng() % 10, Rat(numv, 2));
        }
        if (x.is_zero()) continue;
        Rat schreier_at_w = *schreier_norm(ev, FamilyExpr::S(O("w")), x).exact;
        FiniteSet supp = x.support();
        Rat l1 = x.l1();
        // for every n and every admissible E at level lambda_n = n:
        // 2^-n ||Ex||_1 <= (1/2) ||x||_w
        Rat scale(1, 2);
        for (unsigned n = 1; scale * l1 > 0; ++n) {
            FamilyPtr fn = FamilyExpr::S(O(std::to_string(n)));
            for (std::uint64_t mask = 0; mask < (1ull << supp.size()); ++mask) {
                std::vector<std::uint32_t> v;
                for (std::size_t k = 0; k < supp.size(); ++k)
                    if (mask & (1ull << k)) v.push_back(supp[k]);
                FiniteSet e(v);
                if (!ev.contains(fn, e)) continue;
                REQUIRE(scale * x.abs_mass(e) <= Rat(1, 2) * schreier_at_w);
            }
            scale /= 2;
            if (scale * l1 <= Rat(1, 2) * schreier_at_w) break;
        }
    }
}
