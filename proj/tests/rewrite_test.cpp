#include <doctest.h>

#include <random>
#include <vector>

#include "wprm/evalcode.hpp"
#include "wprm/rewrite.hpp"

using namespace wprm;

namespace {

plane make_plane(int p, int k, int a, int b) { return plane(field(p, k), a, b); }

bool evaluates_equally(const monomial& m1, const monomial& m2, const plane& pl) {
    for (const auto& P : enumerate_points(pl))
        if (evaluate_monomial(m1, P, pl.gf()) != evaluate_monomial(m2, P, pl.gf())) return false;
    return true;
}

// Rewrite to a normal form applying applicable rules in a random order;
// confluence means the result cannot depend on the order.
monomial random_order_normal_form(monomial m, const plane& pl, std::mt19937& rng) {
    const auto rules = groebner_basis(pl);
    for (;;) {
        std::vector<int> applicable;
        for (int i = 0; i < 3; ++i)
            if (rules[i].lhs.divides(m)) applicable.push_back(i);
        if (applicable.empty()) return m;
        const int pick = applicable[std::uniform_int_distribution<size_t>(0, applicable.size() - 1)(rng)];
        rewrite_step(m, rules[pick]);
    }
}

} // namespace

TEST_CASE("basis relations for (2,1,3) match the worked example") {
    plane pl = make_plane(2, 1, 1, 3);
    const auto rules = groebner_basis(pl);
    // f0 = x2^2*x1 + x2*x1^4, f1 = x2^2*x0 + x2*x0^4, f2 = x1^2*x0 + x1*x0^2
    CHECK(rules[0].lhs == monomial{0, 1, 2});
    CHECK(rules[0].rhs == monomial{0, 4, 1});
    CHECK(rules[1].lhs == monomial{1, 0, 2});
    CHECK(rules[1].rhs == monomial{4, 0, 1});
    CHECK(rules[2].lhs == monomial{1, 2, 0});
    CHECK(rules[2].rhs == monomial{2, 1, 0});
}

TEST_CASE("basis binomials vanish on every rational point") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        for (auto [a, b] : {std::pair{1, 1}, {1, 3}, {2, 3}, {3, 4}, {3, 5}}) {
            plane pl = make_plane(p, k, a, b);
            for (const auto& rule : groebner_basis(pl)) {
                CHECK(weighted_degree(rule.lhs, pl) == weighted_degree(rule.rhs, pl));
                CHECK(rule.rhs < rule.lhs);
                CHECK(evaluates_equally(rule.lhs, rule.rhs, pl));
            }
        }
    }
}

TEST_CASE("normal form preserves evaluation and lands in the reduction") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}}) {
            plane pl = make_plane(p, k, a, b);
            const long long q = pl.q();
            for (long long d = 1; d <= 2 * (a + b) * (q - 1); ++d) {
                const auto red = compute_reduction(pl, d);
                for (const auto& lp : polygon_points(pl, d)) {
                    const monomial m = monomial_of(lp, d, pl);
                    const monomial nf = normal_form(m, pl);
                    CHECK(weighted_degree(nf, pl) == d);
                    CHECK(evaluates_equally(m, nf, pl));
                    CHECK(red.contains(lattice_point{nf.e1, nf.e2}));
                }
            }
        }
    }
}

TEST_CASE("rewriting is confluent under randomized rule order") {
    std::mt19937 rng(20260826);
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        for (auto [a, b] : {std::pair{1, 3}, {2, 3}, {3, 5}}) {
            plane pl = make_plane(p, k, a, b);
            const long long q = pl.q();
            std::uniform_int_distribution<long long> exp(0, 3 * q);
            for (int trial = 0; trial < 200; ++trial) {
                const monomial m{exp(rng), exp(rng), exp(rng)};
                const monomial nf = normal_form(m, pl);
                for (int run = 0; run < 3; ++run) {
                    monomial alt = random_order_normal_form(m, pl, rng);
                    CHECK(alt == nf);
                }
            }
        }
    }
}

TEST_CASE("standard monomials of (2,1,3) degree 4 match the worked basis") {
    plane pl = make_plane(2, 1, 1, 3);
    const auto basis = standard_monomials(pl, 4);
    // {x0^4, x1*x0^3, x1^4, x2*x0, x2*x1} in increasing lex order
    const std::vector<monomial> expect{{4, 0, 0}, {3, 1, 0}, {0, 4, 0}, {1, 0, 1}, {0, 1, 1}};
    CHECK(basis == expect);
}

TEST_CASE("standard monomials in a regular degree for (2,1,3)") {
    plane pl = make_plane(2, 1, 1, 3);
    const auto basis = standard_monomials(pl, 9);
    REQUIRE(basis.size() == 7);
    // {x0^9, x1*x0^8, x1^9, x2*x0^6, x2*x1*x0^5, x2*x1^6, x2^3}
    const std::vector<monomial> expect{{9, 0, 0}, {8, 1, 0}, {0, 9, 0}, {6, 0, 1},
                                       {5, 1, 1}, {0, 6, 1}, {0, 0, 3}};
    CHECK(basis == expect);
}

TEST_CASE("pure powers are standard monomials") {
    for (auto [p, k] : {std::pair{3, 1}, {2, 2}}) {
        for (auto [a, b] : {std::pair{2, 3}, {1, 3}}) {
            plane pl = make_plane(p, k, a, b);
            for (long long d = 1; d <= 30; ++d) {
                CHECK(normal_form({d, 0, 0}, pl) == monomial{d, 0, 0});
                if (d % b == 0) CHECK(normal_form({0, 0, d / b}, pl) == monomial{0, 0, d / b});
            }
        }
    }
}

TEST_CASE("footprint of x1*x0^3 in degree 9 for (2,1,3)") {
    plane pl = make_plane(2, 1, 1, 3);
    const auto fp = footprint(pl, 9, monomial{3, 1, 0});
    REQUIRE(fp.size() == 5);
    // complement basis {x2^3, x2*x1^6, x2*x0^6, x1^9, x0^9}
    const std::vector<monomial> expect{{9, 0, 0}, {0, 9, 0}, {6, 0, 1}, {0, 6, 1}, {0, 0, 3}};
    CHECK(fp == expect);
    CHECK_THROWS_AS(footprint(pl, 2, monomial{3, 1, 0}), error); // d_tilde below the degree
}

TEST_CASE("shadow sizes for (2,1,3) degree 4") {
    plane pl = make_plane(2, 1, 1, 3);
    const long long dt = smallest_regular_degree_above(pl, 4);
    CHECK(shadow_size(pl, dt, {0, 0}, 4) == 4);
    CHECK(shadow_size(pl, dt, {1, 1}, 4) == 2);
    CHECK(shadow_size(pl, dt, {0, 1}, 4) == 2);
    CHECK(shadow_size(pl, dt, {4, 0}, 4) == 2);
    CHECK(shadow_size(pl, dt, {1, 0}, 4) == 2);
    CHECK_THROWS_AS(shadow_size(pl, 7, {0, 0}, 4), error); // 7 not a regular degree
}

TEST_CASE("footprint plus shadow partitions the regular-degree basis") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}}) {
        for (auto [a, b] : {std::pair{1, 3}, {2, 3}}) {
            plane pl = make_plane(p, k, a, b);
            for (long long d = 1; d <= (a + b) * (pl.q() - 1) + a * b; ++d) {
                const long long dt = smallest_regular_degree_above(pl, d);
                for (const auto& pt : compute_reduction(pl, d).all()) {
                    const monomial m = monomial_of(pt, d, pl);
                    CHECK(static_cast<long long>(footprint(pl, dt, m).size()) +
                              shadow_size(pl, dt, pt, d) ==
                          pl.n());
                }
            }
        }
    }
}
