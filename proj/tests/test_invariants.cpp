#include <doctest.h>

#include <cmath>
#include <set>

#include "isospec/catalog.hpp"
#include "isospec/flow.hpp"
#include "isospec/invariants.hpp"
#include "isospec/rng.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

double word_scale(const SkewPencil& j, int k) {
    return std::pow(j[0].norm() + j[1].norm(), k);
}

} // namespace

TEST_SUITE("invariants") {

TEST_CASE("p_ab basic values") {
    const SkewPencil j = catalog::make_lemma42();
    CHECK(p_ab(j, 1, 0) == 0.0);
    CHECK(p_ab(j, 2, 0) == doctest::Approx(-6.0).epsilon(1e-14));

    CHECK_THROWS_AS(p_ab(j, -1, 2), DomainError);
    CHECK_THROWS_AS(p_ab(j, 0, 0), DomainError);

    const SkewPencil j3(std::vector<SkewMatrix>{j[0], j[1], j[0]});
    CHECK_THROWS_AS(p_ab(j3, 2, 0), UnsupportedRankError);
}

TEST_CASE("p_ab vanishes for odd word length") {
    const SkewPencil j = oracles::random_pencil(6, 5, 0);
    for (auto [a, b] : {std::pair{1, 0}, {2, 1}, {1, 2}, {4, 1}, {3, 2}}) {
        CHECK(std::abs(p_ab(j, a, b)) <= 1e-9 * word_scale(j, a + b));
    }
}

TEST_CASE("grouped and ungrouped word enumerations agree") {
    const SkewPencil j = oracles::random_pencil(5, 6, 1);
    for (int k = 2; k <= 6; k += 2) {
        for (int a = 0; a <= k; ++a) {
            CHECK(rel_close(p_ab(j, a, k - a), oracles::p_ab_ungrouped(j, a, k - a), 1e-12));
        }
    }
}

TEST_CASE("p_ab homogeneity") {
    const SkewPencil j = oracles::random_pencil(6, 7, 2);
    const double alpha = 1.37, beta = -0.81;
    const SkewPencil scaled(alpha * j[0], beta * j[1]);
    for (auto [a, b] : {std::pair{2, 0}, {1, 1}, {2, 2}, {4, 2}}) {
        const double expected = std::pow(alpha, a) * std::pow(beta, b) * p_ab(j, a, b);
        CHECK(rel_close(p_ab(scaled, a, b), expected, 1e-9));
    }
}

TEST_CASE("pencil power traces decompose into p_ab on a grid") {
    const SkewPencil j = oracles::random_pencil(6, 8, 3);
    for (int k = 2; k <= 6; k += 2) {
        for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            for (double u : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
                Vec w(2);
                w << s, u;
                const SkewMatrix px = pencil_eval(j, w);
                const std::vector<SkewMatrix> word(static_cast<std::size_t>(k), px);
                const double direct = trace_word(word);
                double sum = 0.0;
                for (int a = 0; a <= k; ++a) {
                    sum += std::pow(s, a) * std::pow(u, k - a) * p_ab(j, a, k - a);
                }
                CHECK(rel_close(direct, sum, 1e-9));
            }
        }
    }
}

TEST_CASE("swapping the components transposes the table indices") {
    const SkewPencil j = oracles::random_pencil(5, 9, 4);
    const SkewPencil swapped(j[1], j[0]);
    for (auto [a, b] : {std::pair{2, 0}, {1, 1}, {3, 1}, {2, 2}}) {
        CHECK(rel_close(p_ab(j, a, b), p_ab(swapped, b, a), 1e-12));
    }
}

TEST_CASE("invariant_table key set for m = 5") {
    const InvariantTable t = invariant_table(catalog::make_lemma42());
    CHECK(t.m == 5);
    std::set<std::pair<int, int>> keys;
    for (const auto& e : t.entries) {
        keys.insert({e.a, e.b});
    }
    const std::set<std::pair<int, int>> expected{{2, 0}, {1, 1}, {0, 2}, {4, 0},
                                                 {3, 1}, {2, 2}, {1, 3}, {0, 4}};
    CHECK(keys == expected);
    // serialized ordering: by (a+b, a) ascending
    CHECK(t.entries.front().a == 0);
    CHECK(t.entries.front().b == 2);
    CHECK(t.entries.back().a == 4);
    CHECK(t.entries.back().b == 0);
}

TEST_CASE("table is invariant under simultaneous orthogonal conjugation") {
    const SkewPencil j = oracles::random_pencil(6, 10, 5);
    const Mat q = oracles::random_orthogonal(6, 10, 99);
    const InvariantTable ta = invariant_table(j);
    const InvariantTable tb = invariant_table(oracles::conjugate_pencil(j, q));
    for (std::size_t i = 0; i < ta.entries.size(); ++i) {
        CHECK(rel_close(ta.entries[i].value, tb.entries[i].value, 1e-9));
    }
}

TEST_CASE("explicit family tables agree across the deformation") {
    const InvariantTable t0 = invariant_table(catalog::make_ex43(0.0));
    const InvariantTable t1 = invariant_table(catalog::make_ex43(0.25));
    for (std::size_t i = 0; i < t0.entries.size(); ++i) {
        CHECK(rel_close(t0.entries[i].value, t1.entries[i].value, 1e-9));
    }
}

TEST_CASE("is_isospectral verdicts") {
    const SkewPencil j = catalog::make_lemma42();
    CHECK(is_isospectral(j, j).isospectral);

    const auto fam = catalog::make_ex25(catalog::Ex25Params{1, 2, 1, 1, 1}, 0.2);
    CHECK(is_isospectral(fam.j_ref, fam.j_t).isospectral);

    const SkewPencil swapped(j[1], j[0]);
    const IsospectralReport rep = is_isospectral(j, swapped);
    CHECK_FALSE(rep.isospectral);
    CHECK(rep.max_deviation > 1e-3);

    CHECK_THROWS_AS(is_isospectral(j, oracles::random_pencil(6, 1, 1)), DimensionError);
}

TEST_CASE("isospectrality predicate is stable under rescaling both pencils") {
    const auto fam = catalog::make_ex25(catalog::Ex25Params{1, 2, 1, 1, 1}, 0.15);
    const SkewPencil j = catalog::make_lemma42();
    const SkewPencil swapped(j[1], j[0]);
    for (double alpha : {0.35, 2.6}) {
        const SkewPencil a1(alpha * fam.j_ref[0], alpha * fam.j_ref[1]);
        const SkewPencil a2(alpha * fam.j_t[0], alpha * fam.j_t[1]);
        CHECK(is_isospectral(a1, a2).isospectral == is_isospectral(fam.j_ref, fam.j_t).isospectral);
        const SkewPencil b1(alpha * j[0], alpha * j[1]);
        const SkewPencil b2(alpha * swapped[0], alpha * swapped[1]);
        CHECK(is_isospectral(b1, b2).isospectral == is_isospectral(j, swapped).isospectral);
    }
}

TEST_CASE("q_poly and its word decomposition") {
    const SkewPencil j = catalog::make_lemma42();
    CHECK(q_poly(SkewPencil(j[0], SkewMatrix::zero(5))) == 0.0);

    // direct product route
    const Mat a2 = j[0].entries() * j[0].entries();
    const Mat b2 = j[1].entries() * j[1].entries();
    CHECK(rel_close(q_poly(j), (a2 * b2).trace(), 1e-12));

    // the six words of type (2,2) are four cyclic copies of j1 j1 j2 j2 plus
    // two copies of the alternating word
    const SkewPencil r = oracles::random_pencil(6, 11, 6);
    const double alternating = trace_word({r[0], r[1], r[0], r[1]});
    CHECK(rel_close(p_ab(r, 2, 2), 4.0 * q_poly(r) + 2.0 * alternating, 1e-11));
}

TEST_CASE("dq_along_y closed form") {
    CHECK(dq_along_y(catalog::make_lemma42()) == doctest::Approx(2.0).epsilon(1e-12));

    for (int m : {3, 4}) {
        for (std::uint64_t idx = 0; idx < 10; ++idx) {
            const SkewPencil j = oracles::random_pencil(m, 12, idx);
            const double scale = std::pow(j[0].norm(), 4) * std::pow(j[1].norm(), 3);
            CHECK(std::abs(dq_along_y(j)) <= 1e-10 * (1.0 + scale));
        }
    }
}

TEST_CASE("dq_along_y matches the finite difference of q along Y") {
    for (int m : {5, 6}) {
        const SkewPencil j = oracles::random_pencil(m, 13, static_cast<std::uint64_t>(m));
        const SkewPencil dir = y_field(j);
        const double fd = oracles::fd_directional([](const SkewPencil& p) { return q_poly(p); },
                                                  j, dir, 1e-5);
        const double scale = std::pow(j[0].norm() + j[1].norm(), 7);
        CHECK(std::abs(dq_along_y(j) - fd) <= 1e-6 * (1.0 + scale));
    }
}

TEST_CASE("dp_ab_directional basics") {
    const SkewPencil j = oracles::random_pencil(5, 14, 0);
    const SkewPencil zero(SkewMatrix::zero(5), SkewMatrix::zero(5));
    CHECK(dp_ab_directional(j, zero, 2, 2) == 0.0);
    CHECK_THROWS_AS(dp_ab_directional(j, oracles::random_pencil(6, 14, 1), 2, 0), DimensionError);

    // length-one words reduce to plain traces of the direction
    const SkewPencil eps = oracles::random_pencil(5, 14, 2);
    CHECK(dp_ab_directional(j, eps, 1, 0) == doctest::Approx(eps[0].entries().trace()));
}

TEST_CASE("dp_ab_directional matches finite differences") {
    const SkewPencil j = oracles::random_pencil(6, 15, 3);
    const SkewPencil eps = oracles::random_pencil(6, 15, 4);
    for (auto [a, b] : {std::pair{2, 0}, {0, 2}, {1, 1}, {2, 2}, {4, 0}, {1, 3}, {3, 3}}) {
        const double fd = oracles::fd_directional(
            [&](const SkewPencil& p) { return p_ab(p, a, b); }, j, eps, 1e-5);
        const double scale =
            std::pow(j[0].norm() + j[1].norm() + eps[0].norm() + eps[1].norm(), a + b);
        CHECK(std::abs(dp_ab_directional(j, eps, a, b) - fd) <= 1e-6 * (1.0 + scale));
    }
}

TEST_CASE("the deformation field annihilates every dp_ab") {
    for (int m : {5, 6, 7}) {
        const SkewPencil j = oracles::random_pencil(m, 16, static_cast<std::uint64_t>(m));
        const SkewPencil y = y_field(j);
        const double norm_sum = j[0].norm() + j[1].norm();
        for (int k = 2; k <= m; k += 2) {
            for (int a = 0; a <= k; ++a) {
                const double bound = 1e-8 * std::pow(norm_sum, k + 3);
                CHECK(std::abs(dp_ab_directional(j, y, a, k - a)) <= bound);
            }
        }
    }
}

TEST_CASE("eigen_multiset basics") {
    CHECK(eigen_multiset(SkewMatrix::zero(5)) == std::vector<double>{0.0, 0.0});

    const SkewPencil fam = catalog::make_ex43(0.1);
    const auto mus = eigen_multiset(fam[1]);
    REQUIRE(mus.size() == 2);
    CHECK(mus[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mus[1] == doctest::Approx(1.0).epsilon(1e-12));

    // pencil at weights (1,0): mu^2 are the roots of x^2 - 3x + 1
    Vec w(2);
    w << 1.0, 0.0;
    const auto pencil_mus = eigen_multiset(pencil_eval(fam, w));
    REQUIRE(pencil_mus.size() == 2);
    const double root_hi = 0.5 * (3.0 + std::sqrt(5.0));
    const double root_lo = 0.5 * (3.0 - std::sqrt(5.0));
    CHECK(pencil_mus[0] * pencil_mus[0] == doctest::Approx(root_hi).epsilon(1e-10));
    CHECK(pencil_mus[1] * pencil_mus[1] == doctest::Approx(root_lo).epsilon(1e-10));

    for (int m : {4, 5, 6, 7}) {
        CHECK(eigen_multiset(oracles::random_skew(m, 17, static_cast<std::uint64_t>(m))).size() ==
              static_cast<std::size_t>(m / 2));
    }
}

TEST_CASE("predicate agrees with the pencil eigenvalue oracle") {
    for (int m : {5, 6}) {
        const SkewPencil j = oracles::random_pencil(m, 18, static_cast<std::uint64_t>(m));
        const Mat qmat = oracles::random_orthogonal(m, 18, static_cast<std::uint64_t>(m + 50));
        const SkewPencil same = oracles::conjugate_pencil(j, qmat);
        SkewPencil other(j[0], j[1] * 1.003);

        struct Case {
            const SkewPencil* cand;
            bool expected;
        };
        for (const Case c : {Case{&same, true}, Case{&other, false}}) {
            const bool predicate = is_isospectral(j, *c.cand).isospectral;
            bool oracle = true;
            for (std::uint64_t widx = 0; widx < 50 && oracle; ++widx) {
                Vec w(2);
                w << rng::gaussian(99, 2 * widx), rng::gaussian(99, 2 * widx + 1);
                const auto ma = eigen_multiset(pencil_eval(j, w));
                const auto mb = eigen_multiset(pencil_eval(*c.cand, w));
                for (std::size_t i = 0; i < ma.size(); ++i) {
                    if (std::abs(ma[i] - mb[i]) > 1e-8 * (1.0 + ma[i])) {
                        oracle = false;
                        break;
                    }
                }
            }
            CHECK(predicate == c.expected);
            CHECK(oracle == c.expected);
        }
    }
}

} // TEST_SUITE
