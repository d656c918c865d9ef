#include "doctest.h"
#include "motzkin/bounded.hpp"
#include "test_support.hpp"

using namespace motzkin;
using motzkin::test::from_ints;
using motzkin::test::ints;
using motzkin::test::ser;

namespace {

const CatalogEntry& entry(const char* pair) { return catalog_lookup(PatternPair::parse(pair)); }
const std::vector<CatalogEntry>& entries() { return Catalog::builtin().entries(); }

}  // namespace

TEST_CASE("det_sequence examples") {
    const auto d = det_sequence(entry("UD,DH"), 2);
    REQUIRE(d.polys.size() == 3);
    CHECK(d.polys[0] == Poly{1});
    CHECK(d.polys[1] == Poly{-1, 1});
    CHECK(d.polys[2] == Poly{1, -2, 1} - Poly{0, 0, 0, 1});  // (z-1)^2 - z^3
    const auto h = det_sequence(entry("DH,HD"), 1);
    CHECK(h.polys[1] == Poly{-1, 1, 0, -1});
    CHECK_THROWS_AS(det_sequence(entry("UD,DH"), -1), MotzkinError);
}

TEST_CASE("binet_check") {
    const auto r = binet_check(entry("UD,DH"), 6, 25);
    CHECK(r.all());
    CHECK(binet_check(entry("UD,DH"), 0, 10).pass == std::vector<bool>{true});
    CatalogEntry bad = entry("UD,DH");
    bad.det_D1 = bad.det_D1 + Poly{0, 0, 1};
    CHECK(binet_check(bad, 4, 12).first_failure() == 1);
}

TEST_CASE("property: determinant recursion equals the Binet form, K <= 10, order 25") {
    for (const auto& e : entries()) {
        CAPTURE(e.pair.key());
        CHECK(binet_check(e, 10, 25).all());
    }
}

TEST_CASE("tau_iterate examples") {
    const auto& e = entry("UD,DH");
    CHECK(tau_iterate(e, 0, 8) == Series(8));
    CHECK(tau_iterate(e, 1, 8) == ser({0, 0, 0, 1, 1, 1, 1, 1}, 8));
    CHECK(tau_iterate(e, 1, 8) == Series::from_poly(Poly{0, 0, 0, 1}, 8) * series_inv(ser({1, -1}, 8)));
    CatalogEntry bad = e;
    bad.tau_den = Poly{0, 1};
    try {
        tau_iterate(bad, 1, 8);
        FAIL("expected NonUnit");
    } catch (const MotzkinError& x) {
        CHECK(x.code() == ErrorCode::NonUnit);
    }
}

TEST_CASE("property: tau equals the determinant ratio, K <= 6, order 20") {
    for (const auto& e : entries())
        for (int K = 0; K <= 6; ++K) {
            CAPTURE(e.pair.key());
            CAPTURE(K);
            CHECK(tau_bridge_check(e, K, 20));
        }
}

TEST_CASE("eval_bounded examples") {
    CHECK(eval_bounded(entry("UD,DH"), BoundedQuantity::Sigma, 1, 6) == ser({1, 1, 1, 1, 1, 1}, 6));
    // z^2 / ((1-z)(1-z^2))
    const Series eta1 = Series::from_poly(Poly{0, 0, 1}, 12) * series_inv(ser({1, -1, -1, 1}, 12));
    CHECK(eval_bounded(entry("DH,HD"), BoundedQuantity::Eta, 1, 12) == eta1);
    CHECK_THROWS_AS(eval_bounded(entry("UD,DH"), BoundedQuantity::Sigma, 0, 6), MotzkinError);
    try {
        eval_bounded(entry("UD,DH"), BoundedQuantity::Phi, 1, 6);
        FAIL("phi is not catalogued for this entry");
    } catch (const MotzkinError& x) {
        CHECK(x.code() == ErrorCode::NoClosedForm);
    }
}

TEST_CASE("gamma_2 of the UD&DH entry counts H-layer returns at cap 1 of the pair it encodes") {
    // The entry's formulas encode UD&DD (see the kernel tests); its gamma_2
    // is the H-layer return count of that pair with one extra height level.
    const auto& e = entry("UD,DD");
    const Series g = eval_bounded(entry("UD,DH"), BoundedQuantity::Gamma, 2, 12);
    CHECK(g == eval_bounded(e, BoundedQuantity::Gamma, 2, 12));
    CHECK(g == from_ints(capped_layer_counts(e, BoundedQuantity::Gamma, 1, 11)));
}

TEST_CASE("solve_banded examples") {
    const auto& e = entry("UD,DH");
    CHECK(solve_banded(e, BoundedQuantity::Sigma, 0, 10) == ser({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 10));
    CHECK(solve_banded(e, BoundedQuantity::Sigma, 3, 15) == eval_bounded(e, BoundedQuantity::Sigma, 4, 15));
    const auto& h = entry("UU,HH");
    CHECK(solve_banded(h, BoundedQuantity::Sigma, 2, 12) ==
          from_ints(count_paths(build_automaton(h.pair, 2), 11, Accept::excursions())));
}

TEST_CASE("solve_banded reports a non-unit pivot") {
    CatalogEntry e = entry("UD,DD");
    e.bounded.at(BoundedQuantity::Sigma).system->diag = Poly{0, 1};
    e.bounded.at(BoundedQuantity::Sigma).system->sup = Poly{0, 1};
    try {
        solve_banded(e, BoundedQuantity::Sigma, 3, 10);
        FAIL("expected SingularPivot");
    } catch (const MotzkinError& x) {
        CHECK(x.code() == ErrorCode::SingularPivot);
    }
}

TEST_CASE("property: continued fraction == banded solve for every quantity, K <= 5") {
    for (const auto& e : entries())
        for (const auto& [q, f] : e.bounded) {
            if (!f.system) continue;
            for (int K = 0; K <= 5; ++K) {
                CAPTURE(e.pair.key());
                CAPTURE(bounded_name(q));
                CAPTURE(K);
                // The printed phi data of DH&HD is not a power series for K >= 1;
                // both routes must then refuse it.
                bool cf_failed = false;
                Series cf;
                try {
                    cf = eval_bounded(e, q, K + 1, 17);
                } catch (const MotzkinError&) {
                    cf_failed = true;
                }
                if (cf_failed) {
                    CHECK(e.pair == PatternPair::parse("DH,HD"));
                    CHECK_THROWS_AS(solve_banded(e, q, K, 17), MotzkinError);
                    continue;
                }
                CHECK(cf == solve_banded(e, q, K, 17));
            }
        }
}

TEST_CASE("property: asserted bounded forms are capped-automaton counts, K <= 5") {
    int checked = 0;
    for (const auto& e : entries())
        for (const auto& [q, f] : e.bounded) {
            if (f.trust != Trust::Asserted) continue;
            REQUIRE(f.cap_offset.has_value());
            for (int K = 0; K <= 5; ++K) {
                CAPTURE(e.pair.key());
                CAPTURE(bounded_name(q));
                CAPTURE(K);
                CHECK(eval_bounded(e, q, K + 1, 17) ==
                      from_ints(capped_layer_counts(e, q, *cap_for(e, q, K + 1), 16)));
                ++checked;
            }
        }
    CHECK(checked > 100);
}

TEST_CASE("property: sigma agrees with S0 for n <= 2K+1, K <= 6") {
    for (const auto& e : entries()) {
        const Series s0 = eval_unbounded(e, Quantity::S0, 14);
        for (int K = 0; K <= 6; ++K) {
            const Series s = eval_bounded(e, BoundedQuantity::Sigma, K + 1, 14);
            CAPTURE(e.pair.key());
            CAPTURE(K);
            CHECK(s.truncated(static_cast<std::size_t>(2 * K + 2)) == s0.truncated(static_cast<std::size_t>(2 * K + 2)));
        }
    }
}

TEST_CASE("convergence_profile") {
    for (const auto& e : entries()) {
        const auto p = convergence_profile(e, 16);
        REQUIRE(p.size() == 16);
        CHECK(p[0].second == 0);
        CHECK(p[1].second == 0);
        for (const auto& [n, k] : p) CHECK(k <= n / 2);
    }
    CHECK(convergence_profile(entry("UD,DU"), 7)[6].second <= 3);
    const auto dh = convergence_profile(entry("DH,HD"), 16);
    for (std::size_t i = 1; i < dh.size(); ++i) CHECK(dh[i - 1].second <= dh[i].second);
}

TEST_CASE("aggregation report") {
    // Where the top D-layer state cannot be reached, the alternative aggregation
    // coincides with the canonical count.
    const auto r = aggregation_compare(entry("UD,DU"), 3, 14);
    CHECK(r.canonical == count_paths(build_automaton(PatternPair::parse("UD,DU"), 3), 14, Accept::excursions()));
    CHECK(r.alternative.size() == r.canonical.size());
    CHECK_THROWS_AS(aggregation_compare(entry("UD,DU"), 0, 5), MotzkinError);
}
