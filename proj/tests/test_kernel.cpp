#include "doctest.h"
#include "motzkin/kernel.hpp"
#include "test_support.hpp"

using namespace motzkin;
using motzkin::test::from_ints;
using motzkin::test::ints;
using motzkin::test::ser;

namespace {

const Catalog& cat() { return Catalog::builtin(); }
const CatalogEntry& entry(const char* pair) { return catalog_lookup(PatternPair::parse(pair)); }

Series z_power(std::size_t k, std::size_t order) { return Series::from_poly(Poly::monomial(1, k), order); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const MotzkinError& e) {
        return e.code();
    }
    FAIL("no MotzkinError raised");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("catalog shape") {
    CHECK(cat().entries().size() == 21);
    CHECK(cat().degenerate().size() == 6);
    for (const char* p : {"UU,HU", "DU,DH", "UD,UH", "UD,HD", "HU,HD", "HU,HH"}) {
        const auto pair = PatternPair::parse(p);
        CHECK(cat().is_degenerate(pair));
        CHECK(code_of([&] { catalog_lookup(pair); }) == ErrorCode::NoClosedForm);
    }
    // a pair that is neither catalogued nor listed as degenerate
    CHECK(code_of([] { catalog_lookup(PatternPair::parse("UU,DH")); }) == ErrorCode::NoClosedForm);
    // every entry is keyed by a distinct canonical pair
    for (std::size_t i = 0; i < cat().entries().size(); ++i)
        for (std::size_t j = i + 1; j < cat().entries().size(); ++j)
            CHECK_FALSE(cat().entries()[i].pair == cat().entries()[j].pair);
}

TEST_CASE("catalog_lookup examples") {
    const auto& e = entry("UD,DH");
    CHECK(e.kernel_a == Poly{0, 1});
    CHECK(e.kernel_b == Poly{-1, 1});
    CHECK(e.kernel_c == Poly{0, 0, 1});
    CHECK(&entry("HD,DH") == &entry("DH,HD"));
}

TEST_CASE("catalog JSON is validated") {
    CHECK(code_of([] { Catalog::from_json("{"); }) == ErrorCode::CatalogFormat);
    CHECK(code_of([] { Catalog::from_json(R"({"schema":"other","degenerate":[],"entries":[]})"); }) ==
          ErrorCode::CatalogFormat);
    const Catalog empty = Catalog::from_json(R"({"schema":"motzkin-catalog/1","degenerate":[],"entries":[]})");
    CHECK(empty.entries().empty());
}

TEST_CASE("kernel_roots examples") {
    const auto& e = entry("UD,DH");
    const KernelRoots r = kernel_roots(e, 12);
    CHECK(r.r1 == ser({0, 0, 1, 1, 1, 2, 4, 7, 13, 26, 52, 104}, 12));
    // z (r1 + r2) == 1 - z, with r2 = r2_scaled / z
    CHECK(r.r2_shift == 1);
    CHECK(z_power(1, 12) * r.r1 + r.r2_scaled == ser({1, -1}, 12));
}

TEST_CASE("property: root identities for every entry") {
    const std::size_t N = 30;
    for (const auto& e : cat().entries()) {
        CAPTURE(e.pair.key());
        const KernelRoots r = kernel_roots(e, N);
        const Series a = Series::from_poly(e.kernel_a, N), b = Series::from_poly(e.kernel_b, N),
                     c = Series::from_poly(e.kernel_c, N);
        const Series zs = z_power(r.r2_shift, N);
        CHECK(r.w * r.w == Series::from_poly(e.w_squared, N));
        CHECK(a * r.r1 * r.r1 + b * r.r1 + c == Series(N));
        CHECK(a * r.r1 * r.r2_scaled == c * zs);
        CHECK(a * (zs * r.r1 + r.r2_scaled) == -(b * zs));
    }
}

TEST_CASE("eval_unbounded examples") {
    CHECK(eval_unbounded(entry("UD,DH"), Quantity::S0, 11).integer_coeffs() ==
          ints({1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212}));
    CHECK(eval_unbounded(entry("UD,DH"), Quantity::S1, 11).integer_coeffs() ==
          ints({1, 2, 4, 9, 21, 49, 115, 272, 646, 1538, 3670}));
    CHECK(eval_unbounded(entry("UU,HH"), Quantity::S0, 11).integer_coeffs() ==
          ints({1, 1, 1, 3, 4, 7, 15, 26, 50, 102, 196}));
    CHECK(eval_unbounded(entry("DH,HD"), Quantity::S1, 10).integer_coeffs() ==
          ints({1, 2, 5, 11, 26, 60, 142, 334, 794, 1885}));
}

TEST_CASE("property: closed forms equal brute force for every asserted entry, n <= 20") {
    for (const auto& e : cat().entries()) {
        if (e.closed_forms_trust != Trust::Asserted) continue;
        for (const auto& [q, t] : e.closed_forms) {
            CAPTURE(e.pair.key());
            CAPTURE(quantity_name(q));
            CHECK(eval_unbounded(e, q, 21).integer_coeffs() == brute_force_counts(e, q, 20));
        }
    }
}

TEST_CASE("discrepant entries count the pair their formulas encode") {
    // The UD&DH entry transcribes UD&DD; the DU&HD and DU&HU entries repeat UD&DU.
    const std::pair<const char*, const char*> cases[] = {{"UD,DH", "UD,DD"}, {"DU,HD", "UD,DU"}, {"DU,HU", "UD,DU"}};
    for (const auto& [printed, actual] : cases) {
        const auto& e = entry(printed);
        CHECK(e.closed_forms_trust == Trust::Discrepant);
        const auto a = build_automaton(PatternPair::parse(actual), std::nullopt);
        CHECK(eval_unbounded(e, Quantity::S0, 21).integer_coeffs() == count_paths(a, 20, Accept::excursions()));
        CHECK(eval_unbounded(e, Quantity::S1, 21).integer_coeffs() == count_paths(a, 20, Accept::meanders()));
        const auto own = build_automaton(e.pair, std::nullopt);
        CHECK(eval_unbounded(e, Quantity::S0, 21).integer_coeffs() != count_paths(own, 20, Accept::excursions()));
    }
}

TEST_CASE("eval_end_level examples and properties") {
    const auto& e = entry("UD,DH");
    CHECK(eval_end_level(e, 0, 15) == eval_unbounded(e, Quantity::S0, 15));
    const auto dd = build_automaton(PatternPair::parse("UD,DD"), std::nullopt);
    CHECK(eval_end_level(e, 1, 12).integer_coeffs() == count_paths(dd, 11, Accept::end_level(1)));
    CHECK_THROWS_AS(eval_end_level(e, -1, 5), MotzkinError);
    for (const auto& x : cat().entries()) {
        CAPTURE(x.pair.key());
        const std::size_t N = 17;
        std::vector<Integer> sum(N, 0);
        for (int j = 0; j < static_cast<int>(N); ++j) {
            const auto s = eval_end_level(x, j, N).integer_coeffs();
            for (int n = 0; n < j; ++n) CHECK(s[static_cast<std::size_t>(n)] == 0);
            for (std::size_t n = 0; n < N; ++n) sum[n] += s[n];
        }
        CHECK(from_ints(sum) == eval_unbounded(x, Quantity::S1, N));
    }
}

TEST_CASE("requesting an absent quantity raises NoClosedForm") {
    Catalog c = Catalog::builtin();
    CatalogEntry e = c.entries().front();
    e.closed_forms.erase(Quantity::F0);
    CHECK(code_of([&] { eval_unbounded(e, Quantity::F0, 5); }) == ErrorCode::NoClosedForm);
}

TEST_CASE("a mistranscribed template is caught by integrality or divisibility") {
    CatalogEntry e = entry("UD,DD");
    // S0 = r1 / z^2; corrupting the numerator to r1 / (2 z^2) breaks integrality
    Template& t = e.closed_forms.at(Quantity::S0);
    t.d0 = t.d0 * Poly{2};
    const ErrorCode c = code_of([&] { eval_unbounded(e, Quantity::S0, 10); });
    CHECK(c == ErrorCode::IntegralityViolation);
}
