#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spextral/containment.hpp"
#include "spextral/turan.hpp"

using namespace spextral;

TEST_CASE("connected path-free bound") {
  CHECK(turan_connected_path_bound(10, 3) == 9);
  CHECK(turan_connected_path_bound(5, 4) == 5);
  CHECK(turan_connected_path_bound(6, 5) == 9);
  CHECK_THROWS_AS(turan_connected_path_bound(3, 3), ArgumentError);
  CHECK_THROWS_AS(turan_connected_path_bound(10, 2), ArgumentError);
}

TEST_CASE("star bound") {
  CHECK(turan_star_bound(5, 3) == 5);
  CHECK(turan_star_bound(7, 4) == 10);
  // n = l+1 is the boundary the statement still covers: C4 attains 4
  CHECK(turan_star_bound(4, 3) == 4);
  CHECK_THROWS_AS(turan_star_bound(3, 3), ArgumentError);
  CHECK_THROWS_AS(turan_star_bound(9, 2), ArgumentError);
}

TEST_CASE("star forest piecewise formula") {
  TuranValue v = turan_star_forest(7, 2, 3);
  CHECK(v.value == 21);
  CHECK(v.case_tag == "n<k(l+1)");
  CHECK(v.guaranteed);

  CHECK(turan_star_forest(8, 2, 3).value == 21);
  CHECK(turan_star_forest(9, 2, 3).value == 22);
  CHECK(turan_star_forest(10, 2, 3).value == 24);
  CHECK(turan_star_forest(16, 2, 3).value == 30);
  CHECK(turan_star_forest(16, 2, 3).case_tag == "n>=(kl^2+2kl+2k-2)/2");

  // branches abut: non-decreasing in n over the whole grid
  for (int k = 2; k <= 4; ++k)
    for (int l = 3; l <= 6; ++l) {
      long long prev = 0;
      for (int n = 1; n <= 300; ++n) {
        long long cur = turan_star_forest(n, k, l).value;
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  CHECK_THROWS_AS(turan_star_forest(5, 1, 3), ArgumentError);
}

TEST_CASE("star-path exact value and families") {
  auto [v28, p28] = turan_star_path(28, 1, 4);
  CHECK(v28.value == 54);
  REQUIRE(p28.families.size() == 1);
  CHECK(p28.families[0].kind == FamilyKind::CliqueJoinCliques);
  CHECK(build(p28.families[0]).edge_count() == 54);

  auto [v29, p29] = turan_star_path(29, 1, 4);
  CHECK(v29.value == 55);
  REQUIRE(p29.families.size() == 2);
  CHECK(p29.families[1].kind == FamilyKind::Split);
  CHECK(p29.families[1].h == 2);
  CHECK(build(p29.families[1]).edge_count() == 55);

  auto [v20, p20] = turan_star_path(20, 1, 4);
  CHECK(v20.threshold == 26);
  CHECK(!v20.guaranteed);
  CHECK(!p20.guaranteed);
  CHECK(turan_star_path(26, 1, 4).first.guaranteed);

  // the attaining construction matches the closed form across the grid
  for (int k = 1; k <= 4; ++k)
    for (int l : {4, 5, 6, 7, 8})
      for (int n = k; n <= 200; ++n) {
        int r = (n - k) % (l - 1);
        auto [tv, pred] = turan_star_path(n, k, l);
        CHECK(build(ExtremalFamily::clique_join_cliques(n, k, l, r)).edge_count() == tv.value);
        CHECK(static_cast<double>(tv.value) <= upbound_star_path(n, k, l));
      }
}

TEST_CASE("coarse star-path bound is exactly half-integral") {
  CHECK(upbound_star_path(28, 1, 4) == doctest::Approx(67.5));
  CHECK(upbound_star_path(2, 1, 4) == doctest::Approx(2.5));
  CHECK(upbound_star_path(1, 1, 4) == doctest::Approx(0.0));
  CHECK(upbound_star_path(28, 1, 5) == doctest::Approx(67.5));  // floor(l/2) = 2
}

TEST_CASE("spectral transfer threshold") {
  CHECK(spectral_transfer_threshold(1, 3) == 16);
  CHECK(spectral_transfer_threshold(3, 100) == 10000);
  CHECK(spectral_transfer_threshold(4, 36) == 65536);
  CHECK_THROWS_AS(spectral_transfer_threshold(16, 2), ArgumentError);
  CHECK_THROWS_AS(spectral_transfer_threshold(2, 5000000000ull), ArgumentError);
}

TEST_CASE("star-path spectral prediction") {
  Prediction even = predicted_spectral_extremal(ForestPattern::parse("1S3+1P4"), 30);
  REQUIRE(even.families.size() == 1);
  CHECK(even.families[0].kind == FamilyKind::Split);
  CHECK(even.families[0].h == 2);
  CHECK(even.threshold == 45106645948416ull);  // 8 * 3^3 * 26^8
  CHECK(!even.guaranteed);
  CHECK(even.source == "star_path");

  Prediction odd = predicted_spectral_extremal(ForestPattern::parse("1S4+1P5"), 30);
  REQUIRE(odd.families.size() == 1);
  CHECK(odd.families[0].kind == FamilyKind::SplitPlus);
  CHECK(odd.families[0].h == 2);
}

TEST_CASE("odd-star even-path and two-P5 predictions") {
  // 1S3+2P4 is k1=1, k2=2 with l=2: split with h = 1 + 2*2 - 1 = 4
  Prediction p = predicted_spectral_extremal(ForestPattern::parse("1S3+2P4"), 40);
  REQUIRE(p.families.size() == 1);
  CHECK(p.families[0].kind == FamilyKind::Split);
  CHECK(p.families[0].h == 4);
  // m = (16-4+1)*1 + (8+6-4)*2 + 3 = 36, p = 4: max{2^16, 1296}
  CHECK(p.threshold == 65536);

  Prediction q = predicted_spectral_extremal(ForestPattern::parse("2S4+2P5"), 40);
  CHECK(q.families[0].kind == FamilyKind::SplitPlus);
  CHECK(q.families[0].h == 5);
  CHECK(q.threshold == std::max(1ull << 20, (21ull * 2 + 38) * (21 * 2 + 38)));
}

TEST_CASE("matching prediction follows the printed ranges, flagged") {
  Prediction a = predicted_spectral_extremal(ForestPattern::parse("2P2"), 4);
  CHECK(a.printed_statement_inconsistent);
  REQUIRE(a.families.size() == 1);
  CHECK(a.families[0].kind == FamilyKind::Split);
  CHECK(a.families[0].h == 4);  // K_n

  Prediction b = predicted_spectral_extremal(ForestPattern::parse("2P2"), 7);
  CHECK(b.families[0].kind == FamilyKind::CliqueUnionEmpty);
  CHECK(b.families[0].h == 5);

  Prediction c = predicted_spectral_extremal(ForestPattern::parse("2P2"), 8);
  CHECK(c.families.size() == 2);

  Prediction d = predicted_spectral_extremal(ForestPattern::parse("2P2"), 9);
  REQUIRE(d.families.size() == 1);
  CHECK(d.families[0].kind == FamilyKind::Split);
  CHECK(d.families[0].h == 2);
  CHECK(!d.note.empty());
}

TEST_CASE("P3 forest prediction") {
  Prediction p = predicted_spectral_extremal(ForestPattern::parse("2P3"), 26);
  REQUIRE(p.families.size() == 1);
  CHECK(p.families[0].kind == FamilyKind::LinearForestExtremal);
  CHECK(p.threshold == 26);  // 8*4 - 6
  CHECK(p.guaranteed);
  CHECK(!predicted_spectral_extremal(ForestPattern::parse("2P3"), 25).guaranteed);

  // stars with two leaves are the same forest as P3
  Prediction via_stars = predicted_spectral_extremal(ForestPattern::parse("1S2+1P3"), 26);
  CHECK(via_stars.source == "p3_forest");
}

TEST_CASE("unsupported shapes raise a dedicated error") {
  CHECK_THROWS_AS(predicted_spectral_extremal(ForestPattern::parse("1P4"), 10),
                  UnsupportedPatternError);
  CHECK_THROWS_AS(predicted_spectral_extremal(ForestPattern::parse("1S3+1P5"), 10),
                  UnsupportedPatternError);
  CHECK_THROWS_AS(predicted_spectral_extremal(ForestPattern::parse("1P3"), 10),
                  UnsupportedPatternError);
}

TEST_CASE("unflagged predictions build pattern-free graphs") {
  for (const char* text : {"1S3+1P4", "1S4+1P5", "2P3", "3P3"}) {
    ForestPattern f = ForestPattern::parse(text);
    for (int n = 6; n <= 14; ++n) {
      Prediction p = predicted_spectral_extremal(f, n);
      CHECK(!p.printed_statement_inconsistent);
      for (const auto& fam : p.families) CHECK(is_free(build(fam), f));
    }
  }
}
