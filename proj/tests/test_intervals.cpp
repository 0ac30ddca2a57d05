#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "adaregret/intervals.hpp"

using namespace adaregret;

namespace {

// Independent reconstruction of the unique-start rule: strip trailing zero
// bits to get the interval length.
Interval reference_interval(long t) {
  long k = std::countr_zero(static_cast<unsigned long>(t));
  long len = 1L << k;
  return {t, t + len - 1};
}

}  // namespace

TEST_CASE("one interval per starting round") {
  CHECK(cgc_interval_at(1) == Interval{1, 1});
  CHECK(cgc_interval_at(2) == Interval{2, 3});
  CHECK(cgc_interval_at(3) == Interval{3, 3});
  CHECK(cgc_interval_at(4) == Interval{4, 7});
  CHECK(cgc_interval_at(6) == Interval{6, 7});
  CHECK(cgc_interval_at(8) == Interval{8, 15});
  CHECK(cgc_interval_at(12) == Interval{12, 15});
  CHECK(cgc_interval_at(1536) == Interval{1536, 2047});
  CHECK_THROWS_AS(cgc_interval_at(0), std::invalid_argument);

  for (long t = 1; t <= 4096; ++t) CHECK(cgc_interval_at(t) == reference_interval(t));
}

TEST_CASE("full interval family at a round") {
  auto at12 = gc_intervals_at(12, 64);
  REQUIRE(at12.size() == 3);  // lengths 1, 2, 4
  CHECK(at12[0] == Interval{12, 12});
  CHECK(at12[1] == Interval{12, 13});
  CHECK(at12[2] == Interval{12, 15});

  auto at8 = gc_intervals_at(8, 10);  // horizon truncates the length-8 row
  REQUIRE(at8.size() == 4);
  CHECK(at8[3] == Interval{8, 10});
}

TEST_CASE("consecutive intervals at least double") {
  for (long t = 1; t <= 4096; ++t) {
    Interval i = cgc_interval_at(t);
    Interval j = cgc_interval_at(i.end + 1);
    CHECK(j.length() >= 2 * i.length());
  }
}

TEST_CASE("greedy cover properties") {
  auto cover = cgc_cover(5, 23);
  REQUIRE(cover.v() == 4);
  CHECK(cover.intervals[0] == Interval{5, 5});
  CHECK(cover.intervals[1] == Interval{6, 7});
  CHECK(cover.intervals[2] == Interval{8, 15});
  CHECK(cover.intervals[3] == Interval{16, 31});
  CHECK(cover_length_limit(5, 23) == 5);

  for (long r = 1; r <= 128; ++r) {
    for (long s = r; s <= 128; ++s) {
      auto c = cgc_cover(r, s);
      REQUIRE(c.v() >= 1);
      CHECK(c.intervals.front().start == r);
      CHECK(c.intervals.back().end >= s);
      for (long i = 1; i < c.v(); ++i) {
        CHECK(c.intervals[i].start == c.intervals[i - 1].end + 1);
        CHECK(c.intervals[i] == cgc_interval_at(c.intervals[i].start));
      }
      CHECK(c.v() <= cover_length_limit(r, s));
    }
  }
  CHECK_THROWS_AS(cgc_cover(3, 2), std::invalid_argument);
}

TEST_CASE("marker cover matches the round cover rule") {
  auto a = marker_cover(5, 23);
  auto b = cgc_cover(5, 23);
  CHECK(a.v() == b.v());
  for (long i = 0; i < a.v(); ++i) CHECK(a.intervals[i] == b.intervals[i]);
}

TEST_CASE("expert end index") {
  // m = i * 2^k with i odd expires at (i+1) * 2^k
  CHECK(cgc_end_index(1) == 2);
  CHECK(cgc_end_index(2) == 4);
  CHECK(cgc_end_index(3) == 4);
  CHECK(cgc_end_index(4) == 8);
  CHECK(cgc_end_index(6) == 8);
  CHECK(cgc_end_index(12) == 16);
  for (long m = 1; m <= 1024; ++m) {
    CHECK(cgc_end_index(m) == reference_interval(m).end + 1);
  }
}

TEST_CASE("length limit formula") {
  for (long r = 1; r <= 64; ++r) {
    for (long s = r; s <= 64; ++s) {
      long expected = static_cast<long>(std::ceil(std::log2(double(s - r + 2))));
      CHECK(cover_length_limit(r, s) == expected);
    }
  }
}

TEST_CASE("interval diagram rendering") {
  std::string cgc = render_intervals("cgc", 8);
  // row 0 holds the odd singletons, row 3 the truncated [8, 15]
  CHECK(cgc.find("C0") != std::string::npos);
  CHECK(cgc.find("C3") != std::string::npos);
  std::string gc = render_intervals("gc", 4);
  CHECK(gc.find("I0") != std::string::npos);
  CHECK_THROWS_AS(render_intervals("pgc", 8), std::invalid_argument);

  CHECK(render_cover(5, 23) == "5..5, 6..7, 8..15, 16..31  v=4 <= 5");
}
