#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "pauligeo/errors.hpp"
#include "pauligeo/gf2.hpp"

using namespace pauligeo;

namespace {

// brute-force span: closure under addition
std::set<std::uint32_t> closure(const std::vector<BinVec>& gens) {
  std::set<std::uint32_t> s{0};
  for (auto g : gens) {
    std::set<std::uint32_t> next = s;
    for (auto x : s) next.insert(x ^ g.value());
    s = next;
  }
  s.erase(0);
  return s;
}

// sum_{i<j} y_i y_j
bool edge_form(BinVec y) {
  const int w = y.weight();
  return (w * (w - 1) / 2) & 1;
}

bool standard_form(BinVec x) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += x.bit(i) & x.bit(i + 4);
  return s & 1;
}

}  // namespace

TEST_CASE("binvec parse and print") {
  const auto v = BinVec::parse("01100101");
  CHECK(v.dim() == 8);
  CHECK(v.value() == 0b01100101);
  CHECK(v.str() == "01100101");
  CHECK(v.bit(0) == false);
  CHECK(v.bit(1) == true);
  CHECK(v.weight() == 4);
  CHECK(BinVec::from_bits({1, 0, 0, 0, 0, 0, 0, 1}) == BinVec::parse("10000001"));
  CHECK(BinVec::unit(8, 0).str() == "10000000");
  CHECK(BinVec::unit(8, 7).str() == "00000001");
  CHECK(BinVec::zero(6).is_zero());
  CHECK_THROWS_AS(BinVec::parse("0120"), UsageError);
  CHECK_THROWS_AS(BinVec::parse(""), UsageError);
  CHECK_THROWS_AS(BinVec::parse("101010101"), UsageError);
}

TEST_CASE("addition and dot") {
  const auto a = BinVec::parse("1100"), b = BinVec::parse("1010");
  CHECK((a + b).str() == "0110");
  CHECK((a + a).is_zero());
  CHECK(dot(a, b) == true);
  CHECK(dot(a, BinVec::parse("0011")) == false);
  CHECK_THROWS_AS(a + BinVec::parse("101010"), UsageError);
}

TEST_CASE("canonical order is integer order") {
  const auto pts = all_points(6);
  CHECK(pts.size() == 63);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(pts.front().str() == "000001");
  CHECK(pts.back().str() == "111111");
}

TEST_CASE("lines") {
  const auto a = BinVec::parse("1000"), b = BinVec::parse("0100");
  const Line l(b, a + b, a);
  CHECK(l.points()[0] == b);
  CHECK(l.contains(a + b));
  CHECK(line_through(a, b) == l);
  CHECK_THROWS_AS(Line(a, b, b), DegenerateInput);
  CHECK_THROWS_AS(Line(a, b, BinVec::parse("0010")), DegenerateInput);
  CHECK_THROWS_AS(line_through(a, a), DegenerateInput);
  CHECK_THROWS_AS(line_through(a, BinVec::zero(4)), DegenerateInput);
}

TEST_CASE("span against brute-force closure") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BinVec> gens;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) gens.emplace_back(8, rng() % 256);
    const auto f = span(gens);
    const auto pts = flat_points(f);
    const auto brute = closure(gens);
    REQUIRE(pts.size() == brute.size());
    CHECK(f.point_count() == brute.size());
    for (auto p : pts) CHECK(brute.count(p.value()) == 1);
    for (std::uint32_t v = 1; v < 256; ++v) CHECK(f.contains(BinVec(8, v)) == (brute.count(v) == 1));

    // same subspace from shuffled, redundant generators gives the same RREF
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (!pts.empty()) shuffled.push_back(pts[rng() % pts.size()]);
    CHECK(span(shuffled) == f);
  }
}

TEST_CASE("rref shape") {
  const auto f = span({BinVec::parse("11000000"), BinVec::parse("10100000"), BinVec::parse("01100000")});
  CHECK(f.rank() == 2);
  CHECK(f.proj_dim() == 1);
  for (std::size_t i = 0; i + 1 < f.basis().size(); ++i) CHECK(f.basis()[i] > f.basis()[i + 1]);
  CHECK(span(std::vector<BinVec>{}).proj_dim() == -1);
  CHECK(f.extended(BinVec::parse("11000000")) == f);
  CHECK(f.extended(BinVec::parse("00000001")).rank() == 3);
}

TEST_CASE("intersection rank against brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BinVec> ga, gb;
    for (int i = 0; i < 4; ++i) ga.emplace_back(8, rng() % 256);
    for (int i = 0; i < 5; ++i) gb.emplace_back(8, rng() % 256);
    const auto a = closure(ga), b = closure(gb);
    std::size_t both = 0;
    for (auto x : a) both += b.count(x);
    const int r = intersection_rank(span(ga), span(gb));
    CHECK(both == (std::size_t{1} << r) - 1);
  }
}

TEST_CASE("edge transform") {
  // unit vectors and the all-ones vector land on the nine reference rows
  const char* rows[9] = {"10000001", "01110011", "01001010", "10110100", "00101000",
                         "11010000", "00010110", "11101101", "00001111"};
  for (int i = 0; i < 8; ++i) CHECK(edge_to_standard(BinVec::unit(8, i)).str() == rows[i]);
  CHECK(edge_to_standard(BinVec::parse("11111111")).str() == rows[8]);

  std::set<std::uint32_t> image;
  for (std::uint32_t v = 0; v < 256; ++v) {
    const BinVec y(8, v);
    const auto x = edge_to_standard(y);
    image.insert(x.value());
    CHECK(standard_to_edge(x) == y);
    // the transform carries one quadratic form onto the other
    CHECK(edge_form(y) == standard_form(x));
    for (std::uint32_t w : {3u, 77u, 200u}) CHECK(edge_to_standard(y + BinVec(8, w)) == x + edge_to_standard(BinVec(8, w)));
  }
  CHECK(image.size() == 256);
  CHECK_THROWS_AS(edge_to_standard(BinVec::parse("1010")), UsageError);
}

TEST_CASE("mask and sum helpers") {
  const std::vector<BinVec> v{BinVec::parse("0001"), BinVec::parse("0011")};
  CHECK(mask_of(v).count() == 2);
  CHECK(mask_of(v).test(3));
  CHECK(sum_of(v, 4).str() == "0010");
  CHECK(sum_of({}, 4).is_zero());
}
