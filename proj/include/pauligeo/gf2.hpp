#pragma once

// Linear and projective algebra over GF(2) for the small spaces PG(3,2),
// PG(5,2) and PG(7,2).
//
// Coordinates are x_1..x_{2N}; x_1 is the leftmost printed coordinate and the
// most significant bit of the integer encoding, so ascending integer order is
// the canonical point order.

#include <array>
#include <bit>
#include <bitset>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pauligeo {

inline constexpr int kMaxDim = 8;

class BinVec {
 public:
  constexpr BinVec() = default;
  BinVec(int dim, std::uint32_t value);

  // Bits in x_1..x_dim order.
  static BinVec from_bits(std::initializer_list<int> bits);
  // Parses "01100101" (x_1 first).
  static BinVec parse(std::string_view text);
  // The vector with a single 1 at 0-based coordinate `index`.
  static BinVec unit(int dim, int index);
  static BinVec zero(int dim) { return BinVec(dim, 0); }

  constexpr int dim() const { return dim_; }
  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  // 0-based coordinate access: bit(0) is x_1.
  bool bit(int index) const { return (value_ >> (dim_ - 1 - index)) & 1u; }
  int weight() const { return std::popcount(static_cast<unsigned>(value_)); }

  std::string str() const;

  constexpr auto operator<=>(const BinVec&) const = default;

 private:
  std::uint8_t dim_ = 0;
  std::uint16_t value_ = 0;
};

// Componentwise sum mod 2. Throws UsageError on a length mismatch.
BinVec vec_add(BinVec u, BinVec v);
inline BinVec operator+(BinVec u, BinVec v) { return vec_add(u, v); }

inline bool dot(BinVec u, BinVec v) {
  return std::popcount(static_cast<unsigned>(u.value() & v.value())) & 1u;
}

// Membership mask over all 256 encodings; a cheap set of points.
using PointMask = std::bitset<256>;
PointMask mask_of(std::span<const BinVec> points);

// Sum of a set of vectors; zero of `dim` when empty.
BinVec sum_of(std::span<const BinVec> points, int dim);

// All nonzero vectors of GF(2)^dim in canonical order.
std::vector<BinVec> all_points(int dim);

class Line {
 public:
  // Throws DegenerateInput unless the three points are nonzero, distinct and
  // sum to zero.
  Line(BinVec a, BinVec b, BinVec c);

  const std::array<BinVec, 3>& points() const { return points_; }
  bool contains(BinVec p) const;
  std::string str() const;

  auto operator<=>(const Line&) const = default;

 private:
  std::array<BinVec, 3> points_;  // ascending
};

// {p, q, p+q}. Throws DegenerateInput when p == q or either is zero.
Line line_through(BinVec p, BinVec q);

// A projective subspace stored as its reduced row-echelon basis. Rows are
// ordered by descending pivot, pivot = leading (most significant) bit, and
// every pivot column is clear in all other rows. This form is unique per
// subspace, so equality is structural.
class Flat {
 public:
  Flat() = default;
  explicit Flat(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  int proj_dim() const { return rank() - 1; }
  const std::vector<BinVec>& basis() const { return basis_; }

  bool contains(BinVec v) const;
  // The same flat with `v` adjoined (no-op when already contained).
  Flat extended(BinVec v) const;
  std::size_t point_count() const { return (std::size_t{1} << rank()) - 1; }

  std::vector<std::string> serialize() const;

  bool operator==(const Flat&) const = default;
  auto operator<=>(const Flat& other) const { return basis_ <=> other.basis_; }

 private:
  int dim_ = 0;
  std::vector<BinVec> basis_;
};

// Canonical flat spanned by `points`. Empty input gives the empty flat
// (proj_dim -1).
Flat span(std::span<const BinVec> points);
inline Flat span(std::initializer_list<BinVec> points) {
  return span(std::span<const BinVec>(points.begin(), points.size()));
}

// All 2^(rank) - 1 points of the flat, ascending.
std::vector<BinVec> flat_points(const Flat& f);

// Rank of the intersection of two flats of the same ambient space.
int intersection_rank(const Flat& a, const Flat& b);

// The linear change of coordinates taking Edge's coordinates y_1..y_8, in
// which Q+(7,2) reads sum_{i<j} y_i y_j = 0, to the standard x_1..x_8 of the
// Pauli bijection. Throws UsageError unless y has length 8.
BinVec edge_to_standard(BinVec y);
// Inverse of edge_to_standard.
BinVec standard_to_edge(BinVec x);

}  // namespace pauligeo
