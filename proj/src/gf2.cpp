#include "pauligeo/gf2.hpp"

#include <algorithm>

#include "pauligeo/errors.hpp"

namespace pauligeo {

BinVec::BinVec(int dim, std::uint32_t value) {
  if (dim < 1 || dim > kMaxDim) throw UsageError("vector length must be in 1..8, got " + std::to_string(dim));
  if (value >> dim) throw UsageError("vector value does not fit in " + std::to_string(dim) + " bits");
  dim_ = static_cast<std::uint8_t>(dim);
  value_ = static_cast<std::uint16_t>(value);
}

BinVec BinVec::from_bits(std::initializer_list<int> bits) {
  std::uint32_t v = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw UsageError("coordinates must be 0 or 1");
    v = (v << 1) | static_cast<std::uint32_t>(b);
  }
  return BinVec(static_cast<int>(bits.size()), v);
}

BinVec BinVec::parse(std::string_view text) {
  std::uint32_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw UsageError("malformed coordinate string '" + std::string(text) + "'");
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BinVec(static_cast<int>(text.size()), v);
}

BinVec BinVec::unit(int dim, int index) {
  if (index < 0 || index >= dim) throw UsageError("coordinate index out of range");
  return BinVec(dim, 1u << (dim - 1 - index));
}

std::string BinVec::str() const {
  std::string s(dim_, '0');
  for (int i = 0; i < dim_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

BinVec vec_add(BinVec u, BinVec v) {
  if (u.dim() != v.dim())
    throw UsageError("vector length mismatch: " + std::to_string(u.dim()) + " vs " + std::to_string(v.dim()));
  return BinVec(u.dim(), u.value() ^ v.value());
}

PointMask mask_of(std::span<const BinVec> points) {
  PointMask m;
  for (auto p : points) m.set(p.value());
  return m;
}

BinVec sum_of(std::span<const BinVec> points, int dim) {
  BinVec s = BinVec::zero(dim);
  for (auto p : points) s = s + p;
  return s;
}

std::vector<BinVec> all_points(int dim) {
  std::vector<BinVec> out;
  out.reserve((std::size_t{1} << dim) - 1);
  for (std::uint32_t v = 1; v < (1u << dim); ++v) out.emplace_back(dim, v);
  return out;
}

// --- Line ------------------------------------------------------------------

Line::Line(BinVec a, BinVec b, BinVec c) : points_{a, b, c} {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw DegenerateInput("a line cannot contain the zero vector");
  if (a == b || b == c || a == c) throw DegenerateInput("line points must be distinct");
  if (!(a + b + c).is_zero()) throw DegenerateInput("line points must sum to zero");
  std::sort(points_.begin(), points_.end());
}

bool Line::contains(BinVec p) const { return std::find(points_.begin(), points_.end(), p) != points_.end(); }

std::string Line::str() const { return points_[0].str() + " " + points_[1].str() + " " + points_[2].str(); }

Line line_through(BinVec p, BinVec q) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("line through the zero vector");
  if (p == q) throw DegenerateInput("line through a point and itself");
  return Line(p, q, p + q);
}

// --- Flat ------------------------------------------------------------------

namespace {

int pivot_of(std::uint32_t v) { return 31 - std::countl_zero(v); }

// Reduces v against an RREF basis.
std::uint32_t reduce(const std::vector<BinVec>& basis, std::uint32_t v) {
  for (auto row : basis) {
    const std::uint32_t pivot = 1u << pivot_of(row.value());
    if (v & pivot) v ^= row.value();
  }
  return v;
}

}  // namespace

bool Flat::contains(BinVec v) const {
  if (v.dim() != dim_) return false;
  return reduce(basis_, v.value()) == 0;
}

Flat Flat::extended(BinVec v) const {
  if (dim_ != 0 && v.dim() != dim_) throw UsageError("flat and vector live in different spaces");
  std::uint32_t r = reduce(basis_, v.value());
  if (r == 0) return *this;

  Flat out(v.dim());
  out.basis_ = basis_;
  const std::uint32_t pivot = 1u << pivot_of(r);
  for (auto& row : out.basis_)
    if (row.value() & pivot) row = BinVec(v.dim(), row.value() ^ r);
  out.basis_.emplace_back(v.dim(), r);
  std::sort(out.basis_.begin(), out.basis_.end(), std::greater<>());
  return out;
}

std::vector<std::string> Flat::serialize() const {
  std::vector<std::string> out;
  for (auto b : basis_) out.push_back(b.str());
  return out;
}

Flat span(std::span<const BinVec> points) {
  if (points.empty()) return Flat();
  Flat f(points.front().dim());
  for (auto p : points) f = f.extended(p);
  return f;
}

std::vector<BinVec> flat_points(const Flat& f) {
  std::vector<BinVec> out;
  const auto& basis = f.basis();
  const std::uint32_t n = 1u << basis.size();
  out.reserve(n - 1);
  for (std::uint32_t combo = 1; combo < n; ++combo) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (combo >> i & 1u) v ^= basis[i].value();
    out.emplace_back(f.dim(), v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int intersection_rank(const Flat& a, const Flat& b) {
  Flat joined = a;
  for (auto v : b.basis()) joined = joined.extended(v);
  return a.rank() + b.rank() - joined.rank();
}

// --- Edge coordinates -------------------------------------------------------

namespace {

// Row i holds the y-coordinates summed into x_{i+1}; y_1 is bit 7.
constexpr std::uint32_t y_mask(std::initializer_list<int> ys) {
  std::uint32_t m = 0;
  for (int y : ys) m |= 1u << (8 - y);
  return m;
}

constexpr std::array<std::uint32_t, 8> kEdgeRows = {
    y_mask({1, 4, 6, 8}), y_mask({2, 3, 6, 8}), y_mask({2, 4, 5, 8}), y_mask({2, 4, 6, 7}),
    y_mask({3, 5, 8}),    y_mask({4, 7, 8}),    y_mask({2, 3, 7}),    y_mask({1, 2, 8}),
};

std::uint32_t apply_edge(std::uint32_t y) {
  std::uint32_t x = 0;
  for (int i = 0; i < 8; ++i) x = (x << 1) | (std::popcount(kEdgeRows[i] & y) & 1u);
  return x;
}

const std::array<std::uint8_t, 256>& inverse_edge_table() {
  static const auto table = [] {
    std::array<std::uint8_t, 256> t{};
    std::array<bool, 256> hit{};
    for (std::uint32_t y = 0; y < 256; ++y) {
      const auto x = apply_edge(y);
      if (hit[x]) throw ConsistencyError("Edge coordinate transform is not invertible");
      hit[x] = true;
      t[x] = static_cast<std::uint8_t>(y);
    }
    return t;
  }();
  return table;
}

}  // namespace

BinVec edge_to_standard(BinVec y) {
  if (y.dim() != 8) throw UsageError("Edge coordinates need exactly 8 components");
  return BinVec(8, apply_edge(y.value()));
}

BinVec standard_to_edge(BinVec x) {
  if (x.dim() != 8) throw UsageError("Edge coordinates need exactly 8 components");
  return BinVec(8, inverse_edge_table()[x.value()]);
}

}  // namespace pauligeo
