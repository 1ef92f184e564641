#include "pauligeo/pauli.hpp"

#include <algorithm>
#include <bit>

#include "pauligeo/errors.hpp"

namespace pauligeo {

namespace {

// (x_i, x_{i+N}) for each letter.
constexpr std::array<std::array<unsigned, 2>, 4> kLetterBits = {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};

Letter letter_from_bits(unsigned hi, unsigned lo) {
  if (!hi) return lo ? Letter::X : Letter::I;
  return lo ? Letter::Y : Letter::Z;
}

int parity(std::uint32_t v) { return std::popcount(v) & 1; }

}  // namespace

char to_char(Letter l) { return "IXYZ"[static_cast<int>(l)]; }

const char* to_string(ElementClass c) { return c == ElementClass::symmetric ? "symmetric" : "skew"; }

PauliWord::PauliWord(std::vector<Letter> letters) {
  if (letters.empty() || letters.size() > kMaxQubits) throw UsageError("words must have 1..4 letters");
  n_ = static_cast<std::uint8_t>(letters.size());
  std::copy(letters.begin(), letters.end(), letters_.begin());
}

PauliWord PauliWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(Letter::I); break;
      case 'X': letters.push_back(Letter::X); break;
      case 'Y': letters.push_back(Letter::Y); break;
      case 'Z': letters.push_back(Letter::Z); break;
      default: throw UsageError("malformed Pauli word '" + std::string(text) + "'");
    }
  }
  return PauliWord(std::move(letters));
}

PauliWord PauliWord::identity(int n) { return PauliWord(std::vector<Letter>(n, Letter::I)); }

bool PauliWord::is_identity() const {
  return std::all_of(letters_.begin(), letters_.begin() + n_, [](Letter l) { return l == Letter::I; });
}

int PauliWord::y_count() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.begin() + n_, Letter::Y));
}

std::string PauliWord::str() const {
  std::string s;
  for (int i = 0; i < n_; ++i) s += to_char(letters_[i]);
  return s;
}

// --- GeometryContext ---------------------------------------------------------

GeometryContext::GeometryContext(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw UsageError("number of qubits must be in 1..4");
}

bool GeometryContext::symplectic(BinVec u, BinVec v) const {
  if (u.dim() != dim() || v.dim() != dim()) throw UsageError("vector does not belong to this space");
  const std::uint32_t low = (1u << n_) - 1;
  const auto uh = u.value() >> n_, ul = u.value() & low;
  const auto vh = v.value() >> n_, vl = v.value() & low;
  return parity((uh & vl) ^ (ul & vh));
}

bool GeometryContext::quadratic(BinVec u) const {
  if (u.dim() != dim()) throw UsageError("vector does not belong to this space");
  return parity((u.value() >> n_) & u.value());
}

std::vector<BinVec> GeometryContext::quadric_points() const {
  std::vector<BinVec> out;
  for (auto p : points())
    if (!quadratic(p)) out.push_back(p);
  return out;
}

std::vector<BinVec> GeometryContext::off_quadric_points() const {
  std::vector<BinVec> out;
  for (auto p : points())
    if (quadratic(p)) out.push_back(p);
  return out;
}

// --- bijection ---------------------------------------------------------------

BinVec word_to_point(const PauliWord& w) {
  if (w.is_identity()) throw IdentityNotAPoint();
  const int n = w.size();
  std::uint32_t hi = 0, lo = 0;
  for (int i = 0; i < n; ++i) {
    const auto& bits = kLetterBits[static_cast<int>(w[i])];
    hi = (hi << 1) | bits[0];
    lo = (lo << 1) | bits[1];
  }
  return BinVec(2 * n, (hi << n) | lo);
}

PauliWord point_to_word(BinVec p) {
  if (p.dim() % 2 != 0) throw UsageError("point length must be even");
  if (p.is_zero()) throw IdentityNotAPoint();
  const int n = p.dim() / 2;
  std::vector<Letter> letters;
  for (int i = 0; i < n; ++i) letters.push_back(letter_from_bits(p.bit(i), p.bit(i + n)));
  return PauliWord(std::move(letters));
}

PauliWord word_product(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw UsageError("words of different lengths");
  // Per-letter: the bit pairs add, which is the sign-free product.
  std::vector<Letter> out;
  for (int i = 0; i < a.size(); ++i) {
    const auto& x = kLetterBits[static_cast<int>(a[i])];
    const auto& y = kLetterBits[static_cast<int>(b[i])];
    out.push_back(letter_from_bits(x[0] ^ y[0], x[1] ^ y[1]));
  }
  return PauliWord(std::move(out));
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw UsageError("words of different lengths");
  if (a.is_identity() || b.is_identity()) return true;
  return !GeometryContext(a.size()).symplectic(word_to_point(a), word_to_point(b));
}

bool is_symmetric(const PauliWord& w) { return w.y_count() % 2 == 0; }

BinVec parse_point(std::string_view token) {
  if (!token.empty() && (token[0] == '0' || token[0] == '1')) {
    auto p = BinVec::parse(token);
    if (p.dim() % 2 != 0 || p.dim() < 2) throw UsageError("coordinate string must have even length 2..8");
    if (p.is_zero()) throw IdentityNotAPoint();
    return p;
  }
  return word_to_point(PauliWord::parse(token));
}

}  // namespace pauligeo
