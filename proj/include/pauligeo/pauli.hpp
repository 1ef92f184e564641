#pragma once

// The dictionary between the sign-free N-qubit Pauli group and PG(2N-1, 2).
//
// Letter A_i of a word sits on the coordinate pair (x_i, x_{i+N}) with
// I -> (0,0), X -> (0,1), Y -> (1,1), Z -> (1,0). Under this map the
// symplectic form detects anticommutation and the quadratic form
// x_1 x_{N+1} + ... + x_N x_{2N} detects skew-symmetry.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pauligeo/gf2.hpp"

namespace pauligeo {

inline constexpr int kMaxQubits = 4;

enum class Letter : std::uint8_t { I, X, Y, Z };

char to_char(Letter l);

class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::vector<Letter> letters);

  // "IYZX"; throws UsageError on anything else.
  static PauliWord parse(std::string_view text);
  static PauliWord identity(int n);

  int size() const { return n_; }
  Letter operator[](int i) const { return letters_[i]; }
  bool is_identity() const;
  int y_count() const;

  std::string str() const;

  auto operator<=>(const PauliWord&) const = default;

 private:
  std::uint8_t n_ = 0;
  std::array<Letter, kMaxQubits> letters_{};
};

enum class ElementClass { symmetric, skew };
const char* to_string(ElementClass c);

// The rank N together with the two forms on GF(2)^{2N}.
class GeometryContext {
 public:
  explicit GeometryContext(int n_qubits);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  // sigma(u, v) = sum_i (u_i v_{i+N} + u_{i+N} v_i).
  bool symplectic(BinVec u, BinVec v) const;
  // Q(u) = sum_i u_i u_{i+N}.
  bool quadratic(BinVec u) const;

  ElementClass classify(BinVec p) const { return quadratic(p) ? ElementClass::skew : ElementClass::symmetric; }

  std::vector<BinVec> points() const { return all_points(dim()); }
  std::vector<BinVec> quadric_points() const;
  std::vector<BinVec> off_quadric_points() const;

 private:
  int n_;
};

// Throws IdentityNotAPoint for the all-I word.
BinVec word_to_point(const PauliWord& w);
// Throws IdentityNotAPoint for the zero vector and UsageError for odd length.
PauliWord point_to_word(BinVec p);

// Sign-free product; a * a is the identity word. Throws UsageError when the
// sizes differ.
PauliWord word_product(const PauliWord& a, const PauliWord& b);

bool commutes(const PauliWord& a, const PauliWord& b);
bool is_symmetric(const PauliWord& w);
inline ElementClass classify(const PauliWord& w) { return is_symmetric(w) ? ElementClass::symmetric : ElementClass::skew; }

// Accepts either a word ("IYZX") or a coordinate string ("01100101").
BinVec parse_point(std::string_view token);

}  // namespace pauligeo
