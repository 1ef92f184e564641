#pragma once

// Exact matrix realization of real Pauli words, used as ground truth for the
// bit-level dictionary in pauli.hpp. Every real Pauli word is a signed
// permutation matrix, so we store it as one: column j has its single nonzero
// entry signs[j] in row perm[j].

#include <cstdint>
#include <utility>
#include <vector>

#include "pauligeo/pauli.hpp"

namespace pauligeo {

class SignedPermMatrix {
 public:
  static SignedPermMatrix identity(std::size_t size);
  SignedPermMatrix(std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs);

  std::size_t size() const { return perm_.size(); }
  const std::vector<std::uint32_t>& perm() const { return perm_; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  int entry(std::size_t row, std::size_t col) const { return perm_[col] == row ? signs_[col] : 0; }

  SignedPermMatrix operator*(const SignedPermMatrix& rhs) const;
  SignedPermMatrix operator-() const;
  bool operator==(const SignedPermMatrix&) const = default;

 private:
  std::vector<std::uint32_t> perm_;
  std::vector<std::int8_t> signs_;
};

SignedPermMatrix kronecker(const SignedPermMatrix& a, const SignedPermMatrix& b);

// Kronecker product of the base matrices I, X, Y = [[0,-1],[1,0]], Z in
// letter order.
SignedPermMatrix realize(const PauliWord& w);

// Splits m = sign * realize(word). Throws ConsistencyError when m is not of
// that form.
std::pair<int, PauliWord> decode(const SignedPermMatrix& m, int n_qubits);

bool oracle_symmetric(const PauliWord& w);
bool oracle_commutes(const PauliWord& a, const PauliWord& b);
PauliWord oracle_product(const PauliWord& a, const PauliWord& b);

struct OracleAgreement {
  std::size_t words_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t products_checked = 0;
  std::size_t mismatches = 0;
};

// Compares the matrix oracle with pauli.hpp over all non-identity words
// (symmetry), all unordered pairs (commutation) and either all ordered pairs
// or `product_samples` random pairs drawn with `seed` (products).
OracleAgreement check_oracle_agreement(int n_qubits, bool exhaustive_products, std::size_t product_samples,
                                       std::uint64_t seed = 0x5eed);

}  // namespace pauligeo
