#include "pauligeo/matrix_oracle.hpp"

#include <random>

#include "pauligeo/errors.hpp"

namespace pauligeo {

SignedPermMatrix SignedPermMatrix::identity(std::size_t size) {
  std::vector<std::uint32_t> perm(size);
  for (std::size_t j = 0; j < size; ++j) perm[j] = static_cast<std::uint32_t>(j);
  return SignedPermMatrix(std::move(perm), std::vector<std::int8_t>(size, 1));
}

SignedPermMatrix::SignedPermMatrix(std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw UsageError("permutation and sign vectors differ in length");
  std::vector<bool> seen(perm_.size());
  for (auto r : perm_) {
    if (r >= perm_.size() || seen[r]) throw UsageError("not a permutation");
    seen[r] = true;
  }
  for (auto s : signs_)
    if (s != 1 && s != -1) throw UsageError("signs must be +1 or -1");
}

SignedPermMatrix SignedPermMatrix::operator*(const SignedPermMatrix& rhs) const {
  if (size() != rhs.size()) throw UsageError("matrix size mismatch");
  std::vector<std::uint32_t> perm(size());
  std::vector<std::int8_t> signs(size());
  for (std::size_t j = 0; j < size(); ++j) {
    const auto mid = rhs.perm_[j];
    perm[j] = perm_[mid];
    signs[j] = static_cast<std::int8_t>(signs_[mid] * rhs.signs_[j]);
  }
  return SignedPermMatrix(std::move(perm), std::move(signs));
}

SignedPermMatrix SignedPermMatrix::operator-() const {
  auto signs = signs_;
  for (auto& s : signs) s = static_cast<std::int8_t>(-s);
  return SignedPermMatrix(perm_, std::move(signs));
}

SignedPermMatrix kronecker(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  const auto nb = b.size();
  std::vector<std::uint32_t> perm(a.size() * nb);
  std::vector<std::int8_t> signs(a.size() * nb);
  for (std::size_t ja = 0; ja < a.size(); ++ja)
    for (std::size_t jb = 0; jb < nb; ++jb) {
      perm[ja * nb + jb] = static_cast<std::uint32_t>(a.perm()[ja] * nb + b.perm()[jb]);
      signs[ja * nb + jb] = static_cast<std::int8_t>(a.signs()[ja] * b.signs()[jb]);
    }
  return SignedPermMatrix(std::move(perm), std::move(signs));
}

namespace {

SignedPermMatrix base_matrix(Letter l) {
  switch (l) {
    case Letter::I: return SignedPermMatrix({0, 1}, {1, 1});
    case Letter::X: return SignedPermMatrix({1, 0}, {1, 1});
    // [[0,-1],[1,0]]: column 0 -> row 1 (+1), column 1 -> row 0 (-1).
    case Letter::Y: return SignedPermMatrix({1, 0}, {1, -1});
    case Letter::Z: return SignedPermMatrix({0, 1}, {1, -1});
  }
  throw ConsistencyError("unknown Pauli letter");
}

}  // namespace

SignedPermMatrix realize(const PauliWord& w) {
  auto m = SignedPermMatrix::identity(1);
  for (int i = 0; i < w.size(); ++i) m = kronecker(m, base_matrix(w[i]));
  return m;
}

std::pair<int, PauliWord> decode(const SignedPermMatrix& m, int n_qubits) {
  if (m.size() != (std::size_t{1} << n_qubits)) throw UsageError("matrix size does not match qubit count");
  // A real Pauli word is +-X^a Z^b with Y = XZ, so column j goes to j ^ a with
  // sign (-1)^{b.j}. Read a and b off the columns 0 and 2^k, then confirm.
  const std::uint32_t xmask = m.perm()[0];
  const int sign = m.signs()[0];
  std::vector<Letter> letters;
  for (int i = 0; i < n_qubits; ++i) {
    const int k = n_qubits - 1 - i;
    const bool x = xmask >> k & 1u;
    const bool z = m.signs()[std::size_t{1} << k] * sign < 0;
    letters.push_back(x ? (z ? Letter::Y : Letter::X) : (z ? Letter::Z : Letter::I));
  }
  PauliWord w(std::move(letters));
  auto expect = realize(w);
  if (sign < 0) expect = -expect;
  if (!(expect == m)) throw ConsistencyError("matrix is not a signed Pauli word");
  return {sign, w};
}

bool oracle_symmetric(const PauliWord& w) {
  const auto m = realize(w);
  return m * m == SignedPermMatrix::identity(m.size());
}

bool oracle_commutes(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw UsageError("words of different lengths");
  const auto ma = realize(a), mb = realize(b);
  return ma * mb == mb * ma;
}

PauliWord oracle_product(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw UsageError("words of different lengths");
  return decode(realize(a) * realize(b), a.size()).second;
}

OracleAgreement check_oracle_agreement(int n_qubits, bool exhaustive_products, std::size_t product_samples,
                                       std::uint64_t seed) {
  const GeometryContext ctx(n_qubits);
  std::vector<PauliWord> words;
  std::vector<SignedPermMatrix> mats;
  for (auto p : ctx.points()) {
    words.push_back(point_to_word(p));
    mats.push_back(realize(words.back()));
  }

  OracleAgreement out;
  const auto id = SignedPermMatrix::identity(mats.front().size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++out.words_checked;
    if ((mats[i] * mats[i] == id) != is_symmetric(words[i])) ++out.mismatches;
    if ((mats[i] * mats[i] == id) != !ctx.quadratic(word_to_point(words[i]))) ++out.mismatches;
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      ++out.pairs_checked;
      const bool matrix_commute = mats[i] * mats[j] == mats[j] * mats[i];
      if (matrix_commute != commutes(words[i], words[j])) ++out.mismatches;
    }

  auto check_product = [&](std::size_t i, std::size_t j) {
    ++out.products_checked;
    const auto [sign, w] = decode(mats[i] * mats[j], n_qubits);
    (void)sign;
    if (!(w == word_product(words[i], words[j]))) ++out.mismatches;
  };
  if (exhaustive_products) {
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j) check_product(i, j);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (std::size_t s = 0; s < product_samples; ++s) check_product(pick(rng), pick(rng));
  }
  return out;
}

}  // namespace pauligeo
