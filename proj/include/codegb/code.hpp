#ifndef CODEGB_CODE_HPP
#define CODEGB_CODE_HPP

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "codegb/errors.hpp"
#include "codegb/field.hpp"

namespace codegb {

using Word = std::vector<FieldElem>;

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldElem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  FieldElem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  FieldElem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Word row(std::size_t i) const { return Word(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline int weight(const Word& w) {
  int n = 0;
  for (FieldElem x : w)
    if (!x.is_zero()) ++n;
  return n;
}

inline int hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) fail(errc::length_mismatch, "word lengths differ");
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++n;
  return n;
}

inline Word word_add(const Field& F, const Word& a, const Word& b) {
  if (a.size() != b.size()) fail(errc::length_mismatch, "word lengths differ");
  Word c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.add(a[i], b[i]);
  return c;
}

inline Word word_sub(const Field& F, const Word& a, const Word& b) {
  if (a.size() != b.size()) fail(errc::length_mismatch, "word lengths differ");
  Word c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.sub(a[i], b[i]);
  return c;
}

inline Word word_scale(const Field& F, FieldElem s, const Word& a) {
  Word c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.mul(s, a[i]);
  return c;
}

/// Row-reduce G to (I_k | M) up to a recorded column permutation.
/// perm[j] is the original column shown at position j of the result;
/// perm is the identity whenever the pivot columns of the row-reduced
/// matrix are already the first k columns.
inline std::pair<Matrix, std::vector<int>> standard_form(const Field& F, Matrix G) {
  const std::size_t k = G.rows, n = G.cols;
  std::vector<int> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < k; ++col) {
    std::size_t pr = row;
    while (pr < k && G.at(pr, col).is_zero()) ++pr;
    if (pr == k) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(G.a[row * n + j], G.a[pr * n + j]);
    FieldElem piv_inv = F.inv(G.at(row, col));
    for (std::size_t j = 0; j < n; ++j) G.at(row, j) = F.mul(piv_inv, G.at(row, j));
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || G.at(i, col).is_zero()) continue;
      FieldElem c = G.at(i, col);
      for (std::size_t j = 0; j < n; ++j)
        G.at(i, j) = F.sub(G.at(i, j), F.mul(c, G.at(row, j)));
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  if (pivots.size() != k) fail(errc::rank_deficient, "generator matrix rank below k");

  std::vector<int> perm(pivots);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) perm.push_back(static_cast<int>(j));

  Matrix S(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) S.at(i, j) = G.at(i, perm[j]);
  return {std::move(S), std::move(perm)};
}

/// Linear [n,k] code given by a full-rank generator matrix.
class LinearCode {
 public:
  LinearCode(std::shared_ptr<const Field> field, Matrix G)
      : field_(std::move(field)), G_(std::move(G)) {
    if (G_.rows == 0 || G_.cols == 0 || G_.rows > G_.cols)
      fail(errc::rank_deficient, "need 1 <= k <= n");
    auto [S, perm] = standard_form(*field_, G_);
    G_std_ = std::move(S);
    perm_ = std::move(perm);
    build_parity_check();
  }

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::size_t length() const { return G_.cols; }
  std::size_t dimension() const { return G_.rows; }

  const Matrix& generator() const { return G_; }
  const Matrix& standard_generator() const { return G_std_; }
  const std::vector<int>& column_permutation() const { return perm_; }
  bool permuted() const {
    for (std::size_t j = 0; j < perm_.size(); ++j)
      if (perm_[j] != static_cast<int>(j)) return true;
    return false;
  }

  /// Parity check matrix in the original column order.
  const Matrix& parity_check() const { return H_; }

  Word encode(const Word& msg) const {
    if (msg.size() != dimension()) fail(errc::length_mismatch, "message length");
    Word c(length(), field_->zero());
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < length(); ++j)
        c[j] = field_->add(c[j], field_->mul(msg[i], G_.at(i, j)));
    return c;
  }

  Word syndrome(const Word& w) const {
    if (w.size() != length()) fail(errc::length_mismatch, "word length");
    Word s(H_.rows, field_->zero());
    for (std::size_t i = 0; i < H_.rows; ++i)
      for (std::size_t j = 0; j < length(); ++j)
        s[i] = field_->add(s[i], field_->mul(H_.at(i, j), w[j]));
    return s;
  }

  bool is_codeword(const Word& w) const {
    Word s = syndrome(w);
    return std::all_of(s.begin(), s.end(), [](FieldElem x) { return x.is_zero(); });
  }

 private:
  void build_parity_check() {
    const std::size_t k = dimension(), n = length(), m = n - k;
    H_ = Matrix(m, n);
    // (-M^T | I_{n-k}) in the permuted order, mapped back through perm.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        H_.at(i, perm_[j]) = field_->neg(G_std_.at(j, k + i));
      H_.at(i, perm_[k + i]) = field_->one();
    }
  }

  std::shared_ptr<const Field> field_;
  Matrix G_;
  Matrix G_std_;
  std::vector<int> perm_;
  Matrix H_;
};

/// All q^k codewords in lexicographic message order (message digits run
/// over element idx 0..q-1, last coordinate fastest).
inline std::vector<Word> enumerate_codewords(const LinearCode& C, std::size_t cap = 1u << 20) {
  const Field& F = C.field();
  const std::size_t k = C.dimension();
  double total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= F.q();
  if (total > static_cast<double>(cap)) fail(errc::too_large, "q^k exceeds enumeration cap");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  Word msg(k, F.zero());
  while (true) {
    out.push_back(C.encode(msg));
    std::size_t i = k;
    while (i > 0) {
      --i;
      unsigned next = msg[i].idx() + 1;
      if (next < static_cast<unsigned>(F.q())) {
        msg[i] = FieldElem(next);
        break;
      }
      msg[i] = F.zero();
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

struct Distance {
  int d = 0;
  int t = 0;
};

/// Minimum distance by exhaustive enumeration; t = floor((d-1)/2).
inline Distance min_distance(const LinearCode& C, std::size_t cap = 1u << 20) {
  int d = static_cast<int>(C.length());
  bool seen = false;
  for (const Word& c : enumerate_codewords(C, cap)) {
    int w = weight(c);
    if (w > 0 && (!seen || w < d)) {
      d = w;
      seen = true;
    }
  }
  if (!seen) fail(errc::rank_deficient, "no nonzero codeword");
  return {d, (d - 1) / 2};
}

}  // namespace codegb

#endif
