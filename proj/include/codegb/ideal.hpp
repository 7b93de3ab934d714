#ifndef CODEGB_IDEAL_HPP
#define CODEGB_IDEAL_HPP

#include <memory>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/errors.hpp"
#include "codegb/field.hpp"
#include "codegb/groebner.hpp"
#include "codegb/monomial.hpp"

namespace codegb {

/// Index bookkeeping for the doubled variable set x_{i,j}, i in 1..n,
/// j in 1..q-1, flat-ordered block by block, plus the crossing maps
/// between words and 0/1 exponent vectors and the expansion map into
/// the basis alpha^{q-r}, ..., alpha^{q-1}.
class Crossing {
 public:
  Crossing(std::shared_ptr<const Field> field, std::size_t n)
      : F_(std::move(field)), n_(n), w_(F_->q() - 1) {
    const int p = F_->p(), r = F_->r(), q = F_->q();
    // Columns of B are the coefficient vectors of alpha^{q-r+t}; the
    // inverse converts standard coordinates into that basis.
    std::vector<std::vector<int>> B(r, std::vector<int>(2 * r, 0));
    for (int t = 0; t < r; ++t) {
      const std::vector<int>& col = F_->coeffs(F_->alpha_pow(q - r + t));
      for (int s = 0; s < r; ++s) B[s][t] = col[s];
    }
    for (int s = 0; s < r; ++s) B[s][r + s] = 1;
    for (int col = 0, row = 0; col < r && row < r; ++col) {
      int pr = row;
      while (pr < r && B[pr][col] % p == 0) ++pr;
      std::swap(B[row], B[pr]);  // basis matrix is invertible, pivot exists
      long long inv = 1, base = B[row][col] % p, e = p - 2;
      for (long long b = base; e; e >>= 1, b = b * b % p)
        if (e & 1) inv = inv * b % p;
      for (int j = 0; j < 2 * r; ++j) B[row][j] = static_cast<int>(B[row][j] * inv % p);
      for (int i = 0; i < r; ++i) {
        if (i == row || B[i][col] % p == 0) continue;
        int c = B[i][col] % p;
        for (int j = 0; j < 2 * r; ++j) B[i][j] = ((B[i][j] - c * B[row][j]) % p + p) % p;
      }
      ++row;
    }
    basis_inv_.assign(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) basis_inv_[i][j] = B[i][r + j];
  }

  const Field& field() const { return *F_; }
  std::size_t blocks() const { return n_; }
  std::size_t width() const { return w_; }
  std::size_t nvars() const { return n_ * w_; }

  /// Flat index of x_{block+1, j}, j in 1..q-1.
  std::size_t var(std::size_t block, unsigned j) const { return block * w_ + (j - 1); }

  Monomial up(const Word& w) const {
    if (w.size() != n_) fail(errc::length_mismatch, "word length");
    Monomial m(nvars());
    for (std::size_t i = 0; i < n_; ++i)
      if (!w[i].is_zero()) m[var(i, w[i].idx())] = 1;
    return m;
  }

  Word down(const Monomial& m) const {
    if (m.nvars() != nvars()) fail(errc::length_mismatch, "exponent vector length");
    Word w(n_, F_->zero());
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned j = 1; j <= w_; ++j) {
        Exp e = m[var(i, j)];
        if (e) w[i] = F_->add(w[i], F_->scalar(e, F_->alpha_pow(j)));
      }
    return w;
  }

  /// Expansion of beta in the basis alpha^{q-r},...,alpha^{q-1}, left-
  /// padded with q-1-r zeros; entries in 0..p-1.
  std::vector<int> phi(FieldElem beta) const {
    const int p = F_->p(), r = F_->r(), q = F_->q();
    const std::vector<int>& c = F_->coeffs(beta);
    std::vector<int> out(q - 1, 0);
    for (int i = 0; i < r; ++i) {
      long long acc = 0;
      for (int j = 0; j < r; ++j) acc += static_cast<long long>(basis_inv_[i][j]) * c[j];
      out[q - 1 - r + i] = static_cast<int>(acc % p);
    }
    return out;
  }

  std::vector<int> phi_word(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size() * w_);
    for (FieldElem x : w) {
      std::vector<int> v = phi(x);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

 private:
  std::shared_ptr<const Field> F_;
  std::size_t n_;
  std::size_t w_;
  std::vector<std::vector<int>> basis_inv_;
};

struct CodeIdealGens {
  std::size_t nvars = 0;
  std::vector<Binomial> gens;
};

struct GenCodeIdealGens {
  std::size_t nvars = 0;
  std::vector<Binomial> code_part;   // one binomial per row and scalar
  std::vector<Binomial> field_part;  // additive relations per coordinate

  std::vector<Binomial> all() const {
    std::vector<Binomial> out(code_part);
    out.insert(out.end(), field_part.begin(), field_part.end());
    return out;
  }
};

namespace detail {

inline void require_prime_field(const LinearCode& C, const char* what) {
  if (C.field().r() != 1) fail(errc::not_prime_field, what);
}

inline MonomialOrder lex_for_permutation(const std::vector<int>& perm) {
  return MonomialOrder::lex(perm);
}

/// Ranking of the doubled variables induced by a column permutation:
/// blocks in permuted order, positions 1..q-1 inside each block.
inline MonomialOrder doubled_lex(const std::vector<int>& perm, std::size_t width) {
  std::vector<int> ranking;
  ranking.reserve(perm.size() * width);
  for (int b : perm)
    for (std::size_t j = 0; j < width; ++j)
      ranking.push_back(static_cast<int>(b * width + j));
  return MonomialOrder::lex(std::move(ranking));
}

}  // namespace detail

/// Generators of the code ideal: one binomial x^g - 1 per generator
/// row (entries taken as exponents in 0..p-1) plus x_i^p - 1 for all i.
inline CodeIdealGens code_ideal_generators(const LinearCode& C) {
  detail::require_prime_field(C, "code ideal requires a prime field");
  const Field& F = C.field();
  const std::size_t n = C.length(), k = C.dimension();
  MonomialOrder ord = MonomialOrder::lex(n);
  CodeIdealGens out{n, {}};
  for (std::size_t i = 0; i < k; ++i) {
    Monomial m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = F.to_int(C.generator().at(i, j));
    if (auto b = Binomial::make(std::move(m), Monomial(n), ord)) out.gens.push_back(*b);
  }
  for (std::size_t j = 0; j < n; ++j)
    out.gens.push_back(Binomial::make(Monomial::unit(n, j, F.p()), Monomial(n), ord).value());
  return out;
}

/// Reduced lex basis of the code ideal read off a standard generator
/// matrix: {x_i - x^{m_i} | i <= k} with m_i = e_i - g_i, plus
/// {x_i^p - 1 | i > k}. Exponents are written in the original column
/// numbering; the order ranks variables by the recorded permutation.
inline GroebnerBasis code_ideal_lex_gb(const LinearCode& C) {
  detail::require_prime_field(C, "code ideal requires a prime field");
  const Field& F = C.field();
  const std::size_t n = C.length(), k = C.dimension();
  const std::vector<int>& perm = C.column_permutation();
  MonomialOrder ord = detail::lex_for_permutation(perm);
  std::vector<Binomial> elems;
  for (std::size_t i = 0; i < k; ++i) {
    Monomial tail(n);
    for (std::size_t s = k; s < n; ++s)
      tail[perm[s]] = F.to_int(F.neg(C.standard_generator().at(i, s)));
    elems.push_back(Binomial::make(Monomial::unit(n, perm[i]), std::move(tail), ord).value());
  }
  for (std::size_t s = k; s < n; ++s)
    elems.push_back(Binomial::make(Monomial::unit(n, perm[s], F.p()), Monomial(n), ord).value());
  sort_by_lead_desc(elems, ord);
  return {ord, std::move(elems), true};
}

/// Generating set of the generalized code ideal: the crossing images
/// of all scalar multiples of the generator rows, together with the
/// additive relations of the field in every coordinate.
inline GenCodeIdealGens generalized_ideal_generators(const LinearCode& C) {
  const Field& F = C.field();
  const std::size_t n = C.length(), k = C.dimension();
  const std::size_t q = static_cast<std::size_t>(F.q());
  Crossing X(C.field_ptr(), n);
  MonomialOrder ord = MonomialOrder::lex(X.nvars());
  GenCodeIdealGens out;
  out.nvars = X.nvars();
  for (std::size_t i = 0; i < k; ++i) {
    Word row = C.generator().row(i);
    for (unsigned j = 1; j <= q - 1; ++j) {
      Word scaled = word_scale(F, F.alpha_pow(j), row);
      if (auto b = Binomial::make(X.up(scaled), Monomial(X.nvars()), ord))
        out.code_part.push_back(*b);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned u = 1; u <= q - 1; ++u)
      for (unsigned v = u; v <= q - 1; ++v) {
        Monomial prod(X.nvars());
        prod[X.var(i, u)] += 1;
        prod[X.var(i, v)] += 1;
        FieldElem s = F.add(F.alpha_pow(u), F.alpha_pow(v));
        Monomial rhs(X.nvars());
        if (!s.is_zero()) rhs[X.var(i, s.idx())] = 1;
        out.field_part.push_back(Binomial::make(std::move(prod), std::move(rhs), ord).value());
      }
  return out;
}

/// Reduced lex basis of the generalized code ideal over a prime field,
/// built directly from the standard generator matrix.
inline GroebnerBasis generalized_lex_gb_prime(const LinearCode& C) {
  detail::require_prime_field(C, "prime-field construction requires r = 1");
  const Field& F = C.field();
  const int p = F.p();
  const std::size_t n = C.length(), k = C.dimension();
  const std::size_t w = static_cast<std::size_t>(p - 1);
  const std::vector<int>& perm = C.column_permutation();
  MonomialOrder ord = detail::doubled_lex(perm, w);
  auto var = [&](std::size_t std_block, unsigned j) {
    return static_cast<std::size_t>(perm[std_block]) * w + (j - 1);
  };
  std::vector<Binomial> elems;
  for (std::size_t i = 0; i < k; ++i)
    for (unsigned j = 1; j <= w; ++j) {
      // m_i^{(j)} = (e_i - g_i) * alpha^j, supported on the last n-k spots
      Monomial tail(n * w);
      for (std::size_t s = k; s < n; ++s) {
        FieldElem ms = F.mul(F.neg(C.standard_generator().at(i, s)), F.alpha_pow(j));
        tail[var(s, static_cast<unsigned>(w))] = F.to_int(ms);
      }
      elems.push_back(
          Binomial::make(Monomial::unit(n * w, var(i, j)), std::move(tail), ord).value());
    }
  for (std::size_t s = k; s < n; ++s) {
    for (unsigned j = 1; j + 1 <= w; ++j) {
      Monomial tail =
          Monomial::unit(n * w, var(s, static_cast<unsigned>(w)), F.to_int(F.alpha_pow(j)));
      elems.push_back(
          Binomial::make(Monomial::unit(n * w, var(s, j)), std::move(tail), ord).value());
    }
    elems.push_back(
        Binomial::make(Monomial::unit(n * w, var(s, static_cast<unsigned>(w)), p), Monomial(n * w), ord)
            .value());
  }
  sort_by_lead_desc(elems, ord);
  return {ord, std::move(elems), true};
}

/// Reduced lex basis of the generalized code ideal over any F_{p^r}.
inline GroebnerBasis generalized_lex_gb(const LinearCode& C) {
  const Field& F = C.field();
  const int p = F.p(), r = F.r(), q = F.q();
  const std::size_t n = C.length(), k = C.dimension();
  const std::size_t w = static_cast<std::size_t>(q - 1);
  const std::vector<int>& perm = C.column_permutation();
  Crossing X(C.field_ptr(), n);
  MonomialOrder ord = detail::doubled_lex(perm, w);
  auto var = [&](std::size_t std_block, unsigned j) {
    return static_cast<std::size_t>(perm[std_block]) * w + (j - 1);
  };
  std::vector<Binomial> elems;
  for (std::size_t i = 0; i < k; ++i)
    for (unsigned j = 1; j <= w; ++j) {
      Monomial tail(n * w);
      for (std::size_t s = k; s < n; ++s) {
        FieldElem ms = F.mul(F.neg(C.standard_generator().at(i, s)), F.alpha_pow(j));
        std::vector<int> ph = X.phi(ms);
        for (unsigned jj = 1; jj <= w; ++jj) tail[var(s, jj)] = ph[jj - 1];
      }
      elems.push_back(
          Binomial::make(Monomial::unit(n * w, var(i, j)), std::move(tail), ord).value());
    }
  for (std::size_t s = k; s < n; ++s) {
    for (unsigned j = 1; j + r + 1 <= static_cast<unsigned>(q); ++j) {
      std::vector<int> ph = X.phi(F.alpha_pow(j));
      Monomial tail(n * w);
      for (unsigned jj = 1; jj <= w; ++jj) tail[var(s, jj)] = ph[jj - 1];
      elems.push_back(
          Binomial::make(Monomial::unit(n * w, var(s, j)), std::move(tail), ord).value());
    }
    for (unsigned j = static_cast<unsigned>(q - r); j <= w; ++j)
      elems.push_back(
          Binomial::make(Monomial::unit(n * w, var(s, j), p), Monomial(n * w), ord).value());
  }
  sort_by_lead_desc(elems, ord);
  return {ord, std::move(elems), true};
}

using IntMatrix = std::vector<std::vector<long long>>;

/// Block matrix (A | p I_m) whose integer kernel projects onto the
/// mod-p kernel of A.
inline IntMatrix toric_mod_matrix(const IntMatrix& A, int p) {
  const std::size_t m = A.size();
  IntMatrix out(m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = A[i];
    for (std::size_t j = 0; j < m; ++j) out[i].push_back(i == j ? p : 0);
  }
  return out;
}

/// Reduced basis of the toric ideal of a nonnegative integer matrix,
/// computed by eliminating the auxiliary variables of the graph ideal
/// <x_i - z^{a_i}>. Valid without saturation because A is nonnegative.
inline GroebnerBasis toric_ideal_gb(const IntMatrix& A, const MonomialOrder& order) {
  const std::size_t m = A.size();
  const std::size_t nv = order.nvars();
  for (const auto& row : A) {
    if (row.size() != nv) fail(errc::length_mismatch, "matrix width vs order arity");
    for (long long x : row)
      if (x < 0) fail(errc::not_divisible, "matrix entries must be nonnegative");
  }
  if (m == 0) fail(errc::rank_deficient, "toric construction needs at least one row");

  std::vector<int> combined;
  combined.reserve(nv + m);
  for (std::size_t i = 0; i < m; ++i) combined.push_back(static_cast<int>(nv + i));
  for (std::size_t t = 0; t < nv; ++t) combined.push_back(order.var_at_rank(t));
  MonomialOrder big = [&] {
    switch (order.kind()) {
      case OrderKind::lex:
        return MonomialOrder::lex(combined);
      case OrderKind::degrevlex:
        return MonomialOrder::elim(combined, m);
      case OrderKind::elim:
        fail(errc::wrong_order, "target order must be lex or degrevlex");
    }
    return MonomialOrder::lex(combined);
  }();

  std::vector<Binomial> gens;
  for (std::size_t i = 0; i < nv; ++i) {
    Monomial lhs = Monomial::unit(nv + m, i);
    Monomial rhs(nv + m);
    for (std::size_t row = 0; row < m; ++row) rhs[nv + row] = static_cast<Exp>(A[row][i]);
    if (auto b = Binomial::make(std::move(lhs), std::move(rhs), big)) gens.push_back(*b);
  }
  GroebnerBasis graph = buchberger(gens, big);
  std::vector<bool> keep(nv + m, true);
  for (std::size_t i = 0; i < m; ++i) keep[nv + i] = false;
  std::vector<Binomial> low = eliminate(reduce_basis(graph), keep);
  std::vector<int> first(nv);
  for (std::size_t i = 0; i < nv; ++i) first[i] = static_cast<int>(i);
  return reduce_basis({order, project(low, first, order), false});
}

/// Integer lift of the parity check matrix with entries in 0..p-1.
inline IntMatrix parity_lift(const LinearCode& C) {
  detail::require_prime_field(C, "integer lift requires a prime field");
  const Field& F = C.field();
  const Matrix& H = C.parity_check();
  IntMatrix out(H.rows, std::vector<long long>(H.cols));
  for (std::size_t i = 0; i < H.rows; ++i)
    for (std::size_t j = 0; j < H.cols; ++j) out[i][j] = F.to_int(H.at(i, j));
  return out;
}

/// Substitute 1 for every variable past the first n: exponents there
/// are dropped and the binomials re-oriented (zero binomials vanish).
inline std::vector<Binomial> substitute_ones(const std::vector<Binomial>& bins, std::size_t n,
                                             const MonomialOrder& ord) {
  std::vector<Binomial> out;
  auto cut = [&](const Monomial& mm) {
    Monomial s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = mm[i];
    return s;
  };
  for (const Binomial& g : bins)
    if (auto b = Binomial::make(cut(g.lead()), cut(g.tail()), ord)) out.push_back(*b);
  return out;
}

/// Code ideal through the toric bridge: the reduced lex basis of the
/// toric ideal of (H' | p I) with auxiliaries ranked last, then the
/// substitution y := 1 and a final reduction.
inline GroebnerBasis code_ideal_via_elimination(const LinearCode& C) {
  detail::require_prime_field(C, "toric route requires a prime field");
  if (C.dimension() == C.length())
    fail(errc::rank_deficient, "toric route needs a nonempty parity check (k < n)");
  const std::size_t n = C.length();
  const std::size_t m = C.length() - C.dimension();
  IntMatrix A = toric_mod_matrix(parity_lift(C), C.field().p());
  // x-variables ranked by the recorded permutation, auxiliaries last
  std::vector<int> ranking(C.column_permutation());
  for (std::size_t i = 0; i < m; ++i) ranking.push_back(static_cast<int>(n + i));
  GroebnerBasis toric = toric_ideal_gb(A, MonomialOrder::lex(std::move(ranking)));
  MonomialOrder ord = detail::lex_for_permutation(C.column_permutation());
  std::vector<Binomial> subs = substitute_ones(toric.elems, n, ord);
  return reduce_basis(buchberger(subs, ord));
}

/// Elements of the generalized code ideal supported on the single
/// column j0 of the doubled variables (prime fields). Computed from a
/// basis under an order eliminating every other column.
inline std::vector<Binomial> restrict_generalized(const LinearCode& C, unsigned j0) {
  detail::require_prime_field(C, "column restriction requires a prime field");
  const Field& F = C.field();
  const std::size_t n = C.length();
  const std::size_t w = static_cast<std::size_t>(F.q() - 1);
  if (j0 < 1 || j0 > w) fail(errc::length_mismatch, "column index out of range");
  std::vector<int> ranking;
  ranking.reserve(n * w);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned j = 1; j <= w; ++j)
      if (j != j0) ranking.push_back(static_cast<int>(i * w + (j - 1)));
  std::vector<bool> keep(n * w, false);
  for (std::size_t i = 0; i < n; ++i) {
    ranking.push_back(static_cast<int>(i * w + (j0 - 1)));
    keep[i * w + (j0 - 1)] = true;
  }
  MonomialOrder ord = MonomialOrder::lex(std::move(ranking));
  GroebnerBasis B = reduce_basis(buchberger(generalized_ideal_generators(C).all(), ord));
  return eliminate(B, keep);
}

/// Variable indices of column j0, block by block, for projecting the
/// restriction onto K[x_1..x_n].
inline std::vector<int> column_vars(const LinearCode& C, unsigned j0) {
  const std::size_t w = static_cast<std::size_t>(C.field().q() - 1);
  std::vector<int> out;
  for (std::size_t i = 0; i < C.length(); ++i)
    out.push_back(static_cast<int>(i * w + (j0 - 1)));
  return out;
}

}  // namespace codegb

#endif
