#ifndef CODEGB_MONOMIAL_HPP
#define CODEGB_MONOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <vector>

#include "codegb/errors.hpp"

namespace codegb {

using Exp = std::int32_t;

/// Exponent vector of a monomial. Entries are nonnegative.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<Exp> e) : e_(e) {}
  explicit Monomial(std::vector<Exp> e) : e_(std::move(e)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, Exp k = 1) {
    Monomial m(nvars);
    m.e_[var] = k;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  Exp operator[](std::size_t i) const { return e_[i]; }
  Exp& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Exp>& exps() const { return e_; }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (Exp x : e_) d += x;
    return d;
  }

  bool is_one() const {
    for (Exp x : e_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Plain lexicographic comparison of the raw vectors; used only as a
  /// container key, not as a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

 private:
  std::vector<Exp> e_;
};

inline void check_same_vars(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars()) fail(errc::length_mismatch, "exponent vector lengths differ");
}

inline bool divides(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  for (std::size_t i = 0; i < u.nvars(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  Monomial m(u.nvars());
  for (std::size_t i = 0; i < u.nvars(); ++i) m[i] = u[i] > v[i] ? u[i] : v[i];
  return m;
}

inline Monomial operator+(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  Monomial m(u.nvars());
  for (std::size_t i = 0; i < u.nvars(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(u[i]) + v[i];
    if (s > std::numeric_limits<Exp>::max()) fail(errc::overflow, "exponent overflow");
    m[i] = static_cast<Exp>(s);
  }
  return m;
}

/// Componentwise difference; requires divides(v, u).
inline Monomial operator-(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  Monomial m(u.nvars());
  for (std::size_t i = 0; i < u.nvars(); ++i) {
    if (v[i] > u[i]) fail(errc::not_divisible, "subtrahend does not divide");
    m[i] = u[i] - v[i];
  }
  return m;
}

inline bool coprime(const Monomial& u, const Monomial& v) {
  check_same_vars(u, v);
  for (std::size_t i = 0; i < u.nvars(); ++i)
    if (u[i] > 0 && v[i] > 0) return false;
  return true;
}

enum class OrderKind { lex, degrevlex, elim };

enum class Cmp { less, equal, greater };

/// Monomial order over a fixed variable ranking. ranking[t] is the
/// variable index at rank t (rank 0 highest); an empty ranking means
/// x_1 > x_2 > ... > x_n in index order. The elim kind compares the
/// first `block` ranks degrevlex, then the rest degrevlex, so the top
/// block is eliminated.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(OrderKind::lex, nvars, {}, 0); }
  static MonomialOrder lex(std::vector<int> ranking) {
    std::size_t n = ranking.size();
    return MonomialOrder(OrderKind::lex, n, std::move(ranking), 0);
  }
  static MonomialOrder degrevlex(std::size_t nvars) {
    return MonomialOrder(OrderKind::degrevlex, nvars, {}, 0);
  }
  static MonomialOrder degrevlex(std::vector<int> ranking) {
    std::size_t n = ranking.size();
    return MonomialOrder(OrderKind::degrevlex, n, std::move(ranking), 0);
  }
  static MonomialOrder elim(std::vector<int> ranking, std::size_t block) {
    std::size_t n = ranking.size();
    return MonomialOrder(OrderKind::elim, n, std::move(ranking), block);
  }
  static MonomialOrder elim_first(std::size_t nvars, std::size_t block) {
    return MonomialOrder(OrderKind::elim, nvars, {}, block);
  }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t elim_block() const { return block_; }
  const std::vector<int>& ranking() const { return ranking_; }

  int var_at_rank(std::size_t t) const {
    return ranking_.empty() ? static_cast<int>(t) : ranking_[t];
  }

  bool degree_compatible() const { return kind_ == OrderKind::degrevlex; }

  Cmp compare(const Monomial& u, const Monomial& v) const {
    check_same_vars(u, v);
    if (u.nvars() != nvars_) fail(errc::length_mismatch, "monomial does not match order arity");
    switch (kind_) {
      case OrderKind::lex:
        return cmp_lex(u, v, 0, nvars_);
      case OrderKind::degrevlex:
        return cmp_grevlex(u, v, 0, nvars_);
      case OrderKind::elim: {
        Cmp c = cmp_grevlex(u, v, 0, block_);
        return c == Cmp::equal ? cmp_grevlex(u, v, block_, nvars_) : c;
      }
    }
    return Cmp::equal;
  }

  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) == Cmp::greater; }
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) == Cmp::less; }

  /// True when every monomial containing one of the flagged variables
  /// exceeds every monomial free of them, i.e. the order eliminates the
  /// flagged set.
  bool eliminates(const std::vector<bool>& drop) const {
    std::size_t count = 0;
    for (bool b : drop)
      if (b) ++count;
    if (count == 0) return true;
    if (kind_ == OrderKind::elim && count != block_) return false;
    if (kind_ == OrderKind::degrevlex) return false;
    for (std::size_t t = 0; t < count; ++t)
      if (!drop[var_at_rank(t)]) return false;
    return true;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind k, std::size_t n, std::vector<int> ranking, std::size_t block)
      : kind_(k), nvars_(n), ranking_(std::move(ranking)), block_(block) {
    if (!ranking_.empty()) {
      if (ranking_.size() != nvars_) fail(errc::length_mismatch, "ranking size");
      bool identity = true;
      for (std::size_t t = 0; t < nvars_; ++t)
        if (ranking_[t] != static_cast<int>(t)) {
          identity = false;
          break;
        }
      if (identity) ranking_.clear();
    }
    if (kind_ == OrderKind::elim && (block_ == 0 || block_ >= nvars_))
      fail(errc::wrong_order, "elimination block must split the variables");
  }

  Cmp cmp_lex(const Monomial& u, const Monomial& v, std::size_t lo, std::size_t hi) const {
    for (std::size_t t = lo; t < hi; ++t) {
      int i = var_at_rank(t);
      if (u[i] != v[i]) return u[i] > v[i] ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
  }

  Cmp cmp_grevlex(const Monomial& u, const Monomial& v, std::size_t lo, std::size_t hi) const {
    std::int64_t du = 0, dv = 0;
    for (std::size_t t = lo; t < hi; ++t) {
      du += u[var_at_rank(t)];
      dv += v[var_at_rank(t)];
    }
    if (du != dv) return du > dv ? Cmp::greater : Cmp::less;
    for (std::size_t t = hi; t > lo; --t) {
      int i = var_at_rank(t - 1);
      if (u[i] != v[i]) return u[i] < v[i] ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
  }

  OrderKind kind_;
  std::size_t nvars_;
  std::vector<int> ranking_;
  std::size_t block_;
};

/// Pure monomial difference lead - tail, oriented so that lead > tail
/// under the ambient order. Coefficients are implicitly +1/-1; the tail
/// may be the empty monomial (x^a - 1).
class Binomial {
 public:
  /// Returns nullopt when a == b (the zero binomial).
  static std::optional<Binomial> make(Monomial a, Monomial b, const MonomialOrder& ord) {
    Cmp c = ord.compare(a, b);
    if (c == Cmp::equal) return std::nullopt;
    if (c == Cmp::less) std::swap(a, b);
    return Binomial(std::move(a), std::move(b));
  }

  const Monomial& lead() const { return lead_; }
  const Monomial& tail() const { return tail_; }
  std::size_t nvars() const { return lead_.nvars(); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend bool operator<(const Binomial& a, const Binomial& b) {
    return a.lead_ < b.lead_ || (a.lead_ == b.lead_ && a.tail_ < b.tail_);
  }

 private:
  Binomial(Monomial lead, Monomial tail) : lead_(std::move(lead)), tail_(std::move(tail)) {}

  Monomial lead_;
  Monomial tail_;
};

}  // namespace codegb

#endif
