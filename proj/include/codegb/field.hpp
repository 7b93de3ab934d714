#ifndef CODEGB_FIELD_HPP
#define CODEGB_FIELD_HPP

#include <cstdint>
#include <vector>

#include "codegb/errors.hpp"

namespace codegb {

/// Description of F_{p^r} with a designated primitive element alpha.
///
/// For r = 1, `alpha` is an integer in 2..p-1 (0 = pick the smallest
/// primitive root). For r > 1, alpha is the residue class of the
/// polynomial variable and `primitive_poly` holds the r+1 coefficients
/// of a monic primitive polynomial in ascending degree order.
struct FieldSpec {
  int p = 2;
  int r = 1;
  std::vector<int> primitive_poly;
  int alpha = 0;
};

/// Field element in discrete-log form: idx 0 is the zero element and
/// idx j in 1..q-1 stands for alpha^j (so idx q-1 is the unit).
class FieldElem {
 public:
  constexpr FieldElem() = default;
  constexpr explicit FieldElem(unsigned idx) : idx_(static_cast<std::uint16_t>(idx)) {}

  constexpr unsigned idx() const { return idx_; }
  constexpr bool is_zero() const { return idx_ == 0; }

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr bool operator<(FieldElem a, FieldElem b) { return a.idx_ < b.idx_; }

 private:
  std::uint16_t idx_ = 0;
};

namespace detail {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Remainder of polynomial division by a monic divisor, coefficients mod p.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      int& t = a[i - dm + j];
      t = ((t - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  for (int& c : a) c = ((c % p) + p) % p;
  return a;
}

inline std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<int>& m, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

}  // namespace detail

/// Arithmetic tables for F_{p^r}. Immutable after construction.
class Field {
 public:
  explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (!detail::is_prime(spec_.p)) fail(errc::not_prime, "p = " + std::to_string(spec_.p));
    if (spec_.r < 1) fail(errc::not_primitive, "r must be >= 1");
    long long qq = 1;
    for (int i = 0; i < spec_.r; ++i) {
      qq *= spec_.p;
      if (qq > (1 << 16)) fail(errc::too_large, "q exceeds 2^16");
    }
    q_ = static_cast<int>(qq);
    if (spec_.r == 1)
      init_prime();
    else
      init_extension();
    neg_.resize(q_);
    inv_.assign(q_, FieldElem(0));
    for (int i = 0; i < q_; ++i) neg_[i] = scalar_raw(spec_.p - 1, FieldElem(i));
    for (int j = 1; j < q_; ++j) {
      int nj = (q_ - 1 - j) % (q_ - 1);
      inv_[j] = FieldElem(nj == 0 ? q_ - 1 : nj);
    }
  }

  int p() const { return spec_.p; }
  int r() const { return spec_.r; }
  int q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  FieldElem zero() const { return FieldElem(0); }
  FieldElem one() const { return FieldElem(q_ - 1); }
  FieldElem alpha() const { return FieldElem(1); }

  /// alpha^j for any integer j (alpha^0 = alpha^{q-1} = 1).
  FieldElem alpha_pow(long long j) const {
    long long m = j % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return FieldElem(m == 0 ? q_ - 1 : static_cast<unsigned>(m));
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    check_elem(a);
    check_elem(b);
    if (!add_table_.empty()) return add_table_[a.idx() * q_ + b.idx()];
    std::vector<int> s(spec_.r);
    for (int t = 0; t < spec_.r; ++t) s[t] = (antilog_[a.idx()][t] + antilog_[b.idx()][t]) % spec_.p;
    return FieldElem(log_[encode(s)]);
  }

  FieldElem neg(FieldElem a) const {
    check_elem(a);
    return neg_[a.idx()];
  }

  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

  FieldElem mul(FieldElem a, FieldElem b) const {
    check_elem(a);
    check_elem(b);
    if (a.is_zero() || b.is_zero()) return zero();
    unsigned m = (a.idx() + b.idx() - 1) % (q_ - 1);
    return FieldElem(m + 1);
  }

  FieldElem inv(FieldElem a) const {
    check_elem(a);
    if (a.is_zero()) fail(errc::division_by_zero, "inv(0)");
    return inv_[a.idx()];
  }

  /// Integer scalar multiple c*a (c taken mod p).
  FieldElem scalar(long long c, FieldElem a) const {
    check_elem(a);
    int cm = static_cast<int>(((c % spec_.p) + spec_.p) % spec_.p);
    return scalar_raw(cm, a);
  }

  /// Coefficient vector of a in the basis 1, alpha, ..., alpha^{r-1}.
  const std::vector<int>& coeffs(FieldElem a) const {
    check_elem(a);
    return antilog_[a.idx()];
  }

  FieldElem from_coeffs(const std::vector<int>& c) const {
    if (c.size() != static_cast<std::size_t>(spec_.r))
      fail(errc::length_mismatch, "coefficient vector length");
    std::vector<int> cc(c);
    for (int& x : cc) x = ((x % spec_.p) + spec_.p) % spec_.p;
    return FieldElem(log_[encode(cc)]);
  }

  /// Prime-field embedding of an integer (r = 1 only, except 0).
  FieldElem from_int(long long v) const {
    long long m = ((v % spec_.p) + spec_.p) % spec_.p;
    if (m == 0) return zero();
    if (spec_.r != 1) fail(errc::not_prime_field, "integer elements require r = 1");
    return FieldElem(log_[m]);
  }

  /// Integer value in 0..p-1 (r = 1 only).
  int to_int(FieldElem a) const {
    if (spec_.r != 1) fail(errc::not_prime_field, "integer view requires r = 1");
    check_elem(a);
    return antilog_[a.idx()][0];
  }

  /// The primitive root in use, as an integer (r = 1 only).
  int alpha_int() const {
    if (spec_.r != 1) fail(errc::not_prime_field, "alpha_int requires r = 1");
    return antilog_[1][0];
  }

 private:
  void check_elem(FieldElem a) const {
    if (a.idx() >= static_cast<unsigned>(q_)) fail(errc::length_mismatch, "element outside field");
  }

  int encode(const std::vector<int>& c) const {
    int v = 0;
    for (int t = spec_.r - 1; t >= 0; --t) v = v * spec_.p + c[t];
    return v;
  }

  FieldElem scalar_raw(int c, FieldElem a) const {
    if (c == 0 || a.is_zero()) return zero();
    std::vector<int> s(antilog_[a.idx()]);
    for (int& x : s) x = static_cast<int>(static_cast<long long>(x) * c % spec_.p);
    return FieldElem(log_[encode(s)]);
  }

  void init_prime() {
    const int p = spec_.p;
    if (!spec_.primitive_poly.empty())
      fail(errc::not_irreducible, "primitive_poly must be empty when r = 1");
    int a = spec_.alpha;
    if (a == 0) {
      for (a = 2; a < p; ++a)
        if (order_mod(a, p) == p - 1) break;
      if (p == 2) a = 1;
      spec_.alpha = a;
    }
    a = spec_.alpha;
    if (a < 1 || a >= p || order_mod(a, p) != p - 1)
      fail(errc::not_primitive, "alpha = " + std::to_string(a) + " is not a primitive root mod " +
                                    std::to_string(p));
    antilog_.assign(q_, std::vector<int>(1, 0));
    log_.assign(q_, 0);
    long long pw = 1;
    for (int j = 1; j <= q_ - 1; ++j) {
      pw = (pw * a) % p;
      antilog_[j][0] = static_cast<int>(pw);
      log_[pw] = j;
    }
    build_add_table();
  }

  void init_extension() {
    const int p = spec_.p;
    const int r = spec_.r;
    std::vector<int>& f = spec_.primitive_poly;
    if (f.size() != static_cast<std::size_t>(r) + 1)
      fail(errc::not_irreducible, "primitive_poly needs r+1 coefficients");
    for (int& c : f) c = ((c % p) + p) % p;
    if (f.back() != 1) fail(errc::not_irreducible, "primitive_poly must be monic");
    if (!irreducible(f)) fail(errc::not_irreducible, "primitive_poly factors over F_p");

    // Powers of x modulo f; x must have full multiplicative order q-1.
    antilog_.assign(q_, std::vector<int>(r, 0));
    log_.assign(q_, 0);
    std::vector<int> x(r, 0);
    x[1] = 1;
    std::vector<int> pw(r, 0);
    pw[0] = 1;
    std::vector<int> unit(pw);
    for (int j = 1; j <= q_ - 1; ++j) {
      pw = detail::poly_mul_mod(pw, x, f, p);
      if (pw == unit && j < q_ - 1)
        fail(errc::not_primitive, "x has order " + std::to_string(j) + " < q-1");
      antilog_[j] = pw;
      log_[encode(pw)] = j;
    }
    if (antilog_[q_ - 1] != unit) fail(errc::not_primitive, "x^{q-1} != 1");
    build_add_table();
  }

  void build_add_table() {
    if (static_cast<long long>(q_) * q_ > (1 << 22)) return;  // fall back to on-the-fly adds
    add_table_.assign(static_cast<std::size_t>(q_) * q_, FieldElem(0));
    for (int i = 0; i < q_; ++i)
      for (int j = 0; j < q_; ++j) {
        std::vector<int> s(spec_.r);
        for (int t = 0; t < spec_.r; ++t) s[t] = (antilog_[i][t] + antilog_[j][t]) % spec_.p;
        add_table_[static_cast<std::size_t>(i) * q_ + j] = FieldElem(log_[encode(s)]);
      }
  }

  static int order_mod(int a, int p) {
    if (a % p == 0) return 0;
    long long pw = 1;
    for (int e = 1; e <= p - 1; ++e) {
      pw = (pw * a) % p;
      if (pw == 1) return e;
    }
    return 0;
  }

  bool irreducible(const std::vector<int>& f) const {
    const int p = spec_.p;
    const int r = spec_.r;
    if (f[0] == 0) return false;  // x divides f
    // Trial division by all monic polynomials of degree 1..r/2.
    for (int d = 1; 2 * d <= r; ++d) {
      long long count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (long long code = 0; code < count; ++code) {
        std::vector<int> g(d + 1, 0);
        long long c = code;
        for (int i = 0; i < d; ++i) {
          g[i] = static_cast<int>(c % p);
          c /= p;
        }
        g[d] = 1;
        std::vector<int> rem = detail::poly_mod(f, g, p);
        bool zero = true;
        for (int x : rem)
          if (x != 0) zero = false;
        if (zero) return false;
      }
    }
    return true;
  }

  FieldSpec spec_;
  int q_ = 0;
  std::vector<std::vector<int>> antilog_;  // idx -> coefficient vector
  std::vector<int> log_;                   // encoded coefficient vector -> idx
  std::vector<FieldElem> add_table_;       // q*q, row-major
  std::vector<FieldElem> neg_;
  std::vector<FieldElem> inv_;
};

}  // namespace codegb

#endif
