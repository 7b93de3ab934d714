#ifndef CODEGB_DECODE_HPP
#define CODEGB_DECODE_HPP

#include <utility>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/errors.hpp"
#include "codegb/groebner.hpp"
#include "codegb/ideal.hpp"

namespace codegb {

/// Result of a decoding attempt. Failure is a value, not an error, so
/// sweep harnesses can tabulate it.
struct DecodeOutcome {
  enum class Status { decoded, failed };

  Status status = Status::failed;
  Word codeword;
  Word error;
  bool unique = false;
  int scalar_used = 0;  // heuristic sweeps only
  int reductions_performed = 0;

  bool decoded() const { return status == Status::decoded; }
};

/// Word over a prime field viewed as an exponent vector.
inline Monomial word_to_monomial(const Field& F, const Word& w) {
  Monomial m(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) m[i] = F.to_int(w[i]);
  return m;
}

inline Word monomial_to_word(const Field& F, const Monomial& m) {
  Word w(m.nvars());
  for (std::size_t i = 0; i < m.nvars(); ++i) w[i] = F.from_int(m[i]);
  return w;
}

/// Complete decoding through the generalized code ideal: the normal
/// form of the crossing image of w is a monomial whose word is an
/// error vector of a closest codeword. Requires a degree-compatible
/// order; when the error weight is at most t the codeword is the
/// unique closest one.
inline DecodeOutcome complete_decode(const LinearCode& C, const Word& w,
                                     const GroebnerBasis& gen_basis, int t) {
  if (!gen_basis.order.degree_compatible())
    fail(errc::wrong_order, "complete decoding needs a degree-compatible order");
  Crossing X(C.field_ptr(), C.length());
  if (gen_basis.nvars() != X.nvars()) fail(errc::length_mismatch, "basis arity");
  Monomial nf = normal_form(X.up(w), gen_basis);
  Word e = X.down(nf);
  DecodeOutcome out;
  out.status = DecodeOutcome::Status::decoded;
  out.error = e;
  out.codeword = word_sub(C.field(), w, e);
  out.unique = weight(e) <= t;
  out.reductions_performed = 1;
  return out;
}

inline DecodeOutcome complete_decode(const LinearCode& C, const Word& w,
                                     const GroebnerBasis& gen_basis) {
  return complete_decode(C, w, gen_basis, min_distance(C).t);
}

/// Scalar-sweep decoder over the code ideal (prime fields). For each
/// i in 1..p-1 the monomial of i*w is reduced; the first remainder
/// with support of size at most t yields i^{-1}(i*w - e). A decoded
/// result is always the unique closest codeword; when no scalar
/// produces a small remainder the outcome is a failure.
inline DecodeOutcome heuristic_decode(const LinearCode& C, const Word& w,
                                      const GroebnerBasis& code_basis, int t) {
  detail::require_prime_field(C, "scalar sweep requires a prime field");
  if (!code_basis.order.degree_compatible())
    fail(errc::wrong_order, "heuristic decoding needs a degree-compatible order");
  if (code_basis.nvars() != C.length()) fail(errc::length_mismatch, "basis arity");
  const Field& F = C.field();
  const int p = F.p();
  DecodeOutcome out;
  for (int i = 1; i < p; ++i) {
    FieldElem scalar = F.from_int(i);
    Word wi = word_scale(F, scalar, w);
    Monomial rem = normal_form(word_to_monomial(F, wi), code_basis);
    Word e = monomial_to_word(F, rem);
    out.reductions_performed = i;
    if (weight(e) <= t) {
      out.status = DecodeOutcome::Status::decoded;
      out.codeword = word_scale(F, F.inv(scalar), word_sub(F, wi, e));
      out.error = word_sub(F, w, out.codeword);
      out.unique = true;
      out.scalar_used = i;
      return out;
    }
  }
  out.status = DecodeOutcome::Status::failed;
  return out;
}

inline DecodeOutcome heuristic_decode(const LinearCode& C, const Word& w,
                                      const GroebnerBasis& code_basis) {
  return heuristic_decode(C, w, code_basis, min_distance(C).t);
}

struct Nearest {
  int distance = 0;
  std::vector<Word> closest;  // in codeword enumeration order
};

/// Exhaustive nearest-codeword scan; the testing oracle for both
/// decoders.
inline Nearest nearest_codewords_bruteforce(const LinearCode& C, const Word& w,
                                            std::size_t cap = 1u << 20) {
  Nearest out;
  bool first = true;
  for (const Word& c : enumerate_codewords(C, cap)) {
    int d = hamming_distance(w, c);
    if (first || d < out.distance) {
      out.distance = d;
      out.closest.clear();
      first = false;
    }
    if (d == out.distance) out.closest.push_back(c);
  }
  return out;
}

/// Coset representatives indexed by the standard monomials of a code
/// ideal basis: exactly p^{n-k} entries, one per coset of C.
struct Transversal {
  std::vector<std::pair<Monomial, Word>> items;
};

inline Transversal coset_transversal(const LinearCode& C, const GroebnerBasis& code_basis,
                                     std::size_t cap = 1u << 20) {
  detail::require_prime_field(C, "transversal requires a prime field");
  if (code_basis.nvars() != C.length()) fail(errc::length_mismatch, "basis arity");
  Transversal out;
  for (Monomial& m : standard_monomials(code_basis, cap)) {
    Word rep = monomial_to_word(C.field(), m);
    out.items.emplace_back(std::move(m), std::move(rep));
  }
  return out;
}

/// True when every nonzero scalar multiple of the error pattern has
/// its monomial inside the leading ideal, i.e. the scalar sweep fails
/// on every word of the coset family of e.
inline bool predict_heuristic_failure(const LinearCode& C, const GroebnerBasis& code_basis,
                                      const Word& e) {
  detail::require_prime_field(C, "failure prediction requires a prime field");
  const Field& F = C.field();
  for (int i = 1; i < F.p(); ++i) {
    Monomial m = word_to_monomial(F, word_scale(F, F.from_int(i), e));
    bool in_lead_ideal = false;
    for (const Binomial& g : code_basis.elems)
      if (divides(g.lead(), m)) {
        in_lead_ideal = true;
        break;
      }
    if (!in_lead_ideal) return false;
  }
  return true;
}

}  // namespace codegb

#endif
