#ifndef CODEGB_VERIFY_HPP
#define CODEGB_VERIFY_HPP

#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/decode.hpp"
#include "codegb/field.hpp"
#include "codegb/groebner.hpp"
#include "codegb/ideal.hpp"
#include "codegb/textio.hpp"

namespace codegb::verify {

// ---------------------------------------------------------------------------
// Bundled example codes. These are the fixtures every golden check runs on.
// ---------------------------------------------------------------------------

inline LinearCode f7_code() {
  auto F = std::make_shared<Field>(FieldSpec{7, 1, {}, 0});
  Matrix G(2, 3);
  int rows[2][3] = {{1, 0, 4}, {0, 1, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) G.at(i, j) = F->from_int(rows[i][j]);
  return LinearCode(F, std::move(G));
}

inline LinearCode ternary63_code() {
  auto F = std::make_shared<Field>(FieldSpec{3, 1, {}, 2});
  Matrix G(3, 6);
  int rows[3][6] = {{1, 0, 0, 2, 2, 0}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 1, 2, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) G.at(i, j) = F->from_int(rows[i][j]);
  return LinearCode(F, std::move(G));
}

inline LinearCode ternary725_code() {
  auto F = std::make_shared<Field>(FieldSpec{3, 1, {}, 2});
  Matrix G(2, 7);
  int rows[2][7] = {{1, 0, 1, 2, 1, 1, 1}, {0, 1, 2, 2, 1, 0, 2}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 7; ++j) G.at(i, j) = F->from_int(rows[i][j]);
  return LinearCode(F, std::move(G));
}

inline LinearCode f9_code() {
  auto F = std::make_shared<Field>(FieldSpec{3, 2, {2, 1, 1}, 0});
  Matrix G(2, 3);
  G.at(0, 0) = F->one();
  G.at(0, 2) = F->alpha_pow(2);
  G.at(1, 1) = F->one();
  G.at(1, 2) = F->alpha_pow(5);
  return LinearCode(F, std::move(G));
}

// ---------------------------------------------------------------------------
// Expected results.
// ---------------------------------------------------------------------------

inline const char* F7_TORIC_BASIS = R"(x3^7 - y1^5
x2^5 - x3^2
x2*y1^4 - x3^6
x2^2*y1^3 - x3^5
x2^3*y1^2 - x3^4
x2^4*y1 - x3^3
x2*x3 - y1
x1^2 - x2
x1*y1 - x2^4
x1*x3 - x2^3
x1*x2^2 - x3
)";

inline const char* F7_SUBSTITUTED = R"(x3^7 - 1
x2^5 - x3^2
x2 - x3^6
x2^2 - x3^5
x2^3 - x3^4
x2^4 - x3^3
x2*x3 - 1
x1^2 - x2
x1 - x2^4
x1*x3 - x2^3
x1*x2^2 - x3
)";

inline const char* F7_CODE_IDEAL_LEX = R"(x1 - x3^3
x2 - x3^6
x3^7 - 1
)";

inline const char* T63_GENERALIZED_GENS = R"(x1_2*x4_1*x5_1 - 1
x1_1*x4_2*x5_2 - 1
x2_2*x4_2*x5_2 - 1
x2_1*x4_1*x5_1 - 1
x3_2*x4_2*x5_1*x6_2 - 1
x3_1*x4_1*x5_2*x6_1 - 1
x1_1^2 - x1_2
x1_1*x1_2 - 1
x1_2^2 - x1_1
x2_1^2 - x2_2
x2_1*x2_2 - 1
x2_2^2 - x2_1
x3_1^2 - x3_2
x3_1*x3_2 - 1
x3_2^2 - x3_1
x4_1^2 - x4_2
x4_1*x4_2 - 1
x4_2^2 - x4_1
x5_1^2 - x5_2
x5_1*x5_2 - 1
x5_2^2 - x5_1
x6_1^2 - x6_2
x6_1*x6_2 - 1
x6_2^2 - x6_1
)";

inline const char* T63_GENERALIZED_LEX = R"(x1_1 - x4_2^2*x5_2^2
x1_2 - x4_2*x5_2
x2_1 - x4_2*x5_2
x2_2 - x4_2^2*x5_2^2
x3_1 - x4_2*x5_2^2*x6_2
x3_2 - x4_2^2*x5_2*x6_2^2
x4_1 - x4_2^2
x5_1 - x5_2^2
x6_1 - x6_2^2
x4_2^3 - 1
x5_2^3 - 1
x6_2^3 - 1
)";

inline const char* T63_RESTRICT_COL1 = R"(x6_1^3 - 1
x5_1^3 - 1
x4_1^3 - 1
x3_1 - x4_1^2*x5_1*x6_1^2
x2_1 - x4_1^2*x5_1^2
x1_1 - x4_1*x5_1
)";

inline const char* T63_RESTRICT_COL2 = R"(x6_2^3 - 1
x5_2^3 - 1
x4_2^3 - 1
x3_2 - x4_2^2*x5_2*x6_2^2
x2_2 - x4_2^2*x5_2^2
x1_2 - x4_2*x5_2
)";

inline const char* T63_CODE_IDEAL_LEX = R"(x1 - x4*x5
x2 - x4^2*x5^2
x3 - x4^2*x5*x6^2
x4^3 - 1
x5^3 - 1
x6^3 - 1
)";

inline const char* T725_CODE_IDEAL_LEX = R"(x1 - x3^2*x4*x5^2*x6^2*x7^2
x2 - x3*x4*x5^2*x7
x3^3 - 1
x4^3 - 1
x5^3 - 1
x6^3 - 1
x7^3 - 1
)";

inline const char* F9_GENERALIZED_LEX = R"(x1_1 - x3_7
x1_2 - x3_8
x1_3 - x3_7*x3_8^2
x1_4 - x3_7^2*x3_8^2
x1_5 - x3_7^2
x1_6 - x3_8^2
x1_7 - x3_7^2*x3_8
x1_8 - x3_7*x3_8
x2_1 - x3_7^2*x3_8^2
x2_2 - x3_7^2
x2_3 - x3_8^2
x2_4 - x3_7^2*x3_8
x2_5 - x3_7*x3_8
x2_6 - x3_7
x2_7 - x3_8
x2_8 - x3_7*x3_8^2
x3_1 - x3_7*x3_8^2
x3_2 - x3_7^2*x3_8^2
x3_3 - x3_7^2
x3_4 - x3_8^2
x3_5 - x3_7^2*x3_8
x3_6 - x3_7*x3_8
x3_7^3 - 1
x3_8^3 - 1
)";

/// phi images of alpha^1..alpha^8 as (b1, b2) in the last two slots.
inline const int F9_PHI[8][2] = {{1, 2}, {2, 2}, {2, 0}, {0, 2},
                                 {2, 1}, {1, 1}, {1, 0}, {0, 1}};

/// m_i^{(j)} for the F9 code as powers of alpha, j = 1..8 per row.
inline const int F9_MVEC[2][8] = {{7, 8, 1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6, 7, 8, 1}};

// ---------------------------------------------------------------------------
// Runner.
// ---------------------------------------------------------------------------

struct Result {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::vector<Binomial> parse_set(const char* text, const VarNames& names,
                                       const MonomialOrder& ord) {
  std::vector<Binomial> v = parse_binomial_list(text, names, ord);
  sort_by_lead_desc(v, ord);
  return v;
}

inline bool same_set(std::vector<Binomial> a, std::vector<Binomial> b, const MonomialOrder& ord) {
  sort_by_lead_desc(a, ord);
  sort_by_lead_desc(b, ord);
  return a == b;
}

inline std::string describe(const std::vector<Binomial>& v, const VarNames& names) {
  std::string out;
  for (const Binomial& b : v) out += "  " + binomial_to_string(b, names) + "\n";
  return out;
}

inline bool basis_matches(const GroebnerBasis& got, const char* expected_text,
                          const VarNames& names, std::string& diag) {
  std::vector<Binomial> want = parse_set(expected_text, names, got.order);
  if (same_set(got.elems, want, got.order)) return true;
  diag = "expected:\n" + describe(want, names) + "got:\n" + describe(got.elems, names);
  return false;
}

}  // namespace detail

inline std::vector<Result> run(const std::string& only = "") {
  std::vector<std::pair<std::string, std::function<bool(std::string&)>>> items;

  // --- F7 pipeline -------------------------------------------------------
  // H' is pinned to the lift (1 2 5); parity_check returns a scalar
  // multiple of that row, which spans the same code but a different
  // toric ideal.
  items.emplace_back("f7-toric-basis", [](std::string& diag) {
    IntMatrix A = toric_mod_matrix({{1, 2, 5}}, 7);
    GroebnerBasis B = toric_ideal_gb(A, MonomialOrder::lex(4));
    return detail::basis_matches(B, F7_TORIC_BASIS, VarNames::with_aux(3, 1), diag);
  });
  items.emplace_back("f7-substitution", [](std::string& diag) {
    IntMatrix A = toric_mod_matrix({{1, 2, 5}}, 7);
    GroebnerBasis toric = toric_ideal_gb(A, MonomialOrder::lex(4));
    MonomialOrder lex3 = MonomialOrder::lex(3);
    std::vector<Binomial> subs = substitute_ones(toric.elems, 3, lex3);
    VarNames plain = VarNames::plain(3);
    if (!detail::same_set(subs, detail::parse_set(F7_SUBSTITUTED, plain, lex3), lex3)) {
      diag = "substituted set mismatch:\n" + detail::describe(subs, plain);
      return false;
    }
    GroebnerBasis red = reduce_basis(buchberger(subs, lex3));
    return detail::basis_matches(red, F7_CODE_IDEAL_LEX, plain, diag);
  });
  items.emplace_back("f7-code-ideal", [](std::string& diag) {
    LinearCode C = f7_code();
    GroebnerBasis closed = code_ideal_lex_gb(C);
    if (!detail::basis_matches(closed, F7_CODE_IDEAL_LEX, VarNames::plain(3), diag)) return false;
    if (!(reduce_basis(closed) == closed)) {
      diag = "closed form is not reduced";
      return false;
    }
    GroebnerBasis direct = reduce_basis(buchberger(code_ideal_generators(C).gens, closed.order));
    if (!(direct == closed)) {
      diag = "direct computation disagrees with the closed form";
      return false;
    }
    GroebnerBasis via = code_ideal_via_elimination(C);
    if (!(via == closed)) {
      diag = "toric route disagrees with the closed form";
      return false;
    }
    return true;
  });

  // --- ternary [6,3] ------------------------------------------------------
  items.emplace_back("t63-generalized-generators", [](std::string& diag) {
    LinearCode C = ternary63_code();
    GenCodeIdealGens gens = generalized_ideal_generators(C);
    MonomialOrder ord = MonomialOrder::lex(12);
    VarNames names = VarNames::doubled(6, 2);
    if (gens.code_part.size() != 6 || gens.field_part.size() != 18) {
      diag = "generator counts off";
      return false;
    }
    if (!detail::same_set(gens.all(), detail::parse_set(T63_GENERALIZED_GENS, names, ord), ord)) {
      diag = "generator set mismatch:\n" + detail::describe(gens.all(), names);
      return false;
    }
    return true;
  });
  items.emplace_back("t63-closed-lex", [](std::string& diag) {
    LinearCode C = ternary63_code();
    GroebnerBasis closed = generalized_lex_gb_prime(C);
    if (!detail::basis_matches(closed, T63_GENERALIZED_LEX, VarNames::doubled(6, 2), diag))
      return false;
    if (!(reduce_basis(closed) == closed)) {
      diag = "closed form is not reduced";
      return false;
    }
    if (!(generalized_lex_gb(C) == closed)) {
      diag = "general construction does not specialize to the prime one";
      return false;
    }
    return true;
  });
  items.emplace_back("t63-buchberger-equality", [](std::string& diag) {
    LinearCode C = ternary63_code();
    GroebnerBasis closed = generalized_lex_gb_prime(C);
    GroebnerBasis direct =
        reduce_basis(buchberger(generalized_ideal_generators(C).all(), closed.order));
    if (!(direct == closed)) {
      diag = "expected:\n" + detail::describe(closed.elems, VarNames::doubled(6, 2)) +
             "got:\n" + detail::describe(direct.elems, VarNames::doubled(6, 2));
      return false;
    }
    return true;
  });
  items.emplace_back("t63-restrict-1", [](std::string& diag) {
    LinearCode C = ternary63_code();
    std::vector<Binomial> r1 = restrict_generalized(C, 1);
    VarNames names = VarNames::doubled(6, 2);
    MonomialOrder ord = MonomialOrder::lex(12);
    if (!detail::same_set(r1, detail::parse_set(T63_RESTRICT_COL1, names, ord), ord)) {
      diag = "column-1 restriction mismatch:\n" + detail::describe(r1, names);
      return false;
    }
    GroebnerBasis renamed{MonomialOrder::lex(6), project(r1, column_vars(C, 1), MonomialOrder::lex(6)),
                          false};
    if (!(reduce_basis(renamed) == code_ideal_lex_gb(C))) {
      diag = "renamed restriction is not the code ideal basis";
      return false;
    }
    return true;
  });
  items.emplace_back("t63-restrict-2", [](std::string& diag) {
    LinearCode C = ternary63_code();
    std::vector<Binomial> r2 = restrict_generalized(C, 2);
    VarNames names = VarNames::doubled(6, 2);
    MonomialOrder ord = MonomialOrder::lex(12);
    if (!detail::same_set(r2, detail::parse_set(T63_RESTRICT_COL2, names, ord), ord)) {
      diag = "column-2 restriction mismatch:\n" + detail::describe(r2, names);
      return false;
    }
    GroebnerBasis renamed{MonomialOrder::lex(6), project(r2, column_vars(C, 2), MonomialOrder::lex(6)),
                          false};
    if (!(reduce_basis(renamed) == code_ideal_lex_gb(C))) {
      diag = "renamed restriction is not the code ideal basis";
      return false;
    }
    return true;
  });
  items.emplace_back("t63-code-ideal", [](std::string& diag) {
    LinearCode C = ternary63_code();
    return detail::basis_matches(code_ideal_lex_gb(C), T63_CODE_IDEAL_LEX, VarNames::plain(6),
                                 diag);
  });

  // --- F9 -----------------------------------------------------------------
  items.emplace_back("f9-phi-table", [](std::string& diag) {
    LinearCode C = f9_code();
    const Field& F = C.field();
    Crossing X(C.field_ptr(), 3);
    for (int j = 1; j <= 8; ++j) {
      std::vector<int> got = X.phi(F.alpha_pow(j));
      std::vector<int> want(8, 0);
      want[6] = F9_PHI[j - 1][0];
      want[7] = F9_PHI[j - 1][1];
      if (got != want) {
        diag = "phi(alpha^" + std::to_string(j) + ") mismatch";
        return false;
      }
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 1; j <= 8; ++j) {
        FieldElem m = F.mul(F.neg(C.standard_generator().at(i, 2)), F.alpha_pow(j));
        if (m != F.alpha_pow(F9_MVEC[i][j - 1])) {
          diag = "m_" + std::to_string(i + 1) + "^(" + std::to_string(j) + ") mismatch";
          return false;
        }
      }
    std::vector<int> zero = X.phi(F.zero());
    for (int v : zero)
      if (v != 0) {
        diag = "phi(0) != 0";
        return false;
      }
    return true;
  });
  items.emplace_back("f9-closed-lex", [](std::string& diag) {
    LinearCode C = f9_code();
    GroebnerBasis closed = generalized_lex_gb(C);
    if (closed.elems.size() != 24) {
      diag = "expected 24 = n(q-1) elements, got " + std::to_string(closed.elems.size());
      return false;
    }
    if (!detail::basis_matches(closed, F9_GENERALIZED_LEX, VarNames::doubled(3, 8), diag))
      return false;
    if (!(reduce_basis(closed) == closed)) {
      diag = "closed form is not reduced";
      return false;
    }
    return true;
  });
  items.emplace_back("f9-standard-count", [](std::string& diag) {
    LinearCode C = f9_code();
    std::vector<Monomial> sm = standard_monomials(generalized_lex_gb(C), 1 << 10);
    if (sm.size() != 9) {
      diag = "expected 9 standard monomials, got " + std::to_string(sm.size());
      return false;
    }
    return true;
  });

  // --- decoding traces ----------------------------------------------------
  items.emplace_back("decode-trace-1", [](std::string& diag) {
    LinearCode C = ternary725_code();
    const Field& F = C.field();
    GroebnerBasis B = reduce_basis(buchberger(code_ideal_generators(C).gens,
                                              MonomialOrder::degrevlex(7)));
    Monomial received{0, 2, 2, 0, 0, 0, 2};
    Monomial rem = normal_form(received, B);
    if (rem != Monomial{2, 0, 0, 0, 0, 2, 0}) {
      diag = "remainder mismatch: " + monomial_to_string(rem, VarNames::plain(7));
      return false;
    }
    Word w(7);
    for (int i = 0; i < 7; ++i) w[i] = F.from_int(received[i]);
    DecodeOutcome out = heuristic_decode(C, w, B, 2);
    std::vector<int> c(7);
    for (int i = 0; i < 7; ++i) c[i] = out.decoded() ? F.to_int(out.codeword[i]) : -1;
    if (!out.decoded() || c != std::vector<int>{1, 2, 2, 0, 0, 1, 2} || out.scalar_used != 1) {
      diag = "decoded word mismatch";
      return false;
    }
    return true;
  });
  items.emplace_back("decode-trace-2", [](std::string& diag) {
    LinearCode C = ternary725_code();
    const Field& F = C.field();
    GroebnerBasis B = reduce_basis(buchberger(code_ideal_generators(C).gens,
                                              MonomialOrder::degrevlex(7)));
    Monomial first{0, 1, 2, 0, 0, 1, 2};
    if (normal_form(first, B) != Monomial{0, 0, 0, 1, 2, 1, 0}) {
      diag = "scalar-1 remainder is not x4*x5^2*x6";
      return false;
    }
    Monomial second{0, 2, 1, 0, 0, 2, 1};
    if (normal_form(second, B) != Monomial{1, 1, 0, 0, 0, 0, 0}) {
      diag = "scalar-2 remainder is not x1*x2";
      return false;
    }
    Word w(7);
    for (int i = 0; i < 7; ++i) w[i] = F.from_int(first[i]);
    DecodeOutcome out = heuristic_decode(C, w, B, 2);
    std::vector<int> c(7);
    for (int i = 0; i < 7; ++i) c[i] = out.decoded() ? F.to_int(out.codeword[i]) : -1;
    if (!out.decoded() || out.scalar_used != 2 || c != std::vector<int>{1, 2, 2, 0, 0, 1, 2}) {
      diag = "sweep outcome mismatch";
      return false;
    }
    return true;
  });
  items.emplace_back("t725-code-ideal", [](std::string& diag) {
    LinearCode C = ternary725_code();
    return detail::basis_matches(code_ideal_lex_gb(C), T725_CODE_IDEAL_LEX, VarNames::plain(7),
                                 diag);
  });

  std::vector<Result> results;
  for (auto& [name, fn] : items) {
    if (!only.empty() && name.find(only) == std::string::npos) continue;
    Result r;
    r.name = name;
    try {
      r.pass = fn(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace codegb::verify

#endif
