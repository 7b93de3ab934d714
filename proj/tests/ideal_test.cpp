#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "codegb/ideal.hpp"
#include "codegb/textio.hpp"
#include "test_util.hpp"

using namespace codegb;
using testutil::int_word;
using testutil::thrown_code;

TEST_CASE("crossing map on the F5 worked example") {
  auto F = testutil::prime_field(5, 2);
  Crossing X(F, 3);
  Word w = int_word(*F, {1, 0, 3});  // (alpha^4, 0, alpha^3)
  Monomial up = X.up(w);
  Monomial expected(12);
  expected[X.var(0, 4)] = 1;
  expected[X.var(2, 3)] = 1;
  REQUIRE(up == Monomial{0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0});
  REQUIRE(up == expected);
  REQUIRE(X.down(up) == w);
  REQUIRE(X.up(int_word(*F, {0, 0, 0})).is_one());
}

TEST_CASE("crossing map over F3 with alpha = 2") {
  auto F = testutil::prime_field(3, 2);
  Crossing X(F, 2);
  Monomial up = X.up(int_word(*F, {2, 1}));
  Monomial expected(4);
  expected[X.var(0, 1)] = 1;  // 2 = alpha
  expected[X.var(1, 2)] = 1;  // 1 = alpha^2
  REQUIRE(up == expected);
}

TEST_CASE("down-then-up is the identity on all words of small spaces") {
  auto F5 = testutil::prime_field(5, 2);
  Crossing X(F5, 4);
  // exhaustive 5^4 = 625
  Word w(4, F5->zero());
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          w = int_word(*F5, {a, b, c, d});
          REQUIRE(X.down(X.up(w)) == w);
        }
  // down is defined on arbitrary nonnegative exponents and stays linear
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial m(16), mm(16);
    for (int i = 0; i < 16; ++i) {
      m[i] = static_cast<Exp>(rng() % 4);
      mm[i] = static_cast<Exp>(rng() % 4);
    }
    REQUIRE(X.down(m + mm) == word_add(*F5, X.down(m), X.down(mm)));
  }
}

TEST_CASE("phi is linear and hits unit vectors on the basis powers") {
  auto F = testutil::f9();
  Crossing X(F, 1);
  for (unsigned u = 7; u <= 8; ++u) {
    std::vector<int> ph = X.phi(F->alpha_pow(u));
    for (unsigned j = 0; j < 8; ++j) REQUIRE(ph[j] == (j + 1 == u ? 1 : 0));
  }
  std::vector<int> zero = X.phi(F->zero());
  REQUIRE(std::all_of(zero.begin(), zero.end(), [](int v) { return v == 0; }));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      FieldElem a{(unsigned)i}, b{(unsigned)j};
      std::vector<int> pa = X.phi(a), pb = X.phi(b), ps = X.phi(F->add(a, b));
      for (int t = 0; t < 8; ++t) REQUIRE(ps[t] == (pa[t] + pb[t]) % 3);
    }
  // componentwise application over words
  Crossing Xw(F, 2);
  Word w = {F->alpha_pow(3), F->zero()};
  std::vector<int> pw = Xw.phi_word(w);
  REQUIRE(pw.size() == 16);
  std::vector<int> first = Xw.phi(w[0]);
  for (int t = 0; t < 8; ++t) {
    REQUIRE(pw[t] == first[t]);
    REQUIRE(pw[8 + t] == 0);
  }
  // reading phi back through the crossing map returns beta in place
  Crossing X3(F, 3);
  for (int i = 0; i < 9; ++i) {
    FieldElem beta{(unsigned)i};
    Monomial m(24);
    std::vector<int> ph = X3.phi(beta);
    for (int t = 0; t < 8; ++t) m[X3.var(1, t + 1)] = ph[t];
    Word back = X3.down(m);
    REQUIRE(back[0].is_zero());
    REQUIRE(back[1] == beta);
    REQUIRE(back[2].is_zero());
  }
}

TEST_CASE("code ideal generators for the F7 code") {
  LinearCode C = testutil::f7_code();
  CodeIdealGens gens = code_ideal_generators(C);
  REQUIRE(gens.nvars == 3);
  REQUIRE(gens.gens.size() == 5);  // 2 rows + 3 power relations
  MonomialOrder lex = MonomialOrder::lex(3);
  std::set<Binomial> got(gens.gens.begin(), gens.gens.end());
  CHECK(got.count(Binomial::make(Monomial{1, 0, 4}, Monomial(3), lex).value()) == 1);
  CHECK(got.count(Binomial::make(Monomial{0, 1, 1}, Monomial(3), lex).value()) == 1);
  CHECK(got.count(Binomial::make(Monomial{7, 0, 0}, Monomial(3), lex).value()) == 1);
  CHECK(thrown_code([] { code_ideal_generators(testutil::f9_code()); }) ==
        errc::not_prime_field);
}

TEST_CASE("full code over F3 collapses to x1 - 1") {
  auto F = testutil::prime_field(3, 2);
  LinearCode C(F, testutil::int_matrix(*F, {{1}}));
  CodeIdealGens gens = code_ideal_generators(C);
  REQUIRE(gens.gens.size() == 2);  // x1 - 1 and x1^3 - 1
  GroebnerBasis red = reduce_basis(buchberger(gens.gens, MonomialOrder::lex(1)));
  REQUIRE(red.elems.size() == 1);
  REQUIRE(red.elems[0].lead() == Monomial{1});
  REQUIRE(red.elems[0].tail() == Monomial{0});
  GroebnerBasis closed = code_ideal_lex_gb(C);
  REQUIRE(closed == red);
}

TEST_CASE("closed lex form equals the direct computation on permuted codes too") {
  auto F = testutil::prime_field(5, 2);
  // first column zero forces a recorded permutation
  LinearCode C(F, testutil::int_matrix(*F, {{0, 1, 3}, {0, 2, 2}}));
  REQUIRE(C.permuted());
  GroebnerBasis closed = code_ideal_lex_gb(C);
  GroebnerBasis direct = reduce_basis(buchberger(code_ideal_generators(C).gens, closed.order));
  REQUIRE(closed == direct);
  REQUIRE(reduce_basis(closed) == closed);
  // every element corresponds to a codeword difference
  for (const Binomial& g : closed.elems) {
    Word diff(3);
    for (int t = 0; t < 3; ++t)
      diff[t] = F->sub(F->from_int(g.lead()[t]), F->from_int(g.tail()[t]));
    REQUIRE(C.is_codeword(diff));
  }
}

TEST_CASE("generalized generators: binary case equals the code ideal after renaming") {
  auto F = testutil::prime_field(2);
  LinearCode C(F, testutil::int_matrix(*F, {{1, 1, 0}, {0, 1, 1}}));
  GenCodeIdealGens gens = generalized_ideal_generators(C);
  REQUIRE(gens.nvars == 3);  // q - 1 = 1 slot per coordinate
  REQUIRE(gens.code_part.size() == 2);
  REQUIRE(gens.field_part.size() == 3);  // x_i^2 - 1
  MonomialOrder lex = MonomialOrder::lex(3);
  GroebnerBasis via_gen = reduce_basis(buchberger(gens.all(), lex));
  GroebnerBasis via_code = reduce_basis(buchberger(code_ideal_generators(C).gens, lex));
  REQUIRE(via_gen == via_code);
  GroebnerBasis closed = generalized_lex_gb_prime(C);
  REQUIRE(closed == via_code);
  REQUIRE(generalized_lex_gb(C) == closed);
}

TEST_CASE("generalized generators for the [1,1] ternary code, unrolled") {
  auto F = testutil::prime_field(3, 2);
  LinearCode C(F, testutil::int_matrix(*F, {{1}}));
  GenCodeIdealGens gens = generalized_ideal_generators(C);
  MonomialOrder lex = MonomialOrder::lex(2);
  REQUIRE(gens.code_part.size() == 2);
  std::set<Binomial> code(gens.code_part.begin(), gens.code_part.end());
  CHECK(code.count(Binomial::make(Monomial{1, 0}, Monomial{0, 0}, lex).value()) == 1);
  CHECK(code.count(Binomial::make(Monomial{0, 1}, Monomial{0, 0}, lex).value()) == 1);
  REQUIRE(gens.field_part.size() == 3);
}

TEST_CASE("the general closed form specializes to the prime one for r = 1") {
  for (const LinearCode& C : {testutil::ternary63_code(), testutil::ternary725_code()}) {
    GroebnerBasis a = generalized_lex_gb(C);
    GroebnerBasis b = generalized_lex_gb_prime(C);
    REQUIRE(a == b);
  }
}

TEST_CASE("closed-form bases have non-divisible leads and vanishing s-polynomials") {
  std::vector<GroebnerBasis> bases = {generalized_lex_gb_prime(testutil::ternary63_code()),
                                      generalized_lex_gb(testutil::f9_code()),
                                      code_ideal_lex_gb(testutil::f7_code())};
  for (const GroebnerBasis& B : bases) {
    for (std::size_t i = 0; i < B.elems.size(); ++i)
      for (std::size_t j = 0; j < B.elems.size(); ++j) {
        if (i == j) continue;
        REQUIRE_FALSE(divides(B.elems[i].lead(), B.elems[j].lead()));
      }
    for (std::size_t i = 0; i < B.elems.size(); ++i)
      for (std::size_t j = i + 1; j < B.elems.size(); ++j) {
        auto s = spoly(B.elems[i], B.elems[j], B.order);
        if (s) REQUIRE_FALSE(normal_form(*s, B.elems, B.order));
      }
  }
}

TEST_CASE("closed generalized form survives a column permutation") {
  auto F = testutil::prime_field(3, 2);
  LinearCode C(F, testutil::int_matrix(*F, {{0, 1, 2}, {0, 2, 2}}));
  REQUIRE(C.permuted());
  GroebnerBasis closed = generalized_lex_gb_prime(C);
  GroebnerBasis direct =
      reduce_basis(buchberger(generalized_ideal_generators(C).all(), closed.order));
  REQUIRE(closed == direct);
  REQUIRE(reduce_basis(closed) == closed);
}

TEST_CASE("toric helper matrices") {
  CHECK(toric_mod_matrix({{1, 2, 5}}, 7) == IntMatrix{{1, 2, 5, 7}});
  CHECK(toric_mod_matrix({{1, 0}, {0, 1}}, 3) == IntMatrix{{1, 0, 3, 0}, {0, 1, 0, 3}});
  LinearCode C = testutil::ternary63_code();
  IntMatrix lifted = parity_lift(C);
  REQUIRE(lifted.size() == 3);
  REQUIRE(lifted[0].size() == 6);
  IntMatrix A = toric_mod_matrix(lifted, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) REQUIRE(A[i][6 + j] == (i == j ? 3 : 0));
}

TEST_CASE("toric ideals of injective and collapsing maps") {
  // identity matrix: trivial kernel, empty basis
  GroebnerBasis empty = toric_ideal_gb({{1, 0}, {0, 1}}, MonomialOrder::lex(2));
  REQUIRE(empty.elems.empty());
  // (1 1): kernel spanned by (1,-1)
  GroebnerBasis diag = toric_ideal_gb({{1, 1}}, MonomialOrder::lex(2));
  REQUIRE(diag.elems.size() == 1);
  REQUIRE(diag.elems[0].lead() == Monomial{1, 0});
  REQUIRE(diag.elems[0].tail() == Monomial{0, 1});
}

TEST_CASE("every toric basis element lies in the integer kernel") {
  IntMatrix A = {{1, 2, 5, 7}};
  for (auto ord : {MonomialOrder::lex(4), MonomialOrder::degrevlex(4)}) {
    GroebnerBasis B = toric_ideal_gb(A, ord);
    REQUIRE_FALSE(B.elems.empty());
    for (const Binomial& g : B.elems) {
      long long acc = 0;
      for (int j = 0; j < 4; ++j) acc += A[0][j] * (g.lead()[j] - g.tail()[j]);
      REQUIRE(acc == 0);
    }
  }
}

TEST_CASE("negative or ragged toric inputs are rejected") {
  CHECK(thrown_code([] { toric_ideal_gb({{1, -1}}, MonomialOrder::lex(2)); }) ==
        errc::not_divisible);
  CHECK(thrown_code([] { toric_ideal_gb({{1, 2, 3}}, MonomialOrder::lex(2)); }) ==
        errc::length_mismatch);
}

TEST_CASE("adjoining y - 1 and eliminating y is the substitution route") {
  // vars ranked y, x1, x2, x3: the toric generators of (1 2 5 7) plus
  // y - 1, eliminated down to K[x]
  MonomialOrder ord = MonomialOrder::lex({3, 0, 1, 2});
  IntMatrix A = {{1, 2, 5, 7}};
  GroebnerBasis toric = toric_ideal_gb(A, MonomialOrder::lex(4));
  std::vector<Binomial> gens = toric.elems;
  gens.push_back(Binomial::make(Monomial{0, 0, 0, 1}, Monomial(4), ord).value());
  GroebnerBasis B = reduce_basis(buchberger(gens, ord));
  std::vector<Binomial> kept = eliminate(B, {true, true, true, false});
  MonomialOrder lex3 = MonomialOrder::lex(3);
  GroebnerBasis projected{lex3, project(kept, {0, 1, 2}, lex3), false};
  REQUIRE(reduce_basis(projected) == code_ideal_lex_gb(testutil::f7_code()));
}

TEST_CASE("multi-row toric bridges produce integer-kernel binomials") {
  LinearCode C = testutil::ternary63_code();
  IntMatrix A = toric_mod_matrix(parity_lift(C), 3);  // 3 x 9
  GroebnerBasis B = toric_ideal_gb(A, MonomialOrder::lex(9));
  REQUIRE_FALSE(B.elems.empty());
  for (const Binomial& g : B.elems)
    for (std::size_t row = 0; row < 3; ++row) {
      long long acc = 0;
      for (int j = 0; j < 9; ++j) acc += A[row][j] * (g.lead()[j] - g.tail()[j]);
      REQUIRE(acc == 0);
    }
  REQUIRE(code_ideal_via_elimination(C) == code_ideal_lex_gb(C));
}

TEST_CASE("elimination route equals the closed form on random prime codes") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 4; ++trial) {
    LinearCode C = testutil::random_code(3, 4, 2, rng);
    REQUIRE(code_ideal_via_elimination(C) == code_ideal_lex_gb(C));
  }
  LinearCode F7 = testutil::f7_code();
  REQUIRE(code_ideal_via_elimination(F7) == code_ideal_lex_gb(F7));
}

TEST_CASE("the toric route rejects full codes") {
  auto F = testutil::prime_field(3, 2);
  LinearCode C(F, testutil::int_matrix(*F, {{1, 0}, {0, 1}}));
  CHECK(thrown_code([&] { code_ideal_via_elimination(C); }) == errc::rank_deficient);
  // but the direct constructors handle them
  GroebnerBasis closed = code_ideal_lex_gb(C);
  REQUIRE(closed.elems.size() == 2);
}

TEST_CASE("restricting a binary generalized ideal is the identity") {
  auto F = testutil::prime_field(2);
  LinearCode C(F, testutil::int_matrix(*F, {{1, 1, 0}, {0, 1, 1}}));
  std::vector<Binomial> r = restrict_generalized(C, 1);
  MonomialOrder lex3 = MonomialOrder::lex(3);
  GroebnerBasis renamed{lex3, project(r, column_vars(C, 1), lex3), false};
  REQUIRE(reduce_basis(renamed) == code_ideal_lex_gb(C));
  REQUIRE(r.size() == code_ideal_lex_gb(C).elems.size());
}

TEST_CASE("membership lemma: crossing differences of codewords reduce to zero") {
  LinearCode C = testutil::ternary63_code();
  Crossing X(C.field_ptr(), 6);
  GroebnerBasis B = generalized_lex_gb_prime(C);
  std::mt19937_64 rng(3131);
  for (int trial = 0; trial < 300; ++trial) {
    // random exponent vectors with entries in 0..2; membership iff the
    // down-difference is a codeword
    Monomial a(12), b(12);
    for (int i = 0; i < 12; ++i) {
      a[i] = static_cast<Exp>(rng() % 3);
      b[i] = static_cast<Exp>(rng() % 3);
    }
    Word diff = word_sub(C.field(), X.down(a), X.down(b));
    bool member = in_ideal(a, b, B);
    REQUIRE(member == C.is_codeword(diff));
  }
}

TEST_CASE("quasi-linearity of the crossing map modulo the field relations") {
  LinearCode C = testutil::ternary63_code();
  const Field& F = C.field();
  Crossing X(C.field_ptr(), 6);
  GenCodeIdealGens gens = generalized_ideal_generators(C);
  MonomialOrder drl = MonomialOrder::degrevlex(12);
  GroebnerBasis Iq = reduce_basis(buchberger(gens.field_part, drl));
  std::mt19937_64 rng(1213);
  for (int trial = 0; trial < 400; ++trial) {
    Word a = testutil::random_word(F, 6, rng);
    Word b = testutil::random_word(F, 6, rng);
    Monomial lhs = X.up(a) + X.up(b);
    Monomial rhs = X.up(word_add(F, a, b));
    REQUIRE(normal_form(lhs, Iq) == normal_form(rhs, Iq));
  }
}

TEST_CASE("standard monomial counts follow the quotient dimensions") {
  // code ideal: p^{n-k}; generalized: p^{r(n-k)}
  LinearCode t63 = testutil::ternary63_code();
  CHECK(standard_monomials(code_ideal_lex_gb(t63), 1 << 12).size() == 27);
  CHECK(standard_monomials(generalized_lex_gb_prime(t63), 1 << 12).size() == 27);
  LinearCode f7 = testutil::f7_code();
  CHECK(standard_monomials(code_ideal_lex_gb(f7), 1 << 12).size() == 7);
  LinearCode f9 = testutil::f9_code();
  CHECK(standard_monomials(generalized_lex_gb(f9), 1 << 12).size() == 9);
  LinearCode t725 = testutil::ternary725_code();
  CHECK(standard_monomials(code_ideal_lex_gb(t725), 1 << 12).size() == 243);
  CHECK(standard_monomials(generalized_lex_gb_prime(t725), 1 << 12).size() == 243);
}
