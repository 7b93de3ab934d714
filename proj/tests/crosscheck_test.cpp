#include <catch2/catch.hpp>

#include <random>

#include "codegb/decode.hpp"
#include "codegb/ideal.hpp"
#include "test_util.hpp"

using namespace codegb;

// Randomized agreement checks across every route to the same object:
// closed-form bases vs Buchberger vs the toric substitution, FGLM vs a
// direct run, and both decoders against the exhaustive oracle.

TEST_CASE("all pipelines agree on randomized prime-field codes") {
  std::mt19937_64 rng(0xBEEF5EEDULL);
  int built = 0;
  while (built < 20) {
    int p = std::vector<int>{3, 3, 5, 5, 7}[rng() % 5];
    std::size_t n = 3 + rng() % 4;  // 3..6
    std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, 3);
    LinearCode C = testutil::random_code(p, n, k, rng);
    ++built;

    GroebnerBasis closed = code_ideal_lex_gb(C);
    std::vector<Binomial> gens = code_ideal_generators(C).gens;
    REQUIRE(reduce_basis(buchberger(gens, closed.order)) == closed);
    REQUIRE(code_ideal_via_elimination(C) == closed);

    MonomialOrder drl = MonomialOrder::degrevlex(n);
    GroebnerBasis direct_drl = reduce_basis(buchberger(gens, drl));
    REQUIRE(fglm(closed, drl) == direct_drl);

    GroebnerBasis gen_closed = generalized_lex_gb_prime(C);
    REQUIRE(generalized_lex_gb(C) == gen_closed);
    REQUIRE(reduce_basis(gen_closed) == gen_closed);

    double quotient = 1;
    for (std::size_t i = 0; i < n - k; ++i) quotient *= p;
    REQUIRE(standard_monomials(closed, 1 << 15).size() == quotient);
    REQUIRE(standard_monomials(direct_drl, 1 << 15).size() == quotient);

    int t = min_distance(C).t;
    bool with_complete = quotient <= 800;
    GroebnerBasis gen_drl{drl, {}, false};
    if (with_complete)
      gen_drl = fglm(gen_closed, MonomialOrder::degrevlex(n * (p - 1)));
    for (int trial = 0; trial < 25; ++trial) {
      Word w = testutil::random_word(C.field(), n, rng);
      Nearest oracle = nearest_codewords_bruteforce(C, w);
      DecodeOutcome h = heuristic_decode(C, w, direct_drl, t);
      if (h.decoded()) {
        REQUIRE(oracle.closest.size() == 1);
        REQUIRE(oracle.closest[0] == h.codeword);
      }
      if (with_complete) {
        DecodeOutcome c = complete_decode(C, w, gen_drl, t);
        REQUIRE(hamming_distance(w, c.codeword) == oracle.distance);
      }
    }
  }
}

TEST_CASE("the F9 closed generalized basis agrees with a direct computation") {
  LinearCode C = testutil::f9_code();
  GroebnerBasis closed = generalized_lex_gb(C);
  GroebnerBasis direct =
      reduce_basis(buchberger(generalized_ideal_generators(C).all(), closed.order));
  REQUIRE(direct == closed);
  // and through fglm to a degree-compatible order
  MonomialOrder drl = MonomialOrder::degrevlex(24);
  REQUIRE(fglm(closed, drl) ==
          reduce_basis(buchberger(generalized_ideal_generators(C).all(), drl)));
}

TEST_CASE("generalized ideals of random extension-field codes stay consistent") {
  auto F = testutil::f9();
  std::mt19937_64 rng(0xF91234ULL);
  int built = 0;
  while (built < 4) {
    Matrix G(1, 2);
    G.at(0, 0) = FieldElem(static_cast<unsigned>(1 + rng() % 8));
    G.at(0, 1) = FieldElem(static_cast<unsigned>(rng() % 9));
    LinearCode C(F, std::move(G));
    ++built;
    GroebnerBasis closed = generalized_lex_gb(C);
    GroebnerBasis direct =
        reduce_basis(buchberger(generalized_ideal_generators(C).all(), closed.order));
    REQUIRE(direct == closed);
    REQUIRE(standard_monomials(closed, 1 << 12).size() == 9);  // 3^{2*(2-1)}
  }
}
