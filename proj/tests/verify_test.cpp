#include <catch2/catch.hpp>

#include "codegb/verify.hpp"

using namespace codegb;

TEST_CASE("the golden suite passes on a fresh build") {
  for (const verify::Result& r : verify::run()) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("corrupting an expected binomial makes the comparison fail") {
  LinearCode C = verify::f7_code();
  GroebnerBasis closed = code_ideal_lex_gb(C);
  std::string diag;
  REQUIRE(verify::detail::basis_matches(closed, verify::F7_CODE_IDEAL_LEX, VarNames::plain(3),
                                        diag));
  const char* corrupted = "x1 - x3^4\nx2 - x3^6\nx3^7 - 1\n";
  REQUIRE_FALSE(verify::detail::basis_matches(closed, corrupted, VarNames::plain(3), diag));
  REQUIRE_FALSE(diag.empty());
}

TEST_CASE("the item filter selects by substring") {
  std::vector<verify::Result> rs = verify::run("decode");
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) CHECK(r.name.find("decode") != std::string::npos);
}
