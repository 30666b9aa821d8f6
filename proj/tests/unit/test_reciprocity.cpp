#include "doctest.h"
#include "whitlocal/error.hpp"
#include "whitlocal/reciprocity.hpp"

using namespace whitlocal;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

ParamPair numeric(const Rational& s, const Rational& w, int n) { return {LaurentPoly(s), LaurentPoly(w), n}; }

}  // namespace

TEST_CASE("dual parameters") {
  auto half = Rational(1, 2);
  CHECK(dual_params(numeric(half, half, 2)) == numeric(half, half, 2));
  CHECK(dual_params(numeric(1, 1, 3)) == numeric(Rational(2, 3), Rational(4, 3), 3));
  auto d = dual_params(ParamPair::symbolic(2));
  CHECK(d.s == P("1/2 - 1/2*s + 1/2*w"));
  CHECK(d.w == P("3/2*s + 1/2*w - 1/2"));
  for (int n = 2; n <= 10; ++n) CHECK(dual_params(dual_params(ParamPair::symbolic(n))) == ParamPair::symbolic(n));
  CHECK_THROWS_AS(dual_params(numeric(0, 0, 1)), Error);
  CHECK(dual_params(numeric(1, 1, 3)).to_json().dump() == R"({"n":3,"s":"2/3","w":"4/3"})");
}

TEST_CASE("involution and exponent identities") {
  for (int n = 2; n <= 10; ++n) CHECK_MESSAGE(verify_involution_and_exponents(n).passed(), "n=" << n);
  CHECK(verify_involution_and_exponents(2).checks.size() == 5);
  CHECK(verify_involution_and_exponents(5).checks.size() == 4);
}

TEST_CASE("a perturbed map is caught") {
  auto r = verify_involution_and_exponents(2, Rational(1, 100));
  CHECK(r.status() == Status::Fail);
  int failed = 0;
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) {
      ++failed;
      CHECK(c.witness.has_value());
      CHECK_FALSE(c.witness->empty());
    }
  CHECK(failed == 5);
}

TEST_CASE("Weyl conjugation") {
  auto w = weyl_swap(2);
  CHECK(w.at(0, 0) == LaurentPoly(1));
  CHECK(w.at(1, 2) == LaurentPoly(1));
  CHECK(w.at(2, 1) == LaurentPoly(1));
  CHECK(unipotent_at_q(2).at(0, 2) == P("beta1"));
  CHECK(unipotent_at_l(2).at(0, 1) == P("beta1"));
  for (int n = 2; n <= 6; ++n) CHECK(weyl_conjugation_identity(n).passed());
  // conjugating the wrong way round does not give U_l back from U_l
  CHECK_FALSE(weyl_swap(3) * unipotent_at_l(3) * weyl_swap(3) == unipotent_at_l(3));
}

TEST_CASE("cusp factorization") {
  for (int n = 2; n <= 4; ++n) {
    auto r = cusp_invariance_factorization(n);
    CHECK(r.passed());
    CHECK(r.checks.size() == 3);
  }
}
