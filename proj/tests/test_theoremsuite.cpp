#include "theoremsuite/theoremsuite.hpp"

#include "daha/daha.hpp"
#include "doctest.h"
#include "exactring/exactring.hpp"
#include "qdiffop/qdiffop.hpp"

using exactring::GaussianRational;
using exactring::LaurentPoly;
using exactring::RatFn;
using exactring::Valuation;
using qdiffop::DiffOp;

namespace {

Valuation cc_point() {
  return Valuation{daha::cc_table(),
                   {{"t1", GaussianRational::rational(2, 3)},
                    {"t2", GaussianRational::rational(3, 7)},
                    {"t3", GaussianRational::rational(5, 11)},
                    {"t4", GaussianRational::rational(7, 5)}},
                   {}};
}

Valuation a1_symbolic() { return Valuation{daha::a1_table(), {}, {}}; }

void check_all(const theoremsuite::TheoremCheck& t) {
  for (const auto& c : t.checks) {
    CAPTURE(c.desc);
    CAPTURE(c.residual_text);
    CHECK(c.pass);
    CHECK(c.tier == "operator-identity");
    CHECK(c.residual_text == "0");
    CHECK(c.millis == 0);
  }
  CHECK(t.all_pass());
}

}  // namespace

TEST_CASE("three-holed sphere: ring collapse and flavor dictionary") {
  theoremsuite::TheoremCheck t = theoremsuite::check_s03();
  CHECK(t.name == "three-holed-sphere");
  CHECK(t.checks.size() == 5);
  check_all(t);
  CHECK(t.constants.at("A") == "qh^{-1}");
  CHECK(t.constants.at("l2") == "z2");
  CHECK(t.constants.at("q") == "A^{-2}");

  nlohmann::ordered_json j = theoremsuite::to_json(t);
  CHECK(j.at("name") == "three-holed-sphere");
  CHECK(j.at("checks").size() == 5);
  const auto& c0 = j.at("checks").at(0);
  CHECK(c0.contains("desc"));
  CHECK(c0.at("pass").get<bool>());
  CHECK(c0.at("tier") == "operator-identity");
  CHECK(c0.at("residual_text") == "0");
  CHECK(c0.at("millis").get<long long>() == 0);
  CHECK(j.at("constants").at("l1") == "z1");
}

TEST_CASE("four-holed sphere: generator dictionary at a rational point") {
  theoremsuite::TheoremCheck t = theoremsuite::check_s04(cc_point(), 3);
  CHECK(t.name == "four-holed-sphere");
  // alpha + curves -3..3 + negative control + four relations + dictionary.
  CHECK(t.checks.size() == 14);
  check_all(t);
  CHECK(t.constants.count("f_0") == 1);
  CHECK(t.constants.count("f_-3") == 1);
  CHECK(t.constants.count("f_3") == 1);
  CHECK(t.constants.at("A") == "qh^{-1}");
}

TEST_CASE("once-punctured torus: exact dictionary, symbolic parameters") {
  theoremsuite::TheoremCheck t = theoremsuite::check_s11(a1_symbolic(), 3);
  CHECK(t.name == "once-punctured-torus");
  // alpha, beta^2, gamma beta, gamma^2, control, 2*(2*3+1) family checks,
  // family control, dictionary.
  CHECK(t.checks.size() == 21);
  check_all(t);
  CHECK(t.constants.at("l") == "qh^{-2} th^2");
  CHECK(t.constants.at("z") == "qh^{-2} th^2");
}

TEST_CASE("require_symmetric_mult accepts exactly symmetric multiplications") {
  auto tb = daha::a1_table();
  const std::vector<std::string> xv{"X"};
  RatFn X = RatFn::symbol(tb, "X");
  RatFn two = RatFn::constant(tb, GaussianRational::rational(2, 1));

  DiffOp ok = DiffOp::mult(X + X.inv() + two, xv);
  LaurentPoly p = theoremsuite::require_symmetric_mult(ok);
  CHECK(RatFn::from_poly(p).eq(X + X.inv() + two));

  DiffOp zero = DiffOp::zero(tb, xv);
  CHECK(theoremsuite::require_symmetric_mult(zero).is_zero());

  DiffOp shifted = DiffOp::shift(tb, xv, {1}, {2}, RatFn::one(tb));
  CHECK_THROWS_AS(theoremsuite::require_symmetric_mult(shifted),
                  theoremsuite::MismatchBeyondScalar);

  DiffOp reflected = DiffOp::shift(tb, xv, {-1}, {0}, RatFn::one(tb));
  CHECK_THROWS_AS(theoremsuite::require_symmetric_mult(reflected),
                  theoremsuite::MismatchBeyondScalar);

  DiffOp asym = DiffOp::mult(X + X.pow(3), xv);
  CHECK_THROWS_AS(theoremsuite::require_symmetric_mult(asym),
                  theoremsuite::MismatchBeyondScalar);

  DiffOp nonlaurent = DiffOp::mult(RatFn::one(tb) / (X + RatFn::one(tb)), xv);
  CHECK_THROWS_AS(theoremsuite::require_symmetric_mult(nonlaurent),
                  theoremsuite::MismatchBeyondScalar);
}

TEST_CASE("error types carry their messages") {
  theoremsuite::MismatchExact e("probe");
  CHECK(std::string(e.what()).find("MismatchExact") == 0);
  theoremsuite::MismatchBeyondScalar b("probe");
  CHECK(std::string(b.what()).find("MismatchBeyondScalar") == 0);
}
