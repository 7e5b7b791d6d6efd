#include "presentation/presentation.hpp"

#include "doctest.h"

using namespace exactring;
using namespace qdiffop;
using namespace presentation;

namespace {

// Quantum-plane fixture: generators x, y with y x = q x y, represented by
// x -> multiplication by X and y -> the shift X -> qX.
struct Fixture {
  TablePtr params = SymbolTable::make({"qh"});
  TablePtr op_table = SymbolTable::make({"qh", "X"});
  Presentation pres;
  RepMap rep;

  Fixture() {
    RatFn q = RatFn::symbol(params, "qh", 2);
    Relation r;
    r.name = "qplane";
    r.terms.push_back({q, {"x", "y"}});
    r.terms.push_back({-RatFn::one(params), {"y", "x"}});
    pres = Presentation{"quantum-plane", {"x", "y"}, params, {r}};

    rep.op_table = op_table;
    rep.op_vars = {"X"};
    rep.images.emplace("x", DiffOp::mult(RatFn::symbol(op_table, "X"), {"X"}));
    rep.images.emplace(
        "y", DiffOp::shift(op_table, {"X"}, {1}, {2}, RatFn::one(op_table)));
    rep.translation.emplace("qh", RatFn::symbol(op_table, "qh"));
  }
};

}  // namespace

TEST_CASE("word evaluation is left to right") {
  Fixture f;
  DiffOp xy = eval_word(f.rep, {"x", "y"});
  DiffOp yx = eval_word(f.rep, {"y", "x"});
  CHECK(xy == f.rep.images.at("x") * f.rep.images.at("y"));
  CHECK(yx == f.rep.images.at("y") * f.rep.images.at("x"));
  CHECK(xy != yx);
  CHECK(eval_word(f.rep, {}) == f.rep.identity());
  CHECK_THROWS_AS(eval_word(f.rep, {"x", "nope"}), UnmappedGenerator);
}

TEST_CASE("relation residuals and verdicts") {
  Fixture f;
  auto verdicts = check_presentation(f.rep, f.pres);
  REQUIRE(verdicts.size() == 1);
  CHECK(verdicts[0].pass);
  CHECK(verdicts[0].residual.is_zero());
  CHECK(verdicts[0].name == "qplane");

  // A wrong relation fails with a printable residual.
  Relation bad;
  bad.name = "commute";
  bad.terms.push_back({RatFn::one(f.params), {"x", "y"}});
  bad.terms.push_back({-RatFn::one(f.params), {"y", "x"}});
  Presentation pbad{"bad", {"x", "y"}, f.params, {bad}};
  auto vbad = check_presentation(f.rep, pbad);
  CHECK(!vbad[0].pass);
  CHECK(!vbad[0].residual.to_string().empty());
  CHECK(vbad[0].residual.to_string() != "0");

  // Verdicts are computed relation by relation: order does not change them.
  Presentation both{"both", {"x", "y"}, f.params, {bad, f.pres.relations[0]}};
  auto v2 = check_presentation(f.rep, both);
  CHECK(!v2[0].pass);
  CHECK(v2[1].pass);
}

TEST_CASE("constant words and parameter translation") {
  Fixture f;
  // x*y - q^2 * (empty word) has image X f(qX) - q^2: nonzero.
  Relation r;
  r.name = "affine";
  r.terms.push_back({RatFn::one(f.params), {"x", "y"}});
  r.terms.push_back({-RatFn::symbol(f.params, "qh", 4), {}});
  DiffOp res = relation_residual(f.rep, r);
  CHECK(!res.is_zero());
  CHECK(res.coeff({1}, {0}).eq(-RatFn::symbol(f.op_table, "qh", 4)));

  // Missing parameter translation surfaces as UnmappedSymbol.
  RepMap no_translation = f.rep;
  no_translation.translation.clear();
  CHECK_THROWS_AS(relation_residual(no_translation, f.pres.relations[0]),
                  UnmappedSymbol);
}

TEST_CASE("json export") {
  Fixture f;
  auto j = to_json(f.pres);
  CHECK(j["name"] == "quantum-plane");
  CHECK(j["generators"] == nlohmann::ordered_json::array({"x", "y"}));
  CHECK(j["parameters"] == nlohmann::ordered_json::array({"qh"}));
  REQUIRE(j["relations"].size() == 1);
  CHECK(j["relations"][0]["name"] == "qplane");
  CHECK(j["relations"][0]["terms"][0]["coeff"] == "1*qh^2");
  CHECK(j["relations"][0]["terms"][0]["word"] ==
        nlohmann::ordered_json::array({"x", "y"}));
  // Round-trip through text stays stable.
  CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
}
