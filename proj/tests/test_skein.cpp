#include "skein/skein.hpp"

#include "doctest.h"
#include "presentation/presentation.hpp"

using namespace exactring;
using namespace qdiffop;
using namespace skein;

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

bool all_pass(const std::vector<presentation::RelationVerdict>& vs) {
  for (const auto& v : vs)
    if (!v.pass) return false;
  return !vs.empty();
}

}  // namespace

TEST_CASE("surface specs: generators, relations, boundary parameters") {
  SkeinSpec s03 = build_skein(Surface::s03);
  CHECK(s03.pres.generators.empty());
  CHECK(s03.pres.relations.empty());
  CHECK(s03.boundary == std::vector<std::string>{"l1", "l2", "l3"});
  CHECK(s03.pres.parameters->size() == 4);  // A, l1, l2, l3
  CHECK(surface_name(Surface::s03) == "s03");

  SkeinSpec s04 = build_skein(Surface::s04);
  CHECK(s04.pres.name == "four-holed-sphere");
  CHECK(s04.pres.generators.size() == 3);
  CHECK(s04.pres.relations.size() == 4);
  CHECK(s04.pres.parameters->size() == 5);
  CHECK(s04.boundary == std::vector<std::string>{"l1", "l2", "l3", "l4"});
  CHECK(s04.pres.relations[3].name == "quartic");
  CHECK(s04.pres.relations[3].terms.size() == 8);

  SkeinSpec s11 = build_skein(Surface::s11);
  CHECK(s11.pres.name == "once-punctured-torus");
  CHECK(s11.pres.generators.size() == 3);
  CHECK(s11.pres.relations.size() == 4);
  CHECK(s11.pres.parameters->size() == 2);
  CHECK(s11.boundary == std::vector<std::string>{"l"});
}

TEST_CASE("negating beta and gamma is a symmetry of the torus relations only") {
  presentation::Presentation torus = build_skein(Surface::s11).pres;
  CHECK(z2_negation_preserves_relations(torus));

  // Negative control: an added relation with mixed parity is not preserved.
  presentation::Presentation corrupted = torus;
  RatFn one = RatFn::one(corrupted.parameters);
  corrupted.relations.push_back(
      presentation::Relation{"mixed", {{one, {"alpha"}}, {one, {"beta"}}}});
  CHECK(!z2_negation_preserves_relations(corrupted));

  // The four-holed-sphere relations mix parities inside each relation.
  CHECK(!z2_negation_preserves_relations(build_skein(Surface::s04).pres));
}

TEST_CASE("once-punctured torus: symbolic rep satisfies all relations") {
  Valuation val = a1_symbolic();
  SkeinRep rep = rep_skein(Surface::s11, val);
  SkeinSpec spec = build_skein(Surface::s11);

  auto verdicts = presentation::check_presentation(rep.map, spec.pres);
  CHECK(verdicts.size() == 4);
  CHECK(all_pass(verdicts));

  // Parameter translation: A -> qh^{-1}, l -> qh^{-2} th^2.
  const TablePtr& tb = val.table;
  CHECK(rep.map.translation.at("A").eq(RatFn::symbol(tb, "qh", -1)));
  CHECK(rep.map.translation.at("l").eq(RatFn::symbol(tb, "qh", -2) *
                                       RatFn::symbol(tb, "th", 2)));

  // The generator images are the n = 0, 1 members of the curve family.
  CHECK(rep.triple.y == s11_gamma_closed_form(val, 0));
  CHECK(rep.triple.z == s11_gamma_closed_form(val, 1));
}

TEST_CASE("once-punctured torus: curve recursion matches closed forms") {
  Valuation val = a1_symbolic();
  SkeinRep rep = rep_skein(Surface::s11, val);

  GammaFamily fam = gamma_family(Surface::s11, 5, rep);
  CHECK(fam.images.size() == 11);
  for (int n = -5; n <= 5; ++n)
    CHECK(fam.images.at(n) == s11_gamma_closed_form(val, n));

  CHECK(fam.f.empty());
  CHECK(fam.c_prime.empty());

  CHECK_THROWS_AS(gamma_family(Surface::s11, 0, rep), RangeError);
  CHECK_THROWS_AS(gamma_family(Surface::s04, 2, rep), std::invalid_argument);
}

TEST_CASE("four-holed sphere: shift coefficient vs displayed formula") {
  Valuation val = Valuation{daha::cc_table(), {}, {}};
  RatFn certified = s04_u_shift_coeff(val);
  RatFn displayed = s04_u_displayed(val);
  RatFn q = RatFn::symbol(val.table, "qh", 2);

  // The certified coefficient is exactly -q^{-1} times the displayed one.
  CHECK(certified.eq(-(q.inv()) * displayed));
  CHECK(!certified.eq(displayed));
}

TEST_CASE("four-holed sphere: rep at an exact rational point") {
  Valuation val = cc_point();
  SkeinRep rep = rep_skein(Surface::s04, val);
  SkeinSpec spec = build_skein(Surface::s04);

  auto verdicts = presentation::check_presentation(rep.map, spec.pres);
  CHECK(verdicts.size() == 4);
  for (const auto& v : verdicts) {
    CAPTURE(v.name);
    CHECK(v.pass);
  }

  const TablePtr& tb = val.table;
  CHECK(rep.map.translation.at("A").eq(RatFn::symbol(tb, "qh", -1)));
  CHECK(rep.map.translation.at("l1").eq(-val.v("t1")));
  CHECK(rep.map.translation.at("l2").eq(val.v("t2")));
  CHECK(rep.map.translation.at("l3").eq(val.v("t3")));
  CHECK(rep.map.translation.at("l4").eq(-val.v("t4")));

  // alpha acts as multiplication by X + X^{-1}.
  RatFn X = RatFn::symbol(tb, "X");
  CHECK(rep.triple.x == DiffOp::mult(X + X.inv(), {"X"}));

  // Curve family: each image decomposes into shift parts with the certified
  // coefficient and a symmetric Laurent remainder, and the remainders obey
  // the three-term recursion driven by the recovered constants.
  GammaFamily fam = gamma_family(Surface::s04, 3, rep);
  CHECK(fam.images.size() == 7);
  for (int n = -3; n <= 3; ++n) {
    LaurentPoly f = s04_gamma_decompose(rep, fam.images.at(n), n);
    CHECK(RatFn::from_poly(f).eq(fam.f.at(n)));
  }

  RatFn q = val.v("qh").pow(2);
  for (int m = -2; m <= 2; ++m) {
    RatFn rhs = q * (X + X.inv()) * fam.f.at(m) - q * q * fam.f.at(m - 1) -
                q * fam.c_prime.at(m);
    CHECK(fam.f.at(m + 1).eq(rhs));
  }

  CHECK_THROWS_AS(z2_invariant_images(rep), std::invalid_argument);
}

TEST_CASE("torus involution-invariant generator images") {
  Valuation val = a1_symbolic();
  SkeinRep rep = rep_skein(Surface::s11, val);
  auto imgs = z2_invariant_images(rep);
  CHECK(imgs.size() == 4);
  CHECK(imgs.at("alpha") == rep.triple.x);
  CHECK(imgs.at("beta2") == rep.triple.y * rep.triple.y);
  CHECK(imgs.at("gammabeta") == rep.triple.z * rep.triple.y);
  CHECK(imgs.at("gamma2") == rep.triple.z * rep.triple.z);

  // At th = 1 the shift coefficient collapses to 1, so beta^2 becomes the
  // plain two-step shift plus 2.
  Valuation unit = val.with_values({{"th", GaussianRational(1)}});
  SkeinRep rep1 = rep_skein(Surface::s11, unit);
  const TablePtr& tb = unit.table;
  RatFn one = RatFn::one(tb);
  DiffOp expected = DiffOp::shift(tb, {"X"}, {1}, {4}, one) +
                    DiffOp::shift(tb, {"X"}, {1}, {-4}, one) +
                    DiffOp::identity(tb, {"X"}).scale(GaussianRational(2));
  CHECK(z2_invariant_images(rep1).at("beta2") == expected);
}

TEST_CASE("three-holed sphere has no operator realization") {
  CHECK_THROWS_AS(rep_skein(Surface::s03, a1_symbolic()), std::invalid_argument);
  SkeinRep rep = rep_skein(Surface::s11, a1_symbolic());
  CHECK_THROWS_AS(gamma_family(Surface::s03, 2, rep), std::invalid_argument);
}
