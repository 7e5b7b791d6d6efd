#include "qdiffop/qdiffop.hpp"

#include "doctest.h"
#include "properties.hpp"

using namespace exactring;
using namespace qdiffop;

namespace {

TablePtr a1_table() { return SymbolTable::make({"qh", "th", "X"}); }

RatFn sym(const TablePtr& t, const std::string& n, int e = 1) {
  return RatFn::symbol(t, n, e);
}

// The reflection, shift, and their composite on one variable.
DiffOp sigma(const TablePtr& t) {
  return DiffOp::shift(t, {"X"}, {-1}, {0}, RatFn::one(t));
}
DiffOp varpi(const TablePtr& t, int halfshift) {
  return DiffOp::shift(t, {"X"}, {1}, {halfshift}, RatFn::one(t));
}

}  // namespace

TEST_CASE("construction and factories") {
  TablePtr t = a1_table();
  DiffOp id = DiffOp::identity(t, {"X"});
  CHECK(id.term_count() == 1);
  CHECK(id.coeff({1}, {0}).eq(RatFn::one(t)));
  CHECK((id - id).is_zero());
  CHECK(DiffOp::mult(sym(t, "X"), {"X"}).apply(RatFn::one(t)).eq(sym(t, "X")));

  CHECK_THROWS_AS(DiffOp(t, {"qh"}), TableMismatch);
  CHECK_THROWS_AS(DiffOp(SymbolTable::make({"X"}), {"X"}), UnmappedSymbol);
  CHECK_THROWS_AS(DiffOp::shift(t, {"X"}, {2}, {0}, RatFn::one(t)), TableMismatch);
  CHECK_THROWS_AS(DiffOp::shift(t, {"X"}, {1}, {0, 0}, RatFn::one(t)), TableMismatch);
}

TEST_CASE("composition key law") {
  TablePtr t = a1_table();
  DiffOp s = sigma(t);
  DiffOp p = varpi(t, 2);   // X -> q X (half-unit shift 2)
  DiffOp pi = varpi(t, -2);

  CHECK((s * s) == DiffOp::identity(t, {"X"}));
  CHECK((p * pi) == DiffOp::identity(t, {"X"}));

  // sigma then varpi-type composites land on the expected keys.
  DiffOp sp = s * p;
  CHECK(sp.term_count() == 1);
  CHECK(sp.coeff({-1}, {2}).eq(RatFn::one(t)));
  DiffOp ps = p * s;
  CHECK(ps.coeff({-1}, {-2}).eq(RatFn::one(t)));

  // A sign flip with shift 4 sends X to q^2 X^{-1}: built as sigma * tau.
  DiffOp st = s * varpi(t, 4);
  CHECK(st.coeff({-1}, {4}).eq(RatFn::one(t)));
  RatFn img = st.apply(sym(t, "X"));
  CHECK(img.eq(sym(t, "qh", 4) * sym(t, "X", -1)));
}

TEST_CASE("application and coefficient transport") {
  TablePtr t = a1_table();
  RatFn x = sym(t, "X");
  RatFn q2 = sym(t, "qh", 2);
  DiffOp p = varpi(t, 2);

  // (varpi f)(X) = f(qX).
  CHECK(p.apply(x).eq(q2 * x));
  CHECK(p.apply(x.pow(-3)).eq(q2.pow(-3) * x.pow(-3)));

  // mult(X) * varpi vs varpi * mult(X): transport produces the q factor.
  DiffOp mx = DiffOp::mult(x, {"X"});
  DiffOp a = mx * p;  // f -> X * f(qX)
  DiffOp b = p * mx;  // f -> (X f)(qX) = qX f(qX)
  CHECK(b == a.scale(q2));

  // Sign flips transport denominators exactly.
  RatFn c = RatFn::one(t) / (RatFn::one(t) - x * x);
  DiffOp cs = sigma(t).scale(c);  // c(X) * (f -> f(X^-1))
  RatFn g = (x + RatFn::one(t)) / (x - q2);
  RatFn expect = c * g.mirror(t->require("X"));
  CHECK(cs.apply(g).eq(expect));
}

TEST_CASE("scale is left multiplication by a function") {
  TablePtr t = a1_table();
  RatFn x = sym(t, "X");
  DiffOp p = varpi(t, 2);
  // scale(f) agrees with mult(f) * op (no conjugation of f).
  CHECK(p.scale(x) == DiffOp::mult(x, {"X"}) * p);
  CHECK((p.scale(x)).apply(RatFn::one(t)).eq(x));
  CHECK(op_scale(p, RatFn::zero(t)).is_zero());
}

TEST_CASE("two-variable operators") {
  TablePtr t = SymbolTable::make({"qh", "z", "w1", "w2"});
  std::vector<std::string> vars{"w1", "w2"};
  RatFn w1 = sym(t, "w1"), w2 = sym(t, "w2");

  DiffOp d1 = DiffOp::shift(t, vars, {1, 1}, {4, 0}, RatFn::one(t));
  DiffOp d2 = DiffOp::shift(t, vars, {1, 1}, {0, 4}, RatFn::one(t));
  // D1 w1 = q^2 w1 D1, D1 w2 = w2 D1.
  CHECK(d1.apply(w1).eq(sym(t, "qh", 4) * w1));
  CHECK(d1.apply(w2).eq(w2));
  CHECK((d1 * d2) == (d2 * d1));

  // Sign flips are rejected on several variables.
  CHECK_THROWS_AS(DiffOp::shift(t, vars, {-1, 1}, {0, 0}, RatFn::one(t)),
                  TableMismatch);
  CHECK_THROWS_AS(d1.fold_symmetric(), TableMismatch);
}

TEST_CASE("fold rewrites sign flips and agrees on the symmetric basis") {
  TablePtr t = a1_table();
  RatFn th = sym(t, "th");
  RatFn x = sym(t, "X");
  RatFn c = (th - th.inv()) / (x * x - RatFn::one(t));
  DiffOp op = sigma(t).scale(th) + (sigma(t) - DiffOp::identity(t, {"X"})).scale(c);

  DiffOp folded = fold_symmetric(op);
  for (const auto& [key, coeff] : folded.terms()) {
    (void)coeff;
    CHECK(key.eps[0] == 1);
  }
  for (int n = 0; n <= 12; ++n) {
    RatFn f = sym(t, "X", n) + sym(t, "X", -n);
    CHECK(op.apply(f).eq(folded.apply(f)));
  }
}

TEST_CASE("hecke-type inversion") {
  TablePtr t = a1_table();
  RatFn th = sym(t, "th");
  RatFn x = sym(t, "X");
  RatFn c = (th - th.inv()) / (x * x - RatFn::one(t));
  DiffOp T = sigma(t).scale(th) + (sigma(t) - DiffOp::identity(t, {"X"})).scale(c);

  // (T - th)(T + th^{-1}) = 0, so the inverse exists on both sides.
  DiffOp Ti = invert_hecke(T, th, th.inv());
  DiffOp id = DiffOp::identity(t, {"X"});
  CHECK((T * Ti) == id);
  CHECK((Ti * T) == id);

  // An operator violating the quadratic relation is rejected.
  CHECK_THROWS_AS(invert_hecke(DiffOp::mult(x, {"X"}), th, th.inv()),
                  QuadraticRelationFails);
}

TEST_CASE("canonical text") {
  TablePtr t = a1_table();
  DiffOp op = varpi(t, 2).scale(sym(t, "X")) + sigma(t) - DiffOp::identity(t, {"X"});
  CHECK(op.to_string() ==
        "[1] (x) (-1,0) + [-1] (x) (+1,0) + [1*X^1] (x) (+1,2)");
  CHECK(DiffOp(t, {"X"}).to_string() == "0");
  TablePtr t2 = SymbolTable::make({"qh", "w1", "w2"});
  DiffOp two = DiffOp::shift(t2, {"w1", "w2"}, {1, 1}, {4, -4},
                             RatFn::one(t2));
  CHECK(two.to_string() == "[1] (x) (+1,4; +1,-4)");
}

TEST_CASE("free-function forms") {
  TablePtr t = a1_table();
  DiffOp s = sigma(t), p = varpi(t, 2);
  CHECK(op_arith(s, p, OpArith::add) == s + p);
  CHECK(op_arith(s, p, OpArith::sub) == s - p);
  CHECK(op_arith(s, p, OpArith::compose) == s * p);
  CHECK(op_eq(s * s, DiffOp::identity(t, {"X"})));
  RatFn f = sym(t, "X") + sym(t, "qh");
  CHECK(op_apply(p, f).eq(p.apply(f)));
}

TEST_CASE("operator properties on random instances") {
  CHECK(props::run_op_assoc(101, 500) == 0);
  CHECK(props::run_op_apply_consistency(202, 200) == 0);
  CHECK(props::run_fold_agreement(303, 60, 12) == 0);
  CHECK(props::run_sigma_free_uniqueness(404, 120, 12) == 0);
}
