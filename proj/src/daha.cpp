#include "daha/daha.hpp"

namespace daha {

using exactring::GaussianRational;
using exactring::SymbolTable;
using presentation::Presentation;
using presentation::Relation;
using presentation::RepMap;
using qdiffop::invert_hecke;

namespace {

const std::vector<std::string> kVarX{"X"};

DiffOp sigma(const TablePtr& t) {
  return DiffOp::shift(t, kVarX, {-1}, {0}, RatFn::one(t));
}
DiffOp shift_op(const TablePtr& t, int k, const RatFn& coeff) {
  return DiffOp::shift(t, kVarX, {1}, {k}, coeff);
}

}  // namespace

TablePtr cc_table() {
  return SymbolTable::make({"qh", "t1", "t2", "t3", "t4", "X"});
}

TablePtr a1_table() { return SymbolTable::make({"qh", "th", "X"}); }

Valuation symbolic_cc() { return Valuation{cc_table(), {}, {}}; }
Valuation symbolic_a1() { return Valuation{a1_table(), {}, {}}; }

// ---------------------------------------------------------------------------
// Four-parameter family
// ---------------------------------------------------------------------------

CCRep build_cc_rep(const Valuation& val) {
  const TablePtr& tb = val.table;
  RatFn one = RatFn::one(tb);
  RatFn X = RatFn::symbol(tb, "X");
  RatFn Xi = RatFn::symbol(tb, "X", -1);
  RatFn q = val.v("qh").pow(2);
  RatFn t1 = val.v("t1"), t2 = val.v("t2"), t3 = val.v("t3"), t4 = val.v("t4");

  // c3 = t3^{-1} (1 - t3 t4 X)(1 + (t3/t4) X) / (1 - X^2)
  RatFn c3 = t3.inv() * (one - t3 * t4 * X) * (one + (t3 / t4) * X) / (one - X * X);
  // c2 = t2^{-1} (1 - q t1 t2 X^{-1})(1 + (q t2/t1) X^{-1}) / (1 - q^2 X^{-2})
  RatFn c2 = t2.inv() * (one - q * t1 * t2 * Xi) * (one + (q * t2 / t1) * Xi) /
             (one - q * q * Xi * Xi);

  DiffOp id = DiffOp::identity(tb, kVarX);
  DiffOp sig = sigma(tb);
  DiffOp sgt = DiffOp::shift(tb, kVarX, {-1}, {4}, one);  // X -> q^2 X^{-1}

  DiffOp T3 = id.scale(t3) + (sig - id).scale(c3);
  DiffOp T2 = id.scale(t2) + (sgt - id).scale(c2);
  DiffOp T3i = invert_hecke(T3, t3, t3.inv());
  DiffOp T2i = invert_hecke(T2, t2, t2.inv());
  DiffOp T4 = DiffOp::mult(Xi, kVarX) * T3i;
  DiffOp T1 = (T2i * DiffOp::mult(X, kVarX)).scale(q.inv());
  DiffOp T4i = invert_hecke(T4, t4, t4.inv());
  DiffOp T1i = invert_hecke(T1, t1, t1.inv());
  DiffOp e = (T3 + id.scale(t3.inv())).scale((t3 + t3.inv()).inv());

  if (!(T4 * T3 * T2 * T1 - id.scale(q.inv())).is_zero())
    throw BraidRelationFails("T4 T3 T2 T1 != q^{-1} Id");
  if (!(e * e - e).is_zero())
    throw BraidRelationFails("spherical idempotent fails e^2 = e");
  if (!(T3 * e - e.scale(t3)).is_zero())
    throw BraidRelationFails("T3 e != t3 e");

  DiffOp x_raw = (T4 * T3 + T3i * T4i) * e;
  DiffOp y_raw = (T3 * T2 + T2i * T3i) * e;
  DiffOp z_raw = (T3 * T1 + T1i * T3i) * e;

  return CCRep{val,  T1,  T2,  T3,    T4,    T1i,  T2i, T3i,
               T4i,  e,   x_raw, y_raw, z_raw};
}

RatFn cc_u_shift_coeff(const Valuation& val) {
  const TablePtr& tb = val.table;
  RatFn one = RatFn::one(tb);
  RatFn X = RatFn::symbol(tb, "X");
  RatFn q = val.v("qh").pow(2);
  RatFn t1 = val.v("t1"), t2 = val.v("t2"), t3 = val.v("t3"), t4 = val.v("t4");
  return (t2 * t3).inv() * (one - t3 * t4 * X) * (one + (t3 / t4) * X) *
         (one - q * t1 * t2 * X) * (one + (q * t2 / t1) * X) /
         ((one - X * X) * (one - q * q * X * X));
}

SphericalTriple spherical_cc(const CCRep& rep) {
  const Valuation& val = rep.val;
  const TablePtr& tb = val.table;
  std::size_t xi_index = tb->require("X");
  RatFn one = RatFn::one(tb);
  RatFn X = RatFn::symbol(tb, "X");
  RatFn Xi = RatFn::symbol(tb, "X", -1);
  RatFn q = val.v("qh").pow(2);

  DiffOp x = rep.x_raw.fold_symmetric();
  DiffOp y = rep.y_raw.fold_symmetric();
  DiffOp z = rep.z_raw.fold_symmetric();

  if (x != DiffOp::mult(X + Xi, kVarX))
    throw ClosedFormMismatch("folded x is not multiplication by X + X^{-1}");

  RatFn U = cc_u_shift_coeff(val);
  RatFn Ub = U.mirror(xi_index);
  RatFn f_y = y.apply(one);
  RatFn f_z = z.apply(one);

  DiffOp ycf = shift_op(tb, 4, U) + shift_op(tb, -4, Ub) +
               DiffOp::mult(f_y - U - Ub, kVarX);
  if (y != ycf)
    throw ClosedFormMismatch("folded y does not match the U(X)-form");

  RatFn zp = q * X * U;
  RatFn zm = q * Xi * Ub;
  DiffOp zcf = shift_op(tb, 4, zp) + shift_op(tb, -4, zm) +
               DiffOp::mult(f_z - zp - zm, kVarX);
  if (z != zcf)
    throw ClosedFormMismatch("folded z does not match the qXU(X)-form");

  auto check_constant = [&](const char* name, const RatFn& f) {
    if (!exactring::laurent_quotient_test(f).has_value())
      throw ClosedFormMismatch(std::string(name) + " is not a Laurent polynomial");
    if (!f.eq(f.mirror(xi_index)))
      throw ClosedFormMismatch(std::string(name) + " is not symmetric under X -> X^{-1}");
  };
  check_constant("f_y", f_y);
  check_constant("f_z", f_z);

  return SphericalTriple{x, y, z, Provenance::raw_folded, f_y, f_z};
}

// ---------------------------------------------------------------------------
// One-parameter family
// ---------------------------------------------------------------------------

namespace {

struct A1Parts {
  DiffOp T, Ti, X, Xi, Y, Yi, e;
};

// Build one candidate reading; performs the Hecke inversion (which may throw).
A1Parts build_a1_candidate(const Valuation& val, const std::string& t_reading,
                           const std::string& y_order) {
  const TablePtr& tb = val.table;
  RatFn one = RatFn::one(tb);
  RatFn x = RatFn::symbol(tb, "X");
  RatFn th = val.v("th");

  RatFn c = (th - th.inv()) / (x * x - one);
  DiffOp id = DiffOp::identity(tb, kVarX);
  DiffOp sig = sigma(tb);
  DiffOp T = (t_reading == "multiplication")
                 ? sig.scale(th) + DiffOp::mult(c, kVarX)
                 : sig.scale(th) + (sig - id).scale(c);
  DiffOp Ti = invert_hecke(T, th, th.inv());

  DiffOp X = DiffOp::mult(x, kVarX);
  DiffOp Xi = DiffOp::mult(x.inv(), kVarX);
  DiffOp pw = shift_op(tb, 2, one);
  DiffOp pwi = shift_op(tb, -2, one);

  DiffOp Y = (y_order == "rightmost-acts-first") ? sig * pw * T : T * pw * sig;
  DiffOp Yi = (y_order == "rightmost-acts-first") ? Ti * pwi * sig : sig * pwi * Ti;

  DiffOp e = (T + id.scale(th.inv())).scale((th + th.inv()).inv());
  return A1Parts{T, Ti, X, Xi, Y, Yi, e};
}

}  // namespace

A1Rep build_a1_rep(const Valuation& val) {
  const TablePtr& tb = val.table;
  RatFn one = RatFn::one(tb);
  RatFn th = val.v("th");
  RatFn q = val.v("qh").pow(2);
  DiffOp id = DiffOp::identity(tb, kVarX);

  std::vector<A1Candidate> log;
  A1Rep selected{val, id, id, id, id, id, id, id, "", "", {}};
  int passers = 0;

  for (const std::string tr : {"demazure", "multiplication"}) {
    for (const std::string yo : {"rightmost-acts-first", "leftmost-acts-first"}) {
      A1Candidate cand{tr, yo, false, {}};
      try {
        A1Parts p = build_a1_candidate(val, tr, yo);
        auto check = [&](const std::string& name, bool ok) {
          cand.checks.emplace_back(name, ok);
          return ok;
        };
        bool ok = true;
        ok &= check("hecke quadratic",
                    ((p.T - id.scale(th)) * (p.T + id.scale(th.inv()))).is_zero());
        ok &= check("Y invertible", (p.Y * p.Yi - id).is_zero() &&
                                        (p.Yi * p.Y - id).is_zero());
        ok &= check("T X T = X^{-1}", (p.T * p.X * p.T - p.Xi).is_zero());
        ok &= check("T Y^{-1} T = Y", (p.T * p.Yi * p.T - p.Y).is_zero());
        ok &= check("Y^{-1}X^{-1}YXT^2 = q^{-1}",
                    (p.Yi * p.Xi * p.Y * p.X * p.T * p.T - id.scale(q.inv()))
                        .is_zero());
        cand.pass = ok;
        if (ok) {
          ++passers;
          selected.T = p.T;
          selected.Ti = p.Ti;
          selected.X = p.X;
          selected.Xi = p.Xi;
          selected.Y = p.Y;
          selected.Yi = p.Yi;
          selected.e = p.e;
          selected.t_reading = tr;
          selected.y_order = yo;
        }
      } catch (const qdiffop::QuadraticRelationFails&) {
        cand.checks.emplace_back("hecke quadratic", false);
        cand.pass = false;
      }
      log.push_back(std::move(cand));
    }
  }

  if (passers != 1)
    throw AmbiguityUnresolved(
        "expected exactly one passing reading of T and Y, found " +
        std::to_string(passers));
  selected.candidates = std::move(log);
  return selected;
}

RatFn a1_v_shift_coeff(const Valuation& val) {
  const TablePtr& tb = val.table;
  RatFn x = RatFn::symbol(tb, "X");
  RatFn xi = RatFn::symbol(tb, "X", -1);
  RatFn th = val.v("th");
  return (th * x - th.inv() * xi) / (x - xi);
}

SphericalTriple closed_spherical_a1(const Valuation& val) {
  const TablePtr& tb = val.table;
  std::size_t xi_index = tb->require("X");
  RatFn x = RatFn::symbol(tb, "X");
  RatFn xi = RatFn::symbol(tb, "X", -1);
  RatFn qh = val.v("qh");
  RatFn V = a1_v_shift_coeff(val);
  RatFn Vb = V.mirror(xi_index);

  DiffOp xcf = DiffOp::mult(x + xi, kVarX);
  DiffOp ycf = shift_op(tb, 2, V) + shift_op(tb, -2, Vb);
  DiffOp zcf = shift_op(tb, 2, qh.inv() * xi * V) + shift_op(tb, -2, qh.inv() * x * Vb);
  RatFn f_y = ycf.apply(RatFn::one(tb));
  RatFn f_z = zcf.apply(RatFn::one(tb));
  return SphericalTriple{xcf, ycf, zcf, Provenance::closed_form, f_y, f_z};
}

SphericalTriple spherical_a1(const A1Rep& rep) {
  const Valuation& val = rep.val;
  RatFn qh = val.v("qh");

  DiffOp x = ((rep.X + rep.Xi) * rep.e).fold_symmetric();
  DiffOp y = ((rep.Y + rep.Yi) * rep.e).fold_symmetric();
  DiffOp z = (((rep.Y * rep.X).scale(qh) + (rep.Xi * rep.Yi).scale(qh.inv())) * rep.e)
                 .fold_symmetric();

  SphericalTriple cf = closed_spherical_a1(val);
  if (x != cf.x)
    throw ClosedFormMismatch("folded x is not multiplication by X + X^{-1}");
  if (y != cf.y) throw ClosedFormMismatch("folded y does not match the V(X)-form");
  if (z != cf.z)
    throw ClosedFormMismatch("folded z does not match the q^{-1/2}X^{-1}V(X)-form");

  RatFn f_y = y.apply(RatFn::one(val.table));
  RatFn f_z = z.apply(RatFn::one(val.table));
  return SphericalTriple{x, y, z, Provenance::raw_folded, f_y, f_z};
}

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

Presentation cc_presentation() {
  TablePtr p = SymbolTable::make({"qh", "t1", "t2", "t3", "t4"});
  RatFn q = RatFn::symbol(p, "qh", 2);
  RatFn t1 = RatFn::symbol(p, "t1"), t2 = RatFn::symbol(p, "t2");
  RatFn t3 = RatFn::symbol(p, "t3"), t4 = RatFn::symbol(p, "t4");

  RatFn s1 = t1 - t1.inv();
  RatFn s2 = t2 - t2.inv();
  RatFn s3 = q.inv() * t3 - q * t3.inv();
  RatFn s4 = t4 - t4.inv();
  RatFn L = s2 * s4 + s3 * s1;
  RatFn M = s1 * s2 + s3 * s4;
  RatFn N = s1 * s4 + s3 * s2;

  RatFn comm = q.pow(-2) - q.pow(2);
  RatFn unit = q.inv() - q;

  auto commutator = [&](const std::string& name, const std::string& a,
                        const std::string& b, const std::string& c,
                        const RatFn& central) {
    Relation r;
    r.name = name;
    r.terms.push_back({q.inv(), {a, b}});
    r.terms.push_back({-q, {b, a}});
    r.terms.push_back({-comm, {c}});
    r.terms.push_back({unit * central, {}});
    return r;
  };

  Relation r4;
  r4.name = "quartic";
  r4.terms.push_back({q.inv(), {"x", "y", "z"}});
  r4.terms.push_back({-q.pow(-2), {"x", "x"}});
  r4.terms.push_back({-q.pow(2), {"y", "y"}});
  r4.terms.push_back({-q.pow(-2), {"z", "z"}});
  r4.terms.push_back({q.inv() * M, {"x"}});
  r4.terms.push_back({q * N, {"y"}});
  r4.terms.push_back({q.inv() * L, {"z"}});
  r4.terms.push_back(
      {s1 * s1 + s2 * s2 + s3 * s3 + s4 * s4 - s1 * s2 * s3 * s4 +
           (q + q.inv()) * (q + q.inv()),
       {}});

  return Presentation{"daha-cc",
                      {"x", "y", "z"},
                      p,
                      {commutator("commutator-xy", "x", "y", "z", L),
                       commutator("commutator-yz", "y", "z", "x", M),
                       commutator("commutator-zx", "z", "x", "y", N), r4}};
}

Presentation a1_presentation(A1QuarticConstant variant) {
  TablePtr p = SymbolTable::make({"qh", "th"});
  RatFn qh = RatFn::symbol(p, "qh");
  RatFn q = qh.pow(2);
  RatFn t = RatFn::symbol(p, "th", 2);

  auto commutator = [&](const std::string& name, const std::string& a,
                        const std::string& b, const std::string& c) {
    Relation r;
    r.name = name;
    r.terms.push_back({qh, {a, b}});
    r.terms.push_back({-qh.inv(), {b, a}});
    r.terms.push_back({-(q - q.inv()), {c}});
    return r;
  };

  RatFn constant = (variant == A1QuarticConstant::plus_form)
                       ? t * q.inv() + q * t.inv() + q + q.inv()
                       : t * q.inv() - q * t.inv() + q + q.inv();
  Relation r4;
  r4.name = "quartic";
  r4.terms.push_back({q, {"x", "x"}});
  r4.terms.push_back({q.inv(), {"y", "y"}});
  r4.terms.push_back({q, {"z", "z"}});
  r4.terms.push_back({-qh, {"x", "y", "z"}});
  r4.terms.push_back({-constant, {}});

  return Presentation{"daha-a1",
                      {"x", "y", "z"},
                      p,
                      {commutator("commutator-xy", "x", "y", "z"),
                       commutator("commutator-yz", "y", "z", "x"),
                       commutator("commutator-zx", "z", "x", "y"), r4}};
}

namespace {

RepMap rep_map_from(const Valuation& val, const std::vector<std::string>& params,
                    const SphericalTriple& s) {
  RepMap rep;
  rep.op_table = val.table;
  rep.op_vars = kVarX;
  rep.images.emplace("x", s.x);
  rep.images.emplace("y", s.y);
  rep.images.emplace("z", s.z);
  for (const auto& name : params) rep.translation.emplace(name, val.v(name));
  return rep;
}

}  // namespace

RepMap cc_rep_map(const CCRep& rep, const SphericalTriple& s) {
  return rep_map_from(rep.val, {"qh", "t1", "t2", "t3", "t4"}, s);
}

RepMap a1_rep_map(const A1Rep& rep, const SphericalTriple& s) {
  return rep_map_from(rep.val, {"qh", "th"}, s);
}

}  // namespace daha
