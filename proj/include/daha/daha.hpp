#pragma once
// Operator representations of the two double affine Hecke algebras used
// downstream: the rank-one four-parameter family (generators T1..T4 acting on
// rational functions of one torus variable X) and the rank-one one-parameter
// family (T, X, Y).  Both are built exactly as printed formulas, verified at
// construction, and then restricted to the symmetric subspace through
// fold_symmetric to produce the spherical generator triples (x, y, z).
//
// Parameter symbols: "qh" is the half-unit shift (q = qh^2) and always stays
// symbolic; "t1".."t4" resp. "th" (t = th^2) may be given exact numeric
// values through a Valuation for fast randomized runs.

#include <string>
#include <utility>
#include <vector>

#include "exactring/exactring.hpp"
#include "presentation/presentation.hpp"
#include "qdiffop/qdiffop.hpp"

namespace daha {

using exactring::RatFn;
using exactring::TablePtr;
using exactring::Valuation;
using qdiffop::DiffOp;

// A product relation (braid-type, idempotency, or a fixed-vector identity)
// required of the constructed representation does not hold.
struct BraidRelationFails : std::runtime_error {
  explicit BraidRelationFails(const std::string& m)
      : std::runtime_error("BraidRelationFails: " + m) {}
};

// Candidate-reading selection found no unique passer.
struct AmbiguityUnresolved : std::runtime_error {
  explicit AmbiguityUnresolved(const std::string& m)
      : std::runtime_error("AmbiguityUnresolved: " + m) {}
};

// A folded operator disagrees with its printed closed form.
struct ClosedFormMismatch : std::runtime_error {
  explicit ClosedFormMismatch(const std::string& m)
      : std::runtime_error("ClosedFormMismatch: " + m) {}
};

// Symbol tables: {"qh","t1","t2","t3","t4","X"} and {"qh","th","X"}.
TablePtr cc_table();
TablePtr a1_table();

Valuation symbolic_cc();
Valuation symbolic_a1();

// ---------------------------------------------------------------------------
// Four-parameter family
// ---------------------------------------------------------------------------
struct CCRep {
  Valuation val;
  DiffOp T1, T2, T3, T4;
  DiffOp T1i, T2i, T3i, T4i;
  DiffOp e;                     // spherical idempotent
  DiffOp x_raw, y_raw, z_raw;   // printed spherical words, unfolded
};

// How a spherical triple was produced.
enum class Provenance { raw_folded, closed_form };

struct SphericalTriple {
  DiffOp x, y, z;
  Provenance tag;
  RatFn f_y, f_z;  // images of 1 under y and z (the identity-part constants)
};

// Build T3, T2 from their explicit formulas, T4 = X^{-1} T3^{-1} and
// T1 = q^{-1} T2^{-1} X, with every Hecke quadratic checked during inversion;
// verifies T4 T3 T2 T1 = q^{-1}, e^2 = e, T3 e = t3 e.
CCRep build_cc_rep(const Valuation& val);

// Fold the raw triple and certify the closed forms:
//   x = (X + X^{-1}) * Id,
//   y = U(X) tau + U(X^{-1}) tau^{-1} + (f_y - U(X) - U(X^{-1})) * Id,
//   z = qX U(X) tau + qX^{-1} U(X^{-1}) tau^{-1} + (f_z - ...) * Id,
// where tau is the full shift X -> q^2 X and f_y, f_z are the images of 1,
// both symmetric Laurent polynomials.
SphericalTriple spherical_cc(const CCRep& rep);

// U(X) = (t2 t3)^{-1} (1 - t3 t4 X)(1 + (t3/t4) X)(1 - q t1 t2 X)
//        (1 + (q t2/t1) X) / ((1 - X^2)(1 - q^2 X^2)).
RatFn cc_u_shift_coeff(const Valuation& val);

// ---------------------------------------------------------------------------
// One-parameter family
// ---------------------------------------------------------------------------
struct A1Candidate {
  std::string t_reading;  // "demazure" | "multiplication"
  std::string y_order;    // "rightmost-acts-first" | "leftmost-acts-first"
  bool pass;
  std::vector<std::pair<std::string, bool>> checks;
};

struct A1Rep {
  Valuation val;
  DiffOp T, Ti, X, Xi, Y, Yi, e;
  std::string t_reading;
  std::string y_order;
  std::vector<A1Candidate> candidates;  // the full 2x2 reading grid
};

// Construct both readings of the printed T (trailing fraction as a bare
// multiplication vs composed with (sigma - 1)) and both application orders of
// the printed word Y = sigma varpi T; log all four candidates' defining
// checks and select the unique one passing Hecke, Y-invertibility,
// T X T = X^{-1}, T Y^{-1} T = Y, and Y^{-1}X^{-1}YXT^2 = q^{-1}.
// Throws AmbiguityUnresolved unless exactly one candidate passes.
A1Rep build_a1_rep(const Valuation& val);

// Fold and certify against the printed closed forms
//   y = V(X) varpi + V(X^{-1}) varpi^{-1},
//   z = q^{-1/2} X^{-1} V(X) varpi + q^{-1/2} X V(X^{-1}) varpi^{-1},
// with V(X) = (th X - th^{-1} X^{-1}) / (X - X^{-1}).
SphericalTriple spherical_a1(const A1Rep& rep);

RatFn a1_v_shift_coeff(const Valuation& val);

// The closed forms built directly (provenance tag closed_form).
SphericalTriple closed_spherical_a1(const Valuation& val);

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

// Quartic constant variant for the one-parameter presentation: the relation
// q x^2 + q^{-1} y^2 + q z^2 - q^{1/2} xyz = C with
//   plus_form :  C = t q^{-1} + q t^{-1} + q + q^{-1}   (holds exactly)
//   minus_form:  C = t q^{-1} - q t^{-1} + q + q^{-1}   (off by 2 q t^{-1})
// The minus variant is kept so the discrepancy can be pinned exactly.
enum class A1QuarticConstant { plus_form, minus_form };

presentation::Presentation cc_presentation();
presentation::Presentation a1_presentation(
    A1QuarticConstant variant = A1QuarticConstant::plus_form);

presentation::RepMap cc_rep_map(const CCRep& rep, const SphericalTriple& s);
presentation::RepMap a1_rep_map(const A1Rep& rep, const SphericalTriple& s);

}  // namespace daha
