#pragma once
// q-difference / reflection operators acting on rational functions of a set
// of torus variables.
//
// An operator is a finite sum of terms  coeff * g  where the coefficient is a
// RatFn and g is a substitution acting independently on each acted variable:
//     v  ->  qh^k * v^eps        (eps in {+1,-1}, k an integer)
// Exponents of the distinguished shift symbol "qh" are counted in half-units
// of the base parameter q = qh^2, so every stored exponent stays integral.
//
// The product A*B is "B applied to the function first":
//     (A*B)(f) = A(B(f)),
// realized per term as   (ca ga)(cb gb) = ca * ga(cb) * (ga o gb)
// with key law  eps = eps_a*eps_b,  k = k_b + eps_b*k_a  per variable, and
// ga(cb) the conjugation of cb by ga's substitution (shift_transport).

#include <map>
#include <string>
#include <vector>

#include "exactring/exactring.hpp"

namespace qdiffop {

using exactring::GaussianRational;
using exactring::LaurentPoly;
using exactring::RatFn;
using exactring::TablePtr;

// A quadratic relation required by an inversion or a Hecke-type check does
// not hold.
struct QuadraticRelationFails : std::runtime_error {
  explicit QuadraticRelationFails(const std::string& m)
      : std::runtime_error("QuadraticRelationFails: " + m) {}
};

// Substitution key: per acted variable, the sign eps and half-shift k of
// v -> qh^k v^eps.  Ordered lexicographically by (eps, k), which fixes the
// term order used in canonical text.
struct SubstKey {
  std::vector<int> eps;
  std::vector<int> k;

  bool operator<(const SubstKey& o) const {
    if (eps != o.eps) return eps < o.eps;
    return k < o.k;
  }
  bool operator==(const SubstKey& o) const { return eps == o.eps && k == o.k; }
};

class DiffOp {
 public:
  using TermMap = std::map<SubstKey, RatFn>;

  // The zero operator over `table`, acting on the named variables.  The
  // table must contain the shift symbol "qh" and each acted variable; when
  // several variables are acted on, all eps components must stay +1.
  DiffOp(TablePtr table, const std::vector<std::string>& vars);

  static DiffOp zero(const TablePtr& table, const std::vector<std::string>& vars) {
    return DiffOp(table, vars);
  }
  static DiffOp identity(const TablePtr& table, const std::vector<std::string>& vars);
  // Multiplication by a function: f |-> coeff * f.
  static DiffOp mult(const RatFn& coeff, const std::vector<std::string>& vars);
  // A single substitution term coeff * g with key (eps, k).
  static DiffOp shift(const TablePtr& table, const std::vector<std::string>& vars,
                      std::vector<int> eps, std::vector<int> k, const RatFn& coeff);

  const TablePtr& table() const { return table_; }
  const std::vector<std::size_t>& var_indices() const { return vars_; }
  std::vector<std::string> var_names() const;
  std::size_t qh_index() const { return qh_; }
  std::size_t arity() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator-() const;
  // Operator composition, o applied to the function first.
  DiffOp operator*(const DiffOp& o) const;

  // Left multiplication by a function: mult(f) * (*this).  Coefficients are
  // multiplied directly (no conjugation), since mult acts after every
  // substitution in this operator has already been applied.
  DiffOp scale(const RatFn& f) const;
  DiffOp scale(const GaussianRational& c) const;

  // Apply to a rational function of the acted variables.
  RatFn apply(const RatFn& f) const;
  RatFn apply(const LaurentPoly& f) const { return apply(RatFn::from_poly(f)); }

  // Coefficient at a substitution key (zero when absent).
  RatFn coeff(const std::vector<int>& eps, const std::vector<int>& k) const;

  bool operator==(const DiffOp& o) const { return (*this - o).is_zero(); }
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  // Rewrite each sign-flip term as the shift term that agrees with it on
  // symmetric functions: for a single acted variable, an (eps=-1, k) term
  // becomes the (+1, -k) term with the same coefficient.  Only defined for
  // arity 1.
  DiffOp fold_symmetric() const;

  // Accumulate a term (used by the factories and arithmetic).
  void insert_add(SubstKey key, const RatFn& coeff);

  // Canonical text: terms in key order joined by " + ", each rendered
  // "[coeff] (x) (eps_1,k_1; ...)" with eps signed.  Zero prints "0".
  std::string to_string() const;

 private:
  void check_same_shape(const DiffOp& o, const char* where) const;

  TablePtr table_;
  std::vector<std::size_t> vars_;  // table indices of acted variables
  std::size_t qh_;                 // table index of the shift symbol
  TermMap terms_;
};

enum class OpArith { add, sub, compose };

DiffOp op_arith(const DiffOp& lhs, const DiffOp& rhs, OpArith op);
DiffOp op_scale(const DiffOp& op, const RatFn& f);
RatFn op_apply(const DiffOp& op, const RatFn& f);
bool op_eq(const DiffOp& a, const DiffOp& b);
DiffOp fold_symmetric(const DiffOp& op);

// Inverse of an operator satisfying (op - u)(op + v) = 0 with u, v invertible
// constants: op^{-1} = (op - (u - v)) * (u v)^{-1}.  Verifies the quadratic
// relation first and throws QuadraticRelationFails when it does not hold.
DiffOp invert_hecke(const DiffOp& op, const RatFn& u, const RatFn& v);

}  // namespace qdiffop
