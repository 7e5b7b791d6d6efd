#pragma once
// Randomized property drivers shared by the unit tests and the acceptance
// gate.  Each driver returns the number of failing trials (0 = pass) and is
// deterministic in its seed.

#include <cstdint>
#include <random>
#include <vector>

#include "exactring/exactring.hpp"
#include "qdiffop/qdiffop.hpp"

namespace props {

using exactring::ExpVec;
using exactring::GaussianRational;
using exactring::LaurentPoly;
using exactring::RatFn;
using exactring::TablePtr;

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  long i(long lo, long hi) {  // inclusive bounds
    return std::uniform_int_distribution<long>(lo, hi)(g);
  }
};

inline GaussianRational random_gr(Rng& r) {
  mpq_class re(r.i(-6, 6), r.i(1, 4));
  re.canonicalize();
  if (r.i(0, 7) == 0) {
    mpq_class im(r.i(-3, 3), r.i(1, 3));
    im.canonicalize();
    return GaussianRational(re, im);
  }
  return GaussianRational(re);
}

inline LaurentPoly random_poly(Rng& r, const TablePtr& table, int max_terms = 3,
                               int max_exp = 2) {
  LaurentPoly p(table);
  long nterms = r.i(0, max_terms);
  for (long t = 0; t < nterms; ++t) {
    ExpVec e(table->size(), 0);
    for (auto& x : e) x = static_cast<int>(r.i(-max_exp, max_exp));
    p.insert_add(std::move(e), random_gr(r));
  }
  return p;
}

inline LaurentPoly random_nonzero_poly(Rng& r, const TablePtr& table,
                                       int max_terms = 2, int max_exp = 2) {
  for (;;) {
    LaurentPoly p = random_poly(r, table, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

inline RatFn random_ratfn(Rng& r, const TablePtr& table) {
  return RatFn::make(random_poly(r, table), random_nonzero_poly(r, table));
}

// Field/ring axioms on random triples over Q(i)(symbols): commutativity,
// associativity, distributivity, subtraction/negation coherence, division.
inline int run_ring_axioms(std::uint64_t seed, int count) {
  Rng r(seed);
  TablePtr table = exactring::SymbolTable::make({"u", "v", "w"});
  int failures = 0;
  for (int trial = 0; trial < count; ++trial) {
    RatFn a = random_ratfn(r, table);
    RatFn b = random_ratfn(r, table);
    RatFn c = random_ratfn(r, table);
    bool ok = true;
    ok = ok && (a + b).eq(b + a);
    ok = ok && ((a + b) + c).eq(a + (b + c));
    ok = ok && (a * b).eq(b * a);
    ok = ok && ((a * b) * c).eq(a * (b * c));
    ok = ok && (a * (b + c)).eq(a * b + a * c);
    ok = ok && (a - b).eq(a + (-b));
    ok = ok && (a + RatFn::zero(table)).eq(a);
    ok = ok && (a * RatFn::one(table)).eq(a);
    if (!b.is_zero()) ok = ok && ((a / b) * b).eq(a);
    if (!ok) ++failures;
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Operator properties
// ---------------------------------------------------------------------------

inline qdiffop::DiffOp random_op(Rng& r, const TablePtr& table,
                                 const std::vector<std::string>& vars,
                                 int max_terms = 3, int max_shift = 4) {
  qdiffop::DiffOp op(table, vars);
  long nterms = r.i(1, max_terms);
  for (long t = 0; t < nterms; ++t) {
    std::vector<int> eps(vars.size(), 1);
    if (vars.size() == 1 && r.i(0, 1) == 1) eps[0] = -1;
    std::vector<int> k(vars.size(), 0);
    for (auto& x : k) x = static_cast<int>(r.i(-max_shift, max_shift));
    op.insert_add(qdiffop::SubstKey{std::move(eps), std::move(k)},
                  random_ratfn(r, table));
  }
  return op;
}

// Composition is associative: (A*B)*C == A*(B*C).
inline int run_op_assoc(std::uint64_t seed, int count) {
  Rng r(seed);
  TablePtr table = exactring::SymbolTable::make({"qh", "th", "X"});
  std::vector<std::string> vars{"X"};
  int failures = 0;
  for (int trial = 0; trial < count; ++trial) {
    auto a = random_op(r, table, vars);
    auto b = random_op(r, table, vars);
    auto c = random_op(r, table, vars);
    if (!qdiffop::op_eq((a * b) * c, a * (b * c))) ++failures;
  }
  return failures;
}

// Application respects composition: (A*B)(f) == A(B(f)).
inline int run_op_apply_consistency(std::uint64_t seed, int count) {
  Rng r(seed);
  TablePtr table = exactring::SymbolTable::make({"qh", "th", "X"});
  std::vector<std::string> vars{"X"};
  int failures = 0;
  for (int trial = 0; trial < count; ++trial) {
    auto a = random_op(r, table, vars);
    auto b = random_op(r, table, vars);
    RatFn f = random_ratfn(r, table);
    if (!(a * b).apply(f).eq(a.apply(b.apply(f)))) ++failures;
  }
  return failures;
}

// Folding preserves the action on the symmetric basis X^n + X^{-n}.
inline int run_fold_agreement(std::uint64_t seed, int count, int depth) {
  Rng r(seed);
  TablePtr table = exactring::SymbolTable::make({"qh", "th", "X"});
  std::vector<std::string> vars{"X"};
  int failures = 0;
  for (int trial = 0; trial < count; ++trial) {
    auto op = random_op(r, table, vars);
    auto folded = op.fold_symmetric();
    bool ok = true;
    for (int n = 0; n <= depth && ok; ++n) {
      RatFn f = RatFn::symbol(table, "X", n) + RatFn::symbol(table, "X", -n);
      ok = op.apply(f).eq(folded.apply(f));
    }
    if (!ok) ++failures;
  }
  return failures;
}

// A nonzero operator with no sign flips is detected by the symmetric basis:
// some X^n + X^{-n} with n <= depth has a nonzero image.
inline int run_sigma_free_uniqueness(std::uint64_t seed, int count, int depth) {
  Rng r(seed);
  TablePtr table = exactring::SymbolTable::make({"qh", "th", "X"});
  int failures = 0;
  for (int trial = 0; trial < count; ++trial) {
    qdiffop::DiffOp op(table, {"X"});
    long nterms = r.i(1, 3);
    for (long t = 0; t < nterms; ++t) {
      op.insert_add(qdiffop::SubstKey{{1}, {static_cast<int>(r.i(-4, 4))}},
                    random_ratfn(r, table));
    }
    if (op.is_zero()) continue;
    bool detected = false;
    for (int n = 0; n <= depth && !detected; ++n) {
      RatFn f = RatFn::symbol(table, "X", n) + RatFn::symbol(table, "X", -n);
      detected = !op.apply(f).is_zero();
    }
    if (!detected) ++failures;
  }
  return failures;
}

}  // namespace props
