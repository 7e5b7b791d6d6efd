#pragma once
// Exact arithmetic over the Gaussian rationals Q(i): sparse multivariate
// Laurent polynomials and rational functions against a declared symbol table.
//
// Design rules that the rest of the code base relies on:
//   * Every value is exact (GMP rationals); nothing is ever rounded.
//   * A polynomial never stores a zero coefficient and its term order is the
//     lexicographic order on exponent vectors.
//   * A rational function is a pair num/den with the denominator normalized
//     to a chosen unit form (no monomial content, leading coefficient 1); when
//     the denominator divides the numerator exactly the value is stored as a
//     polynomial (den == 1).  Canonical form is NOT a full gcd reduction, so
//     equality is always decided by cross-multiplication.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactring {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Division by an exact zero (scalar inversion, 0^-1, fraction with zero
// denominator).
struct DegenerateScalar : std::runtime_error {
  explicit DegenerateScalar(const std::string& m)
      : std::runtime_error("DegenerateScalar: " + m) {}
};

// Mixing values that live over different symbol tables.
struct TableMismatch : std::runtime_error {
  explicit TableMismatch(const std::string& m)
      : std::runtime_error("TableMismatch: " + m) {}
};

// Raising a zero value to a negative power during substitution.
struct ZeroToNegativePower : std::runtime_error {
  explicit ZeroToNegativePower(const std::string& m)
      : std::runtime_error("ZeroToNegativePower: " + m) {}
};

// A substitution or valuation that does not cover a symbol it must map.
struct UnmappedSymbol : std::runtime_error {
  explicit UnmappedSymbol(const std::string& m)
      : std::runtime_error("UnmappedSymbol: " + m) {}
};

// ---------------------------------------------------------------------------
// GaussianRational: a + b*i with exact rational a, b.
// ---------------------------------------------------------------------------
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int n) : re_(n), im_(0) {}            // NOLINT(implicit)
  GaussianRational(long n) : re_(n), im_(0) {}           // NOLINT(implicit)
  explicit GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}

  // num/den as a real rational.
  static GaussianRational rational(long num, long den);
  // The imaginary unit.
  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussianRational operator+(const GaussianRational& o) const;
  GaussianRational operator-(const GaussianRational& o) const;
  GaussianRational operator*(const GaussianRational& o) const;
  GaussianRational operator-() const;
  // Multiplicative inverse; throws DegenerateScalar on zero.
  GaussianRational inv() const;
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inv(); }
  // Integer power (negative allowed; 0^negative throws DegenerateScalar).
  GaussianRational pow(long e) const;

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  // "a", "a+bi", "a-bi"; pure imaginary prints as "i", "-i", or "3/2i".
  std::string to_string() const;

 private:
  mpq_class re_, im_;
};

// ---------------------------------------------------------------------------
// SymbolTable: an ordered list of distinct symbol names.  Values over the
// same table are compatible; tables compare by content so independently
// constructed identical tables interoperate.
// ---------------------------------------------------------------------------
class SymbolTable;
using TablePtr = std::shared_ptr<const SymbolTable>;

class SymbolTable {
 public:
  explicit SymbolTable(std::vector<std::string> names);

  static TablePtr make(std::vector<std::string> names) {
    return std::make_shared<const SymbolTable>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // Index of a name, or -1 when absent.
  int index_of(const std::string& n) const;
  // Index of a name; throws UnmappedSymbol when absent.
  std::size_t require(const std::string& n) const;

  bool operator==(const SymbolTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

// True when the two tables are usable together (same object or equal content).
bool tables_compatible(const TablePtr& a, const TablePtr& b);
// Throws TableMismatch unless compatible.
void check_tables(const TablePtr& a, const TablePtr& b, const char* where);

// Exponent vector: one entry per table symbol.  std::vector's operator< is
// lexicographic, which is the term order used everywhere.
using ExpVec = std::vector<int>;

// ---------------------------------------------------------------------------
// LaurentPoly: sparse Laurent polynomial, map from exponent vector to nonzero
// Gaussian-rational coefficient.
// ---------------------------------------------------------------------------
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, GaussianRational>;

  explicit LaurentPoly(TablePtr table);

  static LaurentPoly zero(TablePtr table) { return LaurentPoly(std::move(table)); }
  static LaurentPoly constant(TablePtr table, const GaussianRational& c);
  static LaurentPoly monomial(TablePtr table, ExpVec e, const GaussianRational& c);
  // The symbol `name` raised to `exp` (default 1).
  static LaurentPoly symbol(TablePtr table, const std::string& name, int exp = 1);

  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  // Zero or a single term with all exponents zero.
  bool is_constant() const;
  // Value as a constant; requires is_constant().
  GaussianRational constant_value() const;
  bool is_one() const { return is_constant() && constant_value().is_one(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scale(const GaussianRational& c) const;
  // Nonnegative integer power.
  LaurentPoly pow(unsigned e) const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Coefficient of an exponent vector (zero when absent).
  GaussianRational coeff(const ExpVec& e) const;

  // Componentwise minimum exponent over all terms (zero vector when empty).
  ExpVec min_exponents() const;
  // Divide every term by the monomial with exponents `e` (exact by construction).
  LaurentPoly div_monomial(const ExpVec& e) const;
  // Lexicographically largest term; requires !is_zero().
  const TermMap::value_type& lex_lead() const;

  // v -> v^{-1} for the variable at table index `var`.
  LaurentPoly mirror(std::size_t var) const;
  // Exchange the exponents of two variables.
  LaurentPoly swap_vars(std::size_t a, std::size_t b) const;

  // Conjugation of a coefficient past a family of substitutions
  // v_j -> qh^{k_j} * v_j^{eps_j} (table indices in `vars`, eps in {+1,-1}).
  // Each term first multiplies qh's exponent by sum_j k_j * e_{v_j} (with the
  // ORIGINAL exponents), then maps e_{v_j} -> eps_j * e_{v_j}.
  LaurentPoly shift_transport(const std::vector<std::size_t>& vars,
                              const std::vector<int>& eps,
                              const std::vector<int>& k,
                              std::size_t qh_index) const;

  // Canonical text: terms in descending lexicographic order joined by " + ",
  // each "coeff*sym^e*..." with zero exponents omitted; a constant term is the
  // bare coefficient; a coefficient with nonzero imaginary part is
  // parenthesized.  Zero prints "0".
  std::string to_string() const;

  // Internal: accumulate c into the coefficient of e, erasing on zero.
  void insert_add(ExpVec e, const GaussianRational& c);

 private:
  TablePtr table_;
  TermMap terms_;
};

// Exact division num/den as Laurent polynomials: lexicographic long division
// after stripping both arguments' monomial content.  Returns nullopt when the
// quotient is not a Laurent polynomial.  `max_steps` bounds the number of
// quotient terms produced before giving up (an opportunistic-use safety valve;
// callers needing a definitive answer pass the default, which is unbounded).
std::optional<LaurentPoly> laurent_divexact(const LaurentPoly& num,
                                            const LaurentPoly& den,
                                            std::size_t max_steps = SIZE_MAX);

// ---------------------------------------------------------------------------
// RatFn: rational function num/den in canonical form (see file header).
// ---------------------------------------------------------------------------
class RatFn {
 public:
  static RatFn zero(TablePtr table);
  static RatFn one(TablePtr table);
  static RatFn constant(TablePtr table, const GaussianRational& c);
  static RatFn monomial(TablePtr table, ExpVec e, const GaussianRational& c);
  static RatFn symbol(TablePtr table, const std::string& name, int exp = 1);
  static RatFn from_poly(LaurentPoly p);
  // num/den with normalization; throws DegenerateScalar when den == 0.
  static RatFn make(LaurentPoly num, LaurentPoly den);

  const TablePtr& table() const { return num_.table(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // Denominator is the constant 1.
  bool is_poly() const { return den_.is_one(); }
  bool is_constant() const { return is_poly() && num_.is_constant(); }
  GaussianRational constant_value() const { return num_.constant_value(); }

  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const { return *this * o.inv(); }
  RatFn operator-() const;
  RatFn scale(const GaussianRational& c) const;
  // Multiplicative inverse; throws DegenerateScalar on zero.
  RatFn inv() const;
  // Integer power (negative allowed; 0^negative throws DegenerateScalar).
  RatFn pow(int e) const;

  // Exact equality of values, decided by cross-multiplication.
  bool eq(const RatFn& o) const;

  // Variable maps, applied to numerator and denominator then renormalized.
  RatFn mirror(std::size_t var) const;
  RatFn swap_vars(std::size_t a, std::size_t b) const;
  RatFn shift_transport(const std::vector<std::size_t>& vars,
                        const std::vector<int>& eps,
                        const std::vector<int>& k,
                        std::size_t qh_index) const;

  // "num" when den == 1, otherwise "(num) / (den)".
  std::string to_string() const;

 private:
  RatFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_, den_;
};

// ---------------------------------------------------------------------------
// Top-level scalar operations
// ---------------------------------------------------------------------------
enum class ScalarOp { add, sub, mul, div };

// Exact field arithmetic; div by zero throws DegenerateScalar.
RatFn scalar_arith(const RatFn& lhs, const RatFn& rhs, ScalarOp op);

// Exact equality by cross-multiplication.
bool scalar_eq(const RatFn& lhs, const RatFn& rhs);

// Symbol -> value map used by substitution.  Every symbol occurring in the
// input with a nonzero exponent must be mapped; images live over `target`.
using SubstMap = std::map<std::string, RatFn>;

// Substitute symbols by values over the target table.  Throws UnmappedSymbol
// for an occurring-but-unmapped symbol and ZeroToNegativePower when a zero
// image is raised to a negative exponent.
RatFn scalar_substitute(const RatFn& value, const SubstMap& map, const TablePtr& target);
RatFn scalar_substitute(const LaurentPoly& value, const SubstMap& map, const TablePtr& target);

// Decide whether a value is a Laurent polynomial; returns the exact quotient
// when the denominator divides the numerator, nullopt otherwise.
std::optional<LaurentPoly> laurent_quotient_test(const RatFn& value);

// ---------------------------------------------------------------------------
// Valuation: the symbolic-vs-random evaluation switch.  `values` empty means
// fully symbolic; otherwise listed parameter symbols are read as the given
// exact constants while unlisted symbols stay symbolic.
// ---------------------------------------------------------------------------
struct Valuation {
  TablePtr table;
  std::map<std::string, GaussianRational> values;
  // Symbol-valued reassignments (e.g. a parameter sent to i*qh^2*t3); these
  // take precedence over `values` and must be rational functions over the
  // same table.
  std::map<std::string, RatFn> images;

  bool symbolic() const { return values.empty() && images.empty(); }

  // The value of a parameter symbol: its assigned image, else its assigned
  // constant, else the symbol itself.  Throws UnmappedSymbol when the name
  // is neither assigned nor in the table.
  RatFn v(const std::string& name) const;
  RatFn operator()(const std::string& name) const { return v(name); }

  // Same table, different constant assignment (drops any images).
  Valuation with_values(std::map<std::string, GaussianRational> vals) const {
    return Valuation{table, std::move(vals), {}};
  }

  // Overlay symbol-valued assignments on top of the current valuation.
  // Every image must be over the same table and name a table symbol.
  Valuation with_images(std::map<std::string, RatFn> imgs) const;
};

}  // namespace exactring
