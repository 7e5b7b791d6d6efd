#include "exactring/exactring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exactring {

// ---------------------------------------------------------------------------
// GaussianRational
// ---------------------------------------------------------------------------

GaussianRational GaussianRational::rational(long num, long den) {
  if (den == 0) throw DegenerateScalar("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
  return GaussianRational(re_ + o.re_, im_ + o.im_);
}

GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
  return GaussianRational(re_ - o.re_, im_ - o.im_);
}

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
  if (is_real() && o.is_real()) return GaussianRational(re_ * o.re_);
  return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

GaussianRational GaussianRational::operator-() const {
  return GaussianRational(-re_, -im_);
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DegenerateScalar("inverse of zero");
  if (is_real()) return GaussianRational(1 / re_);
  mpq_class n = re_ * re_ + im_ * im_;
  return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational GaussianRational::pow(long e) const {
  if (e == 0) return GaussianRational(1);
  if (e < 0) return inv().pow(-e);
  GaussianRational base = *this;
  GaussianRational acc(1);
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    base = base * base;
    n >>= 1UL;
  }
  return acc;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string imabs = mpq_class(abs(im_)).get_str();
  std::string ipart = (imabs == "1") ? "i" : imabs + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + ipart;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + ipart;
}

// ---------------------------------------------------------------------------
// SymbolTable
// ---------------------------------------------------------------------------

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw UnmappedSymbol("empty symbol name in table");
    if (!seen.insert(n).second)
      throw TableMismatch("duplicate symbol name in table: " + n);
  }
}

int SymbolTable::index_of(const std::string& n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return static_cast<int>(i);
  return -1;
}

std::size_t SymbolTable::require(const std::string& n) const {
  int i = index_of(n);
  if (i < 0) throw UnmappedSymbol("symbol not in table: " + n);
  return static_cast<std::size_t>(i);
}

bool tables_compatible(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void check_tables(const TablePtr& a, const TablePtr& b, const char* where) {
  if (!tables_compatible(a, b))
    throw TableMismatch(std::string("incompatible symbol tables in ") + where);
}

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw TableMismatch("null symbol table");
}

LaurentPoly LaurentPoly::constant(TablePtr table, const GaussianRational& c) {
  LaurentPoly p(std::move(table));
  if (!c.is_zero()) p.terms_.emplace(ExpVec(p.table_->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(TablePtr table, ExpVec e, const GaussianRational& c) {
  LaurentPoly p(std::move(table));
  if (e.size() != p.table_->size())
    throw TableMismatch("exponent vector length does not match table size");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::symbol(TablePtr table, const std::string& name, int exp) {
  std::size_t i = table->require(name);
  ExpVec e(table->size(), 0);
  e[i] = exp;
  return monomial(std::move(table), std::move(e), GaussianRational(1));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

GaussianRational LaurentPoly::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_constant()) throw DegenerateScalar("constant_value of non-constant polynomial");
  return terms_.begin()->second;
}

void LaurentPoly::insert_add(ExpVec e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_tables(table_, o.table_, "LaurentPoly::operator+");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.insert_add(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_tables(table_, o.table_, "LaurentPoly::operator-");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.insert_add(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_tables(table_, o.table_, "LaurentPoly::operator*");
  LaurentPoly out(table_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.insert_add(std::move(e), ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(table_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::scale(const GaussianRational& c) const {
  LaurentPoly out(table_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc = constant(table_, GaussianRational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  check_tables(table_, o.table_, "LaurentPoly::operator==");
  return terms_ == o.terms_;
}

GaussianRational LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

ExpVec LaurentPoly::min_exponents() const {
  ExpVec m(table_->size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

LaurentPoly LaurentPoly::div_monomial(const ExpVec& e) const {
  LaurentPoly out(table_);
  for (const auto& [k, c] : terms_) {
    ExpVec e2 = k;
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= e[i];
    out.terms_.emplace(std::move(e2), c);
  }
  return out;
}

const LaurentPoly::TermMap::value_type& LaurentPoly::lex_lead() const {
  if (terms_.empty()) throw DegenerateScalar("lex_lead of zero polynomial");
  return *terms_.rbegin();
}

LaurentPoly LaurentPoly::mirror(std::size_t var) const {
  LaurentPoly out(table_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2[var] = -e2[var];
    out.terms_.emplace(std::move(e2), c);
  }
  return out;
}

LaurentPoly LaurentPoly::swap_vars(std::size_t a, std::size_t b) const {
  LaurentPoly out(table_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    std::swap(e2[a], e2[b]);
    out.terms_.emplace(std::move(e2), c);
  }
  return out;
}

LaurentPoly LaurentPoly::shift_transport(const std::vector<std::size_t>& vars,
                                         const std::vector<int>& eps,
                                         const std::vector<int>& k,
                                         std::size_t qh_index) const {
  if (vars.size() != eps.size() || vars.size() != k.size())
    throw TableMismatch("shift_transport: mismatched argument lengths");
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (eps[j] != 1 && eps[j] != -1)
      throw TableMismatch("shift_transport: eps entries must be +1 or -1");
    if (vars[j] == qh_index)
      throw TableMismatch("shift_transport: the shift unit cannot be an acted variable");
  }
  LaurentPoly out(table_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    // qh exponent shift uses the ORIGINAL exponents of the acted variables.
    for (std::size_t j = 0; j < vars.size(); ++j) e2[qh_index] += k[j] * e[vars[j]];
    for (std::size_t j = 0; j < vars.size(); ++j) e2[vars[j]] = eps[j] * e[vars[j]];
    out.insert_add(std::move(e2), c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const ExpVec& e = it->first;
    const GaussianRational& c = it->second;
    bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string cs = c.is_real() ? c.to_string() : "(" + c.to_string() + ")";
    os << cs;
    if (!constant_term) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) os << "*" << table_->name(i) << "^" << e[i];
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Exact Laurent division
// ---------------------------------------------------------------------------

namespace {

// Per-variable exponent span (max - min over all terms); a necessary
// condition for den | num is span_v(den) <= span_v(num) for every variable,
// because single-variable top and bottom degrees both add under
// multiplication over an integral domain.
void exponent_span(const LaurentPoly& p, ExpVec& span) {
  ExpVec lo, hi;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    if (first) {
      lo = e;
      hi = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < e.size(); ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
  }
  span.assign(lo.size(), 0);
  for (std::size_t i = 0; i < lo.size(); ++i) span[i] = hi[i] - lo[i];
}

}  // namespace

std::optional<LaurentPoly> laurent_divexact(const LaurentPoly& num,
                                            const LaurentPoly& den,
                                            std::size_t max_steps) {
  check_tables(num.table(), den.table(), "laurent_divexact");
  if (den.is_zero()) throw DegenerateScalar("laurent_divexact by zero");
  if (num.is_zero()) return LaurentPoly::zero(num.table());

  // Monomial denominator: always exact.
  if (den.term_count() == 1) {
    const auto& [de, dc] = *den.terms().begin();
    return num.div_monomial(de).scale(dc.inv());
  }

  // Cheap rejection before any division work.
  {
    ExpVec span_n, span_d;
    exponent_span(num, span_n);
    exponent_span(den, span_d);
    for (std::size_t i = 0; i < span_n.size(); ++i)
      if (span_d[i] > span_n[i]) return std::nullopt;
  }

  // Strip monomial content so all exponents are componentwise nonnegative;
  // lexicographic long division then terminates (the remainder's leading
  // term strictly decreases and stays bounded below).
  ExpVec mn = num.min_exponents();
  ExpVec md = den.min_exponents();
  LaurentPoly n = num.div_monomial(mn);
  LaurentPoly d = den.div_monomial(md);

  const auto& [dlead_e, dlead_c] = d.lex_lead();
  GaussianRational dlead_inv = dlead_c.inv();

  LaurentPoly q(num.table());
  LaurentPoly r = n;
  std::size_t steps = 0;
  while (!r.is_zero()) {
    if (++steps > max_steps) return std::nullopt;  // opportunistic give-up
    const auto& [rlead_e, rlead_c] = r.lex_lead();
    ExpVec qe = rlead_e;
    bool ok = true;
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] -= dlead_e[i];
      if (qe[i] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    GaussianRational qc = rlead_c * dlead_inv;
    q.insert_add(qe, qc);
    // r -= qc * x^qe * d, accumulated term by term in place.
    for (const auto& [ed, cd] : d.terms()) {
      ExpVec e = ed;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += qe[i];
      r.insert_add(std::move(e), -(qc * cd));
    }
  }

  // Reapply the stripped monomial offset mn - md (div_monomial by its negation).
  ExpVec neg_off = md;
  for (std::size_t i = 0; i < neg_off.size(); ++i) neg_off[i] -= mn[i];
  if (std::all_of(neg_off.begin(), neg_off.end(), [](int x) { return x == 0; }))
    return q;
  return q.div_monomial(neg_off);
}

// ---------------------------------------------------------------------------
// RatFn
// ---------------------------------------------------------------------------

RatFn RatFn::zero(TablePtr table) {
  LaurentPoly one_p = LaurentPoly::constant(table, GaussianRational(1));
  return RatFn(LaurentPoly::zero(std::move(table)), std::move(one_p));
}

RatFn RatFn::one(TablePtr table) {
  LaurentPoly one_p = LaurentPoly::constant(std::move(table), GaussianRational(1));
  return RatFn(one_p, one_p);
}

RatFn RatFn::constant(TablePtr table, const GaussianRational& c) {
  LaurentPoly one_p = LaurentPoly::constant(table, GaussianRational(1));
  return RatFn(LaurentPoly::constant(std::move(table), c), std::move(one_p));
}

RatFn RatFn::monomial(TablePtr table, ExpVec e, const GaussianRational& c) {
  LaurentPoly one_p = LaurentPoly::constant(table, GaussianRational(1));
  return RatFn(LaurentPoly::monomial(std::move(table), std::move(e), c), std::move(one_p));
}

RatFn RatFn::symbol(TablePtr table, const std::string& name, int exp) {
  LaurentPoly one_p = LaurentPoly::constant(table, GaussianRational(1));
  return RatFn(LaurentPoly::symbol(std::move(table), name, exp), std::move(one_p));
}

RatFn RatFn::from_poly(LaurentPoly p) {
  LaurentPoly one_p = LaurentPoly::constant(p.table(), GaussianRational(1));
  return RatFn(std::move(p), std::move(one_p));
}

RatFn RatFn::make(LaurentPoly num, LaurentPoly den) {
  check_tables(num.table(), den.table(), "RatFn::make");
  if (den.is_zero()) throw DegenerateScalar("rational function with zero denominator");
  if (num.is_zero()) return zero(num.table());

  // Opportunistic exact reduction; the step cap keeps doomed divisions cheap
  // and is deterministic, so canonical forms are reproducible run to run.
  std::size_t cap = 1024 + 4 * (num.term_count() + den.term_count());
  if (auto q = laurent_divexact(num, den, cap)) return from_poly(std::move(*q));

  // Unit-normalize the denominator: strip its monomial content from both
  // parts, then scale both by the inverse of its leading coefficient.
  ExpVec md = den.min_exponents();
  LaurentPoly n = num.div_monomial(md);
  LaurentPoly d = den.div_monomial(md);
  GaussianRational lc_inv = d.lex_lead().second.inv();
  return RatFn(n.scale(lc_inv), d.scale(lc_inv));
}

namespace {

// Fraction-join cap, matching the opportunistic budget used by RatFn::make.
std::size_t join_cap(const LaurentPoly& a, const LaurentPoly& b) {
  return 1024 + 4 * (a.term_count() + b.term_count());
}

}  // namespace

RatFn RatFn::operator+(const RatFn& o) const {
  check_tables(table(), o.table(), "RatFn::operator+");
  if (den_ == o.den_) return make(num_ + o.num_, den_);
  // When one denominator exactly divides the other, lift onto the larger one
  // instead of cross-multiplying; shared factor towers then stay shared
  // (mirrored and shifted denominators usually differ only by a monomial).
  if (auto k = laurent_divexact(o.den_, den_, join_cap(o.den_, den_)))
    return make(num_ * *k + o.num_, o.den_);
  if (auto k = laurent_divexact(den_, o.den_, join_cap(den_, o.den_)))
    return make(num_ + o.num_ * *k, den_);
  return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
  check_tables(table(), o.table(), "RatFn::operator-");
  if (den_ == o.den_) return make(num_ - o.num_, den_);
  if (auto k = laurent_divexact(o.den_, den_, join_cap(o.den_, den_)))
    return make(num_ * *k - o.num_, o.den_);
  if (auto k = laurent_divexact(den_, o.den_, join_cap(den_, o.den_)))
    return make(num_ - o.num_ * *k, den_);
  return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
  check_tables(table(), o.table(), "RatFn::operator*");
  return make(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_); }

RatFn RatFn::scale(const GaussianRational& c) const {
  if (c.is_zero()) return zero(table());
  return RatFn(num_.scale(c), den_);
}

RatFn RatFn::inv() const {
  if (is_zero()) throw DegenerateScalar("inverse of zero rational function");
  return make(den_, num_);
}

RatFn RatFn::pow(int e) const {
  if (e == 0) return one(table());
  if (e < 0) return inv().pow(-e);
  return make(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool RatFn::eq(const RatFn& o) const {
  check_tables(table(), o.table(), "RatFn::eq");
  if (num_ == o.num_ && den_ == o.den_) return true;
  return num_ * o.den_ == o.num_ * den_;
}

RatFn RatFn::mirror(std::size_t var) const {
  return make(num_.mirror(var), den_.mirror(var));
}

RatFn RatFn::swap_vars(std::size_t a, std::size_t b) const {
  return make(num_.swap_vars(a, b), den_.swap_vars(a, b));
}

RatFn RatFn::shift_transport(const std::vector<std::size_t>& vars,
                             const std::vector<int>& eps,
                             const std::vector<int>& k,
                             std::size_t qh_index) const {
  return make(num_.shift_transport(vars, eps, k, qh_index),
              den_.shift_transport(vars, eps, k, qh_index));
}

std::string RatFn::to_string() const {
  if (is_poly()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Top-level scalar operations
// ---------------------------------------------------------------------------

RatFn scalar_arith(const RatFn& lhs, const RatFn& rhs, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return lhs + rhs;
    case ScalarOp::sub: return lhs - rhs;
    case ScalarOp::mul: return lhs * rhs;
    case ScalarOp::div: return lhs / rhs;
  }
  throw DegenerateScalar("unknown scalar operation");
}

bool scalar_eq(const RatFn& lhs, const RatFn& rhs) { return lhs.eq(rhs); }

namespace {

// Image of one symbol power, with a per-call cache.
const RatFn& image_power(std::map<std::pair<std::size_t, int>, RatFn>& cache,
                         const RatFn& image, std::size_t sym, int e,
                         const std::string& sym_name) {
  auto key = std::make_pair(sym, e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (image.is_zero() && e < 0)
    throw ZeroToNegativePower("substitution maps " + sym_name +
                              " to zero but it occurs with a negative exponent");
  return cache.emplace(key, image.pow(e)).first->second;
}

}  // namespace

RatFn scalar_substitute(const LaurentPoly& value, const SubstMap& map,
                        const TablePtr& target) {
  const TablePtr& src = value.table();
  // Resolve images for the symbols that actually occur.
  std::vector<const RatFn*> images(src->size(), nullptr);
  for (const auto& [e, c] : value.terms()) {
    (void)c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && images[i] == nullptr) {
        auto it = map.find(src->name(i));
        if (it == map.end())
          throw UnmappedSymbol("substitution does not map symbol: " + src->name(i));
        check_tables(it->second.table(), target, "scalar_substitute");
        images[i] = &it->second;
      }
    }
  }
  std::map<std::pair<std::size_t, int>, RatFn> cache;
  RatFn acc = RatFn::zero(target);
  for (const auto& [e, c] : value.terms()) {
    RatFn term = RatFn::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0)
        term = term * image_power(cache, *images[i], i, e[i], src->name(i));
    }
    acc = acc + term;
  }
  return acc;
}

RatFn scalar_substitute(const RatFn& value, const SubstMap& map, const TablePtr& target) {
  RatFn n = scalar_substitute(value.num(), map, target);
  if (value.is_poly()) return n;
  RatFn d = scalar_substitute(value.den(), map, target);
  if (d.is_zero())
    throw DegenerateScalar("substitution sends a denominator to zero");
  return n / d;
}

std::optional<LaurentPoly> laurent_quotient_test(const RatFn& value) {
  if (value.is_poly()) return value.num();
  return laurent_divexact(value.num(), value.den());
}

// ---------------------------------------------------------------------------
// Valuation
// ---------------------------------------------------------------------------

RatFn Valuation::v(const std::string& name) const {
  auto img = images.find(name);
  if (img != images.end()) return img->second;
  auto it = values.find(name);
  if (it != values.end()) return RatFn::constant(table, it->second);
  if (table->index_of(name) < 0)
    throw UnmappedSymbol("valuation cannot resolve symbol: " + name);
  return RatFn::symbol(table, name);
}

Valuation Valuation::with_images(std::map<std::string, RatFn> imgs) const {
  for (const auto& [name, fn] : imgs) {
    if (table->index_of(name) < 0)
      throw UnmappedSymbol("valuation image for unknown symbol: " + name);
    check_tables(table, fn.table(), "Valuation::with_images");
  }
  return Valuation{table, values, std::move(imgs)};
}

}  // namespace exactring
