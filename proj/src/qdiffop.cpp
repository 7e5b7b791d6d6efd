#include "qdiffop/qdiffop.hpp"

#include <sstream>

namespace qdiffop {

using exactring::check_tables;
using exactring::TableMismatch;

DiffOp::DiffOp(TablePtr table, const std::vector<std::string>& vars)
    : table_(std::move(table)) {
  if (vars.empty()) throw TableMismatch("operator needs at least one acted variable");
  qh_ = table_->require("qh");
  for (const auto& v : vars) {
    std::size_t i = table_->require(v);
    if (i == qh_) throw TableMismatch("the shift symbol cannot be an acted variable");
    vars_.push_back(i);
  }
}

DiffOp DiffOp::identity(const TablePtr& table, const std::vector<std::string>& vars) {
  DiffOp op(table, vars);
  SubstKey key{std::vector<int>(op.vars_.size(), 1), std::vector<int>(op.vars_.size(), 0)};
  op.terms_.emplace(std::move(key), RatFn::one(table));
  return op;
}

DiffOp DiffOp::mult(const RatFn& coeff, const std::vector<std::string>& vars) {
  DiffOp op(coeff.table(), vars);
  op.insert_add(SubstKey{std::vector<int>(op.vars_.size(), 1),
                         std::vector<int>(op.vars_.size(), 0)},
                coeff);
  return op;
}

DiffOp DiffOp::shift(const TablePtr& table, const std::vector<std::string>& vars,
                     std::vector<int> eps, std::vector<int> k, const RatFn& coeff) {
  DiffOp op(table, vars);
  check_tables(table, coeff.table(), "DiffOp::shift");
  if (eps.size() != op.vars_.size() || k.size() != op.vars_.size())
    throw TableMismatch("DiffOp::shift: eps/k length must match the number of variables");
  for (int e : eps) {
    if (e != 1 && e != -1) throw TableMismatch("DiffOp::shift: eps must be +1 or -1");
    if (op.vars_.size() > 1 && e != 1)
      throw TableMismatch("DiffOp::shift: sign flips require a single acted variable");
  }
  op.insert_add(SubstKey{std::move(eps), std::move(k)}, coeff);
  return op;
}

std::vector<std::string> DiffOp::var_names() const {
  std::vector<std::string> out;
  out.reserve(vars_.size());
  for (std::size_t i : vars_) out.push_back(table_->name(i));
  return out;
}

void DiffOp::insert_add(SubstKey key, const RatFn& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOp::check_same_shape(const DiffOp& o, const char* where) const {
  check_tables(table_, o.table_, where);
  if (vars_ != o.vars_)
    throw TableMismatch(std::string("operators act on different variables in ") + where);
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  check_same_shape(o, "DiffOp::operator+");
  DiffOp out = *this;
  for (const auto& [key, c] : o.terms_) out.insert_add(key, c);
  return out;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  check_same_shape(o, "DiffOp::operator-");
  DiffOp out = *this;
  for (const auto& [key, c] : o.terms_) out.insert_add(key, -c);
  return out;
}

DiffOp DiffOp::operator-() const {
  DiffOp out(table_, var_names());
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
  check_same_shape(o, "DiffOp::operator*");
  DiffOp out(table_, var_names());
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      // Key law per variable: eps = ea*eb, k = kb + eb*ka.
      SubstKey key;
      key.eps.resize(vars_.size());
      key.k.resize(vars_.size());
      for (std::size_t j = 0; j < vars_.size(); ++j) {
        key.eps[j] = ka.eps[j] * kb.eps[j];
        key.k[j] = kb.k[j] + kb.eps[j] * ka.k[j];
      }
      // Coefficient: ca * (cb conjugated past a's substitution).
      RatFn c = ca * cb.shift_transport(vars_, ka.eps, ka.k, qh_);
      out.insert_add(std::move(key), c);
    }
  }
  return out;
}

DiffOp DiffOp::scale(const RatFn& f) const {
  check_tables(table_, f.table(), "DiffOp::scale");
  if (f.is_zero()) return DiffOp(table_, var_names());
  DiffOp out(table_, var_names());
  for (const auto& [key, c] : terms_) out.insert_add(key, c * f);
  return out;
}

DiffOp DiffOp::scale(const GaussianRational& c) const {
  return scale(RatFn::constant(table_, c));
}

RatFn DiffOp::apply(const RatFn& f) const {
  check_tables(table_, f.table(), "DiffOp::apply");
  RatFn acc = RatFn::zero(table_);
  for (const auto& [key, c] : terms_)
    acc = acc + c * f.shift_transport(vars_, key.eps, key.k, qh_);
  return acc;
}

RatFn DiffOp::coeff(const std::vector<int>& eps, const std::vector<int>& k) const {
  auto it = terms_.find(SubstKey{eps, k});
  return it == terms_.end() ? RatFn::zero(table_) : it->second;
}

DiffOp DiffOp::fold_symmetric() const {
  if (vars_.size() != 1)
    throw TableMismatch("fold_symmetric requires a single acted variable");
  DiffOp out(table_, var_names());
  for (const auto& [key, c] : terms_) {
    if (key.eps[0] == -1) {
      out.insert_add(SubstKey{{1}, {-key.k[0]}}, c);
    } else {
      out.insert_add(key, c);
    }
  }
  return out;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "] (x) (";
    for (std::size_t j = 0; j < key.eps.size(); ++j) {
      if (j) os << "; ";
      os << (key.eps[j] > 0 ? "+1," : "-1,") << key.k[j];
    }
    os << ")";
  }
  return os.str();
}

DiffOp op_arith(const DiffOp& lhs, const DiffOp& rhs, OpArith op) {
  switch (op) {
    case OpArith::add: return lhs + rhs;
    case OpArith::sub: return lhs - rhs;
    case OpArith::compose: return lhs * rhs;
  }
  throw TableMismatch("unknown operator arithmetic kind");
}

DiffOp op_scale(const DiffOp& op, const RatFn& f) { return op.scale(f); }

RatFn op_apply(const DiffOp& op, const RatFn& f) { return op.apply(f); }

bool op_eq(const DiffOp& a, const DiffOp& b) { return a == b; }

DiffOp fold_symmetric(const DiffOp& op) { return op.fold_symmetric(); }

DiffOp invert_hecke(const DiffOp& op, const RatFn& u, const RatFn& v) {
  DiffOp id = DiffOp::identity(op.table(), op.var_names());
  DiffOp quad = (op - id.scale(u)) * (op + id.scale(v));
  if (!quad.is_zero())
    throw QuadraticRelationFails("operator does not satisfy (op - u)(op + v) = 0; residual: " +
                                 quad.to_string());
  RatFn uv_inv = (u * v).inv();
  return (op - id.scale(u - v)).scale(uv_inv);
}

}  // namespace qdiffop
