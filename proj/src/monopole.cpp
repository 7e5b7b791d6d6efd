#include "monopole/monopole.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace monopole {

using exactring::ExpVec;
using exactring::GaussianRational;
using exactring::SymbolTable;
using qdiffop::SubstKey;

namespace {

std::string w_var_name(bool single_gauge_node, int gauge_pos, int r) {
  if (single_gauge_node) return "w" + std::to_string(r);
  return "w" + std::to_string(gauge_pos + 1) + "_" + std::to_string(r);
}

RatFn sym(const TablePtr& t, const std::string& name, int exp = 1) {
  return RatFn::symbol(t, name, exp);
}

// 1 - q * extra * w-part, the ubiquitous factor shape of P, Q, and the
// framing products.
RatFn one_minus_q(const TablePtr& t, const RatFn& rest) {
  return RatFn::one(t) - sym(t, "qh", 2) * rest;
}

}  // namespace

Quiver::Quiver(std::vector<GaugeNode> gauge, std::vector<FramingNode> framing,
               std::vector<Arrow> arrows)
    : gauge_(std::move(gauge)), framing_(std::move(framing)), arrows_(std::move(arrows)) {
  if (gauge_.empty()) throw QuiverError("a quiver needs at least one gauge node");
  std::map<std::string, int> kind;  // +1+pos gauge, -1-pos framing
  for (std::size_t i = 0; i < gauge_.size(); ++i) {
    if (gauge_[i].dim < 1) throw QuiverError("gauge node " + gauge_[i].id + " has rank < 1");
    if (!kind.emplace(gauge_[i].id, static_cast<int>(i) + 1).second)
      throw QuiverError("duplicate node id " + gauge_[i].id);
  }
  for (std::size_t k = 0; k < framing_.size(); ++k) {
    if (framing_[k].dim < 1)
      throw QuiverError("framing node " + framing_[k].id + " has rank < 1");
    if (!kind.emplace(framing_[k].id, -static_cast<int>(k) - 1).second)
      throw QuiverError("duplicate node id " + framing_[k].id);
  }
  for (const Arrow& a : arrows_) {
    auto s = kind.find(a.src);
    auto t = kind.find(a.dst);
    if (s == kind.end()) throw QuiverError("arrow source " + a.src + " names no node");
    if (t == kind.end()) throw QuiverError("arrow target " + a.dst + " names no node");
    if (t->second < 0)
      throw QuiverError("arrow ends at framing node " + a.dst);
  }

  std::vector<std::string> names{"qh"};
  flavor_vars_.resize(framing_.size());
  for (std::size_t k = 0; k < framing_.size(); ++k)
    for (int l = 1; l <= framing_[k].dim; ++l) {
      flavor_vars_[k].push_back("z" + std::to_string(k + 1) + std::to_string(l));
      names.push_back(flavor_vars_[k].back());
    }
  for (std::size_t p = 0; p < arrows_.size(); ++p) {
    if (arrows_.size() == 1)
      arrow_vars_.push_back("z");
    else if (p < 26)
      arrow_vars_.push_back(std::string("z") + static_cast<char>('a' + p));
    else
      arrow_vars_.push_back("z" + std::to_string(p));
    names.push_back(arrow_vars_.back());
  }
  w_names_.resize(gauge_.size());
  bool single = gauge_.size() == 1;
  for (std::size_t i = 0; i < gauge_.size(); ++i) {
    w_slot_base_.push_back(w_vars_.size());
    for (int r = 1; r <= gauge_[i].dim; ++r) {
      w_names_[i].push_back(w_var_name(single, static_cast<int>(i), r));
      w_vars_.push_back(w_names_[i].back());
      names.push_back(w_names_[i].back());
    }
  }
  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != names.size())
    throw QuiverError("symbol naming collision; use fewer than 10 framing nodes/flavors");
  table_ = SymbolTable::make(std::move(names));
}

int Quiver::gauge_pos(const std::string& id) const {
  for (std::size_t i = 0; i < gauge_.size(); ++i)
    if (gauge_[i].id == id) return static_cast<int>(i);
  return -1;
}

int Quiver::framing_pos(const std::string& id) const {
  for (std::size_t k = 0; k < framing_.size(); ++k)
    if (framing_[k].id == id) return static_cast<int>(k);
  return -1;
}

const std::string& Quiver::w_name(int gauge_pos, int r) const {
  if (gauge_pos < 0 || gauge_pos >= static_cast<int>(gauge_.size()) || r < 1 ||
      r > gauge_[gauge_pos].dim)
    throw IndexOutOfRange("no gauge variable (" + std::to_string(gauge_pos) + "," +
                          std::to_string(r) + ")");
  return w_names_[gauge_pos][r - 1];
}

const std::string& Quiver::flavor_var(int framing_pos, int l) const {
  if (framing_pos < 0 || framing_pos >= static_cast<int>(framing_.size()) || l < 1 ||
      l > framing_[framing_pos].dim)
    throw IndexOutOfRange("no flavor variable (" + std::to_string(framing_pos) + "," +
                          std::to_string(l) + ")");
  return flavor_vars_[framing_pos][l - 1];
}

const std::string& Quiver::arrow_var(std::size_t arrow_pos) const {
  if (arrow_pos >= arrows_.size())
    throw IndexOutOfRange("no arrow " + std::to_string(arrow_pos));
  return arrow_vars_[arrow_pos];
}

std::size_t Quiver::w_slot(int gauge_pos, int r) const {
  (void)w_name(gauge_pos, r);  // range check
  return w_slot_base_[gauge_pos] + static_cast<std::size_t>(r - 1);
}

QuiverPtr make_quiver(std::vector<GaugeNode> gauge, std::vector<FramingNode> framing,
                      std::vector<Arrow> arrows) {
  return std::make_shared<const Quiver>(std::move(gauge), std::move(framing),
                                        std::move(arrows));
}

QuiverPtr parse_quiver(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("bad JSON: ") + e.what());
  }
  try {
    std::vector<GaugeNode> gauge;
    std::vector<FramingNode> framing;
    std::vector<Arrow> arrows;
    for (const auto& g : j.value("gauge", nlohmann::json::array()))
      gauge.push_back(GaugeNode{g.at("id").get<std::string>(), g.at("dim").get<int>()});
    for (const auto& f : j.value("framing", nlohmann::json::array()))
      framing.push_back(FramingNode{f.at("id").get<std::string>(), f.at("dim").get<int>()});
    for (const auto& a : j.value("arrows", nlohmann::json::array()))
      arrows.push_back(Arrow{a.at("src").get<std::string>(), a.at("dst").get<std::string>()});
    return make_quiver(std::move(gauge), std::move(framing), std::move(arrows));
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("bad quiver JSON shape: ") + e.what());
  }
}

QuiverPtr builtin_quiver(const std::string& name) {
  if (name == "s04")
    return make_quiver({{"g", 2}}, {{"f1", 2}, {"f2", 2}},
                       {{"f1", "g"}, {"f2", "g"}});
  if (name == "jordan") return make_quiver({{"g", 2}}, {}, {{"g", "g"}});
  throw QuiverError("unknown builtin quiver: " + name);
}

// ---------------------------------------------------------------------------
// Element arithmetic.
// ---------------------------------------------------------------------------

namespace {

const QuiverPtr& common_quiver(const MonopoleElement& a, const MonopoleElement& b) {
  exactring::check_tables(a.op.table(), b.op.table(), "MonopoleElement arithmetic");
  return a.quiver;
}

}  // namespace

MonopoleElement MonopoleElement::operator+(const MonopoleElement& o) const {
  return MonopoleElement{common_quiver(*this, o), op + o.op};
}
MonopoleElement MonopoleElement::operator-(const MonopoleElement& o) const {
  return MonopoleElement{common_quiver(*this, o), op - o.op};
}
MonopoleElement MonopoleElement::operator*(const MonopoleElement& o) const {
  return MonopoleElement{common_quiver(*this, o), op * o.op};
}
MonopoleElement MonopoleElement::operator-() const { return MonopoleElement{quiver, -op}; }
MonopoleElement MonopoleElement::scale(const RatFn& f) const {
  return MonopoleElement{quiver, op.scale(f)};
}
bool MonopoleElement::operator==(const MonopoleElement& o) const { return op == o.op; }

MonopoleElement mult_element(const QuiverPtr& q, const RatFn& coeff) {
  exactring::check_tables(q->table(), coeff.table(), "mult_element");
  return MonopoleElement{q, DiffOp::mult(coeff, q->w_vars())};
}

MonopoleElement identity_element(const QuiverPtr& q) {
  return MonopoleElement{q, DiffOp::identity(q->table(), q->w_vars())};
}

MonopoleElement d_monomial(const QuiverPtr& q, const std::string& node, int r, int power) {
  int gi = q->gauge_pos(node);
  if (gi < 0) throw IndexOutOfRange("no gauge node " + node);
  std::size_t slot = q->w_slot(gi, r);
  std::vector<int> eps(q->w_vars().size(), 1), k(q->w_vars().size(), 0);
  k[slot] = 4 * power;
  return MonopoleElement{
      q, DiffOp::shift(q->table(), q->w_vars(), std::move(eps), std::move(k),
                       RatFn::one(q->table()))};
}

MonopoleElement w_monomial(const QuiverPtr& q, const std::string& node, int r, int power) {
  int gi = q->gauge_pos(node);
  if (gi < 0) throw IndexOutOfRange("no gauge node " + node);
  return mult_element(q, sym(q->table(), q->w_name(gi, r), power));
}

RatFn w_power_sum(const QuiverPtr& q, const std::string& node, int m) {
  int gi = q->gauge_pos(node);
  if (gi < 0) throw IndexOutOfRange("no gauge node " + node);
  RatFn out = RatFn::zero(q->table());
  for (int r = 1; r <= q->gauge()[gi].dim; ++r)
    out = out + sym(q->table(), q->w_name(gi, r), m);
  return out;
}

// ---------------------------------------------------------------------------
// Dressings.
// ---------------------------------------------------------------------------

TablePtr dressing_table(int n) {
  if (n < 1) throw IndexOutOfRange("dressing needs at least one slot");
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return SymbolTable::make(std::move(names));
}

LaurentPoly dressing_one(int n) {
  return LaurentPoly::constant(dressing_table(n), GaussianRational(1));
}

LaurentPoly dressing_power(int m) {
  return LaurentPoly::symbol(dressing_table(1), "x1", m);
}

namespace {

void check_dressing(int n, const LaurentPoly& f) {
  if (!exactring::tables_compatible(f.table(), dressing_table(n)))
    throw IndexOutOfRange("dressing is not over the " + std::to_string(n) +
                          "-slot table x1..x" + std::to_string(n));
  for (int j = 0; j + 1 < n; ++j)
    if (f.swap_vars(j, j + 1) != f)
      throw DressingNotSymmetric("dressing is not symmetric in slots " +
                                 std::to_string(j + 1) + "," + std::to_string(j + 2));
}

// f(w_{i,I}) (or f(q^{-2} w_{i,I}) when q2_shift): substitute the subset's
// w-variables, in ascending index order, for the dressing slots.
RatFn eval_dressing(const Quiver& q, int gi, const std::vector<int>& subset,
                    const LaurentPoly& f, bool q2_shift) {
  const TablePtr& t = q.table();
  std::size_t qh = t->require("qh");
  LaurentPoly out = LaurentPoly::zero(t);
  for (const auto& [e, c] : f.terms()) {
    ExpVec exps(t->size(), 0);
    int total = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      exps[t->require(q.w_name(gi, subset[j]))] = e[j];
      total += e[j];
    }
    if (q2_shift) exps[qh] -= 4 * total;  // q^{-2m} w^m per slot power m
    out.insert_add(std::move(exps), c);
  }
  return RatFn::from_poly(std::move(out));
}

// All n-subsets of {1..d} in ascending bitmask order.
std::vector<std::vector<int>> subsets(int d, int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> s;
    for (int r = 1; r <= d; ++r)
      if (mask & (1u << (r - 1))) s.push_back(r);
    if (static_cast<int>(s.size()) == n) out.push_back(std::move(s));
  }
  return out;
}

struct NodeCheck {
  int gi;
  int dim;
};

NodeCheck check_node(const Quiver& q, const std::string& node, int n) {
  int gi = q.gauge_pos(node);
  if (gi < 0) throw IndexOutOfRange("no gauge node " + node);
  int d = q.gauge()[gi].dim;
  if (n < 1 || n > d)
    throw IndexOutOfRange("monopole charge n = " + std::to_string(n) +
                          " outside 1.." + std::to_string(d));
  return NodeCheck{gi, d};
}

}  // namespace

MonopoleElement monopole_E(const QuiverPtr& q, const std::string& node, int n,
                           const LaurentPoly& f) {
  NodeCheck nc = check_node(*q, node, n);
  check_dressing(n, f);
  const TablePtr& t = q->table();
  DiffOp out = DiffOp::zero(t, q->w_vars());

  for (const std::vector<int>& I : subsets(nc.dim, n)) {
    RatFn coeff = eval_dressing(*q, nc.gi, I, f, false);
    if (coeff.num().is_zero()) continue;
    std::vector<bool> in(nc.dim + 1, false);
    for (int r : I) in[r] = true;

    // P numerator: arrows leaving this node (loops restrict s to the
    // complement of I).
    for (std::size_t p = 0; p < q->arrows().size(); ++p) {
      const Arrow& a = q->arrows()[p];
      int src = q->gauge_pos(a.src);
      if (src != nc.gi) continue;
      int dst = q->gauge_pos(a.dst);
      RatFn za = sym(t, q->arrow_var(p));
      for (int r : I)
        for (int s = 1; s <= q->gauge()[dst].dim; ++s) {
          if (dst == nc.gi && in[s]) continue;
          coeff = coeff * one_minus_q(t, za * sym(t, q->w_name(nc.gi, r)) *
                                             sym(t, q->w_name(dst, s), -1));
        }
    }
    // P denominator.
    for (int r : I)
      for (int s = 1; s <= nc.dim; ++s) {
        if (in[s]) continue;
        coeff = coeff / (RatFn::one(t) - sym(t, q->w_name(nc.gi, s)) *
                                             sym(t, q->w_name(nc.gi, r), -1));
      }

    std::vector<int> eps(q->w_vars().size(), 1), k(q->w_vars().size(), 0);
    for (int r : I) k[q->w_slot(nc.gi, r)] = 4;
    out.insert_add(SubstKey{std::move(eps), std::move(k)}, coeff);
  }
  return MonopoleElement{q, std::move(out)};
}

MonopoleElement monopole_F(const QuiverPtr& q, const std::string& node, int n,
                           const LaurentPoly& f) {
  NodeCheck nc = check_node(*q, node, n);
  check_dressing(n, f);
  const TablePtr& t = q->table();
  DiffOp out = DiffOp::zero(t, q->w_vars());

  for (const std::vector<int>& I : subsets(nc.dim, n)) {
    RatFn coeff = eval_dressing(*q, nc.gi, I, f, true);
    if (coeff.num().is_zero()) continue;
    std::vector<bool> in(nc.dim + 1, false);
    for (int r : I) in[r] = true;

    for (std::size_t p = 0; p < q->arrows().size(); ++p) {
      const Arrow& a = q->arrows()[p];
      if (q->gauge_pos(a.dst) != nc.gi) continue;
      RatFn za = sym(t, q->arrow_var(p));
      int fk = q->framing_pos(a.src);
      if (fk >= 0) {
        // Framing factor: flavors of the arrow's source node.
        for (int l = 1; l <= q->framing()[fk].dim; ++l)
          for (int r : I)
            coeff = coeff * one_minus_q(t, sym(t, q->flavor_var(fk, l)) * za *
                                               sym(t, q->w_name(nc.gi, r), -1));
      } else {
        // Q numerator: gauge arrows entering this node (same loop rule).
        int src = q->gauge_pos(a.src);
        for (int r : I)
          for (int s = 1; s <= q->gauge()[src].dim; ++s) {
            if (src == nc.gi && in[s]) continue;
            coeff = coeff * one_minus_q(t, za * sym(t, q->w_name(src, s)) *
                                               sym(t, q->w_name(nc.gi, r), -1));
          }
      }
    }
    // Q denominator.
    for (int r : I)
      for (int s = 1; s <= nc.dim; ++s) {
        if (in[s]) continue;
        coeff = coeff / (RatFn::one(t) - sym(t, q->w_name(nc.gi, r)) *
                                             sym(t, q->w_name(nc.gi, s), -1));
      }

    std::vector<int> eps(q->w_vars().size(), 1), k(q->w_vars().size(), 0);
    for (int r : I) k[q->w_slot(nc.gi, r)] = -4;
    out.insert_add(SubstKey{std::move(eps), std::move(k)}, coeff);
  }
  return MonopoleElement{q, std::move(out)};
}

// ---------------------------------------------------------------------------
// Grading, Weyl symmetry, quotient embedding.
// ---------------------------------------------------------------------------

namespace {

std::vector<int> degree_vector(const Quiver& q, const SubstKey& key) {
  std::vector<int> deg(q.gauge().size(), 0);
  std::size_t slot = 0;
  for (std::size_t i = 0; i < q.gauge().size(); ++i)
    for (int r = 1; r <= q.gauge()[i].dim; ++r, ++slot) {
      if (key.eps[slot] != 1 || key.k[slot] % 4 != 0)
        throw NotInvariant("term key is not a D-monomial");
      deg[i] += key.k[slot] / 4;
    }
  return deg;
}

}  // namespace

std::set<std::vector<int>> grading(const MonopoleElement& elem) {
  std::set<std::vector<int>> out;
  for (const auto& [key, coeff] : elem.op.terms()) {
    (void)coeff;
    out.insert(degree_vector(*elem.quiver, key));
  }
  return out;
}

bool is_invariant(const MonopoleElement& elem) {
  for (const std::vector<int>& deg : grading(elem))
    for (int d : deg)
      if (d != 0) return false;
  return true;
}

MonopoleElement weyl_image(const MonopoleElement& elem, const std::string& node, int r,
                           int s) {
  const Quiver& q = *elem.quiver;
  int gi = q.gauge_pos(node);
  if (gi < 0) throw IndexOutOfRange("no gauge node " + node);
  if (r == s) throw IndexOutOfRange("Weyl transposition needs distinct indices");
  std::size_t pr = q.w_slot(gi, r), ps = q.w_slot(gi, s);
  std::size_t tr = q.table()->require(q.w_name(gi, r));
  std::size_t ts = q.table()->require(q.w_name(gi, s));

  DiffOp out = DiffOp::zero(q.table(), q.w_vars());
  for (const auto& [key, coeff] : elem.op.terms()) {
    SubstKey swapped = key;
    std::swap(swapped.eps[pr], swapped.eps[ps]);
    std::swap(swapped.k[pr], swapped.k[ps]);
    out.insert_add(std::move(swapped), coeff.swap_vars(tr, ts));
  }
  return MonopoleElement{elem.quiver, std::move(out)};
}

namespace {

// Monomial images of the quiver parameters in the target table, as exponent
// vectors (every translated parameter is a monomial with coefficient 1).
std::map<std::size_t, ExpVec> embed_translation(const Quiver& q, skein::Surface surface,
                                                const TablePtr& target) {
  std::map<std::string, ExpVec> by_name;
  auto mono = [&](std::initializer_list<std::pair<const char*, int>> factors) {
    ExpVec e(target->size(), 0);
    for (const auto& [name, exp] : factors) e[target->require(name)] += exp;
    return e;
  };
  if (surface == skein::Surface::s04) {
    by_name.emplace("z11", mono({{"t4", 1}}));
    by_name.emplace("z12", mono({{"t4", -1}}));
    by_name.emplace("z21", mono({{"t1", 1}}));
    by_name.emplace("z22", mono({{"t1", -1}}));
    by_name.emplace("za", mono({{"t3", 1}}));
    by_name.emplace("zb", mono({{"t2", 1}}));
  } else {
    by_name.emplace("z", mono({{"qh", -2}, {"th", 2}}));
  }

  std::map<std::size_t, ExpVec> out;
  const TablePtr& t = q.table();
  for (std::size_t i = 0; i < t->size(); ++i) {
    const std::string& name = t->name(i);
    if (name == "qh" || name == q.w_name(0, 1) || name == q.w_name(0, 2)) continue;
    auto it = by_name.find(name);
    if (it == by_name.end())
      throw UnmappedParameter("no translation for parameter " + name + " on surface " +
                              skein::surface_name(surface));
    out.emplace(i, it->second);
  }
  return out;
}

// w1 -> X, w2 -> X^{-1}, parameters by their monomial translations.
LaurentPoly embed_poly(const LaurentPoly& p, const TablePtr& target, std::size_t src_qh,
                       std::size_t src_w1, std::size_t src_w2,
                       const std::map<std::size_t, ExpVec>& translation) {
  std::size_t dst_qh = target->require("qh");
  std::size_t dst_x = target->require("X");
  LaurentPoly out = LaurentPoly::zero(target);
  for (const auto& [e, c] : p.terms()) {
    ExpVec img(target->size(), 0);
    img[dst_qh] = e[src_qh];
    img[dst_x] = e[src_w1] - e[src_w2];
    for (const auto& [si, mono] : translation) {
      int exp = e[si];
      if (exp == 0) continue;
      for (std::size_t j = 0; j < mono.size(); ++j) img[j] += exp * mono[j];
    }
    out.insert_add(std::move(img), c);
  }
  return out;
}

}  // namespace

DiffOp embed_quotient(const MonopoleElement& elem, skein::Surface surface) {
  if (surface == skein::Surface::s03)
    throw std::invalid_argument("the three-holed sphere has no ambient quantum torus");
  const Quiver& q = *elem.quiver;
  if (q.gauge().size() != 1 || q.gauge()[0].dim != 2)
    throw std::invalid_argument("quotient embedding needs a single rank-2 gauge node");

  TablePtr target = surface == skein::Surface::s04 ? daha::cc_table() : daha::a1_table();
  std::map<std::size_t, ExpVec> translation = embed_translation(q, surface, target);
  const TablePtr& t = q.table();
  std::size_t src_qh = t->require("qh");
  std::size_t src_w1 = t->require(q.w_name(0, 1));
  std::size_t src_w2 = t->require(q.w_name(0, 2));
  std::size_t dst_x = target->require("X");

  DiffOp out = DiffOp::zero(target, {"X"});
  for (const auto& [key, coeff] : elem.op.terms()) {
    std::vector<int> deg = degree_vector(q, key);
    if (deg[0] != 0)
      throw NotInvariant("total D-degree " + std::to_string(deg[0]) + " is nonzero");
    int nu = key.k[0] / 4;

    RatFn img = RatFn::make(
        embed_poly(coeff.num(), target, src_qh, src_w1, src_w2, translation),
        embed_poly(coeff.den(), target, src_qh, src_w1, src_w2, translation));
    // (D_1 D_2^{-1})^{nu} -> q^{-4 nu^2} X^{-4 nu} (X -> q^{2 nu} X).
    ExpVec shift_mono(target->size(), 0);
    shift_mono[dst_x] = -4 * nu;
    shift_mono[target->require("qh")] = -8 * nu * nu;
    img = img * RatFn::monomial(target, std::move(shift_mono), GaussianRational(1));
    out.insert_add(SubstKey{{1}, {4 * nu}}, img);
  }
  return out;
}

}  // namespace monopole
