#pragma once
// Framed quivers and their localized quantum torus: dressed minuscule
// monopole operators E_{i,n}[f] / F_{i,n}[f], Weyl symmetry, the D-degree
// grading, and the quotient-and-embed map onto one-variable q-difference
// operators.
//
// For a gauge node i of rank d_i the torus has invertible pairwise-commuting
// variables w_{i,r} and D_{i,r} (r = 1..d_i) with
//     D_{i,r} w_{j,s} = q^{2 delta_ij delta_rs} w_{j,s} D_{i,r},
// realized as DiffOp terms over the w's: the D-monomial prod D_{i,r}^{nu}
// is the substitution w_{i,r} -> q^{2 nu} w_{i,r} (stored half-shift
// k = 4 nu in the shift symbol qh = q^{1/2}).  Coefficients are rational
// functions of the w's over the parameter ring C[qh^{±1}, z^{±1}].

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "daha/daha.hpp"
#include "exactring/exactring.hpp"
#include "qdiffop/qdiffop.hpp"
#include "skein/skein.hpp"

namespace monopole {

using exactring::LaurentPoly;
using exactring::RatFn;
using exactring::TablePtr;
using qdiffop::DiffOp;

// Structural violation in a quiver description.
struct QuiverError : std::runtime_error {
  explicit QuiverError(const std::string& m) : std::runtime_error("QuiverError: " + m) {}
};
// A node, flavor, or w-index outside the declared ranges.
struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& m)
      : std::runtime_error("IndexOutOfRange: " + m) {}
};
// A dressing polynomial that is not symmetric in its slots.
struct DressingNotSymmetric : std::runtime_error {
  explicit DressingNotSymmetric(const std::string& m)
      : std::runtime_error("DressingNotSymmetric: " + m) {}
};
// An element with nonzero D-degree passed to the quotient embedding.
struct NotInvariant : std::runtime_error {
  explicit NotInvariant(const std::string& m) : std::runtime_error("NotInvariant: " + m) {}
};
// A parameter symbol with no assigned target under the quotient embedding.
struct UnmappedParameter : std::runtime_error {
  explicit UnmappedParameter(const std::string& m)
      : std::runtime_error("UnmappedParameter: " + m) {}
};

struct GaugeNode {
  std::string id;
  int dim;
};
struct FramingNode {
  std::string id;
  int dim;
};
struct Arrow {
  std::string src;
  std::string dst;  // must be a gauge node: no arrow ends at a framing node
};

// A validated quiver with its symbol table.  Symbol naming:
//  - shift symbol "qh" (q = qh^2);
//  - flavor variables "z{k}{l}" for the l-th flavor of the k-th framing node
//    (both 1-based), e.g. z11, z12, z21, z22;
//  - one variable per arrow: "z" when the quiver has a single arrow
//    (mirroring the usual abbreviation), otherwise "za", "zb", ...;
//  - gauge variables "w1".."wd" for a single gauge node, "w{i}_{r}" with the
//    1-based node position otherwise.
class Quiver {
 public:
  Quiver(std::vector<GaugeNode> gauge, std::vector<FramingNode> framing,
         std::vector<Arrow> arrows);

  const std::vector<GaugeNode>& gauge() const { return gauge_; }
  const std::vector<FramingNode>& framing() const { return framing_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const TablePtr& table() const { return table_; }
  // All gauge variables in node-major order; the acted variables of every
  // element's DiffOp.
  const std::vector<std::string>& w_vars() const { return w_vars_; }

  // 0-based position among gauge (resp. framing) nodes, or -1 when the id
  // names no such node.
  int gauge_pos(const std::string& id) const;
  int framing_pos(const std::string& id) const;

  // Symbol names (gauge_pos/framing_pos 0-based; r, l 1-based).
  const std::string& w_name(int gauge_pos, int r) const;
  const std::string& flavor_var(int framing_pos, int l) const;
  const std::string& arrow_var(std::size_t arrow_pos) const;

  // Position of w_{i,r} within w_vars().
  std::size_t w_slot(int gauge_pos, int r) const;

 private:
  std::vector<GaugeNode> gauge_;
  std::vector<FramingNode> framing_;
  std::vector<Arrow> arrows_;
  TablePtr table_;
  std::vector<std::string> w_vars_;
  std::vector<std::vector<std::string>> w_names_;       // per gauge node
  std::vector<std::vector<std::string>> flavor_vars_;   // per framing node
  std::vector<std::string> arrow_vars_;                 // per arrow
  std::vector<std::size_t> w_slot_base_;                // per gauge node
};

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr make_quiver(std::vector<GaugeNode> gauge, std::vector<FramingNode> framing,
                      std::vector<Arrow> arrows);

// JSON form {"gauge":[{"id","dim"}], "framing":[{"id","dim"}],
// "arrows":[{"src","dst"}]}; malformed input raises QuiverError.
QuiverPtr parse_quiver(const std::string& json_text);

// The two shipped quivers:
//  - "s04":    [2] --a--> (2) <--b-- [2]   (one rank-2 gauge node, two rank-2
//              framing nodes; flavor variables z11,z12,z21,z22, arrows za,zb)
//  - "jordan": (2) with one loop arrow     (arrow variable z)
QuiverPtr builtin_quiver(const std::string& name);

// An element of the localized quantum torus: a DiffOp over the w-variables
// whose substitution keys are the D-monomials (k = 4 nu per variable).
struct MonopoleElement {
  QuiverPtr quiver;
  DiffOp op;

  MonopoleElement operator+(const MonopoleElement& o) const;
  MonopoleElement operator-(const MonopoleElement& o) const;
  MonopoleElement operator*(const MonopoleElement& o) const;
  MonopoleElement operator-() const;
  MonopoleElement scale(const RatFn& f) const;
  bool operator==(const MonopoleElement& o) const;
  bool operator!=(const MonopoleElement& o) const { return !(*this == o); }
};

// Multiplication by a rational function of the w's (D-degree zero).
MonopoleElement mult_element(const QuiverPtr& q, const RatFn& coeff);
MonopoleElement identity_element(const QuiverPtr& q);
// The D-monomial D_{i,r}^{power} (r 1-based).
MonopoleElement d_monomial(const QuiverPtr& q, const std::string& node, int r, int power);
// The w-monomial w_{i,r}^{power} as a multiplication element.
MonopoleElement w_monomial(const QuiverPtr& q, const std::string& node, int r, int power);
// The power sum w_{i,1}^m + ... + w_{i,d}^m over the quiver table.
RatFn w_power_sum(const QuiverPtr& q, const std::string& node, int m);

// Dressings are Laurent polynomials over the slot table {"x1",...,"xn"},
// symmetric under permutations of the slots.
TablePtr dressing_table(int n);
LaurentPoly dressing_one(int n);
// One-slot monomial x1^m.
LaurentPoly dressing_power(int m);

// Dressed minuscule monopole operators at gauge node `node` (by id):
//   E_{i,n}[f] = sum over n-subsets I of {1..d_i} of
//                f(w_{i,I}) * P_{i,I} * prod_{r in I} D_{i,r}
// with numerator factors (1 - q z_a w_{i,r} w_{j,s}^{-1}) over arrows a
// leaving i (s restricted to the complement of I when the arrow is a loop)
// and denominator prod (1 - w_{i,s} w_{i,r}^{-1}) over r in I, s outside I;
//   F_{i,n}[f] = sum of f(q^{-2} w_{i,I}) * [framing-arrow factors
//                (1 - q z_{k,l} z_a w_{i,r}^{-1})] * Q_{i,I} * prod D_{i,r}^{-1}
// with Q's numerator over gauge arrows entering i (same loop rule) and
// denominator prod (1 - w_{i,r} w_{i,s}^{-1}).
MonopoleElement monopole_E(const QuiverPtr& q, const std::string& node, int n,
                           const LaurentPoly& f);
MonopoleElement monopole_F(const QuiverPtr& q, const std::string& node, int n,
                           const LaurentPoly& f);

// The set of total D-degree vectors (one entry per gauge node, summing
// nu_{i,r} over r) across the element's terms.  An element is C*-invariant
// exactly when every vector is zero.
std::set<std::vector<int>> grading(const MonopoleElement& elem);
bool is_invariant(const MonopoleElement& elem);

// Swap w_{i,r} <-> w_{i,s} and D_{i,r} <-> D_{i,s} (r, s 1-based, distinct).
MonopoleElement weyl_image(const MonopoleElement& elem, const std::string& node, int r,
                           int s);

// Quotient by (z_{k,1} z_{k,2} - 1, w_1 w_2 - 1) followed by the embedding
// into one-variable operators: w_1 -> X, w_2 -> X^{-1},
// (D_1 D_2^{-1})^{nu} -> q^{-4 nu^2} X^{-4 nu} (shift X -> q^{2 nu} X),
// with parameter translation fixed by the surface:
//  - s04 (four-holed sphere ambient ring, target table {qh,t1..t4,X}):
//    z11 -> t4, z12 -> t4^{-1}, z21 -> t1, z22 -> t1^{-1}, za -> t3, zb -> t2;
//  - s11 (once-punctured torus, target table {qh,th,X}): z -> qh^{-2} th^2.
// Requires a single rank-2 gauge node and a C*-invariant element
// (NotInvariant otherwise); parameters without a translation raise
// UnmappedParameter.
DiffOp embed_quotient(const MonopoleElement& elem, skein::Surface surface);

}  // namespace monopole
