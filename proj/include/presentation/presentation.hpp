#pragma once
// Finitely presented algebras with scalar coefficients, and representation
// maps into q-difference operators.
//
// A relation is a finite sum  sum_t coeff_t * word_t == 0  where each word is
// a finite product of generator names (the empty word is the identity) and
// each coefficient is an exact rational function of the presentation's
// parameter symbols.  A representation map sends generators to operators and
// parameters to scalars over the operator table; checking a presentation
// means evaluating every relation's residual operator exactly.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "exactring/exactring.hpp"
#include "qdiffop/qdiffop.hpp"

namespace presentation {

// A word mentions a generator the representation map does not send anywhere.
struct UnmappedGenerator : std::runtime_error {
  explicit UnmappedGenerator(const std::string& m)
      : std::runtime_error("UnmappedGenerator: " + m) {}
};

struct Relation {
  struct Term {
    exactring::RatFn coeff;
    std::vector<std::string> word;  // product of generators; empty = identity
  };
  std::string name;
  std::vector<Term> terms;
};

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  exactring::TablePtr parameters;
  std::vector<Relation> relations;
};

// Generator images plus the parameter-to-scalar translation.
struct RepMap {
  exactring::TablePtr op_table;
  std::vector<std::string> op_vars;
  std::map<std::string, qdiffop::DiffOp> images;
  exactring::SubstMap translation;

  qdiffop::DiffOp identity() const {
    return qdiffop::DiffOp::identity(op_table, op_vars);
  }
};

// Evaluate a word left to right: [g1, g2, g3] -> img(g1) * img(g2) * img(g3).
// The empty word evaluates to the identity operator.
qdiffop::DiffOp eval_word(const RepMap& rep, const std::vector<std::string>& word);

// The relation's left side as an operator: sum_t translate(coeff_t) * word_t.
qdiffop::DiffOp relation_residual(const RepMap& rep, const Relation& rel);

struct RelationVerdict {
  std::size_t index;
  std::string name;
  bool pass;
  qdiffop::DiffOp residual;
};

// Evaluate every relation; one verdict per relation, in presentation order
// (each verdict depends only on its own relation).
std::vector<RelationVerdict> check_presentation(const RepMap& rep,
                                                const Presentation& pres);

// Export for external audit: generators, parameter names, and relation terms
// with coefficients in canonical text.
nlohmann::ordered_json to_json(const Presentation& pres);

}  // namespace presentation
