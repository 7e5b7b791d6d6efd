#include "presentation/presentation.hpp"

namespace presentation {

using exactring::RatFn;
using qdiffop::DiffOp;

DiffOp eval_word(const RepMap& rep, const std::vector<std::string>& word) {
  DiffOp acc = rep.identity();
  for (const auto& g : word) {
    auto it = rep.images.find(g);
    if (it == rep.images.end())
      throw UnmappedGenerator("representation does not map generator: " + g);
    acc = acc * it->second;
  }
  return acc;
}

DiffOp relation_residual(const RepMap& rep, const Relation& rel) {
  DiffOp acc = DiffOp::zero(rep.op_table, rep.op_vars);
  for (const auto& term : rel.terms) {
    RatFn c = exactring::scalar_substitute(term.coeff, rep.translation, rep.op_table);
    acc = acc + eval_word(rep, term.word).scale(c);
  }
  return acc;
}

std::vector<RelationVerdict> check_presentation(const RepMap& rep,
                                                const Presentation& pres) {
  std::vector<RelationVerdict> out;
  out.reserve(pres.relations.size());
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    DiffOp residual = relation_residual(rep, pres.relations[i]);
    out.push_back(RelationVerdict{i, pres.relations[i].name, residual.is_zero(),
                                  std::move(residual)});
  }
  return out;
}

nlohmann::ordered_json to_json(const Presentation& pres) {
  nlohmann::ordered_json j;
  j["name"] = pres.name;
  j["generators"] = pres.generators;
  j["parameters"] = pres.parameters->names();
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const auto& rel : pres.relations) {
    nlohmann::ordered_json jr;
    jr["name"] = rel.name;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : rel.terms) {
      nlohmann::ordered_json jt;
      jt["coeff"] = t.coeff.to_string();
      jt["word"] = t.word;
      terms.push_back(std::move(jt));
    }
    jr["terms"] = std::move(terms);
    rels.push_back(std::move(jr));
  }
  j["relations"] = std::move(rels);
  return j;
}

}  // namespace presentation
