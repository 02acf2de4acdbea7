#include "nichols/serialize.hpp"

#include <algorithm>

namespace nichols {

json root_to_json(const RootSystem& rs, int i) { return json(rs.root(i)); }

json group_to_json(const RootSystem& rs, const GroupElement& g) {
  if (rs.type_a()) return json{{"perm", g.to_perm(rs)}};
  return json{{"word", g.reduced_word(rs)}};
}

GroupElement group_from_json(const RootSystem& rs, const json& j) {
  if (j.contains("perm")) return GroupElement::from_perm(rs, j.at("perm").get<std::vector<int>>());
  if (j.contains("word")) return GroupElement::from_word(rs, j.at("word").get<std::vector<int>>());
  throw std::invalid_argument("group element needs \"perm\" or \"word\"");
}

template <class F>
json element_to_json(Algebra<F>& alg, const Element<F>& z) {
  json comps = json::array();
  for (const auto& [n, v] : z.comp) {
    json terms = json::array();
    const auto& B = alg.basis(n);
    for (const auto& [b, c] : v) terms.push_back({{"word", B.words[b]}, {"coeff", to_string(c)}});
    comps.push_back({{"degree", n}, {"terms", terms}});
  }
  return json{{"degree_components", comps}};
}

template <class F>
Element<F> element_from_json(Algebra<F>& alg, const json& j) {
  Element<F> z;
  for (const auto& c : j.at("degree_components")) {
    const int n = c.at("degree").get<int>();
    for (const auto& t : c.at("terms")) {
      Word w = t.at("word").get<Word>();
      if (static_cast<int>(w.size()) != n) throw std::invalid_argument("word length differs from degree");
      for (int g : w)
        if (g < 0 || g >= alg.num_generators()) throw std::invalid_argument("root index out of range");
      z.add(n, alg.project(w), parse_scalar<F>(t.at("coeff").get<std::string>()));
    }
  }
  return z;
}

template <class F>
json nilcoxeter_to_json(const RootSystem& rs, const NilCoxeterElement<F>& a) {
  std::vector<std::pair<GroupElement, F>> terms(a.terms.begin(), a.terms.end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& x, const auto& y) { return canonical_less(rs, x.first, y.first); });
  json out = json::array();
  for (const auto& [g, c] : terms) out.push_back({{"element", group_to_json(rs, g)}, {"coeff", to_string(c)}});
  return json{{"terms", out}};
}

template json element_to_json(Algebra<Rational>&, const Element<Rational>&);
template json element_to_json(Algebra<ModP>&, const Element<ModP>&);
template Element<Rational> element_from_json(Algebra<Rational>&, const json&);
template Element<ModP> element_from_json(Algebra<ModP>&, const json&);
template json nilcoxeter_to_json(const RootSystem&, const NilCoxeterElement<Rational>&);
template json nilcoxeter_to_json(const RootSystem&, const NilCoxeterElement<ModP>&);

}  // namespace nichols
