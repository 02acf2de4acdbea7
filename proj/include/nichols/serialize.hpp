#pragma once

#include <json.hpp>

#include "nichols/nilcoxeter.hpp"

namespace nichols {

using json = nlohmann::ordered_json;

json root_to_json(const RootSystem& rs, int i);
json group_to_json(const RootSystem& rs, const GroupElement& g);
GroupElement group_from_json(const RootSystem& rs, const json& j);

// {"degree_components":[{"degree":n,"terms":[{"word":[...],"coeff":"p/q"}]}]}
template <class F>
json element_to_json(Algebra<F>& alg, const Element<F>& z);
template <class F>
Element<F> element_from_json(Algebra<F>& alg, const json& j);

template <class F>
json nilcoxeter_to_json(const RootSystem& rs, const NilCoxeterElement<F>& a);

}  // namespace nichols
