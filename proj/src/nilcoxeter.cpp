#include "nichols/nilcoxeter.hpp"

#include <string>

namespace nichols {

template <class F>
void NilCoxeterElement<F>::add(const GroupElement& w, const F& c) {
  F& x = terms[w];
  x += c;
  if (nichols::is_zero(x)) terms.erase(w);
}

template <class F>
NilCoxeterElement<F> nc_product(const NilCoxeterElement<F>& a, const NilCoxeterElement<F>& b) {
  NilCoxeterElement<F> r;
  for (const auto& [u, x] : a.terms)
    for (const auto& [v, y] : b.terms) {
      if (u.full().size() != v.full().size()) throw std::invalid_argument("nilCoxeter elements of different groups");
      GroupElement uv = u * v;
      if (uv.length() == u.length() + v.length()) r.add(uv, x * y);
    }
  return r;
}

template <class F>
NilCoxeter<F>::NilCoxeter(Algebra<F>& alg)
    : alg_(&alg), rs_(&alg.roots()), group_(enumerate_group(alg.roots())), wo_(GroupElement::longest(alg.roots())) {
  by_length_.resize(static_cast<std::size_t>(wo_.length()) + 1);
  for (const auto& g : group_) by_length_[g.length()].push_back(g);
}

template <class F>
const std::vector<GroupElement>& NilCoxeter<F>::of_length(int l) const {
  static const std::vector<GroupElement> none;
  if (l < 0 || l >= static_cast<int>(by_length_.size())) return none;
  return by_length_[l];
}

template <class F>
Element<F> NilCoxeter<F>::embed_word(const std::vector<int>& simple_word) {
  Word w;
  for (int k : simple_word) w.push_back(rs_->simple(k));
  return alg_->from_word(w);
}

template <class F>
const Element<F>& NilCoxeter<F>::embed(const GroupElement& w) {
  auto it = embedded_.find(w);
  if (it == embedded_.end()) it = embedded_.emplace(w, embed_word(w.reduced_word(*rs_))).first;
  return it->second;
}

template <class F>
Element<F> NilCoxeter<F>::embed(const NilCoxeterElement<F>& a) {
  Element<F> r;
  for (const auto& [w, c] : a.terms) r += embed(w) * c;
  return r;
}

template <class F>
void NilCoxeter<F>::split(const GroupElement& w) {
  const int n = w.length();
  const Element<F>& xw = embed(w);
  const SVec<F> top = xw.component(n);
  for (int k = 0; k <= n; ++k) {
    const int m = n - k;
    auto part = alg_->coproduct(n, top, k);
    const auto& G = alg_->gram(m);
    // right legs paired against x_{v^-1}
    std::map<std::pair<int, int>, F> rebuilt;
    for (const auto& v : of_length(m)) {
      const SVec<F> xinv = embed(v.inverse()).component(m);
      std::vector<F> p(G.size(), F(0));
      for (std::size_t j = 0; j < G.size(); ++j)
        for (const auto& [c, x] : xinv) p[j] += G[j][c] * x;
      SVec<F> acc;
      std::map<int, F> byleft;
      for (const auto& [ij, c] : part.coeff) byleft[ij.first] += c * p[ij.second];
      for (const auto& [i, c] : byleft)
        if (!nichols::is_zero(c)) acc.emplace_back(i, c);
      Element<F> s = Element<F>::homogeneous(k, acc);
      const SVec<F> xv = embed(v).component(m);
      for (const auto& [i, a] : acc)
        for (const auto& [j, b] : xv) rebuilt[{i, j}] += a * b;
      skew_[{w, v}] = std::move(s);
    }
    for (auto it = rebuilt.begin(); it != rebuilt.end();) {
      if (nichols::is_zero(it->second))
        it = rebuilt.erase(it);
      else
        ++it;
    }
    if (rebuilt != part.coeff)
      throw ReconstructionError("coproduct of x_" + w.name(*rs_) + " is not spanned by nilCoxeter right legs at split " +
                                std::to_string(k));
  }
}

template <class F>
const Element<F>& NilCoxeter<F>::skew(const GroupElement& w, const GroupElement& v) {
  auto key = std::make_pair(w, v);
  auto it = skew_.find(key);
  if (it != skew_.end()) return it->second;
  if (v.length() <= w.length()) {
    split(w);
    it = skew_.find(key);
    if (it != skew_.end()) return it->second;
  }
  return skew_.emplace(key, Element<F>{}).first->second;
}

template <class F>
Element<F> NilCoxeter<F>::y_element(const GroupElement& w) {
  return alg_->act(w, embed(wo_));
}

template struct NilCoxeterElement<Rational>;
template struct NilCoxeterElement<ModP>;
template NilCoxeterElement<Rational> nc_product(const NilCoxeterElement<Rational>&, const NilCoxeterElement<Rational>&);
template NilCoxeterElement<ModP> nc_product(const NilCoxeterElement<ModP>&, const NilCoxeterElement<ModP>&);
template class NilCoxeter<Rational>;
template class NilCoxeter<ModP>;

}  // namespace nichols
