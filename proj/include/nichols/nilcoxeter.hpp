#pragma once

#include <map>
#include <vector>

#include "nichols/algebra.hpp"

namespace nichols {

template <class F>
struct NilCoxeterElement {
  std::map<GroupElement, F> terms;

  static NilCoxeterElement basis(const GroupElement& w) { return {{{w, F(1)}}}; }
  void add(const GroupElement& w, const F& c);
};

// x_u x_v = x_{uv} if lengths add, else 0.
template <class F>
NilCoxeterElement<F> nc_product(const NilCoxeterElement<F>& a, const NilCoxeterElement<F>& b);

// Thrown when Delta(x_w) is not reproduced by the extracted x_{w/v}.
struct ReconstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
class NilCoxeter {
 public:
  explicit NilCoxeter(Algebra<F>& alg);

  Algebra<F>& algebra() { return *alg_; }
  const std::vector<GroupElement>& group() const { return group_; }
  const std::vector<GroupElement>& of_length(int l) const;
  const GroupElement& longest() const { return wo_; }

  // x_w = x_{b1}...x_{bm} for a reduced word of w; memoized.
  const Element<F>& embed(const GroupElement& w);
  Element<F> embed(const NilCoxeterElement<F>& a);
  // Same product along an explicit simple-index word (need not be reduced).
  Element<F> embed_word(const std::vector<int>& simple_word);

  // x_{w/v} from Delta(x_w) = sum_v x_{w/v} (x) x_v.
  const Element<F>& skew(const GroupElement& w, const GroupElement& v);
  // y = w x_{w_o}
  Element<F> y_element(const GroupElement& w);

 private:
  void split(const GroupElement& w);

  Algebra<F>* alg_;
  const RootSystem* rs_;
  std::vector<GroupElement> group_;
  std::vector<std::vector<GroupElement>> by_length_;
  GroupElement wo_;
  std::map<GroupElement, Element<F>> embedded_;
  std::map<std::pair<GroupElement, GroupElement>, Element<F>> skew_;
};

}  // namespace nichols
