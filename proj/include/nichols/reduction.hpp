#pragma once

#include <map>
#include <string>
#include <vector>

#include "nichols/calculus.hpp"

namespace nichols {

// Which descent beta (cases 1, 2) or gamma (case 3) is used when several apply.
enum class ReductionPolicy { min_root, max_root };

struct ReductionStep {
  int tag;  // 0: simple letter, 1/2/3: rewrite case, -1: killed (ideal or length)
  GroupElement prefix;
  int alpha;
  int pivot;  // beta or gamma, -1 if none
};

template <class F>
struct ReductionResult {
  F lambda;
  GroupElement w;
  std::vector<ReductionStep> trace;

  json to_json(const RootSystem& rs) const;
};

struct NotTypeA : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rewrites c x_{a1}...x_{am} to lambda x_w modulo the ideal generated by the
// non-simple generators, using only root data and the quadratic relations.
template <class F>
class Reducer {
 public:
  explicit Reducer(const RootSystem& rs, ReductionPolicy policy = ReductionPolicy::min_root);

  ReductionResult<F> right(const Word& m, const F& c = F(1));
  // Left ideal: reverse the word, reduce on the right, invert w.
  ReductionResult<F> left(const Word& m, const F& c = F(1));

 private:
  // x_w x_alpha = mu x_{w s_alpha} modulo the right ideal.
  F step(const GroupElement& w, int alpha, std::vector<ReductionStep>* trace);

  const RootSystem* rs_;
  ReductionPolicy policy_;
  std::map<std::pair<GroupElement, int>, F> memo_;
};

template <class F>
struct IdealOracleResult {
  bool member = false;
  std::map<GroupElement, F> normal_form;  // z = sum c_w x_w + (ideal element)
  int quotient_dim = 0;
};

enum class IdealSide { left, right };

// Linear-algebra answer for a homogeneous z of degree n.
template <class F>
IdealOracleResult<F> ideal_membership_oracle(Algebra<F>& a, const Element<F>& z, IdealSide side);

// dim B^n / J^n for n = 0..max_degree.
template <class F>
std::vector<int> quotient_dimensions(Algebra<F>& a, IdealSide side, int max_degree);

// Seeded random monomials (length <= max_degree, default 6) reduced on both
// sides under both policies and compared with the oracle; quotient
// dimensions compared with the length generating function of W.
template <class F>
IdentityReport check_reduction(Algebra<F>& a, const CheckOptions& opt);

}  // namespace nichols
