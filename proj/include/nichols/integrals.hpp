#pragma once

#include <vector>

#include "nichols/calculus.hpp"

namespace nichols {

template <class F>
struct IntegralCertificate {
  Element<F> x;  // basis vector of the top component
  int degree = 0;
  GroupElement w;  // W-degree
  std::vector<int> lambda;  // g x = lambda_g x on simple reflections
  int eps_rho = 0, eps_S = 0, eps_sbar = 0;  // x = eps * op(x)
  bool central = false;

  json to_json(Algebra<F>& a) const;
};

struct NotFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x_alpha z = 0 for all alpha; throws std::logic_error if the left and right
// criteria disagree.
template <class F>
bool is_integral(Algebra<F>& a, const Element<F>& z);

template <class F>
IntegralCertificate<F> top_integral(Algebra<F>& a);

// Parity, character, center, signs, pairing, annihilation by positive degrees.
template <class F>
IdentityReport certificate_checks(Algebra<F>& a, const IntegralCertificate<F>& cert);

// Invariance items 1-5, prep-inv, hypo-bracket, Nicholsint, abstract
// commutativity. order_two lists disjoint systems {w1, w2} for item 5.
template <class F>
IdentityReport invariance_suite(NilCoxeter<F>& nc, const IntegralCertificate<F>& cert,
                                const std::vector<std::vector<GroupElement>>& order_two, const CheckOptions& opt);

struct MonomialLift {
  Word left, right;  // left z and z right are nonzero integrals
};

template <class F>
MonomialLift lift_monomial_to_integral(Algebra<F>& a, const Element<F>& z);

template <class F>
struct SubalgebraState {
  std::vector<int> theta;
  std::vector<std::vector<SVec<F>>> spaces;  // per degree, inside B^n
  int top = 0;

  const std::vector<SVec<F>>& top_space() const { return spaces[top]; }
};

// R^+ minus the simple roots.
std::vector<int> nonsimple_roots(const RootSystem& rs);

template <class F>
SubalgebraState<F> subalgebra_build(Algebra<F>& a, const std::vector<int>& theta);

// Space of elements of B^n with (P)<-D_beta = 0 for simple beta, and
// x_alpha P = 0 (left) and/or P x_alpha = 0 (right) for alpha in theta.
enum class HypoSide { left, right, both };
template <class F>
std::vector<SVec<F>> hypothetical_space(Algebra<F>& a, int n, const std::vector<int>& theta, HypoSide side);

template <class F>
IdentityReport hypothetical_checks(NilCoxeter<F>& nc, const SubalgebraState<F>& sub);

}  // namespace nichols
