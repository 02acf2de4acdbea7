#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nichols/nilcoxeter.hpp"
#include "nichols/serialize.hpp"

namespace nichols {

struct CheckOptions {
  int trials = 200;
  std::uint64_t seed = 1;
  int max_degree = -1;     // -1: the top degree, or the cap when truncated
  bool exhaustive = true;  // sweep whole bases where an identity holds "for all z"
};

struct ReportItem {
  std::string name;
  bool pass = true;
  long long checked = 0;
  std::string note;
};

struct IdentityReport {
  std::string name;
  json parameters = json::object();
  long long trials = 0;
  bool pass = true;
  std::vector<ReportItem> items;
  json counterexample;  // first failure: item, inputs, lhs, rhs
  std::vector<std::string> notices;

  ReportItem& item(const std::string& name);
  void absorb(const IdentityReport& sub);
  json to_json() const;
};

// Degree up to which checks run.
template <class F>
int effective_degree(Algebra<F>& a, const CheckOptions& opt);

// {z in B^n : (z)<-D_alpha = 0 for alpha in theta}; with a twist g, also
// requires (g z)<-D_alpha = 0.
template <class F>
std::vector<SVec<F>> derivative_kernel(Algebra<F>& a, int n, const std::vector<int>& theta,
                                       const GroupElement* twist = nullptr);
template <class F>
std::vector<SVec<F>> left_derivative_kernel(Algebra<F>& a, int n, const std::vector<int>& theta);
template <class F>
std::vector<SVec<F>> intersect(const std::vector<SVec<F>>& u, const std::vector<SVec<F>>& v, int dim);
template <class F>
SVec<F> random_combination(const std::vector<SVec<F>>& span, std::mt19937_64& rng);

// dim B^n from the incremental construction against the rank of the
// symmetrizer, n <= max_degree (default 4).
template <class F>
IdentityReport check_dual_paths(Algebra<F>& a, const CheckOptions& opt);
// <x_u, x_v> = delta(u, v^-1) over all pairs.
template <class F>
IdentityReport check_orthonormality(NilCoxeter<F>& nc);

template <class F>
IdentityReport check_pairing_contracts(Algebra<F>& a, const CheckOptions& opt);
template <class F>
IdentityReport check_rho_realization(Algebra<F>& a, const CheckOptions& opt);
template <class F>
IdentityReport check_equivariance(Algebra<F>& a, const CheckOptions& opt);
template <class F>
IdentityReport check_rhoD(Algebra<F>& a, const CheckOptions& opt);
template <class F>
IdentityReport check_nz_antipode(Algebra<F>& a, const CheckOptions& opt);
template <class F>
IdentityReport check_basic_rev(NilCoxeter<F>& nc, const CheckOptions& opt);

template <class F>
IdentityReport check_gen_leibniz(NilCoxeter<F>& nc, const GroupElement& v, const GroupElement& w,
                                 const GroupElement& wp, const CheckOptions& opt);
template <class F>
IdentityReport check_tow_inv(NilCoxeter<F>& nc, const GroupElement& w, const GroupElement& v, const CheckOptions& opt);
// Random (v <= w, w') triples plus every tow_inv pair.
template <class F>
IdentityReport check_gen_leibniz_suite(NilCoxeter<F>& nc, const CheckOptions& opt);

template <class F>
IdentityReport check_skew_commutation(NilCoxeter<F>& nc, const GroupElement& w, const GroupElement& v,
                                      const CheckOptions& opt);
template <class F>
IdentityReport check_ofbskew(NilCoxeter<F>& nc, const GroupElement& w1, const GroupElement& w2,
                             const CheckOptions& opt);
template <class F>
IdentityReport check_prep_abstr_comm(NilCoxeter<F>& nc, const GroupElement& w, const CheckOptions& opt);
// bcommuteswithskew over all (w, v), ofbskew over disjoint pairs, prep-abstr-comm over all w.
template <class F>
IdentityReport check_skew_suite(NilCoxeter<F>& nc, const CheckOptions& opt);

template <class F>
struct BracketMatrix {
  std::vector<std::vector<int>> perms;        // S_r in canonical order
  std::vector<std::vector<F>> engine;         // [pi][sigma]
  std::vector<std::vector<int>> formula;      // closed-form sign
  bool match = true;
};

// <y_pi(1)...y_pi(r), y_sigma(1)...y_sigma(r)> with y_i = w_i x_{w_o}.
template <class F>
BracketMatrix<F> bracket_matrix(NilCoxeter<F>& nc, const std::vector<GroupElement>& ordering);

template <class F>
struct CofactorWitness {
  Word y, ybar;
  F lambda;  // y y1 y2 = lambda ybar y2 y1
};

// Searches monomials y, ybar over theta1 u theta2 by ascending total degree.
template <class F>
std::optional<CofactorWitness<F>> find_commuting_cofactors(Algebra<F>& a, const Word& y1, const Word& y2,
                                                           const std::vector<int>& theta1,
                                                           const std::vector<int>& theta2, int degree_cap);

// u = lambda v for some lambda (v != 0), else nullopt.
template <class F>
std::optional<F> proportional(const SVec<F>& u, const SVec<F>& v);

}  // namespace nichols
