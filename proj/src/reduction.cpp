#include "nichols/reduction.hpp"

#include <algorithm>

namespace nichols {

namespace {

bool is_descent(const GroupElement& w, const RootSystem&, int simple_root) {
  return w.act(pos_root(simple_root)) < 0;
}

// s_t(x) for positive roots t, x, as a positive root index; -1 if negative.
int reflected(const RootSystem& rs, int t, int x) {
  SRoot r = rs.reflect(t, pos_root(x));
  return r > 0 ? root_index(r) : -1;
}

}  // namespace

template <class F>
json ReductionResult<F>::to_json(const RootSystem& rs) const {
  json tr = json::array();
  for (const auto& s : trace) {
    json j{{"case", s.tag}, {"prefix", group_to_json(rs, s.prefix)}, {"alpha", s.alpha}};
    if (s.pivot >= 0) j["pivot"] = s.pivot;
    tr.push_back(j);
  }
  return {{"lambda", to_string(lambda)}, {"w", group_to_json(rs, w)}, {"trace", tr}};
}

template <class F>
Reducer<F>::Reducer(const RootSystem& rs, ReductionPolicy policy) : rs_(&rs), policy_(policy) {
  if (!rs.type_a()) throw NotTypeA("monomial reduction is implemented for type A only");
}

template <class F>
F Reducer<F>::step(const GroupElement& w, int alpha, std::vector<ReductionStep>* trace) {
  const RootSystem& rs = *rs_;
  auto refl = [&](int t) { return GroupElement::reflection(rs, t); };
  auto record = [&](int tag, int pivot) {
    if (trace) trace->push_back({tag, w, alpha, pivot});
  };
  const GroupElement ws = w * refl(alpha);
  if (ws.length() != w.length() + 1) {
    record(-1, -1);
    return F(0);
  }
  if (rs.is_simple(alpha)) {
    record(0, -1);
    return F(1);
  }
  if (w.is_identity()) {
    record(-1, -1);
    return F(0);
  }
  const bool traced = trace != nullptr;
  auto key = std::make_pair(w, alpha);
  std::vector<int> c1, c2, desc;
  for (int k = 0; k < rs.rank(); ++k) {
    int b = rs.simple(k);
    if (!is_descent(w, rs, b)) continue;
    desc.push_back(b);
    if (rs.inner(alpha, b) > 0) c1.push_back(b);
    if (rs.inner(alpha, b) == 0) c2.push_back(b);
  }
  auto pick = [&](const std::vector<int>& v) {
    return policy_ == ReductionPolicy::min_root ? *std::min_element(v.begin(), v.end())
                                                : *std::max_element(v.begin(), v.end());
  };
  int tag, pivot;
  if (!c1.empty()) {
    tag = 1;
    pivot = pick(c1);
  } else if (!c2.empty()) {
    tag = 2;
    pivot = pick(c2);
  } else {
    tag = 3;
    pivot = pick(desc);
  }
  if (traced) record(tag, pivot);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  F mu(0);
  if (tag == 1) {
    // x_b x_a = x_g x_b - x_a x_g with a = b + g
    const int beta = pivot, gamma = reflected(rs, beta, alpha);
    const GroupElement w1 = w * refl(beta);
    F t = step(w1, gamma, nullptr);
    if (!is_zero(t)) mu += t * step(w1 * refl(gamma), beta, nullptr);
    t = step(w1, alpha, nullptr);
    if (!is_zero(t)) mu -= t * step(w1 * refl(alpha), gamma, nullptr);
  } else if (tag == 2) {
    const int beta = pivot;
    const GroupElement w1 = w * refl(beta);
    F t = step(w1, alpha, nullptr);
    if (!is_zero(t)) mu = t * step(w1 * refl(alpha), beta, nullptr);
  } else {
    // x_g x_a = x_a x_d + x_d x_g with d = a + g
    const int gamma = pivot, delta = reflected(rs, gamma, alpha);
    if (delta < 0) throw std::logic_error("reduction case 3: alpha + gamma is not a root");
    const GroupElement w1 = w * refl(gamma);
    F t = step(w1, alpha, nullptr);
    if (!is_zero(t)) {
      // the simple beta with (alpha, beta) > 0 > (gamma, beta) is a descent of
      // w1 s_alpha and orthogonal to delta, so case 2 applies there
      const GroupElement u = w1 * refl(alpha);
      int beta = -1;
      for (int k = 0; k < rs.rank(); ++k) {
        int b = rs.simple(k);
        if (rs.inner(alpha, b) > 0 && rs.inner(gamma, b) < 0) beta = b;
      }
      if (beta < 0 || !is_descent(u, rs, beta) || rs.inner(delta, beta) != 0)
        throw std::logic_error("reduction case 3: no orthogonal descent");
      const GroupElement u1 = u * refl(beta);
      if ((u * refl(delta)).length() == u.length() + 1) {
        F s = step(u1, delta, nullptr);
        if (!is_zero(s)) mu += t * s * step(u1 * refl(delta), beta, nullptr);
      }
    }
    t = step(w1, delta, nullptr);
    if (!is_zero(t)) mu += t * step(w1 * refl(delta), gamma, nullptr);
  }
  memo_.emplace(key, mu);
  return mu;
}

template <class F>
ReductionResult<F> Reducer<F>::right(const Word& m, const F& c) {
  const RootSystem& rs = *rs_;
  ReductionResult<F> r{c, GroupElement::identity(rs), {}};
  GroupElement w = GroupElement::identity(rs);
  for (int a : m) {
    if (a < 0 || a >= rs.num_positive()) throw std::invalid_argument("root index out of range");
    if (!is_zero(r.lambda)) r.lambda *= step(w, a, &r.trace);
    w = w * GroupElement::reflection(rs, a);
  }
  r.w = w;
  return r;
}

template <class F>
ReductionResult<F> Reducer<F>::left(const Word& m, const F& c) {
  Word rev(m.rbegin(), m.rend());
  auto r = right(rev, c);
  r.w = r.w.inverse();
  return r;
}

namespace {

template <class F>
std::vector<SVec<F>> ideal_component(Algebra<F>& a, int n, IdealSide side) {
  std::vector<SVec<F>> out;
  if (n == 0) return out;
  Echelon<F> e;
  for (int al = 0; al < a.num_generators(); ++al) {
    if (a.roots().is_simple(al)) continue;
    for (int b = 0; b < a.dim(n - 1); ++b) {
      SVec<F> v = side == IdealSide::right ? a.left_mul_generator(n - 1, al, unit<F>(b))
                                           : a.right_mul_generator(n - 1, unit<F>(b), al);
      if (e.insert(v)) out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

template <class F>
IdealOracleResult<F> ideal_membership_oracle(Algebra<F>& a, const Element<F>& z, IdealSide side) {
  IdealOracleResult<F> r;
  if (z.comp.size() > 1) throw std::invalid_argument("oracle expects a homogeneous element");
  const int n = z.comp.empty() ? 0 : z.comp.begin()->first;
  const RootSystem& rs = a.roots();
  auto J = ideal_component(a, n, side);
  r.quotient_dim = a.dim(n) - static_cast<int>(J.size());
  const SVec<F> v = z.component(n);
  r.member = v.empty() || in_span(v, J, a.dim(n)).has_value();
  std::vector<GroupElement> ws;
  std::vector<SVec<F>> span;
  for (const auto& g : enumerate_group(rs)) {
    if (g.length() != n) continue;
    Word word;
    for (int k : g.reduced_word(rs)) word.push_back(rs.simple(k));
    ws.push_back(g);
    span.push_back(a.project(word));
  }
  const std::size_t k = span.size();
  span.insert(span.end(), J.begin(), J.end());
  if (v.empty()) return r;
  auto coeffs = in_span(v, span, a.dim(n));
  if (!coeffs) throw std::logic_error("nilCoxeter part and ideal do not span B^n");
  for (const auto& [i, c] : *coeffs)
    if (static_cast<std::size_t>(i) < k) r.normal_form[ws[i]] = c;
  return r;
}

template <class F>
std::vector<int> quotient_dimensions(Algebra<F>& a, IdealSide side, int max_degree) {
  std::vector<int> out;
  for (int n = 0; n <= max_degree; ++n) out.push_back(a.dim(n) - static_cast<int>(ideal_component(a, n, side).size()));
  return out;
}

template <class F>
IdentityReport check_reduction(Algebra<F>& a, const CheckOptions& opt) {
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "reduction";
  const int D = std::min(opt.max_degree >= 0 ? opt.max_degree : 6, effective_degree(a, CheckOptions{}));
  rep.parameters = {{"max_degree", D}, {"trials", opt.trials}, {"seed", opt.seed}};
  auto tick = [&](const std::string& name, bool ok, const json& in) {
    auto& it = rep.item(name);
    ++it.checked;
    if (!ok && it.pass) {
      it.pass = false;
      if (rep.pass) rep.counterexample = {{"item", name}, {"inputs", in}};
      rep.pass = false;
    }
  };
  Reducer<F> lo(rs, ReductionPolicy::min_root), hi(rs, ReductionPolicy::max_root);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> letter(0, rs.num_positive() - 1), length(1, std::max(D, 1));
  for (int t = 0; t < opt.trials && D > 0; ++t) {
    Word m(static_cast<std::size_t>(length(rng)));
    for (int& x : m) x = letter(rng);
    const int n = static_cast<int>(m.size());
    const json in{{"monomial", m}};
    auto R = lo.right(m), L = lo.left(m);
    tick("policies agree", hi.right(m).lambda == R.lambda && hi.left(m).lambda == L.lambda, in);
    tick("left w = right w", L.w == R.w, in);
    const auto z = Element<F>::homogeneous(n, a.from_word(m).component(n));
    for (auto side : {IdealSide::right, IdealSide::left}) {
      const auto& X = side == IdealSide::right ? R : L;
      auto o = ideal_membership_oracle(a, z, side);
      F got = o.normal_form.count(X.w) ? o.normal_form.at(X.w) : F(0);
      const std::string s = side == IdealSide::right ? "right" : "left";
      tick(s + " lambda matches oracle", got == X.lambda && o.normal_form.size() <= 1, in);
      tick(s + " membership matches", o.member == is_zero(X.lambda), in);
    }
    ++rep.trials;
  }
  const int top = effective_degree(a, CheckOptions{});
  std::vector<int> poincare(top + 1, 0);
  for (const auto& w : enumerate_group(rs))
    if (w.length() <= top) ++poincare[w.length()];
  for (auto side : {IdealSide::right, IdealSide::left}) {
    auto q = quotient_dimensions(a, side, top);
    tick(std::string(side == IdealSide::right ? "right" : "left") + " quotient dims = Poincare coefficients",
         q == poincare, json{{"quotient", q}, {"poincare", poincare}});
  }
  rep.parameters["poincare"] = poincare;
  return rep;
}

template struct ReductionResult<Rational>;
template struct ReductionResult<ModP>;
template class Reducer<Rational>;
template class Reducer<ModP>;
template IdealOracleResult<Rational> ideal_membership_oracle(Algebra<Rational>&, const Element<Rational>&, IdealSide);
template IdealOracleResult<ModP> ideal_membership_oracle(Algebra<ModP>&, const Element<ModP>&, IdealSide);
template std::vector<int> quotient_dimensions(Algebra<Rational>&, IdealSide, int);
template std::vector<int> quotient_dimensions(Algebra<ModP>&, IdealSide, int);
template IdentityReport check_reduction(Algebra<Rational>&, const CheckOptions&);
template IdentityReport check_reduction(Algebra<ModP>&, const CheckOptions&);

}  // namespace nichols
