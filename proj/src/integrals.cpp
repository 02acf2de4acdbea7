#include "nichols/integrals.hpp"

#include <algorithm>

namespace nichols {

namespace {

template <class F>
int sign_of(const std::optional<F>& lam) {
  if (!lam) return 0;
  if (*lam == F(1)) return 1;
  if (*lam == F(-1)) return -1;
  return 0;
}

}  // namespace

template <class F>
json IntegralCertificate<F>::to_json(Algebra<F>& a) const {
  json ch = json::array();
  for (std::size_t k = 0; k < lambda.size(); ++k) ch.push_back({{"simple", k}, {"lambda", lambda[k]}});
  return {{"degree", degree},
          {"w_degree", group_to_json(a.roots(), w)},
          {"element", element_to_json(a, x)},
          {"character", ch},
          {"eps_rho", eps_rho},
          {"eps_S", eps_S},
          {"eps_Sbar", eps_sbar},
          {"central", central}};
}

template <class F>
bool is_integral(Algebra<F>& a, const Element<F>& z) {
  if (z.is_zero()) return true;
  bool left = true, right = true;
  for (int al = 0; al < a.num_generators(); ++al) {
    auto g = a.generator(al);
    left = left && a.multiply(g, z).is_zero();
    right = right && a.multiply(z, g).is_zero();
  }
  if (left != right) throw std::logic_error("left and right integral criteria disagree");
  return left;
}

template <class F>
IntegralCertificate<F> top_integral(Algebra<F>& a) {
  a.build();
  if (!a.finite()) throw NotFinite("algebra truncated at degree " + std::to_string(a.constructed()) + ": top unknown");
  const int m = a.top_degree();
  const auto& B = a.basis(m);
  if (B.dim() != 1) throw std::logic_error("top component has dimension " + std::to_string(B.dim()));
  const RootSystem& rs = a.roots();
  IntegralCertificate<F> c;
  c.degree = m;
  c.x = Element<F>::homogeneous(m, unit<F>(0));
  c.w = a.wdeg_element(B.wdeg[0]);
  const SVec<F> xv = c.x.component(m);
  c.central = true;
  for (int k = 0; k < rs.rank(); ++k) {
    auto s = GroupElement::simple_reflection(rs, k);
    c.lambda.push_back(sign_of(proportional(a.act(s, c.x).component(m), xv)));
    c.central = c.central && s * c.w == c.w * s;
  }
  // x = eps op(x) and eps = +-1, so eps is also the proportionality factor of op(x)
  c.eps_rho = sign_of(proportional(a.rho(c.x).component(m), xv));
  c.eps_S = sign_of(proportional(a.antipode(c.x).component(m), xv));
  c.eps_sbar = sign_of(proportional(a.s_bar(c.x).component(m), xv));
  return c;
}

template <class F>
IdentityReport certificate_checks(Algebra<F>& a, const IntegralCertificate<F>& cert) {
  IdentityReport rep;
  rep.name = "integral-certificate";
  rep.parameters = {{"degree", cert.degree}};
  auto tally = [&](const std::string& item, bool ok, const json& in = json::object()) {
    ReportItem& it = rep.item(item);
    ++it.checked;
    ++rep.trials;
    if (!ok) {
      it.pass = false;
      if (rep.pass) rep.counterexample = {{"item", item}, {"inputs", in}};
      rep.pass = false;
    }
  };
  const RootSystem& rs = a.roots();
  const int m = cert.degree;
  tally("top one-dimensional", a.dim(m) == 1 && a.dim(m + 1) == 0);
  tally("is integral", is_integral(a, cert.x));
  tally("parity", cert.w.length() % 2 == m % 2);
  for (int l : cert.lambda) tally("character values", l == 1 || l == -1);
  tally("central W-degree", cert.central);
  // the character extends multiplicatively along reduced words
  for (const auto& g : enumerate_group(rs)) {
    int lam = 1;
    for (int k : g.reduced_word(rs)) lam *= cert.lambda[k];
    tally("x ~ gx", a.act(g, cert.x) == cert.x * F(lam), group_to_json(rs, g));
  }
  // center of W, by enumeration
  bool in_center = true;
  for (const auto& g : enumerate_group(rs)) in_center = in_center && g * cert.w == cert.w * g;
  tally("W-degree in center", in_center);
  tally("eps_rho = eps_Sbar", cert.eps_rho != 0 && cert.eps_rho == cert.eps_sbar);
  tally("eps_S = (-1)^m", cert.eps_S == (m % 2 ? -1 : 1));
  tally("wx = (-1)^l(w) x", a.act(cert.w, cert.x) == cert.x * F(cert.w.length() % 2 ? -1 : 1));
  tally("<x,x> != 0", !is_zero(a.pairing(cert.x, cert.x)));
  for (int n = 1; n <= m; ++n)
    for (int b = 0; b < a.dim(n); ++b) {
      auto z = Element<F>::homogeneous(n, unit<F>(b));
      tally("annihilated by positive degrees",
            a.multiply(z, cert.x).is_zero() && a.multiply(cert.x, z).is_zero(), element_to_json(a, z));
    }
  return rep;
}

template <class F>
IdentityReport invariance_suite(NilCoxeter<F>& nc, const IntegralCertificate<F>& cert,
                                const std::vector<std::vector<GroupElement>>& order_two, const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "invariance";
  rep.parameters = {{"trials", opt.trials}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed);
  const Element<F>& x = cert.x;
  const int m = cert.degree;
  const auto& wo = nc.longest();
  const int lwo = wo.length();
  const F sgn_lwo(lwo % 2 ? -1 : 1);
  auto ej = [&](const Element<F>& z) { return element_to_json(a, z); };
  auto tally = [&](const std::string& item, bool ok, const std::function<json()>& in) {
    ReportItem& it = rep.item(item);
    ++it.checked;
    ++rep.trials;
    if (!ok) {
      it.pass = false;
      if (rep.pass) rep.counterexample = {{"item", item}, {"inputs", in()}};
      rep.pass = false;
    }
  };
  auto eps_of = [&](const GroupElement& g) {
    return F(sign_of(proportional(a.act(g, x).component(m), x.component(m))));
  };

  for (int al = 0; al < a.num_generators(); ++al) {
    auto xa = a.generator(al);
    auto d = a.right_derivative(x, al);
    tally("inv1", a.multiply(d, xa) == x, [&] { return json{{"alpha", al}}; });
    F eps = eps_of(GroupElement::reflection(rs, al));
    tally("inv2", a.multiply(xa, d) * (-eps) == x, [&] { return json{{"alpha", al}}; });
  }
  // prep-inv on the right annihilator of x_alpha
  for (int t = 0; t < opt.trials; ++t) {
    int al = std::uniform_int_distribution<int>(0, a.num_generators() - 1)(rng);
    int n = std::uniform_int_distribution<int>(0, m)(rng);
    SparseMatrix<F> mm(a.dim(n + 1), a.dim(n));
    for (int b = 0; b < a.dim(n); ++b)
      for (const auto& [r, c] : a.right_mul_generator(n, unit<F>(b), al)) mm.set(r, b, c);
    auto K = kernel_basis(mm);
    if (K.empty()) continue;
    auto z = Element<F>::homogeneous(n, random_combination(K, rng));
    tally("prep-inv", a.multiply(a.right_derivative(z, al), a.generator(al)) == z,
          [&] { return json{{"alpha", al}, {"z", ej(z)}}; });
  }
  const F eps_wo = eps_of(wo);
  for (const auto& w : nc.group()) {
    auto y = nc.y_element(w);
    auto d = a.right_derivative(x, y);
    auto in = [&] { return json{{"w", group_to_json(rs, w)}}; };
    tally("inv3", a.multiply(d, y) == x, in);
    if (w * wo == wo * w) {
      tally("inv4", a.multiply(y, d) * (sgn_lwo * eps_wo) == x, in);
      tally("hypo-bracket", !is_zero(a.pairing(d, d)), in);
    }
  }
  if (order_two.empty()) rep.notices.push_back("no disjoint system of order two: inv5 skipped");
  for (const auto& D : order_two) {
    if (D.size() != 2) continue;
    if (2 * lwo > m) {
      rep.notices.push_back("y1 y2 exceeds the top degree: inv5 skipped");
      break;
    }
    for (int o = 0; o < 2; ++o) {
      auto y1 = nc.y_element(D[o]), y2 = nc.y_element(D[1 - o]);
      auto y12 = a.multiply(y1, y2), y21 = a.multiply(y2, y1);
      auto d = a.right_derivative(x, y12);
      auto in = [&] { return json{{"w1", group_to_json(rs, D[o])}, {"w2", group_to_json(rs, D[1 - o])}}; };
      tally("inv5 first", a.multiply(y12, d) * sgn_lwo == x, in);
      tally("inv5 second", a.multiply(d, y21) == x, in);
    }
  }
  // Nicholsint: derivatives of x by nonzero y never vanish; rigidity
  for (int t = 0; t < 50; ++t) {
    int q = std::uniform_int_distribution<int>(1, m)(rng);
    auto y = a.random_homogeneous(q, rng);
    if (y.is_zero()) continue;
    auto in = [&] { return json{{"y", ej(y)}}; };
    auto dr = a.right_derivative(x, y);
    auto dl = a.left_derivative(y, x);
    tally("Nicholsint nonvanishing", !dr.is_zero() && !dl.is_zero(), in);
    F c = random_scalar<F>(rng);
    auto xp = x * c;
    bool same = a.left_derivative(y, xp) == dl;
    tally("Nicholsint rigidity", same == (xp == x), in);
    auto other = a.random_homogeneous(m, rng);
    same = a.right_derivative(other, y) == dr;
    tally("Nicholsint rigidity", same == (other == x), in);
  }
  // abstract commutativity on instances where x1 y x2 x3 is a nonzero integral
  int hits = 0;
  const int room = m - lwo;
  if (room >= 0) {
    std::map<std::pair<int, std::vector<int>>, std::vector<SVec<F>>> kcache;
    for (int t = 0; t < opt.trials; ++t) {
      const auto& G = nc.group();
      auto w = G[std::uniform_int_distribution<std::size_t>(0, G.size() - 1)(rng)];
      auto T = t_set(rs, w);
      GroupElement g = w * wo * w.inverse();
      int d1 = std::uniform_int_distribution<int>(0, room)(rng);
      int d2 = std::uniform_int_distribution<int>(0, room - d1)(rng);
      int d3 = room - d1 - d2;
      auto k1 = derivative_kernel(a, d1, T), k2 = derivative_kernel(a, d2, T, &g), k3 = derivative_kernel(a, d3, T);
      auto x1 = Element<F>::homogeneous(d1, random_combination(k1, rng));
      auto x2 = Element<F>::homogeneous(d2, random_combination(k2, rng));
      auto x3 = Element<F>::homogeneous(d3, random_combination(k3, rng));
      auto y = nc.y_element(w);
      auto lhs = a.multiply(a.multiply(a.multiply(x1, y), x2), x3);
      if (lhs.is_zero() || !is_integral(a, lhs)) continue;
      ++hits;
      auto rhs = a.multiply(a.multiply(a.multiply(x1, a.act(g, x2)), y), x3);
      tally(w * wo == wo * w ? "abstr-comm2" : "abstr-comm", lhs == rhs, [&] {
        return json{{"w", group_to_json(rs, w)}, {"x1", ej(x1)}, {"x2", ej(x2)}, {"x3", ej(x3)}};
      });
    }
  }
  if (hits == 0) rep.notices.push_back("no nonzero-integral instance sampled for abstract commutativity");
  return rep;
}

template <class F>
MonomialLift lift_monomial_to_integral(Algebra<F>& a, const Element<F>& z) {
  if (z.is_zero()) throw std::invalid_argument("lift of the zero element");
  a.build();
  if (!a.finite()) throw NotFinite("lift needs the top degree");
  const int d = z.comp.begin()->first;
  const SVec<F> z0 = z.component(d);
  MonomialLift out;
  for (int side = 0; side < 2; ++side) {
    SVec<F> cur = z0;
    Word acc;
    for (int n = d; n < a.top_degree(); ++n) {
      bool found = false;
      for (int al = 0; al < a.num_generators() && !found; ++al) {
        SVec<F> next = side == 0 ? a.left_mul_generator(n, al, cur) : a.right_mul_generator(n, cur, al);
        if (next.empty()) continue;
        cur = std::move(next);
        acc.push_back(al);
        found = true;
      }
      if (!found) throw std::logic_error("nonzero element below the top is an integral");
    }
    if (side == 0) {
      std::reverse(acc.begin(), acc.end());
      out.left = acc;
    } else {
      out.right = acc;
    }
  }
  auto l = a.multiply(a.from_word(out.left), z), r = a.multiply(z, a.from_word(out.right));
  if (l.is_zero() || r.is_zero() || !is_integral(a, l) || !is_integral(a, r))
    throw std::logic_error("lifted monomial is not a nonzero integral");
  return out;
}

std::vector<int> nonsimple_roots(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (!rs.is_simple(i)) out.push_back(i);
  return out;
}

template <class F>
SubalgebraState<F> subalgebra_build(Algebra<F>& a, const std::vector<int>& theta) {
  a.build();
  const int D = a.finite() ? a.top_degree() + 1 : a.constructed();
  SubalgebraState<F> s;
  s.theta = theta;
  std::sort(s.theta.begin(), s.theta.end());
  s.spaces = a.generated_subspaces(s.theta, D);
  while (!s.spaces.empty() && s.spaces.back().empty()) s.spaces.pop_back();
  if (static_cast<int>(s.spaces.size()) - 1 >= D && !a.finite())
    throw CapExceeded("subalgebra not closed below the degree cap " + std::to_string(D));
  s.top = static_cast<int>(s.spaces.size()) - 1;
  return s;
}

template <class F>
std::vector<SVec<F>> hypothetical_space(Algebra<F>& a, int n, const std::vector<int>& theta, HypoSide side) {
  const int d = a.dim(n);
  if (d == 0) return {};
  const RootSystem& rs = a.roots();
  const int dp = n > 0 ? a.dim(n - 1) : 0, dn = a.dim(n + 1);
  const int r = rs.rank(), t = static_cast<int>(theta.size());
  const bool L = side != HypoSide::right, R = side != HypoSide::left;
  SparseMatrix<F> m(r * dp + t * dn * 2, d);
  for (int b = 0; b < d; ++b) {
    SVec<F> v = unit<F>(b);
    if (n > 0)
      for (int k = 0; k < r; ++k)
        for (const auto& [c, x] : a.right_derivative(n, v, rs.simple(k))) m.set(k * dp + c, b, x);
    for (int j = 0; j < t; ++j) {
      if (L)
        for (const auto& [c, x] : a.left_mul_generator(n, theta[j], v)) m.set(r * dp + j * dn + c, b, x);
      if (R)
        for (const auto& [c, x] : a.right_mul_generator(n, v, theta[j])) m.set(r * dp + (t + j) * dn + c, b, x);
    }
  }
  return kernel_basis(m);
}

template <class F>
IdentityReport hypothetical_checks(NilCoxeter<F>& nc, const SubalgebraState<F>& sub) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "hypothetical";
  rep.parameters = {{"theta", sub.theta}, {"subalgebra_top", sub.top}};
  auto tally = [&](const std::string& item, bool ok, const json& in = json::object()) {
    ReportItem& it = rep.item(item);
    ++it.checked;
    ++rep.trials;
    if (!ok) {
      it.pass = false;
      if (rep.pass) rep.counterexample = {{"item", item}, {"inputs", in}};
      rep.pass = false;
    }
  };
  a.build();
  if (!a.finite()) throw NotFinite("hypothetical checks need a finite algebra");
  const int m = a.top_degree();
  const auto& top = sub.top_space();
  tally("subalgebra top one-dimensional", top.size() == 1);

  // hypothetical spaces over all degrees; left, right and two-sided agree
  int total = 0;
  for (int n = 0; n <= m; ++n) {
    auto H = hypothetical_space(a, n, sub.theta, HypoSide::both);
    auto HL = hypothetical_space(a, n, sub.theta, HypoSide::left);
    auto HR = hypothetical_space(a, n, sub.theta, HypoSide::right);
    total += static_cast<int>(H.size());
    tally("one-sided hypothetical elements are two-sided", HL.size() == H.size() && HR.size() == H.size(),
          json{{"degree", n}});
    if (n == sub.top)
      tally("hypothetical space equals subalgebra top",
            H.size() == top.size() && (top.empty() || in_span(top[0], H, a.dim(n))), json{{"degree", n}});
    else
      tally("hypothetical space equals subalgebra top", H.empty(), json{{"degree", n}});
  }
  tally("hypothetical space one-dimensional", total == 1);
  if (top.size() != 1) return rep;

  auto P = Element<F>::homogeneous(sub.top, top[0]);
  tally("P involves only theta", a.involves_only(P, sub.theta));
  bool dv = true;
  for (int k = 0; k < rs.rank(); ++k) dv = dv && a.right_derivative(P, rs.simple(k)).is_zero();
  tally("derivative vanishing", dv);
  bool lv = true, rv = true;
  for (int al : sub.theta) {
    lv = lv && a.multiply(a.generator(al), P).is_zero();
    rv = rv && a.multiply(P, a.generator(al)).is_zero();
  }
  tally("left vanishing", lv);
  tally("right vanishing", rv);
  auto rP = a.rho(P);
  bool rho_right = true;
  for (int al : sub.theta) rho_right = rho_right && a.multiply(rP, a.generator(al)).is_zero();
  tally("rho(P) is right hypothetical", rho_right);

  const auto& xwo = nc.embed(nc.longest());
  auto x = a.multiply(P, xwo), xl = a.multiply(xwo, P);
  tally("lift-with-xwo", !x.is_zero() && !xl.is_zero());
  if (!rs.type_a()) {
    rep.notices.push_back("root system is not of type A: main-hypo and hypo-II skipped");
    return rep;
  }
  tally("main-hypo right", !x.is_zero() && is_integral(a, x));
  tally("main-hypo left", !xl.is_zero() && is_integral(a, xl));
  tally("hypo-II P = (x)<-D_{w_o}", a.right_derivative(x, xwo) == P);
  tally("<P,P> != 0", !is_zero(a.pairing(P, P)));

  // graded one-sided ideals of the subalgebra: annihilated components
  for (int n = 0; n <= sub.top; ++n) {
    const auto& Sn = sub.spaces[n];
    const int k = static_cast<int>(Sn.size());
    const int dn = a.dim(n + 1);
    const int t = static_cast<int>(sub.theta.size());
    for (int side = 0; side < 2; ++side) {
      SparseMatrix<F> mm(t * dn, k);
      for (int j = 0; j < k; ++j)
        for (int q = 0; q < t; ++q) {
          auto img = side == 0 ? a.left_mul_generator(n, sub.theta[q], Sn[j]) : a.right_mul_generator(n, Sn[j], sub.theta[q]);
          for (const auto& [c, v] : img) mm.set(q * dn + c, j, v);
        }
      const int ann = static_cast<int>(kernel_basis(mm).size());
      const std::string item = side == 0 ? "one-dimensional left ideals" : "one-dimensional right ideals";
      tally(item, n == sub.top ? ann == 1 : ann == 0, json{{"degree", n}, {"annihilated", ann}});
    }
  }
  return rep;
}

#define NICHOLS_INSTANTIATE(F)                                                                                      \
  template struct IntegralCertificate<F>;                                                                           \
  template bool is_integral(Algebra<F>&, const Element<F>&);                                                        \
  template IntegralCertificate<F> top_integral(Algebra<F>&);                                                        \
  template IdentityReport certificate_checks(Algebra<F>&, const IntegralCertificate<F>&);                           \
  template IdentityReport invariance_suite(NilCoxeter<F>&, const IntegralCertificate<F>&,                           \
                                           const std::vector<std::vector<GroupElement>>&, const CheckOptions&);     \
  template MonomialLift lift_monomial_to_integral(Algebra<F>&, const Element<F>&);                                  \
  template SubalgebraState<F> subalgebra_build(Algebra<F>&, const std::vector<int>&);                               \
  template std::vector<SVec<F>> hypothetical_space(Algebra<F>&, int, const std::vector<int>&, HypoSide);            \
  template IdentityReport hypothetical_checks(NilCoxeter<F>&, const SubalgebraState<F>&);

NICHOLS_INSTANTIATE(Rational)
NICHOLS_INSTANTIATE(ModP)

}  // namespace nichols
