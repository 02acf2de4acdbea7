#include "nichols/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nichols {

ReportItem& IdentityReport::item(const std::string& n) {
  for (auto& it : items)
    if (it.name == n) return it;
  items.push_back({n, true, 0, ""});
  return items.back();
}

void IdentityReport::absorb(const IdentityReport& sub) {
  for (const auto& it : sub.items) {
    ReportItem& mine = item(it.name);
    mine.pass = mine.pass && it.pass;
    mine.checked += it.checked;
    if (mine.note.empty()) mine.note = it.note;
  }
  trials += sub.trials;
  if (!sub.pass && pass) counterexample = sub.counterexample;
  pass = pass && sub.pass;
  for (const auto& n : sub.notices)
    if (std::find(notices.begin(), notices.end(), n) == notices.end()) notices.push_back(n);
}

json IdentityReport::to_json() const {
  json its = json::array();
  for (const auto& it : items) {
    json j{{"name", it.name}, {"status", it.pass ? "pass" : "fail"}, {"checked", it.checked}};
    if (!it.note.empty()) j["note"] = it.note;
    its.push_back(j);
  }
  json out{{"identity", name}, {"parameters", parameters}, {"trials", trials}, {"status", pass ? "pass" : "fail"},
           {"items", its}};
  if (!notices.empty()) out["notices"] = notices;
  if (!pass) out["counterexample"] = counterexample;
  return out;
}

namespace {

template <class F>
class Recorder {
 public:
  Recorder(Algebra<F>& a, IdentityReport& r) : a_(a), r_(r) {}

  bool equal(const std::string& item, const Element<F>& lhs, const Element<F>& rhs,
             const std::function<json()>& inputs) {
    const bool ok = lhs == rhs;
    if (!ok && r_.pass)
      r_.counterexample = {{"item", item},
                           {"inputs", inputs()},
                           {"lhs", element_to_json(a_, lhs)},
                           {"rhs", element_to_json(a_, rhs)}};
    return tally(item, ok);
  }

  bool holds(const std::string& item, bool ok, const std::function<json()>& inputs) {
    if (!ok && r_.pass) r_.counterexample = {{"item", item}, {"inputs", inputs()}};
    return tally(item, ok);
  }

 private:
  bool tally(const std::string& item, bool ok) {
    ReportItem& it = r_.item(item);
    ++it.checked;
    ++r_.trials;
    if (!ok) {
      it.pass = false;
      r_.pass = false;
    }
    return ok;
  }

  Algebra<F>& a_;
  IdentityReport& r_;
};

// z <-> (z)<-D_xi, cached per basis element.
template <class F>
class RightOp {
 public:
  RightOp(Algebra<F>& a, Element<F> xi) : a_(a), xi_(std::move(xi)) {}

  Element<F> operator()(const Element<F>& z) {
    Element<F> r;
    for (const auto& [n, v] : z.comp)
      for (const auto& [b, c] : v) r += image(n, b) * c;
    return r;
  }

 private:
  const Element<F>& image(int n, int b) {
    auto key = std::make_pair(n, b);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, a_.right_derivative(Element<F>::homogeneous(n, unit<F>(b)), xi_)).first;
    return it->second;
  }

  Algebra<F>& a_;
  Element<F> xi_;
  std::map<std::pair<int, int>, Element<F>> cache_;
};

template <class F>
Element<F> basis_element(int n, int b) {
  return Element<F>::homogeneous(n, unit<F>(b));
}

template <class F>
json ej(Algebra<F>& a, const Element<F>& z) {
  return element_to_json(a, z);
}

int degree_of(const auto& z) { return z.comp.empty() ? 0 : z.comp.rbegin()->first; }

GroupElement random_group_element(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(0, rs.rank() - 1);
  std::uniform_int_distribution<int> len(0, 2 * rs.num_positive());
  std::vector<int> w;
  for (int i = len(rng); i > 0; --i) w.push_back(k(rng));
  return GroupElement::from_word(rs, w);
}

template <class F>
std::vector<std::vector<F>> matmul(const std::vector<std::vector<F>>& x, const std::vector<std::vector<F>>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<F>> r(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(x[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

std::vector<int> random_subset(int n, int maxsize, std::mt19937_64& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<int> sz(1, std::max(1, std::min(n, maxsize)));
  all.resize(static_cast<std::size_t>(sz(rng)));
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

template <class F>
int pick_degree(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) return -1;
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

template <class F>
int effective_degree(Algebra<F>& a, const CheckOptions& opt) {
  a.build();
  int d = a.finite() ? a.top_degree() : a.constructed();
  if (opt.max_degree >= 0) d = std::min(d, opt.max_degree);
  return d;
}

template <class F>
std::vector<SVec<F>> derivative_kernel(Algebra<F>& a, int n, const std::vector<int>& theta, const GroupElement* twist) {
  const int d = a.dim(n);
  if (n == 0) return d ? std::vector<SVec<F>>{unit<F>(0)} : std::vector<SVec<F>>{};
  const int dp = a.dim(n - 1);
  const int blocks = static_cast<int>(theta.size()) * (twist ? 2 : 1);
  SparseMatrix<F> m(blocks * dp, d);
  for (int b = 0; b < d; ++b) {
    int blk = 0;
    for (int pass = 0; pass < (twist ? 2 : 1); ++pass) {
      SVec<F> v = unit<F>(b);
      if (pass == 1) v = a.act(*twist, basis_element<F>(n, b)).component(n);
      for (int al : theta) {
        for (const auto& [c, x] : a.right_derivative(n, v, al)) m.set(blk * dp + c, b, x);
        ++blk;
      }
    }
  }
  return kernel_basis(m);
}

template <class F>
std::vector<SVec<F>> left_derivative_kernel(Algebra<F>& a, int n, const std::vector<int>& theta) {
  const int d = a.dim(n);
  if (n == 0) return d ? std::vector<SVec<F>>{unit<F>(0)} : std::vector<SVec<F>>{};
  const int dp = a.dim(n - 1);
  SparseMatrix<F> m(static_cast<int>(theta.size()) * dp, d);
  for (int b = 0; b < d; ++b)
    for (std::size_t k = 0; k < theta.size(); ++k)
      for (const auto& [c, x] : a.left_derivative(n, theta[k], unit<F>(b)))
        m.set(static_cast<int>(k) * dp + c, b, x);
  return kernel_basis(m);
}

template <class F>
std::vector<SVec<F>> intersect(const std::vector<SVec<F>>& u, const std::vector<SVec<F>>& v, int dim) {
  // sum a_i u_i - sum b_j v_j = 0
  const int nu = static_cast<int>(u.size()), nv = static_cast<int>(v.size());
  SparseMatrix<F> m(dim, nu + nv);
  for (int i = 0; i < nu; ++i)
    for (const auto& [c, x] : u[i]) m.set(c, i, x);
  for (int j = 0; j < nv; ++j)
    for (const auto& [c, x] : v[j]) m.set(c, nu + j, -x);
  Echelon<F> e;
  std::vector<SVec<F>> out;
  for (const auto& k : kernel_basis(m)) {
    SVec<F> w;
    for (const auto& [i, a] : k)
      if (i < nu) axpy_inplace(w, a, u[i]);
    if (!w.empty() && e.insert(w)) out.push_back(std::move(w));
  }
  return out;
}

template <class F>
SVec<F> random_combination(const std::vector<SVec<F>>& span, std::mt19937_64& rng) {
  SVec<F> v;
  for (const auto& s : span) {
    F c = random_scalar<F>(rng);
    if (!is_zero(c)) axpy_inplace(v, c, s);
  }
  return v;
}

template <class F>
std::optional<F> proportional(const SVec<F>& u, const SVec<F>& v) {
  if (v.empty()) return std::nullopt;
  if (u.empty()) return F(0);
  if (u.size() != v.size() || u.front().first != v.front().first) return std::nullopt;
  F lam = u.front().second / v.front().second;
  if (scaled(v, lam) == u) return lam;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

template <class F>
IdentityReport check_dual_paths(Algebra<F>& a, const CheckOptions& opt) {
  IdentityReport rep;
  rep.name = "dual-paths";
  a.build();
  int D = opt.max_degree >= 0 ? opt.max_degree : 4;
  D = std::min(D, a.finite() ? a.top_degree() + 1 : a.constructed());
  rep.parameters = {{"max_degree", D}};
  json dims = json::array();
  for (int n = 0; n <= D; ++n) {
    const int d = a.dim(n), s = a.symmetrizer_rank(n);
    dims.push_back({{"degree", n}, {"incremental", d}, {"symmetrizer", s}});
    auto& it = rep.item("dim = symmetrizer rank");
    ++it.checked;
    if (d != s && rep.pass) {
      it.pass = rep.pass = false;
      rep.counterexample = {{"item", it.name}, {"inputs", {{"degree", n}}}, {"lhs", d}, {"rhs", s}};
    }
  }
  rep.parameters["dims"] = dims;
  rep.trials = D + 1;
  return rep;
}

template <class F>
IdentityReport check_orthonormality(NilCoxeter<F>& nc) {
  Algebra<F>& a = nc.algebra();
  IdentityReport rep;
  rep.name = "orthonormality";
  Recorder<F> rec(a, rep);
  const auto& g = nc.group();
  for (const auto& u : g)
    for (const auto& v : g) {
      const F want(u == v.inverse() ? 1 : 0);
      rec.holds("<x_u, x_v> = delta(u, v^-1)", a.pairing(nc.embed(u), nc.embed(v)) == want, [&] {
        return json{{"u", group_to_json(a.roots(), u)}, {"v", group_to_json(a.roots(), v)}};
      });
    }
  return rep;
}

template <class F>
IdentityReport check_pairing_contracts(Algebra<F>& a, const CheckOptions& opt) {
  IdentityReport rep;
  rep.name = "pairing-contracts";
  Recorder<F> rec(a, rep);
  const int D = effective_degree(a, opt);
  rep.parameters = {{"max_degree", D}};
  for (int n = 1; n <= D; ++n)
    for (int q = 1; q <= n; ++q)
      for (int s = 0; s < a.dim(n); ++s) {
        auto xs = basis_element<F>(n, s);
        for (int j = 0; j < a.dim(q); ++j) {
          auto y = basis_element<F>(q, j);
          auto d = a.right_derivative(xs, y);
          auto dl = a.left_derivative(y, xs);
          for (int i = 0; i < a.dim(n - q); ++i) {
            auto x = basis_element<F>(n - q, i);
            auto in = [&] { return json{{"x*", ej(a, xs)}, {"y", ej(a, y)}, {"x", ej(a, x)}}; };
            rec.holds("right", a.pairing(xs, a.multiply(y, x)) == a.pairing(d, x), in);
            rec.holds("left", a.pairing(a.multiply(x, y), xs) == a.pairing(x, dl), in);
          }
        }
      }
  return rep;
}

template <class F>
IdentityReport check_rho_realization(Algebra<F>& a, const CheckOptions& opt) {
  IdentityReport rep;
  rep.name = "rho-realization";
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int N = a.num_generators();
  int D = effective_degree(a, opt);
  // keep the word space small enough for a dense kernel
  long long words = 1;
  int n_max = 0;
  for (int n = 1; n <= D; ++n) {
    words *= N;
    if (words > 5000) break;
    n_max = n;
  }
  rep.parameters = {{"max_degree", n_max}, {"trials", opt.trials}, {"seed", opt.seed}};
  for (int n = 2; n <= n_max; ++n) {
    std::vector<Word> all;
    Word w(n, 0);
    while (true) {
      all.push_back(w);
      int i = n - 1;
      while (i >= 0 && ++w[i] == N) w[i--] = 0;
      if (i < 0) break;
    }
    SparseMatrix<F> m(a.dim(n), static_cast<int>(all.size()));
    for (std::size_t c = 0; c < all.size(); ++c)
      for (const auto& [r, x] : a.project(all[c])) m.set(r, static_cast<int>(c), x);
    auto ker = kernel_basis(m);
    if (ker.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, ker.size() - 1);
    for (int t = 0; t < opt.trials; ++t) {
      SVec<F> k;
      for (int j = 0; j < 3; ++j) axpy_inplace(k, random_scalar<F>(rng), ker[pick(rng)]);
      SVec<F> img;
      for (const auto& [c, x] : k) {
        Word r = all[c];
        std::reverse(r.begin(), r.end());
        axpy_inplace(img, x, a.project(r));
      }
      rec.holds("reversed kernel element", img.empty(), [&] {
        json terms = json::array();
        for (const auto& [c, x] : k) terms.push_back({{"word", all[c]}, {"coeff", to_string(x)}});
        return json{{"degree", n}, {"tensor", terms}};
      });
    }
  }
  return rep;
}

template <class F>
IdentityReport check_equivariance(Algebra<F>& a, const CheckOptions& opt) {
  IdentityReport rep;
  rep.name = "equivariance";
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);
  rep.parameters = {{"max_degree", D}, {"trials", opt.trials}, {"seed", opt.seed}};
  const RootSystem& rs = a.roots();
  for (int t = 0; t < opt.trials; ++t) {
    auto g = random_group_element(rs, rng);
    int q = pick_degree<F>(rng, 1, std::min(3, D));
    if (q < 0) break;
    int n = pick_degree<F>(rng, q, D);
    auto y = a.random_homogeneous(q, rng);
    auto f = a.random_homogeneous(n, rng);
    auto gi = g.inverse();
    auto in = [&] { return json{{"g", group_to_json(rs, g)}, {"y", ej(a, y)}, {"z", ej(a, f)}}; };
    rec.equal("right", a.right_derivative(f, a.act(g, y)), a.act(g, a.right_derivative(a.act(gi, f), y)), in);
    rec.equal("left", a.left_derivative(a.act(g, y), f), a.act(g, a.left_derivative(y, a.act(gi, f))), in);
  }
  return rep;
}

template <class F>
IdentityReport check_rhoD(Algebra<F>& a, const CheckOptions& opt) {
  IdentityReport rep;
  rep.name = "rhoD";
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);
  rep.parameters = {{"max_degree", D}, {"trials", opt.trials}, {"seed", opt.seed}, {"exhaustive", opt.exhaustive}};
  const int N = a.num_generators();
  const RootSystem& rs = a.roots();

  // xi = x_alpha: (rho z)<-D_alpha = s_alpha rho((z)<-D_alpha), every basis z
  for (int al = 0; al < N; ++al) {
    auto s = GroupElement::reflection(rs, al);
    for (int n = 1; n <= D; ++n)
      for (int b = 0; b < a.dim(n); ++b) {
        auto z = basis_element<F>(n, b);
        rec.equal("generator", a.right_derivative(a.rho(z), al), a.act(s, a.rho(a.right_derivative(z, al))),
                  [&] { return json{{"alpha", al}, {"z", ej(a, z)}}; });
      }
  }
  // xi = 1
  for (int n = 0; n <= std::min(D, 2); ++n)
    for (int b = 0; b < a.dim(n); ++b) {
      auto z = basis_element<F>(n, b);
      rec.equal("unit", a.right_derivative(a.rho(z), a.one()), a.rho(a.right_derivative(z, a.one())),
                [&] { return json{{"z", ej(a, z)}}; });
    }
  // kernel of <-D_alpha is rho-stable
  for (int al = 0; al < N; ++al)
    for (int n = 1; n <= D; ++n) {
      auto K = derivative_kernel(a, n, {al});
      bool ok = true;
      for (const auto& k : K) {
        auto r = a.rho(Element<F>::homogeneous(n, k)).component(n);
        if (!in_span(r, K, a.dim(n))) ok = false;
      }
      rec.holds("vanish_rho", ok, [&] { return json{{"alpha", al}, {"degree", n}}; });
    }
  // random W-homogeneous xi against all z
  for (int t = 0; t < opt.trials; ++t) {
    int q = pick_degree<F>(rng, 1, std::min(3, D));
    if (q < 0) break;
    const auto& Bq = a.basis(q);
    int gid = Bq.wdeg[std::uniform_int_distribution<int>(0, Bq.dim() - 1)(rng)];
    auto xi = a.random_w_homogeneous(q, gid, rng);
    if (xi.is_zero()) continue;
    const GroupElement& g = a.wdeg_element(gid);
    const GroupElement gi = g.inverse();
    RightOp<F> Dxi(a, xi), Dsbar(a, a.s_bar(xi)), Dsinv(a, a.antipode_inv(xi));
    const auto Sxi = a.antipode(xi);
    auto run = [&](const Element<F>& z) {
      auto in = [&] { return json{{"xi", ej(a, xi)}, {"z", ej(a, z)}}; };
      rec.equal("first", Dxi(a.antipode(z)), a.act(gi, a.antipode(a.left_derivative(Sxi, z))), in);
      rec.equal("second", a.left_derivative(xi, a.antipode_inv(z)), a.act(g, a.antipode_inv(Dsinv(z))), in);
      rec.equal("third", Dxi(a.rho(z)), a.act(gi, a.rho(Dsbar(z))), in);
    };
    if (opt.exhaustive) {
      for (int n = q; n <= D; ++n)
        for (int b = 0; b < a.dim(n); ++b) run(basis_element<F>(n, b));
    } else {
      int n = pick_degree<F>(rng, q, D);
      run(a.random_homogeneous(n, rng));
    }
  }
  return rep;
}

template <class F>
IdentityReport check_nz_antipode(Algebra<F>& a, const CheckOptions& opt) {
  IdentityReport rep;
  rep.name = "nz-antipode";
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);
  const long long e = exponent(a.roots());
  rep.parameters = {{"max_degree", D}, {"exponent", e}, {"trials", opt.trials}, {"seed", opt.seed}};

  auto sign_of = [](const GroupElement& g) { return F(g.length() % 2 ? -1 : 1); };
  auto check = [&](const Element<F>& xi, int gid) {
    const GroupElement& g = a.wdeg_element(gid);
    auto in = [&] { return json{{"xi", ej(a, xi)}}; };
    rec.equal("inverse", a.antipode_inv(xi), a.act(g.inverse(), a.antipode(xi)) * sign_of(g), in);
    rec.equal("square", a.antipode(a.antipode(xi)), a.act(g, xi) * sign_of(g), in);
  };
  for (int n = 0; n <= D; ++n) {
    const auto& B = a.basis(n);
    for (int b = 0; b < B.dim(); ++b) check(basis_element<F>(n, b), B.wdeg[b]);
  }
  for (int t = 0; t < opt.trials; ++t) {
    int n = pick_degree<F>(rng, 1, D);
    if (n < 0) break;
    const auto& B = a.basis(n);
    int gid = B.wdeg[std::uniform_int_distribution<int>(0, B.dim() - 1)(rng)];
    auto xi = a.random_w_homogeneous(n, gid, rng);
    if (!xi.is_zero()) check(xi, gid);
  }
  // S^{2e} = id per degree
  for (int n = 0; n <= D; ++n) {
    auto S = a.antipode_matrix(n);
    const std::size_t d = S.size();
    std::vector<std::vector<F>> acc(d, std::vector<F>(d, F(0)));
    for (std::size_t i = 0; i < d; ++i) acc[i][i] = F(1);
    auto base = S;
    for (long long k = 2 * e; k > 0; k >>= 1) {
      if (k & 1) acc = matmul(acc, base);
      if (k > 1) base = matmul(base, base);
    }
    bool id = true;
    for (std::size_t i = 0; i < d && id; ++i)
      for (std::size_t j = 0; j < d && id; ++j) id = acc[i][j] == F(i == j ? 1 : 0);
    rec.holds("power_2e", id, [&] { return json{{"degree", n}, {"power", 2 * e}}; });
  }
  return rep;
}

template <class F>
IdentityReport check_basic_rev(NilCoxeter<F>& nc, const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  IdentityReport rep;
  rep.name = "basic-rev";
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);
  const int N = a.num_generators();
  const RootSystem& rs = a.roots();
  rep.parameters = {{"max_degree", D}, {"trials", opt.trials}, {"seed", opt.seed}};
  auto theta_json = [](const std::vector<int>& t) { return json(t); };
  auto elem = [](int n, const SVec<F>& v) { return Element<F>::homogeneous(n, v); };

  // starts/ends spaces over a set, cached
  std::map<std::pair<int, std::vector<int>>, std::vector<SVec<F>>> starts, ends;
  auto starts_set = [&](int n, const std::vector<int>& th) -> const std::vector<SVec<F>>& {
    auto key = std::make_pair(n, th);
    auto it = starts.find(key);
    if (it == starts.end()) {
      std::vector<SVec<F>> sp;
      for (int g : th)
        for (auto& x : a.starts_with_space(n, g)) sp.push_back(std::move(x));
      it = starts.emplace(key, std::move(sp)).first;
    }
    return it->second;
  };
  auto ends_set = [&](int n, const std::vector<int>& th) -> const std::vector<SVec<F>>& {
    auto key = std::make_pair(n, th);
    auto it = ends.find(key);
    if (it == ends.end()) {
      std::vector<SVec<F>> sp;
      for (int g : th)
        for (auto& x : a.ends_with_space(n, g)) sp.push_back(std::move(x));
      it = ends.emplace(key, std::move(sp)).first;
    }
    return it->second;
  };
  auto gens = [&](const std::vector<int>& th) { return a.generated_subspaces(th, D); };

  // (0) and (0'): constructed witnesses y = w x_{w_o} with theta = T_w, plus
  // intersections of start spaces when they are nonzero
  const int m = nc.longest().length();
  for (int t = 0; t < opt.trials; ++t) {
    std::vector<int> th;
    Element<F> z, zr;
    int n;
    if (t % 2 == 0 && m <= D) {
      auto w = nc.group()[std::uniform_int_distribution<std::size_t>(0, nc.group().size() - 1)(rng)];
      th = t_set(rs, w);
      z = nc.y_element(w);
      zr = z;
      n = m;
    } else {
      th = random_subset(N, 2, rng);
      n = pick_degree<F>(rng, 1, D);
      std::vector<SVec<F>> s = a.starts_with_space(n, th[0]), e = a.ends_with_space(n, th[0]);
      for (std::size_t k = 1; k < th.size(); ++k) {
        s = intersect(s, a.starts_with_space(n, th[k]), a.dim(n));
        e = intersect(e, a.ends_with_space(n, th[k]), a.dim(n));
      }
      z = elem(n, random_combination(s, rng));
      zr = elem(n, random_combination(e, rng));
    }
    int q = pick_degree<F>(rng, 1, D - n);
    if (q < 0) continue;
    auto xi = elem(q, random_combination(ends_set(q, th), rng));
    auto xs = elem(q, random_combination(starts_set(q, th), rng));
    if (!z.is_zero())
      rec.holds("basic0", a.multiply(xi, z).is_zero(),
                [&] { return json{{"theta", theta_json(th)}, {"z", ej(a, z)}, {"xi", ej(a, xi)}}; });
    if (!zr.is_zero())
      rec.holds("basic0'", a.multiply(zr, xs).is_zero(),
                [&] { return json{{"theta", theta_json(th)}, {"z", ej(a, zr)}, {"xi", ej(a, xs)}}; });
  }

  for (int t = 0; t < opt.trials; ++t) {
    auto th = random_subset(N, 3, rng);
    int n = pick_degree<F>(rng, 1, D);
    if (n < 0) break;
    // (1) and (2): iff, with starting/ending xi up to degree 3 as a basis sweep
    auto K = derivative_kernel(a, n, th);
    auto KL = left_derivative_kernel(a, n, th);
    for (int side = 0; side < 2; ++side) {
      const auto& ker = side == 0 ? K : KL;
      bool from_kernel = std::bernoulli_distribution(0.5)(rng) && !ker.empty();
      auto z = from_kernel ? elem(n, random_combination(ker, rng)) : a.random_homogeneous(n, rng);
      bool lhs = true;
      for (int al : th)
        lhs = lhs && (side == 0 ? a.right_derivative(z, al) : a.left_derivative(al, z)).is_zero();
      bool rhs = true;
      for (int q = 1; q <= std::min(n, 3) && rhs; ++q)
        for (const auto& v : side == 0 ? starts_set(q, th) : ends_set(q, th)) {
          auto xi = elem(q, v);
          if (!(side == 0 ? a.right_derivative(z, xi) : a.left_derivative(xi, z)).is_zero()) {
            rhs = false;
            break;
          }
        }
      rec.holds(side == 0 ? "basic1" : "basic2", lhs == rhs,
                [&] { return json{{"theta", theta_json(th)}, {"z", ej(a, z)}}; });
    }
    // (2-3)
    {
      int n1 = pick_degree<F>(rng, 0, D / 2), n2 = pick_degree<F>(rng, 0, D / 2);
      auto z1 = elem(n1, random_combination(derivative_kernel(a, n1, th), rng));
      auto z2 = elem(n2, random_combination(derivative_kernel(a, n2, th), rng));
      auto p = a.multiply(z1, z2);
      int q = pick_degree<F>(rng, 1, n1 + n2);
      if (q > 0 && !p.is_zero()) {
        auto xi = elem(q, random_combination(starts_set(q, th), rng));
        rec.holds("basic2-3", a.right_derivative(p, xi).is_zero(),
                  [&] { return json{{"theta", theta_json(th)}, {"z1", ej(a, z1)}, {"z2", ej(a, z2)}, {"xi", ej(a, xi)}}; });
      }
    }
    // (3)
    {
      auto other = complement(N, th);
      auto sub = gens(other);
      if (n < static_cast<int>(sub.size()) && !sub[n].empty()) {
        auto z = elem(n, random_combination(sub[n], rng));
        int q = pick_degree<F>(rng, 1, n);
        auto xi = elem(q, random_combination(starts_set(q, th), rng));
        rec.holds("basic3", a.right_derivative(z, xi).is_zero(),
                  [&] { return json{{"theta", theta_json(th)}, {"z", ej(a, z)}, {"xi", ej(a, xi)}}; });
      }
    }
    // (4) and (4')
    {
      auto sub = gens(th);
      int n1 = pick_degree<F>(rng, 0, D / 2), n2 = pick_degree<F>(rng, 0, D - n1);
      auto z1 = elem(n1, random_combination(derivative_kernel(a, n1, th), rng));
      auto z2 = a.random_homogeneous(n2, rng);
      int q = pick_degree<F>(rng, 0, std::min(n2, static_cast<int>(sub.size()) - 1));
      auto xi = elem(q, random_combination(sub[q], rng));
      auto in = [&] { return json{{"theta", theta_json(th)}, {"z1", ej(a, z1)}, {"z2", ej(a, z2)}, {"xi", ej(a, xi)}}; };
      rec.equal("basic4", a.right_derivative(a.multiply(z1, z2), xi), a.multiply(z1, a.right_derivative(z2, xi)), in);

      auto zl = elem(n1, random_combination(left_derivative_kernel(a, n1, th), rng));
      auto parts = a.w_degree_decompose(zl);
      if (!parts.empty()) {
        auto it = parts.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng));
        const auto& z1l = it->second;
        const GroupElement& g = a.wdeg_element(it->first);
        auto in2 = [&] { return json{{"theta", theta_json(th)}, {"z1", ej(a, z1l)}, {"z2", ej(a, z2)}, {"xi", ej(a, xi)}}; };
        rec.equal("basic4'", a.left_derivative(xi, a.multiply(z1l, z2)),
                  a.multiply(z1l, a.left_derivative(a.act(g.inverse(), xi), z2)), in2);
      }
    }
  }
  // parity of the W-degree length
  for (int n = 0; n <= D; ++n) {
    const auto& B = a.basis(n);
    bool ok = true;
    for (int b = 0; b < B.dim(); ++b) ok = ok && a.wdeg_element(B.wdeg[b]).length() % 2 == n % 2;
    rec.holds("zdeg-length", ok, [&] { return json{{"degree", n}}; });
  }
  for (int t = 0; t < opt.trials; ++t) {
    int n = pick_degree<F>(rng, 0, D);
    auto z = a.random_homogeneous(n, rng);
    bool ok = true;
    for (const auto& [gid, part] : a.w_degree_decompose(z)) ok = ok && a.wdeg_element(gid).length() % 2 == n % 2;
    rec.holds("zdeg-length", ok, [&] { return json{{"z", ej(a, z)}}; });
  }
  return rep;
}

template <class F>
IdentityReport check_gen_leibniz(NilCoxeter<F>& nc, const GroupElement& v, const GroupElement& w,
                                 const GroupElement& wp, const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "gen-leibniz";
  rep.parameters = {{"v", group_to_json(rs, v)}, {"w", group_to_json(rs, w)}, {"w'", group_to_json(rs, wp)},
                    {"trials", opt.trials}, {"seed", opt.seed}};
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);

  RightOp<F> lhs_op(a, a.act(wp, nc.skew(w, v)));
  struct Term {
    RightOp<F> left, right;
    GroupElement hinv;
  };
  std::vector<Term> terms;
  for (const auto& u : nc.group()) {
    if (!bruhat_leq(rs, v, u) || !bruhat_leq(rs, u, w)) continue;
    auto h = wp * u * v.inverse() * wp.inverse();
    terms.push_back({RightOp<F>(a, a.act(wp, nc.skew(u, v))), RightOp<F>(a, a.act(wp, nc.skew(w, u))), h.inverse()});
  }
  auto run = [&](const Element<F>& f, const Element<F>& z) {
    auto lhs = lhs_op(a.multiply(f, z));
    Element<F> rhs;
    for (auto& t : terms) rhs += a.multiply(t.left(f), a.act(t.hinv, t.right(z)));
    rec.equal("leibniz", lhs, rhs, [&] { return json{{"f", ej(a, f)}, {"z", ej(a, z)}}; });
  };
  const bool small = a.finite() && a.top_degree() <= 4;
  if (opt.exhaustive && small) {
    for (int n = 0; n <= D; ++n)
      for (int b = 0; b < a.dim(n); ++b)
        for (int k = 0; n + k <= D; ++k)
          for (int c = 0; c < a.dim(k); ++c) run(basis_element<F>(n, b), basis_element<F>(k, c));
  } else {
    for (int t = 0; t < opt.trials; ++t) {
      int nf = pick_degree<F>(rng, 0, D);
      int nz = pick_degree<F>(rng, 0, D - nf);
      run(a.random_homogeneous(nf, rng), a.random_homogeneous(nz, rng));
    }
  }
  return rep;
}

template <class F>
IdentityReport check_tow_inv(NilCoxeter<F>& nc, const GroupElement& w, const GroupElement& v, const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "tow-inv";
  rep.parameters = {{"w", group_to_json(rs, w)}, {"v", group_to_json(rs, v)}, {"trials", opt.trials}, {"seed", opt.seed}};
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);
  RightOp<F> Dy(a, nc.y_element(w)), Dwv(a, a.act(w, nc.embed(v)));
  for (int t = 0; t < opt.trials; ++t) {
    int nf = pick_degree<F>(rng, 0, D), nz = pick_degree<F>(rng, 0, D);
    auto f = a.random_homogeneous(nf, rng), z = a.random_homogeneous(nz, rng);
    auto fy = Dy(f);
    rec.equal("tow_inv", Dwv(a.multiply(fy, z)), a.multiply(fy, Dwv(z)),
              [&] { return json{{"f", ej(a, f)}, {"z", ej(a, z)}}; });
  }
  return rep;
}

template <class F>
IdentityReport check_gen_leibniz_suite(NilCoxeter<F>& nc, const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "gen-leibniz";
  rep.parameters = {{"trials", opt.trials}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed);
  const auto& G = nc.group();
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  CheckOptions sub = opt;
  sub.trials = std::max(1, opt.trials / 20);
  int triples = 0;
  for (int t = 0; triples < 20 && t < 2000; ++t) {
    auto v = G[pick(rng)], w = G[pick(rng)], wp = G[pick(rng)];
    if (t == 0) v = w;  // collapses to the u = w term
    if (!bruhat_leq(rs, v, w)) continue;
    sub.seed = rng();
    rep.absorb(check_gen_leibniz(nc, v, w, wp, sub));
    ++triples;
  }
  CheckOptions tow = opt;
  tow.trials = std::max(1, opt.trials / static_cast<int>(G.size()));
  for (std::size_t i = 0; i < G.size(); ++i) {
    auto w = G[i], v = G[pick(rng)];
    tow.seed = rng();
    rep.absorb(check_tow_inv(nc, w, v, tow));
  }
  rep.parameters["triples"] = triples;
  return rep;
}

template <class F>
IdentityReport check_skew_commutation(NilCoxeter<F>& nc, const GroupElement& w, const GroupElement& v,
                                      const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "skew-commutation";
  rep.parameters = {{"w", group_to_json(rs, w)}, {"v", group_to_json(rs, v)}, {"trials", opt.trials}, {"seed", opt.seed}};
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);
  const auto& wo = nc.longest();
  const auto T = t_set(rs, w);
  auto xi = a.act(w, nc.skew(wo, v));
  RightOp<F> Dxi(a, xi);
  const int q = wo.length() - v.length();
  const GroupElement h = w * v * wo * w.inverse();
  int samples = 0;
  for (int nb = 0; nb <= D; ++nb) {
    auto K = derivative_kernel(a, nb, T);
    if (K.empty()) continue;
    std::vector<SVec<F>> bs;
    if (nb == 0) bs.push_back(unit<F>(0));
    for (int t = 0; t < 2; ++t) bs.push_back(random_combination(K, rng));
    for (const auto& bv : bs) {
      if (bv.empty()) continue;
      auto b = Element<F>::homogeneous(nb, bv);
      auto hb = a.act(h, b);
      ++samples;
      for (int m = std::max(0, q - nb); m + nb <= D; ++m)
        for (int f = 0; f < a.dim(m); ++f) {
          auto fe = basis_element<F>(m, f);
          rec.equal(nb == 0 ? "b=1" : "bcommuteswithskew", Dxi(a.multiply(fe, b)), a.multiply(Dxi(fe), hb),
                    [&] { return json{{"b", ej(a, b)}, {"f", ej(a, fe)}}; });
        }
    }
  }
  if (samples == 0) rep.notices.push_back("empty kernel sample space");
  return rep;
}

template <class F>
IdentityReport check_ofbskew(NilCoxeter<F>& nc, const GroupElement& w1, const GroupElement& w2,
                             const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "ofbskew";
  rep.parameters = {{"w1", group_to_json(rs, w1)}, {"w2", group_to_json(rs, w2)}};
  Recorder<F> rec(a, rep);
  const int D = effective_degree(a, opt);
  const int m = nc.longest().length();
  auto y1 = nc.y_element(w1), y2 = nc.y_element(w2);
  RightOp<F> Dy2(a, y2);
  const F sign(m % 2 ? -1 : 1);
  for (int n = 0; n + m <= D; ++n)
    for (int f = 0; f < a.dim(n); ++f) {
      auto fe = basis_element<F>(n, f);
      rec.equal("ofbskew", Dy2(a.multiply(fe, y1)), a.multiply(Dy2(fe), y1) * sign,
                [&] { return json{{"f", ej(a, fe)}}; });
    }
  return rep;
}

template <class F>
IdentityReport check_prep_abstr_comm(NilCoxeter<F>& nc, const GroupElement& w, const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "prep-abstr-comm";
  rep.parameters = {{"w", group_to_json(rs, w)}, {"trials", opt.trials}, {"seed", opt.seed}};
  Recorder<F> rec(a, rep);
  std::mt19937_64 rng(opt.seed);
  const int D = effective_degree(a, opt);
  const auto& wo = nc.longest();
  const int m = wo.length();
  if (m > D) {
    rep.notices.push_back("y lies above the constructed degrees");
    return rep;
  }
  const auto T = t_set(rs, w);
  const GroupElement g = w * wo * w.inverse();
  const bool central = g == wo;
  const std::string tag = central ? "prep-abstr-comm2" : "prep-abstr-comm";
  auto y = nc.y_element(w);
  RightOp<F> Dy(a, y);
  std::map<int, std::vector<SVec<F>>> K, K2;
  auto ker = [&](int n) -> const std::vector<SVec<F>>& {
    auto it = K.find(n);
    if (it == K.end()) it = K.emplace(n, derivative_kernel(a, n, T)).first;
    return it->second;
  };
  auto ker2 = [&](int n) -> const std::vector<SVec<F>>& {
    auto it = K2.find(n);
    if (it == K2.end()) it = K2.emplace(n, derivative_kernel(a, n, T, &g)).first;
    return it->second;
  };
  for (int t = 0; t < opt.trials; ++t) {
    const int room = D - m;
    int d1 = pick_degree<F>(rng, 0, room);
    int d2 = pick_degree<F>(rng, 0, room - d1);
    int d3 = pick_degree<F>(rng, 0, room - d1 - d2);
    auto x1 = Element<F>::homogeneous(d1, random_combination(ker(d1), rng));
    auto x2 = Element<F>::homogeneous(d2, random_combination(ker2(d2), rng));
    auto x3 = Element<F>::homogeneous(d3, random_combination(ker(d3), rng));
    auto in = [&] { return json{{"x1", ej(a, x1)}, {"x2", ej(a, x2)}, {"x3", ej(a, x3)}}; };
    auto l = Dy(a.multiply(a.multiply(a.multiply(x1, y), x2), x3));
    auto mid = Dy(a.multiply(a.multiply(a.multiply(x1, a.act(g, x2)), y), x3));
    auto r = a.multiply(x1, a.act(g, a.multiply(x2, x3)));
    rec.equal(tag, l, mid, in);
    rec.equal(tag, mid, r, in);
  }
  return rep;
}

template <class F>
IdentityReport check_skew_suite(NilCoxeter<F>& nc, const CheckOptions& opt) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "skew-commutation";
  rep.parameters = {{"trials", opt.trials}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed);
  const auto& G = nc.group();
  const auto& wo = nc.longest();
  CheckOptions sub = opt;
  // every w in the centralizer and random others, each against a few v
  std::vector<GroupElement> ws;
  for (const auto& w : G)
    if (w * wo == wo * w) ws.push_back(w);
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  for (int k = 0; k < 4; ++k) ws.push_back(G[pick(rng)]);
  for (const auto& w : ws)
    for (int k = 0; k < 3; ++k) {
      auto v = k == 0 ? GroupElement::identity(rs) : G[pick(rng)];
      sub.seed = rng();
      rep.absorb(check_skew_commutation(nc, w, v, sub));
    }
  // ofbskew over disjoint pairs of centralizer elements
  int pairs = 0;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (i == j || !(ws[i] * wo == wo * ws[i]) || !(ws[j] * wo == wo * ws[j])) continue;
      auto Ti = t_set(rs, ws[i]), Tj = t_set(rs, ws[j]);
      std::vector<int> both;
      std::set_intersection(Ti.begin(), Ti.end(), Tj.begin(), Tj.end(), std::back_inserter(both));
      if (!both.empty()) continue;
      rep.absorb(check_ofbskew(nc, ws[i], ws[j], sub));
      ++pairs;
    }
  if (pairs == 0) rep.notices.push_back("no disjoint pair of centralizer elements: ofbskew skipped");
  for (const auto& w : ws) {
    sub.seed = rng();
    sub.trials = std::max(1, opt.trials / static_cast<int>(ws.size()));
    rep.absorb(check_prep_abstr_comm(nc, w, sub));
  }
  return rep;
}

template <class F>
BracketMatrix<F> bracket_matrix(NilCoxeter<F>& nc, const std::vector<GroupElement>& ordering) {
  Algebra<F>& a = nc.algebra();
  BracketMatrix<F> out;
  const int r = static_cast<int>(ordering.size());
  const int m = nc.longest().length();
  std::vector<Element<F>> ys;
  for (const auto& w : ordering) ys.push_back(nc.y_element(w));
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  do out.perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<Element<F>> prods;
  for (const auto& pi : out.perms) {
    Element<F> z = a.one();
    for (int i : pi) z = a.multiply(z, ys[i]);
    prods.push_back(z);
  }
  auto inversions = [](const std::vector<int>& s) {
    int c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) c += s[i] > s[j];
    return c;
  };
  const std::size_t P = out.perms.size();
  out.engine.assign(P, std::vector<F>(P, F(0)));
  out.formula.assign(P, std::vector<int>(P, 1));
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) {
      const auto& pi = out.perms[i];
      const auto& sg = out.perms[j];
      std::vector<int> pinv(r), comp(r);
      for (int k = 0; k < r; ++k) pinv[pi[k]] = k;
      for (int k = 0; k < r; ++k) comp[k] = sg[pinv[k]];
      long long ex = (static_cast<long long>(r - 1) * r / 2 + inversions(comp)) * m;
      out.formula[i][j] = ex % 2 ? -1 : 1;
      out.engine[i][j] = a.pairing(prods[i], prods[j]);
      if (out.engine[i][j] != F(out.formula[i][j])) out.match = false;
    }
  return out;
}

template <class F>
std::optional<CofactorWitness<F>> find_commuting_cofactors(Algebra<F>& a, const Word& y1, const Word& y2,
                                                           const std::vector<int>& theta1,
                                                           const std::vector<int>& theta2, int degree_cap) {
  std::vector<int> th;
  std::set_union(theta1.begin(), theta1.end(), theta2.begin(), theta2.end(), std::back_inserter(th));
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  Word w12 = y1, w21 = y2;
  w12.insert(w12.end(), y2.begin(), y2.end());
  w21.insert(w21.end(), y1.begin(), y1.end());
  const int base = static_cast<int>(w12.size());
  a.build();
  const int limit = a.finite() ? a.top_degree() : a.constructed();
  if (base > limit) return std::nullopt;
  auto p12 = a.project(w12), p21 = a.project(w21);
  if (p12.empty() || p21.empty()) throw std::invalid_argument("y1 y2 and y2 y1 must both be nonzero");
  if (auto lam = proportional(p12, p21)) return CofactorWitness<F>{{}, {}, *lam};
  for (int p = 1; 2 * p <= degree_cap && base + p <= limit; ++p) {
    std::vector<Word> words;
    Word w(p, 0);
    while (true) {
      Word x;
      for (int i : w) x.push_back(th[i]);
      words.push_back(x);
      int i = p - 1;
      while (i >= 0 && ++w[i] == static_cast<int>(th.size())) w[i--] = 0;
      if (i < 0) break;
    }
    std::vector<SVec<F>> right;
    for (const auto& yb : words) {
      Word x = yb;
      x.insert(x.end(), w21.begin(), w21.end());
      right.push_back(a.project(x));
    }
    for (const auto& y : words) {
      Word x = y;
      x.insert(x.end(), w12.begin(), w12.end());
      auto l = a.project(x);
      if (l.empty()) continue;
      for (std::size_t j = 0; j < words.size(); ++j)
        if (auto lam = proportional(l, right[j]); lam && !is_zero(*lam)) return CofactorWitness<F>{y, words[j], *lam};
    }
  }
  return std::nullopt;
}

#define NICHOLS_INSTANTIATE(F)                                                                                     \
  template int effective_degree(Algebra<F>&, const CheckOptions&);                                                 \
  template std::vector<SVec<F>> derivative_kernel(Algebra<F>&, int, const std::vector<int>&, const GroupElement*); \
  template std::vector<SVec<F>> left_derivative_kernel(Algebra<F>&, int, const std::vector<int>&);                \
  template std::vector<SVec<F>> intersect(const std::vector<SVec<F>>&, const std::vector<SVec<F>>&, int);         \
  template SVec<F> random_combination(const std::vector<SVec<F>>&, std::mt19937_64&);                             \
  template std::optional<F> proportional(const SVec<F>&, const SVec<F>&);                                         \
  template IdentityReport check_pairing_contracts(Algebra<F>&, const CheckOptions&);                              \
  template IdentityReport check_rho_realization(Algebra<F>&, const CheckOptions&);                                \
  template IdentityReport check_equivariance(Algebra<F>&, const CheckOptions&);                                   \
  template IdentityReport check_rhoD(Algebra<F>&, const CheckOptions&);                                           \
  template IdentityReport check_nz_antipode(Algebra<F>&, const CheckOptions&);                                    \
  template IdentityReport check_basic_rev(NilCoxeter<F>&, const CheckOptions&);                                   \
  template IdentityReport check_gen_leibniz(NilCoxeter<F>&, const GroupElement&, const GroupElement&,             \
                                            const GroupElement&, const CheckOptions&);                            \
  template IdentityReport check_tow_inv(NilCoxeter<F>&, const GroupElement&, const GroupElement&,                 \
                                        const CheckOptions&);                                                     \
  template IdentityReport check_gen_leibniz_suite(NilCoxeter<F>&, const CheckOptions&);                           \
  template IdentityReport check_skew_commutation(NilCoxeter<F>&, const GroupElement&, const GroupElement&,        \
                                                 const CheckOptions&);                                            \
  template IdentityReport check_ofbskew(NilCoxeter<F>&, const GroupElement&, const GroupElement&,                 \
                                        const CheckOptions&);                                                     \
  template IdentityReport check_prep_abstr_comm(NilCoxeter<F>&, const GroupElement&, const CheckOptions&);        \
  template IdentityReport check_skew_suite(NilCoxeter<F>&, const CheckOptions&);                                  \
  template IdentityReport check_dual_paths(Algebra<F>&, const CheckOptions&);                                     \
  template IdentityReport check_orthonormality(NilCoxeter<F>&);                                                   \
  template BracketMatrix<F> bracket_matrix(NilCoxeter<F>&, const std::vector<GroupElement>&);                     \
  template std::optional<CofactorWitness<F>> find_commuting_cofactors(Algebra<F>&, const Word&, const Word&,      \
                                                                       const std::vector<int>&,                   \
                                                                       const std::vector<int>&, int);

NICHOLS_INSTANTIATE(Rational)
NICHOLS_INSTANTIATE(ModP)

}  // namespace nichols
