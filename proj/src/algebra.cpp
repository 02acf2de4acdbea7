#include "nichols/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace nichols {

namespace {

template <class F>
constexpr std::size_t entry_bytes() {
  // mpq_class keeps two limb arrays on the heap.
  return sizeof(std::pair<int, F>) + (std::is_same_v<F, Rational> ? 32 : 0);
}

}  // namespace

AlgebraConfig AlgebraConfig::with_env_overrides(AlgebraConfig c) {
  if (const char* s = std::getenv("NICHOLS_MEMORY_MB")) {
    char* end = nullptr;
    unsigned long long mb = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && mb > 0) c.memory_bound_bytes = static_cast<std::size_t>(mb) << 20;
  }
  return c;
}

int default_degree_cap(const RootSystem& rs) {
  if (rs.type_a() && rs.rank() <= 3) return 64;
  return 6;
}

template <class F>
void TensorElement<F>::add(const Word& w, const F& c) {
  if (static_cast<int>(w.size()) != degree) throw std::invalid_argument("word length differs from degree");
  F& x = terms[w];
  x += c;
  if (is_zero(x)) terms.erase(w);
}

template <class F>
SVec<F> Element<F>::component(int n) const {
  auto it = comp.find(n);
  return it == comp.end() ? SVec<F>{} : it->second;
}

template <class F>
void Element<F>::add(int n, const SVec<F>& v, const F& c) {
  if (v.empty() || nichols::is_zero(c)) return;
  auto& cur = comp[n];
  cur = axpy(cur, c, v);
  if (cur.empty()) comp.erase(n);
}

template <class F>
Element<F>& Element<F>::operator+=(const Element& o) {
  for (const auto& [n, v] : o.comp) add(n, v);
  return *this;
}

template <class F>
Element<F> Element<F>::operator+(const Element& o) const {
  Element r(*this);
  r += o;
  return r;
}

template <class F>
Element<F> Element<F>::operator-(const Element& o) const {
  Element r(*this);
  for (const auto& [n, v] : o.comp) r.add(n, v, F(-1));
  return r;
}

template <class F>
Element<F> Element<F>::operator*(const F& c) const {
  Element r;
  for (const auto& [n, v] : comp) r.add(n, v, c);
  return r;
}

template <class F>
Element<F> Element<F>::homogeneous(int n, SVec<F> v) {
  Element r;
  if (!v.empty()) r.comp[n] = std::move(v);
  return r;
}

template <class F>
Algebra<F>::Algebra(const RootSystem& rs, AlgebraConfig cfg)
    : owned_(std::make_unique<RootSystem>(rs)), cfg_(cfg) {
  rs_ = owned_.get();
  cap_ = cfg.degree_cap >= 0 ? cfg.degree_cap : default_degree_cap(rs);
  wdeg_id(GroupElement::identity(rs));
  DegreeBasis<F> b0;
  b0.n = 0;
  b0.words.push_back({});
  b0.wdeg.push_back(0);
  bases_.push_back(std::move(b0));
}

template <class F>
int Algebra<F>::wdeg_id(const GroupElement& g) {
  auto it = wdeg_ids_.find(g);
  if (it != wdeg_ids_.end()) return it->second;
  int id = static_cast<int>(wdeg_elems_.size());
  wdeg_ids_.emplace(g, id);
  wdeg_elems_.push_back(g);
  return id;
}

template <class F>
int Algebra<F>::wdeg_times_reflection(int id, int root) {
  auto key = std::make_pair(id, root);
  auto it = wdeg_refl_.find(key);
  if (it != wdeg_refl_.end()) return it->second;
  GroupElement g = wdeg_elems_[id] * GroupElement::reflection(*rs_, root);
  int r = wdeg_id(g);
  wdeg_refl_.emplace(key, r);
  return r;
}

template <class F>
int Algebra<F>::wdeg_of_word(const Word& w) {
  int id = 0;
  for (int g : w) id = wdeg_times_reflection(id, g);
  return id;
}

template <class F>
void Algebra<F>::account(std::size_t entries) {
  bytes_ += entries * entry_bytes<F>();
  if (bytes_ > cfg_.memory_bound_bytes)
    throw MemoryExceeded("memory bound exceeded (" + std::to_string(bytes_ >> 20) + " MiB estimated)");
}

template <class F>
void Algebra<F>::extend_degree() {
  if (finite()) {
    // Past the top everything vanishes; keep an explicit empty degree.
    DegreeBasis<F> z;
    z.n = constructed() + 1;
    z.dright.assign(num_generators(), {});
    bases_.back().rmul.assign(bases_.back().dim(), std::vector<SVec<F>>(num_generators()));
    bases_.push_back(std::move(z));
    return;
  }
  const int n = constructed() + 1;
  if (n > cap_) throw CapExceeded("degree cap " + std::to_string(cap_) + " reached");
  const int N = num_generators();
  DegreeBasis<F>& prev = bases_[n - 1];
  const int dprev = prev.dim();

  // Candidates b*x_gamma in lexicographic word order. The image of a
  // candidate under the joint right-derivative map is
  //   ((b x_gamma)<-D_alpha)_alpha = delta_{gamma,alpha} b + (b)<-D_alpha * s_alpha(x_gamma),
  // and it only involves W-degrees h*s_alpha where h = deg(b) s_gamma, so
  // elimination runs per target W-degree.
  struct Block {
    Echelon<F> ech;
    std::vector<int> global;  // echelon insertion id -> basis index or -1
  };
  std::map<int, Block> blocks;
  DegreeBasis<F> cur;
  cur.n = n;
  cur.dright.assign(N, {});
  prev.rmul.assign(dprev, std::vector<SVec<F>>(N));
  std::size_t entries = 0;

  for (int b = 0; b < dprev; ++b) {
    for (int gamma = 0; gamma < N; ++gamma) {
      SVec<F> img;
      for (int alpha = 0; alpha < N; ++alpha) {
        SVec<F> part;
        if (alpha == gamma) part.push_back({b, F(1)});
        if (n >= 2) {
          SRoot t = rs_->reflect(alpha, pos_root(gamma));
          const SVec<F>& d = prev.dright[alpha][b];
          if (!d.empty()) {
            SVec<F> m = right_mul_generator(n - 2, d, root_index(t));
            part = axpy(part, F(root_sign(t)), m);
          }
        }
        for (auto& e : part) img.push_back({alpha * dprev + e.first, std::move(e.second)});
      }
      int h = wdeg_times_reflection(prev.wdeg[b], gamma);
      Block& blk = blocks[h];
      SVec<F> dep;
      auto id = blk.ech.insert(img, &dep);
      if (id) {
        int gi = cur.dim();
        blk.global.push_back(gi);
        Word w = prev.words[b];
        w.push_back(gamma);
        cur.words.push_back(std::move(w));
        cur.wdeg.push_back(h);
        for (int alpha = 0; alpha < N; ++alpha) cur.dright[alpha].emplace_back();
        for (const auto& [c, x] : img) cur.dright[c / dprev][gi].push_back({c % dprev, x});
        prev.rmul[b][gamma] = unit<F>(gi);
        entries += img.size() + 1;
      } else {
        blk.global.push_back(-1);
        SVec<F> coords;
        for (const auto& [k, x] : dep) coords.push_back({blk.global[k], x});
        prev.rmul[b][gamma] = std::move(coords);
        entries += prev.rmul[b][gamma].size();
      }
    }
    if ((b & 63) == 63) {
      account(entries);
      entries = 0;
    }
  }
  account(entries);
  if (cur.dim() == 0) top_ = n - 1;
  bases_.push_back(std::move(cur));
}

template <class F>
void Algebra<F>::build(int upto) {
  while (!finite() && (upto < 0 || constructed() < upto)) {
    if (constructed() + 1 > cap_) return;
    extend_degree();
  }
}

template <class F>
void Algebra<F>::ensure(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  while (constructed() < n) extend_degree();
}

template <class F>
int Algebra<F>::dim(int n) {
  ensure(n);
  return bases_[n].dim();
}

template <class F>
const DegreeBasis<F>& Algebra<F>::basis(int n) {
  ensure(n);
  return bases_[n];
}

template <class F>
SVec<F> Algebra<F>::right_mul_generator(int n, const SVec<F>& v, int gamma) {
  ensure(n + 1);
  SVec<F> out;
  const auto& rm = bases_[n].rmul;
  for (const auto& [b, x] : v) axpy_inplace(out, x, rm[b][gamma]);
  return out;
}

template <class F>
SVec<F> Algebra<F>::project(const Word& w) {
  const int n = static_cast<int>(w.size());
  ensure(n);
  SVec<F> v = unit<F>(0);
  for (int k = 0; k < n && !v.empty(); ++k) v = right_mul_generator(k, v, w[k]);
  return v;
}

template <class F>
SVec<F> Algebra<F>::project(const SignedWord& w) {
  return scaled(project(w.word), F(w.sign));
}

template <class F>
Element<F> Algebra<F>::project(const TensorElement<F>& t) {
  Element<F> z;
  for (const auto& [w, c] : t.terms) z.add(t.degree, project(w), c);
  return z;
}

template <class F>
SignedWord Algebra<F>::act_on_word(const GroupElement& g, const Word& w) const {
  SignedWord r;
  r.word.reserve(w.size());
  for (int x : w) {
    SRoot y = g.act(pos_root(x));
    r.sign *= root_sign(y);
    r.word.push_back(root_index(y));
  }
  return r;
}

template <class F>
SignedWord Algebra<F>::braid_transposition(const Word& w, int i) const {
  if (i < 0 || i + 1 >= static_cast<int>(w.size())) throw std::out_of_range("braid position out of range");
  SignedWord r{1, w};
  SRoot t = rs_->reflect(w[i], pos_root(w[i + 1]));
  r.sign = root_sign(t);
  r.word[i] = root_index(t);
  r.word[i + 1] = w[i];
  return r;
}

template <class F>
Element<F> Algebra<F>::one() {
  return Element<F>::homogeneous(0, unit<F>(0));
}

template <class F>
Element<F> Algebra<F>::generator(int root) {
  return from_word(Word{root});
}

template <class F>
Element<F> Algebra<F>::from_word(const Word& w, const F& c) {
  return Element<F>::homogeneous(static_cast<int>(w.size()), scaled(project(w), c));
}

template <class F>
TensorElement<F> Algebra<F>::representative(const Element<F>& z) {
  if (z.comp.size() > 1) throw std::invalid_argument("representative needs a homogeneous element");
  TensorElement<F> t;
  if (z.comp.empty()) return t;
  t.degree = z.comp.begin()->first;
  const auto& B = basis(t.degree);
  for (const auto& [b, x] : z.comp.begin()->second) t.add(B.words[b], x);
  return t;
}

template <class F>
SVec<F> Algebra<F>::left_mul_generator(int n, int gamma, const SVec<F>& v) {
  ensure(n + 1);
  SVec<F> out;
  for (const auto& [b, x] : v) {
    Word w{gamma};
    const Word& bw = bases_[n].words[b];
    w.insert(w.end(), bw.begin(), bw.end());
    axpy_inplace(out, x, project(w));
  }
  return out;
}

template <class F>
Element<F> Algebra<F>::multiply(const Element<F>& a, const Element<F>& b) {
  Element<F> r;
  for (const auto& [q, bv] : b.comp) {
    for (const auto& [p, av] : a.comp) {
      if (top_ >= 0 && p + q > top_) continue;
      SVec<F> acc;
      for (const auto& [j, y] : bv) {
        const Word& w = basis(q).words[j];
        SVec<F> v = av;
        for (int k = 0; k < q && !v.empty(); ++k) v = right_mul_generator(p + k, v, w[k]);
        axpy_inplace(acc, y, v);
      }
      r.add(p + q, acc);
    }
  }
  return r;
}

template <class F>
Element<F> Algebra<F>::act(const GroupElement& g, const Element<F>& z) {
  Element<F> r;
  for (const auto& [n, v] : z.comp)
    for (const auto& [b, x] : v) r.add(n, project(act_on_word(g, basis(n).words[b])), x);
  return r;
}

template <class F>
const std::vector<std::vector<F>>& Algebra<F>::gram(int n) {
  ensure(n);
  if (bases_[n].has_gram) return bases_[n].gram;
  if (n > 0) gram(n - 1);
  DegreeBasis<F>& B = bases_[n];
  const int d = B.dim();
  B.gram.assign(d, std::vector<F>(d, F(0)));
  if (n == 0) {
    B.gram[0][0] = F(1);
  } else {
    // <b_i, x_g1 x_rest> = <(b_i)<-D_g1, x_rest>
    const auto& G = bases_[n - 1].gram;
    for (int j = 0; j < d; ++j) {
      const Word& w = B.words[j];
      SVec<F> tail = project(Word(w.begin() + 1, w.end()));
      std::vector<F> Gt(G.size(), F(0));
      for (std::size_t r = 0; r < G.size(); ++r)
        for (const auto& [c, x] : tail) Gt[r] += G[r][c] * x;
      for (int i = 0; i < d; ++i) {
        F s(0);
        for (const auto& [c, x] : bases_[n].dright[w[0]][i]) s += x * Gt[c];
        B.gram[i][j] = s;
      }
    }
  }
  B.has_gram = true;
  account(static_cast<std::size_t>(d) * d);
  return B.gram;
}

template <class F>
F Algebra<F>::pairing(const Element<F>& a, const Element<F>& b) {
  F s(0);
  for (const auto& [n, av] : a.comp) {
    auto it = b.comp.find(n);
    if (it == b.comp.end()) continue;
    const auto& G = gram(n);
    for (const auto& [i, x] : av)
      for (const auto& [j, y] : it->second) s += x * G[i][j] * y;
  }
  return s;
}

template <class F>
SVec<F> Algebra<F>::right_derivative(int n, const SVec<F>& v, int alpha) {
  if (n == 0) return {};
  ensure(n);
  SVec<F> out;
  for (const auto& [b, x] : v) axpy_inplace(out, x, bases_[n].dright[alpha][b]);
  return out;
}

template <class F>
void Algebra<F>::ensure_dleft(int n) {
  ensure(n);
  DegreeBasis<F>& B = bases_[n];
  if (!B.dleft.empty() || n == 0) return;
  const int N = num_generators();
  std::vector<std::vector<SVec<F>>> dl(N, std::vector<SVec<F>>(B.dim()));
  for (int b = 0; b < B.dim(); ++b) {
    const Word w = B.words[b];
    for (int alpha = 0; alpha < N; ++alpha) {
      // ->D_alpha(x_g f) = delta_{alpha,g} f + x_g ->D_{s_g(alpha)}(f)
      SRoot cur = pos_root(alpha);
      SVec<F> acc;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (root_index(cur) == w[i]) {
          Word rest(w.begin(), w.begin() + static_cast<long>(i));
          rest.insert(rest.end(), w.begin() + static_cast<long>(i) + 1, w.end());
          axpy_inplace(acc, F(root_sign(cur)), project(rest));
        }
        cur = rs_->reflect(w[i], cur);
      }
      dl[alpha][b] = std::move(acc);
    }
  }
  B.dleft = std::move(dl);
}

template <class F>
SVec<F> Algebra<F>::left_derivative(int n, int alpha, const SVec<F>& v) {
  if (n == 0) return {};
  ensure_dleft(n);
  SVec<F> out;
  for (const auto& [b, x] : v) axpy_inplace(out, x, bases_[n].dleft[alpha][b]);
  return out;
}

template <class F>
Element<F> Algebra<F>::right_derivative(const Element<F>& z, int alpha) {
  Element<F> r;
  for (const auto& [n, v] : z.comp)
    if (n > 0) r.add(n - 1, right_derivative(n, v, alpha));
  return r;
}

template <class F>
Element<F> Algebra<F>::left_derivative(int alpha, const Element<F>& z) {
  Element<F> r;
  for (const auto& [n, v] : z.comp)
    if (n > 0) r.add(n - 1, left_derivative(n, alpha, v));
  return r;
}

template <class F>
Element<F> Algebra<F>::right_derivative(const Element<F>& z, const Element<F>& y) {
  // <-D_{x_g1...x_gk} = <-D_g1 then <-D_g2 ... (right operators).
  Element<F> r;
  for (const auto& [q, yv] : y.comp) {
    for (const auto& [j, c] : yv) {
      const Word& w = basis(q).words[j];
      for (const auto& [n, v] : z.comp) {
        if (n < q) continue;
        SVec<F> cur = v;
        for (int k = 0; k < q && !cur.empty(); ++k) cur = right_derivative(n - k, cur, w[k]);
        r.add(n - q, cur, c);
      }
    }
  }
  return r;
}

template <class F>
Element<F> Algebra<F>::left_derivative(const Element<F>& y, const Element<F>& z) {
  // ->D_{x_g1...x_gk} = ->D_g1 o ... o ->D_gk.
  Element<F> r;
  for (const auto& [q, yv] : y.comp) {
    for (const auto& [j, c] : yv) {
      const Word& w = basis(q).words[j];
      for (const auto& [n, v] : z.comp) {
        if (n < q) continue;
        SVec<F> cur = v;
        for (int k = q - 1; k >= 0 && !cur.empty(); --k) cur = left_derivative(n - (q - 1 - k), w[k], cur);
        r.add(n - q, cur, c);
      }
    }
  }
  return r;
}

template <class F>
CoproductPart<F> Algebra<F>::coproduct(int n, const SVec<F>& v, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("coproduct split out of range");
  CoproductPart<F> out;
  out.left_degree = k;
  out.right_degree = n - k;
  std::map<Word, SVec<F>> memo;
  auto proj = [&](const Word& w) -> const SVec<F>& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, project(w)).first;
    return it->second;
  };
  for (const auto& [b, c] : v) {
    const Word& w = basis(n).words[b];
    // Delta(x_g1...x_gn) = prod (x_g (x) 1 + 1 (x) x_g); a left-leg letter is
    // acted on by the W-degree of the right-leg letters to its left.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      Word left, right;
      int sign = 1;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          SRoot cur = pos_root(w[i]);
          for (auto it = right.rbegin(); it != right.rend(); ++it) cur = rs_->reflect(*it, cur);
          sign *= root_sign(cur);
          left.push_back(root_index(cur));
        } else {
          right.push_back(w[i]);
        }
      }
      const SVec<F> L = proj(left);
      if (L.empty()) continue;
      const SVec<F>& R = proj(right);
      for (const auto& [i, x] : L)
        for (const auto& [j, y] : R) {
          F& e = out.coeff[{i, j}];
          e += F(sign) * c * x * y;
        }
    }
  }
  for (auto it = out.coeff.begin(); it != out.coeff.end();) {
    if (is_zero(it->second))
      it = out.coeff.erase(it);
    else
      ++it;
  }
  return out;
}

template <class F>
SignedWord Algebra<F>::antipode_word(const Word& w) const {
  // S(x_g f) = -S(s_g f) x_g
  SignedWord r;
  Word rest = w;
  Word rev;
  while (!rest.empty()) {
    int g = rest.front();
    r.sign = -r.sign;
    rev.push_back(g);
    Word nxt;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      SRoot t = rs_->reflect(g, pos_root(rest[i]));
      r.sign *= root_sign(t);
      nxt.push_back(root_index(t));
    }
    rest = std::move(nxt);
  }
  r.word.assign(rev.rbegin(), rev.rend());
  return r;
}

template <class F>
std::vector<std::vector<F>> Algebra<F>::antipode_matrix(int n) {
  auto it = antipode_cache_.find(n);
  if (it != antipode_cache_.end()) return it->second;
  const int d = dim(n);
  std::vector<std::vector<F>> m(d);
  for (int b = 0; b < d; ++b) m[b] = to_dense(project(antipode_word(bases_[n].words[b])), d);
  antipode_cache_[n] = m;
  return m;
}

template <class F>
Element<F> Algebra<F>::antipode(const Element<F>& z) {
  Element<F> r;
  for (const auto& [n, v] : z.comp)
    for (const auto& [b, x] : v) r.add(n, project(antipode_word(basis(n).words[b])), x);
  return r;
}

template <class F>
Element<F> Algebra<F>::antipode_inv(const Element<F>& z) {
  Element<F> r;
  for (const auto& [n, v] : z.comp) {
    auto it = antipode_inv_cache_.find(n);
    if (it == antipode_inv_cache_.end()) it = antipode_inv_cache_.emplace(n, inverse(antipode_matrix(n))).first;
    const auto& Si = it->second;  // rows: S^{-1}(b_i) in coordinates
    for (const auto& [b, x] : v) r.add(n, from_dense(Si[b]), x);
  }
  return r;
}

template <class F>
Element<F> Algebra<F>::rho(const Element<F>& z) {
  Element<F> r;
  for (const auto& [n, v] : z.comp)
    for (const auto& [b, x] : v) {
      Word w = basis(n).words[b];
      std::reverse(w.begin(), w.end());
      r.add(n, project(w), x);
    }
  return r;
}

template <class F>
Element<F> Algebra<F>::s_bar(const Element<F>& z) {
  Element<F> s = rho(antipode(z));
  Element<F> r;
  for (const auto& [n, v] : s.comp) r.add(n, v, F(n % 2 ? -1 : 1));
  return r;
}

template <class F>
std::vector<SVec<F>> Algebra<F>::starts_with_space(int n, int gamma) {
  std::vector<SVec<F>> sp;
  if (n == 0) return sp;
  for (int b = 0; b < dim(n - 1); ++b) {
    SVec<F> v = left_mul_generator(n - 1, gamma, unit<F>(b));
    if (!v.empty()) sp.push_back(std::move(v));
  }
  return sp;
}

template <class F>
std::vector<SVec<F>> Algebra<F>::ends_with_space(int n, int gamma) {
  std::vector<SVec<F>> sp;
  if (n == 0) return sp;
  for (int b = 0; b < dim(n - 1); ++b) {
    SVec<F> v = right_mul_generator(n - 1, unit<F>(b), gamma);
    if (!v.empty()) sp.push_back(std::move(v));
  }
  return sp;
}

template <class F>
bool Algebra<F>::starts_with(const Element<F>& z, int gamma) {
  for (const auto& [n, v] : z.comp)
    if (!in_span(v, starts_with_space(n, gamma), dim(n))) return false;
  return true;
}

template <class F>
bool Algebra<F>::ends_with(const Element<F>& z, int gamma) {
  for (const auto& [n, v] : z.comp)
    if (!in_span(v, ends_with_space(n, gamma), dim(n))) return false;
  return true;
}

template <class F>
bool Algebra<F>::starts_with_any(const Element<F>& z, const std::vector<int>& theta) {
  for (const auto& [n, v] : z.comp) {
    std::vector<SVec<F>> sp;
    for (int g : theta)
      for (auto& x : starts_with_space(n, g)) sp.push_back(std::move(x));
    if (!in_span(v, sp, dim(n))) return false;
  }
  return true;
}

template <class F>
bool Algebra<F>::ends_with_any(const Element<F>& z, const std::vector<int>& theta) {
  for (const auto& [n, v] : z.comp) {
    std::vector<SVec<F>> sp;
    for (int g : theta)
      for (auto& x : ends_with_space(n, g)) sp.push_back(std::move(x));
    if (!in_span(v, sp, dim(n))) return false;
  }
  return true;
}

template <class F>
std::vector<std::vector<SVec<F>>> Algebra<F>::generated_subspaces(const std::vector<int>& theta, int max_degree) {
  std::vector<std::vector<SVec<F>>> out;
  out.push_back({unit<F>(0)});
  for (int n = 1; n <= max_degree; ++n) {
    if (out.back().empty()) break;
    Echelon<F> e;
    std::vector<SVec<F>> basis_n;
    for (const auto& s : out.back())
      for (int g : theta) {
        SVec<F> v = right_mul_generator(n - 1, s, g);
        if (e.insert(v)) basis_n.push_back(std::move(v));
      }
    out.push_back(std::move(basis_n));
  }
  return out;
}

template <class F>
bool Algebra<F>::involves_only(const Element<F>& z, const std::vector<int>& theta) {
  int maxd = z.comp.empty() ? 0 : z.comp.rbegin()->first;
  auto sub = generated_subspaces(theta, maxd);
  for (const auto& [n, v] : z.comp) {
    if (n >= static_cast<int>(sub.size())) return false;
    if (!in_span(v, sub[n], dim(n))) return false;
  }
  return true;
}

template <class F>
std::map<int, Element<F>> Algebra<F>::w_degree_decompose(const Element<F>& z) {
  std::map<int, Element<F>> out;
  for (const auto& [n, v] : z.comp) {
    const auto& B = basis(n);
    std::map<int, SVec<F>> parts;
    for (const auto& [b, x] : v) parts[B.wdeg[b]].push_back({b, x});
    for (auto& [g, p] : parts) out[g].add(n, p);
  }
  return out;
}

template <class F>
int Algebra<F>::w_degree_of(const Element<F>& z) {
  auto d = w_degree_decompose(z);
  return d.size() == 1 ? d.begin()->first : -1;
}

template <class F>
SparseMatrix<F> Algebra<F>::symmetrizer_oracle(int n) {
  const int N = num_generators();
  double words = std::pow(static_cast<double>(N), n);
  double fact = std::tgamma(n + 1.0);
  if (words * fact * static_cast<double>(entry_bytes<F>()) > static_cast<double>(cfg_.memory_bound_bytes))
    throw MemoryExceeded("symmetrizer oracle exceeds memory bound at degree " + std::to_string(n));
  const int W = static_cast<int>(words);

  // Reduced words of all permutations of n letters, by breadth-first search.
  std::vector<std::vector<int>> redwords;
  {
    std::map<std::vector<int>, std::vector<int>> seen;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    seen[id] = {};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& p : frontier)
        for (int i = 0; i + 1 < n; ++i) {
          std::vector<int> q = p;
          std::swap(q[i], q[i + 1]);
          if (seen.count(q)) continue;
          auto rw = seen[p];
          rw.push_back(i);
          seen[q] = rw;
          next.push_back(q);
        }
      frontier = std::move(next);
    }
    for (const auto& [p, rw] : seen) redwords.push_back(rw);
  }

  auto decode = [&](int code) {
    Word w(n);
    for (int i = n - 1; i >= 0; --i) {
      w[i] = code % N;
      code /= N;
    }
    return w;
  };
  auto encode = [&](const Word& w) {
    int c = 0;
    for (int x : w) c = c * N + x;
    return c;
  };
  SparseMatrix<F> m(W, W);
  for (int code = 0; code < W; ++code) {
    Word w = decode(code);
    std::map<int, long> row;
    for (const auto& rw : redwords) {
      SignedWord cur{1, w};
      for (auto it = rw.rbegin(); it != rw.rend(); ++it) {
        SignedWord t = braid_transposition(cur.word, *it);
        cur.sign *= t.sign;
        cur.word = std::move(t.word);
      }
      row[encode(cur.word)] += cur.sign;
    }
    for (const auto& [c, x] : row)
      if (x != 0) m.row[code].push_back({c, F(static_cast<long>(x))});
  }
  return m;
}

template <class F>
int Algebra<F>::symmetrizer_rank(int n) {
  SparseMatrix<F> m = symmetrizer_oracle(n);
  // The symmetrizer preserves W-degree; rank per block.
  const int N = num_generators();
  std::map<int, std::vector<int>> blocks;
  for (int code = 0; code < m.rows; ++code) {
    Word w(n);
    int c = code;
    for (int i = n - 1; i >= 0; --i) {
      w[i] = c % N;
      c /= N;
    }
    blocks[wdeg_of_word(w)].push_back(code);
  }
  int r = 0;
  for (const auto& [g, rows] : blocks) {
    Echelon<F> e;
    for (int code : rows) e.insert(m.row[code]);
    r += e.rank();
  }
  return r;
}

template <class F>
Element<F> Algebra<F>::random_homogeneous(int n, std::mt19937_64& rng) {
  SVec<F> v;
  for (int b = 0; b < dim(n); ++b) {
    F c = random_scalar<F>(rng);
    if (!is_zero(c)) v.push_back({b, c});
  }
  return Element<F>::homogeneous(n, std::move(v));
}

template <class F>
Element<F> Algebra<F>::random_w_homogeneous(int n, int wdeg, std::mt19937_64& rng) {
  SVec<F> v;
  const auto& B = basis(n);
  for (int b = 0; b < B.dim(); ++b) {
    if (B.wdeg[b] != wdeg) continue;
    F c = random_scalar<F>(rng);
    if (!is_zero(c)) v.push_back({b, c});
  }
  return Element<F>::homogeneous(n, std::move(v));
}

template struct TensorElement<Rational>;
template struct TensorElement<ModP>;
template struct Element<Rational>;
template struct Element<ModP>;
template class Algebra<Rational>;
template class Algebra<ModP>;

}  // namespace nichols
