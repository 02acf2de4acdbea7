#include "nichols/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace nichols {

std::string CartanData::label() const {
  const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return f + std::to_string(rank);
}

CartanData CartanData::of(Family f, int n) {
  CartanData c;
  c.family = f;
  c.rank = n;
  if (n < 1) throw std::invalid_argument("rank must be positive");
  c.adjacency.assign(n, std::vector<bool>(n, false));
  auto link = [&](int a, int b) { c.adjacency[a][b] = c.adjacency[b][a] = true; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      if (n < 4) throw std::invalid_argument("type D needs rank >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      // Bourbaki labels 1..n: chain 1-3-4-5-6-7-8, node 2 on node 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
  }
  return c;
}

CartanData CartanData::parse(const std::string& type, int rank) {
  if (type == "A" || type == "a") return of(Family::A, rank);
  if (type == "D" || type == "d") return of(Family::D, rank);
  if (type == "E" || type == "e") return of(Family::E, rank);
  throw std::invalid_argument("unsupported root system type '" + type + "' (simply-laced A, D, E only)");
}

RootSystem::RootSystem(const CartanData& c) : cartan_(c) {
  const int n = c.rank;
  if (static_cast<int>(c.adjacency.size()) != n) throw std::invalid_argument("adjacency size mismatch");
  int edges = 0;
  for (int i = 0; i < n; ++i) {
    if (c.adjacency[i][i]) throw std::invalid_argument("diagram has a loop");
    for (int j = 0; j < n; ++j) {
      if (c.adjacency[i][j] != c.adjacency[j][i]) throw std::invalid_argument("adjacency not symmetric");
      if (i < j && c.adjacency[i][j]) ++edges;
    }
  }
  if (edges != n - 1) throw std::invalid_argument("Dynkin diagram must be a tree");

  auto pair_simple = [&](const Root& r, int k) {  // (r, alpha_k)
    int s = 2 * r[k];
    for (int j = 0; j < n; ++j)
      if (c.adjacency[k][j]) s -= r[j];
    return s;
  };

  std::set<Root> seen;
  std::queue<Root> todo;
  for (int k = 0; k < n; ++k) {
    Root r(n, 0);
    r[k] = 1;
    seen.insert(r);
    todo.push(r);
  }
  while (!todo.empty()) {
    Root r = todo.front();
    todo.pop();
    for (int k = 0; k < n; ++k) {
      Root s = r;
      s[k] -= pair_simple(r, k);
      bool pos = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; });
      bool neg = std::all_of(s.begin(), s.end(), [](int x) { return x <= 0; });
      if (!pos && !neg) throw std::logic_error("mixed-sign root: diagram is not of finite type");
      if (pos && seen.insert(s).second) {
        if (seen.size() > 200) throw std::invalid_argument("root system too large");
        todo.push(s);
      }
    }
  }
  roots_.assign(seen.begin(), seen.end());
  auto ht = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::stable_sort(roots_.begin(), roots_.end(), [&](const Root& a, const Root& b) {
    if (ht(a) != ht(b)) return ht(a) < ht(b);
    return a > b;  // alpha_1 before alpha_2 among equal heights
  });
  for (int i = 0; i < num_positive(); ++i) index_[roots_[i]] = i;
  simple_.resize(n);
  for (int k = 0; k < n; ++k) {
    Root r(n, 0);
    r[k] = 1;
    simple_[k] = index_.at(r);
  }
  const int N = num_positive();
  inner_.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += roots_[i][k] * pair_simple(roots_[j], k);
      inner_[i][j] = s;
    }
  refl_.assign(N, std::vector<SRoot>(N, 0));
  for (int t = 0; t < N; ++t)
    for (int i = 0; i < N; ++i) {
      Root r = roots_[i];
      for (int k = 0; k < n; ++k) r[k] -= inner_[i][t] * roots_[t][k];
      refl_[t][i] = find(r);
      if (refl_[t][i] == 0) throw std::logic_error("reflection left the root system");
    }
}

int RootSystem::height(int i) const { return std::accumulate(roots_[i].begin(), roots_[i].end(), 0); }

int RootSystem::simple_position(int i) const {
  for (int k = 0; k < rank(); ++k)
    if (simple_[k] == i) return k;
  return -1;
}

int RootSystem::find(const Root& r) const {
  auto it = index_.find(r);
  if (it != index_.end()) return pos_root(it->second);
  Root m(r);
  for (int& x : m) x = -x;
  it = index_.find(m);
  if (it != index_.end()) return -pos_root(it->second);
  return 0;
}

SRoot RootSystem::reflect(int t, SRoot x) const { return root_sign(x) * refl_[t][root_index(x)]; }

std::pair<int, int> RootSystem::transposition(int i) const {
  if (!type_a()) throw std::logic_error("transposition view needs type A");
  const Root& r = roots_[i];
  int a = 0;
  while (r[a] == 0) ++a;
  int b = a;
  while (b < rank() && r[b] == 1) ++b;
  return {a + 1, b + 1};
}

int RootSystem::root_of_transposition(int a, int b) const {
  if (a > b) std::swap(a, b);
  Root r(rank(), 0);
  for (int k = a - 1; k < b - 1; ++k) r[k] = 1;
  int s = find(r);
  if (s <= 0) throw std::invalid_argument("no such transposition");
  return root_index(s);
}

std::string RootSystem::root_name(int i) const {
  if (type_a()) {
    auto [a, b] = transposition(i);
    return "(" + std::to_string(a) + std::to_string(b) + ")";
  }
  std::string s = "[";
  for (int k = 0; k < rank(); ++k) s += (k ? "," : "") + std::to_string(roots_[i][k]);
  return s + "]";
}

GroupElement GroupElement::identity(const RootSystem& rs) {
  std::vector<SRoot> f(rs.num_positive());
  for (int i = 0; i < rs.num_positive(); ++i) f[i] = pos_root(i);
  return GroupElement(std::move(f));
}

GroupElement GroupElement::reflection(const RootSystem& rs, int t) {
  std::vector<SRoot> f(rs.num_positive());
  for (int i = 0; i < rs.num_positive(); ++i) f[i] = rs.reflect(t, pos_root(i));
  return GroupElement(std::move(f));
}

GroupElement GroupElement::simple_reflection(const RootSystem& rs, int k) { return reflection(rs, rs.simple(k)); }

GroupElement GroupElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  GroupElement g = identity(rs);
  for (int k : word) {
    if (k < 0 || k >= rs.rank()) throw std::invalid_argument("simple index out of range");
    g = g * simple_reflection(rs, k);
  }
  return g;
}

GroupElement GroupElement::from_perm(const RootSystem& rs, const std::vector<int>& p) {
  const int m = rs.rank() + 1;
  if (!rs.type_a()) throw std::invalid_argument("permutation input needs type A");
  if (static_cast<int>(p.size()) != m) throw std::invalid_argument("permutation has wrong size");
  std::vector<int> sorted(p);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i)
    if (sorted[i] != i + 1) throw std::invalid_argument("not a permutation of 1..m");
  std::vector<SRoot> f(rs.num_positive());
  for (int i = 0; i < rs.num_positive(); ++i) {
    auto [a, b] = rs.transposition(i);
    int x = p[a - 1], y = p[b - 1];
    f[i] = x < y ? pos_root(rs.root_of_transposition(x, y)) : -pos_root(rs.root_of_transposition(y, x));
  }
  return GroupElement(std::move(f));
}

GroupElement GroupElement::longest(const RootSystem& rs) {
  GroupElement g = identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int k = 0; k < rs.rank(); ++k)
      if (g.act(pos_root(rs.simple(k))) > 0) {
        g = g * simple_reflection(rs, k);
        grew = true;
        break;
      }
  }
  return g;
}

SRoot GroupElement::act(SRoot x) const { return root_sign(x) * full_[root_index(x)]; }

std::vector<SRoot> GroupElement::simple_images(const RootSystem& rs) const {
  std::vector<SRoot> v(rs.rank());
  for (int k = 0; k < rs.rank(); ++k) v[k] = full_[rs.simple(k)];
  return v;
}

int GroupElement::length() const {
  return static_cast<int>(std::count_if(full_.begin(), full_.end(), [](SRoot r) { return r < 0; }));
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < full_.size(); ++i)
    if (full_[i] != pos_root(static_cast<int>(i))) return false;
  return true;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (full_.size() != o.full_.size()) throw std::invalid_argument("group elements of different root systems");
  std::vector<SRoot> f(full_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = act(o.full_[i]);
  return GroupElement(std::move(f));
}

GroupElement GroupElement::inverse() const {
  std::vector<SRoot> f(full_.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    SRoot r = full_[i];
    f[root_index(r)] = root_sign(r) * pos_root(static_cast<int>(i));
  }
  return GroupElement(std::move(f));
}

std::vector<int> GroupElement::reduced_word(const RootSystem& rs) const {
  std::vector<int> word;
  GroupElement g = *this;
  while (!g.is_identity()) {
    int k = 0;
    while (g.act(pos_root(rs.simple(k))) > 0) ++k;
    word.push_back(k);
    g = g * simple_reflection(rs, k);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> GroupElement::to_perm(const RootSystem& rs) const {
  if (!rs.type_a()) throw std::logic_error("one-line notation needs type A");
  const int m = rs.rank() + 1;
  std::vector<int> word = reduced_word(rs);
  std::vector<int> p(m);
  for (int j = 1; j <= m; ++j) {
    int x = j;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int k = *it + 1;  // s_k swaps k, k+1
      if (x == k)
        x = k + 1;
      else if (x == k + 1)
        x = k;
    }
    p[j - 1] = x;
  }
  return p;
}

std::string GroupElement::name(const RootSystem& rs) const {
  std::string s;
  if (rs.type_a()) {
    auto p = to_perm(rs);
    bool sep = p.size() > 9;
    for (std::size_t i = 0; i < p.size(); ++i) s += (sep && i ? "," : "") + std::to_string(p[i]);
    return s;
  }
  auto w = reduced_word(rs);
  if (w.empty()) return "1";
  for (int k : w) s += "s" + std::to_string(k + 1);
  return s;
}

bool canonical_less(const RootSystem& rs, const GroupElement& a, const GroupElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (rs.type_a()) return a.to_perm(rs) < b.to_perm(rs);
  return a.simple_images(rs) < b.simple_images(rs);
}

bool bruhat_leq(const RootSystem& rs, const GroupElement& u, const GroupElement& w) {
  if (u.length() > w.length()) return false;
  if (w.is_identity()) return u.is_identity();
  int k = 0;
  while (w.act(pos_root(rs.simple(k))) > 0) ++k;
  GroupElement s = GroupElement::simple_reflection(rs, k);
  if (u.act(pos_root(rs.simple(k))) < 0) return bruhat_leq(rs, u * s, w * s);
  return bruhat_leq(rs, u, w * s);
}

std::vector<int> t_set(const RootSystem& rs, const GroupElement& w) {
  std::vector<int> t;
  for (int k = 0; k < rs.rank(); ++k) t.push_back(root_index(w.act(pos_root(rs.simple(k)))));
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<GroupElement> enumerate_group(const RootSystem& rs, std::size_t bound) {
  std::set<GroupElement> seen;
  std::vector<GroupElement> out;
  std::queue<GroupElement> todo;
  GroupElement e = GroupElement::identity(rs);
  seen.insert(e);
  todo.push(e);
  std::vector<GroupElement> gens;
  for (int k = 0; k < rs.rank(); ++k) gens.push_back(GroupElement::simple_reflection(rs, k));
  while (!todo.empty()) {
    GroupElement g = todo.front();
    todo.pop();
    out.push_back(g);
    for (const auto& s : gens) {
      GroupElement h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > bound) throw std::length_error("group enumeration bound exceeded");
        todo.push(h);
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const GroupElement& a, const GroupElement& b) { return canonical_less(rs, a, b); });
  return out;
}

int element_order(const RootSystem& rs, const GroupElement& w) {
  GroupElement g = w;
  int k = 1;
  while (!g.is_identity()) {
    g = g * w;
    ++k;
  }
  (void)rs;
  return k;
}

long long exponent(const RootSystem& rs, std::size_t bound) {
  long long e = 1;
  for (const auto& g : enumerate_group(rs, bound)) e = std::lcm(e, static_cast<long long>(element_order(rs, g)));
  return e;
}

}  // namespace nichols
