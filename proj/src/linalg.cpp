#include "nichols/linalg.hpp"

#include <algorithm>

namespace nichols {

std::uint64_t ModP::p_ = ModP::kDefaultPrime;

void ModP::set_modulus(std::uint64_t p) {
  if (p <= 2) throw std::invalid_argument("prime modulus must exceed 2");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus is not prime");
  p_ = p;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero mod p");
  ModP base = *this, r(1);
  std::uint64_t e = p_ - 2;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

template <class F>
void SparseMatrix<F>::set(int r, int c, const F& x) {
  auto& v = row[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(v.begin(), v.end(), c, [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == c) {
    if (is_zero(x))
      v.erase(it);
    else
      it->second = x;
  } else if (!is_zero(x)) {
    v.insert(it, {c, x});
  }
}

template <class F>
F SparseMatrix<F>::get(int r, int c) const {
  return coeff(row[static_cast<std::size_t>(r)], c);
}

template <class F>
SparseMatrix<F> SparseMatrix<F>::transpose() const {
  SparseMatrix<F> t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (const auto& [c, x] : row[r]) t.row[c].push_back({r, x});
  return t;
}

template <class F>
SVec<F> SparseMatrix<F>::apply(const SVec<F>& x) const {
  SVec<F> out;
  for (int r = 0; r < rows; ++r) {
    F s = dot(row[r], x);
    if (!is_zero(s)) out.push_back({r, s});
  }
  return out;
}

template <class F>
std::size_t SparseMatrix<F>::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row) n += r.size();
  return n;
}

template <class F>
SVec<F> axpy(const SVec<F>& v, const std::type_identity_t<F>& c, const SVec<F>& w) {
  if (is_zero(c)) return v;
  SVec<F> out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.push_back({w[j].first, c * w[j].second});
      ++j;
    } else {
      F s = v[i].second + c * w[j].second;
      if (!is_zero(s)) out.push_back({v[i].first, s});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
void axpy_inplace(SVec<F>& v, const std::type_identity_t<F>& c, const SVec<F>& w) {
  if (w.empty() || is_zero(c)) return;
  v = axpy(v, c, w);
}

template <class F>
SVec<F> scaled(const SVec<F>& v, const std::type_identity_t<F>& c) {
  if (is_zero(c)) return {};
  SVec<F> out(v);
  for (auto& e : out) e.second *= c;
  return out;
}

template <class F>
F coeff(const SVec<F>& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return F(0);
}

template <class F>
F dot(const SVec<F>& a, const SVec<F>& b) {
  F s(0);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else
      s += a[i++].second * b[j++].second;
  }
  return s;
}

template <class F>
SVec<F> from_dense(const std::vector<F>& d) {
  SVec<F> v;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!is_zero(d[i])) v.push_back({static_cast<int>(i), d[i]});
  return v;
}

template <class F>
std::vector<F> to_dense(const SVec<F>& v, int n) {
  std::vector<F> d(static_cast<std::size_t>(n), F(0));
  for (const auto& [i, x] : v) {
    if (i >= n) throw std::out_of_range("sparse index beyond dimension");
    d[i] = x;
  }
  return d;
}

template <class F>
typename Echelon<F>::Reduced Echelon<F>::reduce(const SVec<F>& v) const {
  Reduced r{v, {}};
  // Pivot rows only touch columns to the right of their pivot, so pivots are
  // eliminated left to right in one pass.
  int last = -1;
  for (;;) {
    auto hit = rows_.end();
    F c(0);
    for (const auto& [col, x] : r.residual) {
      if (col <= last) continue;
      auto it = rows_.find(col);
      if (it != rows_.end()) {
        hit = it;
        c = x;
        break;
      }
    }
    if (hit == rows_.end()) break;
    r.residual = axpy(r.residual, -c, hit->second.v);
    r.comb = axpy(r.comb, c, hit->second.comb);
    last = hit->first;
  }
  return r;
}

template <class F>
std::optional<int> Echelon<F>::insert(const SVec<F>& v, SVec<F>* dep) {
  int id = inserted_++;
  Reduced r = reduce(v);
  if (r.residual.empty()) {
    if (dep) *dep = std::move(r.comb);
    return std::nullopt;
  }
  F inv = F(1) / r.residual.front().second;
  Row row;
  row.v = scaled(r.residual, inv);
  row.comb = scaled(axpy(unit<F>(id), F(-1), r.comb), inv);
  rows_.emplace(row.v.front().first, std::move(row));
  return id;
}

template <class F>
int rank(const SparseMatrix<F>& m) {
  Echelon<F> e;
  for (const auto& r : m.row) e.insert(r);
  return e.rank();
}

template <class F>
std::vector<SVec<F>> kernel_basis(const SparseMatrix<F>& m) {
  // Reduced row echelon form by sparse Gauss-Jordan, pivots at the lowest
  // available column.
  std::map<int, SVec<F>> piv;
  for (const auto& r0 : m.row) {
    SVec<F> r = r0;
    for (const auto& [c, pr] : piv) {
      F x = coeff(r, c);
      if (!is_zero(x)) r = axpy(r, -x, pr);
    }
    if (r.empty()) continue;
    int lead = r.front().first;
    r = scaled(r, F(1) / r.front().second);
    for (auto& [c, pr] : piv) {
      F x = coeff(pr, lead);
      if (!is_zero(x)) pr = axpy(pr, -x, r);
    }
    piv.emplace(lead, std::move(r));
  }
  std::vector<SVec<F>> ker;
  for (int f = 0; f < m.cols; ++f) {
    if (piv.count(f)) continue;
    SVec<F> k{{f, F(1)}};
    for (const auto& [c, pr] : piv) {
      F x = coeff(pr, f);
      if (!is_zero(x)) k.push_back({c, -x});
    }
    std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ker.push_back(std::move(k));
  }
  return ker;
}

template <class F>
std::optional<SVec<F>> in_span(const SVec<F>& v, const std::vector<SVec<F>>& basis, int dim) {
  auto check = [dim](const SVec<F>& x) {
    if (!x.empty() && x.back().first >= dim) throw std::invalid_argument("in_span: dimension mismatch");
  };
  check(v);
  Echelon<F> e;
  for (const auto& b : basis) {
    check(b);
    e.insert(b);
  }
  auto r = e.reduce(v);
  if (!r.residual.empty()) return std::nullopt;
  return r.comb;
}

template <class F>
std::vector<std::vector<F>> inverse(const std::vector<std::vector<F>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<F>> m(a), inv(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    F s = F(1) / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(m[r][c])) continue;
      F f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

template <class F>
int dense_rank(std::vector<std::vector<F>> a) {
  SparseMatrix<F> m(static_cast<int>(a.size()), a.empty() ? 0 : static_cast<int>(a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i) m.row[i] = from_dense(a[i]);
  return rank(m);
}

#define NICHOLS_INSTANTIATE_LINALG(F)                                                          \
  template struct SparseMatrix<F>;                                                             \
  template class Echelon<F>;                                                                   \
  template SVec<F> axpy<F>(const SVec<F>&, const F&, const SVec<F>&);                          \
  template void axpy_inplace<F>(SVec<F>&, const F&, const SVec<F>&);                           \
  template SVec<F> scaled<F>(const SVec<F>&, const F&);                                        \
  template F coeff<F>(const SVec<F>&, int);                                                    \
  template F dot<F>(const SVec<F>&, const SVec<F>&);                                           \
  template SVec<F> from_dense<F>(const std::vector<F>&);                                       \
  template std::vector<F> to_dense<F>(const SVec<F>&, int);                                    \
  template int rank<F>(const SparseMatrix<F>&);                                                \
  template std::vector<SVec<F>> kernel_basis<F>(const SparseMatrix<F>&);                       \
  template std::optional<SVec<F>> in_span<F>(const SVec<F>&, const std::vector<SVec<F>>&, int); \
  template std::vector<std::vector<F>> inverse<F>(const std::vector<std::vector<F>>&);         \
  template int dense_rank<F>(std::vector<std::vector<F>>);

NICHOLS_INSTANTIATE_LINALG(Rational)
NICHOLS_INSTANTIATE_LINALG(ModP)

}  // namespace nichols
