#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nichols/field.hpp"

namespace nichols {

// Sparse vector: strictly increasing indices, no stored zeros.
template <class F>
using SVec = std::vector<std::pair<int, F>>;

template <class F>
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SVec<F>> row;  // size == rows

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row(static_cast<std::size_t>(r)) {}

  void set(int r, int c, const F& x);
  F get(int r, int c) const;
  SparseMatrix transpose() const;
  SVec<F> apply(const SVec<F>& x) const;  // M x, x indexed by columns
  std::size_t nnz() const;
};

// v + c * w
template <class F>
SVec<F> axpy(const SVec<F>& v, const std::type_identity_t<F>& c, const SVec<F>& w);
template <class F>
void axpy_inplace(SVec<F>& v, const std::type_identity_t<F>& c, const SVec<F>& w);
template <class F>
SVec<F> scaled(const SVec<F>& v, const std::type_identity_t<F>& c);
template <class F>
F coeff(const SVec<F>& v, int i);
template <class F>
F dot(const SVec<F>& a, const SVec<F>& b);
template <class F>
SVec<F> from_dense(const std::vector<F>& d);
template <class F>
std::vector<F> to_dense(const SVec<F>& v, int n);
template <class F>
SVec<F> unit(int i) {
  return SVec<F>{{i, F(1)}};
}

// Incremental row echelon form. Each stored row has a distinct leading
// column normalised to 1 and remembers which inserted vectors produced it,
// so that dependent vectors come back with their expression.
template <class F>
class Echelon {
 public:
  struct Reduced {
    SVec<F> residual;  // zero iff the input was in the span
    SVec<F> comb;      // input - residual == sum comb[k] * inserted[k]
  };

  // Returns the index the vector received if it was independent; otherwise
  // writes its expression in earlier independent vectors to *dep.
  std::optional<int> insert(const SVec<F>& v, SVec<F>* dep = nullptr);
  Reduced reduce(const SVec<F>& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }

 private:
  struct Row {
    SVec<F> v;
    SVec<F> comb;
  };
  std::map<int, Row> rows_;  // leading column -> row
  int inserted_ = 0;
};

template <class F>
int rank(const SparseMatrix<F>& m);

// Basis of {x : m x = 0}; free columns taken in increasing order, each
// vector has a 1 in its free column.
template <class F>
std::vector<SVec<F>> kernel_basis(const SparseMatrix<F>& m);

// Witness c with sum c[i] basis[i] == v, or nullopt.
template <class F>
std::optional<SVec<F>> in_span(const SVec<F>& v, const std::vector<SVec<F>>& basis, int dim);

// Dense inverse; throws std::domain_error if singular.
template <class F>
std::vector<std::vector<F>> inverse(const std::vector<std::vector<F>>& a);

template <class F>
int dense_rank(std::vector<std::vector<F>> a);

}  // namespace nichols
