#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nichols/coxeter.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

using Word = std::vector<int>;  // positive-root indices

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MemoryExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A signed word: x_{w(alpha)} with x_{-alpha} = -x_alpha folds into the sign.
struct SignedWord {
  int sign = 1;
  Word word;
};

template <class F>
struct TensorElement {
  int degree = 0;
  std::map<Word, F> terms;

  void add(const Word& w, const F& c);
};

// Graded element in coordinates against the per-degree bases.
template <class F>
struct Element {
  std::map<int, SVec<F>> comp;

  bool is_zero() const { return comp.empty(); }
  SVec<F> component(int n) const;
  void add(int n, const SVec<F>& v, const F& c = F(1));
  Element& operator+=(const Element& o);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const F& c) const;
  bool operator==(const Element& o) const { return comp == o.comp; }
  bool operator!=(const Element& o) const { return comp != o.comp; }
  static Element homogeneous(int n, SVec<F> v);
};

template <class F>
struct DegreeBasis {
  int n = 0;
  std::vector<Word> words;
  std::vector<int> wdeg;                      // W-degree id per basis element
  std::vector<std::vector<SVec<F>>> dright;   // [alpha][b] -> B^{n-1}
  std::vector<std::vector<SVec<F>>> rmul;     // [b][gamma] -> B^{n+1}
  std::vector<std::vector<SVec<F>>> dleft;    // lazily filled
  std::vector<std::vector<F>> gram;           // lazily filled
  bool has_gram = false;

  int dim() const { return static_cast<int>(words.size()); }
};

struct AlgebraConfig {
  int degree_cap = -1;  // -1: full when the top degree is known to be <= 12, else 6
  std::size_t memory_bound_bytes = std::size_t(8) << 30;

  // Reads NICHOLS_MEMORY_MB if set.
  static AlgebraConfig with_env_overrides(AlgebraConfig c);
};

// Coproduct component of a homogeneous element in B^k (x) B^{n-k}.
template <class F>
struct CoproductPart {
  int left_degree = 0;
  int right_degree = 0;
  std::map<std::pair<int, int>, F> coeff;  // (left basis, right basis) -> scalar
};

template <class F>
class Algebra {
 public:
  Algebra(const RootSystem& rs, AlgebraConfig cfg = {});

  const RootSystem& roots() const { return *rs_; }
  int num_generators() const { return rs_->num_positive(); }
  int degree_cap() const { return cap_; }
  int constructed() const { return static_cast<int>(bases_.size()) - 1; }
  bool finite() const { return top_ >= 0; }
  int top_degree() const { return top_; }
  std::size_t approx_bytes() const { return bytes_; }

  // Builds B^{n} for n = constructed()+1. Throws CapExceeded past the cap.
  void extend_degree();
  // Builds until the top is found or the given degree is reached.
  void build(int upto = -1);
  // Ensures degree n is available (zero beyond the top); throws past the cap.
  void ensure(int n);
  int dim(int n);
  const DegreeBasis<F>& basis(int n);

  // W-degrees are interned as small ids.
  int wdeg_id(const GroupElement& g);
  const GroupElement& wdeg_element(int id) const { return wdeg_elems_[id]; }
  int wdeg_of_word(const Word& w);
  int wdeg_times_reflection(int id, int root);

  // Projection of tensor representatives.
  SVec<F> project(const Word& w);
  SVec<F> project(const SignedWord& w);
  Element<F> project(const TensorElement<F>& t);
  SignedWord act_on_word(const GroupElement& g, const Word& w) const;
  SignedWord braid_transposition(const Word& w, int i) const;

  Element<F> one();
  Element<F> generator(int root);
  Element<F> from_word(const Word& w, const F& c = F(1));
  TensorElement<F> representative(const Element<F>& z);

  SVec<F> right_mul_generator(int n, const SVec<F>& v, int gamma);
  SVec<F> left_mul_generator(int n, int gamma, const SVec<F>& v);
  Element<F> multiply(const Element<F>& a, const Element<F>& b);
  Element<F> act(const GroupElement& g, const Element<F>& z);
  F pairing(const Element<F>& a, const Element<F>& b);
  const std::vector<std::vector<F>>& gram(int n);

  SVec<F> right_derivative(int n, const SVec<F>& v, int alpha);
  SVec<F> left_derivative(int n, int alpha, const SVec<F>& v);
  Element<F> right_derivative(const Element<F>& z, int alpha);
  Element<F> left_derivative(int alpha, const Element<F>& z);
  // (z)<-D_y and ->D_y(z) for general y.
  Element<F> right_derivative(const Element<F>& z, const Element<F>& y);
  Element<F> left_derivative(const Element<F>& y, const Element<F>& z);

  CoproductPart<F> coproduct(int n, const SVec<F>& v, int k);

  Element<F> antipode(const Element<F>& z);
  Element<F> antipode_inv(const Element<F>& z);
  Element<F> rho(const Element<F>& z);
  Element<F> s_bar(const Element<F>& z);
  SignedWord antipode_word(const Word& w) const;
  std::vector<std::vector<F>> antipode_matrix(int n);  // [i] = S(b_i) coordinates

  // z in x_gamma B (starts) / B x_gamma (ends); subspaces of B^n.
  std::vector<SVec<F>> starts_with_space(int n, int gamma);
  std::vector<SVec<F>> ends_with_space(int n, int gamma);
  bool starts_with(const Element<F>& z, int gamma);
  bool ends_with(const Element<F>& z, int gamma);
  // "starts with Theta": a sum of elements each starting with some member.
  bool starts_with_any(const Element<F>& z, const std::vector<int>& theta);
  bool ends_with_any(const Element<F>& z, const std::vector<int>& theta);
  // Per-degree bases of the subalgebra generated by x_theta, theta in set.
  std::vector<std::vector<SVec<F>>> generated_subspaces(const std::vector<int>& theta, int max_degree);
  bool involves_only(const Element<F>& z, const std::vector<int>& theta);

  std::map<int, Element<F>> w_degree_decompose(const Element<F>& z);
  int w_degree_of(const Element<F>& z);  // -1 if not W-homogeneous or zero

  SparseMatrix<F> symmetrizer_oracle(int n);
  int symmetrizer_rank(int n);

  Element<F> random_homogeneous(int n, std::mt19937_64& rng);
  Element<F> random_w_homogeneous(int n, int wdeg, std::mt19937_64& rng);

 private:
  void account(std::size_t entries);
  void ensure_dleft(int n);

  const RootSystem* rs_;
  std::unique_ptr<RootSystem> owned_;
  AlgebraConfig cfg_;
  int cap_;
  int top_ = -1;
  std::size_t bytes_ = 0;
  std::vector<DegreeBasis<F>> bases_;
  std::map<GroupElement, int> wdeg_ids_;
  std::vector<GroupElement> wdeg_elems_;
  std::map<std::pair<int, int>, int> wdeg_refl_;
  std::map<int, std::vector<std::vector<F>>> antipode_cache_;
  std::map<int, std::vector<std::vector<F>>> antipode_inv_cache_;
};

// Default cap: the top degree is known (and at most 12) for A1..A3.
int default_degree_cap(const RootSystem& rs);

}  // namespace nichols
