#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nichols {

enum class Family { A, D, E };

struct CartanData {
  Family family = Family::A;
  int rank = 1;
  std::vector<std::vector<bool>> adjacency;

  std::string label() const;  // "A3", "D4", "E6"
  static CartanData of(Family f, int rank);
  static CartanData parse(const std::string& type, int rank);  // type in {A,D,E}
};

using Root = std::vector<int>;

// Signed positive-root index: +(i+1) for alpha_i, -(i+1) for -alpha_i.
using SRoot = int;
inline SRoot pos_root(int i) { return i + 1; }
inline int root_index(SRoot r) { return (r > 0 ? r : -r) - 1; }
inline int root_sign(SRoot r) { return r > 0 ? 1 : -1; }

class RootSystem {
 public:
  explicit RootSystem(const CartanData& c);

  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }
  int num_positive() const { return static_cast<int>(roots_.size()); }
  const Root& root(int i) const { return roots_[i]; }
  int height(int i) const;
  bool is_simple(int i) const { return height(i) == 1; }
  int simple(int k) const { return simple_[k]; }  // index of alpha_k
  int simple_position(int i) const;               // k with alpha_k = root i, or -1
  int find(const Root& r) const;                  // signed index, 0 if not a root
  int inner(int i, int j) const { return inner_[i][j]; }
  SRoot reflect(int t, SRoot x) const;  // s_{alpha_t}(x)

  bool type_a() const { return cartan_.family == Family::A; }
  // Type A: root i = e_a - e_b with a < b (1-based).
  std::pair<int, int> transposition(int i) const;
  int root_of_transposition(int a, int b) const;
  std::string root_name(int i) const;  // "(ab)" in type A, coefficient list otherwise

 private:
  CartanData cartan_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  std::vector<int> simple_;
  std::vector<std::vector<int>> inner_;
  std::vector<std::vector<SRoot>> refl_;
};

// Weyl group element stored as the action on all positive roots; the
// canonical key is the image of the simple roots.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(const RootSystem& rs);
  static GroupElement simple_reflection(const RootSystem& rs, int k);
  static GroupElement reflection(const RootSystem& rs, int root);
  static GroupElement from_word(const RootSystem& rs, const std::vector<int>& word);
  static GroupElement from_perm(const RootSystem& rs, const std::vector<int>& one_line);
  static GroupElement longest(const RootSystem& rs);

  SRoot act(SRoot x) const;
  std::vector<SRoot> simple_images(const RootSystem& rs) const;
  int length() const;
  bool is_identity() const;
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  std::vector<int> reduced_word(const RootSystem& rs) const;  // simple indices, left to right
  std::vector<int> to_perm(const RootSystem& rs) const;       // type A one-line, 1-based
  std::string name(const RootSystem& rs) const;               // one-line digits or s-word

  bool operator==(const GroupElement& o) const { return full_ == o.full_; }
  bool operator!=(const GroupElement& o) const { return full_ != o.full_; }
  // Plain key order (for maps); canonical_less gives the reporting order.
  bool operator<(const GroupElement& o) const { return full_ < o.full_; }
  const std::vector<SRoot>& full() const { return full_; }

 private:
  explicit GroupElement(std::vector<SRoot> f) : full_(std::move(f)) {}
  std::vector<SRoot> full_;  // full_[i] = w(alpha_i)
};

// Ordering by length, then one-line permutation (type A) or simple images.
bool canonical_less(const RootSystem& rs, const GroupElement& a, const GroupElement& b);

bool bruhat_leq(const RootSystem& rs, const GroupElement& u, const GroupElement& w);

// T_w = {|w(beta)| : beta simple}, sorted.
std::vector<int> t_set(const RootSystem& rs, const GroupElement& w);

// All elements in canonical order; throws std::length_error above bound.
std::vector<GroupElement> enumerate_group(const RootSystem& rs, std::size_t bound = 3628800);

int element_order(const RootSystem& rs, const GroupElement& w);
long long exponent(const RootSystem& rs, std::size_t bound = 3628800);

}  // namespace nichols
