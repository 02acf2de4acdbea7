#pragma once

#include <optional>
#include <vector>

#include "nichols/calculus.hpp"

namespace nichols {

// Elements commuting with w_o, in canonical order.  Type A uses the mirror
// criterion sigma(i) + sigma(m+1-i) = m+1; other types enumerate W.
std::vector<GroupElement> centralizer_of_longest(const RootSystem& rs, std::size_t bound = 3628800);

struct DisjointSystem {
  std::vector<GroupElement> elements;  // canonical order
  std::vector<std::vector<int>> blocks;  // blocks[i] = T_{elements[i]}
  bool normalized = false;               // contains 1
  bool complete = false;                 // blocks partition R^+

  int order() const { return static_cast<int>(elements.size()); }
  json to_json(const RootSystem& rs) const;
};

struct DisjointViolation {
  enum class Kind { not_centralizing, overlap, repeated } kind;
  GroupElement w, w2;  // w2 and root only for overlaps
  int root = -1;
  json to_json(const RootSystem& rs) const;
};

struct Classification {
  std::optional<DisjointSystem> system;
  std::optional<DisjointViolation> violation;
  bool valid() const { return system.has_value(); }
  json to_json(const RootSystem& rs) const;
};

Classification classify(const RootSystem& rs, const std::vector<GroupElement>& d);

// vD for v in the centralizer; throws std::invalid_argument otherwise.
DisjointSystem translate(const RootSystem& rs, const DisjointSystem& d, const GroupElement& v);
// v^{-1} D with v the canonically least element of D.
DisjointSystem normalize(const RootSystem& rs, const DisjointSystem& d);

struct SearchOptions {
  std::size_t bound = 3628800;  // group enumeration bound
  std::size_t max_solutions = 0;  // 0: all
};

// Normalized complete systems, one representative per {w, w w_o}.  Empty
// when |T| / |S| is not an integer.
std::vector<DisjointSystem> search_complete(const RootSystem& rs, const SearchOptions& opt = {});

// T_{w_o w} = T_{w w_o} = T_w on the centralizer.
IdentityReport check_fact_t(const RootSystem& rs);
// T_w = T_{w'} implies w' in {w, w w_o}, over all of W.
IdentityReport check_remark_t(const RootSystem& rs, std::size_t bound = 3628800);
// vD and v^{-1}D stay valid (and complete) for the given systems.
IdentityReport check_translation_closure(const RootSystem& rs, const std::vector<DisjointSystem>& systems);

struct MotivValues {
  bool product_integral = false;  // y_{pi(1)}...y_{pi(r)} is a nonzero integral
  bool all_orderings = false;     // the same for every ordering
  bool skew_commute = false;      // y_i y_j = (-1)^{l(w_o)} y_j y_i for all i, j
  bool consistent() const {
    return product_integral == all_orderings && all_orderings == skew_commute;
  }
};

// ordering is a permutation of 0..r-1 indexing d.elements.
template <class F>
IdentityReport motiv_check(NilCoxeter<F>& nc, const DisjointSystem& d, const std::vector<int>& ordering,
                           MotivValues* values = nullptr);

// motiv_check on every system whose product fits the constructed range,
// each under `orderings` seeded random orderings.
template <class F>
IdentityReport check_motiv_suite(NilCoxeter<F>& nc, const std::vector<DisjointSystem>& systems, int orderings,
                                 std::uint64_t seed);

// Bracket matrices against the closed sign formula: r = 1 for every
// centralizer element, r = 2 for every disjoint pair, where r l(w_o) <= top.
template <class F>
IdentityReport check_bracket_suite(NilCoxeter<F>& nc);

}  // namespace nichols
