#include "nichols/disjoint.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "nichols/integrals.hpp"

namespace nichols {

namespace {

bool centralizes(const GroupElement& w, const GroupElement& wo) { return w * wo == wo * w; }

void sort_canonical(const RootSystem& rs, std::vector<GroupElement>& v) {
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return canonical_less(rs, a, b); });
}

json roots_json(const RootSystem& rs, const std::vector<int>& roots) {
  json j = json::array();
  for (int r : roots) j.push_back(rs.type_a() ? json(rs.root_name(r)) : root_to_json(rs, r));
  return j;
}

void tick(IdentityReport& rep, const std::string& name, bool ok, const std::string& note = "") {
  auto& it = rep.item(name);
  ++it.checked;
  if (!ok) {
    if (it.pass && !note.empty()) it.note = note;
    it.pass = false;
    if (rep.pass) rep.counterexample = {{"item", name}, {"inputs", note}};
    rep.pass = false;
  }
}

// Builds the system from elements already known to be valid.
DisjointSystem assemble(const RootSystem& rs, std::vector<GroupElement> elems) {
  sort_canonical(rs, elems);
  DisjointSystem d;
  d.elements = std::move(elems);
  std::size_t covered = 0;
  for (const auto& w : d.elements) {
    d.blocks.push_back(t_set(rs, w));
    covered += d.blocks.back().size();
    if (w.is_identity()) d.normalized = true;
  }
  d.complete = covered == static_cast<std::size_t>(rs.num_positive());
  return d;
}

}  // namespace

std::vector<GroupElement> centralizer_of_longest(const RootSystem& rs, std::size_t bound) {
  std::vector<GroupElement> out;
  if (rs.type_a()) {
    const int m = rs.rank() + 1;
    std::vector<int> sigma(m + 1, 0);
    std::vector<bool> used(m + 1, false);
    // pairs (i, m+1-i) map onto pairs (j, m+1-j); a middle point stays fixed
    std::function<void(int)> rec = [&](int i) {
      if (i > m / 2) {
        if (m % 2) sigma[(m + 1) / 2] = (m + 1) / 2;
        out.push_back(GroupElement::from_perm(rs, std::vector<int>(sigma.begin() + 1, sigma.end())));
        return;
      }
      for (int j = 1; j <= m; ++j) {
        if (used[j] || (m % 2 && j == (m + 1) / 2)) continue;
        sigma[i] = j;
        sigma[m + 1 - i] = m + 1 - j;
        used[j] = used[m + 1 - j] = true;
        rec(i + 1);
        used[j] = used[m + 1 - j] = false;
      }
    };
    rec(1);
  } else {
    const auto wo = GroupElement::longest(rs);
    for (const auto& w : enumerate_group(rs, bound))
      if (centralizes(w, wo)) out.push_back(w);
  }
  sort_canonical(rs, out);
  return out;
}

json DisjointSystem::to_json(const RootSystem& rs) const {
  json bl = json::array();
  for (std::size_t i = 0; i < elements.size(); ++i)
    bl.push_back({{"element", group_to_json(rs, elements[i])}, {"block", roots_json(rs, blocks[i])}});
  return {{"order", order()}, {"normalized", normalized}, {"complete", complete}, {"blocks", bl}};
}

json DisjointViolation::to_json(const RootSystem& rs) const {
  switch (kind) {
    case Kind::not_centralizing:
      return {{"violation", "not-centralizing"}, {"element", group_to_json(rs, w)}};
    case Kind::repeated:
      return {{"violation", "repeated"}, {"element", group_to_json(rs, w)}};
    case Kind::overlap:
      break;
  }
  return {{"violation", "overlap"},
          {"element", group_to_json(rs, w)},
          {"other", group_to_json(rs, w2)},
          {"shared_root", rs.type_a() ? json(rs.root_name(root)) : root_to_json(rs, root)}};
}

json Classification::to_json(const RootSystem& rs) const {
  json j{{"valid", valid()}};
  if (system) j["system"] = system->to_json(rs);
  if (violation) j["witness"] = violation->to_json(rs);
  return j;
}

Classification classify(const RootSystem& rs, const std::vector<GroupElement>& d) {
  using K = DisjointViolation::Kind;
  Classification c;
  const auto wo = GroupElement::longest(rs);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (d[i] == d[j]) {
        c.violation = DisjointViolation{K::repeated, d[i], d[i], -1};
        return c;
      }
    if (!centralizes(d[i], wo)) {
      c.violation = DisjointViolation{K::not_centralizing, d[i], d[i], -1};
      return c;
    }
  }
  std::vector<int> owner(rs.num_positive(), -1);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int r : t_set(rs, d[i])) {
      if (owner[r] >= 0) {
        c.violation = DisjointViolation{K::overlap, d[owner[r]], d[i], r};
        return c;
      }
      owner[r] = static_cast<int>(i);
    }
  c.system = assemble(rs, d);
  return c;
}

DisjointSystem translate(const RootSystem& rs, const DisjointSystem& d, const GroupElement& v) {
  if (!centralizes(v, GroupElement::longest(rs))) throw std::invalid_argument("translation by a non-centralizing element");
  std::vector<GroupElement> e;
  for (const auto& w : d.elements) e.push_back(v * w);
  auto c = classify(rs, e);
  if (!c.valid()) throw std::logic_error("translate produced an invalid system");
  return *c.system;
}

DisjointSystem normalize(const RootSystem& rs, const DisjointSystem& d) {
  if (d.elements.empty()) return d;
  return translate(rs, d, d.elements.front().inverse());
}

std::vector<DisjointSystem> search_complete(const RootSystem& rs, const SearchOptions& opt) {
  std::vector<DisjointSystem> out;
  const int nT = rs.num_positive(), nS = rs.rank();
  if (nT % nS) return out;
  const int r = nT / nS;
  const auto wo = GroupElement::longest(rs);

  // one candidate per class {w, w w_o}: the canonically smaller one
  std::vector<GroupElement> cand;
  std::vector<std::vector<int>> block;
  std::set<GroupElement> seen;
  for (const auto& w : centralizer_of_longest(rs, opt.bound)) {
    if (seen.count(w)) continue;
    seen.insert(w);
    seen.insert(w * wo);
    cand.push_back(w);
    block.push_back(t_set(rs, w));
  }
  const int nc = static_cast<int>(cand.size());
  std::vector<std::vector<int>> containing(nT);
  for (int i = 0; i < nc; ++i)
    for (int t : block[i]) containing[t].push_back(i);

  std::vector<bool> covered(nT, false);
  std::vector<int> chosen;
  auto place = [&](int i, bool on) {
    for (int t : block[i]) covered[t] = on;
  };
  auto fits = [&](int i) {
    for (int t : block[i])
      if (covered[t]) return false;
    return true;
  };
  bool stop = false;
  std::function<void()> rec = [&] {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == r) {
      std::vector<GroupElement> e;
      for (int i : chosen) e.push_back(cand[i]);
      out.push_back(assemble(rs, e));
      if (opt.max_solutions && out.size() >= opt.max_solutions) stop = true;
      return;
    }
    // uncovered root with the fewest fitting blocks
    int best = -1;
    std::size_t fewest = SIZE_MAX;
    for (int t = 0; t < nT; ++t) {
      if (covered[t]) continue;
      std::size_t k = 0;
      for (int i : containing[t]) k += fits(i);
      if (k < fewest) {
        fewest = k;
        best = t;
      }
    }
    if (best < 0 || fewest == 0) return;
    for (int i : containing[best]) {
      if (!fits(i)) continue;
      chosen.push_back(i);
      place(i, true);
      rec();
      place(i, false);
      chosen.pop_back();
    }
  };
  // normalized: the identity block is always chosen
  chosen.push_back(0);
  place(0, true);
  rec();
  return out;
}

IdentityReport check_fact_t(const RootSystem& rs) {
  IdentityReport rep;
  rep.name = "fact-t";
  rep.parameters = {{"type", rs.cartan().label()}};
  const auto wo = GroupElement::longest(rs);
  for (const auto& w : centralizer_of_longest(rs)) {
    const auto T = t_set(rs, w);
    const std::string n = w.name(rs);
    tick(rep, "T_{w_o w} = T_w", t_set(rs, wo * w) == T, n);
    tick(rep, "T_{w w_o} = T_w", t_set(rs, w * wo) == T, n);
    ++rep.trials;
  }
  return rep;
}

IdentityReport check_remark_t(const RootSystem& rs, std::size_t bound) {
  IdentityReport rep;
  rep.name = "remark-t";
  rep.parameters = {{"type", rs.cartan().label()}};
  const auto wo = GroupElement::longest(rs);
  std::map<std::vector<int>, std::vector<GroupElement>> by_t;
  for (const auto& w : enumerate_group(rs, bound)) by_t[t_set(rs, w)].push_back(w);
  for (const auto& [T, ws] : by_t) {
    bool ok = ws.size() == 2 && ws[1] == ws[0] * wo;
    if (wo.is_identity()) ok = ws.size() == 1;
    tick(rep, "T_w = T_w' iff w' in {w, w w_o}", ok, ws.front().name(rs));
    ++rep.trials;
  }
  return rep;
}

IdentityReport check_translation_closure(const RootSystem& rs, const std::vector<DisjointSystem>& systems) {
  IdentityReport rep;
  rep.name = "translation-closure";
  rep.parameters = {{"type", rs.cartan().label()}, {"systems", systems.size()}};
  const auto cen = centralizer_of_longest(rs);
  if (systems.empty()) rep.notices.push_back("no complete disjoint system");
  for (const auto& d : systems) {
    for (const auto& v : cen) {
      std::vector<GroupElement> e;
      for (const auto& w : d.elements) e.push_back(v * w);
      auto c = classify(rs, e);
      tick(rep, "vD is a disjoint system", c.valid(), v.name(rs));
      if (c.valid()) tick(rep, "vD keeps order and completeness",
                          c.system->order() == d.order() && c.system->complete == d.complete, v.name(rs));
    }
    for (const auto& v : d.elements) {
      auto n = translate(rs, d, v.inverse());
      tick(rep, "v^-1 D is normalized", n.normalized, v.name(rs));
    }
    ++rep.trials;
  }
  return rep;
}

template <class F>
IdentityReport motiv_check(NilCoxeter<F>& nc, const DisjointSystem& d, const std::vector<int>& ordering,
                           MotivValues* values) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  const int r = d.order();
  const int m = nc.longest().length();
  IdentityReport rep;
  rep.name = "motiv";
  rep.parameters = {{"type", rs.cartan().label()}, {"system", d.to_json(rs)}, {"ordering", ordering}};
  {
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> id(r);
    std::iota(id.begin(), id.end(), 0);
    if (sorted != id) throw std::invalid_argument("ordering is not a permutation of the system");
  }
  a.build();
  if (!a.finite() || r * m > a.top_degree()) {
    rep.notices.push_back("product degree exceeds the constructed range");
  }
  std::vector<Element<F>> y;
  for (const auto& w : d.elements) y.push_back(nc.y_element(w));
  auto product = [&](const std::vector<int>& ord) {
    Element<F> z = a.one();
    for (int i : ord) z = a.multiply(z, y[i]);
    return z;
  };
  auto nonzero_integral = [&](const Element<F>& z) { return !z.is_zero() && is_integral(a, z); };

  MotivValues v;
  v.product_integral = nonzero_integral(product(ordering));
  v.all_orderings = true;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  long long orderings = 0;
  do {
    ++orderings;
    if (!nonzero_integral(product(perm))) v.all_orderings = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  v.skew_commute = true;
  const F sign(m % 2 ? -1 : 1);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (a.multiply(y[i], y[j]) != a.multiply(y[j], y[i]) * sign) v.skew_commute = false;

  auto truth = [&](const std::string& name, bool t, long long n) {
    auto& it = rep.item(name);
    it.checked = n;
    it.pass = t;
    it.note = t ? "true" : "false";
  };
  truth("product in the given ordering is a nonzero integral", v.product_integral, 1);
  truth("every ordering gives a nonzero integral", v.all_orderings, orderings);
  truth("y_i y_j = (-1)^l(w_o) y_j y_i", v.skew_commute, static_cast<long long>(r) * (r - 1) / 2);
  auto& eq = rep.item("equivalence pattern");
  eq.checked = 1;
  eq.pass = v.consistent();
  rep.pass = v.consistent();
  if (!rep.pass) rep.counterexample = {{"item", "equivalence pattern"}, {"inputs", ordering}};
  rep.parameters["sign"] = m % 2 ? -1 : 1;
  rep.trials = 1;
  if (values) *values = v;
  return rep;
}

template <class F>
IdentityReport check_motiv_suite(NilCoxeter<F>& nc, const std::vector<DisjointSystem>& systems, int orderings,
                                 std::uint64_t seed) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "motiv-suite";
  rep.parameters = {{"type", rs.cartan().label()}, {"orderings", orderings}, {"seed", seed}};
  a.build();
  const int m = nc.longest().length();
  std::mt19937_64 rng(seed);
  int used = 0;
  json values = json::array();
  for (const auto& d : systems) {
    if (!a.finite() || d.order() * m > a.top_degree()) continue;
    ++used;
    for (int t = 0; t < orderings; ++t) {
      std::vector<int> ord(d.order());
      std::iota(ord.begin(), ord.end(), 0);
      std::shuffle(ord.begin(), ord.end(), rng);
      MotivValues v;
      motiv_check(nc, d, ord, &v);
      tick(rep, "equivalence pattern", v.consistent(), json(ord).dump());
      if (t == 0)
        values.push_back({{"system", d.to_json(rs)},
                          {"product_integral", v.product_integral},
                          {"all_orderings", v.all_orderings},
                          {"skew_commute", v.skew_commute}});
      ++rep.trials;
    }
  }
  rep.parameters["values"] = values;
  if (systems.empty())
    rep.notices.push_back("no complete disjoint system");
  else if (!used)
    rep.notices.push_back("no complete system within the constructed range");
  return rep;
}

template <class F>
IdentityReport check_bracket_suite(NilCoxeter<F>& nc) {
  Algebra<F>& a = nc.algebra();
  const RootSystem& rs = a.roots();
  IdentityReport rep;
  rep.name = "bracket";
  rep.parameters = {{"type", rs.cartan().label()}};
  a.build();
  const int m = nc.longest().length();
  const int top = a.finite() ? a.top_degree() : a.constructed();
  const auto cen = centralizer_of_longest(rs);
  for (const auto& w : cen)
    if (m <= top) {
      tick(rep, "r = 1", bracket_matrix(nc, {w}).match, w.name(rs));
      ++rep.trials;
    }
  if (2 * m <= top)
    for (std::size_t i = 0; i < cen.size(); ++i)
      for (std::size_t j = i + 1; j < cen.size(); ++j) {
        if (!classify(rs, {cen[i], cen[j]}).valid()) continue;
        tick(rep, "r = 2", bracket_matrix(nc, {cen[i], cen[j]}).match, cen[i].name(rs) + " " + cen[j].name(rs));
        ++rep.trials;
      }
  if (2 * m > top) rep.notices.push_back("r = 2 exceeds the top degree");
  return rep;
}

template IdentityReport check_motiv_suite(NilCoxeter<Rational>&, const std::vector<DisjointSystem>&, int,
                                          std::uint64_t);
template IdentityReport check_motiv_suite(NilCoxeter<ModP>&, const std::vector<DisjointSystem>&, int,
                                          std::uint64_t);
template IdentityReport check_bracket_suite(NilCoxeter<Rational>&);
template IdentityReport check_bracket_suite(NilCoxeter<ModP>&);
template IdentityReport motiv_check(NilCoxeter<Rational>&, const DisjointSystem&, const std::vector<int>&,
                                    MotivValues*);
template IdentityReport motiv_check(NilCoxeter<ModP>&, const DisjointSystem&, const std::vector<int>&,
                                    MotivValues*);

}  // namespace nichols
