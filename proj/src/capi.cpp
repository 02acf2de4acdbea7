#include "nichols/nichols.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <string>

#include "nichols/disjoint.hpp"
#include "nichols/integrals.hpp"
#include "nichols/reduction.hpp"

using namespace nichols;

namespace {

thread_local std::string g_last_error;

std::mutex g_prime_mutex;
int g_prime_users = 0;

struct Failure {
  nw_status status;
  std::string message;
  json partial;  // null unless a partial report exists
};

template <class F>
struct Engine {
  using Field = F;
  Algebra<F> alg;
  std::unique_ptr<NilCoxeter<F>> nc;

  Engine(const RootSystem& rs, AlgebraConfig cfg) : alg(rs, cfg) {}
  NilCoxeter<F>& nil() {
    if (!nc) nc = std::make_unique<NilCoxeter<F>>(alg);
    return *nc;
  }
};

}  // namespace

struct nw_context {
  std::unique_ptr<RootSystem> rs;
  bool prime = false;
  std::uint64_t p = ModP::kDefaultPrime;
  int cap = -1;
  long long memory_mb = 0;
  std::uint64_t seed = 1;
  int trials = 200;
  int max_degree = -1;
  bool exhaustive = true;
  std::unique_ptr<Engine<Rational>> q;
  std::unique_ptr<Engine<ModP>> m;

  AlgebraConfig algebra_config() const {
    AlgebraConfig c;
    c.degree_cap = cap;
    if (memory_mb > 0) c.memory_bound_bytes = static_cast<std::size_t>(memory_mb) << 20;
    return AlgebraConfig::with_env_overrides(c);
  }
  CheckOptions options() const { return CheckOptions{trials, seed, max_degree, exhaustive}; }

  json config() const {
    json c{{"type", rs->cartan().label()}, {"field", prime ? "prime" : "rational"}};
    if (prime) c["prime"] = p;
    c["cap"] = cap >= 0 ? cap : default_degree_cap(*rs);
    c["seed"] = seed;
    c["trials"] = trials;
    if (max_degree >= 0) c["max_degree"] = max_degree;
    c["exhaustive"] = exhaustive;
    c["memory_bound_mb"] = algebra_config().memory_bound_bytes >> 20;
    return c;
  }

  // Calls f with the engine of the configured field.
  template <class Fn>
  json with_engine(Fn&& f) {
    if (prime) {
      if (!m) m = std::make_unique<Engine<ModP>>(*rs, algebra_config());
      return f(*m);
    }
    if (!q) q = std::make_unique<Engine<Rational>>(*rs, algebra_config());
    return f(*q);
  }
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

json envelope(nw_context* ctx, const std::string& command) {
  json j{{"engine", {{"name", "nichols"}, {"version", NICHOLS_VERSION}}}, {"command", command}};
  if (ctx) j["config"] = ctx->config();
  return j;
}

// Runs body, fills *out with the envelope plus the result, maps exceptions.
template <class Fn>
nw_status guarded(nw_context* ctx, const std::string& command, char** out, Fn&& body) {
  if (out) *out = nullptr;
  if (!out) {
    g_last_error = "out pointer is NULL";
    return NW_ERR_INVALID_ARGUMENT;
  }
  json rep = envelope(ctx, command);
  auto fail = [&](nw_status s, const std::string& msg) {
    g_last_error = msg;
    rep["status"] = "error";
    rep["error"] = {{"code", nw_status_name(s)}, {"message", msg}};
    try {
      *out = dup(rep.dump(2));
    } catch (...) {
    }
    return s;
  };
  try {
    if (!ctx && command != "identities") return fail(NW_ERR_INVALID_ARGUMENT, "context is NULL");
    json result = body();
    if (result.contains("status")) {
      rep["status"] = result["status"];
      result.erase("status");
    } else {
      rep["status"] = "ok";
    }
    rep["result"] = std::move(result);
    *out = dup(rep.dump(2));
    return NW_OK;
  } catch (const Failure& f) {
    if (!f.partial.is_null()) {
      rep["partial"] = true;
      rep["result"] = f.partial;
    }
    return fail(f.status, f.message);
  } catch (const CapExceeded& e) {
    rep["partial"] = true;
    return fail(NW_ERR_CAP_EXCEEDED, e.what());
  } catch (const MemoryExceeded& e) {
    rep["partial"] = true;
    return fail(NW_ERR_MEMORY, e.what());
  } catch (const NotFinite& e) {
    return fail(NW_ERR_NOT_FINITE, e.what());
  } catch (const NotTypeA& e) {
    return fail(NW_ERR_UNSUPPORTED, e.what());
  } catch (const std::bad_alloc&) {
    rep["partial"] = true;
    return fail(NW_ERR_MEMORY, "out of memory");
  } catch (const json::exception& e) {
    return fail(NW_ERR_INVALID_ARGUMENT, std::string("malformed JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::length_error& e) {
    return fail(NW_ERR_CAP_EXCEEDED, e.what());
  } catch (const std::exception& e) {
    return fail(NW_ERR_INTERNAL, e.what());
  }
}

json parse_or(const char* s, json dflt) {
  if (!s || !*s) return dflt;
  return json::parse(s);
}

int root_from_json(const RootSystem& rs, const json& j) {
  if (j.is_number_integer()) {
    int i = j.get<int>();
    if (i < 0 || i >= rs.num_positive()) throw std::invalid_argument("root index out of range");
    return i;
  }
  const std::string s = j.get<std::string>();
  for (int i = 0; i < rs.num_positive(); ++i)
    if (rs.root_name(i) == s) return i;
  throw std::invalid_argument("unknown root \"" + s + "\"");
}

Word monomial_from_json(const RootSystem& rs, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("monomial must be an array of roots");
  Word w;
  for (const auto& x : j) w.push_back(root_from_json(rs, x));
  return w;
}

GroupElement element_from_string(const RootSystem& rs, const std::string& s) {
  if (s == "1" || s == "e") return GroupElement::identity(rs);
  if (!s.empty() && s[0] == 's') {
    std::vector<int> word;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != 's') throw std::invalid_argument("bad word \"" + s + "\"");
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      word.push_back(std::stoi(s.substr(i + 1, j - i - 1)) - 1);
      i = j;
    }
    for (int k : word)
      if (k < 0 || k >= rs.rank()) throw std::invalid_argument("simple index out of range in \"" + s + "\"");
    return GroupElement::from_word(rs, word);
  }
  if (!rs.type_a()) throw std::invalid_argument("one-line notation needs type A");
  std::vector<int> p;
  if (s.find(',') != std::string::npos) {
    std::size_t i = 0;
    while (i <= s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      p.push_back(std::stoi(s.substr(i, j - i)));
      i = j + 1;
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad permutation \"" + s + "\"");
      p.push_back(c - '0');
    }
  }
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == static_cast<std::size_t>(rs.rank() + 1);
  for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<int>(i) + 1;
  if (!ok)
    throw std::invalid_argument("\"" + s + "\" is not a permutation of 1.." + std::to_string(rs.rank() + 1));
  return GroupElement::from_perm(rs, p);
}

std::vector<GroupElement> elements_from_json(const RootSystem& rs, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of group elements");
  std::vector<GroupElement> out;
  for (const auto& e : j) out.push_back(e.is_string() ? element_from_string(rs, e.get<std::string>()) : group_from_json(rs, e));
  return out;
}

template <class F>
Element<F> algebra_element(Algebra<F>& a, const json& j) {
  if (j.is_array()) return a.from_word(monomial_from_json(a.roots(), j));
  return element_from_json(a, j);
}

std::string dims_label(bool prime) { return prime ? "mod-p lower-bound certified" : "exact"; }

template <class F>
json dims_json(nw_context* ctx, Algebra<F>& a, int max_degree) {
  json d = json::array();
  const int last = a.finite() ? a.top_degree() : a.constructed();
  for (int n = 0; n <= last; ++n) d.push_back(a.dim(n));
  long long total = 0;
  for (const auto& x : d) total += x.get<long long>();
  json r{{"label", dims_label(ctx->prime)}, {"dims", d}, {"constructed", last}, {"finite", a.finite()}};
  if (a.finite()) {
    r["top_degree"] = a.top_degree();
    r["total"] = total;
    bool pal = true;
    for (int n = 0; n <= a.top_degree(); ++n) pal = pal && d[n] == d[a.top_degree() - n];
    r["palindromic"] = pal;
  }
  r["complete"] = a.finite() || (max_degree >= 0 && a.constructed() >= max_degree);
  return r;
}

json report_json(const IdentityReport& r) { return r.to_json(); }

// Order-two disjoint systems for the invariance suite.
std::vector<std::vector<GroupElement>> order_two_systems(const RootSystem& rs) {
  std::vector<std::vector<GroupElement>> out;
  for (const auto& d : search_complete(rs))
    if (d.order() == 2) out.push_back(d.elements);
  if (out.empty()) {
    auto cen = centralizer_of_longest(rs);
    for (std::size_t j = 1; j < cen.size() && out.empty(); ++j)
      if (classify(rs, {cen[0], cen[j]}).valid()) out.push_back({cen[0], cen[j]});
  }
  return out;
}

const char* const kIdentities[] = {
    "dual-paths",   "orthonormality",   "pairing-contracts", "rho-realization", "equivariance",
    "rhoD",         "nz-antipode",      "basic-rev",         "gen-leibniz",     "skew-commutation",
    "integral",     "invariance",       "hypothetical",      "reduction",       "fact-t",
    "remark-t",     "translation-closure", "motiv",          "bracket"};

template <class F>
IdentityReport run_identity(nw_context* ctx, Engine<F>& e, const std::string& id) {
  Algebra<F>& a = e.alg;
  const RootSystem& rs = *ctx->rs;
  const CheckOptions opt = ctx->options();
  if (id == "dual-paths") return check_dual_paths(a, opt);
  if (id == "orthonormality") return check_orthonormality(e.nil());
  if (id == "pairing-contracts") return check_pairing_contracts(a, opt);
  if (id == "rho-realization") return check_rho_realization(a, opt);
  if (id == "equivariance") return check_equivariance(a, opt);
  if (id == "rhoD") return check_rhoD(a, opt);
  if (id == "nz-antipode") return check_nz_antipode(a, opt);
  if (id == "basic-rev") return check_basic_rev(e.nil(), opt);
  if (id == "gen-leibniz") return check_gen_leibniz_suite(e.nil(), opt);
  if (id == "skew-commutation") return check_skew_suite(e.nil(), opt);
  if (id == "integral") return certificate_checks(a, top_integral(a));
  if (id == "invariance") return invariance_suite(e.nil(), top_integral(a), order_two_systems(rs), opt);
  if (id == "hypothetical") return hypothetical_checks(e.nil(), subalgebra_build(a, nonsimple_roots(rs)));
  if (id == "reduction") return check_reduction(a, opt);
  if (id == "fact-t") return check_fact_t(rs);
  if (id == "remark-t") return check_remark_t(rs);
  if (id == "translation-closure") return check_translation_closure(rs, search_complete(rs));
  if (id == "motiv") return check_motiv_suite(e.nil(), search_complete(rs), 20, opt.seed);
  if (id == "bracket") return check_bracket_suite(e.nil());
  throw Failure{NW_ERR_UNKNOWN_IDENTITY, "unknown identity \"" + id + "\"", nullptr};
}

}  // namespace

extern "C" {

const char* nw_version(void) { return NICHOLS_VERSION; }

const char* nw_status_name(nw_status s) {
  switch (s) {
    case NW_OK: return "ok";
    case NW_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case NW_ERR_UNKNOWN_IDENTITY: return "unknown-identity";
    case NW_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case NW_ERR_MEMORY: return "memory-exceeded";
    case NW_ERR_NOT_FINITE: return "not-finite";
    case NW_ERR_UNSUPPORTED: return "unsupported";
    case NW_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* nw_last_error(void) { return g_last_error.c_str(); }

void nw_string_free(char* s) { std::free(s); }

nw_status nw_context_create(const char* type, int rank, const char* config_json, nw_context** out) {
  if (!out) {
    g_last_error = "out pointer is NULL";
    return NW_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    if (!type) throw std::invalid_argument("type is NULL");
    auto ctx = std::make_unique<nw_context>();
    ctx->rs = std::make_unique<RootSystem>(CartanData::parse(type, rank));
    json c = parse_or(config_json, json::object());
    if (!c.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [k, v] : c.items()) {
      if (k == "field") {
        const auto f = v.get<std::string>();
        if (f != "rational" && f != "prime") throw std::invalid_argument("field must be \"rational\" or \"prime\"");
        ctx->prime = f == "prime";
      } else if (k == "prime") {
        ctx->p = v.get<std::uint64_t>();
      } else if (k == "cap") {
        ctx->cap = v.get<int>();
      } else if (k == "memory_mb") {
        ctx->memory_mb = v.get<long long>();
      } else if (k == "seed") {
        ctx->seed = v.get<std::uint64_t>();
      } else if (k == "trials") {
        ctx->trials = v.get<int>();
      } else if (k == "max_degree") {
        ctx->max_degree = v.get<int>();
      } else if (k == "exhaustive") {
        ctx->exhaustive = v.get<bool>();
      } else {
        throw std::invalid_argument("unknown config key \"" + k + "\"");
      }
    }
    if (ctx->trials < 0) throw std::invalid_argument("trials must be non-negative");
    if (ctx->prime) {
      if (ctx->p <= 2 || ctx->p >= (std::uint64_t(1) << 62)) throw std::invalid_argument("prime must satisfy 2 < p < 2^62");
      for (std::uint64_t d = 2; d * d <= ctx->p; ++d)
        if (ctx->p % d == 0) throw std::invalid_argument(std::to_string(ctx->p) + " is not prime");
      std::lock_guard<std::mutex> lock(g_prime_mutex);
      if (g_prime_users > 0 && ModP::modulus() != ctx->p)
        throw std::invalid_argument("another prime-field context uses p = " + std::to_string(ModP::modulus()));
      ModP::set_modulus(ctx->p);
      ++g_prime_users;
    }
    *out = ctx.release();
    return NW_OK;
  } catch (const json::exception& e) {
    g_last_error = std::string("malformed config: ") + e.what();
  } catch (const std::exception& e) {
    g_last_error = e.what();
  }
  return NW_ERR_INVALID_ARGUMENT;
}

void nw_context_destroy(nw_context* ctx) {
  if (!ctx) return;
  if (ctx->prime) {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    --g_prime_users;
  }
  delete ctx;
}

nw_status nw_roots(nw_context* ctx, char** out) {
  return guarded(ctx, "roots", out, [&] {
    const RootSystem& rs = *ctx->rs;
    json roots = json::array();
    for (int i = 0; i < rs.num_positive(); ++i)
      roots.push_back({{"index", i}, {"name", rs.root_name(i)}, {"coefficients", rs.root(i)},
                       {"height", rs.height(i)}, {"simple", rs.is_simple(i)}});
    return json{{"rank", rs.rank()}, {"num_positive", rs.num_positive()}, {"roots", roots}};
  });
}

nw_status nw_group(nw_context* ctx, char** out) {
  return guarded(ctx, "group", out, [&] {
    const RootSystem& rs = *ctx->rs;
    auto g = enumerate_group(rs);
    std::vector<int> poincare;
    json elems = json::array();
    for (const auto& w : g) {
      if (w.length() >= static_cast<int>(poincare.size())) poincare.resize(w.length() + 1, 0);
      ++poincare[w.length()];
      if (g.size() <= 5040) elems.push_back({{"element", group_to_json(rs, w)}, {"length", w.length()}});
    }
    json cen = json::array();
    for (const auto& w : centralizer_of_longest(rs)) cen.push_back(group_to_json(rs, w));
    json r{{"order", g.size()},
           {"longest", group_to_json(rs, GroupElement::longest(rs))},
           {"poincare", poincare},
           {"exponent", exponent(rs)},
           {"centralizer_of_longest", cen}};
    if (g.size() <= 5040) r["elements"] = elems;
    return r;
  });
}

nw_status nw_dims(nw_context* ctx, int max_degree, char** out) {
  return guarded(ctx, "dims", out, [&] {
    return ctx->with_engine([&](auto& e) {
      auto& a = e.alg;
      try {
        a.build(max_degree);
      } catch (const MemoryExceeded& ex) {
        throw Failure{NW_ERR_MEMORY, ex.what(), dims_json(ctx, a, max_degree)};
      }
      json r = dims_json(ctx, a, max_degree);
      if (!r["complete"].get<bool>())
        throw Failure{NW_ERR_CAP_EXCEEDED, "degree cap " + std::to_string(a.degree_cap()) + " reached before the top degree", r};
      return r;
    });
  });
}

nw_status nw_hilbert(nw_context* ctx, char** out) {
  return guarded(ctx, "hilbert", out, [&] {
    return ctx->with_engine([&](auto& e) {
      auto& a = e.alg;
      auto poly = [&] {
        std::string s;
        for (int n = 0; n <= a.constructed(); ++n) {
          const int d = a.dim(n);
          if (!d) continue;
          std::string term = n > 0 && d == 1 ? "" : std::to_string(d);
          if (n > 0) term += "t";
          if (n > 1) term += "^" + std::to_string(n);
          s += (s.empty() ? "" : " + ") + term;
        }
        return s;
      };
      try {
        a.build();
      } catch (const MemoryExceeded& ex) {
        throw Failure{NW_ERR_MEMORY, ex.what(), json{{"series", poly()}}};
      }
      json r = dims_json(ctx, a, -1);
      r["series"] = poly();
      if (!a.finite())
        throw Failure{NW_ERR_CAP_EXCEEDED, "degree cap " + std::to_string(a.degree_cap()) + " reached; series truncated", r};
      return r;
    });
  });
}

nw_status nw_identities(char** out) {
  return guarded(nullptr, "identities", out, [&] {
    json ids = json::array();
    for (const char* s : kIdentities) ids.push_back(s);
    return json{{"identities", ids}};
  });
}

nw_status nw_verify(nw_context* ctx, const char* identity, char** out) {
  const std::string id = identity ? identity : "";
  return guarded(ctx, "verify " + id, out, [&] {
    return ctx->with_engine([&](auto& e) {
      json reports = json::array();
      bool pass = true;
      auto run = [&](const std::string& name) {
        auto r = run_identity(ctx, e, name);
        pass = pass && r.pass;
        reports.push_back(report_json(r));
      };
      if (id == "all") {
        for (const char* s : kIdentities) run(s);
      } else {
        run(id);
      }
      return json{{"status", pass ? "pass" : "fail"}, {"reports", reports}};
    });
  });
}

nw_status nw_integral(nw_context* ctx, char** out) {
  return guarded(ctx, "integral", out, [&] {
    return ctx->with_engine([&](auto& e) {
      auto cert = top_integral(e.alg);
      auto rep = certificate_checks(e.alg, cert);
      return json{{"status", rep.pass ? "pass" : "fail"}, {"certificate", cert.to_json(e.alg)}, {"report", rep.to_json()}};
    });
  });
}

nw_status nw_hypothetical(nw_context* ctx, char** out) {
  return guarded(ctx, "hypo", out, [&] {
    return ctx->with_engine([&](auto& e) {
      const RootSystem& rs = *ctx->rs;
      auto theta = nonsimple_roots(rs);
      auto sub = subalgebra_build(e.alg, theta);
      json dims = json::array();
      for (const auto& sp : sub.spaces) dims.push_back(sp.size());
      json th = json::array();
      for (int t : theta) th.push_back(rs.root_name(t));
      auto rep = hypothetical_checks(e.nil(), sub);
      return json{{"status", rep.pass ? "pass" : "fail"},
                  {"theta", th},
                  {"subalgebra_dims", dims},
                  {"subalgebra_top", sub.top},
                  {"report", rep.to_json()}};
    });
  });
}

nw_status nw_reduce(nw_context* ctx, const char* monomial_json, const char* options_json, char** out) {
  return guarded(ctx, "reduce", out, [&] {
    const RootSystem& rs = *ctx->rs;
    const Word m = monomial_from_json(rs, parse_or(monomial_json, json::array()));
    const json o = parse_or(options_json, json::object());
    const std::string side = o.value("side", "right"), policy = o.value("policy", "min_root");
    if (side != "right" && side != "left") throw std::invalid_argument("side must be \"right\" or \"left\"");
    if (policy != "min_root" && policy != "max_root") throw std::invalid_argument("policy must be \"min_root\" or \"max_root\"");
    const bool oracle = o.value("oracle", false);
    return ctx->with_engine([&](auto& e) {
      using F = typename std::decay_t<decltype(e)>::Field;
      Reducer<F> red(rs, policy == "min_root" ? ReductionPolicy::min_root : ReductionPolicy::max_root);
      auto r = side == "right" ? red.right(m) : red.left(m);
      json j = r.to_json(rs);
      j["monomial"] = m;
      j["side"] = side;
      j["policy"] = policy;
      if (oracle) {
        const int n = static_cast<int>(m.size());
        auto z = Element<F>::homogeneous(n, e.alg.from_word(m).component(n));
        auto res = ideal_membership_oracle(e.alg, z, side == "right" ? IdealSide::right : IdealSide::left);
        json nf = json::array();
        for (const auto& [w, c] : res.normal_form) nf.push_back({{"w", group_to_json(rs, w)}, {"coeff", to_string(c)}});
        F got = res.normal_form.count(r.w) ? res.normal_form.at(r.w) : F(0);
        const bool agree = got == r.lambda && res.normal_form.size() <= 1;
        j["oracle"] = {{"member", res.member}, {"normal_form", nf}, {"quotient_dim", res.quotient_dim}, {"agrees", agree}};
        j["status"] = agree ? "pass" : "fail";
      }
      return j;
    });
  });
}

nw_status nw_disjoint_search(nw_context* ctx, const char* options_json, char** out) {
  return guarded(ctx, "disjoint", out, [&] {
    const RootSystem& rs = *ctx->rs;
    const json o = parse_or(options_json, json::object());
    SearchOptions so;
    so.max_solutions = o.value("max_solutions", std::size_t(0));
    auto found = search_complete(rs, so);
    json sys = json::array();
    for (const auto& d : found) sys.push_back(d.to_json(rs));
    const bool divisible = rs.num_positive() % rs.rank() == 0;
    json r{{"reflections", rs.num_positive()}, {"simple", rs.rank()}, {"divisible", divisible},
           {"found", !found.empty()}, {"count", found.size()}, {"systems", sys}};
    if (divisible) r["order"] = rs.num_positive() / rs.rank();
    return r;
  });
}

nw_status nw_disjoint_check(nw_context* ctx, const char* elements_json, char** out) {
  return guarded(ctx, "disjoint --check", out, [&] {
    const RootSystem& rs = *ctx->rs;
    auto c = classify(rs, elements_from_json(rs, parse_or(elements_json, json::array())));
    json j = c.to_json(rs);
    j["status"] = c.valid() ? "pass" : "fail";
    return j;
  });
}

nw_status nw_pairing(nw_context* ctx, const char* a_json, const char* b_json, char** out) {
  return guarded(ctx, "pairing", out, [&] {
    const json ja = parse_or(a_json, nullptr), jb = parse_or(b_json, nullptr);
    if (ja.is_null() || jb.is_null()) throw std::invalid_argument("pairing needs two elements");
    return ctx->with_engine([&](auto& e) {
      auto x = algebra_element(e.alg, ja);
      auto y = algebra_element(e.alg, jb);
      return json{{"value", to_string(e.alg.pairing(x, y))}};
    });
  });
}

nw_status nw_bracket(nw_context* ctx, const char* elements_json, char** out) {
  return guarded(ctx, "bracket", out, [&] {
    const RootSystem& rs = *ctx->rs;
    std::vector<GroupElement> ord;
    const json je = parse_or(elements_json, nullptr);
    if (je.is_null()) {
      auto found = search_complete(rs, SearchOptions{3628800, 1});
      if (found.empty()) throw std::invalid_argument("no complete disjoint system; pass elements explicitly");
      ord = found.front().elements;
    } else {
      ord = elements_from_json(rs, je);
    }
    auto c = classify(rs, ord);
    if (!c.valid()) throw std::invalid_argument("elements do not form a disjoint system: " + c.to_json(rs)["witness"].dump());
    return ctx->with_engine([&](auto& e) {
      auto& a = e.alg;
      a.build();
      const int deg = static_cast<int>(ord.size()) * e.nil().longest().length();
      if (!a.finite() || deg > a.top_degree())
        throw std::invalid_argument("r l(w_o) = " + std::to_string(deg) + " exceeds the constructed top degree");
      auto bm = bracket_matrix(e.nil(), ord);
      json perms = bm.perms, eng = json::array();
      for (const auto& row : bm.engine) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        eng.push_back(r);
      }
      json el = json::array();
      for (const auto& w : ord) el.push_back(group_to_json(rs, w));
      return json{{"status", bm.match ? "pass" : "fail"}, {"ordering", el}, {"perms", perms},
                  {"engine", eng}, {"formula", bm.formula}, {"match", bm.match}};
    });
  });
}

}  // extern "C"
