#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nichols/nichols.h"

using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCap = 3, kError = 4 };

struct Options {
  std::string type = "A";
  int rank = 2;
  std::string field = "rational";
  unsigned long long prime = 2147483647ULL;
  int cap = -1;
  unsigned long long seed = 1;
  int trials = 200;
  std::string format = "auto";
  long long memory_mb = 0;
  int max_degree = -1;
  bool sampled = false;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

// "[0,2]" passes through; "(12),(13)" or "0,2" becomes a JSON array.
std::string list_arg(const std::string& s, bool numbers_as_ints) {
  std::string t = s;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) return t;
  json a = json::array();
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    bool digits = cur.find_first_not_of("0123456789") == std::string::npos;
    if (numbers_as_ints && digits)
      a.push_back(std::stoi(cur));
    else
      a.push_back(cur);
    cur.clear();
  };
  int depth = 0;
  for (char c : t) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || std::isspace(static_cast<unsigned char>(c))) && depth == 0) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return a.dump();
}

int exit_for(nw_status s) {
  switch (s) {
    case NW_OK: return kOk;
    case NW_ERR_UNKNOWN_IDENTITY: return kUsage;
    case NW_ERR_CAP_EXCEEDED:
    case NW_ERR_MEMORY: return kCap;
    default: return kError;
  }
}

std::string csv_dims(const json& dims) {
  std::string s;
  for (std::size_t n = 0; n < dims.size(); ++n) s += (n ? "," : "") + std::to_string(n) + ":" + dims[n].dump();
  return s;
}

void print_text(const std::string& command, const json& rep) {
  const json& r = rep.contains("result") ? rep["result"] : json::object();
  if (rep.contains("error")) std::cout << "error: " << rep["error"]["message"].get<std::string>() << "\n";
  if (command == "dims" || command == "hilbert") {
    if (r.contains("dims")) std::cout << "dims (" << r["label"].get<std::string>() << "): " << csv_dims(r["dims"]) << "\n";
    if (r.contains("total")) std::cout << "total " << r["total"] << ", top degree " << r["top_degree"] << "\n";
    if (r.contains("series")) std::cout << "H(t) = " << r["series"].get<std::string>() << "\n";
    return;
  }
  if (command == "verify") {
    for (const auto& id : r.value("identities", json::array())) std::cout << id.get<std::string>() << "\n";
    for (const auto& x : r.value("reports", json::array())) {
      std::cout << x["identity"].get<std::string>() << ": " << x["status"].get<std::string>() << "\n";
      for (const auto& it : x["items"])
        std::cout << "  " << it["status"].get<std::string>() << "  " << it["name"].get<std::string>() << " ("
                  << it["checked"] << " checked)\n";
      for (const auto& n : x.value("notices", json::array())) std::cout << "  note: " << n.get<std::string>() << "\n";
    }
    if (rep.contains("status")) std::cout << "status: " << rep["status"].get<std::string>() << "\n";
    return;
  }
  if (command == "reduce" && r.contains("lambda")) {
    std::cout << "lambda = " << r["lambda"].get<std::string>() << ", w = " << r["w"].dump() << "\n";
    for (const auto& st : r["trace"]) std::cout << "  " << st.dump() << "\n";
    if (r.contains("oracle")) std::cout << "oracle agrees: " << r["oracle"]["agrees"] << "\n";
    return;
  }
  if (command == "disjoint" && r.contains("systems")) {
    std::cout << r["count"] << " complete system(s)\n";
    for (const auto& d : r["systems"]) {
      for (const auto& b : d["blocks"]) std::cout << "  " << b["element"].dump() << " " << b["block"].dump() << "\n";
      std::cout << "\n";
    }
    return;
  }
  std::cout << rep.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Nichols-Woronowicz algebras of Coxeter groups"};
  app.set_version_flag("--version", std::string(nw_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--type", o.type, "Cartan type: A, D or E")->check(CLI::IsMember({"A", "D", "E"}));
  app.add_option("--rank", o.rank, "Rank of the root system")->check(CLI::PositiveNumber);
  app.add_option("--field", o.field, "rational or prime")->check(CLI::IsMember({"rational", "prime"}));
  app.add_option("--prime", o.prime, "Modulus in prime mode");
  app.add_option("--cap", o.cap, "Degree cap for the construction");
  app.add_option("--seed", o.seed, "RNG seed for sampled checks");
  app.add_option("--trials", o.trials, "Samples per sampled check")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "json, text or csv (auto: csv for dims, json otherwise)")
      ->check(CLI::IsMember({"auto", "json", "text", "csv"}));
  app.add_option("--memory-mb", o.memory_mb, "Memory bound in MiB (NICHOLS_MEMORY_MB overrides)");
  app.add_option("--max-degree", o.max_degree, "Highest degree to check or construct");
  app.add_flag("--sampled", o.sampled, "Sample instead of sweeping whole bases");

  auto* roots = app.add_subcommand("roots", "Positive roots in index order");
  auto* group = app.add_subcommand("group", "Group order, Poincare polynomial, centralizer of w_o");
  auto* dims = app.add_subcommand("dims", "Dimensions per degree");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series");
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  std::string identity;
  verify->add_option("identity", identity, "Identity name, \"all\" or \"list\"")->required();
  auto* integral = app.add_subcommand("integral", "Top integral certificate and checks");
  auto* hypo = app.add_subcommand("hypo", "Hypothetical elements of the non-simple subalgebra");
  auto* reduce = app.add_subcommand("reduce", "Reduce a monomial modulo the non-simple ideal");
  std::string monomial, side = "right", policy = "min_root";
  bool oracle = false;
  reduce->add_option("--monomial,monomial", monomial, "Roots, e.g. \"(12),(13)\", \"0,3\" or \"[0,3]\"")->required();
  reduce->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
  reduce->add_option("--policy", policy)->check(CLI::IsMember({"min_root", "max_root"}));
  reduce->add_flag("--oracle", oracle, "Cross-check with linear algebra");
  auto* disjoint = app.add_subcommand("disjoint", "Disjoint systems");
  bool find_complete = false;
  std::string check;
  std::size_t max_solutions = 0;
  auto* fc = disjoint->add_flag("--find-complete", find_complete, "Search complete systems");
  auto* ck = disjoint->add_option("--check", check, "Elements, e.g. \"1,241635,315264\"");
  fc->excludes(ck);
  disjoint->add_option("--max-solutions", max_solutions, "Stop after this many systems (0: all)");
  auto* pairing = app.add_subcommand("pairing", "Pairing of two monomials or element JSON objects");
  std::string pa, pb;
  pairing->add_option("a", pa)->required();
  pairing->add_option("b", pb)->required();
  auto* bracket = app.add_subcommand("bracket", "Bracket sign matrix of a disjoint system");
  std::string elements;
  bracket->add_option("--elements", elements, "Ordering of the system (default: first complete system)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (disjoint->parsed() && !find_complete && check.empty()) {
    std::cerr << "disjoint: pass --find-complete or --check <elements>\n";
    return kUsage;
  }

  const auto t0 = Clock::now();
  char* out = nullptr;
  nw_status st = NW_OK;
  std::string command = app.get_subcommands().front()->get_name();

  if (verify->parsed() && identity == "list") {
    st = nw_identities(&out);
  } else {
    json cfg{{"field", o.field}, {"seed", o.seed}, {"trials", o.trials}, {"exhaustive", !o.sampled}};
    if (o.field == "prime") cfg["prime"] = o.prime;
    if (o.cap >= 0) cfg["cap"] = o.cap;
    if (o.memory_mb > 0) cfg["memory_mb"] = o.memory_mb;
    if (o.max_degree >= 0) cfg["max_degree"] = o.max_degree;
    nw_context* raw = nullptr;
    if (nw_context_create(o.type.c_str(), o.rank, cfg.dump().c_str(), &raw) != NW_OK) {
      std::cerr << "error: " << nw_last_error() << "\n";
      return kError;
    }
    std::unique_ptr<nw_context, void (*)(nw_context*)> ctx(raw, nw_context_destroy);
    const double t_create = ms_since(t0);
    const auto t1 = Clock::now();
    if (roots->parsed()) st = nw_roots(ctx.get(), &out);
    if (group->parsed()) st = nw_group(ctx.get(), &out);
    if (dims->parsed()) st = nw_dims(ctx.get(), o.max_degree, &out);
    if (hilbert->parsed()) st = nw_hilbert(ctx.get(), &out);
    if (verify->parsed()) st = nw_verify(ctx.get(), identity.c_str(), &out);
    if (integral->parsed()) st = nw_integral(ctx.get(), &out);
    if (hypo->parsed()) st = nw_hypothetical(ctx.get(), &out);
    if (reduce->parsed()) {
      json ro{{"side", side}, {"policy", policy}, {"oracle", oracle}};
      st = nw_reduce(ctx.get(), list_arg(monomial, true).c_str(), ro.dump().c_str(), &out);
    }
    if (disjoint->parsed()) {
      if (find_complete)
        st = nw_disjoint_search(ctx.get(), json{{"max_solutions", max_solutions}}.dump().c_str(), &out);
      else
        st = nw_disjoint_check(ctx.get(), list_arg(check, false).c_str(), &out);
    }
    if (pairing->parsed())
      st = nw_pairing(ctx.get(), list_arg(pa, true).c_str(), list_arg(pb, true).c_str(), &out);
    if (bracket->parsed())
      st = nw_bracket(ctx.get(), elements.empty() ? nullptr : list_arg(elements, false).c_str(), &out);
    std::cerr << json{{"timings_ms", {{"context", t_create}, {command, ms_since(t1)}}}}.dump() << "\n";
  }

  json rep = out ? json::parse(out) : json::object();
  nw_string_free(out);
  if (st != NW_OK && !rep.contains("error")) std::cerr << "error: " << nw_last_error() << "\n";

  std::string fmt = o.format;
  if (fmt == "auto") fmt = command == "dims" ? "csv" : "json";
  if (fmt == "csv") {
    const json& r = rep.contains("result") ? rep["result"] : json::object();
    if (r.contains("dims")) {
      std::cout << "# " << r["label"].get<std::string>() << (rep.value("partial", false) ? ", partial" : "") << "\n";
      std::cout << csv_dims(r["dims"]) << "\n";
    } else if (command == "verify" && r.contains("reports")) {
      std::cout << "identity,item,status,checked\n";
      for (const auto& x : r["reports"])
        for (const auto& it : x["items"])
          std::cout << x["identity"].get<std::string>() << ",\"" << it["name"].get<std::string>() << "\","
                    << it["status"].get<std::string>() << "," << it["checked"] << "\n";
    } else {
      std::cout << rep.dump(2) << "\n";
    }
  } else if (fmt == "text") {
    print_text(command, rep);
  } else {
    std::cout << rep.dump(2) << "\n";
  }
  if (rep.contains("error")) std::cerr << "error: " << rep["error"]["message"].get<std::string>() << "\n";

  if (st != NW_OK) return exit_for(st);
  return rep.value("status", "ok") == "fail" ? kFailed : kOk;
}
