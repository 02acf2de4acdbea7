#include <doctest.h>
#include <json.hpp>

#include <string>

#include "nichols/nichols.h"

using json = nlohmann::ordered_json;

namespace {

struct Ctx {
  nw_context* p = nullptr;
  Ctx(const char* type, int rank, const char* cfg = nullptr) {
    REQUIRE(nw_context_create(type, rank, cfg, &p) == NW_OK);
  }
  ~Ctx() { nw_context_destroy(p); }
};

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  nw_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("context creation and errors") {
  CHECK(std::string(nw_version()).size() > 0);
  nw_context* c = nullptr;
  CHECK(nw_context_create("Q", 2, nullptr, &c) == NW_ERR_INVALID_ARGUMENT);
  CHECK(c == nullptr);
  CHECK(std::string(nw_last_error()).size() > 0);
  CHECK(nw_context_create("A", 2, "{\"field\":\"prime\",\"prime\":4}", &c) == NW_ERR_INVALID_ARGUMENT);
  CHECK(nw_context_create("A", 2, "{\"bogus\":1}", &c) == NW_ERR_INVALID_ARGUMENT);
  CHECK(nw_context_create("A", 2, "{not json", &c) == NW_ERR_INVALID_ARGUMENT);
  CHECK(nw_context_create("A", 2, nullptr, nullptr) == NW_ERR_INVALID_ARGUMENT);
  {
    Ctx a("A", 2, "{\"field\":\"prime\",\"prime\":101}");
    CHECK(nw_context_create("A", 2, "{\"field\":\"prime\",\"prime\":103}", &c) == NW_ERR_INVALID_ARGUMENT);
    Ctx b("A", 1, "{\"field\":\"prime\",\"prime\":101}");
  }
  Ctx d("A", 2, "{\"field\":\"prime\",\"prime\":103}");
  char* out = nullptr;
  CHECK(nw_roots(nullptr, &out) == NW_ERR_INVALID_ARGUMENT);
  nw_string_free(out);
  nw_context_destroy(nullptr);
  nw_string_free(nullptr);
}

TEST_CASE("dims and reports") {
  Ctx c("A", 2);
  char* out = nullptr;
  REQUIRE(nw_dims(c.p, -1, &out) == NW_OK);
  auto j = take(out);
  CHECK(j["engine"]["version"] == nw_version());
  CHECK(j["config"]["type"] == "A2");
  CHECK(j["result"]["dims"] == json::array({1, 3, 4, 3, 1}));
  CHECK(j["result"]["label"] == "exact");
  CHECK(j["result"]["total"] == 12);

  REQUIRE(nw_hilbert(c.p, &out) == NW_OK);
  CHECK(take(out)["result"]["series"] == "1 + 3t + 4t^2 + 3t^3 + t^4");

  REQUIRE(nw_roots(c.p, &out) == NW_OK);
  auto r = take(out);
  CHECK(r["result"]["roots"].size() == 3);
  CHECK(r["result"]["roots"][2]["name"] == "(13)");

  REQUIRE(nw_group(c.p, &out) == NW_OK);
  auto g = take(out);
  CHECK(g["result"]["order"] == 6);
  CHECK(g["result"]["poincare"] == json::array({1, 2, 2, 1}));
}

TEST_CASE("verify") {
  Ctx c("A", 2, "{\"trials\":30,\"seed\":7}");
  char* out = nullptr;
  REQUIRE(nw_verify(c.p, "gen-leibniz", &out) == NW_OK);
  auto j = take(out);
  CHECK(j["status"] == "pass");
  CHECK(j["config"]["seed"] == 7);
  CHECK(nw_verify(c.p, "no-such-identity", &out) == NW_ERR_UNKNOWN_IDENTITY);
  CHECK(take(out)["status"] == "error");
  REQUIRE(nw_identities(&out) == NW_OK);
  CHECK(take(out)["result"]["identities"].size() >= 19);
}

TEST_CASE("determinism") {
  auto run = [] {
    Ctx c("A", 2, "{\"trials\":20,\"seed\":3}");
    char* out = nullptr;
    REQUIRE(nw_verify(c.p, "rhoD", &out) == NW_OK);
    std::string s(out);
    nw_string_free(out);
    return s;
  };
  CHECK(run() == run());
}

TEST_CASE("cap and memory bounds") {
  Ctx c("A", 4, "{\"field\":\"prime\",\"cap\":3}");
  char* out = nullptr;
  CHECK(nw_dims(c.p, -1, &out) == NW_ERR_CAP_EXCEEDED);
  auto j = take(out);
  CHECK(j["partial"] == true);
  CHECK(j["result"]["dims"] == json::array({1, 10, 55, 220}));
  CHECK(j["result"]["label"] == "mod-p lower-bound certified");
  CHECK(nw_dims(c.p, 2, &out) == NW_OK);
  take(out);

  Ctx m("A", 4, "{\"field\":\"prime\",\"memory_mb\":1}");
  CHECK(nw_dims(m.p, -1, &out) == NW_ERR_MEMORY);
  CHECK(take(out)["partial"] == true);
}

TEST_CASE("reduce, disjoint, pairing, bracket") {
  Ctx c("A", 2);
  char* out = nullptr;
  REQUIRE(nw_reduce(c.p, "[\"(12)\",\"(13)\"]", "{\"oracle\":true}", &out) == NW_OK);
  auto r = take(out);
  CHECK(r["result"]["lambda"] == "1");
  CHECK(r["result"]["w"]["perm"] == json::array({3, 1, 2}));
  CHECK(r["result"]["oracle"]["agrees"] == true);
  REQUIRE(nw_reduce(c.p, "[2]", nullptr, &out) == NW_OK);
  CHECK(take(out)["result"]["lambda"] == "0");
  CHECK(nw_reduce(c.p, "[7]", nullptr, &out) == NW_ERR_INVALID_ARGUMENT);
  take(out);

  REQUIRE(nw_pairing(c.p, "[0,1]", "[1,0]", &out) == NW_OK);
  CHECK(take(out)["result"]["value"] == "1");

  Ctx dd("D", 4);
  CHECK(nw_reduce(dd.p, "[0]", nullptr, &out) == NW_ERR_UNSUPPORTED);
  take(out);

  Ctx s6("A", 5);
  REQUIRE(nw_disjoint_check(s6.p, "[\"1\",\"241635\",\"315264\"]", &out) == NW_OK);
  auto k = take(out);
  CHECK(k["status"] == "pass");
  CHECK(k["result"]["system"]["complete"] == true);
  REQUIRE(nw_disjoint_check(s6.p, "[\"1\",\"213456\"]", &out) == NW_OK);
  auto bad = take(out);
  CHECK(bad["status"] == "fail");
  CHECK(bad["result"]["witness"]["violation"] == "not-centralizing");
  CHECK(nw_disjoint_check(s6.p, "[\"12\"]", &out) == NW_ERR_INVALID_ARGUMENT);
  take(out);
  REQUIRE(nw_disjoint_search(s6.p, nullptr, &out) == NW_OK);
  CHECK(take(out)["result"]["count"] == 2);

  Ctx s4("A", 3);
  REQUIRE(nw_bracket(s4.p, nullptr, &out) == NW_OK);
  auto b = take(out);
  CHECK(b["result"]["match"] == true);
  CHECK(b["result"]["formula"] == json::array({json::array({1, 1}), json::array({1, 1})}));
}
