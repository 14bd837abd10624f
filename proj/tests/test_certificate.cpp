#include "doctest.h"

#include <fstream>
#include <sstream>

#include "liftcert/certificate.hpp"

using namespace liftcert;

namespace {

VerifyInput example_input() {
  VerifyInput in;
  in.n = 6;
  in.m = 4;
  in.b = PrimeSet{2};
  in.matrix = IntMatrix{{2, 1}, {1, 1}};
  in.k = 10;
  return in;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("(6, 4) example passes") {
  const auto c = run_verify(example_input());
  CHECK(c.verdict == Verdict::kPass);
  REQUIRE(c.construction);
  CHECK(c.construction->h1 == ints({12}));
  CHECK(c.construction->h2 == ints({2, 6}));
  CHECK(c.construction->q1 == ints({2}));
  REQUIRE(c.genus);
  CHECK(c.genus->genus_total == 25);
  REQUIRE(c.lifting);
  CHECK(c.lifting->k_total % c.lifting->k_lift_full == 0);
  const auto text = render_text(c);
  CHECK(text.find("Z/12") != std::string::npos);
  CHECK(text.find("[NOT-CERTIFIED]") != std::string::npos);
  CHECK(text.find("verdict     PASS") != std::string::npos);
}

TEST_CASE("failures and partial results") {
  auto in = example_input();
  in.b = PrimeSet{3};
  const auto bad = run_verify(in);
  CHECK(bad.verdict == Verdict::kFail);
  CHECK(bad.admissibility.failed_clause == "support_containment");
  CHECK_FALSE(bad.construction);

  in = example_input();
  in.matrix = IntMatrix::identity(2);
  const auto not_anosov = run_verify(in);
  CHECK(not_anosov.verdict == Verdict::kFail);
  CHECK_FALSE(not_anosov.lifting);
  REQUIRE(not_anosov.dynamics);
  CHECK_FALSE(not_anosov.dynamics->anosov);

  in = example_input();
  in.matrix.reset();
  const auto partial = run_verify(in);
  CHECK(partial.verdict == Verdict::kPartial);
  CHECK_FALSE(partial.dynamics);
}

TEST_CASE("JSON round trip") {
  for (auto in : {example_input(), VerifyInput{36, 6, PrimeSet{3}, PrimeSet{}, IntMatrix{{3, 1}, {2, 1}}, 6}}) {
    const auto c = run_verify(in);
    const auto j = to_json_value(c);
    const auto back = certificate_from_json(nlohmann::json::parse(dump(j)));
    CHECK(back == c);
    CHECK(dump(to_json_value(back)) == dump(j));
  }
  auto in = example_input();
  in.b = PrimeSet{3};
  const auto bad = run_verify(in);
  CHECK(certificate_from_json(to_json_value(bad)) == bad);
}

TEST_CASE("integers beyond int64 serialise as strings") {
  auto c = run_verify(example_input());
  c.manifold->det_shifted = Integer("-123456789012345678901234567890");
  const auto j = to_json_value(c);
  CHECK(j["manifold"]["det_shifted"].is_string());
  CHECK(certificate_from_json(j) == c);
}

TEST_CASE("schema version is enforced") {
  auto j = to_json_value(run_verify(example_input()));
  j["schema_version"] = kSchemaVersion + 1;
  CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
}

TEST_CASE("output is deterministic and matches the golden file") {
  const auto first = dump(to_json_value(run_verify(example_input())));
  const auto second = dump(to_json_value(run_verify(example_input())));
  CHECK(first == second);
  CHECK(first == read_file(std::string(LIFTCERT_GOLDEN_DIR) + "/example_6_4.json"));
}

TEST_CASE("family certificate") {
  const auto c = run_family(PrimeSet{2, 3}, {TorusMap(2, 1, 1, 1), TorusMap(3, 1, 2, 1)}, 10);
  CHECK(c.verdict == Verdict::kPass);
  CHECK(c.splittings.size() == 3);
  REQUIRE(c.trace_tables.size() == 2);
  CHECK(c.trace_tables[0][4] == 123);
  CHECK(c.trace_tables[1][4] == 724);
  CHECK(family_from_json(nlohmann::json::parse(dump(to_json_value(c)))) == c);

  const auto dup = run_family(PrimeSet{2, 3}, {TorusMap(2, 1, 1, 1), TorusMap(2, 1, 1, 1)}, 10);
  CHECK(dup.verdict == Verdict::kFail);
  CHECK(render_text(dup).find("[FAIL]") != std::string::npos);
}

TEST_CASE("enumeration listing") {
  const auto pairs = enumerate_admissible(36, 6);
  const auto j = enumeration_json(pairs);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["A"] == nlohmann::json::array({2}));
  CHECK(j[0]["quotient_order"] == 2);
  CHECK(enumeration_json(enumerate_admissible(5, 7)).empty());
  CHECK(render_enumeration(5, 7, {}).find(": 0") != std::string::npos);
}

}  // TEST_SUITE
