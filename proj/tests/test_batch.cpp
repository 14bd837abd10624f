#include "doctest.h"

#include <set>

#include "liftcert/batch.hpp"
#include "oracles.hpp"

using namespace liftcert;

TEST_SUITE("batch") {

TEST_CASE("sl2_box agrees with a direct scan") {
  for (long bound : {1L, 2L, 4L}) {
    std::vector<TorusMap> want;
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b)
        for (long c = -bound; c <= bound; ++c)
          for (long d = -bound; d <= bound; ++d)
            if (a * d - b * c == 1) want.emplace_back(a, b, c, d);
    CHECK(sl2_box(bound) == want);
  }
}

TEST_CASE("admissible_corpus agrees with the brute-force definition") {
  std::size_t want = 0;
  for (std::int64_t n = 2; 2 * n <= 300; ++n)
    for (std::int64_t m = 2; n * m <= 300; ++m) want += oracle::admissible_splittings(n, m).size();
  const auto corpus = admissible_corpus(300);
  CHECK(corpus.size() == want);
  for (const auto& p : corpus) CHECK(p.n * p.m <= 300);
}

TEST_CASE("parallel sweeps reproduce the serial reference") {
  const auto corpus = admissible_corpus(600);
  CorpusOptions options;
  options.verify_minimality = true;
  const auto serial = verify_corpus_serial(corpus, options);
  CHECK(verify_corpus(corpus, options) == serial);
  for (const auto& r : serial) CHECK_MESSAGE(r.passed(true), r.error);

  const auto box = sl2_box(6);
  const auto ls = lefschetz_sweep_serial(box, 4, 64);
  CHECK(lefschetz_sweep(box, 4, 64) == ls);
  CHECK(ls.failures == 0);
  CHECK(ls.lattice_agree == ls.cases);
  CHECK(ls.enumerated_agree == ls.enumerated);
  CHECK(ls.enumerated > 0);
  CHECK(ls.skipped_identity > 0);
  CHECK(ls.skipped_degenerate > 0);

  const auto maps = random_anosov(100, 10, 3);
  const auto lifts = lift_sweep_serial(maps, 4);
  CHECK(lift_sweep(maps, 4) == lifts);
  for (const auto& r : lifts) CHECK(r.passed());
}

TEST_CASE("random_anosov is seeded and distinct") {
  const auto a = random_anosov(200, 12, 9);
  CHECK(a == random_anosov(200, 12, 9));
  CHECK_FALSE(a == random_anosov(200, 12, 10));
  std::set<std::string> seen;
  for (const auto& m : a) {
    CHECK(is_anosov(m));
    seen.insert(to_string(m.matrix()));
  }
  CHECK(seen.size() == a.size());
  CHECK_THROWS_AS(random_anosov(1000000, 2, 1), std::invalid_argument);
}

TEST_CASE("lefschetz_case classifies its skips") {
  CHECK(lefschetz_case(TorusMap(0, 1, -1, 0), 4, 10).skipped_identity == 1);
  CHECK(lefschetz_case(TorusMap(1, 3, 0, 1), 2, 10).skipped_degenerate == 1);
  const auto cat = lefschetz_case(TorusMap(2, 1, 1, 1), 3, 100);
  CHECK(cat.cases == 1);
  CHECK(cat.enumerated_agree == 1);
}

}  // TEST_SUITE
