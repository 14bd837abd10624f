#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <vector>

#include "liftcert/batch.hpp"

using namespace liftcert;

namespace {

template <class F>
double timed(F&& f) {
  const double start = omp_get_wtime();
  f();
  return omp_get_wtime() - start;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t nm_bound = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10000;
  const long box = argc > 2 ? std::strtol(argv[2], nullptr, 10) : 50;
  std::cout << "threads available: " << omp_get_max_threads() << '\n';

  std::vector<AdmissiblePair> corpus;
  std::cout << "corpus build (nm <= " << nm_bound << "): "
            << timed([&] { corpus = admissible_corpus(nm_bound); }) << " s, " << corpus.size()
            << " instances\n";

  const CorpusOptions options;
  std::vector<CorpusRecord> serial, parallel;
  const double t_serial = timed([&] { serial = verify_corpus_serial(corpus, options); });
  const double t_parallel = timed([&] { parallel = verify_corpus(corpus, options); });
  std::cout << "verify_corpus   serial " << t_serial << " s, parallel " << t_parallel
            << " s, identical: " << (serial == parallel ? "yes" : "NO") << '\n';

  const auto maps = sl2_box(box);
  LefschetzTally ls, lp;
  const double l_serial = timed([&] { ls = lefschetz_sweep_serial(maps, 6, 1024); });
  const double l_parallel = timed([&] { lp = lefschetz_sweep(maps, 6, 1024); });
  std::cout << "lefschetz_sweep serial " << l_serial << " s, parallel " << l_parallel << " s, "
            << maps.size() << " matrices, identical: " << (ls == lp ? "yes" : "NO") << '\n';

  const auto anosov = random_anosov(1000, 30, 1);
  std::vector<LiftRecord> fs, fp;
  const double f_serial = timed([&] { fs = lift_sweep_serial(anosov, 6); });
  const double f_parallel = timed([&] { fp = lift_sweep(anosov, 6); });
  std::cout << "lift_sweep      serial " << f_serial << " s, parallel " << f_parallel
            << " s, identical: " << (fs == fp ? "yes" : "NO") << '\n';
  return serial == parallel && ls == lp && fs == fp ? 0 : 1;
}
