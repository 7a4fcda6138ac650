// Compares the serial reference transport kernel against the OpenMP one on
// growing Weyl groups. Both must return identical witnesses.

#include <chrono>
#include <cstdio>
#include <random>

#include "thetap/strongforms.hpp"
#include "thetap/translate.hpp"
#include "thetap/wscan.hpp"

using namespace thetap;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void bench_group(const GroupId& g, int trials, std::mt19937& rng) {
  const auto d = build_datum(g);
  const TorusTorsion xb = basepoint(d);

  // random same-orbit targets so the scan has real matches to rank
  std::vector<TorusTorsion> dsts;
  for (int t = 0; t < trials; ++t)
    dsts.push_back(act_on_torus(weyl_at(d, rng() % weyl_order(d)), xb));

  auto t0 = std::chrono::steady_clock::now();
  std::vector<WeylElement> serial;
  for (const auto& dst : dsts) serial.push_back(*transport_scan_serial(d, xb, dst));
  const double ts = seconds(t0);

  t0 = std::chrono::steady_clock::now();
  std::vector<WeylElement> parallel;
  for (const auto& dst : dsts)
    parallel.push_back(*transport_scan_parallel(d, xb, dst));
  const double tp = seconds(t0);

  bool same = true;
  for (int t = 0; t < trials; ++t) same = same && serial[t] == parallel[t];

  std::printf("%-8s |W| = %10llu  %d transports  serial %8.3fs  omp %8.3fs  "
              "speedup %5.2fx  identical: %s\n",
              g.str().c_str(),
              static_cast<unsigned long long>(weyl_order(d)), trials, ts, tp,
              ts / tp, same ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  const int max_rank = argc > 1 ? std::atoi(argv[1]) : 8;
  std::mt19937 rng(42);
#ifdef THETAP_HAVE_OPENMP
  std::printf("OpenMP enabled\n");
#else
  std::printf("OpenMP disabled; both columns run the serial kernel\n");
#endif
  for (int n = 5; n <= max_rank; ++n) bench_group(GroupId::sp(n), 4, rng);
  for (int m = 6; m <= max_rank; ++m)
    bench_group(quasi_split_group(GroupKind::O, m), 4, rng);
  return 0;
}
