// Benchmark: serial reference kernels against the OpenMP production
// kernels. Three workloads: the canonical facet sweep over all vertex
// subsets, the fan cone-pair scan behind s0, and batch polygon checks.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "parastab/degrees.hpp"
#include "parastab/frobdynamics.hpp"
#include "parastab/hnpolygon.hpp"

using namespace parastab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

template <typename F> double timed(F &&f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return seconds_since(start);
}

void report(const char *name, double serial, double parallel) {
  std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
  std::mt19937_64 rng(20240915);

  // Canonical facet sweep: many random degree covectors on a mid-rank
  // system; every call scans all 2^rank vertex subsets.
  {
    RootSystem rs = build_root_system(CartanType::D, 4);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<RatVec> inputs;
    for (int t = 0; t < 400; ++t) {
      RatVec d(static_cast<std::size_t>(rs.rank));
      for (auto &x : d) {
        x = Rat(num(rng), den(rng));
        x.canonicalize();
      }
      inputs.push_back(d);
    }
    std::size_t serial_sum = 0, parallel_sum = 0;
    double serial = timed([&] {
      for (const RatVec &d : inputs)
        serial_sum += canonical_facet_serial(rs, d).facet.I.size();
    });
    double parallel = timed([&] {
      for (const RatVec &d : inputs)
        parallel_sum += canonical_facet_parallel(rs, d).facet.I.size();
    });
    if (serial_sum != parallel_sum)
      std::fprintf(stderr, "MISMATCH: canonical sweep checksums differ\n");
    report("canonical sweep (D4)", serial, parallel);
  }

  // Fan cone-pair scan: the full stationary-angle search.
  {
    RootSystem rs = build_root_system(CartanType::A, 3);
    double serial = timed([&] { (void)s0_estimate_serial(rs); });
    double parallel = timed([&] { (void)s0_estimate_parallel(rs); });
    report("fan pair scan (A3)", serial, parallel);
  }

  // Batch polygon verification.
  {
    std::uniform_int_distribution<int> rank_dist(1, 6);
    std::uniform_int_distribution<int> steps_dist(1, 12);
    std::uniform_int_distribution<int> jump(1, 5);
    std::vector<HNData> batch;
    for (int t = 0; t < 200000; ++t) {
      std::vector<std::pair<std::int64_t, Rat>> quots;
      Rat slope(jump(rng)); // strictly decreasing from here
      int steps = steps_dist(rng);
      for (int s = 0; s < steps; ++s) {
        std::int64_t r = rank_dist(rng);
        quots.emplace_back(r, slope * Rat(static_cast<long>(r)));
        Rat step(jump(rng), 1 + (t % 3));
        step.canonicalize();
        slope -= step;
      }
      batch.push_back(make_hn(quots));
    }
    std::vector<HNBatchItem> out_serial, out_parallel;
    double serial = timed([&] { out_serial = hn_batch_serial(batch); });
    double parallel = timed([&] { out_parallel = hn_batch_parallel(batch); });
    bool same = out_serial.size() == out_parallel.size();
    for (std::size_t i = 0; same && i < out_serial.size(); ++i)
      same = out_serial[i].deg == out_parallel[i].deg &&
             out_serial[i].bounds_ok == out_parallel[i].bounds_ok;
    report("polygon batch (200k)", serial, parallel);
    if (!same) {
      std::fprintf(stderr, "serial/parallel mismatch in polygon batch\n");
      return 1;
    }
  }

  return 0;
}
