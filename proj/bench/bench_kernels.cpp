// Times the counting kernels against their serial reference
// implementations. Not part of the test suite; results depend on the
// machine and OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zetaglue/curve.hpp"
#include "zetaglue/kernels.hpp"
#include "zetaglue/verify.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_plane(const char* name, const zetaglue::curve::CurveModel& c, std::uint32_t ext,
                 bool run_reference) {
  const auto K = c.extension_field(ext);
  std::int64_t count = 0;
  const double par = time_ms([&] {
    count = zetaglue::kernels::count_plane_points(c, K, true).count;
  });
  if (run_reference) {
    std::int64_t ref = 0;
    const double ser = time_ms([&] {
      ref = zetaglue::kernels::count_plane_points_serial(c, K, true).count;
    });
    std::printf("%-22s |K|=%-8llu N=%-8lld kernel %9.2f ms  reference %9.2f ms  (x%.1f)\n",
                name, static_cast<unsigned long long>(K.size()), static_cast<long long>(count),
                par, ser, ser / par);
    if (ref != count) std::printf("  !! kernel/reference disagree: %lld vs %lld\n",
                                  static_cast<long long>(count), static_cast<long long>(ref));
  } else {
    std::printf("%-22s |K|=%-8llu N=%-8lld kernel %9.2f ms  (reference skipped: quadratic)\n",
                name, static_cast<unsigned long long>(K.size()), static_cast<long long>(count),
                par);
  }
}

void bench_census(const char* name, std::uint32_t p, std::uint32_t e, std::uint32_t m) {
  const auto K = zetaglue::gf::Field::make(p, e, m);
  std::vector<std::int64_t> a, b;
  const double par = time_ms([&] { a = zetaglue::kernels::element_degree_census(K); });
  const double ser = time_ms([&] { b = zetaglue::kernels::element_degree_census_serial(K); });
  std::printf("%-22s |K|=%-8llu        kernel %9.2f ms  reference %9.2f ms  (x%.1f)%s\n", name,
              static_cast<unsigned long long>(K.size()), par, ser, ser / par,
              a == b ? "" : "  !! disagree");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled in this build\n");
#endif

  bench_plane("cubic/F_3 over F_3^4", zetaglue::verify::cubic_f3(), 4, true);
  bench_plane("cubic/F_3 over F_3^6", zetaglue::verify::cubic_f3(), 6, false);
  bench_plane("cubic/F_2 over F_2^8", zetaglue::verify::cubic_f2(), 8, false);
  bench_plane("hermitian over F_4^5", zetaglue::verify::hermitian_f4(), 5, false);

  bench_census("census F_5^6", 5, 1, 6);
  bench_census("census F_2^16", 2, 1, 16);
  bench_census("census F_4^6", 2, 2, 6);
  return 0;
}
