// Wall-time comparison of the OpenMP Bareiss kernel against the serial
// reference on growing orders of the B family.  Usage: bench_det [max_n]

#include <eigenkit/combi.hpp>
#include <eigenkit/matrix.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace eigenkit;

int main(int argc, char** argv) {
  const unsigned max_n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 160;
  using clock = std::chrono::steady_clock;
  const auto ms = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };
  for (unsigned n = 40; n <= max_n; n += 40) {
    const IntMatrix m = combi::build_matrix(combi::MatrixFamily::BSquare, n);
    const auto t0 = clock::now();
    const BigInt serial = det_bareiss_serial(m);
    const auto t1 = clock::now();
    const BigInt parallel = det_bareiss(m);
    const auto t2 = clock::now();
    std::cout << "B(" << n << ")  serial " << ms(t0, t1) << " ms  parallel " << ms(t1, t2)
              << " ms  " << (serial == parallel ? "match" : "MISMATCH") << "\n";
    if (serial != parallel) return 1;
  }
  return 0;
}
