// Times the OpenMP kernels against their serial references.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "fusionkit/fusion.hpp"
#include "fusionkit/kernels.hpp"

using namespace fk;

template <class F>
double secs(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark"};
  int k2 = 28, k3 = 9, reps = 3;
  app.add_option("--sl2-level", k2);
  app.add_option("--sl3-level", k3);
  app.add_option("--reps", reps);
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads: " << kernel_threads() << "\n";
  for (auto [kind, k] : {std::pair{Kind::sl2, k2}, std::pair{Kind::sl3, k3}}) {
    FusionSystem sys = build_fusion(kind, k);
    IMat Z = IMat::identity(sys.rank());
    IMat A = sys.N[sys.rank() / 2], B = sys.N[sys.rank() - 1];
    bool same = matmul(A, B) == matmul_serial(A, B) &&
                splitting_matrix(sys.N, Z, sys.conj) == splitting_matrix_serial(sys.N, Z, sys.conj) &&
                entry_sums(sys.N) == entry_sums_serial(sys.N);
    double mp = secs([&] { matmul(A, B); }, reps * 20), ms = secs([&] { matmul_serial(A, B); }, reps * 20);
    double sp = secs([&] { splitting_matrix(sys.N, Z, sys.conj); }, reps);
    double ss = secs([&] { splitting_matrix_serial(sys.N, Z, sys.conj); }, reps);
    double ep = secs([&] { entry_sums(sys.N); }, reps * 20), es = secs([&] { entry_sums_serial(sys.N); }, reps * 20);
    std::cout << kind_name(kind) << " k=" << k << " (r_A=" << sys.rank() << ")  results agree: " << (same ? "yes" : "NO")
              << "\n"
              << "  matmul          parallel " << mp * 1e3 << " ms   serial " << ms * 1e3 << " ms\n"
              << "  splitting K     parallel " << sp * 1e3 << " ms   serial " << ss * 1e3 << " ms\n"
              << "  entry sums      parallel " << ep * 1e3 << " ms   serial " << es * 1e3 << " ms\n";
    if (!same) return 1;
  }
  return 0;
}
