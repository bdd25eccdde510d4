// Compares the OpenMP kernels against their serial reference implementations
// and reports wall-clock times. The runs must agree exactly; a mismatch is a
// bug, not noise, so the program fails loudly on one.

#include <omp.h>

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "runspec/enumeration.hpp"
#include "runspec/stochastic.hpp"

using namespace runspec;

namespace {

struct Timing {
  double serial = 0.0;
  double parallel = 0.0;
};

void report(const char* label, const Timing& t, int threads, bool match) {
  std::printf("%s\n", label);
  std::printf("  serial    %8.3f s\n", t.serial);
  std::printf("  parallel  %8.3f s  (threads=%d, speedup %.2fx)\n", t.parallel,
              threads, t.parallel > 0.0 ? t.serial / t.parallel : 0.0);
  std::printf("  results match: %s\n", match ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial reference vs OpenMP kernel benchmark"};
  bool quick = false;
  std::uint32_t enum_n = 22;
  std::uint64_t mc_bits = 4096;
  std::uint64_t mc_samples = 200000;
  int threads = 0;
  app.add_flag("--quick", quick, "Small sizes for smoke testing");
  app.add_option("--enum-n", enum_n, "Enumeration string length");
  app.add_option("--mc-bits", mc_bits, "Bits per Monte Carlo sample");
  app.add_option("--mc-samples", mc_samples, "Monte Carlo sample count");
  app.add_option("--threads", threads, "Worker cap (0 = default)");
  CLI11_PARSE(app, argc, argv);

  if (quick) {
    enum_n = 18;
    mc_bits = 1024;
    mc_samples = 20000;
  }
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  bool all_match = true;

  {
    double t0 = omp_get_wtime();
    const SpectrumTable serial = enumerate_spectrum_table_serial(enum_n, false);
    double t1 = omp_get_wtime();
    const SpectrumTable parallel =
        enumerate_spectrum_table(enum_n, false, threads);
    double t2 = omp_get_wtime();
    const bool match = serial.aggregate == parallel.aggregate;
    all_match = all_match && match;
    const std::string label = "exhaustive enumeration, n=" +
                              std::to_string(enum_n) + " (" +
                              std::to_string(std::uint64_t{1} << enum_n) +
                              " strings)";
    report(label.c_str(), Timing{t1 - t0, t2 - t1}, workers, match);
  }

  {
    double t0 = omp_get_wtime();
    const SampleReport serial =
        monte_carlo_serial(mc_bits, std::nullopt, mc_samples, 42);
    double t1 = omp_get_wtime();
    const SampleReport parallel =
        monte_carlo(mc_bits, std::nullopt, mc_samples, 42, threads);
    double t2 = omp_get_wtime();
    const bool match = serial == parallel;
    all_match = all_match && match;
    const std::string label = "monte carlo, bits=" + std::to_string(mc_bits) +
                              " samples=" + std::to_string(mc_samples);
    report(label.c_str(), Timing{t1 - t0, t2 - t1}, workers, match);
  }

  return all_match ? 0 : 1;
}
