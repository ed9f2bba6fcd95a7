// Times the parallel experiment grid against the serial reference and checks
// that both produce identical aggregates. Optional argument: replicate count
// (default 100, the figures preset).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tsfill/experiment.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_seconds(const std::function<tsfill::GridResult()>& body,
                    tsfill::GridResult& result) {
    const auto start = Clock::now();
    result = body();
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    return elapsed.count();
}

}  // namespace

int main(int argc, char** argv) {
    tsfill::ExperimentConfig config = tsfill::figures_preset();
    if (argc > 1) {
        try {
            config.replicates = static_cast<std::size_t>(std::stoul(argv[1]));
        } catch (const std::exception&) {
            std::cerr << "usage: " << argv[0] << " [replicates]\n";
            return 2;
        }
    }

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "grid: " << config.phi_grid.size() << " phi x " << config.dropout_grid.size()
              << " rates x " << config.replicates << " replicates, n=" << config.series_length
              << "\n";

    tsfill::GridResult serial;
    tsfill::GridResult parallel;
    const double serial_s = time_seconds([&] { return tsfill::run_grid_serial(config); }, serial);
    const double parallel_s = time_seconds([&] { return tsfill::run_grid(config); }, parallel);

    std::cout << "serial:   " << serial_s << " s\n";
    std::cout << "parallel: " << parallel_s << " s\n";
    std::cout << "speedup:  " << (parallel_s > 0.0 ? serial_s / parallel_s : 0.0) << "x\n";

    if (serial.aggregates != parallel.aggregates || serial.failures != parallel.failures) {
        std::cerr << "mismatch between serial and parallel results\n";
        return 1;
    }
    std::cout << "results identical\n";
    return 0;
}
