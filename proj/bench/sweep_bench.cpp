// Compares serial and OpenMP execution of independent scenario batches and
// reports the speedup. Not part of the test suite; run manually:
//   ./build/sweep_bench [n_seeds]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uuvplan/harness.hpp"

using namespace uuvplan;

namespace {

double time_batch(const std::vector<ScenarioConfig>& cells, ExecMode mode,
                  std::string* digest) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_batch(cells, mode);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<RunRecord> records;
    for (const auto& r : results)
        records.insert(records.end(), r.records.begin(), r.records.end());
    *digest = records_to_csv(records);
    return s;
}

std::vector<ScenarioConfig> ratio_cells(int n_seeds) {
    std::vector<ScenarioConfig> cells;
    for (double ratio : {0.2, 0.4, 0.6}) {
        for (int seed = 1; seed <= n_seeds; ++seed) {
            ScenarioConfig cfg = ScenarioConfig::defaults(2);
            cfg.id = "bench_r" + std::to_string(int(ratio * 100)) + "_s" +
                     std::to_string(seed);
            cfg.map.ratio = ratio;
            cfg.map.seed = std::uint64_t(seed);
            cfg.current = CurrentSpec::static_2d(0.05, 135.0);
            cells.push_back(cfg);
        }
    }
    return cells;
}

std::vector<ScenarioConfig> speed_cells() {
    std::vector<ScenarioConfig> cells;
    for (int dims : {2, 3}) {
        for (double speed : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
            ScenarioConfig cfg = ScenarioConfig::defaults(dims);
            cfg.id = "bench_v" + std::to_string(dims) + "d";
            cfg.current = dims == 3 ? CurrentSpec::static_3d(speed, 0.0, 45.0)
                                    : CurrentSpec::static_2d(speed, 0.0);
            cells.push_back(cfg);
        }
    }
    return cells;
}

void run_case(const char* name, const std::vector<ScenarioConfig>& cells) {
    std::string serial_digest, parallel_digest;
    const double t_serial = time_batch(cells, ExecMode::serial, &serial_digest);
    const double t_parallel = time_batch(cells, ExecMode::parallel, &parallel_digest);
    std::printf("%-24s %4zu cells  serial %7.3f s  parallel %7.3f s  speedup %5.2fx  %s\n",
                name, cells.size(), t_serial, t_parallel, t_serial / t_parallel,
                serial_digest == parallel_digest ? "records identical"
                                                 : "RECORDS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const int n_seeds = argc > 1 ? std::atoi(argv[1]) : 50;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel mode falls back to serial\n");
#endif
    run_case("ratio sweep", ratio_cells(n_seeds));
    run_case("speed sweeps (2D+3D)", speed_cells());
    return 0;
}
