/*
   Copyright 2026 the supereig authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * Compares the serial reference oracle kernels against the OpenMP-sharded
 * ones and reports wall-clock times. The two paths must produce identical
 * results; that is asserted here as well as in the test suite.
 */

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "sev/oracle.hpp"

using namespace sev;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_planes(long p, size_t n, size_t reps) {
    FieldDescriptor f = FieldDescriptor::prime_field(p);
    std::mt19937_64 rng(7);
    std::vector<Mat> mats;
    for (size_t i = 0; i < reps; ++i) mats.push_back(random_matrix(f, n, n, rng));

    auto t0 = Clock::now();
    size_t serial_hits = 0;
    for (const Mat& A : mats) serial_hits += invariant_planes_bruteforce_serial(A).size();
    double ts = seconds_since(t0);

    t0 = Clock::now();
    size_t parallel_hits = 0;
    for (const Mat& A : mats) parallel_hits += invariant_planes_bruteforce(A).size();
    double tp = seconds_since(t0);

    if (serial_hits != parallel_hits) {
        std::printf("MISMATCH in plane scan results!\n");
        std::exit(1);
    }
    std::printf("plane scan   GF(%ld) n=%zu x%zu: serial %.3fs, parallel %.3fs (%.2fx)\n", p, n,
                reps, ts, tp, ts / tp);
}

void bench_claims(long p, size_t n, size_t samples) {
    FieldDescriptor f = FieldDescriptor::prime_field(p);

    auto t0 = Clock::now();
    ClaimReport rs = claim_sweep_serial(f, n, samples, 11);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    ClaimReport rp = claim_sweep(f, n, samples, 11);
    double tp = seconds_since(t0);

    if (rs.theorem.checked != rp.theorem.checked ||
        rs.theorem.violations != rp.theorem.violations ||
        rs.det_cells.zero_super != rp.det_cells.zero_super) {
        std::printf("MISMATCH in claim sweep results!\n");
        std::exit(1);
    }
    std::printf("claim sweep  GF(%ld) n=%zu x%zu: serial %.3fs, parallel %.3fs (%.2fx)\n", p, n,
                samples, ts, tp, ts / tp);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());
    bench_planes(3, 4, 20);
    bench_planes(5, 4, 5);
    bench_claims(3, 2, 10);
    bench_claims(3, 4, 3);
    return 0;
}
