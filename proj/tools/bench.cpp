// Timing comparison of the serial reference kernels against the OpenMP ones.
// Results must agree bit for bit; the bench aborts if they do not.

#include <chrono>
#include <iostream>

#include "kneser/coloring.hpp"
#include "kneser/tucker.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace kneser;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds(t0, std::chrono::steady_clock::now());
}

void bench_chain_scan(int p, int n, int k) {
    auto inst = KneserInstance::make(n, k, p, StabilityVariant::almost(2));
    auto col = erdos_coloring(inst);
    TuckerParams params(p, n, k, col.t);
    ChainSampler sampler;  // exhaustive

    ZpSuiteReport serial, parallel;
    const double ts = timed([&] { serial = check_zp_properties(params, inst, col, sampler,
                                                               Parallelism::serial); });
    const double tp = timed([&] { parallel = check_zp_properties(params, inst, col, sampler,
                                                                 Parallelism::parallel); });
    if (serial.ok() != parallel.ok() || serial.chains_checked != parallel.chains_checked ||
        serial.pairs_checked != parallel.pairs_checked ||
        serial.vectors_checked != parallel.vectors_checked) {
        std::cerr << "chain scan mismatch between serial and parallel\n";
        std::exit(1);
    }
    std::cout << "chain-scan p=" << p << " n=" << n << " k=" << k << ": serial " << ts
              << "s, parallel " << tp << "s, speedup " << (tp > 0 ? ts / tp : 0.0) << " ("
              << serial.pairs_checked << " pairs, " << serial.chains_checked << " candidates)\n";
}

void bench_pair_search(int n, int k) {
    auto inst = KneserInstance::make(n, k, 2, StabilityVariant::cyclic(2));
    // worst case for the search: a proper coloring close to the bound
    Coloring col = greedy_coloring(inst);
    const int max_color = n - 2 * k + 1;
    for (auto& c : col.colors) c = std::min(c, max_color);
    col.t = max_color;

    SignedLambdaFn lam = [&](const SignVector& X) { return lambda_signed(X, n, k, inst, col); };
    std::optional<std::pair<SignVector, SignVector>> rs, rp;
    const double ts = timed([&] { rs = find_complementary_pair(lam, n, Parallelism::serial); });
    const double tp = timed([&] { rp = find_complementary_pair(lam, n, Parallelism::parallel); });
    const bool same = rs.has_value() == rp.has_value() &&
                      (!rs || (rs->first == rp->first && rs->second == rp->second));
    if (!same) {
        std::cerr << "pair search mismatch between serial and parallel\n";
        std::exit(1);
    }
    std::cout << "pair-search n=" << n << " k=" << k << ": serial " << ts << "s, parallel " << tp
              << "s, speedup " << (tp > 0 ? ts / tp : 0.0)
              << (rs ? " (pair found)" : " (no pair)") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 0;
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; parallel mode degenerates to serial\n";
#endif
    bench_chain_scan(2, scale > 0 ? 9 : 8, 2);
    bench_chain_scan(3, scale > 0 ? 7 : 6, 2);
    bench_pair_search(scale > 0 ? 9 : 8, 2);
    return 0;
}
