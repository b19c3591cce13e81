#include <chrono>
#include <iostream>

#include "resolvekit/construct.hpp"
#include "resolvekit/verify.hpp"

namespace rk = resolvekit;

// Times the serial reference signature kernel against the OpenMP one on a
// large certificate and checks that their outputs are identical.
int main(int argc, char** argv) {
    int q = argc > 1 ? std::atoi(argv[1]) : 7;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    rk::Certificate cert = rk::johnson3_certificate(q);
    auto columns = cert.masks();
    auto omegas = rk::enumerate_ksubset_masks(cert.m, cert.k);
    std::cout << "certificate: m=" << cert.m << " k=" << cert.k << " l=" << cert.size()
              << ", signatures=" << omegas.size() << ", reps=" << reps << "\n";

    auto time_kernel = [&](auto&& kernel, const char* name) {
        using clock = std::chrono::steady_clock;
        std::vector<std::uint8_t> keys;
        double best = 1e300;
        for (int i = 0; i < reps; ++i) {
            auto t0 = clock::now();
            keys = kernel(columns, omegas);
            best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count());
        }
        std::cout << name << ": " << best << " s (best of " << reps << ")\n";
        return keys;
    };
    auto serial = time_kernel(rk::detail::signature_keys_serial, "serial  ");
    auto parallel = time_kernel(rk::detail::signature_keys_parallel, "parallel");
    if (serial != parallel) {
        std::cout << "MISMATCH between kernels\n";
        return 1;
    }
    std::cout << "outputs identical\n";
    return 0;
}
