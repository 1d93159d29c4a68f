// Timing of reduced-form enumeration: serial reference vs the OpenMP kernel.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "k0/forms.hpp"

using namespace k0;

namespace {

template <class F>
double time_ms(F&& f, std::vector<QuadForm>& out) {
    auto start = std::chrono::steady_clock::now();
    out = f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<i64> discs = {-100003, -1000004, -10000004, -40000003};
    if (argc > 1) {
        discs.clear();
        for (int i = 1; i < argc; ++i) discs.push_back(std::atoll(argv[i]));
    }
    std::printf("%12s %10s %12s %12s %8s\n", "D", "h(D)", "serial(ms)", "openmp(ms)",
                "speedup");
    for (i64 d : discs) {
        if (d >= 0 || (mod_pos(d, 4) != 0 && mod_pos(d, 4) != 1)) {
            std::printf("%12lld  skipped (not a discriminant)\n",
                        static_cast<long long>(d));
            continue;
        }
        std::vector<QuadForm> serial, parallel;
        double ts = time_ms([&] { return enumerate_reduced_forms_serial(d); }, serial);
        double tp = time_ms([&] { return enumerate_reduced_forms(d); }, parallel);
        if (serial != parallel) {
            std::fprintf(stderr, "MISMATCH at D = %lld\n", static_cast<long long>(d));
            return 1;
        }
        std::printf("%12lld %10zu %12.2f %12.2f %7.2fx\n", static_cast<long long>(d),
                    serial.size(), ts, tp, ts / tp);
    }
    return 0;
}
