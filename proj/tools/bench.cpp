// Timing comparison of the serial and OpenMP paths of the field-relation
// kernel.  Not a correctness gate; the equivalence of the two paths is
// covered by the test suite.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "sympvoa/fock.hpp"
#include "sympvoa/parallel.hpp"

using namespace sympvoa;

namespace {
double run(Moding moding, Parity parity, int max_degree, bool parallel) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep =
        quadratic_field_relation_check(2, moding, parity, max_degree, -4, 4, false, parallel);
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.ok) {
        std::cerr << "relation check failed unexpectedly\n";
        std::exit(1);
    }
    return dt;
}
}  // namespace

int main(int argc, char** argv) {
    int max_degree = 5;
    if (argc > 1) max_degree = std::atoi(argv[1]);
    configure_threads();

    std::cout << "sector, states*modes, serial s, parallel s, speedup\n";
    const std::pair<Moding, const char*> modings[] = {{Moding::Half, "half"}, {Moding::Int, "int"}};
    const std::pair<Parity, const char*> parities[] = {{Parity::Even, "even"}, {Parity::Odd, "odd"}};
    for (const auto& [moding, mname] : modings)
        for (const auto& [parity, pname] : parities) {
            const auto rep = quadratic_field_relation_check(2, moding, parity, max_degree, -4, 4,
                                                            false, false);
            const double ts = run(moding, parity, max_degree, false);
            const double tp = run(moding, parity, max_degree, true);
            std::cout << mname << "-" << pname << ", " << rep.checked << ", " << ts << ", " << tp
                      << ", " << (tp > 0 ? ts / tp : 0) << "\n";
        }
    return 0;
}
