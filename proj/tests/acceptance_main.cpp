// Acceptance suite: one line per criterion, exit 0 iff every criterion holds.
//
//   1 base-table         phi(a,2) table vs direct summation, a <= 10^4
//   2 sqrt-counts        closed-form square-root counts vs enumeration, p^j <= 4096
//   3 prime-power-eval   prime-power closed forms vs summation + Fourier expansion
//   4 reflection         phi(p^k,2l)*phi(p^k,-2l) in exact arithmetic
//   5 split-scale        multiplicativity and sqrt(k)-scaling, exact + numeric
//   6 landsberg-schaar   phi(a,2b) = sqrt(i)*phi(2b,-a) on the 200x200 grid
//   7 induction-replay   chain replay on 100 sampled (a,b,p,k) tuples
//   8 sylvester          (a-1)(b-1)/2 vs grid enumeration, ab <= 2500

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "gausssum/acceptance.hpp"

int main(int argc, char** argv) {
    gausssum::AcceptanceOptions opt;
    opt.log = &std::cout;
    for (int i = 1; i < argc - 1; ++i) {
        if (std::strcmp(argv[i], "--workers") == 0) opt.workers = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--tol") == 0) opt.tol = std::atof(argv[i + 1]);
    }
    const auto results = gausssum::run_acceptance(opt);
    const bool ok = gausssum::all_passed(results);
    std::printf("%s\n", ok ? "ACCEPTANCE: PASS (8/8)" : "ACCEPTANCE: FAIL");
    return ok ? 0 : 1;
}
