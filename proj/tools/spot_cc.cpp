// Quick manual timing probe for the fully symbolic four-parameter build.
#include "daha/daha.hpp"
#include "presentation/presentation.hpp"

#include <chrono>
#include <cstdio>

using namespace daha;
using presentation::Presentation;
using presentation::RepMap;
using presentation::check_presentation;

int main() {
    auto tic = std::chrono::steady_clock::now;
    auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };

    auto t0 = tic();
    CCRep rep = build_cc_rep(symbolic_cc());
    auto t1 = tic();
    std::printf("build_cc_rep (symbolic): %lld ms\n", (long long)ms(t0, t1));

    SphericalTriple sph = spherical_cc(rep);
    auto t2 = tic();
    std::printf("spherical_cc (symbolic): %lld ms\n", (long long)ms(t1, t2));

    Presentation pres = cc_presentation();
    RepMap map = cc_rep_map(rep, sph);
    auto verdicts = check_presentation(map, pres);
    auto t3 = tic();
    std::printf("check_presentation (symbolic): %lld ms\n", (long long)ms(t2, t3));
    for (const auto& v : verdicts)
        std::printf("  %-14s %s\n", v.name.c_str(), v.pass ? "pass" : "FAIL");
    return 0;
}
