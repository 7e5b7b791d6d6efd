// Timing probe: where does the symbolic relation check spend its time?
#include "daha/daha.hpp"
#include "presentation/presentation.hpp"

#include <chrono>
#include <cstdio>

using namespace daha;
using qdiffop::DiffOp;

static std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }
static long long ms_since(std::chrono::steady_clock::time_point a) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(now() - a).count();
}

static void stat(const char* label, const DiffOp& op, long long elapsed) {
    size_t nt = 0, dt = 0;
    for (const auto& [key, c] : op.terms()) {
        nt += c.num().term_count();
        dt += c.den().term_count();
    }
    std::printf("%-18s %6lld ms   keys=%zu  num_terms=%zu  den_terms=%zu\n", label, elapsed,
                op.terms().size(), nt, dt);
}

int main() {
    setbuf(stdout, nullptr);
    auto t0 = now();
    CCRep rep = build_cc_rep(symbolic_cc());
    SphericalTriple s = spherical_cc(rep);
    std::printf("setup: %lld ms\n", ms_since(t0));

    const DiffOp &x = s.x, &y = s.y, &z = s.z;

    t0 = now(); DiffOp xy = x * y; stat("x*y", xy, ms_since(t0));
    t0 = now(); DiffOp yx = y * x; stat("y*x", yx, ms_since(t0));
    t0 = now(); DiffOp yz = y * z; stat("y*z", yz, ms_since(t0));
    t0 = now(); DiffOp zy = z * y; stat("z*y", zy, ms_since(t0));
    t0 = now(); DiffOp zx = z * x; stat("z*x", zx, ms_since(t0));
    t0 = now(); DiffOp xz = x * z; stat("x*z", xz, ms_since(t0));
    t0 = now(); DiffOp xx = x * x; stat("x*x", xx, ms_since(t0));
    t0 = now(); DiffOp yy = y * y; stat("y*y", yy, ms_since(t0));
    t0 = now(); DiffOp zz = z * z; stat("z*z", zz, ms_since(t0));
    t0 = now(); DiffOp xyz = xy * z; stat("(x*y)*z", xyz, ms_since(t0));

    exactring::Valuation val = rep.val;
    exactring::RatFn q = val.v("qh").pow(2);
    exactring::RatFn qi = q.inv();

    t0 = now();
    DiffOp comm = xy.scale(qi) - yx.scale(q);
    stat("q^-1 xy - q yx", comm, ms_since(t0));

    t0 = now();
    bool is_zero_test = (comm == comm);
    std::printf("equality self-test: %lld ms (%d)\n", ms_since(t0), (int)is_zero_test);
    return 0;
}
