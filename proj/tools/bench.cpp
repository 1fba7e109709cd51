// Benchmark comparing the serial reference enumeration of B(G) with the
// OpenMP-parallel kernel, plus the clique-width DP scaling trend.

#include <chrono>
#include <cstdio>
#include <memory>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "interlace/bpoly.hpp"
#include "interlace/checks.hpp"
#include "interlace/cwdp.hpp"

using namespace interlace;

namespace {

double seconds_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

KExprPtr star_expr(int leaves) {
    auto leaf = [](int label) {
        auto c = std::make_shared<KExpr>();
        c->kind = KExpr::Kind::Const;
        c->label = label;
        return KExprPtr(c);
    };
    KExprPtr acc = leaf(2);
    for (int i = 1; i < leaves; ++i) {
        auto u = std::make_shared<KExpr>();
        u->kind = KExpr::Kind::Union;
        u->child = acc;
        u->right = leaf(2);
        acc = u;
    }
    auto u = std::make_shared<KExpr>();
    u->kind = KExpr::Kind::Union;
    u->child = acc;
    u->right = leaf(1);
    auto add = std::make_shared<KExpr>();
    add->kind = KExpr::Kind::Add;
    add->label = 1;
    add->label2 = 2;
    add->child = u;
    return add;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernel runs serially\n");
#endif

    std::printf("\nbrute-force B(G), serial reference vs parallel kernel\n");
    std::printf("%4s %12s %12s %9s\n", "n", "serial[s]", "parallel[s]", "speedup");
    std::mt19937 rng(2024);
    for (std::size_t n = 8; n <= 13; ++n) {
        Graph g = random_graph(n, rng);
        MultiPoly ps, pp;
        double ts = seconds_of([&] { ps = brute_force_B_serial(g); });
        double tp = seconds_of([&] { pp = brute_force_B(g); });
        if (ps != pp) {
            std::printf("MISMATCH at n=%zu\n", n);
            return 1;
        }
        std::printf("%4zu %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
    }

    std::printf("\nclique-width DP for truncated B_I on stars (k=2, d=2)\n");
    std::printf("%6s %12s\n", "verts", "time[s]");
    for (int m : {10, 20, 40, 80, 160}) {
        KExprPtr e = star_expr(m - 1);
        double t = seconds_of([&] {
            for (int r = 0; r < 10; ++r) {
                MultiPoly p = dp_bi_truncated(*e, 2, 2);
                (void)p;
            }
        });
        std::printf("%6d %12.4f\n", m, t / 10);
    }
    std::printf("\n(brute force at 40+ vertices would enumerate 3^n > 10^19 configurations)\n");
    return 0;
}
