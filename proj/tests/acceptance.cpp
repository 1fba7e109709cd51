// Acceptance suite: nine criteria, one pass/fail line each. With no
// arguments all criteria run; arguments select criterion numbers.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "interlace/checks.hpp"

using namespace interlace;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> suites;
    double time_limit_s;  // 0 = none
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> cs = {
        {1,
         "oracle equivalence: recursive_B = brute_force_B (all n<=4, 200 random n=5..8), "
         "under 5 minutes",
         {"oracle-small", "oracle-random"},
         300.0},
        {2, "paper base cases exact (Lemma 6, q(a-b))", {"base-cases"}, 0},
        {3, "rank identities: Lemma 1(1)-(5) and Lemma 2(1)-(4), exhaustive n<=5 + 1000 random",
         {"lemma1", "lemma2"}, 0},
        {4, "Counter-example 14 reproduced with the printed witness monomials",
         {"counterexample14"}, 0},
        {5,
         "identity suite exact on all graphs n<=5: Prop 15/15a, Cor 17, Prop 19(1), Claims 7-8, "
         "Cor 10, Lemma 4, Prop 16/Cor 18, q-rules, Q-rules, I-rules",
         {"prop15", "prop15a", "cor17", "prop19", "claim8", "cor10", "lemma4", "by0-rules",
          "q-rules", "bigq-rules", "i-rules"},
         0},
        {6, "Prop 5 / Prop 19(2) reconstruction round trips for all n<=4",
         {"prop5", "prop19-2"}, 0},
        {7, "cw-dp correctness vs oracle and qualitative FPT scaling",
         {"cwdp-oracle", "cwdp-scaling"}, 0},
        {8, "appendix suite: Prop A.2 partition, Tutte identities, Lemma A.1",
         {"matroid-partition", "tutte", "lemmaA1"}, 0},
        {9, "determinism and pivot-choice independence", {"determinism", "pivot-choice"}, 0},
    };
    return cs;
}

bool run_criterion(const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string failure;
    for (const auto& name : c.suites) {
        CheckResult r = run_check(name);
        if (!r.passed) {
            ok = false;
            failure += " [" + r.name + ": " + r.detail + "]";
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
        ok = false;
        failure += " [exceeded " + std::to_string(c.time_limit_s) + "s limit]";
    }
    std::printf("criterion %d: %s (%.1fs) %s%s\n", c.number, ok ? "PASS" : "FAIL", secs,
                c.title.c_str(), failure.c_str());
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
    bool all_ok = true;
    for (const Criterion& c : criteria()) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.number) == wanted.end())
            continue;
        if (!run_criterion(c)) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
