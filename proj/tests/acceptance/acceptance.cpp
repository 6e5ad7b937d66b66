// Runs the twelve acceptance criteria at default windows and prints one line each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "axb/suites.hpp"

using namespace axb;

namespace {

constexpr double suite_budget_seconds = 60.0;

struct Timed {
    Report report;
    double seconds;
};

Timed run(const std::string& name) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = *run_suite(name);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(r), dt};
}

bool records_pass(const Report& r, const std::function<bool(const Record&)>& select) {
    std::size_t n = 0;
    for (auto& rec : r.records())
        if (select(rec)) {
            ++n;
            if (rec.status != Status::pass) {
                std::printf("    failing: %s/%s  witness: %s\n", r.suite().c_str(), rec.name.c_str(), rec.witness.c_str());
                return false;
            }
        }
    return n > 0;
}

bool all_pass(const Report& r) {
    return records_pass(r, [](const Record&) { return true; });
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

int main() {
    struct Criterion {
        std::string title;
        std::vector<std::string> suites;
        std::function<bool(const std::vector<Report>&)> judge;
    };

    auto every = [](const std::vector<Report>& rs) {
        bool ok = true;
        for (auto& r : rs) ok = all_pass(r) && ok;
        return ok;
    };

    std::vector<Criterion> criteria{
        {"lub: CRT formula equals brute-force least common upper bound, m,n,a,b <= 30", {"lub-oracle"}, every},
        {"spectrum: sample points hereditary and directed; closed-form actions match brute force (>= 50 cases)",
         {"spectrum-hereditary", "action-closed-forms"},
         [](const std::vector<Report>& rs) {
             bool structure = records_pass(rs[0], [](const Record& r) {
                 return starts_with(r.name, "hereditary") || starts_with(r.name, "directed");
             });
             return structure && all_pass(rs[1]);
         }},
        {"boundary criteria: additive holds on B-points and fails on A-points at (m,1); multiplicative holds "
         "exactly on modulus nabla",
         {"spectrum-hereditary"},
         [](const std::vector<Report>& rs) {
             return records_pass(rs[0], [](const Record& r) {
                 return starts_with(r.name, "additive criterion") || starts_with(r.name, "multiplicative criterion") ||
                        starts_with(r.name, "A(5;12)");
             });
         }},
        {"topological freeness: no fixed finite B-points, fixed A(s/(1-t);nabla), convergence constructions",
         {"topological-freeness"}, every},
        {"presentations: Toeplitz satisfies T1-T5, the bilateral backend satisfies T1-T3,T5,Q6 and fails Q5 at e(0,1)",
         {"relations-toeplitz", "relations-ex39"},
         [&](const std::vector<Report>& rs) {
             bool big = window_indices(Backend::toeplitz, 40, 24).size() >= 500 &&
                        window_indices(Backend::bilateral, 20, 24).size() >= 500;
             return big && every(rs);
         }},
        {"faithfulness witnesses at (0,1) for every F in {2,3,5,7}", {"faithfulness"}, every},
        {"ideal decomposition of the range defect verified for every a <= 30", {"lemma65"}, every},
        {"Exel calculi: transfer identities, semigroup laws, commutation witness, matrix oracle",
         {"transfer-identities", "k-oracle"}, every},
        {"modules: orthonormal bases, reconstruction, frame identity, block identities, nica pair",
         {"modules-orthonormal", "lemma62", "nica-pair"}, every},
        {"rho intertwines the endomorphisms and transfers; pi is multiplicative and isometric", {"morphism-rho"}, every},
        {"KMS: p^-beta and p^(1-beta) exactly, q_mult factoring exactly at beta = 1, ground values 0",
         {"kms-phase"}, every},
        {"cube: all six faces commute on s and v_p for p <= 13", {"cube"}, every},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto& c = criteria[i];
        std::vector<Report> reports;
        double slowest = 0;
        for (auto& s : c.suites) {
            auto t = run(s);
            slowest = std::max(slowest, t.seconds);
            reports.push_back(std::move(t.report));
        }
        bool ok = c.judge(reports) && slowest < suite_budget_seconds;
        if (!ok) ++failed;
        std::printf("criterion %2zu: %s  %s  (slowest suite %.2fs)\n", i + 1, ok ? "PASS" : "FAIL", c.title.c_str(),
                    slowest);
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
