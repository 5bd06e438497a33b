// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cstdio>
#include <vector>

#include "talbotsum/verify.hpp"

int main() {
    using talbotsum::verify::all_checks;
    std::vector<const talbotsum::verify::Check*> criteria;
    for (const auto& c : all_checks())
        if (c.acceptance > 0) criteria.push_back(&c);
    std::sort(criteria.begin(), criteria.end(),
              [](const auto* a, const auto* b) { return a->acceptance < b->acceptance; });

    int failures = 0;
    for (const auto* c : criteria) {
        const auto r = c->run();
        if (!r.pass) ++failures;
        std::printf("criterion %2d %-4s %-36s %s\n", c->acceptance, r.pass ? "PASS" : "FAIL",
                    c->name.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    if (failures)
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    else
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
