#include "thetaclass/oracle.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "thetaclass/f2.hpp"

namespace thetaclass {

namespace {

std::string describe(int g, const std::vector<BoundaryLabel>& t, std::uint64_t rule, std::uint64_t brute) {
    std::string s = "g=" + std::to_string(g) + " {";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + to_string(t[i]);
    return s + "} rule=" + std::to_string(rule) + " brute=" + std::to_string(brute);
}

void compare(int g, const std::vector<BoundaryLabel>& t, SweepResult& r) {
    ++r.tuples;
    auto rule = count_vanishing(g, t);
    auto brute = brute_force_count(g, t);
    if (rule != brute) {
        if (!r.mismatches) r.first_mismatch = describe(g, t, rule, brute);
        ++r.mismatches;
    }
}

}  // namespace

SweepResult sweep_counts_exhaustive(int g, int max_k) {
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("sweep_counts_exhaustive: genus outside 1..5");
    SweepResult r;
    const Vec last = (Vec(1) << (2 * g)) - 1;
    std::vector<BoundaryLabel> cur;
    std::function<void(Vec)> grow = [&](Vec start) {
        compare(g, cur, r);
        if (static_cast<int>(cur.size()) == max_k) return;
        for (Vec n = start; n <= last; ++n) {
            bool orth = true;
            for (const auto& m : cur) orth = orth && !symplectic_form_bits(g, m.vec, n);
            if (!orth) continue;
            cur.emplace_back(g, n);
            grow(n + 1);
            cur.pop_back();
        }
    };
    grow(1);
    return r;
}

SweepResult sweep_counts_sampled(int g, std::uint64_t samples, std::uint64_t seed, int max_k) {
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("sweep_counts_sampled: genus outside 1..5");
    SweepResult r;
    std::mt19937_64 rng(seed);
    const Vec n_labels = (Vec(1) << (2 * g)) - 1;
    for (std::uint64_t s = 0; s < samples; ++s) {
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_k));
        std::vector<BoundaryLabel> t;
        for (int tries = 0; static_cast<int>(t.size()) < k && tries < 1000; ++tries) {
            Vec n = 1 + static_cast<Vec>(rng() % n_labels);
            bool ok = true;
            for (const auto& m : t) ok = ok && m.vec != n && !symplectic_form_bits(g, m.vec, n);
            if (ok) t.emplace_back(g, n);
        }
        compare(g, t, r);
    }
    return r;
}

}  // namespace thetaclass
