#include "thetaclass/config_type.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "thetaclass/errors.hpp"
#include "thetaclass/rational.hpp"

namespace thetaclass {

int ConfigType::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool ConfigType::has_odd_relation() const {
    for (Vec r : relations)
        if (std::popcount(r) & 1) return true;
    return false;
}

mpz_class ConfigType::multinomial() const {
    mpz_class r = factorial(static_cast<unsigned>(degree()));
    for (int e : exponents) r /= factorial(static_cast<unsigned>(e));
    return r;
}

std::string ConfigType::str() const {
    std::string s = "[";
    for (int i = 0; i < k(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents[i]);
    }
    s += "|";
    for (std::size_t r = 0; r < relations.size(); ++r) {
        if (r) s += ",";
        for (int i = 0; i < k(); ++i) s += ((relations[r] >> i) & 1) ? '1' : '0';
    }
    return s + "]";
}

std::vector<Vec> span_elements(const std::vector<Vec>& rows) {
    std::vector<Vec> out{0};
    for (Vec r : gf2_rref(rows)) {
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConfigType canonical_pattern(const std::vector<int>& exponents, const std::vector<Vec>& relation_span) {
    const int k = static_cast<int>(exponents.size());
    if (k > 8) throw DegreeOverflow("configuration with more than 8 support slots");
    for (int e : exponents)
        if (e <= 0) throw std::invalid_argument("exponents must be positive");
    std::vector<int> sorted = exponents;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    std::vector<Vec> rel = gf2_rref(relation_span);
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    std::optional<std::vector<Vec>> best;
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = sorted[pos[i]] == exponents[i];
        if (!ok) continue;
        std::vector<Vec> mapped;
        for (Vec r : rel) {
            Vec m = 0;
            for (int i = 0; i < k; ++i)
                if ((r >> i) & 1) m |= Vec(1) << pos[i];
            mapped.push_back(m);
        }
        mapped = gf2_rref(mapped);
        if (!best || mapped < *best) best = mapped;
    } while (std::next_permutation(pos.begin(), pos.end()));
    return ConfigType{sorted, best.value_or(std::vector<Vec>{})};
}

std::optional<ConfigType> canonical_config(const std::vector<BoundaryLabel>& support, const std::vector<int>& exponents) {
    if (support.size() != exponents.size()) throw std::invalid_argument("support and exponent lists differ in length");
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i].genus != support[0].genus) throw GenusMismatch("canonical_config: mixed genera");
        for (std::size_t j = 0; j < i; ++j)
            if (support[i].vec == support[j].vec)
                throw std::invalid_argument("canonical_config: repeated support label " + to_string(support[i]));
        vs.push_back(support[i].vec);
    }
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j)
            if (symplectic_form(support[i], support[j])) return std::nullopt;
    return canonical_pattern(exponents, relation_space(vs));
}

namespace {

void partitions(int rest, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}

// Subspaces of F_2^k whose nonzero vectors all have weight >= 3, as membership masks.
std::vector<std::uint64_t> admissible_subspaces(int k) {
    const Vec n = Vec(1) << k;
    std::set<std::uint64_t> seen{1};
    std::vector<std::uint64_t> frontier{1}, all{1};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : frontier)
            for (Vec v = 1; v < n; ++v) {
                if ((s >> v) & 1 || std::popcount(v) < 3) continue;
                std::uint64_t t = s;
                bool ok = true;
                for (Vec u = 0; u < n && ok; ++u)
                    if ((s >> u) & 1) {
                        Vec w = u ^ v;
                        if (std::popcount(w) < 3) ok = false;
                        t |= std::uint64_t(1) << w;
                    }
                if (ok && seen.insert(t).second) {
                    next.push_back(t);
                    all.push_back(t);
                }
            }
        frontier = std::move(next);
    }
    return all;
}

}  // namespace

const std::vector<ConfigType>& types_of_degree(int d) {
    static std::mutex mu;
    static std::map<int, std::vector<ConfigType>> cache;
    if (d < 0 || d > kMaxDegree) throw DegreeOverflow("types_of_degree: degree outside 0..5");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(d, d, cur, parts);
    std::set<ConfigType> types;
    for (const auto& p : parts) {
        int k = static_cast<int>(p.size());
        for (std::uint64_t s : admissible_subspaces(k)) {
            std::vector<Vec> members;
            for (Vec v = 1; v < (Vec(1) << k); ++v)
                if ((s >> v) & 1) members.push_back(v);
            types.insert(canonical_pattern(p, members));
        }
    }
    return cache[d] = std::vector<ConfigType>(types.begin(), types.end());
}

}  // namespace thetaclass
