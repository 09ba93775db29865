#include "thetaclass/numberware.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace thetaclass {

Rational bernoulli(unsigned k) {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, memoized across calls.
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) {
        unsigned n = static_cast<unsigned>(table.size());
        Rational s;
        for (unsigned j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * table[j];
        table.push_back(-s / Rational(binomial(n + 1, n)));
    }
    return table[k];
}

Rational zeta_negative_odd(unsigned g) {
    if (g == 0) throw std::invalid_argument("zeta_negative_odd needs g >= 1");
    return -bernoulli(2 * g) / Rational(static_cast<long>(2 * g));
}

}  // namespace thetaclass
