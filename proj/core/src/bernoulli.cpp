#include "coble/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace coble {

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("negative Bernoulli index");
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        const long m = static_cast<long>(table.size());
        Rational s(0);
        for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * table[k];
        table.push_back(-s / Rational(m + 1));
    }
    return table[n];
}

}  // namespace coble
