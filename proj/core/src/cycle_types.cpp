#include "symprod/cycle_types.hpp"

#include <stdexcept>

namespace symprod {

int CycleType::cycle_count() const {
    int c = 0;
    for (int a : alpha) c += a;
    return c;
}

Integer CycleType::centralizer_order() const {
    Integer z = 1;
    for (size_t i = 0; i < alpha.size(); ++i) {
        const int r = static_cast<int>(i) + 1;
        for (int j = 0; j < alpha[i]; ++j) z *= r;
        z *= factorial(alpha[i]);
    }
    return z;
}

Integer CycleType::class_size() const { return factorial(n) / centralizer_order(); }

bool CycleType::is_valid() const {
    if (n < 1 || alpha.size() != static_cast<size_t>(n)) return false;
    long long weight = 0;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) return false;
        weight += static_cast<long long>(i + 1) * alpha[i];
    }
    return weight == n;
}

namespace {

void enumerate(int remaining, int max_part, CycleType& current, std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int r = std::min(remaining, max_part); r >= 1; --r) {
        current.alpha[static_cast<size_t>(r) - 1] += 1;
        enumerate(remaining - r, r, current, out);
        current.alpha[static_cast<size_t>(r) - 1] -= 1;
    }
}

}  // namespace

std::vector<CycleType> cycle_types(int n) {
    if (n < 1) throw std::invalid_argument("cycle_types: n must be positive");
    CycleType current;
    current.n = n;
    current.alpha.assign(static_cast<size_t>(n), 0);
    std::vector<CycleType> out;
    enumerate(n, n, current, out);
    return out;
}

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return b;
}

}  // namespace symprod
