#include "symprod/oracles.hpp"

#include <stdexcept>
#include <vector>

namespace symprod {

BigradedDims sym_power_dims_oracle(const GradedSpace& space, int n_max, int d_max) {
    if (n_max < 0 || d_max < 0) {
        throw std::invalid_argument("sym_power_dims_oracle: bounds must be non-negative");
    }
    // table[n][d] = number of basis words of weight n and total degree d built
    // from the generators processed so far.
    std::vector<std::vector<long long>> table(
        static_cast<size_t>(n_max) + 1, std::vector<long long>(static_cast<size_t>(d_max) + 1, 0));
    table[0][0] = 1;

    for (int deg = 0; deg <= space.top_degree(); ++deg) {
        const bool odd = (deg % 2 != 0);
        for (long long gen = 0; gen < space.betti(deg); ++gen) {
            auto next = table;
            for (int n = 0; n <= n_max; ++n) {
                for (int d = 0; d <= d_max; ++d) {
                    if (table[n][d] == 0) continue;
                    const int max_copies = odd ? 1 : n_max;
                    for (int j = 1; j <= max_copies; ++j) {
                        const int nn = n + j;
                        const long long dd = static_cast<long long>(d) + static_cast<long long>(j) * deg;
                        if (nn > n_max || dd > d_max) break;
                        next[nn][static_cast<size_t>(dd)] += table[n][d];
                    }
                }
            }
            table = std::move(next);
        }
    }

    BigradedDims dims;
    for (int n = 0; n <= n_max; ++n) {
        for (int d = 0; d <= d_max; ++d) {
            if (table[n][d] != 0) dims[{d, n}] = table[n][d];
        }
    }
    return dims;
}

namespace {

int permutation_parity(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int transpositions = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace

long long graded_perm_trace_oracle(const GradedSpace& space, const CycleType& sigma) {
    if (!sigma.is_valid()) {
        throw std::invalid_argument("graded_perm_trace_oracle: malformed cycle type");
    }
    const int n = sigma.n;

    // Concrete permutation with sigma's cycle type: cycles laid out on
    // consecutive positions.
    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<int> cycle_len;
    std::vector<int> cycle_start;
    {
        int pos = 0;
        for (size_t i = 0; i < sigma.alpha.size(); ++i) {
            const int r = static_cast<int>(i) + 1;
            for (int c = 0; c < sigma.alpha[i]; ++c) {
                cycle_start.push_back(pos);
                cycle_len.push_back(r);
                for (int j = 0; j < r; ++j) {
                    perm[static_cast<size_t>(pos + j)] = pos + (j + 1) % r;
                }
                pos += r;
            }
        }
    }
    const int num_cycles = static_cast<int>(cycle_len.size());

    // Flat generator list with degrees.
    std::vector<int> gen_degree;
    for (int d = 0; d <= space.top_degree(); ++d) {
        for (long long b = 0; b < space.betti(d); ++b) gen_degree.push_back(d);
    }
    const int m = static_cast<int>(gen_degree.size());
    if (m == 0) return 0;

    // A basis tensor is sigma-fixed iff it is constant on each cycle, so the
    // fixed basis is indexed by one generator choice per cycle.
    long long trace = 0;
    std::vector<int> choice(static_cast<size_t>(num_cycles), 0);
    while (true) {
        long long total_degree = 0;
        std::vector<int> degree_at(static_cast<size_t>(n));
        for (int c = 0; c < num_cycles; ++c) {
            const int deg = gen_degree[static_cast<size_t>(choice[static_cast<size_t>(c)])];
            total_degree += static_cast<long long>(deg) * cycle_len[static_cast<size_t>(c)];
            for (int j = 0; j < cycle_len[static_cast<size_t>(c)]; ++j) {
                degree_at[static_cast<size_t>(cycle_start[static_cast<size_t>(c)] + j)] = deg;
            }
        }

        // Koszul sign: parity of sigma restricted to the odd-degree positions.
        std::vector<int> odd_index(static_cast<size_t>(n), -1);
        int odd_count = 0;
        for (int p = 0; p < n; ++p) {
            if (degree_at[static_cast<size_t>(p)] % 2 != 0) odd_index[static_cast<size_t>(p)] = odd_count++;
        }
        std::vector<int> induced(static_cast<size_t>(odd_count));
        for (int p = 0; p < n; ++p) {
            if (odd_index[static_cast<size_t>(p)] < 0) continue;
            const int q = perm[static_cast<size_t>(p)];
            induced[static_cast<size_t>(odd_index[static_cast<size_t>(p)])] =
                odd_index[static_cast<size_t>(q)];
        }
        const int koszul = permutation_parity(induced);
        const int degree_sign = (total_degree % 2 == 0) ? 1 : -1;
        trace += koszul * degree_sign;

        int c = 0;
        while (c < num_cycles) {
            if (++choice[static_cast<size_t>(c)] < m) break;
            choice[static_cast<size_t>(c)] = 0;
            ++c;
        }
        if (c == num_cycles) break;
    }
    return trace;
}

}  // namespace symprod
