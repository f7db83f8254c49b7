// Shared helpers for the unit suites: the two running examples and a
// deterministic random Seifert data generator.
#pragma once

#include <random>

#include "latroot/plumbing.hpp"

namespace latroot::testing {

inline SeifertData sigma_2_3_19() { return SeifertData{-1, {{2, 1}, {3, 1}, {19, 3}}}; }
inline SeifertData sigma_3_5_19() { return SeifertData{-1, {{3, 1}, {5, 2}, {19, 5}}}; }
inline SeifertData sigma_2_3_5() { return SeifertData{-2, {{2, 1}, {3, 2}, {5, 4}}}; }
inline SeifertData sigma_3_5_7() { return SeifertData{-2, {{3, 1}, {5, 4}, {7, 6}}}; }

// Brieskorn-style data with pairwise coprime fiber orders and |H_1| = 1:
// q_l = (-(P/p_l)^{-1}) mod p_l and e0 = -(1 + sum q_l P/p_l)/P.
inline SeifertData random_brieskorn(std::mt19937_64& rng, int max_fiber = 23) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (;;) {
        std::vector<Int> ps;
        std::uniform_int_distribution<int> npick(3, 4);
        int n = npick(rng);
        std::vector<int> pool;
        for (int p : primes)
            if (p <= max_fiber) pool.push_back(p);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int i = 0; i < n; ++i) {
            // prime powers keep the fibers coprime
            Int p = pool[static_cast<std::size_t>(i)];
            std::uniform_int_distribution<int> e(1, p < 5 ? 3 : 1);
            Int v = 1;
            for (int k = e(rng); k > 0; --k) v *= p;
            ps.push_back(v);
        }
        Int prod = 1;
        for (const auto& p : ps) prod *= p;
        SeifertData s;
        Int total = 0;
        bool ok = true;
        for (const auto& p : ps) {
            Int m = prod / p;
            // q = -(m^{-1}) mod p
            Int inv = 0;
            for (Int t = 1; t < p; ++t)
                if ((m % p) * t % p == 1) {
                    inv = t;
                    break;
                }
            if (inv == 0) {
                ok = false;
                break;
            }
            Int q = (p - inv) % p;
            if (q == 0) {
                ok = false;  // need 0 < q < p
                break;
            }
            s.arms.emplace_back(p, q);
            total += q * m;
        }
        if (!ok) continue;
        if ((total + 1) % prod != 0) continue;
        s.e0 = -((total + 1) / prod);
        if (s.e0 >= 0) continue;
        if (s.h1_order() != 1) continue;
        return s;
    }
}

// Brieskorn data with a bounded horizon, for the heavier pipelines.
inline SeifertData random_brieskorn_small(std::mt19937_64& rng, long max_n = 60) {
    for (;;) {
        auto s = random_brieskorn(rng, 11);
        Rat n = n_y_rat(s);
        if (is_integer(n) && to_int(n) >= 1 && to_int(n) <= max_n) return s;
    }
}

// Random negative-definite star-shaped data (not necessarily |H_1| = 1).
inline SeifertData random_seifert(std::mt19937_64& rng) {
    for (;;) {
        SeifertData s;
        std::uniform_int_distribution<int> arms(1, 4), e0(-4, -1), fiber(2, 12);
        s.e0 = e0(rng);
        int n = arms(rng);
        for (int i = 0; i < n; ++i) {
            int p = fiber(rng);
            std::uniform_int_distribution<int> qd(1, p - 1);
            int q = qd(rng);
            while (gcd(Int(p), Int(q)) != 1) q = qd(rng);
            s.arms.emplace_back(p, q);
        }
        try {
            s.validate();
        } catch (...) {
            continue;
        }
        return s;
    }
}

}  // namespace latroot::testing
