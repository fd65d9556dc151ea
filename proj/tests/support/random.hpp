#pragma once

#include "flk/matrix.hpp"

#include <random>

namespace flk::testing {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin() { return range(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[range(0, static_cast<long>(v.size()) - 1)]; }

    IntMatrix matrix(size_t r, size_t c, long lo, long hi) {
        IntMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = range(lo, hi);
        return m;
    }

    IntMatrix symmetric(size_t n, long lo, long hi) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) m(i, j) = m(j, i) = range(lo, hi);
        return m;
    }

    // Product of random elementary matrices with small multipliers.
    IntMatrix unimodular(size_t n, int steps = 6, long spread = 2) {
        IntMatrix u = IntMatrix::identity(n);
        if (n < 2) {
            if (n == 1 && coin()) u(0, 0) = -1;
            return u;
        }
        for (int s = 0; s < steps; ++s) {
            size_t i = range(0, n - 1), j = range(0, n - 2);
            if (j >= i) ++j;
            long k = range(-spread, spread);
            for (size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
        }
        for (size_t i = 0; i < n; ++i) {
            size_t j = range(0, n - 1);
            for (size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        }
        return u;
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace flk::testing
