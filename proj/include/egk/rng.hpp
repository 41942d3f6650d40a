#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace egk {

// mt19937_64 is fully specified by the standard; the rejection sampler and
// shuffle are written out so that seeded output is identical on every
// platform (std::uniform_int_distribution and std::shuffle are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), unbiased via rejection.
    int below(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<int>(x % un);
    }

    bool chance(int num, int den) { return below(den) < num; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(static_cast<int>(i)))]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace egk
