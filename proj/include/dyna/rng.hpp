#ifndef DYNA_RNG_HPP
#define DYNA_RNG_HPP

#include <cstdint>
#include <random>

namespace dyna {

// splitmix64; used to derive independent stream seeds from one master seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// mt19937_64 is fully specified by the standard, so sequences are portable.
// uniform_int_distribution is not; bounded draws are done by rejection here
// instead so that identical seeds give identical output on any toolchain.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, bound), bound >= 1
    uint64_t bounded(uint64_t bound) {
        const uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = gen_();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace dyna

#endif
