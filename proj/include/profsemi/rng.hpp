#ifndef PROFSEMI_RNG_HPP
#define PROFSEMI_RNG_HPP

#include <cstdint>
#include <random>

namespace profsemi {

// Seeded, splittable randomness for the property suites. Each case derives
// its own engine from (seed, case_index) so any failure replays from the two
// numbers alone.
class CaseRng {
   public:
    CaseRng(std::uint64_t seed, std::uint64_t case_index)
        : engine_(mix(seed, case_index)) {}

    // uniform draw from [0, n)
    int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

    bool coin() { return (engine_() & 1) != 0; }

   private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t idx) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (idx + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::mt19937_64 engine_;
};

}  // namespace profsemi

#endif
