#ifndef MCFLAB_RNG_HPP
#define MCFLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace mcf {

/** Seedable random source used for residual sampling.
 *
 * Wraps std::mt19937_64 with an explicit 53-bit uniform mapping so the
 * stream does not depend on standard-library distribution internals; the
 * same seed replays the same samples. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : eng_(seed) {}

    static constexpr const char* algorithm() { return "mt19937_64"; }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * unit(); }

    // Uniform over [-b,-a] U [a,b]; used for jet sampling with |value| >= a.
    double uniform_two_sided(double a, double b) {
        double m = uniform(a, b);
        return (eng_() & 1u) ? m : -m;
    }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

} // namespace mcf

#endif
