#ifndef LSC_RNG_HPP
#define LSC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace lsc {

/// mt19937_64 with explicit value mappings. The standard pins the engine
/// output but not the distributions, and checkpoints must restore the
/// exact stream, so the transforms live here instead of <random>'s
/// distribution objects (which carry hidden cache state).
class Rng {
public:
    Rng() : engine_(0) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal via Box-Muller; always consumes two draws.
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
    }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return engine_() % bound;
    }

    /// In-place Fisher-Yates shuffle of an index-like container.
    template <typename Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::string serialize() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    static Rng deserialize(const std::string& text) {
        Rng r;
        std::istringstream is(text);
        is >> r.engine_;
        return r;
    }

    bool operator==(const Rng& other) const { return engine_ == other.engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace lsc

#endif  // LSC_RNG_HPP
