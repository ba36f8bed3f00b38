#pragma once

#include "maxfock/maxfock.hpp"

namespace testing {

inline const maxfock::GridSpec& grid16() {
    static const maxfock::GridSpec g(2.0 * std::numbers::pi, 16);
    return g;
}

inline const maxfock::GridSpec& grid8() {
    static const maxfock::GridSpec g(2.0 * std::numbers::pi, 8);
    return g;
}

inline maxfock::VectorFieldC raw_random(const maxfock::GridSpec& g, std::uint64_t seed) {
    maxfock::CounterRng rng(seed);
    maxfock::VectorFieldC f(g);
    for (auto& v : f)
        for (int a = 0; a < 3; ++a) v[a] = {rng.normal(), rng.normal()};
    return f;
}

} // namespace testing
