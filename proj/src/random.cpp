#include "maxfock/random.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "maxfock/maps.hpp"
#include "maxfock/transforms.hpp"

namespace maxfock {

std::uint64_t CounterRng::next_u64() noexcept {
    ++counter_;
    std::uint64_t z = seed_ + counter_ * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

double SpectrumProfile::amplitude(double k) const noexcept {
    switch (kind) {
    case ProfileKind::Flat:
        return 1.0;
    case ProfileKind::Gaussian:
        return std::exp(-k * k / (2.0 * k_scale * k_scale));
    case ProfileKind::Band:
        return (k >= k_min && k <= k_scale) ? 1.0 : 0.0;
    }
    return 0.0;
}

SpectrumProfile SpectrumProfile::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ':')) parts.push_back(part);
    if (parts.empty()) throw std::invalid_argument("empty spectrum profile");
    SpectrumProfile p;
    auto number = [&](std::size_t i) {
        try {
            return std::stod(parts.at(i));
        } catch (const std::exception&) {
            throw std::invalid_argument("spectrum profile '" + text + "': bad number");
        }
    };
    if (parts[0] == "flat" && parts.size() == 1) {
        p.kind = ProfileKind::Flat;
    } else if (parts[0] == "gaussian" && parts.size() <= 2) {
        p.kind = ProfileKind::Gaussian;
        if (parts.size() == 2) p.k_scale = number(1);
    } else if (parts[0] == "band" && parts.size() == 3) {
        p.kind = ProfileKind::Band;
        p.k_min = number(1);
        p.k_scale = number(2);
    } else {
        throw std::invalid_argument("spectrum profile '" + text + "': expected flat, gaussian[:k] or band:kmin:kmax");
    }
    if (!(p.k_scale > 0.0) || p.k_min < 0.0) throw std::invalid_argument("spectrum profile '" + text + "': bad range");
    return p;
}

namespace {

VectorFieldC draw(const GridSpec& grid, std::uint64_t seed, const SpectrumProfile& profile, int only_sigma) {
    CounterRng rng(seed);
    SpectralField F(grid);
    const double norm = 1.0 / std::sqrt(grid.volume());
    for (const auto& m : *retained_modes(grid)) {
        const double x = rng.normal() * (1.0 / std::numbers::sqrt2);
        const double y = rng.normal() * (1.0 / std::numbers::sqrt2);
        if (only_sigma != 0 && sign(m.sigma) != only_sigma) continue;
        const Vec3d k = grid.k_vector(m.n);
        const double a = profile.amplitude(std::sqrt(norm2(k)));
        if (a == 0.0) continue;
        F[grid.spectral_slot(m.n)] += polarization_vector(polarization(k), m.sigma) * (cplx(x, y) * (a * norm));
    }
    return from_spectral(F);
}

} // namespace

VectorFieldC random_state(const GridSpec& grid, std::uint64_t seed, const SpectrumProfile& profile) {
    return draw(grid, seed, profile, 0);
}

VectorFieldC random_helicity_state(const GridSpec& grid, std::uint64_t seed, Helicity s, const SpectrumProfile& profile) {
    return draw(grid, seed, profile, sign(s));
}

VectorFieldR random_real_state(const GridSpec& grid, std::uint64_t seed, const SpectrumProfile& profile) {
    return real_part(random_state(grid, seed, profile));
}

} // namespace maxfock
