#include "maxfock/maps.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "maxfock/errors.hpp"
#include "maxfock/transforms.hpp"

namespace maxfock {
namespace {

constexpr cplx I{0.0, 1.0};

const Vec3c& eps_of(const PolarizationPair& p, Helicity s) { return polarization_vector(p, s); }

/// Pulls sum_k scale(k) * eps_s(k)* . F(k) for each retained mode.
template <class Scale>
std::vector<cplx> project_modes(const SpectralField& F, const std::vector<ModeKey>& modes, Scale scale) {
    const auto& grid = F.grid();
    std::vector<cplx> out(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const auto& m = modes[i];
        const Vec3d k = grid.k_vector(m.n);
        const auto pol = polarization(k);
        out[i] = scale(std::sqrt(norm2(k))) * cdot(eps_of(pol, m.sigma), F[grid.spectral_slot(m.n)]);
    }
    return out;
}

template <class Scale>
SpectralField assemble_modes(const ModeAmplitudes& a, Scale scale) {
    const auto& grid = a.grid();
    SpectralField F(grid);
    const auto& modes = a.modes();
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const auto& m = modes[i];
        const Vec3d k = grid.k_vector(m.n);
        const auto pol = polarization(k);
        F[grid.spectral_slot(m.n)] += eps_of(pol, m.sigma) * (scale(std::sqrt(norm2(k))) * a[i]);
    }
    return F;
}

void require_kind(const ModeAmplitudes& a, AmplitudeKind kind, const char* context) {
    if (a.kind() != kind) throw std::invalid_argument(std::string(context) + ": wrong amplitude kind");
}

} // namespace

std::shared_ptr<const std::vector<ModeKey>> retained_modes(const GridSpec& grid) {
    static std::mutex mutex;
    static std::map<std::pair<double, int>, std::shared_ptr<const std::vector<ModeKey>>> cache;
    std::lock_guard lock(mutex);
    const auto key = std::make_pair(grid.box_length(), grid.points_per_axis());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto modes = std::make_shared<std::vector<ModeKey>>();
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto w = grid.wavevector(p);
        if (w.zero || w.nyquist) continue;
        modes->push_back({w.n, Helicity::Plus});
        modes->push_back({w.n, Helicity::Minus});
    }
    cache.emplace(key, modes);
    return modes;
}

ModeAmplitudes::ModeAmplitudes(GridSpec grid, AmplitudeKind kind)
    : grid_(grid), kind_(kind), modes_(retained_modes(grid)), values_(modes_->size()) {}

ModeAmplitudes::ModeAmplitudes(GridSpec grid, AmplitudeKind kind, std::vector<cplx> values)
    : grid_(grid), kind_(kind), modes_(retained_modes(grid)), values_(std::move(values)) {
    if (values_.size() != modes_->size()) {
        throw std::invalid_argument("mode amplitude count does not match the grid's retained modes");
    }
}

std::size_t ModeAmplitudes::find(const ModeKey& key) const {
    if (!grid_.in_range(key.n) || (key.n[0] == 0 && key.n[1] == 0 && key.n[2] == 0)) return size();
    // retained modes are stored pairwise in spectral-slot order, so binary search on the slot
    const std::size_t slot = grid_.spectral_slot(key.n);
    std::size_t lo = 0, hi = modes_->size() / 2;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const std::size_t s = grid_.spectral_slot((*modes_)[2 * mid].n);
        if (s < slot) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo >= modes_->size() / 2 || (*modes_)[2 * lo].n != key.n) return size();
    return 2 * lo + (key.sigma == Helicity::Plus ? 0 : 1);
}

double ModeAmplitudes::weight(std::size_t i) const {
    if (kind_ != AmplitudeKind::BbMomentum) return 1.0;
    const double kabs = std::sqrt(norm2(grid_.k_vector((*modes_)[i].n)));
    return 1.0 / (grid_.volume() * kabs);
}

cplx inner(const ModeAmplitudes& a, const ModeAmplitudes& b) {
    require_same_grid(a.grid(), b.grid(), "mode amplitude inner product");
    if (a.kind() != b.kind()) throw std::invalid_argument("mode amplitude inner product: kinds differ");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.weight(i) * std::conj(a[i]) * b[i];
    return s;
}

ModeAmplitudes map_m(const VectorFieldC& psi) {
    const auto& grid = psi.grid();
    const double sv = std::sqrt(grid.volume());
    auto values = project_modes(to_spectral(psi), *retained_modes(grid), [sv](double) { return cplx(sv); });
    return {grid, AmplitudeKind::Momentum, std::move(values)};
}

VectorFieldC map_m_inverse(const ModeAmplitudes& z) {
    require_kind(z, AmplitudeKind::Momentum, "map_m_inverse");
    const double s = 1.0 / std::sqrt(z.grid().volume());
    return from_spectral(assemble_modes(z, [s](double) { return cplx(s); }));
}

ModeAmplitudes rs_amplitudes(const VectorFieldC& f_rs) {
    ModeAmplitudes z = map_m(f_rs);
    return {z.grid(), AmplitudeKind::Rs, {z.values().begin(), z.values().end()}};
}

VectorFieldC iso_i(const VectorFieldC& psi, const PhysicalConstants& consts) {
    VectorFieldC out = omega_pow(psi, 0.5, consts);
    out *= I * std::sqrt(consts.hbar);
    return out;
}

VectorFieldC iso_i_inverse(const VectorFieldC& f_bb, const PhysicalConstants& consts) {
    VectorFieldC out = omega_pow(f_bb, -0.5, consts);
    out *= -I / std::sqrt(consts.hbar);
    return out;
}

VectorFieldC bb_basis_mode(const GridSpec& grid, const KIndex& n, Helicity s, const PhysicalConstants& consts) {
    VectorFieldC out = plane_wave_mode(grid, n, s);
    const double w = consts.c * std::sqrt(norm2(grid.k_vector(n)));
    out *= I * std::sqrt(consts.hbar * w);
    return out;
}

ModeAmplitudes bb_basis_amplitudes(const VectorFieldC& f_bb, const PhysicalConstants& consts) {
    require_no_zero_mode(f_bb, "bb_basis_amplitudes");
    const auto& grid = f_bb.grid();
    const double sv = std::sqrt(grid.volume());
    const double hbar = consts.hbar, c = consts.c;
    auto values = project_modes(to_spectral(f_bb), *retained_modes(grid),
                                [=](double kabs) { return -I * sv / std::sqrt(hbar * c * kabs); });
    return {grid, AmplitudeKind::BbBasis, std::move(values)};
}

ModeAmplitudes bb_momentum(const VectorFieldC& f_bb, const PhysicalConstants& consts) {
    require_no_zero_mode(f_bb, "bb_momentum");
    const auto& grid = f_bb.grid();
    const double s = grid.volume() / std::sqrt(consts.hbar * consts.c);
    auto values = project_modes(to_spectral(f_bb), *retained_modes(grid), [s](double) { return cplx(s); });
    return {grid, AmplitudeKind::BbMomentum, std::move(values)};
}

VectorFieldC bb_momentum_inverse(const ModeAmplitudes& f_m, const PhysicalConstants& consts) {
    require_kind(f_m, AmplitudeKind::BbMomentum, "bb_momentum_inverse");
    const double s = std::sqrt(consts.hbar * consts.c) / f_m.grid().volume();
    return from_spectral(assemble_modes(f_m, [s](double) { return cplx(s); }));
}

void write_amplitudes_csv(std::ostream& os, const ModeAmplitudes& a) {
    os << "kx_index,ky_index,kz_index,sigma,re,im\n";
    const auto old = os.precision(17);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& m = a.modes()[i];
        os << m.n[0] << ',' << m.n[1] << ',' << m.n[2] << ',' << (m.sigma == Helicity::Plus ? "+1" : "-1") << ','
           << a[i].real() << ',' << a[i].imag() << '\n';
    }
    os.precision(old);
}

ModeAmplitudes read_amplitudes_csv(std::istream& is, const GridSpec& grid, AmplitudeKind kind) {
    ModeAmplitudes out(grid, kind);
    std::string line;
    if (!std::getline(is, line)) throw FormatError("amplitude CSV: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "kx_index,ky_index,kz_index,sigma,re,im") throw FormatError("amplitude CSV: unexpected header '" + line + "'");
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() != 6) throw FormatError("amplitude CSV line " + std::to_string(lineno) + ": expected 6 columns");
        try {
            const KIndex n{std::stoi(cells[0]), std::stoi(cells[1]), std::stoi(cells[2])};
            const int sg = std::stoi(cells[3]);
            if (sg != 1 && sg != -1) throw FormatError("sigma must be +1 or -1");
            const std::size_t i = out.find({n, sg > 0 ? Helicity::Plus : Helicity::Minus});
            if (i == out.size()) throw FormatError("mode not retained on this grid");
            out[i] = {std::stod(cells[4]), std::stod(cells[5])};
        } catch (const FormatError& e) {
            throw FormatError("amplitude CSV line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::exception&) {
            throw FormatError("amplitude CSV line " + std::to_string(lineno) + ": unparseable number");
        }
    }
    return out;
}

} // namespace maxfock
