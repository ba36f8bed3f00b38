#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"
#include "maxfock/spectral_ops.hpp"

namespace maxfock {

struct ModeKey {
    KIndex n;
    Helicity sigma;
    friend bool operator==(const ModeKey&, const ModeKey&) = default;
};

/// Every (k, sigma) with k != 0 off the Nyquist planes, in spectral-slot order then
/// sigma = +, -.
[[nodiscard]] std::shared_ptr<const std::vector<ModeKey>> retained_modes(const GridSpec& grid);

/// Which coefficient family a ModeAmplitudes holds; fixes its inner product weight.
enum class AmplitudeKind {
    Momentum,    ///< z = <phi|psi>_LP, unit weight
    Rs,          ///< z_RS, unit weight
    BbBasis,     ///< z_BB = <g|F>_BB, unit weight
    BbMomentum,  ///< f_m, weight (2pi/L)^3 / ((2pi)^3 |k|)
};

class ModeAmplitudes {
public:
    ModeAmplitudes(GridSpec grid, AmplitudeKind kind);
    ModeAmplitudes(GridSpec grid, AmplitudeKind kind, std::vector<cplx> values);

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] AmplitudeKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<ModeKey>& modes() const noexcept { return *modes_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    cplx& operator[](std::size_t i) noexcept { return values_[i]; }
    const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] std::span<const cplx> values() const noexcept { return values_; }
    [[nodiscard]] std::span<cplx> values() noexcept { return values_; }

    /// Position of mode `key`, or size() if absent.
    [[nodiscard]] std::size_t find(const ModeKey& key) const;
    /// Inner-product weight of entry i for this kind.
    [[nodiscard]] double weight(std::size_t i) const;

private:
    GridSpec grid_;
    AmplitudeKind kind_;
    std::shared_ptr<const std::vector<ModeKey>> modes_;
    std::vector<cplx> values_;
};

/// Weighted product sum_i w_i a_i* b_i. Both operands must share grid and kind.
cplx inner(const ModeAmplitudes& a, const ModeAmplitudes& b);

/// z(k,s) = <phi_{k,s}|psi>_LP.
ModeAmplitudes map_m(const VectorFieldC& psi);
VectorFieldC map_m_inverse(const ModeAmplitudes& z);

/// z_RS(k,s) = <phi_{k,s}|F_RS>_LP.
ModeAmplitudes rs_amplitudes(const VectorFieldC& f_rs);

/// F_BB = i sqrt(hbar) Omega^{1/2} psi.
VectorFieldC iso_i(const VectorFieldC& psi, const PhysicalConstants& consts);
/// psi = -(i / sqrt(hbar)) Omega^{-1/2} F_BB.
VectorFieldC iso_i_inverse(const VectorFieldC& f_bb, const PhysicalConstants& consts);

/// Orthonormal BB basis field g_{k,s} = i sqrt(hbar w_k) phi_{k,s}.
VectorFieldC bb_basis_mode(const GridSpec& grid, const KIndex& n, Helicity s,
                           const PhysicalConstants& consts);
/// z_BB(k,s) = <g_{k,s}|F_BB>_BB.
ModeAmplitudes bb_basis_amplitudes(const VectorFieldC& f_bb, const PhysicalConstants& consts);

/// f_m(k,s) = sqrt((2pi)^3 / (hbar c)) int phi~*_{k,s} . F_BB, phi~ = (2pi)^{-3/2} eps e^{ik.x}.
ModeAmplitudes bb_momentum(const VectorFieldC& f_bb, const PhysicalConstants& consts);
VectorFieldC bb_momentum_inverse(const ModeAmplitudes& f_m, const PhysicalConstants& consts);

/// CSV with header kx_index,ky_index,kz_index,sigma,re,im.
void write_amplitudes_csv(std::ostream& os, const ModeAmplitudes& a);
ModeAmplitudes read_amplitudes_csv(std::istream& is, const GridSpec& grid, AmplitudeKind kind);

} // namespace maxfock
