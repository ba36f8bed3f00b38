#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"
#include "maxfock/maps.hpp"

namespace maxfock::fock {

using SparseMatrix = Eigen::SparseMatrix<cplx>;
using Occupation = std::vector<int>;

struct Mode {
    KIndex n;
    Helicity sigma;
    double omega;
    friend bool operator==(const Mode&, const Mode&) = default;
};

/// Finite, ordered set of grid modes used as the one-photon basis.
class ModeBasis {
public:
    /// Throws on duplicate modes, k = 0 or Nyquist entries.
    ModeBasis(GridSpec grid, std::span<const ModeKey> keys, const PhysicalConstants& consts);

    /// The first `count` entries of retained_modes(grid) sorted by |k| (ties by slot order).
    static ModeBasis lowest(GridSpec grid, std::size_t count, const PhysicalConstants& consts);

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return modes_.size(); }
    [[nodiscard]] const Mode& operator[](std::size_t j) const noexcept { return modes_[j]; }
    [[nodiscard]] const std::vector<Mode>& modes() const noexcept { return modes_; }
    [[nodiscard]] std::vector<double> omegas() const;
    [[nodiscard]] const PhysicalConstants& constants() const noexcept { return consts_; }

    /// phi_j on the grid.
    [[nodiscard]] VectorFieldC lp_field(std::size_t j) const;
    /// g_j = i sqrt(hbar w_j) phi_j on the grid.
    [[nodiscard]] VectorFieldC bb_field(std::size_t j) const;

    friend bool operator==(const ModeBasis& a, const ModeBasis& b) {
        return a.grid_ == b.grid_ && a.modes_ == b.modes_ && a.consts_ == b.consts_;
    }

private:
    GridSpec grid_;
    std::vector<Mode> modes_;
    PhysicalConstants consts_;
};

enum class Representation { LP, BB };

/**
 * Symmetric Fock space over a ModeBasis, truncated to total photon number <= n_max.
 *
 * Occupation vectors are ordered by total photon number, and within a shell in
 * decreasing lexicographic order, so (1,0,..) precedes (0,1,..).
 */
class FockSpace {
public:
    FockSpace(ModeBasis basis, int n_max, Representation rep);

    [[nodiscard]] const ModeBasis& basis() const noexcept { return basis_; }
    [[nodiscard]] int n_max() const noexcept { return n_max_; }
    [[nodiscard]] Representation representation() const noexcept { return rep_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return states_.size(); }
    [[nodiscard]] std::size_t modes() const noexcept { return basis_.size(); }
    [[nodiscard]] const Occupation& occupation(std::size_t i) const noexcept { return states_[i]; }
    [[nodiscard]] int total(std::size_t i) const noexcept { return totals_[i]; }
    /// Index of an occupation vector; throws std::out_of_range when absent.
    [[nodiscard]] std::size_t index(const Occupation& occ) const;
    [[nodiscard]] bool contains(const Occupation& occ) const;
    /// Number of basis states with total photon number <= n.
    [[nodiscard]] std::size_t shell_end(int n) const noexcept;

    /// Same basis and truncation labelled with the other representation.
    [[nodiscard]] std::shared_ptr<const FockSpace> twin() const;

    friend bool operator==(const FockSpace& a, const FockSpace& b) {
        return a.n_max_ == b.n_max_ && a.rep_ == b.rep_ && a.basis_ == b.basis_;
    }

private:
    ModeBasis basis_;
    int n_max_;
    Representation rep_;
    std::vector<Occupation> states_;
    std::vector<int> totals_;
    std::map<Occupation, std::size_t> lookup_;
};

using SpacePtr = std::shared_ptr<const FockSpace>;

SpacePtr make_space(ModeBasis basis, int n_max, Representation rep);

class FockState {
public:
    FockState(SpacePtr space, Eigen::VectorXcd amplitudes);

    [[nodiscard]] const SpacePtr& space() const noexcept { return space_; }
    [[nodiscard]] const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] double norm() const { return amps_.norm(); }
    [[nodiscard]] cplx amplitude(const Occupation& occ) const { return amps_(space_->index(occ)); }

private:
    SpacePtr space_;
    Eigen::VectorXcd amps_;
};

FockState vacuum(const SpacePtr& space);
/// <a|b>; throws GridMismatch when the spaces differ.
cplx inner(const FockState& a, const FockState& b);

enum class OperatorTag { Creation, Annihilation, DGamma, Hamiltonian, Similarity, Generic };

class FockOperator {
public:
    FockOperator(SpacePtr space, SparseMatrix matrix, OperatorTag tag = OperatorTag::Generic);

    [[nodiscard]] const SpacePtr& space() const noexcept { return space_; }
    [[nodiscard]] const SparseMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] OperatorTag tag() const noexcept { return tag_; }

    [[nodiscard]] FockOperator adjoint() const;
    [[nodiscard]] FockState apply(const FockState& s) const;
    /// <a|O|b>.
    [[nodiscard]] cplx expectation(const FockState& a, const FockState& b) const;

    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(cplx s, const FockOperator& a);

private:
    SpacePtr space_;
    SparseMatrix matrix_;
    OperatorTag tag_;
};

FockOperator identity(const SpacePtr& space);
FockOperator number_operator(const SpacePtr& space);
FockOperator commutator(const FockOperator& a, const FockOperator& b);

/// B^dagger_eta = sum_j eta_j a^dagger_j, compressed to the truncated space.
FockOperator creation(const SpacePtr& space, std::span<const cplx> eta);
/// B_eta = sum_j conj(eta_j) a_j.
FockOperator annihilation(const SpacePtr& space, std::span<const cplx> eta);

/// max |([B_A, B^dagger_B] - <A|B> Id)_{ij}| over states with total <= n_max - 1.
double commutator_defect(const SpacePtr& space, std::span<const cplx> eta_a, std::span<const cplx> eta_b);

/// dGamma(hbar Omega) for a one-photon operator diagonal in the basis: sum_j n_j hbar w_j.
FockOperator dgamma(const SpacePtr& space, std::span<const double> omegas, const PhysicalConstants& consts);

/**
 * Quantized total energy assembled from the classical layer.
 *
 * LP: sum_{jk} hbar <phi_j|Omega phi_k>_LP B^dagger_j B_k.
 * BB: sum_{jk} (int g_j* . g_k) C^dagger_j C_k.
 */
FockOperator hamiltonian(const SpacePtr& space);

/// B^dagger_eta |0>.
FockState single_photon(const SpacePtr& space, std::span<const cplx> eta);

enum class LiftDirection { LpToBb, BbToLp };

/// Isomorphism lifted to Fock space: occupation amplitudes carried over the
/// phi_j <-> g_j relabelling.
FockState lift_iso(const FockState& state, LiftDirection direction);
/// Similarity transform I O I^{-1} (or its inverse) of an operator.
FockOperator lift_iso(const FockOperator& op, LiftDirection direction);

/// eta_j = <phi_j|psi>_LP for an LP one-photon field.
std::vector<cplx> lp_coefficients(const ModeBasis& basis, const VectorFieldC& psi);
/// eta_j = <g_j|F>_BB for a BB one-photon field.
std::vector<cplx> bb_coefficients(const ModeBasis& basis, const VectorFieldC& f_bb);

/// Smeared LP field operator Psi(f) = int f* . Psi = B_{<phi|f>}. Space must be LP.
FockOperator smeared_lp_field(const SpacePtr& space, const VectorFieldC& f);
/// Smeared BB field operator F_BB(h) = int h* . F_BB = sum_j <h|g_j> C_j. Space must be BB.
FockOperator smeared_bb_field(const SpacePtr& space, const VectorFieldC& h);

/// Header (grid, constants, representation, n_max, basis) then CSV rows n_1,...,n_M,re,im.
void write_state(std::ostream& os, const FockState& s);
FockState read_state(std::istream& is);

} // namespace maxfock::fock
