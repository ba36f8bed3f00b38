#include "maxfock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "maxfock/errors.hpp"
#include "maxfock/spectral_ops.hpp"
#include "maxfock/transforms.hpp"

namespace maxfock::fock {
namespace {

using Triplet = Eigen::Triplet<cplx>;

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* context) {
    if (a != b && !(*a == *b)) throw GridMismatch(std::string(context) + ": operands act on different Fock spaces");
}

void check_eta(const FockSpace& space, std::span<const cplx> eta) {
    if (eta.size() != space.modes()) {
        throw std::invalid_argument("coefficient vector has " + std::to_string(eta.size()) + " entries, basis has " +
                                    std::to_string(space.modes()));
    }
    double n2 = 0.0;
    for (const auto& v : eta) n2 += std::norm(v);
    if (!(n2 > 0.0)) throw std::invalid_argument("coefficient vector must be nonzero");
}

/// Single-mode raising operator a^dagger_j, compressed.
SparseMatrix raise(const FockSpace& space, std::size_t j) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        if (space.total(i) >= space.n_max()) continue;
        Occupation occ = space.occupation(i);
        const double amp = std::sqrt(static_cast<double>(occ[j] + 1));
        ++occ[j];
        t.emplace_back(static_cast<int>(space.index(occ)), static_cast<int>(i), amp);
    }
    const auto d = static_cast<int>(space.dimension());
    SparseMatrix m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

void enumerate_shell(std::size_t modes, int total, Occupation& prefix, std::vector<Occupation>& out) {
    if (prefix.size() + 1 == modes) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        prefix.push_back(v);
        enumerate_shell(modes, total - v, prefix, out);
        prefix.pop_back();
    }
}

std::string rep_name(Representation r) { return r == Representation::LP ? "LP" : "BB"; }

} // namespace

// ---- ModeBasis ----

ModeBasis::ModeBasis(GridSpec grid, std::span<const ModeKey> keys, const PhysicalConstants& consts)
    : grid_(grid), consts_(consts) {
    consts.validate();
    if (keys.empty()) throw std::invalid_argument("mode basis must contain at least one mode");
    for (const auto& key : keys) {
        if (key.n[0] == 0 && key.n[1] == 0 && key.n[2] == 0) throw ZeroModeRequest("mode basis cannot contain k = 0");
        if (!grid.in_range(key.n)) throw NyquistRequest("mode basis entry lies on or beyond a Nyquist plane");
        const Mode m{key.n, key.sigma, consts.c * std::sqrt(norm2(grid.k_vector(key.n)))};
        if (std::find(modes_.begin(), modes_.end(), m) != modes_.end()) {
            throw std::invalid_argument("mode basis contains a duplicate mode");
        }
        modes_.push_back(m);
    }
}

ModeBasis ModeBasis::lowest(GridSpec grid, std::size_t count, const PhysicalConstants& consts) {
    std::vector<ModeKey> all = *retained_modes(grid);
    if (count > all.size()) throw std::invalid_argument("requested more modes than the grid retains");
    std::stable_sort(all.begin(), all.end(), [](const ModeKey& a, const ModeKey& b) {
        const auto n2 = [](const KIndex& n) { return n[0] * n[0] + n[1] * n[1] + n[2] * n[2]; };
        return n2(a.n) < n2(b.n);
    });
    all.resize(count);
    return ModeBasis(grid, all, consts);
}

std::vector<double> ModeBasis::omegas() const {
    std::vector<double> w;
    w.reserve(modes_.size());
    for (const auto& m : modes_) w.push_back(m.omega);
    return w;
}

VectorFieldC ModeBasis::lp_field(std::size_t j) const { return plane_wave_mode(grid_, modes_.at(j).n, modes_.at(j).sigma); }

VectorFieldC ModeBasis::bb_field(std::size_t j) const { return bb_basis_mode(grid_, modes_.at(j).n, modes_.at(j).sigma, consts_); }

// ---- FockSpace ----

FockSpace::FockSpace(ModeBasis basis, int n_max, Representation rep) : basis_(std::move(basis)), n_max_(n_max), rep_(rep) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    for (int t = 0; t <= n_max; ++t) {
        Occupation prefix;
        std::vector<Occupation> shell;
        enumerate_shell(basis_.size(), t, prefix, shell);
        for (auto& occ : shell) {
            lookup_.emplace(occ, states_.size());
            states_.push_back(std::move(occ));
            totals_.push_back(t);
        }
    }
}

std::size_t FockSpace::index(const Occupation& occ) const {
    auto it = lookup_.find(occ);
    if (it == lookup_.end()) throw std::out_of_range("occupation vector not in the truncated Fock space");
    return it->second;
}

bool FockSpace::contains(const Occupation& occ) const { return lookup_.count(occ) != 0; }

std::size_t FockSpace::shell_end(int n) const noexcept {
    if (n < 0) return 0;
    return static_cast<std::size_t>(std::upper_bound(totals_.begin(), totals_.end(), n) - totals_.begin());
}

SpacePtr FockSpace::twin() const {
    return make_space(basis_, n_max_, rep_ == Representation::LP ? Representation::BB : Representation::LP);
}

SpacePtr make_space(ModeBasis basis, int n_max, Representation rep) {
    return std::make_shared<const FockSpace>(std::move(basis), n_max, rep);
}

// ---- states ----

FockState::FockState(SpacePtr space, Eigen::VectorXcd amplitudes) : space_(std::move(space)), amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.size()) != space_->dimension()) {
        throw std::invalid_argument("amplitude vector length does not match Fock space dimension");
    }
    if (!amps_.allFinite()) throw std::invalid_argument("Fock state amplitudes must be finite");
}

FockState vacuum(const SpacePtr& space) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space->dimension()));
    v(0) = 1.0;
    return {space, std::move(v)};
}

cplx inner(const FockState& a, const FockState& b) {
    require_same_space(a.space(), b.space(), "Fock inner product");
    return a.amplitudes().dot(b.amplitudes());
}

// ---- operators ----

FockOperator::FockOperator(SpacePtr space, SparseMatrix matrix, OperatorTag tag)
    : space_(std::move(space)), matrix_(std::move(matrix)), tag_(tag) {
    const auto d = static_cast<Eigen::Index>(space_->dimension());
    if (matrix_.rows() != d || matrix_.cols() != d) throw std::invalid_argument("operator matrix has wrong shape");
    matrix_.makeCompressed();
}

FockOperator FockOperator::adjoint() const {
    OperatorTag t = tag_;
    if (t == OperatorTag::Creation) t = OperatorTag::Annihilation;
    else if (t == OperatorTag::Annihilation) t = OperatorTag::Creation;
    return {space_, SparseMatrix(matrix_.adjoint()), t};
}

FockState FockOperator::apply(const FockState& s) const {
    require_same_space(space_, s.space(), "operator application");
    return {space_, matrix_ * s.amplitudes()};
}

cplx FockOperator::expectation(const FockState& a, const FockState& b) const {
    require_same_space(space_, a.space(), "expectation");
    require_same_space(space_, b.space(), "expectation");
    return a.amplitudes().dot(matrix_ * b.amplitudes());
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    require_same_space(a.space_, b.space_, "operator product");
    return {a.space_, SparseMatrix(a.matrix_ * b.matrix_)};
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    require_same_space(a.space_, b.space_, "operator sum");
    return {a.space_, SparseMatrix(a.matrix_ + b.matrix_)};
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    require_same_space(a.space_, b.space_, "operator difference");
    return {a.space_, SparseMatrix(a.matrix_ - b.matrix_)};
}

FockOperator operator*(cplx s, const FockOperator& a) { return {a.space_, SparseMatrix(s * a.matrix_), a.tag_}; }

FockOperator identity(const SpacePtr& space) {
    const auto d = static_cast<Eigen::Index>(space->dimension());
    SparseMatrix m(d, d);
    m.setIdentity();
    return {space, std::move(m)};
}

FockOperator number_operator(const SpacePtr& space) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < space->dimension(); ++i) {
        t.emplace_back(static_cast<int>(i), static_cast<int>(i), static_cast<double>(space->total(i)));
    }
    const auto d = static_cast<Eigen::Index>(space->dimension());
    SparseMatrix m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    return {space, std::move(m)};
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator creation(const SpacePtr& space, std::span<const cplx> eta) {
    check_eta(*space, eta);
    const auto d = static_cast<Eigen::Index>(space->dimension());
    SparseMatrix m(d, d);
    for (std::size_t j = 0; j < eta.size(); ++j) {
        if (eta[j] != 0.0) m += eta[j] * raise(*space, j);
    }
    return {space, std::move(m), OperatorTag::Creation};
}

FockOperator annihilation(const SpacePtr& space, std::span<const cplx> eta) { return creation(space, eta).adjoint(); }

double commutator_defect(const SpacePtr& space, std::span<const cplx> eta_a, std::span<const cplx> eta_b) {
    check_eta(*space, eta_a);
    check_eta(*space, eta_b);
    cplx overlap = 0.0;
    for (std::size_t j = 0; j < eta_a.size(); ++j) overlap += std::conj(eta_a[j]) * eta_b[j];
    const FockOperator c = commutator(annihilation(space, eta_a), creation(space, eta_b)) - overlap * identity(space);
    const auto bound = static_cast<Eigen::Index>(space->shell_end(space->n_max() - 1));
    double worst = 0.0;
    const auto& m = c.matrix();
    for (Eigen::Index col = 0; col < std::min<Eigen::Index>(bound, m.outerSize()); ++col) {
        for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
            if (it.row() < bound) worst = std::max(worst, std::abs(it.value()));
        }
    }
    return worst;
}

FockOperator dgamma(const SpacePtr& space, std::span<const double> omegas, const PhysicalConstants& consts) {
    if (omegas.size() != space->modes()) throw std::invalid_argument("dgamma: one frequency per mode required");
    for (double w : omegas) {
        if (!(w > 0.0)) throw std::invalid_argument("dgamma: frequencies must be positive");
    }
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < space->dimension(); ++i) {
        const auto& occ = space->occupation(i);
        double e = 0.0;
        for (std::size_t j = 0; j < occ.size(); ++j) e += occ[j] * consts.hbar * omegas[j];
        t.emplace_back(static_cast<int>(i), static_cast<int>(i), e);
    }
    const auto d = static_cast<Eigen::Index>(space->dimension());
    SparseMatrix m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    return {space, std::move(m), OperatorTag::DGamma};
}

FockOperator hamiltonian(const SpacePtr& space) {
    const auto& basis = space->basis();
    const auto& consts = basis.constants();
    const std::size_t M = basis.size();
    std::vector<VectorFieldC> fields;
    fields.reserve(M);
    for (std::size_t j = 0; j < M; ++j) {
        fields.push_back(space->representation() == Representation::LP ? basis.lp_field(j) : basis.bb_field(j));
    }
    std::vector<SparseMatrix> up;
    up.reserve(M);
    for (std::size_t j = 0; j < M; ++j) up.push_back(raise(*space, j));

    const auto d = static_cast<Eigen::Index>(space->dimension());
    SparseMatrix h(d, d);
    for (std::size_t k = 0; k < M; ++k) {
        const VectorFieldC rhs =
            space->representation() == Representation::LP ? omega_pow(fields[k], 1.0, consts) : fields[k];
        const SparseMatrix down = up[k].adjoint();
        for (std::size_t j = 0; j < M; ++j) {
            cplx coeff = inner_lp(fields[j], rhs);
            if (space->representation() == Representation::LP) coeff *= consts.hbar;
            if (std::abs(coeff) < 1e-15 * consts.hbar * basis[j].omega) continue;
            h += coeff * SparseMatrix(up[j] * down);
        }
    }
    return {space, std::move(h), OperatorTag::Hamiltonian};
}

FockState single_photon(const SpacePtr& space, std::span<const cplx> eta) {
    if (space->n_max() < 1) throw std::invalid_argument("single_photon needs n_max >= 1");
    return creation(space, eta).apply(vacuum(space));
}

// ---- isomorphism ----

namespace {

SpacePtr lifted_space(const SpacePtr& space, LiftDirection direction) {
    const Representation from = direction == LiftDirection::LpToBb ? Representation::LP : Representation::BB;
    if (space->representation() != from) {
        throw GridMismatch("lift_iso: state lives in the " + rep_name(space->representation()) + " space, expected " +
                           rep_name(from));
    }
    return space->twin();
}

} // namespace

FockState lift_iso(const FockState& state, LiftDirection direction) {
    return {lifted_space(state.space(), direction), state.amplitudes()};
}

FockOperator lift_iso(const FockOperator& op, LiftDirection direction) {
    return {lifted_space(op.space(), direction), op.matrix(), OperatorTag::Similarity};
}

std::vector<cplx> lp_coefficients(const ModeBasis& basis, const VectorFieldC& psi) {
    require_same_grid(basis.grid(), psi.grid(), "lp_coefficients");
    std::vector<cplx> eta(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) eta[j] = inner_lp(basis.lp_field(j), psi);
    return eta;
}

std::vector<cplx> bb_coefficients(const ModeBasis& basis, const VectorFieldC& f_bb) {
    require_same_grid(basis.grid(), f_bb.grid(), "bb_coefficients");
    const VectorFieldC weighted = omega_pow(f_bb, -1.0, basis.constants());
    std::vector<cplx> eta(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        eta[j] = inner_lp(basis.bb_field(j), weighted) / basis.constants().hbar;
    }
    return eta;
}

FockOperator smeared_lp_field(const SpacePtr& space, const VectorFieldC& f) {
    if (space->representation() != Representation::LP) throw GridMismatch("smeared_lp_field needs an LP space");
    // Psi(f) = sum_j <f|phi_j> a_j = B_eta with eta_j = <phi_j|f>
    return annihilation(space, lp_coefficients(space->basis(), f));
}

FockOperator smeared_bb_field(const SpacePtr& space, const VectorFieldC& h) {
    if (space->representation() != Representation::BB) throw GridMismatch("smeared_bb_field needs a BB space");
    const auto& basis = space->basis();
    require_same_grid(basis.grid(), h.grid(), "smeared_bb_field");
    std::vector<cplx> eta(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) eta[j] = inner_lp(basis.bb_field(j), h);
    return annihilation(space, eta);
}

// ---- serialization ----

void write_state(std::ostream& os, const FockState& s) {
    const auto& space = *s.space();
    const auto& basis = space.basis();
    const auto& c = basis.constants();
    const auto old = os.precision(17);
    os << "format_version: 1\n"
       << "kind: fock_state\n"
       << "L: " << basis.grid().box_length() << '\n'
       << "N: " << basis.grid().points_per_axis() << '\n'
       << "constants: hbar=" << c.hbar << " eps0=" << c.eps0 << " c=" << c.c << '\n'
       << "representation: " << rep_name(space.representation()) << '\n'
       << "n_max: " << space.n_max() << '\n'
       << "modes: " << basis.size() << '\n';
    for (const auto& m : basis.modes()) {
        os << "mode: " << m.n[0] << ' ' << m.n[1] << ' ' << m.n[2] << ' ' << (m.sigma == Helicity::Plus ? "+1" : "-1")
           << '\n';
    }
    os << '\n';
    for (std::size_t j = 0; j < basis.size(); ++j) os << "n_" << (j + 1) << ',';
    os << "re,im\n";
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        for (int v : space.occupation(i)) os << v << ',';
        const cplx a = s.amplitudes()(static_cast<Eigen::Index>(i));
        os << a.real() << ',' << a.imag() << '\n';
    }
    os.precision(old);
}

FockState read_state(std::istream& is) {
    std::string line;
    std::map<std::string, std::string> header;
    std::vector<ModeKey> keys;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) -> FormatError {
        return FormatError("Fock state line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) break;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw fail("expected key: value");
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        value.erase(0, value.find_first_not_of(' '));
        if (key == "mode") {
            std::istringstream ms(value);
            KIndex n{};
            int sg = 0;
            if (!(ms >> n[0] >> n[1] >> n[2] >> sg) || (sg != 1 && sg != -1)) throw fail("bad mode entry");
            keys.push_back({n, sg > 0 ? Helicity::Plus : Helicity::Minus});
        } else {
            header[key] = value;
        }
    }
    for (const char* k : {"format_version", "kind", "L", "N", "constants", "representation", "n_max", "modes"}) {
        if (!header.count(k)) throw FormatError(std::string("Fock state header lacks '") + k + "'");
    }
    if (header["format_version"] != "1" || header["kind"] != "fock_state") throw FormatError("unsupported Fock state format");
    PhysicalConstants consts;
    {
        std::istringstream cs(header["constants"]);
        std::string tok;
        int seen = 0;
        while (cs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw FormatError("bad constants entry '" + tok + "'");
            const std::string name = tok.substr(0, eq);
            const double v = std::stod(tok.substr(eq + 1));
            if (name == "hbar") consts.hbar = v;
            else if (name == "eps0") consts.eps0 = v;
            else if (name == "c") consts.c = v;
            else throw FormatError("unknown constant '" + name + "'");
            ++seen;
        }
        if (seen != 3) throw FormatError("constants line must list hbar, eps0 and c");
    }
    Representation rep;
    if (header["representation"] == "LP") rep = Representation::LP;
    else if (header["representation"] == "BB") rep = Representation::BB;
    else throw FormatError("unknown representation '" + header["representation"] + "'");
    if (std::stoul(header["modes"]) != keys.size()) throw FormatError("mode count does not match mode lines");

    const GridSpec grid(std::stod(header["L"]), std::stoi(header["N"]));
    auto space = make_space(ModeBasis(grid, keys, consts), std::stoi(header["n_max"]), rep);

    if (!std::getline(is, line)) throw FormatError("Fock state: missing CSV header");
    ++lineno;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space->dimension()));
    const std::size_t M = keys.size();
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() != M + 2) throw fail("expected " + std::to_string(M + 2) + " columns");
        Occupation occ(M);
        try {
            for (std::size_t j = 0; j < M; ++j) occ[j] = std::stoi(cells[j]);
            if (!space->contains(occ)) throw fail("occupation outside the truncated space");
            amps(static_cast<Eigen::Index>(space->index(occ))) = {std::stod(cells[M]), std::stod(cells[M + 1])};
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception&) {
            throw fail("unparseable number");
        }
    }
    return {space, std::move(amps)};
}

} // namespace maxfock::fock
