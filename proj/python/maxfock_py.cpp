// Python bindings. Vector fields cross the boundary as numpy arrays of shape (N, N, N, 3)
// indexed [ix, iy, iz, component]; the grid is passed alongside.

#include <maxfock/maxfock.hpp>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace maxfock;

namespace {

using CArray = py::array_t<cplx, py::array::forcecast>;
using RArray = py::array_t<double, py::array::forcecast>;

template <class T>
py::array_t<T> to_numpy(const VectorField<T>& f) {
    const auto n = static_cast<py::ssize_t>(f.grid().points_per_axis());
    py::array_t<T> out({n, n, n, py::ssize_t{3}});
    auto v = out.template mutable_unchecked<4>();
    for (std::size_t p = 0; p < f.size(); ++p) {
        const auto ijk = f.grid().coords(p);
        for (int a = 0; a < 3; ++a) v(ijk[0], ijk[1], ijk[2], a) = f[p][a];
    }
    return out;
}

template <class T>
VectorField<T> from_numpy(const GridSpec& g, const py::array_t<T, py::array::forcecast>& arr) {
    const auto n = static_cast<py::ssize_t>(g.points_per_axis());
    if (arr.ndim() != 4 || arr.shape(0) != n || arr.shape(1) != n || arr.shape(2) != n || arr.shape(3) != 3)
        throw std::invalid_argument("expected an array of shape (N, N, N, 3) with N = " + std::to_string(n));
    const auto v = arr.template unchecked<4>();
    VectorField<T> f(g);
    for (std::size_t p = 0; p < f.size(); ++p) {
        const auto ijk = g.coords(p);
        for (int a = 0; a < 3; ++a) f[p][a] = v(ijk[0], ijk[1], ijk[2], a);
    }
    return f;
}

VectorFieldC cfield(const GridSpec& g, const CArray& a) { return from_numpy<cplx>(g, a); }
VectorFieldR rfield(const GridSpec& g, const RArray& a) { return from_numpy<double>(g, a); }

py::array_t<cplx> dense(const fock::SparseMatrix& m) {
    const Eigen::MatrixXcd d(m);
    py::array_t<cplx> out({static_cast<py::ssize_t>(d.rows()), static_cast<py::ssize_t>(d.cols())});
    auto v = out.mutable_unchecked<2>();
    for (Eigen::Index i = 0; i < d.rows(); ++i)
        for (Eigen::Index j = 0; j < d.cols(); ++j) v(i, j) = d(i, j);
    return out;
}

Helicity helicity_of(int s) {
    if (s == 1) return Helicity::Plus;
    if (s == -1) return Helicity::Minus;
    throw std::invalid_argument("helicity must be +1 or -1");
}

py::dict amplitudes_dict(const ModeAmplitudes& a) {
    std::vector<std::array<int, 4>> keys;
    keys.reserve(a.size());
    for (const auto& m : a.modes()) keys.push_back({m.n[0], m.n[1], m.n[2], sign(m.sigma)});
    py::dict d;
    d["modes"] = py::array(py::cast(keys));
    d["values"] = py::array(py::cast(std::vector<cplx>(a.values().begin(), a.values().end())));
    return d;
}

} // namespace

PYBIND11_MODULE(_maxfock, m) {
    m.doc() = "LP and BB quantizations of the free Maxwell field on a periodic grid";

    py::register_exception<GridMismatch>(m, "GridMismatch", PyExc_ValueError);
    py::register_exception<NegativePowerOnZeroMode>(m, "NegativePowerOnZeroMode", PyExc_ValueError);
    py::register_exception<ZeroStateFidelity>(m, "ZeroStateFidelity", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<SupportTooLarge>(m, "SupportTooLarge", PyExc_ValueError);

    py::class_<GridSpec>(m, "Grid")
        .def(py::init<double, int>(), py::arg("L"), py::arg("N"))
        .def_property_readonly("L", &GridSpec::box_length)
        .def_property_readonly("N", &GridSpec::points_per_axis)
        .def_property_readonly("spacing", &GridSpec::spacing)
        .def_property_readonly("volume", &GridSpec::volume)
        .def("__eq__", [](const GridSpec& a, const GridSpec& b) { return a == b; })
        .def("__repr__", [](const GridSpec& g) {
            return "Grid(L=" + std::to_string(g.box_length()) + ", N=" + std::to_string(g.points_per_axis()) + ")";
        });

    py::class_<PhysicalConstants>(m, "Constants")
        .def(py::init([](double hbar, double eps0, double c) { return PhysicalConstants{hbar, eps0, c}; }),
             py::arg("hbar") = 1.0, py::arg("eps0") = 1.0, py::arg("c") = 1.0)
        .def_static("natural", &PhysicalConstants::natural)
        .def_static("si", &PhysicalConstants::si)
        .def_readwrite("hbar", &PhysicalConstants::hbar)
        .def_readwrite("eps0", &PhysicalConstants::eps0)
        .def_readwrite("c", &PhysicalConstants::c)
        .def_property_readonly("mu0", &PhysicalConstants::mu0);

    const auto nat = PhysicalConstants::natural();

    // ---- fields ----
    m.def("random_state", [](const GridSpec& g, std::uint64_t seed, const std::string& profile) {
        return to_numpy(random_state(g, seed, SpectrumProfile::parse(profile)));
    }, py::arg("grid"), py::arg("seed"), py::arg("profile") = "gaussian:2",
       "Seeded transverse complex field (SplitMix64 + Box-Muller coefficients).");
    m.def("random_real_state", [](const GridSpec& g, std::uint64_t seed, const std::string& profile) {
        return to_numpy(random_real_state(g, seed, SpectrumProfile::parse(profile)));
    }, py::arg("grid"), py::arg("seed"), py::arg("profile") = "gaussian:2");
    m.def("plane_wave_mode", [](const GridSpec& g, std::array<int, 3> n, int s) {
        return to_numpy(plane_wave_mode(g, n, helicity_of(s)));
    }, py::arg("grid"), py::arg("n"), py::arg("helicity"));

    // ---- spectral operators ----
    m.def("curl", [](const GridSpec& g, const CArray& f) { return to_numpy(curl(cfield(g, f))); });
    m.def("helicity", [](const GridSpec& g, const CArray& f) { return to_numpy(helicity(cfield(g, f))); });
    m.def("omega_pow", [](const GridSpec& g, const CArray& f, double alpha, const PhysicalConstants& k) {
        return to_numpy(omega_pow(cfield(g, f), alpha, k));
    }, py::arg("grid"), py::arg("field"), py::arg("alpha"), py::arg("constants") = nat);
    m.def("project_transverse", [](const GridSpec& g, const CArray& f) { return to_numpy(project_transverse(cfield(g, f))); });
    m.def("project_helicity", [](const GridSpec& g, const CArray& f, int s) {
        return to_numpy(project_helicity(cfield(g, f), helicity_of(s), true));
    });
    m.def("divergence_norm", [](const GridSpec& g, const CArray& f) {
        const auto d = divergence(cfield(g, f));
        return std::sqrt(inner_lp(d, d).real());
    });

    // ---- representations ----
    m.def("lp_from_potentials", [](const GridSpec& g, const RArray& A, const RArray& Pi, const PhysicalConstants& k) {
        return to_numpy(lp_from_potentials({rfield(g, A), rfield(g, Pi)}, k));
    }, py::arg("grid"), py::arg("A"), py::arg("Pi"), py::arg("constants") = nat);
    m.def("fields_from_lp", [](const GridSpec& g, const CArray& psi, const PhysicalConstants& k) {
        const auto p = fields_from_lp(cfield(g, psi), k);
        return py::make_tuple(to_numpy(p.A), to_numpy(p.E), to_numpy(p.B));
    }, py::arg("grid"), py::arg("psi"), py::arg("constants") = nat, "Returns (A, E, B).");
    m.def("bb_vector", [](const GridSpec& g, const RArray& E, const RArray& B, const PhysicalConstants& k) {
        return to_numpy(bb_vector({rfield(g, E), rfield(g, B)}, k));
    }, py::arg("grid"), py::arg("E"), py::arg("B"), py::arg("constants") = nat);
    m.def("rs_vector", [](const GridSpec& g, const RArray& E, const RArray& B, const PhysicalConstants& k) {
        return to_numpy(rs_vector({rfield(g, E), rfield(g, B)}, k));
    }, py::arg("grid"), py::arg("E"), py::arg("B"), py::arg("constants") = nat);
    m.def("fields_from_bb", [](const GridSpec& g, const CArray& f, const PhysicalConstants& k) {
        const auto e = fields_from_bb(cfield(g, f), k);
        return py::make_tuple(to_numpy(e.E), to_numpy(e.B));
    }, py::arg("grid"), py::arg("f_bb"), py::arg("constants") = nat, "Returns (E, B).");
    m.def("bispinor_split", [](const GridSpec& g, const CArray& f) {
        const auto b = bispinor_split(cfield(g, f));
        return py::make_tuple(to_numpy(b.upper), to_numpy(b.lower));
    });
    m.def("inner_lp", [](const GridSpec& g, const CArray& a, const CArray& b) { return inner_lp(cfield(g, a), cfield(g, b)); });
    m.def("inner_bb", [](const GridSpec& g, const CArray& a, const CArray& b, const PhysicalConstants& k) {
        return inner_bb(cfield(g, a), cfield(g, b), k);
    }, py::arg("grid"), py::arg("a"), py::arg("b"), py::arg("constants") = nat);
    m.def("hamilton_lp", [](const GridSpec& g, const CArray& psi, const PhysicalConstants& k) { return hamilton_lp(cfield(g, psi), k); },
          py::arg("grid"), py::arg("psi"), py::arg("constants") = nat);
    m.def("k_rs", [](const GridSpec& g, const CArray& f, const PhysicalConstants& k) { return k_rs(cfield(g, f), k); },
          py::arg("grid"), py::arg("f_rs"), py::arg("constants") = nat);
    m.def("k_bb", [](const GridSpec& g, const CArray& f, const PhysicalConstants& k) { return k_bb(cfield(g, f), k); },
          py::arg("grid"), py::arg("f_bb"), py::arg("constants") = nat);
    m.def("total_energy", [](const GridSpec& g, const RArray& E, const RArray& B, const PhysicalConstants& k) {
        return total_energy({rfield(g, E), rfield(g, B)}, k);
    }, py::arg("grid"), py::arg("E"), py::arg("B"), py::arg("constants") = nat);

    // ---- maps ----
    m.def("iso_i", [](const GridSpec& g, const CArray& psi, const PhysicalConstants& k) { return to_numpy(iso_i(cfield(g, psi), k)); },
          py::arg("grid"), py::arg("psi"), py::arg("constants") = nat);
    m.def("iso_i_inverse", [](const GridSpec& g, const CArray& f, const PhysicalConstants& k) {
        return to_numpy(iso_i_inverse(cfield(g, f), k));
    }, py::arg("grid"), py::arg("f_bb"), py::arg("constants") = nat);
    m.def("map_m", [](const GridSpec& g, const CArray& psi) { return amplitudes_dict(map_m(cfield(g, psi))); },
          "Momentum amplitudes: dict with 'modes' (M, 4) rows nx, ny, nz, sigma and 'values' (M,).");
    m.def("bb_momentum", [](const GridSpec& g, const CArray& f, const PhysicalConstants& k) {
        return amplitudes_dict(bb_momentum(cfield(g, f), k));
    }, py::arg("grid"), py::arg("f_bb"), py::arg("constants") = nat);

    // ---- dynamics ----
    m.def("evolve", [](const GridSpec& g, const CArray& f, double t, const PhysicalConstants& k) {
        return to_numpy(evolve(cfield(g, f), t, k));
    }, py::arg("grid"), py::arg("field"), py::arg("t"), py::arg("constants") = nat);
    m.def("analytic_circular_wave", [](const GridSpec& g, std::array<int, 3> n, int s, double t, const PhysicalConstants& k) {
        const auto w = analytic_circular_wave(g, n, helicity_of(s), t, k);
        return py::make_tuple(to_numpy(w.E), to_numpy(w.B));
    }, py::arg("grid"), py::arg("n"), py::arg("helicity"), py::arg("t"), py::arg("constants") = nat);

    // ---- fidelity ----
    m.def("fidelity_bb", [](const GridSpec& g, const CArray& a, const CArray& b, const PhysicalConstants& k) {
        return fidelity_bb(cfield(g, a), cfield(g, b), k);
    }, py::arg("grid"), py::arg("f1"), py::arg("f2"), py::arg("constants") = nat);
    m.def("fidelity_lp", [](const GridSpec& g, const CArray& a, const CArray& b) { return fidelity_lp(cfield(g, a), cfield(g, b)); });
    m.def("fidelity_unweighted", [](const GridSpec& g, const CArray& a, const CArray& b) {
        return fidelity_unweighted(cfield(g, a), cfield(g, b));
    });
    m.def("two_frequency_counterexample", [](const GridSpec& g) {
        const auto ce = two_frequency_counterexample(g);
        return py::make_tuple(to_numpy(ce.f1), to_numpy(ce.f2));
    });

    // ---- kernels ----
    m.def("gaussian_test_field", [](const GridSpec& g, double sigma, double k0) { return to_numpy(gaussian_test_field(g, sigma, k0)); },
          py::arg("grid"), py::arg("sigma") = 1.2, py::arg("k0") = 1.0);
    m.def("riesz_neg_half", [](const GridSpec& g, const CArray& f, const PhysicalConstants& k) {
        return to_numpy(riesz_neg_half(cfield(g, f), k));
    }, py::arg("grid"), py::arg("field"), py::arg("constants") = nat);
    m.def("riesz_pos_half", [](const GridSpec& g, const CArray& f, const PhysicalConstants& k, bool corrected) {
        KernelOptions o;
        if (corrected) o.pv_rule = PrincipalValueRule::CurvatureCorrected;
        return to_numpy(riesz_pos_half(cfield(g, f), k, o));
    }, py::arg("grid"), py::arg("field"), py::arg("constants") = nat, py::arg("curvature_corrected") = false);

    // ---- Fock layer ----
    m.def("fock_hamiltonians", [](const GridSpec& g, int modes, int n_max, const PhysicalConstants& k) {
        const auto basis = fock::ModeBasis::lowest(g, static_cast<std::size_t>(modes), k);
        const auto lp = fock::make_space(basis, n_max, fock::Representation::LP);
        const auto bb = lp->twin();
        return py::make_tuple(dense(fock::hamiltonian(lp).matrix()), dense(fock::hamiltonian(bb).matrix()),
                              dense(fock::dgamma(lp, basis.omegas(), k).matrix()));
    }, py::arg("grid"), py::arg("modes"), py::arg("n_max"), py::arg("constants") = nat,
       "(H_LP, H_BB, dGamma(hbar Omega)) as dense matrices in the occupation basis.");
    m.def("commutator_defect", [](const GridSpec& g, int modes, int n_max, std::vector<cplx> a, std::vector<cplx> b) {
        const auto basis = fock::ModeBasis::lowest(g, static_cast<std::size_t>(modes), PhysicalConstants::natural());
        return fock::commutator_defect(fock::make_space(basis, n_max, fock::Representation::BB), a, b);
    });

    // ---- snapshots ----
    m.def("write_snapshot", [](const std::filesystem::path& path, const GridSpec& g, const CArray& f,
                               const PhysicalConstants& k, const std::string& label) {
        write_snapshot(path, Snapshot{g, k, label, cfield(g, f)});
    }, py::arg("path"), py::arg("grid"), py::arg("field"), py::arg("constants") = nat, py::arg("label") = "F_BB");
    m.def("read_snapshot", [](const std::filesystem::path& path) {
        const auto s = read_snapshot(path);
        py::object field;
        if (const auto* c = std::get_if<VectorFieldC>(&s.field)) field = to_numpy(*c);
        else if (const auto* r = std::get_if<VectorFieldR>(&s.field)) field = to_numpy(*r);
        else {
            const auto& b = std::get<Bispinor>(s.field);
            field = py::make_tuple(to_numpy(b.upper), to_numpy(b.lower));
        }
        return py::make_tuple(s.grid, s.constants, s.label, field);
    }, "Returns (grid, constants, label, field); a bispinor field comes back as (upper, lower).");
}
