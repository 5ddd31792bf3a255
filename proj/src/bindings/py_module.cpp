// Python bindings for the core operations: exact series arithmetic,
// quasideterminants, the Hankel/Toda chains, the Painleve layer and the
// verification harness.  Rationals cross the boundary as strings
// ("p" or "p/q"); matrices as nested lists of those.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncpainleve/harness.hpp"
#include "ncpainleve/painleve.hpp"
#include "ncpainleve/rng.hpp"
#include "ncpainleve/version.hpp"

namespace py = pybind11;
using namespace ncp;

namespace {

Rational rat_from(const py::object& v) {
    // accepts python ints (any size) and "p"/"p/q" strings
    return Rational::parse(py::str(v).cast<std::string>());
}

CoefMatrix matrix_from(const py::object& rows_obj) {
    auto rows = rows_obj.cast<std::vector<std::vector<py::object>>>();
    const int dim = static_cast<int>(rows.size());
    CoefMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[r].size()) != dim)
            throw Error("matrix rows must all have " + std::to_string(dim) + " entries");
        for (int c = 0; c < dim; ++c) m.at(r, c) = rat_from(rows[r][c]);
    }
    return m;
}

py::list matrix_to(const CoefMatrix& m) {
    py::list rows;
    for (int r = 0; r < m.dim(); ++r) {
        py::list row;
        for (int c = 0; c < m.dim(); ++c) row.append(m.at(r, c).str());
        rows.append(row);
    }
    return rows;
}

py::dict result_to(const CheckResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["params"] = py::module_::import("json").attr("loads")(r.params.dump());
    d["valid_order"] = r.valid_order;
    d["passed"] = r.passed;
    d["exploratory"] = r.exploratory;
    if (r.first_nonzero) {
        py::dict loc;
        loc["coeff"] = r.first_nonzero->coeff;
        loc["row"] = r.first_nonzero->row;
        loc["col"] = r.first_nonzero->col;
        d["first_nonzero"] = loc;
    } else {
        d["first_nonzero"] = py::none();
    }
    return d;
}

HankelIdentity identity_from(const std::string& which) {
    if (which == "lemma22") return HankelIdentity::DerivativeExpansion;
    if (which == "kappa_ab") return HankelIdentity::KappaForms;
    if (which == "cor23") return HankelIdentity::RowColumnDerivatives;
    if (which == "cor24") return HankelIdentity::PluckerRatio;
    if (which == "lemma25") return HankelIdentity::ChainStep;
    if (which == "sylvester24") return HankelIdentity::SylvesterRecursion;
    throw Error("unknown identity '" + which + "'");
}

ChainIdentity chain_from(const std::string& which) {
    if (which == "pos1") return ChainIdentity::Pos1;
    if (which == "pos2") return ChainIdentity::Pos2;
    if (which == "neg3") return ChainIdentity::Neg3;
    if (which == "neg4") return ChainIdentity::Neg4;
    throw Error("unknown chain identity '" + which + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact quasideterminant solutions of noncommutative Toda chains and "
              "a noncommutative second Painleve equation, verified as residuals";
    m.attr("__version__") = kVersion;

    py::register_exception<Error>(m, "AlgebraError");

    py::class_<RingElem>(m, "RingElem")
        .def_static(
            "zero",
            [](int dim, const py::object& x0, int order) {
                return RingElem::zero(dim, rat_from(x0), order);
            },
            py::arg("dim"), py::arg("x0"), py::arg("order"))
        .def_static(
            "one",
            [](int dim, const py::object& x0, int order) {
                return RingElem::one(dim, rat_from(x0), order);
            },
            py::arg("dim"), py::arg("x0"), py::arg("order"))
        .def_static(
            "x",
            [](int dim, const py::object& x0, int order) {
                return RingElem::variable(dim, rat_from(x0), order);
            },
            py::arg("dim"), py::arg("x0"), py::arg("order"))
        .def_static(
            "constant",
            [](const py::object& c0, const py::object& x0, int order) {
                return RingElem::constant(matrix_from(c0), rat_from(x0), order);
            },
            py::arg("c0"), py::arg("x0"), py::arg("order"))
        .def_static(
            "scalar",
            [](const py::object& value, int dim, const py::object& x0, int order) {
                return RingElem::scalar(rat_from(value), dim, rat_from(x0), order);
            },
            py::arg("value"), py::arg("dim"), py::arg("x0"), py::arg("order"))
        .def_static(
            "from_coeffs",
            [](const py::object& coeffs, const py::object& x0) {
                std::vector<CoefMatrix> c;
                for (const auto& item : coeffs.cast<std::vector<py::object>>())
                    c.push_back(matrix_from(item));
                return RingElem(rat_from(x0), std::move(c));
            },
            py::arg("coeffs"), py::arg("x0"))
        .def_property_readonly("dim", &RingElem::dim)
        .def_property_readonly("valid_order", &RingElem::valid_order)
        .def_property_readonly("base_point",
                               [](const RingElem& e) { return e.base_point().str(); })
        .def("coeff", [](const RingElem& e, int k) { return matrix_to(e.coeff(k)); })
        .def("coeffs",
             [](const RingElem& e) {
                 py::list out;
                 for (int k = 0; k <= e.valid_order(); ++k) out.append(matrix_to(e.coeff(k)));
                 return out;
             })
        .def("derive", &RingElem::derive)
        .def("invert", &RingElem::invert)
        .def("truncated", &RingElem::truncated)
        .def("recentered",
             [](const RingElem& e, const py::object& x0) { return e.recentered(rat_from(x0)); })
        .def("scaled",
             [](const RingElem& e, const py::object& r) { return e.scaled(rat_from(r)); })
        .def("is_zero", &RingElem::is_zero)
        .def("__add__", [](const RingElem& a, const RingElem& b) { return a + b; })
        .def("__sub__", [](const RingElem& a, const RingElem& b) { return a - b; })
        .def("__mul__", [](const RingElem& a, const RingElem& b) { return a * b; })
        .def("__neg__", [](const RingElem& a) { return -a; })
        .def("__eq__", [](const RingElem& a, const RingElem& b) { return a == b; })
        .def("__repr__", &RingElem::str);

    py::class_<NCMat>(m, "NCMat")
        .def(py::init([](const std::vector<std::vector<RingElem>>& rows) {
                 return NCMat(rows);
             }),
             py::arg("rows"))
        .def_static(
            "identity",
            [](int size, int dim, const py::object& x0, int order) {
                return NCMat::identity(size, dim, rat_from(x0), order);
            },
            py::arg("size"), py::arg("dim"), py::arg("x0"), py::arg("order"))
        .def_property_readonly("size", &NCMat::size)
        .def("at", [](const NCMat& a, int r, int c) { return a.at(r, c); })
        .def("minor_matrix", &NCMat::minor_matrix)
        .def("__matmul__", [](const NCMat& a, const NCMat& b) { return a * b; });

    m.def("quasidet", &quasidet, py::arg("a"), py::arg("row"), py::arg("col"));
    m.def("nc_invert_matrix", &nc_invert_matrix);
    m.def("sylvester_rhs", &sylvester_rhs);
    m.def("det_cofactor", &det_cofactor);

    py::class_<HankelSystem>(m, "HankelSystem")
        .def(py::init<RingElem, RingElem>(), py::arg("phi"), py::arg("psi"))
        .def_property_readonly("phi", &HankelSystem::phi)
        .def_property_readonly("psi", &HankelSystem::psi)
        .def("a", &HankelSystem::a, py::return_value_policy::copy)
        .def("b", &HankelSystem::b, py::return_value_policy::copy)
        .def("hankel",
             [](const HankelSystem& sys, int n, const std::string& which) {
                 return sys.hankel(n, which == "b" ? Seq::B : Seq::A);
             },
             py::arg("n"), py::arg("which") = "a")
        .def("theta", &HankelSystem::theta, py::return_value_policy::copy)
        .def("eta", &HankelSystem::eta, py::return_value_policy::copy)
        .def("theta0", &HankelSystem::theta0)
        .def("eta0", &HankelSystem::eta0)
        .def("almost_h", &HankelSystem::almost_h, py::return_value_policy::copy)
        .def("almost_h_direct", &HankelSystem::almost_h_direct);

    m.def("toda_residual_pos", &toda_residual_pos, py::arg("sys"), py::arg("n"));
    m.def("toda_residual_neg", &toda_residual_neg, py::arg("sys"), py::arg("m"));
    m.def("bilinear_residual", &bilinear_residual, py::arg("sys"), py::arg("n"));
    m.def("tau_det", &tau_det, py::arg("sys"), py::arg("k"));
    m.def(
        "identity_check",
        [](const HankelSystem& sys, const std::string& which, int n, int i, int j) {
            return result_to(identity_check(sys, identity_from(which), n, i, j));
        },
        py::arg("sys"), py::arg("which"), py::arg("n"), py::arg("i") = 0, py::arg("j") = 0);

    py::class_<SeedSolution>(m, "SeedSolution")
        .def(py::init([](const RingElem& phi, const RingElem& psi, const py::object& beta) {
                 return SeedSolution{phi, psi, rat_from(beta),
                                     std::min(phi.valid_order(), psi.valid_order())};
             }),
             py::arg("phi"), py::arg("psi"), py::arg("beta"))
        .def_readonly("phi", &SeedSolution::phi)
        .def_readonly("psi", &SeedSolution::psi)
        .def_property_readonly("beta", [](const SeedSolution& s) { return s.beta.str(); })
        .def_readonly("attained_order", &SeedSolution::attained_order);

    m.def(
        "seed_solve",
        [](const py::object& phi0, const py::object& phi1, const py::object& psi0,
           const py::object& psi1, const py::object& beta, int order, const py::object& x0) {
            return seed_solve(matrix_from(phi0), matrix_from(phi1), matrix_from(psi0),
                              matrix_from(psi1), rat_from(beta), order, rat_from(x0));
        },
        py::arg("phi0"), py::arg("phi1"), py::arg("psi0"), py::arg("psi1"), py::arg("beta"),
        py::arg("order"), py::arg("x0") = py::str("1"));
    m.def(
        "trivial_seed",
        [](int dim, const py::object& x0, int order) {
            return trivial_seed(dim, rat_from(x0), order);
        },
        py::arg("dim"), py::arg("x0"), py::arg("order"));
    m.def("constraint_residual", &constraint_residual);
    m.def(
        "ncp2_residual",
        [](const RingElem& u, const py::object& beta) {
            return ncp2_residual(u, rat_from(beta));
        },
        py::arg("u"), py::arg("beta"));
    m.def(
        "p2_commutative_residual",
        [](const RingElem& u, const py::object& beta) {
            return p2_commutative_residual(u, rat_from(beta));
        },
        py::arg("u"), py::arg("beta"));

    py::class_<PainleveTriple>(m, "PainleveTriple")
        .def(py::init([](const RingElem& u0, const RingElem& u1, const RingElem& u2,
                         const py::object& alpha0, const py::object& alpha1) {
                 return PainleveTriple{u0, u1, u2, rat_from(alpha0), rat_from(alpha1)};
             }),
             py::arg("u0"), py::arg("u1"), py::arg("u2"), py::arg("alpha0"), py::arg("alpha1"))
        .def_readonly("u0", &PainleveTriple::u0)
        .def_readonly("u1", &PainleveTriple::u1)
        .def_readonly("u2", &PainleveTriple::u2);

    m.def("p2_system_residual", [](const PainleveTriple& tr) {
        auto rs = p2_system_residual(tr);
        return py::make_tuple(rs[0], rs[1], rs[2]);
    });
    m.def("p2_reduction_residual", [](const PainleveTriple& tr) {
        auto [r, gamma] = p2_reduction_residual(tr);
        return py::make_tuple(r, gamma.str());
    });

    py::class_<HamiltonianState>(m, "HamiltonianState")
        .def_readonly("p", &HamiltonianState::p)
        .def_readonly("q", &HamiltonianState::q)
        .def_property_readonly("beta", [](const HamiltonianState& s) { return s.beta.str(); });

    m.def(
        "hamiltonian_integrate",
        [](const py::object& p0, const py::object& q0, const py::object& beta, int order,
           const py::object& x0) {
            return hamiltonian_integrate(matrix_from(p0), matrix_from(q0), rat_from(beta), order,
                                         rat_from(x0));
        },
        py::arg("p0"), py::arg("q0"), py::arg("beta"), py::arg("order"),
        py::arg("x0") = py::str("0"));
    m.def("triple_from_hamiltonian", &triple_from_hamiltonian);

    m.def(
        "lemma33_check",
        [](const HankelSystem& sys, const py::object& beta, const std::string& which, int n) {
            return result_to(chain_identity_check(sys, rat_from(beta), chain_from(which), n));
        },
        py::arg("sys"), py::arg("beta"), py::arg("which"), py::arg("n"));
    m.def(
        "theorem32_verify",
        [](const SeedSolution& seed, int n_max) {
            py::list out;
            for (const auto& r : verify_ladder(seed, n_max)) out.append(result_to(r));
            return out;
        },
        py::arg("seed"), py::arg("n_max"));
    m.def(
        "commutative_rational_solution",
        [](int big_n, const py::object& x0, int order) {
            return commutative_rational_solution(big_n, rat_from(x0), order);
        },
        py::arg("n"), py::arg("x0"), py::arg("order"));

    m.def(
        "run_config",
        [](const std::string& text) {
            Config cfg = parse_config_text(text);
            Report rep = run(cfg);
            return py::make_tuple(rep.to_json().dump(2) + "\n", rep.all_passed);
        },
        py::arg("config_text"), "Run the verification harness; returns (json, all_passed).");
    m.def("gen_config", &gen_config, py::arg("preset"));
}
