// Python bindings for the main workbench operations. Exact scalars cross
// the boundary as fractions.Fraction; indices are 0-based like the C++ API
// (the JSON file formats stay 1-based).

#include "amalg/complexify.hpp"
#include "amalg/constructions.hpp"
#include "amalg/errors.hpp"
#include "amalg/representation.hpp"
#include "amalg/sparse_seq.hpp"
#include "amalg/specfile.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

// mpq_class <-> fractions.Fraction. Floats are rejected so exactness can
// never silently degrade.
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (src.is_none() || PyFloat_Check(src.ptr())) return false;
        object fraction = module_::import("fractions").attr("Fraction");
        if (!PyLong_Check(src.ptr()) && !isinstance(src, fraction) && !PyUnicode_Check(src.ptr())) {
            return false;
        }
        try {
            object as_fraction = fraction(reinterpret_borrow<object>(src));
            const std::string num = str(as_fraction.attr("numerator")).cast<std::string>();
            const std::string den = str(as_fraction.attr("denominator")).cast<std::string>();
            value = mpq_class(mpz_class(num), mpz_class(den));
            value.canonicalize();
            return true;
        } catch (const error_already_set&) {
            return false;
        }
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(
            PyLong_FromString(src.get_num().get_str().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(
            PyLong_FromString(src.get_den().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

using namespace amalg;

StructureTensor tensor_from_entries(int dim,
                                    const std::map<std::tuple<int, int, int>, Rational>& entries) {
    StructureTensor t(dim);
    for (const auto& [idx, value] : entries) {
        const auto [i, j, k] = idx;
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim) {
            throw BadParameter("tensor entry index out of range");
        }
        t.at(i, j, k) = value;
    }
    return t;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact workbench for finite-dimensional lattice algebras";

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<TheoremViolation>(m, "TheoremViolation");
    static py::exception<Error> base_error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError&) {
            throw; // handled by the registered exception above
        } catch (const TheoremViolation&) {
            throw;
        } catch (const Error& e) {
            base_error(e.what());
        }
    });

    py::class_<Element>(m, "Element")
        .def(py::init<RatVec>())
        .def_property_readonly("coords", [](const Element& x) { return x.coords; })
        .def_property_readonly("dim", &Element::dim)
        .def("is_zero", &Element::is_zero)
        .def("is_nonnegative", &Element::is_nonnegative)
        .def_static("zero", &Element::zero)
        .def_static("atom", &Element::atom, py::arg("dim"), py::arg("k"),
                    py::arg("value") = Rational(1))
        .def(py::self == py::self)
        .def("__add__", [](const Element& a, const Element& b) { return a + b; })
        .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
        .def("__neg__", [](const Element& a) { return -a; })
        .def("__repr__", [](const Element& x) {
            std::string s = "Element([";
            for (int k = 0; k < x.dim(); ++k) {
                if (k) s += ", ";
                s += format_rational(x[k]);
            }
            return s + "])";
        });

    py::enum_<NormKind>(m, "NormKind")
        .value("weighted_sup", NormKind::weighted_sup)
        .value("weighted_l1", NormKind::weighted_l1);

    py::class_<NormSpec>(m, "NormSpec")
        .def(py::init<NormKind, RatVec>())
        .def_readonly("kind", &NormSpec::kind)
        .def_readonly("weights", &NormSpec::weights)
        .def_property_readonly("dim", &NormSpec::dim)
        .def_static("sup", &NormSpec::sup)
        .def_static("l1", &NormSpec::l1)
        .def_static("sup_ones", &NormSpec::sup_ones)
        .def_static("l1_ones", &NormSpec::l1_ones)
        .def(py::self == py::self);

    py::class_<Functional>(m, "Functional")
        .def(py::init<RatVec>())
        .def_property_readonly("coords", [](const Functional& f) { return f.coords; })
        .def_property_readonly("dim", &Functional::dim)
        .def_static("atom", &Functional::atom, py::arg("dim"), py::arg("k"),
                    py::arg("value") = Rational(1))
        .def("__call__", &Functional::operator())
        .def("is_nonnegative", &Functional::is_nonnegative);

    py::class_<BandProjectionPair>(m, "BandProjectionPair")
        .def_readonly("support", &BandProjectionPair::support)
        .def("apply", &BandProjectionPair::apply)
        .def("apply_complement", &BandProjectionPair::apply_complement);

    py::class_<StructureTensor>(m, "StructureTensor")
        .def(py::init<int>())
        .def(py::init(&tensor_from_entries), py::arg("dim"), py::arg("entries"))
        .def_readonly("dim", &StructureTensor::dim)
        .def("get", [](const StructureTensor& t, int i, int j, int k) { return t.at(i, j, k); })
        .def("set",
             [](StructureTensor& t, int i, int j, int k, const Rational& v) { t.at(i, j, k) = v; })
        .def("is_nonnegative", &StructureTensor::is_nonnegative)
        .def_static("kronecker", &StructureTensor::kronecker)
        .def_static("diagonal", &StructureTensor::diagonal)
        .def(py::self == py::self);

    py::class_<AlgebraSpec>(m, "AlgebraSpec")
        .def(py::init([](NormSpec n, StructureTensor t, std::string label) {
                 AlgebraSpec s;
                 s.norm = std::move(n);
                 s.tensor = std::move(t);
                 s.label = std::move(label);
                 s.validate();
                 return s;
             }),
             py::arg("norm"), py::arg("tensor"), py::arg("label") = std::string())
        .def_readonly("norm", &AlgebraSpec::norm)
        .def_readonly("tensor", &AlgebraSpec::tensor)
        .def_readonly("label", &AlgebraSpec::label)
        .def_property_readonly("dim", &AlgebraSpec::dim);

    // lattice operations
    py::enum_<LatticeOp>(m, "LatticeOp")
        .value("sup", LatticeOp::sup)
        .value("inf", LatticeOp::inf)
        .value("abs", LatticeOp::abs)
        .value("pos", LatticeOp::pos)
        .value("neg", LatticeOp::neg);
    m.def("lattice_combine", &lattice_combine);
    m.def("sup", static_cast<Element (*)(const Element&, const Element&)>(&amalg::sup));
    m.def("inf", static_cast<Element (*)(const Element&, const Element&)>(&amalg::inf));
    m.def("abs", static_cast<Element (*)(const Element&)>(&amalg::abs));
    m.def("pos", static_cast<Element (*)(const Element&)>(&amalg::pos));
    m.def("neg", static_cast<Element (*)(const Element&)>(&amalg::neg));
    m.def("norm", &norm);
    m.def("dual_norm", &dual_norm);
    m.def("is_am_norm", [](const NormSpec& n) {
        const AmNormVerdict v = is_am_norm(n);
        return py::make_tuple(v.am, v.witness);
    });
    m.def("order_unit_of_ball", &order_unit_of_ball);
    m.def("verify_unit_duality", &verify_unit_duality);
    m.def("band_projection", &band_projection);

    // algebra operations
    py::class_<AxiomReport>(m, "AxiomReport")
        .def_readonly("positive_product", &AxiomReport::positive_product)
        .def_readonly("associative", &AxiomReport::associative)
        .def_readonly("submultiplicative", &AxiomReport::submultiplicative)
        .def_readonly("identity", &AxiomReport::identity)
        .def_readonly("identity_norm_one", &AxiomReport::identity_norm_one)
        .def_readonly("f_algebra", &AxiomReport::f_algebra)
        .def_readonly("almost_f_algebra", &AxiomReport::almost_f_algebra);
    m.def("multiply", &multiply);
    m.def("find_identity", &find_identity);
    m.def("check_axioms", &check_axioms);
    m.def("classify_f_algebra", [](const StructureTensor& t) {
        const FAlgebraClass c = classify_f_algebra(t);
        return py::make_tuple(c.f_algebra, c.almost_f_algebra);
    });
    m.def("arens_products", [](const StructureTensor& t) {
        const ArensProducts p = arens_products(t);
        return py::make_tuple(p.first, p.second, p.regular);
    });

    // representation operations
    py::class_<ConstraintSystem>(m, "ConstraintSystem")
        .def(py::init([](int ambient, const std::vector<std::tuple<int, int, Rational>>& cons) {
                 ConstraintSystem cs;
                 cs.ambient = ambient;
                 for (const auto& [t, s, lam] : cons) {
                     cs.constraints.push_back({t, s, lam});
                 }
                 cs.validate();
                 return cs;
             }),
             py::arg("ambient"), py::arg("constraints"))
        .def_readonly("ambient", &ConstraintSystem::ambient);

    py::class_<RepresentationResult>(m, "RepresentationResult")
        .def_readonly("scaling", &RepresentationResult::scaling)
        .def_readonly("transported", &RepresentationResult::transported)
        .def_readonly("is_pointwise", &RepresentationResult::is_pointwise);

    py::class_<QuotientResult>(m, "QuotientResult")
        .def_readonly("classes", &QuotientResult::classes)
        .def_readonly("zero_classes", &QuotientResult::zero_classes)
        .def_readonly("solution_dim", &QuotientResult::solution_dim)
        .def_readonly("embedded_basis", &QuotientResult::embedded_basis)
        .def("class_of", &QuotientResult::class_of);

    m.def("represent_am_unit", &represent_am_unit);
    m.def("martignon_products", &martignon_products);
    m.def("forced_zero_coordinates", &forced_zero_coordinates);
    m.def("solution_basis", &solution_basis);
    m.def("subalgebra_check", [](const ConstraintSystem& cs) {
        return subalgebra_check(cs).closed;
    });
    m.def("quotient_representation", &quotient_representation);
    m.def("classify_am_algebra", [](const AlgebraSpec& a) {
        const AmClassification c = classify_am_algebra(a);
        return py::make_tuple(c.ok, c.failed_condition, c.isometry_diag);
    });

    // finitely supported sequences
    py::class_<SparseSeq>(m, "SparseSeq")
        .def(py::init<std::map<long, Rational>>())
        .def_readonly("entries", &SparseSeq::entries)
        .def("is_zero", &SparseSeq::is_zero)
        .def("max_support_index", &SparseSeq::max_support_index)
        .def(py::self == py::self);
    py::class_<SparseFunctional>(m, "SparseFunctional")
        .def(py::init<std::map<long, Rational>>())
        .def_readonly("entries", &SparseFunctional::entries)
        .def("pairing", &SparseFunctional::pairing)
        .def("norm", &SparseFunctional::norm);
    py::enum_<SeqOp>(m, "SeqOp")
        .value("sup", SeqOp::sup)
        .value("inf", SeqOp::inf)
        .value("add", SeqOp::add)
        .value("mul", SeqOp::mul)
        .value("sub", SeqOp::sub);
    m.def("seq_ops", &seq_ops);
    m.def("seq_norm", &seq_norm);
    m.def("unit_prefix", [](long n) { return UnitPrefix{n}.realize(); });
    m.def("approx_order_unit_witness", &approx_order_unit_witness);
    m.def("approx_algebraic_identity_witness", &approx_algebraic_identity_witness);
    m.def("verify_f_algebra_sparse", &verify_f_algebra_sparse);

    // gallery and deformed products
    m.def("gallery", [](const std::string& name, int n, const RatVec& weights) {
        return gallery(GalleryName::parse(name, n, weights));
    }, py::arg("name"), py::arg("n") = 1, py::arg("weights") = RatVec{});
    m.def("gallery_names", [] { return GalleryName::names(); });

    py::class_<IdealAeReport>(m, "IdealAeReport")
        .def_readonly("support", &IdealAeReport::support)
        .def_readonly("restricted", &IdealAeReport::restricted)
        .def_readonly("norm_coincides", &IdealAeReport::norm_coincides)
        .def_readonly("spectral_within_tol", &IdealAeReport::spectral_within_tol)
        .def_readonly("spectral_max_err", &IdealAeReport::spectral_max_err)
        .def_readonly("ambient_submultiplicative", &IdealAeReport::ambient_submultiplicative);
    m.def("ideal_ae", &ideal_Ae, py::arg("spec"), py::arg("samples") = 100,
          py::arg("seed") = 20240901);

    py::class_<StarResult>(m, "StarResult")
        .def_readonly("tensor", &StarResult::tensor)
        .def_readonly("differs_at", &StarResult::differs_at);
    m.def("star_product", &star_product);
    py::class_<AstResult>(m, "AstResult")
        .def_readonly("tensor", &AstResult::tensor)
        .def_readonly("differs_at", &AstResult::differs_at)
        .def_readonly("witness_x", &AstResult::witness_x)
        .def_readonly("witness_square", &AstResult::witness_square);
    m.def("ast_product", &ast_product);

    // complexification
    py::class_<ComplexElement>(m, "ComplexElement")
        .def(py::init<Element, Element>())
        .def_readonly("re", &ComplexElement::re)
        .def_readonly("im", &ComplexElement::im);
    m.def("cx_conjugate", &cx_conjugate);
    m.def("cx_product", &cx_product);
    m.def("cx_modulus", &cx_modulus);
    m.def("cx_norm", &cx_norm);
    m.def("check_modulus_submultiplicative", &check_modulus_submultiplicative);
    m.def("check_cstar_identity", &check_cstar_identity);

    // file formats
    m.def("parse_spec_json", [](const std::string& text) { return parse_spec(Json::parse(text)); });
    m.def("emit_spec_json", [](const AlgebraSpec& spec) { return dump_json(emit_spec(spec)); });
}
