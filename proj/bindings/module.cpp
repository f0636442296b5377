// Python bindings for the main operations.
#include "scff/search.hpp"

#include "scff/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace scff;

namespace {

py::dict field_dict(const ShanksField& f) {
    py::dict d;
    d["q"] = f.q;
    d["A"] = f.A.str();
    d["cube_free"] = f.cube_free;
    d["I"] = f.index.str();
    d["deg_I"] = f.deg_index();
    d["genus"] = f.genus;
    d["signature"] = kSignature;
    d["disc_K_base"] = f.disc_K_base.str();
    if (f.regulator)
        d["R"] = *f.regulator;
    else {
        RegulatorBounds rb = regulator_bounds(f);
        d["R_candidates"] = rb.candidates;
    }
    d["frobenius_power"] = f.frobenius_power;
    d["canonical_A"] = f.canonical_A.str();
    return d;
}

} // namespace

PYBIND11_MODULE(_scff, m) {
    m.doc() = "Shanks simple cubic function fields over F_q(t): invariants, splitting, class numbers";

    py::register_exception<InconsistencyError>(m, "InconsistencyError");
    py::register_exception<ClassificationGapError>(m, "ClassificationGapError");

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& s, uint32_t q) { return Poly::parse(s, q); }), py::arg("text"),
             py::arg("q"))
        .def_property_readonly("q", &Poly::q)
        .def_property_readonly("degree", &Poly::degree)
        .def_property_readonly("coeffs", [](const Poly& p) { return p.coeffs(); })
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "Poly('" + p.str() + "', q=" + std::to_string(p.q()) + ")"; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; });

    m.def("invariants", [](uint32_t q, const std::string& A) { return field_dict(build_field(q, Poly::parse(A, q))); },
          py::arg("q"), py::arg("A"), "index, genus, regulator, discriminant of the Shanks field for A");

    m.def(
        "exact",
        [](uint32_t q, const std::string& A_str) {
            ShanksField f = build_field(q, Poly::parse(A_str, q));
            IrreducibleTable table(q);
            LPolynomial L = exact_l_polynomial(f, table, !f.cube_free);
            py::dict d;
            d["genus"] = L.g;
            d["coeffs"] = L.a;
            d["h"] = L.h;
            if (f.regulator) d["hprime"] = class_number_relation(L.h, *f.regulator);
            return d;
        },
        py::arg("q"), py::arg("A"), "exact L-polynomial, h = L(1), and h' = h/R");

    m.def(
        "classno",
        [](uint32_t q, const std::string& A_str, uint64_t trunc, int threads) {
            ShanksField f = build_field(q, Poly::parse(A_str, q));
            IrreducibleTable table(q);
            HApprox ha = truncated_estimate(f, table, trunc, threads);
            py::dict d;
            d["Eprime"] = static_cast<double>(ha.Eprime);
            d["psi"] = ha.psi;
            d["E"] = ha.E;
            d["L"] = ha.L;
            d["lambda"] = ha.lambda;
            d["hprime_estimate"] = ha.hprime_estimate;
            return d;
        },
        py::arg("q"), py::arg("A"), py::arg("trunc") = 40000, py::arg("threads") = 1,
        "truncated Euler product estimate with the psi error bound");

    m.def(
        "census",
        [](uint32_t q, const std::string& A_str, uint64_t trunc, int threads) {
            ShanksField f = build_field(q, Poly::parse(A_str, q));
            IrreducibleTable table(q);
            Census cs = splitting_census(f, table, Truncation::count(trunc), threads);
            return py::make_tuple(cs.split, cs.inert, cs.ramified);
        },
        py::arg("q"), py::arg("A"), py::arg("trunc") = 40000, py::arg("threads") = 1,
        "(split, inert, ramified) counts over the first trunc primes");

    m.def(
        "p_signature",
        [](uint32_t q, const std::string& A_str, const std::string& P_str) {
            ShanksField f = build_field(q, Poly::parse(A_str, q));
            return std::string(p_signature(f, Poly::parse(P_str, q)).name());
        },
        py::arg("q"), py::arg("A"), py::arg("P"));

    m.def("psi_bound", &psi_bound, py::arg("q"), py::arg("g"), py::arg("lam"));
    m.def("interval_radius", [](double e, double p) { return interval_radius(e, p); }, py::arg("Eprime"),
          py::arg("psi"));
    m.def("hasse_weil", [](uint32_t q, int g) {
        HWInterval hw = hasse_weil(q, g);
        return py::make_tuple(hw.lower, hw.upper);
    });
    m.def("max_measure", &max_measure, py::arg("hprime"), py::arg("q"), py::arg("g"), py::arg("R"));
    m.def("norm_form_decompose", [](int64_t h) -> py::object {
        auto r = norm_form_decompose(h);
        if (!r) return py::none();
        return py::make_tuple(r->first, r->second);
    });
    m.def("classify_parameters", &classify_parameters, py::arg("q"),
          "all (c,k,n) whose discriminant quartic is a perfect square");

    m.def(
        "survey",
        [](uint32_t q, int deg_a, int threads) {
            SearchPlan plan;
            plan.q = q;
            plan.deg_min = plan.deg_max = deg_a;
            plan.threads = threads;
            IrreducibleTable table(q);
            py::list rows;
            for (const SurveyRow& r : survey(plan, table)) {
                if (!r.error.empty()) continue;
                py::dict d;
                d["A"] = r.A.str();
                d["hprime"] = r.hprime;
                d["split"] = r.split;
                d["inert"] = r.inert;
                d["measure"] = r.measure;
                rows.append(d);
            }
            return rows;
        },
        py::arg("q"), py::arg("deg_a"), py::arg("threads") = 1);

    m.def(
        "search_class_number_one",
        [](uint32_t q, bool full_depth, int threads) {
            IrreducibleTable table(q);
            ClassNumberOneResult res = search_class_number_one(q, table, full_depth, threads);
            py::list out;
            for (const Poly& A : res.fields) out.append(A.str());
            return out;
        },
        py::arg("q"), py::arg("full_depth") = false, py::arg("threads") = 1);

    m.def(
        "large_index_scan",
        [](uint32_t q, int deg_a, int threads) {
            IrreducibleTable table(q);
            py::list out;
            for (const LargeIndexRow& r : large_index_scan(q, deg_a, table, threads)) {
                py::dict d;
                d["A"] = r.A.str();
                d["deg_I"] = r.deg_index;
                d["genus"] = r.g;
                d["h"] = r.h;
                py::list cands;
                for (const RegulatorCandidate& rc : r.candidates)
                    cands.append(py::make_tuple(rc.R, rc.hprime, rc.norm_form_ok));
                d["candidates"] = cands;
                if (!r.error.empty()) d["error"] = r.error;
                out.append(d);
            }
            return out;
        },
        py::arg("q"), py::arg("deg_a"), py::arg("threads") = 1);

    m.def("factor", [](const std::string& f_str, uint32_t q, uint64_t seed) {
        Factorization fac = factor(Poly::parse(f_str, q), seed);
        py::list fs;
        for (const auto& [p, mult] : fac.factors) fs.append(py::make_tuple(p.str(), mult));
        return py::make_tuple(fac.unit, fs);
    }, py::arg("f"), py::arg("q"), py::arg("seed") = kDefaultFactorSeed);
}
