#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lensstring/bialgebra.hpp"
#include "lensstring/classify.hpp"
#include "lensstring/json_io.hpp"
#include "lensstring/torsion.hpp"

namespace py = pybind11;
using namespace lensstring;

namespace {

py::list tensor_terms(const EqTensor& t) {
    py::list out;
    for (const auto& [pq, c] : t.terms())
        out.append(py::make_tuple(pq.first, pq.second, c, t.term_modulus(pq.first)));
    return out;
}

py::list biform_terms(const BiForm& b) {
    py::list out;
    for (const auto& [ij, c] : b.terms())
        out.append(py::make_tuple(ij.first, ij.second, c));
    return out;
}

py::dict count_dict(const CountReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["k"] = r.k;
    d["pi_family_nonzero"] = r.pi_family_nonzero;
    d["k_family_nonzero"] = r.k_family_nonzero;
    d["generator_count"] = r.generator_count;
    d["component_union_count"] = r.component_union_count;
    d["m_sensitive"] = r.m_sensitive;
    return d;
}

LensMap make_map(int n, int k, int k2, int s, const std::string& expression) {
    return LensMap(LensPair(n, k), LensPair(n, k2), s, expression);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact string coproduct/cobracket computations on 3-dimensional lens spaces";

    m.def("coproduct",
          [](int n, int k, int l, i64 mm) {
              return biform_terms(coproduct_rho(LensPair(n, k), RhoClass{l, mm}));
          },
          py::arg("n"), py::arg("k"), py::arg("l"), py::arg("m") = 0,
          "Coproduct of the (l, m) class as a list of (i, j, c) terms, c mod n");

    m.def("coproduct_text",
          [](int n, int k, int l, i64 mm) {
              return coproduct_rho(LensPair(n, k), RhoClass{l, mm}).str();
          },
          py::arg("n"), py::arg("k"), py::arg("l"), py::arg("m") = 0);

    m.def("cobracket_pi",
          [](int n, int k, int l, i64 mm) {
              return tensor_terms(cobracket_pi_y(LensPair(n, k), l, mm).left);
          },
          py::arg("n"), py::arg("k"), py::arg("l"), py::arg("m") = 0,
          "Projected cobracket of pi_* y_l as (p, q, c, mod) terms");

    m.def("cobracket_k",
          [](int n, int k, int l) {
              return tensor_terms(cobracket_k_family(LensPair(n, k), l).left);
          },
          py::arg("n"), py::arg("k"), py::arg("l"),
          "Projected cobracket of the kernel-family generator");

    m.def("counts",
          [](int n, int k) { return count_dict(count_nonzero(LensPair(n, k))); },
          py::arg("n"), py::arg("k"),
          "Nonzero-component report of the cobracket");

    m.def("counts_coproduct",
          [](int n, int k) { return count_dict(count_nonzero_coproduct(LensPair(n, k))); },
          py::arg("n"), py::arg("k"));

    m.def("homology_groups",
          [](int n) {
              py::list out;
              for (const auto& g : loop_homology_groups(n)) out.append(g.str());
              return out;
          },
          py::arg("n"), "H_0..H_4 of any free-loop component, as text signatures");

    m.def("classify",
          [](int n, int k, int k2) {
              PairVerdict v = classify_pair(n, k, k2);
              py::dict d;
              d["homotopy_equivalent"] = v.homotopy_equivalent;
              d["homeomorphic"] = v.homeomorphic;
              if (v.witness) d["witness"] = *v.witness;
              if (v.sign) d["sign"] = *v.sign;
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("k2"));

    m.def("search",
          [](int max_n, int threads) {
              SearchResult res = search_smallest(max_n, Convention::generator_sum, threads);
              py::dict d;
              py::list rows;
              for (const auto& row : res.rows) {
                  py::dict r;
                  r["n"] = row.n;
                  r["k"] = row.k;
                  r["k2"] = row.k2;
                  r["coproduct_counts"] =
                      py::make_tuple(row.first.coproduct.generator_count,
                                     row.second.coproduct.generator_count);
                  r["cobracket_counts"] =
                      py::make_tuple(row.first.cobracket.generator_count,
                                     row.second.cobracket.generator_count);
                  r["pi_cobracket_counts"] = py::make_tuple(
                      row.first.cobracket.pi_family_nonzero.size(),
                      row.second.cobracket.pi_family_nonzero.size());
                  r["qualifies_generator_sum"] = row.qualifies_generator_sum;
                  r["qualifies_component_union"] = row.qualifies_component_union;
                  rows.append(r);
              }
              d["rows"] = rows;
              if (res.smallest_generator_sum)
                  d["smallest_generator_sum"] = *res.smallest_generator_sum;
              if (res.smallest_component_union)
                  d["smallest_component_union"] = *res.smallest_component_union;
              d["convention_report"] = res.convention_report;
              return d;
          },
          py::arg("max_n"), py::arg("threads") = 0);

    m.def("torsion_unit",
          [](int n, int k, int k2, int s, const std::string& expression) {
              TorsionUnit u = torsion_unit(make_map(n, k, k2, s, expression));
              py::dict d;
              d["unit"] = u.unit_integral.coeffs();
              d["unit_text"] = u.unit_integral.str();
              d["modulus"] = u.unit.modulus();
              d["inverse_text"] = invert_unit(u.unit).str();
              d["dlog_dt_text"] = dennis_dlog(u.unit).str(OneForm::Basis::dt);
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("k2"), py::arg("s"), py::arg("expression"));

    m.def("correction",
          [](int n, int k, int k2, int s, const std::string& expression, int l) {
              return tensor_terms(correction_term(make_map(n, k, k2, s, expression), l));
          },
          py::arg("n"), py::arg("k"), py::arg("k2"), py::arg("s"), py::arg("expression"),
          py::arg("l"));

    m.def("transform_check",
          [](int n, int k, int k2, int s, const std::string& expression, int l) {
              TransformReport rep = transform_check(make_map(n, k, k2, s, expression), l);
              py::dict d;
              d["l"] = rep.l;
              d["lhs"] = tensor_terms(rep.lhs);
              d["rhs"] = tensor_terms(rep.rhs);
              d["correction"] = tensor_terms(rep.correction);
              d["equal"] = rep.equal;
              d["discrepancy_in_k_span"] = rep.discrepancy_in_k_span;
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("k2"), py::arg("s"), py::arg("expression"),
          py::arg("l"));

    m.def("bialgebra_check",
          [](int n, int k, int x, int y) {
              BialgebraVerdict v = bialgebra_check(LensPair(n, k), EqClass::pi_y(x, n),
                                                   EqClass::pi_y(y, n));
              py::dict d;
              py::list rhs;
              for (const auto& [pq, c] : v.rhs.terms())
                  rhs.append(py::make_tuple(pq.first, pq.second, c));
              d["lhs"] = py::list();
              d["rhs"] = rhs;
              d["rhs_text"] = v.rhs.str();
              d["compatible"] = v.compatible;
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("x"), py::arg("y"));

    m.def("invert_unit",
          [](int n, i64 mod, const std::vector<i64>& coeffs) {
              return invert_unit(CyclicPoly::from_coeffs(n, mod, coeffs)).coeffs();
          },
          py::arg("n"), py::arg("mod"), py::arg("coeffs"),
          "Inverse in (Z/mod)[t]/(t^n - 1); raises ValueError on non-units");

    m.def("dennis_dlog",
          [](int n, i64 mod, const std::vector<i64>& coeffs) {
              return dennis_dlog(CyclicPoly::from_coeffs(n, mod, coeffs)).coeffs();
          },
          py::arg("n"), py::arg("mod"), py::arg("coeffs"),
          "u^{-1} du in the dt/t basis, as a coefficient vector");

    // translators run newest-first, so the base class goes in first
    py::register_exception<Error>(m, "LensstringError", PyExc_RuntimeError);
    py::register_exception<NotInvertibleError>(m, "NotInvertibleError", PyExc_ValueError);
    py::register_exception<InvalidTorsionExpression>(m, "InvalidTorsionExpression",
                                                     PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
}
