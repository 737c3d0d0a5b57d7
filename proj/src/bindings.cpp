#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polysum/arith.hpp"
#include "polysum/decompose.hpp"
#include "polysum/polygonal.hpp"
#include "polysum/practical.hpp"
#include "polysum/survey.hpp"

namespace py = pybind11;
using namespace polysum;

PYBIND11_MODULE(_polysum, m) {
  m.doc() = "Sums of practical and polygonal numbers: decomposition engines "
            "and exhaustive surveys";

  // ---- arith ----
  py::class_<Factorization>(m, "Factorization")
      .def_readonly("value", &Factorization::value)
      .def_readonly("factors", &Factorization::factors)
      .def("__repr__", [](const Factorization& f) {
        std::string s = "Factorization(" + std::to_string(f.value) + ", [";
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
          if (i) s += ", ";
          s += "(" + std::to_string(f.factors[i].first) + ", " +
               std::to_string(f.factors[i].second) + ")";
        }
        return s + "])";
      });
  m.def("factorize", &factorize, py::arg("n"));
  m.def("sigma", [](u64 n) { return sigma(factorize(n)); }, py::arg("n"),
        "Sum of divisors of n");
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("mod_inverse", &mod_inverse, py::arg("a"), py::arg("m"));
  m.def(
      "crt_combine",
      [](const std::vector<std::pair<u64, u64>>& congruences) {
        std::vector<Congruence> cs;
        for (auto [r, mm] : congruences) cs.push_back({r, mm});
        Congruence out = crt_combine(cs);
        return std::make_pair(out.residue, out.modulus);
      },
      py::arg("congruences"),
      "Combine (residue, modulus) pairs with coprime moduli");
  m.def(
      "two_adic_sqrt_8n1",
      [](u64 n) {
        TwoAdicRoot r = two_adic_sqrt_8n1(n);
        return std::make_pair(r.x, r.m);
      },
      py::arg("n"), "Smallest odd x in [1, 2^m - 1] with x^2 = 8n+1 (mod 2^{m+2})");
  m.def(
      "two_squares_mod_pk",
      [](u64 n, u64 p, u32 k) {
        TwoSquares t = two_squares_mod_pk(n, p, k);
        return std::make_pair(t.x, t.y);
      },
      py::arg("n"), py::arg("p"), py::arg("k"));

  // ---- practical ----
  py::class_<PracticalityReport>(m, "PracticalityReport")
      .def_readonly("n", &PracticalityReport::n)
      .def_readonly("practical", &PracticalityReport::practical)
      .def_readonly("failing_prime", &PracticalityReport::failing_prime)
      .def_readonly("sigma_prefixes", &PracticalityReport::sigma_prefixes)
      .def("__bool__", [](const PracticalityReport& r) { return r.practical; })
      .def("__repr__", [](const PracticalityReport& r) {
        std::string s = "PracticalityReport(" + std::to_string(r.n) + ", " +
                        (r.practical ? "practical" : "not practical");
        if (r.failing_prime)
          s += ", failing_prime=" + std::to_string(*r.failing_prime);
        return s + ")";
      });
  m.def("is_practical", &is_practical, py::arg("n"),
        "Stewart-Sierpinski characterization test");
  m.def("is_practical_by_definition", &is_practical_by_definition, py::arg("n"),
        "Subset-sum oracle over the divisors (n <= 100000)");
  py::class_<PracticalSieve>(m, "PracticalSieve")
      .def_readonly("bound", &PracticalSieve::bound)
      .def("test", &PracticalSieve::test, py::arg("i"))
      .def("count", &PracticalSieve::count)
      .def("save", &PracticalSieve::save, py::arg("path"))
      .def_static("load", &PracticalSieve::load, py::arg("path"));
  m.def("generate_practicals", &generate_practicals, py::arg("bound"));

  // ---- polygonal ----
  m.def("polygonal", &polygonal, py::arg("s"), py::arg("k"),
        "P_s(k) = (s-2) k(k-1)/2 + k");
  m.def("gonal_index", &gonal_index, py::arg("s"), py::arg("v"));
  m.def("gonal_values_upto", &gonal_values_upto, py::arg("s"), py::arg("bound"));
  m.def(
      "triangular_from_odd",
      [](u64 x) {
        TriangularValue t = triangular_from_odd(x);
        return std::make_pair(t.t, t.k);
      },
      py::arg("x"));

  // ---- decompose ----
  py::class_<TriDecomposition>(m, "TriDecomposition")
      .def_readonly("n", &TriDecomposition::n)
      .def_readonly("x", &TriDecomposition::x)
      .def_readonly("m", &TriDecomposition::m)
      .def_readonly("cofactor", &TriDecomposition::cofactor)
      .def_readonly("practical_part", &TriDecomposition::practical_part)
      .def_readonly("tri_index", &TriDecomposition::tri_index)
      .def("json", [](const TriDecomposition& d) { return witness_json(d); })
      .def("__repr__", [](const TriDecomposition& d) {
        return "TriDecomposition(" + std::to_string(d.n) + " = " +
               std::to_string(d.practical_part) + " + T_" +
               std::to_string(d.tri_index) + ")";
      });
  m.def("decompose_practical_triangular", &decompose_practical_triangular,
        py::arg("n"));
  m.def("verify_tri",
        [](const TriDecomposition& d) { return verify(d); }, py::arg("d"));

  py::class_<PairCongruence>(m, "PairCongruence")
      .def_readonly("s_gon", &PairCongruence::s_gon)
      .def_readonly("n_target", &PairCongruence::n_target)
      .def_readonly("x_res", &PairCongruence::x_res)
      .def_readonly("y_res", &PairCongruence::y_res)
      .def_readonly("modulus", &PairCongruence::modulus);
  m.def("pair_mod_p", &pair_mod_p, py::arg("s"), py::arg("n"), py::arg("p"));
  m.def("pair_mod_2", &pair_mod_2, py::arg("s"), py::arg("n"));
  m.def("special_prime", &special_prime, py::arg("s"));
  m.def("pair_mod_pk", &pair_mod_pk, py::arg("s"), py::arg("n"), py::arg("p"),
        py::arg("k"));
  m.def("constant_A", &constant_A, py::arg("s"));

  py::class_<Theorem2Params>(m, "Theorem2Params")
      .def_readonly("s_gon", &Theorem2Params::s_gon)
      .def_readonly("special_prime", &Theorem2Params::special_prime)
      .def_readonly("special_prime_index", &Theorem2Params::special_prime_index)
      .def_readonly("A", &Theorem2Params::A)
      .def_readonly("r_exact", &Theorem2Params::r_exact)
      .def_readonly("N_of_s", &Theorem2Params::N_of_s)
      .def_readonly("r_estimate_ln_pr", &Theorem2Params::r_estimate_ln_pr)
      .def_readonly("prime_cap", &Theorem2Params::prime_cap)
      .def_readonly("product_at_cap", &Theorem2Params::product_at_cap);
  m.def("theorem2_params", &theorem2_params, py::arg("s"), py::arg("prime_cap"));

  py::class_<PolyDecomposition>(m, "PolyDecomposition")
      .def_readonly("n", &PolyDecomposition::n)
      .def_readonly("s_gon", &PolyDecomposition::s_gon)
      .def_readonly("practical_part", &PolyDecomposition::practical_part)
      .def_readonly("x", &PolyDecomposition::x)
      .def_readonly("y", &PolyDecomposition::y);
  py::class_<Theorem2Witness>(m, "Theorem2Witness")
      .def_readonly("dec", &Theorem2Witness::dec)
      .def_readonly("r", &Theorem2Witness::r)
      .def_readonly("k", &Theorem2Witness::k)
      .def_readonly("n_k", &Theorem2Witness::n_k)
      .def_readonly("residues", &Theorem2Witness::residues)
      .def("json", [](const Theorem2Witness& w) { return witness_json(w); });
  m.def("theorem2_decompose", &theorem2_decompose, py::arg("s"), py::arg("n"),
        py::arg("r"), py::arg("max_k"));
  m.def("verify_poly",
        [](const PolyDecomposition& d) { return verify(d); }, py::arg("d"));

  // ---- survey ----
  py::class_<RepBitmap>(m, "RepBitmap")
      .def_readonly("s_gon", &RepBitmap::s_gon)
      .def_readonly("bound", &RepBitmap::bound)
      .def_readonly("allow_zero", &RepBitmap::allow_zero)
      .def_readonly("two_gonals", &RepBitmap::two_gonals)
      .def("test", &RepBitmap::test, py::arg("n"))
      .def(
          "clear_bits",
          [](const RepBitmap& rep, u64 max_count) {
            std::vector<u64> out;
            for (u64 n = 1; n < rep.bound && out.size() < max_count; ++n)
              if (!rep.bits.test(n)) out.push_back(n);
            return out;
          },
          py::arg("max_count") = 1000,
          "Non-representable n in ascending order, up to max_count");
  m.def("rep_one_gonal",
        [](u32 s, u64 bound, bool allow_zero) {
          return rep_one_gonal(s, bound, allow_zero);
        },
        py::arg("s"), py::arg("bound"), py::arg("allow_zero") = true);
  m.def("rep_two_gonal",
        [](u32 s, u64 bound, bool allow_zero) {
          return rep_two_gonal(s, bound, allow_zero);
        },
        py::arg("s"), py::arg("bound"), py::arg("allow_zero") = true);

  py::class_<SurveyRow>(m, "SurveyRow")
      .def_readonly("s_gon", &SurveyRow::s_gon)
      .def_readonly("bound", &SurveyRow::bound)
      .def_readonly("allow_zero", &SurveyRow::allow_zero)
      .def_readonly("count_non_representable", &SurveyRow::count_non_representable)
      .def_readonly("largest_non_representable", &SurveyRow::largest_non_representable)
      .def("csv", [](const SurveyRow& r) { return to_csv(r); })
      .def("__repr__", [](const SurveyRow& r) { return to_csv(r); });
  m.def("survey_row",
        [](u32 s, u64 bound, bool allow_zero) {
          return survey_row(s, bound, allow_zero);
        },
        py::arg("s"), py::arg("bound"), py::arg("allow_zero") = true);

  m.def("obstruction_residue", &obstruction_residue, py::arg("s"));
  m.def(
      "obstruction_census",
      [](u32 s, u64 bound) {
        ObstructionCensus c = obstruction_census(s, bound);
        return py::make_tuple(c.class_size, c.non_representable_in_class,
                              c.residue);
      },
      py::arg("s"), py::arg("bound"),
      "Returns (class_size, non_representable_in_class, residue)");
  m.def("e_lower_bound", [](u32 s) { return e_lower_bound(s); }, py::arg("s"));
}
