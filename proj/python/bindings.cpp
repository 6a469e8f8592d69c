#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

#include "ospssv/rep.hpp"
#include "ospssv/ssv.hpp"

namespace py = pybind11;
using namespace ospssv;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long>());
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list l;
        for (const auto& e : j)
            l.append(json_to_py(e));
        return l;
    }
    case nlohmann::json::value_t::object: {
        py::dict d;
        for (auto it = j.begin(); it != j.end(); ++it)
            d[py::str(it.key())] = json_to_py(it.value());
        return d;
    }
    default: return py::none();
    }
}

py::object report_to_py(const VerificationReport& rep) { return json_to_py(rep.to_json()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Segal-Sugawara vectors for osp(M|2n) and their verification "
              "campaigns";

    m.def(
        "compute_phi",
        [](int M, int n, int mm, bool rational_form) {
            SSVector phi = rational_form ? phi_rational(Signature(M, n), mm)
                                         : phi_integral(Signature(M, n), mm);
            return json_to_py(phi.to_json());
        },
        py::arg("M"), py::arg("n"), py::arg("m"), py::arg("rational_form") = false,
        "Compute phi_m; raises ValueError on singular parameters when "
        "rational_form is set.");

    m.def(
        "verify_brauer",
        [](int m_max) {
            VerificationReport rep = identity_suite(m_max);
            rep.merge(jm_suite(m_max, std::max(1, 2 * m_max - 3)));
            rep.campaign = "brauer";
            rep.sort_checks();
            return report_to_py(rep);
        },
        py::arg("m_max") = 3);

    m.def(
        "verify_rep",
        [](int M, int n, int mm, std::uint64_t seed, int instances) {
            Signature sig(M, n);
            VerificationReport rep = rep_relations_check(sig, std::min(mm + 1, 4), seed);
            rep.merge(qxq_check(sig, std::min(mm, 3), seed));
            rep.merge(verify_rep_identities(sig, mm, seed, instances));
            rep.campaign = "rep";
            rep.sort_checks();
            return report_to_py(rep);
        },
        py::arg("M"), py::arg("n"), py::arg("m") = 2, py::arg("seed") = 1,
        py::arg("instances") = 10);

    m.def(
        "verify_annihilation",
        [](int M, int n, int mm, const std::vector<int>& modes) {
            return report_to_py(verify_annihilation(
                Signature(M, n), mm, std::set<int>(modes.begin(), modes.end())));
        },
        py::arg("M"), py::arg("n"), py::arg("m"), py::arg("modes") = std::vector<int>{0, 1});

    m.def(
        "verify_commutativity",
        [](int M, int n, const std::vector<int>& degrees) {
            return report_to_py(verify_commutativity(
                Signature(M, n), std::set<int>(degrees.begin(), degrees.end())));
        },
        py::arg("M"), py::arg("n"), py::arg("degrees") = std::vector<int>{2, 3});

    m.def(
        "verify_integral_rational",
        [](int M, int n, int mm) {
            return report_to_py(integral_rational_equivalence(Signature(M, n), mm));
        },
        py::arg("M"), py::arg("n"), py::arg("m"));

    m.def(
        "verify_psi",
        [](int M, int n, int mm, int k) {
            return report_to_py(psi_relation_check(Signature(M, n), mm, k < 0 ? mm : k));
        },
        py::arg("M"), py::arg("n"), py::arg("m") = 2, py::arg("k") = -1);

    m.def(
        "verify_centrality",
        [](int M, int n, int mm, const std::string& z) {
            return report_to_py(
                ev_centrality_check(Signature(M, n), mm, Rational::from_string(z)));
        },
        py::arg("M"), py::arg("n"), py::arg("m") = 2, py::arg("z") = "1");

    m.def(
        "superdimension", [](int M, int n) { return Signature(M, n).superdim(); },
        py::arg("M"), py::arg("n"));

    py::register_exception<PoleAtEvaluation>(m, "PoleAtEvaluationError",
                                             PyExc_ValueError);
}
