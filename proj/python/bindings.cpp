#include <string>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eword/enumeration.hpp"
#include "eword/farey.hpp"
#include "eword/stepper.hpp"
#include "eword/verify.hpp"
#include "eword/word.hpp"

namespace py = pybind11;

namespace {

eword::ExtRational rational(const std::string& text) { return eword::ExtRational::parse(text); }

std::string e_word(const std::string& x, const std::string& mode, const std::string& alphabet) {
    return eword::e_word(rational(x), eword::parse_mode(mode)).format(eword::parse_alphabet(alphabet));
}

std::pair<std::string, std::string> parents(const std::string& x) {
    auto [lo, hi] = eword::parents(rational(x));
    return {lo.to_string(), hi.to_string()};
}

std::string continued_fraction(const std::string& x) {
    return eword::to_continued_fraction(rational(x)).to_string();
}

std::string farey_level(const std::string& x) { return eword::farey_level(rational(x)).str(); }

std::string trace_json(const std::string& seq, const std::string& alphabet) {
    auto trace = eword::run_esequence(eword::ESequence::parse(seq));
    return eword::to_json(trace, eword::parse_alphabet(alphabet)).dump();
}

std::string verify_json(int bound) { return eword::verify::to_json(eword::verify::sweep(bound)).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "E-words: palindromic primitive words in the free group on {a, b}";

    py::register_exception<eword::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::overflow_error& e) {
            PyErr_SetString(PyExc_OverflowError, e.what());
        }
    });

    m.def("e_word", &e_word, py::arg("x"), py::arg("mode") = "orphan", py::arg("alphabet") = "ab");
    m.def("parents", &parents, py::arg("x"));
    m.def("continued_fraction", &continued_fraction, py::arg("x"));
    m.def("farey_level", &farey_level, py::arg("x"));
    m.def("is_palindrome", [](const std::string& w) { return eword::is_palindrome(eword::FreeWord::parse(w)); },
          py::arg("word"));
    m.def("reduce", [](const std::string& w) { return eword::FreeWord::parse(w).format(); }, py::arg("word"));
    m.def("_trace_json", &trace_json, py::arg("sequence"), py::arg("alphabet") = "ab");
    m.def("_verify_json", &verify_json, py::arg("bound"), py::call_guard<py::gil_scoped_release>());
    m.def("count", [](int n) { return eword::verify::count_ewords_of_length(n); }, py::arg("n"));
}
