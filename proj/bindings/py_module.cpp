#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropamalg/io.hpp"

namespace py = pybind11;
using namespace tropamalg;

namespace {

Matroid matroid_from_str(const std::string& text) {
  return matroid_from_json(nlohmann::json::parse(text));
}

std::vector<SubsetBits> masks(const Matroid& m,
                              const std::vector<std::vector<std::string>>& subsets) {
  std::vector<SubsetBits> out;
  for (const auto& s : subsets) out.push_back(m.groundset().subset(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_tropamalg, m) {
  m.doc() = "Exact tropical fibre products, matroid amalgams and graph correspondences";

  py::register_exception<DomainError>(m, "DomainError");

  py::class_<Matroid>(m, "Matroid")
      .def_static("from_json", &matroid_from_str, py::arg("text"))
      .def_static(
          "from_flats",
          [](const std::vector<std::string>& groundset,
             const std::vector<std::vector<std::string>>& flats) {
            GroundSet gs(groundset);
            std::vector<SubsetBits> fl;
            for (const auto& f : flats) fl.push_back(gs.subset(f));
            return Matroid::from_flats(std::move(gs), std::move(fl));
          },
          py::arg("groundset"), py::arg("flats"))
      .def_static("uniform", &uniform_matroid, py::arg("rank"), py::arg("labels"))
      .def("to_json", [](const Matroid& m) { return matroid_to_json(m).dump(); })
      .def_property_readonly("rank", &Matroid::rank)
      .def_property_readonly("groundset", [](const Matroid& m) { return m.groundset().labels(); })
      .def_property_readonly("flats",
                             [](const Matroid& m) {
                               std::vector<std::vector<std::string>> out;
                               for (SubsetBits f : m.flats())
                                 out.push_back(m.groundset().labels_of(f));
                               return out;
                             })
      .def("closure",
           [](const Matroid& m, const std::vector<std::string>& x) {
             return m.groundset().labels_of(m.closure(m.groundset().subset(x)));
           })
      .def("rank_of",
           [](const Matroid& m, const std::vector<std::string>& x) {
             return m.rank_of(m.groundset().subset(x));
           })
      .def("is_simple", &Matroid::is_simple)
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; });

  py::class_<FlagFan>(m, "FlagFan")
      .def_static("from_json",
                  [](const std::string& text) {
                    return flag_fan_from_json(nlohmann::json::parse(text));
                  })
      .def("to_json", [](const FlagFan& f) { return flag_fan_to_json(f).dump(); })
      .def_property_readonly("dimension", &FlagFan::dimension)
      .def("is_zero", &FlagFan::is_zero);

  py::class_<WeightedChainFan>(m, "WeightedChainFan")
      .def_static("from_json",
                  [](const std::string& text) {
                    return chain_fan_from_json(nlohmann::json::parse(text));
                  })
      .def("to_json", [](const WeightedChainFan& f) { return chain_fan_to_json(f).dump(); })
      .def("is_zero", &WeightedChainFan::is_zero);

  py::class_<LatticeMap>(m, "LatticeMap")
      .def_static(
          "make",
          [](const Matroid& source, const Matroid& target,
             const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
                 assignments) {
            std::vector<std::pair<SubsetBits, SubsetBits>> pairs;
            for (const auto& [flat, image] : assignments) {
              pairs.emplace_back(source.groundset().subset(flat),
                                 target.groundset().subset(image));
            }
            return LatticeMap::make(source, target, pairs);
          },
          py::arg("source"), py::arg("target"), py::arg("assignments"))
      .def("is_weak", &is_weak_lattice_map)
      .def("is_covering", &is_covering_lattice_map);

  m.def("bergman_fan", &bergman_fan, py::arg("matroid"));
  m.def("product", &product, py::arg("x"), py::arg("y"));
  m.def(
      "weil_divisor",
      [](const FlagFan& fan, const std::vector<std::vector<std::string>>& cut) {
        std::vector<SubsetBits> members;
        for (const auto& s : cut) members.push_back(fan.groundset().subset(s));
        return weil_divisor(fan, CutFunction(fan, members));
      },
      py::arg("fan"), py::arg("cut"));
  m.def("degree",
        [](const FlagFan& fan) { return weight_to_string(degree(fan)); });
  m.def(
      "pushforward",
      [](const FlagFan& fan, const std::vector<std::string>& keep) {
        return pushforward(fan, keep);
      },
      py::arg("fan"), py::arg("keep"));
  m.def("check_balancing",
        [](const FlagFan& fan) {
          return balance_report_to_json(check_balancing(fan), fan.groundset()).dump();
        });
  m.def("fans_equal",
        [](const FlagFan& a, const FlagFan& b) { return fans_equal(a, b); });

  m.def(
      "fibre_product",
      [](const Matroid& m1, const Matroid& m2) {
        return fibre_product(AmalgamProblem::make(m1, m2));
      },
      py::arg("m1"), py::arg("m2"));
  m.def(
      "decide_amalgam",
      [](const Matroid& m1, const Matroid& m2) {
        return verdict_to_json(decide_amalgam(AmalgamProblem::make(m1, m2))).dump();
      },
      py::arg("m1"), py::arg("m2"));
  m.def(
      "oracle_proper_amalgam",
      [](const Matroid& m1, const Matroid& m2) -> py::object {
        auto out = oracle_proper_amalgam(AmalgamProblem::make(m1, m2));
        if (!out) return py::none();
        return py::cast(*out);
      },
      py::arg("m1"), py::arg("m2"));

  m.def("graph_correspondence",
        [](const LatticeMap& f) { return graph_correspondence(f).fan; });
  m.def("graph_correspondence_direct",
        [](const LatticeMap& f) { return graph_correspondence_direct(f).fan; });
  m.def("compose", &compose, py::arg("f"), py::arg("gamma_g"));

  m.def(
      "matroid_from_degree1_fan",
      [](const FlagFan& fan) { return matroid_from_degree1_fan(fan); },
      py::arg("fan"));
}
