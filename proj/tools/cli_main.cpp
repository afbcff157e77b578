#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropamalg/io.hpp"

namespace {

using namespace tropamalg;

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

Matroid load_matroid(const std::string& path) {
  return matroid_from_json(load_json_file(path));
}

FlagFan load_flag_fan(const std::string& path) {
  return flag_fan_from_json(load_json_file(path));
}

std::variant<FlagFan, WeightedChainFan> load_fan(const std::string& path) {
  return fan_from_json(load_json_file(path));
}

LatticeMap load_lattice_map(const std::string& path) {
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  return lattice_map_from_json(load_json_file(path), [&](const std::string& ref) {
    return load_json_file((base / ref).string());
  });
}

AmalgamProblem load_problem(const std::string& p1, const std::string& p2,
                            const std::vector<std::string>& t_flag) {
  Matroid m1 = load_matroid(p1);
  Matroid m2 = load_matroid(p2);
  if (!t_flag.empty()) {
    std::vector<std::string> t = common_labels(m1.groundset(), m2.groundset());
    std::vector<std::string> given = t_flag;
    std::sort(given.begin(), given.end());
    if (given != t) {
      throw DomainError("RestrictionMismatch",
                        "--T must name exactly the common labels of the two groundsets",
                        {{"common", t}, {"given", given}});
    }
  }
  return AmalgamProblem::make(std::move(m1), std::move(m2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical fibre products, matroid amalgams and graph correspondences"};
  app.require_subcommand(1);

  std::string file_a, file_b;
  std::vector<std::string> t_labels, keep_labels, cut_vertices;
  bool with_oracle = false, direct = false;
  int jobs = 1;

  auto* validate = app.add_subcommand("validate", "Validate a matroid file");
  validate->add_option("matroid", file_a)->required();

  auto* bergman = app.add_subcommand("bergman", "Bergman fan of a matroid");
  bergman->add_option("matroid", file_a)->required();

  auto* divisor = app.add_subcommand("divisor", "Weil divisor of a cut function");
  divisor->add_option("fan", file_a)->required();
  divisor
      ->add_option("--cut", cut_vertices,
                   "member of the upward-closed vertex set, as comma-separated labels "
                   "(repeat per vertex)")
      ->required()
      ->take_all()
      ->delimiter('\0');

  auto* deg = app.add_subcommand("degree", "Degree of a fan");
  deg->add_option("fan", file_a)->required();

  auto* prod = app.add_subcommand("product", "Product of two fans");
  prod->add_option("fanA", file_a)->required();
  prod->add_option("fanB", file_b)->required();

  auto* push = app.add_subcommand("pushforward", "Project a fan onto chosen coordinates");
  push->add_option("fan", file_a)->required();
  push->add_option("--keep", keep_labels, "labels to keep")->required();

  auto* fibre = app.add_subcommand("fibre-product", "Tropical fibre product of two matroids");
  fibre->add_option("M1", file_a)->required();
  fibre->add_option("M2", file_b)->required();
  fibre->add_option("--T", t_labels, "expected common groundset (checked)");

  auto* amalgam = app.add_subcommand("amalgam", "Decide the proper amalgam");
  amalgam->add_option("M1", file_a)->required();
  amalgam->add_option("M2", file_b)->required();
  amalgam->add_flag("--oracle", with_oracle, "cross-check against the brute-force oracle");
  amalgam->add_option("--jobs", jobs, "worker threads for the oracle sweep")->check(CLI::PositiveNumber);

  auto* graph_cor = app.add_subcommand("graph-cor", "Graph correspondence of a lattice map");
  graph_cor->add_option("latticemap", file_a)->required();
  graph_cor->add_flag("--direct", direct, "use the combinatorial edge/weight description");

  auto* comp = app.add_subcommand("compose", "Compose a lattice map with a correspondence fan");
  comp->add_option("latticemap_f", file_a)->required();
  comp->add_option("fan_g", file_b)->required();

  auto* check = app.add_subcommand("check", "Balancing report of a fan");
  check->add_option("fan", file_a)->required();

  CLI11_PARSE(app, argc, argv);

  if (amalgam->count("--jobs") > 0 && !with_oracle) {
    std::cerr << "--jobs is only valid together with --oracle\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) {
      Matroid m = load_matroid(file_a);
      emit({{"ok", true}, {"rank", m.rank()}, {"flats", m.num_flats()}});
    } else if (app.got_subcommand(bergman)) {
      emit(flag_fan_to_json(bergman_fan(load_matroid(file_a))));
    } else if (app.got_subcommand(divisor)) {
      FlagFan fan = load_flag_fan(file_a);
      std::vector<SubsetBits> members;
      for (const auto& spec : cut_vertices) {
        std::vector<std::string> labels;
        std::string current;
        for (char c : spec + ",") {
          if (c == ',') {
            if (!current.empty()) labels.push_back(current);
            current.clear();
          } else {
            current += c;
          }
        }
        members.push_back(fan.groundset().subset(labels));
      }
      emit(flag_fan_to_json(weil_divisor(fan, CutFunction(fan, members))));
    } else if (app.got_subcommand(deg)) {
      Weight d = degree(load_flag_fan(file_a));
      if (d >= std::numeric_limits<long long>::min() && d <= std::numeric_limits<long long>::max()) {
        emit({{"degree", d.convert_to<long long>()}});
      } else {
        emit({{"degree", weight_to_string(d)}});
      }
    } else if (app.got_subcommand(prod)) {
      emit(flag_fan_to_json(product(load_flag_fan(file_a), load_flag_fan(file_b))));
    } else if (app.got_subcommand(push)) {
      auto fan = load_fan(file_a);
      WeightedChainFan out = std::holds_alternative<FlagFan>(fan)
                                 ? pushforward(std::get<FlagFan>(fan), keep_labels)
                                 : pushforward(std::get<WeightedChainFan>(fan), keep_labels);
      emit(chain_fan_to_json(out));
    } else if (app.got_subcommand(fibre)) {
      emit(flag_fan_to_json(fibre_product(load_problem(file_a, file_b, t_labels))));
    } else if (app.got_subcommand(amalgam)) {
      AmalgamProblem p = load_problem(file_a, file_b, {});
      AmalgamVerdict v = decide_amalgam(p);
      if (with_oracle) {
        std::optional<Matroid> m = oracle_proper_amalgam(p, jobs);
        bool agree = m.has_value() == v.matroid.has_value() &&
                     (!m || *m == *v.matroid);
        nlohmann::json out = verdict_to_json(v);
        out["oracle_agrees"] = agree;
        emit(out);
        return agree ? 0 : 1;
      }
      emit(verdict_to_json(v));
    } else if (app.got_subcommand(graph_cor)) {
      LatticeMap f = load_lattice_map(file_a);
      Correspondence c = direct ? graph_correspondence_direct(f) : graph_correspondence(f);
      emit(flag_fan_to_json(c.fan));
    } else if (app.got_subcommand(comp)) {
      LatticeMap f = load_lattice_map(file_a);
      emit(chain_fan_to_json(compose(f, load_flag_fan(file_b))));
    } else if (app.got_subcommand(check)) {
      auto fan = load_fan(file_a);
      if (std::holds_alternative<FlagFan>(fan)) {
        const FlagFan& x = std::get<FlagFan>(fan);
        emit(balance_report_to_json(check_balancing(x), x.groundset()));
      } else {
        const WeightedChainFan& x = std::get<WeightedChainFan>(fan);
        emit(balance_report_to_json(check_balancing(x), x.groundset()));
      }
    }
  } catch (const DomainError& e) {
    nlohmann::json err = {{"error", {{"kind", e.kind()}, {"message", e.what()}, {"witness", e.witness()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
