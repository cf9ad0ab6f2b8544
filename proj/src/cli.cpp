#include "sigcolor/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigcolor/bounds.hpp"
#include "sigcolor/constructive.hpp"
#include "sigcolor/errors.hpp"
#include "sigcolor/generators.hpp"
#include "sigcolor/json_io.hpp"
#include "sigcolor/sg_format.hpp"
#include "sigcolor/solver.hpp"

namespace sigcolor {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

void emit_graph(const Io& io, const SignedGraph& g, const std::string& path) {
  if (path.empty()) {
    io.out << format_sg(g);
  } else {
    write_sg_file(path, g);
  }
}

void emit_json(const Io& io, const json& j, const std::string& path) {
  io.out << j.dump(2) << '\n';
  if (!path.empty()) {
    std::ofstream file(path);
    if (!file) throw InvalidArgument("cannot write " + path);
    file << j.dump(2) << '\n';
  }
}

SwitchSet parse_csv_set(const std::string& csv) {
  std::vector<int> members;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      members.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad vertex in switch set: '" + item + "'");
    }
  }
  return SwitchSet(std::move(members));
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "p" || s == "pos") return Sign::positive;
  if (s == "-" || s == "n" || s == "neg") return Sign::negative;
  throw InvalidArgument("sign must be + or -, got '" + s + "'");
}

json violation_json(const VerifyResult& result) {
  if (result.ok()) return {{"ok", true}};
  const Violation& v = *result.violation;
  return {{"ok", false},
          {"violation",
           {{"edge_index", v.edge_index},
            {"edge", {v.edge.u, v.edge.v, std::string(1, sign_char(v.edge.sign))}},
            {"slack", v.slack.str()},
            {"reason", v.reason}}}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Io io{out, err};
  CLI::App app{"Exact circular coloring of signed graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Write a graph from a named family");
  gen->require_subcommand(1);
  std::string gen_out;
  int gen_index = 0;
  std::string gen_base;
  std::string gen_sign = "+";
  std::string gen_pattern;
  auto add_family = [&](const std::string& name, const std::string& help) {
    auto* sub = gen->add_subcommand(name, help);
    sub->add_option("-o,--output", gen_out, "Output .sg file (stdout if omitted)");
    return sub;
  };
  auto* gen_omega = add_family("omega", "Omega_I, 2I+1 vertices");
  gen_omega->add_option("I", gen_index)->required()->check(CLI::PositiveNumber);
  gen_omega->callback([&] { action = [&] { emit_graph(io, omega(gen_index), gen_out); return kOk; }; });
  auto* gen_gamma = add_family("gammastar", "Gamma*_I, 2I vertices");
  gen_gamma->add_option("I", gen_index)->required()->check(CLI::Range(2, 1 << 20));
  gen_gamma->callback([&] { action = [&] { emit_graph(io, gamma_star(gen_index), gen_out); return kOk; }; });
  auto* gen_sg = add_family("sgraph", "S(G) of a base graph");
  gen_sg->add_option("BASE", gen_base)->required();
  gen_sg->callback([&] { action = [&] { emit_graph(io, s_of(read_sg_file(gen_base)), gen_out); return kOk; }; });
  auto* gen_t2 = add_family("t2", "T_2 of a base graph");
  gen_t2->add_option("BASE", gen_base)->required();
  gen_t2->callback([&] { action = [&] { emit_graph(io, t2_of(read_sg_file(gen_base)), gen_out); return kOk; }; });
  auto* gen_kn = add_family("kn", "Complete graph K_N with one sign");
  gen_kn->add_option("N", gen_index)->required()->check(CLI::PositiveNumber);
  gen_kn->add_option("SIGN", gen_sign, "+ or - (default +)");
  gen_kn->callback([&] {
    action = [&] { emit_graph(io, complete(gen_index, parse_sign(gen_sign)), gen_out); return kOk; };
  });
  auto* gen_cycle = add_family("cycle", "Cycle C_N with a sign pattern such as +++-");
  gen_cycle->add_option("N", gen_index)->required()->check(CLI::PositiveNumber);
  gen_cycle->add_option("PATTERN", gen_pattern)->required();
  gen_cycle->callback([&] {
    action = [&] { emit_graph(io, cycle(gen_index, gen_pattern), gen_out); return kOk; };
  });

  // chic
  std::string graph_path;
  std::string emit_path;
  int jobs = 1;
  auto* chic = app.add_subcommand("chic", "Exact circular chromatic number with witness");
  chic->add_option("FILE", graph_path)->required();
  chic->add_option("--jobs", jobs, "Concurrent candidate tests")->check(CLI::PositiveNumber);
  chic->add_option("--emit", emit_path, "Also write the result JSON here");
  chic->callback([&] {
    action = [&] {
      const SignedGraph g = read_sg_file(graph_path);
      SolverOptions options;
      options.jobs = jobs;
      const ChiResult result = chi_c(g, options);
      std::optional<TightnessReport> tightness;
      if (result.witness) tightness = analyze_tightness(g, *result.witness);
      emit_json(io, chi_result_to_json(result, tightness), emit_path);
      return result.infinite ? kNegative : kOk;
    };
  });

  // color2deg
  auto* color2deg = app.add_subcommand("color2deg", "Constructive (4-eps)-coloring of a 2-degenerate graph");
  color2deg->add_option("FILE", graph_path)->required();
  color2deg->add_option("--emit", emit_path, "Also write the certificate JSON here");
  color2deg->callback([&] {
    action = [&] {
      const Certificate cert = color_2degenerate(read_sg_file(graph_path));
      emit_json(io, certificate_to_json(cert), emit_path);
      return kOk;
    };
  });

  // verify
  std::string coloring_path;
  auto* verify = app.add_subcommand("verify", "Check a coloring or certificate against a graph");
  verify->add_option("FILE", graph_path)->required();
  verify->add_option("COLORING", coloring_path)->required();
  verify->callback([&] {
    action = [&] {
      const SignedGraph g = read_sg_file(graph_path);
      const Certificate cert = certificate_from_json(read_json_file(coloring_path));
      const VerifyResult result = verify_certificate(g, cert);
      io.out << violation_json(result).dump(2) << '\n';
      return result.ok() ? kOk : kNegative;
    };
  });

  // transform
  int vertex = 0;
  std::vector<int> edge;
  auto* transform = app.add_subcommand("transform", "Apply F_u or F_uv");
  transform->require_subcommand(1);
  auto* transform_fu = transform->add_subcommand("fu", "Contract all edges at a vertex");
  transform_fu->add_option("FILE", graph_path)->required();
  transform_fu->add_option("--vertex", vertex)->required();
  transform_fu->add_option("-o,--output", gen_out);
  transform_fu->callback([&] {
    action = [&] {
      const Contraction c = f_u(read_sg_file(graph_path), vertex);
      if (c.has_positive_loop) io.err << "note: F_u has a positive loop\n";
      if (c.has_digon) io.err << "note: F_u has a digon\n";
      io.err << "contracted vertex: " << c.z << '\n';
      emit_graph(io, c.graph, gen_out);
      return kOk;
    };
  });
  auto* transform_fuv = transform->add_subcommand("fuv", "Expand a positive edge");
  transform_fuv->add_option("FILE", graph_path)->required();
  transform_fuv->add_option("--edge", edge)->required()->expected(2);
  transform_fuv->add_option("-o,--output", gen_out);
  transform_fuv->callback([&] {
    action = [&] { emit_graph(io, f_uv(read_sg_file(graph_path), edge[0], edge[1]), gen_out); return kOk; };
  });

  // lift
  auto* lift = app.add_subcommand("lift", "Lift a coloring through F_u or F_uv");
  lift->require_subcommand(1);
  auto* lift_fu_cmd = lift->add_subcommand("fu", "Coloring of F_u(G) -> certificate for G");
  lift_fu_cmd->add_option("FILE", graph_path)->required();
  lift_fu_cmd->add_option("--vertex", vertex)->required();
  lift_fu_cmd->add_option("--coloring", coloring_path)->required();
  lift_fu_cmd->add_option("--emit", emit_path);
  lift_fu_cmd->callback([&] {
    action = [&] {
      const SignedGraph g = read_sg_file(graph_path);
      const Certificate c = certificate_from_json(read_json_file(coloring_path));
      if (!c.switch_set.empty()) throw InvalidArgument("lift input must be a plain coloring");
      emit_json(io, certificate_to_json(lift_fu(g, vertex, c.coloring)), emit_path);
      return kOk;
    };
  });
  auto* lift_fuv_cmd = lift->add_subcommand("fuv", "Coloring of G -> coloring of F_uv(G)");
  lift_fuv_cmd->add_option("FILE", graph_path)->required();
  lift_fuv_cmd->add_option("--edge", edge)->required()->expected(2);
  lift_fuv_cmd->add_option("--coloring", coloring_path)->required();
  lift_fuv_cmd->add_option("--emit", emit_path);
  lift_fuv_cmd->callback([&] {
    action = [&] {
      const SignedGraph g = read_sg_file(graph_path);
      const Certificate c = certificate_from_json(read_json_file(coloring_path));
      if (!c.switch_set.empty()) throw InvalidArgument("lift input must be a plain coloring");
      const Coloring lifted = lift_fuv(g, edge[0], edge[1], c.coloring);
      emit_json(io, certificate_to_json({SwitchSet(), lifted}), emit_path);
      return kOk;
    };
  });

  // switch / equiv
  std::string set_csv;
  auto* switch_cmd = app.add_subcommand("switch", "Switch at a vertex set");
  switch_cmd->add_option("FILE", graph_path)->required();
  switch_cmd->add_option("--set", set_csv, "Comma-separated vertices")->required();
  switch_cmd->add_option("-o,--output", gen_out);
  switch_cmd->callback([&] {
    action = [&] {
      emit_graph(io, switching(read_sg_file(graph_path), parse_csv_set(set_csv)), gen_out);
      return kOk;
    };
  });
  std::string other_path;
  auto* equiv = app.add_subcommand("equiv", "Decide switching equivalence");
  equiv->add_option("A", graph_path)->required();
  equiv->add_option("B", other_path)->required();
  equiv->callback([&] {
    action = [&] {
      const auto witness = equivalence_witness(read_sg_file(graph_path), read_sg_file(other_path));
      json j{{"equivalent", witness.has_value()}};
      if (witness) j["switch_set"] = witness->members();
      io.out << j.dump(2) << '\n';
      return witness ? kOk : kNegative;
    };
  });

  // bound
  std::string cls_name;
  int n = 0;
  bool maxmin_check = false;
  auto* bound = app.add_subcommand("bound", "Upper bound on chi_c for a graph class");
  bound->add_option("--class", cls_name)->required()->check(CLI::IsMember({"2deg", "bipplanar"}));
  bound->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bound->add_flag("--maxmin-check", maxmin_check, "Cross-check against the max-min enumeration");
  bound->callback([&] {
    action = [&] {
      const bool two_deg = cls_name == "2deg";
      const Rational value = two_deg ? bound_2degenerate(n) : bound_bipartite_planar(n);
      json j{{"class", cls_name}, {"n", n}, {"bound", value.str()}};
      int code = kOk;
      if (maxmin_check) {
        const MaxMinResult mm =
            maxmin_verify(n, two_deg ? GraphClass::two_degenerate : GraphClass::bipartite_planar);
        j["maxmin"] = {{"q_star", mm.q_star}, {"value", mm.value.str()}, {"agrees", mm.value == value}};
        if (!two_deg) j["maxmin"]["k_star"] = mm.k_star;
        if (mm.value != value) code = kNegative;
      }
      io.out << j.dump(2) << '\n';
      return code;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const IndexError& e) {
    err << "index error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "rejected: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kNegative;
  }
}

}  // namespace sigcolor
