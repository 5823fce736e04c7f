#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "lpa/io.hpp"

namespace lpa::cli {

namespace {

struct Config {
  std::string field = "q";
  std::size_t cap = default_enumeration_cap;
  bool pretty = false;
  std::string graph_path;
  std::string method = "direct";
  std::string h, s;
  std::vector<std::string> exprs;
  std::optional<int> max_len;
  std::string vertex;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError:
      return usage;
    case ErrorCode::DanglingEndpoint:
    case ErrorCode::DuplicateId:
    case ErrorCode::EmptyVertexSet:
    case ErrorCode::UnknownVertex:
    case ErrorCode::InvalidPath:
    case ErrorCode::InvalidElement:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownIdentifier:
    case ErrorCode::GhostOnGroup:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::NonPrimeModulus:
    case ErrorCode::IoError:
      return input;
    default:
      return computation;
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'", {{"path", path}});
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

ReductionOptions reduction_options(const Config& cfg) {
  ReductionOptions opts;
  if (cfg.max_len) {
    if (*cfg.max_len < 1) throw Error(ErrorCode::UsageError, "--max-len must be at least 1");
    opts.max_len = cfg.max_len;
  }
  return opts;
}

json survey_entry(const Graph& g, const SurveyEntry& e) {
  return {{"H", vertex_names(g, e.pair.hereditary)}, {"S", vertex_names(g, e.pair.breaking)}, {"report", to_json(e.report)}};
}

json with_algebra(const Config& cfg, const Graph& g, const std::function<json(const Algebra&)>& f) {
  Algebra alg(g, Field::parse(cfg.field));
  return f(alg);
}

json run_command(const std::string& name, const Config& cfg, const Graph& g) {
  if (name == "check-l") return to_json(check_condition_L(g));
  if (name == "check-k") {
    if (cfg.method == "direct") return to_json(check_condition_K_direct(g));
    auto out = to_json(check_condition_K_via_quotients(g, cfg.cap));
    json survey = json::array();
    for (const auto& e : quotient_survey(g, cfg.cap)) survey.push_back(survey_entry(g, e));
    out["survey"] = survey;
    return out;
  }
  if (name == "hsat") {
    json sets = json::array();
    for (const auto& h : enumerate_hereditary_saturated(g, cfg.cap)) sets.push_back(vertex_names(g, h));
    return {{"hereditary_saturated", sets}};
  }
  if (name == "quotient") {
    auto h = parse_vertex_list(g, cfg.h);
    auto s = parse_vertex_list(g, cfg.s);
    return quotient_to_json(quotient_graph(g, h, s));
  }
  return with_algebra(cfg, g, [&](const Algebra& alg) -> json {
    auto element = [&](std::size_t i) { return parse_element(alg, cfg.exprs.at(i)); };
    if (name == "eval") {
      auto a = element(0);
      json degrees = json::object();
      for (const auto& [d, part] : degree_decomposition(a)) degrees[std::to_string(d)] = render_element(alg, part);
      return {{"element", render_element(alg, a)}, {"terms", a.size()}, {"degrees", degrees}};
    }
    if (name == "equal") {
      auto a = element(0), b = element(1);
      return {{"equal", alg.equal(a, b)}, {"left", render_element(alg, a)}, {"right", render_element(alg, b)}};
    }
    if (name == "reduce") {
      auto a = element(0);
      auto cert = reduce_to_vertex(alg, a, reduction_options(cfg));
      auto out = to_json(alg, cert);
      out["element"] = render_element(alg, a);
      return out;
    }
    if (name == "zorn") return to_json(alg, zorn_witness(alg, element(0), reduction_options(cfg)));
    if (name == "bab") {
      auto a = element(0);
      auto b = bab_witness(alg, a, reduction_options(cfg));
      return {{"b", render_element(alg, b)}, {"bab", alg.equal(alg.multiply({&b, &a, &b}), b)}};
    }
    if (name == "ideal-idem") {
      std::vector<Element> gens;
      for (std::size_t i = 0; i < cfg.exprs.size(); ++i) gens.push_back(element(i));
      auto idem = idempotent_in_right_ideal(alg, gens, reduction_options(cfg));
      return {{"idempotent", render_element(alg, idem)}};
    }
    if (name == "laurent") {
      auto v = g.find_vertex(cfg.vertex);
      if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + cfg.vertex + "'", {{"vertex", cfg.vertex}});
      return to_json(corner_to_laurent(alg, *v, element(0)));
    }
    if (name == "verify") {
      auto out = to_json(verify_theorem1(alg, cfg.trials, cfg.seed, reduction_options(cfg)));
      out["field"] = alg.field().name();
      out["seed"] = cfg.seed;
      return out;
    }
    throw Error(ErrorCode::UsageError, "unknown command '" + name + "'");
  });
}

void emit(std::ostream& out, const json& j, bool pretty) { out << j.dump(pretty ? 2 : -1) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  Config cfg;
  CLI::App app{"Leavitt path algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", cfg.field, "coefficient field: q or fp:<p>");
  app.add_option("--cap", cfg.cap, "vertex cap for lattice enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--pretty", cfg.pretty, "indented output");

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->set_help_flag("--help", "print help");
    sub->add_option("graph", cfg.graph_path, "graph JSON file")->required();
    return sub;
  };
  add("check-l", "decide Condition (L)");
  add("check-k", "decide Condition (K)")
      ->add_option("--method", cfg.method)
      ->check(CLI::IsMember({"direct", "quotients"}));
  add("hsat", "list hereditary saturated sets");
  auto* quotient = add("quotient", "quotient graph by an admissible pair");
  quotient->add_option("--h", cfg.h, "comma-separated hereditary saturated set")->required();
  quotient->add_option("--s", cfg.s, "comma-separated breaking vertices");
  add("eval", "normal form of an expression")->add_option("expr", cfg.exprs)->required()->expected(1);
  add("equal", "compare two expressions")->add_option("exprs", cfg.exprs)->required()->expected(2);
  auto* reduce = add("reduce", "reduce to a vertex");
  reduce->add_option("expr", cfg.exprs)->required()->expected(1);
  reduce->add_option("--max-len", cfg.max_len, "search bound");
  for (const char* name : {"zorn", "bab"}) {
    auto* sub = add(name, name == std::string("zorn") ? "Zorn witness" : "element b with bab = b");
    sub->add_option("expr", cfg.exprs)->required()->expected(1);
    sub->add_option("--max-len", cfg.max_len, "search bound");
  }
  auto* ideal = add("ideal-idem", "idempotent in a right ideal");
  ideal->add_option("generators", cfg.exprs)->required()->expected(1, -1);
  ideal->add_option("--max-len", cfg.max_len, "search bound");
  auto* laurent = add("laurent", "corner element as a Laurent polynomial");
  laurent->add_option("--vertex", cfg.vertex)->required();
  laurent->add_option("expr", cfg.exprs)->required()->expected(1);
  auto* verify = add("verify", "randomized Zorn-witness harness");
  verify->add_option("--trials", cfg.trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--max-len", cfg.max_len, "search bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    emit(out, to_json(Error(ErrorCode::UsageError, e.what())), cfg.pretty);
    return usage;
  }

  try {
    Field::parse(cfg.field);
    auto g = load_graph(cfg.graph_path);
    emit(out, run_command(app.get_subcommands().front()->get_name(), cfg, g), cfg.pretty);
    return ok;
  } catch (const Error& e) {
    emit(out, to_json(e), cfg.pretty);
    return exit_code_for(e.code());
  }
}

}  // namespace lpa::cli
