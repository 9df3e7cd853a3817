#include "cli.hpp"

#include <CLI11.hpp>
#include <optional>

#include "relpoly/error.hpp"
#include "relpoly/io.hpp"
#include "relpoly/polyhedra.hpp"
#include "relpoly/repmod.hpp"
#include "relpoly/selftest.hpp"
#include "relpoly/tiling.hpp"

namespace relpoly::cli {

namespace {

using io::Json;

struct Settings {
  std::string relations;
  std::string pattern;
  std::string family;
  int n = 0;
  int k = 1;
  std::string format = "json";
  std::string selftest_format = "text";
  std::string lambda;
  std::string mu;
  bool plus = false;
  bool verify = false;
  std::optional<std::size_t> limit;
  std::string generator;
  std::string vector;
  std::string sample;
  bool strict = false;
  bool force = false;
  std::uint64_t seed = 0;
  std::size_t instances = 240;
  bool mutate_kernel = false;
};

void add_format(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void add_relation_source(CLI::App* cmd, Settings& s) {
  cmd->add_option("--relations", s.relations, "Relation set file (text or JSON)");
  cmd->add_option("--family", s.family, "Standard family")->check(CLI::IsMember({"C1", "Ck", "Ck+", "Ck-", "empty"}));
  cmd->add_option("--n", s.n, "Height of the triangle");
  cmd->add_option("--k", s.k, "Index k of the family");
}

RelationSet family_set(const Settings& s) {
  if (s.n < 1) throw Error(ErrorCode::InvalidArgument, "--family needs --n >= 1");
  if (s.family == "C1") return standard_set(s.n, 1, StandardVariant::Both);
  if (s.family == "Ck") return standard_set(s.n, s.k, StandardVariant::Both);
  if (s.family == "Ck+") return standard_set(s.n, s.k, StandardVariant::Plus);
  if (s.family == "Ck-") return standard_set(s.n, s.k, StandardVariant::Minus);
  return standard_set(s.n, s.n, StandardVariant::Empty);
}

RelationSet load_relations(const Settings& s) {
  if (!s.relations.empty() && !s.family.empty())
    throw Error(ErrorCode::InvalidArgument, "give either --relations or --family, not both");
  if (!s.relations.empty()) return io::parse_relations(io::read_file(s.relations));
  if (!s.family.empty()) return family_set(s);
  throw Error(ErrorCode::InvalidArgument, "a relation set is required (--relations or --family)");
}

Pattern load_pattern(const Settings& s, const RelationSet& c) {
  if (s.pattern.empty()) throw Error(ErrorCode::InvalidArgument, "--pattern is required");
  Pattern x = io::parse_pattern(io::read_file(s.pattern));
  if (x.n() != c.n())
    throw Error(ErrorCode::DimensionMismatch, "pattern has n=" + std::to_string(x.n()) +
                                                  " but the relation set has n=" + std::to_string(c.n()));
  return x;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

int cmd_gen(const Settings& s, std::ostream& out) {
  if (s.family.empty()) throw Error(ErrorCode::InvalidArgument, "gen needs --family");
  RelationSet c = family_set(s);
  if (s.format == "json")
    emit(out, io::relations_to_json(c));
  else
    out << io::format_relations(c);
  return 0;
}

int cmd_check(const Settings& s, std::ostream& out) {
  RelationSet c = load_relations(s);
  auto reduced = is_reduced(c);
  auto adm = check_admissible(c);
  bool top = is_top_connected(c);
  Json j{{"reduced", reduced.reduced}, {"admissible", std::string(to_string(adm.status))}, {"top_connected", top}};
  if (adm.witness) j["witness"] = {io::vertex_to_json(adm.witness->first), io::vertex_to_json(adm.witness->second)};
  if (adm.failed != AdmissibilityHypothesis::None) j["failed_hypothesis"] = std::string(to_string(adm.failed));
  if (!adm.reason.empty()) j["reason"] = adm.reason;
  if (!reduced.reduced) {
    Json violations = Json::array();
    for (const auto& v : reduced.violations) {
      Json w = Json::array();
      for (const auto& r : v.witnesses) w.push_back(to_string(r));
      violations.push_back({{"rule", std::string(to_string(v.rule))}, {"at", io::vertex_to_json(v.at)}, {"witnesses", w}});
    }
    j["violations"] = violations;
  }
  if (s.format == "json") {
    emit(out, j);
  } else {
    out << "reduced: " << (reduced.reduced ? "yes" : "no") << "\n";
    out << "admissible: " << to_string(adm.status) << "\n";
    out << "top_connected: " << (top ? "yes" : "no") << "\n";
    if (adm.witness) out << "witness: " << to_string(adm.witness->first) << " " << to_string(adm.witness->second) << "\n";
    if (!adm.reason.empty()) out << "reason: " << adm.reason << "\n";
  }
  return 0;
}

int cmd_tile(const Settings& s, std::ostream& out) {
  RelationSet c = load_relations(s);
  Pattern x = load_pattern(s, c);
  Tiling t = compute_tiling(c, x);
  TilingMatrix a = tiling_matrix(t);
  KernelBasis k = kernel(a);
  FaceDims dims = min_face_dims(c, x);
  if (s.format == "json") {
    emit(out, io::tiling_report(t, a, k, dims));
    return 0;
  }
  out << "tiles " << t.size() << " (Lambda1-free " << t.lambda1_free_count << ")\n";
  for (const auto& tile : t.tiles) {
    out << " ";
    for (VertexId v : tile) out << " " << to_string(v);
    out << (is_lambda_free(tile, c.n(), Lambda::Top) ? "  free" : "") << "\n";
  }
  out << "matrix " << a.rows << "x" << a.cols << (a.identity_fallback ? " (identity)" : "") << "\n";
  for (const auto& row : a.a) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "  ") << row[j];
    out << "\n";
  }
  out << "d " << dims.d << " s " << dims.s << " r " << dims.r << "\n";
  return 0;
}

int cmd_facedim(const Settings& s, std::ostream& out) {
  RelationSet c = load_relations(s);
  Pattern x = load_pattern(s, c);
  FaceDims dims = min_face_dims(c, x);
  Json j{{"d", dims.d}, {"s", dims.s}, {"r", dims.r}};
  // X outside P+ is reported, not fatal.
  std::optional<std::string> outside_plus;
  if (s.plus) {
    try {
      auto plus = min_face_dims_plus(c, x);
      if (const auto* p = std::get_if<PlusFaceDims>(&plus))
        j["plus"] = {{"s", p->s}, {"r", p->r}};
      else
        j["plus"] = {{"inapplicable", std::get<PlusInapplicable>(plus).reason}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NegativeEntryOnSupport) throw;
      outside_plus = e.what();
      j["plus"] = {{"inapplicable", *outside_plus}};
    }
  }
  if (s.verify) {
    Json oracle{{"d", face_dim_oracle(system_at(c, x, Slice::Full), x)},
                {"s", face_dim_oracle(system_at(c, x, Slice::Top), x)},
                {"r", face_dim_oracle(system_at(c, x, Slice::TopWeight), x)}};
    if (s.plus && !outside_plus) {
      oracle["plus"] = {{"s", face_dim_oracle(system_at(c, x, Slice::Top, true), x)},
                        {"r", face_dim_oracle(system_at(c, x, Slice::TopWeight, true), x)}};
    }
    j["oracle"] = oracle;
  }
  if (s.format == "json") {
    emit(out, j);
  } else {
    out << "d " << dims.d << "\ns " << dims.s << "\nr " << dims.r << "\n";
  }
  return 0;
}

int cmd_enumerate(const Settings& s, std::ostream& out) {
  RelationSet c = load_relations(s);
  std::optional<Pattern> base;
  if (!s.pattern.empty()) base = load_pattern(s, c);
  if (!s.lambda.empty()) {
    WeightVector lambda{io::parse_rational_list(s.lambda)};
    if (static_cast<int>(lambda.components.size()) != c.n())
      throw Error(ErrorCode::DimensionMismatch, "λ must have n=" + std::to_string(c.n()) + " components");
    if (!base) {
      base = constant_column_pattern(lambda);
    } else {
      for (int j = 1; j <= c.n(); ++j)
        if (!(base->at({c.n(), j}) == Entry(lambda.components[j - 1])))
          throw Error(ErrorCode::InvalidArgument, "--lambda differs from the top row of the base pattern");
    }
  }
  if (!base) throw Error(ErrorCode::InvalidArgument, "enumerate needs --pattern or --lambda");

  EnumerateOptions options{s.limit};
  auto bounds = is_polytope(c);
  Json coords = Json::array();
  for (VertexId v : bounds.unbounded_coordinates) coords.push_back(io::vertex_to_json(v));

  std::optional<IntegralPointSet> result;
  if (!s.mu.empty()) {
    result = enumerate_integral_weight(c, *base, WeightVector{io::parse_rational_list(s.mu)}, options);
  } else if (bounds.bounded) {
    result = enumerate_integral(c, *base, options);
  } else if (!satisfies(c, *base)) {
    throw Error(ErrorCode::NotSatisfying, "base pattern does not satisfy C");
  }

  Json points = Json::array();
  if (result)
    for (const auto& p : result->points) points.push_back(io::format_pattern_line(p));
  Json j{{"count", result ? Json(result->count) : Json(nullptr)},
         {"points", points},
         {"bounded", bounds.bounded},
         {"unbounded_coordinates", coords}};
  if (s.format == "json") {
    emit(out, j);
  } else {
    out << "count " << (result ? std::to_string(result->count) : std::string("unbounded")) << "\n";
    if (result)
      for (const auto& p : result->points) out << io::format_pattern_line(p) << "\n";
  }
  return 0;
}

GeneratorId parse_generator(const std::string& text, int n) {
  std::istringstream in(text);
  std::string e;
  int k = 0, l = 0;
  if (!(in >> e >> k >> l) || e != "E" || !(in >> std::ws).eof())
    throw Error(ErrorCode::ParseError, "generator must look like 'E k l'");
  return GeneratorId::from_matrix_unit(k, l, n);
}

int cmd_act(const Settings& s, std::ostream& out, std::ostream& err) {
  RelationSet c = load_relations(s);
  Pattern l = load_pattern(s, c);
  GeneratorId g = parse_generator(s.generator, c.n());
  LinComb v = s.vector.empty() ? LinComb::basis(l)
                               : io::lincomb_from_json(Json::parse(io::read_file(s.vector)), io::symbols_of(l));
  ActOptions options{!s.force, s.strict ? LeakPolicy::Strict : LeakPolicy::Truncate};
  ActResult result = act_in_basis(c, l, g, v, options);
  Json j = io::lincomb_to_json(result.value);
  if (!result.dropped.empty()) {
    Json dropped = Json::array();
    for (const auto& [m, coeff] : result.dropped)
      dropped.push_back({{"pattern", io::format_pattern_line(m)}, {"coeff", to_string(coeff)}});
    j["dropped"] = dropped;
    err << "note: " << result.dropped.size() << " term(s) outside the basis were set to zero\n";
  }
  if (s.format == "json") {
    emit(out, j);
  } else {
    for (const auto& [m, coeff] : result.value.terms()) out << to_string(coeff) << "  " << io::format_pattern_line(m) << "\n";
  }
  return 0;
}

int cmd_commutators(const Settings& s, std::ostream& out) {
  RelationSet c = load_relations(s);
  Pattern l = load_pattern(s, c);
  std::vector<Pattern> sample;
  if (!s.sample.empty()) {
    LinComb v = io::lincomb_from_json(Json::parse(io::read_file(s.sample)), io::symbols_of(l));
    for (const auto& [m, coeff] : v.terms()) sample.push_back(m);
  } else if (is_polytope(c).bounded) {
    sample = enumerate_integral(c, l).points;
  } else {
    sample.push_back(l);
  }
  auto report = check_commutators(c, l, sample);
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"identity", f.identity},
                        {"vector", io::format_pattern_line(f.vector)},
                        {"residual", io::lincomb_to_json(f.residual)}});
  if (s.format == "json") {
    emit(out, Json{{"vectors", sample.size()}, {"checks", report.checks}, {"failures", failures}});
  } else {
    out << "vectors " << sample.size() << "\nchecks " << report.checks << "\nfailures " << report.failures.size()
        << "\n";
    for (const auto& f : report.failures) out << "  " << f.identity << " at " << io::format_pattern_line(f.vector) << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_selftest(const Settings& s, std::ostream& out) {
  SelftestOptions options{s.seed, s.instances, s.mutate_kernel};
  auto report = run_selftest(options);
  if (s.selftest_format == "json") {
    Json messages = Json::array();
    for (const auto& m : report.messages) messages.push_back(m);
    emit(out, Json{{"seed", s.seed},
                   {"facedim_instances", report.facedim_instances},
                   {"facedim_failures", report.facedim_failures},
                   {"commutator_modules", report.commutator_modules},
                   {"commutator_checks", report.commutator_checks},
                   {"commutator_failures", report.commutator_failures},
                   {"messages", messages}});
  } else {
    out << "seed " << s.seed << "\n";
    out << "face dimensions: " << report.facedim_instances - report.facedim_failures << "/"
        << report.facedim_instances << " instances agree\n";
    out << "commutators: " << report.commutator_checks - report.commutator_failures << "/"
        << report.commutator_checks << " identities hold over " << report.commutator_modules << " modules\n";
    for (const auto& m : report.messages) out << "  " << m << "\n";
    out << (report.ok() ? "ok" : "FAILED") << "\n";
  }
  return report.ok() ? 0 : 1;
}

int exit_code(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::IoError ? 2 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relation sets, tilings and Gelfand-Tsetlin type polyhedra"};
  app.require_subcommand(1, 1);
  Settings s;

  auto* gen = app.add_subcommand("gen", "Write a standard relation set");
  add_relation_source(gen, s);
  add_format(gen, s.format);

  auto* check = app.add_subcommand("check", "Reducedness, admissibility and top-connectedness");
  add_relation_source(check, s);
  add_format(check, s.format);

  auto* tile = app.add_subcommand("tile", "Tiling, tiling matrix and its kernel");
  add_relation_source(tile, s);
  tile->add_option("--pattern", s.pattern, "Pattern file");
  add_format(tile, s.format);

  auto* facedim = app.add_subcommand("facedim", "Dimensions of the minimal faces at a pattern");
  add_relation_source(facedim, s);
  facedim->add_option("--pattern", s.pattern, "Pattern file");
  facedim->add_flag("--plus", s.plus, "Also report the nonnegative variants");
  facedim->add_flag("--verify", s.verify, "Also report the active-constraint oracle");
  add_format(facedim, s.format);

  auto* enumerate = app.add_subcommand("enumerate", "Integral points of P_C(λ) or P_C(λ, μ)");
  add_relation_source(enumerate, s);
  enumerate->add_option("--pattern", s.pattern, "Base pattern L");
  enumerate->add_option("--lambda", s.lambda, "Top row (CSV); base is the constant-column pattern if no --pattern");
  enumerate->add_option("--mu", s.mu, "Weight (CSV)");
  enumerate->add_option("--limit", s.limit, "Maximum number of points to print");
  add_format(enumerate, s.format);

  auto* actcmd = app.add_subcommand("act", "Apply E_kl to a combination of tableaux");
  add_relation_source(actcmd, s);
  actcmd->add_option("--pattern", s.pattern, "Base pattern L");
  actcmd->add_option("--generator", s.generator, "Generator 'E k l' with |k-l| <= 1")->required();
  actcmd->add_option("--vector", s.vector, "Combination JSON (default: T(L))");
  actcmd->add_flag("--strict", s.strict, "Fail on nonzero terms outside the basis");
  actcmd->add_flag("--force", s.force, "Skip the admissibility check");
  add_format(actcmd, s.format);

  auto* comm = app.add_subcommand("commutators", "Check the gl_n bracket relations");
  add_relation_source(comm, s);
  comm->add_option("--pattern", s.pattern, "Base pattern L");
  comm->add_option("--sample", s.sample, "Sample tableaux as combination JSON (default: whole basis)");
  add_format(comm, s.format);

  auto* self = app.add_subcommand("selftest", "Seeded randomized consistency checks");
  self->add_option("--seed", s.seed, "Random seed");
  self->add_option("--instances", s.instances, "Number of random face-dimension instances");
  self->add_flag("--mutate-kernel", s.mutate_kernel, "Corrupt the kernel routine (negative control)");
  add_format(self, s.selftest_format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  try {
    if (gen->parsed()) return cmd_gen(s, out);
    if (check->parsed()) return cmd_check(s, out);
    if (tile->parsed()) return cmd_tile(s, out);
    if (facedim->parsed()) return cmd_facedim(s, out);
    if (enumerate->parsed()) return cmd_enumerate(s, out);
    if (actcmd->parsed()) return cmd_act(s, out, err);
    if (comm->parsed()) return cmd_commutators(s, out);
    return cmd_selftest(s, out);
  } catch (const Error& e) {
    emit(out, Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}});
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    emit(out, Json{{"error", {{"code", "ParseError"}, {"message", e.what()}}}});
    return 2;
  }
}

}  // namespace relpoly::cli
