#include "relpoly/selftest.hpp"

#include <algorithm>
#include <random>

#include "relpoly/linalg.hpp"
#include "relpoly/polyhedra.hpp"
#include "relpoly/repmod.hpp"

namespace relpoly {

namespace {

RelationSet family_set(const std::string& family, int n) {
  if (family == "C1") return standard_set(n, 1, StandardVariant::Both);
  if (family == "C2") return standard_set(n, std::min(2, n), StandardVariant::Both);
  if (family == "C1+") return standard_set(n, 1, StandardVariant::Plus);
  if (family == "C2-") return standard_set(n, std::min(2, n), StandardVariant::Minus);
  return standard_set(n, n, StandardVariant::Empty);
}

std::string describe(const FaceDimInstance& inst) {
  std::string rows;
  for (int k = inst.x.n(); k >= 1; --k) {
    rows += k == inst.x.n() ? "" : " | ";
    for (std::size_t i = 0; i < inst.x.row(k).size(); ++i)
      rows += (i ? " " : "") + inst.x.row(k)[i].to_string();
  }
  return inst.family + " n=" + std::to_string(inst.c.n()) + " [" + rows + "]";
}

// Y vanishes on every constraint that is tight at X.
bool respects_tight(const ConstraintSystem& sys, const Pattern& x, const Pattern& y) {
  for (const auto& [src, dst] : sys.inequalities)
    if (x.at(src) == x.at(dst) && !(y.at(src) == y.at(dst))) return false;
  return true;
}

bool vanishes_on_top(const Pattern& y) {
  for (const Entry& e : y.row(y.n()))
    if (!(e == Entry(0))) return false;
  return true;
}

bool weightless(const Pattern& y) {
  for (int k = 1; k <= y.n(); ++k)
    if (weight(y, k) != 0) return false;
  return true;
}

std::vector<std::string> check_perturbation(const FaceDimInstance& inst) {
  std::vector<std::string> out;
  const auto basis = build_perturbation_basis(inst.c, inst.x);
  const auto sys = system_at(inst.c, inst.x, Slice::Full);
  const std::size_t size = triangle_size(inst.c.n());
  linalg::RationalMatrix m(basis.vectors.size(), size);
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    const Pattern& y = basis.vectors[i];
    for (std::size_t j = 0; j < size; ++j) m(i, j) = y.entries()[j].rational();
    if (!respects_tight(sys, inst.x, y)) out.push_back("Y" + std::to_string(i + 1) + " leaves the minimal face");
    if (!is_c_pattern(inst.c, add(inst.x, y)))
      out.push_back("X+Y" + std::to_string(i + 1) + " is not a C-pattern");
    if (i < basis.s && !vanishes_on_top(y)) out.push_back("Y" + std::to_string(i + 1) + " moves the top row");
    if (i < basis.r && !weightless(y)) out.push_back("Y" + std::to_string(i + 1) + " changes the weight");
  }
  if (basis.vectors.size() != basis.d || linalg::rref(m).pivots.size() != basis.d)
    out.push_back("perturbation family is not a basis of the face direction");
  return out;
}

}  // namespace

std::vector<FaceDimInstance> random_instances(std::uint64_t seed, std::size_t count, int width) {
  static const std::vector<std::string> families = {"C1", "C2", "C1+", "C2-", "empty"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_family(0, static_cast<int>(families.size()) - 1);
  std::uniform_int_distribution<int> pick_n(2, 5);
  std::uniform_int_distribution<int> pick_value(0, width);

  std::vector<FaceDimInstance> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::string& family = families[static_cast<std::size_t>(pick_family(rng))];
    const int n = pick_n(rng);
    RelationSet c = family_set(family, n);
    const auto vertices = all_vertices(n);
    std::vector<int> seedvals;
    for (std::size_t i = 0; i < vertices.size(); ++i) seedvals.push_back(pick_value(rng));
    // x_v = max over everything v dominates, so every relation holds.
    Pattern x(n);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      int value = seedvals[i];
      for (std::size_t j = 0; j < vertices.size(); ++j)
        if (c.reaches(vertices[i], vertices[j])) value = std::max(value, seedvals[j]);
      x.set(vertices[i], Entry(value));
    }
    out.push_back({family, std::move(c), std::move(x)});
  }
  return out;
}

std::vector<std::string> check_instance(const FaceDimInstance& inst, const KernelRoutine& kernel_routine) {
  std::vector<std::string> out;
  auto mismatch = [&](const std::string& what, std::size_t formula, std::size_t oracle) {
    if (formula != oracle)
      out.push_back(describe(inst) + ": " + what + " formula " + std::to_string(formula) + " vs oracle " +
                    std::to_string(oracle));
  };
  FaceDims dims = min_face_dims(inst.c, inst.x, kernel_routine);
  mismatch("d", dims.d, face_dim_oracle(system_at(inst.c, inst.x, Slice::Full), inst.x));
  mismatch("s", dims.s, face_dim_oracle(system_at(inst.c, inst.x, Slice::Top), inst.x));
  mismatch("r", dims.r, face_dim_oracle(system_at(inst.c, inst.x, Slice::TopWeight), inst.x));

  bool nonnegative = true;
  for (VertexId v : support(inst.c)) nonnegative = nonnegative && compare_values(inst.x.at(v), Entry(0)) >= 0;
  auto plus = nonnegative ? min_face_dims_plus(inst.c, inst.x)
                          : std::variant<PlusFaceDims, PlusInapplicable>(PlusInapplicable{"negative entry"});
  if (const auto* p = std::get_if<PlusFaceDims>(&plus)) {
    mismatch("s+", p->s, face_dim_oracle(system_at(inst.c, inst.x, Slice::Top, true), inst.x));
    mismatch("r+", p->r, face_dim_oracle(system_at(inst.c, inst.x, Slice::TopWeight, true), inst.x));
  }
  for (auto& msg : check_perturbation(inst)) out.push_back(describe(inst) + ": " + msg);
  return out;
}

namespace {

struct ModuleCase {
  std::string name;
  RelationSet c;
  Pattern l;
  std::vector<Pattern> sample;
};

std::vector<ModuleCase> module_cases() {
  std::vector<ModuleCase> cases;
  const std::vector<std::vector<long>> lambdas = {{1, 0}, {2, 0}, {2, 1, 0}, {1, 1, 0}, {2, 1, 1, 0}};
  for (const auto& lam : lambdas) {
    WeightVector w;
    for (long v : lam) w.components.emplace_back(v);
    const int n = static_cast<int>(lam.size());
    RelationSet c = standard_set(n, 1, StandardVariant::Both);
    Pattern l = constant_column_pattern(w);
    auto points = enumerate_integral(c, l).points;
    std::string name = "C1 lambda=(";
    for (std::size_t i = 0; i < lam.size(); ++i) name += (i ? "," : "") + std::to_string(lam[i]);
    cases.push_back({name + ")", std::move(c), std::move(l), std::move(points)});
  }
  // Generic rational base for the empty set; sample a box of integer shifts.
  const std::vector<std::vector<std::vector<Rational>>> bases = {
      {{Rational(1, 2), Rational(-1, 3)}, {Rational(1, 7)}},
      {{Rational(1, 2), Rational(1, 3), Rational(-1, 5)}, {Rational(2, 7), Rational(-3, 11)}, {Rational(5, 13)}},
  };
  for (const auto& rows : bases) {
    std::vector<std::vector<Entry>> entries;
    for (const auto& row : rows) entries.emplace_back(row.begin(), row.end());
    Pattern l = Pattern::from_rows(entries);
    const int n = l.n();
    std::vector<Pattern> sample;
    const std::size_t lower = triangle_size(n) - static_cast<std::size_t>(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < lower; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Pattern m = l;
      std::size_t rest = code;
      for (std::size_t i = 0; i < lower; ++i) {
        VertexId v = vertex_at(n, static_cast<std::size_t>(n) + i);
        m.set(v, l.at(v) + Rational(static_cast<long>(rest % 3) - 1));
        rest /= 3;
      }
      sample.push_back(std::move(m));
    }
    RelationSet c = standard_set(n, n, StandardVariant::Empty);
    cases.push_back({"empty n=" + std::to_string(n) + " generic", std::move(c), std::move(l), std::move(sample)});
  }
  return cases;
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  KernelRoutine routine = kernel;
  if (options.mutate_kernel) {
    routine = [](const TilingMatrix& a) {
      KernelBasis k = kernel(a);
      if (!k.vectors.empty()) k.vectors.pop_back();
      return k;
    };
  }
  for (const auto& inst : random_instances(options.seed, options.instances)) {
    ++report.facedim_instances;
    auto failures = check_instance(inst, routine);
    if (!failures.empty()) ++report.facedim_failures;
    for (auto& msg : failures) report.messages.push_back(std::move(msg));
  }
  for (const auto& mc : module_cases()) {
    ++report.commutator_modules;
    auto result = check_commutators(mc.c, mc.l, mc.sample);
    report.commutator_checks += result.checks;
    report.commutator_failures += result.failures.size();
    for (const auto& f : result.failures) report.messages.push_back(mc.name + ": " + f.identity + " fails");
  }
  return report;
}

}  // namespace relpoly
