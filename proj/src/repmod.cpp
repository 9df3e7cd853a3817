#include "relpoly/repmod.hpp"

#include "relpoly/error.hpp"

namespace relpoly {

Rational LinComb::coefficient(const Pattern& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add(const Pattern& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

GeneratorId GeneratorId::from_matrix_unit(int k, int l, int n) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::InvalidArgument,
                 "E " + std::to_string(k) + " " + std::to_string(l) + ": " + why);
  };
  if (k < 1 || l < 1 || k > n || l > n) throw bad("indices must lie in 1.." + std::to_string(n));
  if (k == l) return {GeneratorKind::Cartan, k};
  if (l == k + 1) return {GeneratorKind::Raise, k};
  if (l == k - 1) return {GeneratorKind::Lower, l};
  throw bad("only E_kk, E_k,k+1 and E_k+1,k are supported");
}

std::string GeneratorId::to_string() const {
  switch (kind) {
    case GeneratorKind::Raise:
      return "E" + std::to_string(k) + "," + std::to_string(k + 1);
    case GeneratorKind::Lower:
      return "E" + std::to_string(k + 1) + "," + std::to_string(k);
    case GeneratorKind::Cartan:
      break;
  }
  return "E" + std::to_string(k) + "," + std::to_string(k);
}

namespace {

void check_index(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " index " + std::to_string(k) + " outside " + std::to_string(lo) + ".." +
                    std::to_string(hi));
}

// ∏_{j≠i} (m_ki - m_kj + j - i)
Rational denominator(const Pattern& m, int k, int i) {
  Rational d = 1;
  const Rational& mki = m.at({k, i}).rational();
  for (int j = 1; j <= k; ++j) {
    if (j == i) continue;
    Rational f = mki - m.at({k, j}).rational() + (j - i);
    if (f == 0)
      throw Error(ErrorCode::CriticalDenominator, "m_" + std::to_string(k) + std::to_string(i) + " - m_" +
                                                      std::to_string(k) + std::to_string(j) + " + " +
                                                      std::to_string(j - i) + " = 0");
    d *= f;
  }
  return d;
}

// ∏_{j=1}^{row} (m_ki - m_{row,j} + j - i)
Rational numerator(const Pattern& m, int k, int i, int row) {
  Rational p = 1;
  const Rational& mki = m.at({k, i}).rational();
  for (int j = 1; j <= row; ++j) p *= mki - m.at({row, j}).rational() + (j - i);
  return p;
}

Pattern shifted(const Pattern& m, VertexId v, long delta) {
  Pattern out = m;
  out.set(v, m.at(v) + Rational(delta));
  return out;
}

}  // namespace

LinComb act_raise(int k, const Pattern& m) {
  check_index(k, 1, m.n() - 1, "raising");
  LinComb out;
  for (int i = 1; i <= k; ++i) {
    Rational num = numerator(m, k, i, k + 1);
    Rational den = denominator(m, k, i);
    out.add(shifted(m, {k, i}, 1), -num / den);
  }
  return out;
}

LinComb act_lower(int k, const Pattern& m) {
  check_index(k, 1, m.n() - 1, "lowering");
  LinComb out;
  for (int i = 1; i <= k; ++i) {
    Rational num = numerator(m, k, i, k - 1);
    Rational den = denominator(m, k, i);
    out.add(shifted(m, {k, i}, -1), num / den);
  }
  return out;
}

LinComb act_cartan(int k, const Pattern& m) {
  check_index(k, 1, m.n(), "Cartan");
  Rational w = 0;
  for (int i = 1; i <= k; ++i) w += m.at({k, i}).rational();
  for (int i = 1; i < k; ++i) w -= m.at({k - 1, i}).rational();
  LinComb out;
  out.add(m, w);
  return out;
}

LinComb act(const GeneratorId& g, const Pattern& m) {
  switch (g.kind) {
    case GeneratorKind::Raise:
      return act_raise(g.k, m);
    case GeneratorKind::Lower:
      return act_lower(g.k, m);
    case GeneratorKind::Cartan:
      break;
  }
  return act_cartan(g.k, m);
}

bool in_basis(const RelationSet& c, const Pattern& l, const Pattern& m) {
  if (m.n() != l.n() || m.n() != c.n()) return false;
  const int n = m.n();
  for (int j = 1; j <= n; ++j)
    if (!(m.at({n, j}) == l.at({n, j}))) return false;
  for (VertexId v : all_vertices(n))
    if (!m.at(v).differs_by_integer(l.at(v))) return false;
  return satisfies(c, m);
}

ActResult act_in_basis(const RelationSet& c, const Pattern& l, const GeneratorId& g, const LinComb& v,
                       const ActOptions& options) {
  if (options.require_admissible) {
    auto adm = check_admissible(c);
    if (adm.status != AdmissibilityStatus::Admissible)
      throw Error(ErrorCode::NotAdmissible,
                  "relation set is " + std::string(to_string(adm.status)) +
                      (adm.reason.empty() ? "" : " (" + adm.reason + ")"));
  }
  ActResult result;
  for (const auto& [m, coeff] : v.terms()) {
    if (!in_basis(c, l, m)) throw Error(ErrorCode::NotInBasis, "input tableau is outside B_C(T(L))");
    const LinComb image = act(g, m);
    for (const auto& [target, c2] : image.terms()) {
      Rational value = coeff * c2;
      if (in_basis(c, l, target)) {
        result.value.add(target, value);
        continue;
      }
      if (options.leak == LeakPolicy::Strict)
        throw Error(ErrorCode::OutOfBasisLeak, "coefficient " + to_string(value) + " on a tableau outside the basis");
      result.dropped.emplace_back(target, value);
    }
  }
  return result;
}

namespace {

class CommutatorChecker {
 public:
  CommutatorChecker(const RelationSet& c, const Pattern& l) : c_(c), l_(l), n_(c.n()) {}

  LinComb apply(const GeneratorId& g, const LinComb& v) const {
    return act_in_basis(c_, l_, g, v, ActOptions{false, LeakPolicy::Truncate}).value;
  }

  LinComb bracket(const GeneratorId& a, const GeneratorId& b, const LinComb& v) const {
    return apply(a, apply(b, v)) - apply(b, apply(a, v));
  }

  void expect(CommutatorReport& report, std::string identity, const Pattern& m, const LinComb& lhs,
              const LinComb& rhs) const {
    ++report.checks;
    LinComb residual = lhs - rhs;
    if (!residual.empty()) report.failures.push_back({std::move(identity), m, std::move(residual)});
  }

  void run(CommutatorReport& report, const Pattern& m) const {
    const LinComb v = LinComb::basis(m);
    auto R = [](int k) { return GeneratorId{GeneratorKind::Raise, k}; };
    auto L = [](int k) { return GeneratorId{GeneratorKind::Lower, k}; };
    auto H = [](int k) { return GeneratorId{GeneratorKind::Cartan, k}; };
    auto name = [](const char* form, int a, int b) {
      return std::string(form) + " k=" + std::to_string(a) + " l=" + std::to_string(b);
    };
    const LinComb zero;

    for (int k = 1; k < n_; ++k)
      for (int l = 1; l < n_; ++l) {
        LinComb rhs = k == l ? apply(H(k), v) - apply(H(k + 1), v) : zero;
        expect(report, name("[R_k,L_l]", k, l), m, bracket(R(k), L(l), v), rhs);
      }
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k < n_; ++k) {
        Rational up = Rational((j == k) - (j == k + 1));
        expect(report, name("[H_j,R_k]", j, k), m, bracket(H(j), R(k), v), up * apply(R(k), v));
        expect(report, name("[H_j,L_k]", j, k), m, bracket(H(j), L(k), v), -up * apply(L(k), v));
      }
    for (int j = 1; j <= n_; ++j)
      for (int l = j + 1; l <= n_; ++l) expect(report, name("[H_j,H_l]", j, l), m, bracket(H(j), H(l), v), zero);
    for (int k = 1; k < n_; ++k)
      for (int l = 1; l < n_; ++l) {
        int gap = k > l ? k - l : l - k;
        if (gap >= 2) {
          expect(report, name("[R_k,R_l]", k, l), m, bracket(R(k), R(l), v), zero);
          expect(report, name("[L_k,L_l]", k, l), m, bracket(L(k), L(l), v), zero);
        } else if (gap == 1) {
          // ad(R_k)^2 R_l
          LinComb rr = apply(R(k), apply(R(k), apply(R(l), v))) -
                       Rational(2) * apply(R(k), apply(R(l), apply(R(k), v))) +
                       apply(R(l), apply(R(k), apply(R(k), v)));
          expect(report, name("[R_k,[R_k,R_l]]", k, l), m, rr, zero);
          LinComb ll = apply(L(k), apply(L(k), apply(L(l), v))) -
                       Rational(2) * apply(L(k), apply(L(l), apply(L(k), v))) +
                       apply(L(l), apply(L(k), apply(L(k), v)));
          expect(report, name("[L_k,[L_k,L_l]]", k, l), m, ll, zero);
        }
      }
  }

 private:
  const RelationSet& c_;
  const Pattern& l_;
  int n_;
};

}  // namespace

CommutatorReport check_commutators(const RelationSet& c, const Pattern& l, const std::vector<Pattern>& sample) {
  CommutatorChecker checker(c, l);
  CommutatorReport report;
  for (const Pattern& m : sample) {
    if (!in_basis(c, l, m)) throw Error(ErrorCode::NotInBasis, "sample tableau is outside B_C(T(L))");
    checker.run(report, m);
  }
  return report;
}

Integer weyl_dim(const WeightVector& lambda) {
  const auto& x = lambda.components;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_integer(x[i])) throw Error(ErrorCode::NotDominant, "λ_" + std::to_string(i + 1) + " is not an integer");
    if (i > 0 && x[i] > x[i - 1]) throw Error(ErrorCode::NotDominant, "λ is not non-increasing");
  }
  Rational dim = 1;
  const long n = static_cast<long>(x.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) dim *= (x[i] - x[j] + (j - i)) / Rational(j - i);
  return dim.get_num();
}

}  // namespace relpoly
