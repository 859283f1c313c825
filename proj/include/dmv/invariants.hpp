#ifndef DMV_INVARIANTS_HPP
#define DMV_INVARIANTS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmv/canonical.hpp"
#include "dmv/exact_linalg.hpp"
#include "dmv/hopf.hpp"
#include "dmv/moves.hpp"
#include "dmv/rational.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

/// Specialized values of the indeterminates x, y, z, w of the Tutte
/// relations.
struct TutteParams {
  Rational x{1};
  Rational y{1};
  Rational z{1};
  Rational w{1};
};

enum class Pivot { Lowest, Highest };

struct TutteEvaluation {
  Rational value;
  /// Present when an audit was requested and the ground set is small
  /// enough: whether every pivot order gives the same value.
  std::optional<bool> orders_agree;
};

inline constexpr int kTutteAuditLimit = 6;

namespace detail {

// Recursion along a fixed pivot order. `labels[i]` is the original label of
// current element i; `rank_of[label]` its position in the order.
inline Rational tutte_along(const SetSystem& s, const std::vector<int>& labels, const std::vector<int>& rank_of,
                            const TutteParams& p) {
  if (s.size() == 0) return Rational(1);
  int e = 0;
  for (int i = 1; i < s.size(); ++i) {
    if (rank_of[labels[i]] < rank_of[labels[e]]) e = i;
  }
  std::vector<int> rest = labels;
  rest.erase(rest.begin() + e);
  switch (element_role(s, e)) {
    case ElementRole::Loop: return p.z * tutte_along(delete_element(s, e), rest, rank_of, p);
    case ElementRole::Coloop: return p.w * tutte_along(contract_element(s, e), rest, rank_of, p);
    case ElementRole::Ordinary: break;
  }
  return p.x * tutte_along(delete_element(s, e), rest, rank_of, p) +
         p.y * tutte_along(contract_element(s, e), rest, rank_of, p);
}

inline Rational tutte_with_order(const SetSystem& s, const std::vector<int>& order, const TutteParams& p) {
  std::vector<int> labels(s.size());
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<int> rank_of(s.size());
  for (int i = 0; i < s.size(); ++i) rank_of[order[i]] = i;
  return tutte_along(s, labels, rank_of, p);
}

}  // namespace detail

/// Free deletion-contraction evaluation:
///   f = x f(D\e) + y f(D/e) for ordinary e, z f(D\e) for a loop,
///   w f(D/e) for a coloop, f(unit) = 1,
/// always pivoting on the lowest (or highest) remaining element.
[[nodiscard]] inline TutteEvaluation tutte_eval_ordered(const SetSystem& s, const TutteParams& p,
                                                        Pivot pivot = Pivot::Lowest, bool audit = false) {
  std::vector<int> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  if (pivot == Pivot::Highest) std::reverse(order.begin(), order.end());
  TutteEvaluation out{detail::tutte_with_order(s, order, p), std::nullopt};
  if (audit && s.size() <= kTutteAuditLimit) {
    std::sort(order.begin(), order.end());
    bool agree = true;
    do {
      agree = detail::tutte_with_order(s, order, p) == out.value;
    } while (agree && std::next_permutation(order.begin(), order.end()));
    out.orders_agree = agree;
  }
  return out;
}

/// Values of a function on iso-classes of one flavor.
struct Functional {
  Flavor flavor = Flavor::B;
  std::map<CanonicalCode, Rational> values;
  bool multiplicative = false;

  [[nodiscard]] const Rational& at(const CanonicalCode& c) const {
    auto it = values.find(c);
    if (it == values.end()) {
      throw Error(ErrorKind::MissingValue, "functional has no value on a class of degree " + std::to_string(c.n));
    }
    return it->second;
  }
  [[nodiscard]] const Rational& at(const SetSystem& s) const { return at(canonical_form(s)); }
};

/// Classes of `flavor` in degrees 0..n_max, degree-major.
[[nodiscard]] inline std::vector<CanonicalCode> classes_up_to(Flavor flavor, int n_max) {
  std::vector<CanonicalCode> out;
  for (int n = 0; n <= n_max; ++n) {
    const GradedBasis b = enumerate_basis(flavor, n);
    out.insert(out.end(), b.codes.begin(), b.codes.end());
  }
  return out;
}

/// Affine space of functionals on binary classes of degree <= n_max that
/// satisfy every instance of the Tutte relations and f(unit) = 1.
struct TutteSolution {
  std::vector<CanonicalCode> classes;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;

  [[nodiscard]] std::size_t dimension() const noexcept { return kernel.size(); }

  /// particular + sum_i coefficients[i] * kernel[i]
  [[nodiscard]] Functional functional(const std::vector<Rational>& coefficients = {}) const {
    Functional f{Flavor::B, {}, false};
    for (std::size_t i = 0; i < classes.size(); ++i) {
      Rational v = particular[i];
      for (std::size_t k = 0; k < coefficients.size() && k < kernel.size(); ++k) v += coefficients[k] * kernel[k][i];
      f.values.emplace(classes[i], v);
    }
    return f;
  }
};

[[nodiscard]] inline std::optional<TutteSolution> tutte_solve(int n_max, const TutteParams& p) {
  check_degree(n_max);
  TutteSolution sol;
  sol.classes = classes_up_to(Flavor::B, n_max);
  std::map<CanonicalCode, std::size_t> index;
  for (std::size_t i = 0; i < sol.classes.size(); ++i) index.emplace(sol.classes[i], i);
  auto idx = [&](const SetSystem& s) {
    auto it = index.find(canonical_form(s));
    if (it == index.end()) throw Error(ErrorKind::NotBinary, "a minor left the binary classes");
    return it->second;
  };

  const std::size_t unknowns = sol.classes.size();
  RationalMatrix a(0, unknowns);
  std::vector<Rational> rhs;
  {
    std::vector<Rational> row(unknowns, Rational(0));
    row[idx(unit_system())] = 1;
    a.append_row(row);
    rhs.emplace_back(1);
  }
  for (const auto& code : sol.classes) {
    const SetSystem s = code.to_system();
    for (int e = 0; e < s.size(); ++e) {
      std::vector<Rational> row(unknowns, Rational(0));
      row[idx(s)] += 1;
      switch (element_role(s, e)) {
        case ElementRole::Loop: row[idx(delete_element(s, e))] -= p.z; break;
        case ElementRole::Coloop: row[idx(contract_element(s, e))] -= p.w; break;
        case ElementRole::Ordinary:
          row[idx(delete_element(s, e))] -= p.x;
          row[idx(contract_element(s, e))] -= p.y;
          break;
      }
      a.append_row(row);
      rhs.emplace_back(0);
    }
  }
  auto solved = solve_affine(a, rhs);
  if (!solved) return std::nullopt;
  sol.particular = std::move(solved->particular);
  sol.kernel = std::move(solved->kernel);
  return sol;
}

struct FourTermFailure {
  CanonicalCode system;
  int a;
  int b;
  Rational value;
};

struct FourTermCheck {
  bool holds = true;
  std::optional<FourTermFailure> counterexample;
};

/// Evaluates f(D) - f(D') - f(D~) + f(D~') on every basis element of degree
/// n and every ordered pair; reports the first nonzero value.
[[nodiscard]] inline FourTermCheck functional_4T_check(const Functional& f, int n) {
  for (const auto& code : enumerate_basis(f.flavor, n).codes) {
    const SetSystem s = code.to_system();
    for (int a = 0; a < s.size(); ++a) {
      for (int b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        Rational total = 0;
        for (const auto& term : four_term(s, a, b).terms) total += term.coefficient * f.at(term.system);
        if (total != 0) return FourTermCheck{false, FourTermFailure{code, a, b, total}};
      }
    }
  }
  return FourTermCheck{};
}

/// 1 when the whole ground set is feasible, 0 otherwise.
[[nodiscard]] inline int conway_w(const SetSystem& s) { return s.contains(s.ground()) ? 1 : 0; }

[[nodiscard]] inline Functional conway_functional(int n_max) {
  Functional f{Flavor::B, {}, true};
  for (const auto& code : classes_up_to(Flavor::B, n_max)) f.values.emplace(code, Rational(conway_w(code.to_system())));
  return f;
}

/// Throws NotMultiplicative unless f(unit) = 1 and f(xy) = f(x) f(y) for
/// every pair of classes whose product has degree <= n_max.
inline void require_multiplicative(const Functional& f, int n_max) {
  if (f.at(unit_code()) != 1) throw Error(ErrorKind::NotMultiplicative, "value on the unit is not 1");
  for (int k = 1; 2 * k <= n_max; ++k) {
    for (int l = k; k + l <= n_max; ++l) {
      for (const auto& x : enumerate_basis(f.flavor, k).codes) {
        for (const auto& y : enumerate_basis(f.flavor, l).codes) {
          if (f.at(product_code(x, y)) != f.at(x) * f.at(y)) {
            throw Error(ErrorKind::NotMultiplicative, "f(xy) differs from f(x)f(y) in degree " + std::to_string(k + l));
          }
        }
      }
    }
  }
}

/// Convolution through the coproduct: (g * h)(D) = sum g(D_E') h(D_{E-E'}).
[[nodiscard]] inline Functional convolve(const Functional& g, const Functional& h) {
  Functional out{g.flavor, {}, false};
  for (const auto& [code, unused] : g.values) {
    Rational v = 0;
    for (const auto& [pair, coef] : coproduct_of(code).terms()) v += coef * g.at(pair.first) * h.at(pair.second);
    out.values.emplace(code, v);
  }
  return out;
}

/// log f = sum_{k>=1} (-1)^{k-1} (f - u eps)^{*k} / k, truncated by degree.
[[nodiscard]] inline Functional convolution_log(const Functional& f, int n_max) {
  check_degree(n_max);
  require_multiplicative(f, n_max);
  Functional g{f.flavor, {}, false};
  for (const auto& code : classes_up_to(f.flavor, n_max)) {
    g.values.emplace(code, code.n == 0 ? Rational(0) : f.at(code));
  }
  Functional log{f.flavor, {}, false};
  for (const auto& [code, unused] : g.values) log.values.emplace(code, Rational(0));
  Functional power = g;
  for (int k = 1; k <= n_max; ++k) {
    const Rational scale = Rational(k % 2 == 1 ? 1 : -1) / k;
    for (auto& [code, v] : log.values) v += scale * power.at(code);
    if (k < n_max) power = convolve(power, g);
  }
  return log;
}

}  // namespace dmv

#endif  // DMV_INVARIANTS_HPP
