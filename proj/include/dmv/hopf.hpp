#ifndef DMV_HOPF_HPP
#define DMV_HOPF_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dmv/canonical.hpp"
#include "dmv/exact_linalg.hpp"
#include "dmv/framed_graph.hpp"
#include "dmv/moves.hpp"
#include "dmv/rational.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

/// S: all proper set systems. B: binary delta-matroids; Be: even ones;
/// K and Ke: those with the empty set feasible. The F-variants are the
/// quotients of the plain flavors by the four-term relations.
enum class Flavor { S, B, Be, K, Ke, FB, FBe, FK, FKe };

inline constexpr int kMaxHopfDegree = 4;

[[nodiscard]] inline std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::S: return "S";
    case Flavor::B: return "B";
    case Flavor::Be: return "Be";
    case Flavor::K: return "K";
    case Flavor::Ke: return "Ke";
    case Flavor::FB: return "FB";
    case Flavor::FBe: return "FBe";
    case Flavor::FK: return "FK";
    case Flavor::FKe: return "FKe";
  }
  return "?";
}

[[nodiscard]] inline std::optional<Flavor> parse_flavor(std::string_view name) {
  for (Flavor f : {Flavor::S, Flavor::B, Flavor::Be, Flavor::K, Flavor::Ke, Flavor::FB, Flavor::FBe, Flavor::FK,
                   Flavor::FKe}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

[[nodiscard]] constexpr bool is_quotient(Flavor f) noexcept {
  return f == Flavor::FB || f == Flavor::FBe || f == Flavor::FK || f == Flavor::FKe;
}

/// The plain flavor underlying a quotient (identity on plain flavors).
[[nodiscard]] constexpr Flavor plain_of(Flavor f) noexcept {
  switch (f) {
    case Flavor::FB: return Flavor::B;
    case Flavor::FBe: return Flavor::Be;
    case Flavor::FK: return Flavor::K;
    case Flavor::FKe: return Flavor::Ke;
    default: return f;
  }
}

/// Iso-class of a set system with the predicates the flavors filter on.
struct ClassInfo {
  CanonicalCode code;
  bool binary;
  bool even;
  bool empty_feasible;
};

[[nodiscard]] inline bool accepts(Flavor plain, const ClassInfo& c) {
  switch (plain) {
    case Flavor::S: return true;
    case Flavor::B: return c.binary;
    case Flavor::Be: return c.binary && c.even;
    case Flavor::K: return c.binary && c.empty_feasible;
    case Flavor::Ke: return c.binary && c.even && c.empty_feasible;
    default: return false;
  }
}

[[nodiscard]] inline bool accepts(Flavor plain, const SetSystem& s) {
  return accepts(plain, ClassInfo{CanonicalCode{}, is_binary(s), is_even(s), has_empty_feasible(s)});
}

inline void check_degree(int n) {
  if (n < 0 || n > kMaxHopfDegree) {
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(n) + " outside [0, " + std::to_string(kMaxHopfDegree) + "]");
  }
}

namespace detail {

inline std::vector<ClassInfo> compute_classes(int n) {
  std::map<CanonicalCode, bool> seen;
  const std::size_t universe = std::size_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << universe;
  std::vector<Mask> members;
  for (std::uint64_t fam = 1; fam < families; ++fam) {
    members.clear();
    for (std::size_t m = 0; m < universe; ++m) {
      if ((fam >> m) & 1U) members.push_back(static_cast<Mask>(m));
    }
    seen.emplace(canonical_form(SetSystem(n, members)), true);
  }
  std::vector<ClassInfo> out;
  out.reserve(seen.size());
  for (const auto& [code, unused] : seen) {
    const SetSystem s = code.to_system();
    out.push_back(ClassInfo{code, is_binary(s), is_even(s), has_empty_feasible(s)});
  }
  return out;
}

}  // namespace detail

/// Every iso-class of proper set systems on n elements, in code order.
/// Computed once per degree; concurrent callers share the result.
[[nodiscard]] inline const std::vector<ClassInfo>& all_classes(int n) {
  check_degree(n);
  static std::mutex guard;
  static std::array<std::optional<std::vector<ClassInfo>>, kMaxHopfDegree + 1> cache;
  std::lock_guard lock(guard);
  if (!cache[n]) cache[n] = detail::compute_classes(n);
  return *cache[n];
}

struct GradedBasis {
  Flavor flavor;
  int degree;
  std::vector<CanonicalCode> codes;

  [[nodiscard]] std::size_t size() const noexcept { return codes.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(const CanonicalCode& c) const {
    auto it = std::lower_bound(codes.begin(), codes.end(), c);
    if (it == codes.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - codes.begin());
  }
};

[[nodiscard]] inline GradedBasis enumerate_basis(Flavor flavor, int n) {
  const Flavor plain = plain_of(flavor);
  GradedBasis basis{plain, n, {}};
  for (const auto& c : all_classes(n)) {
    if (accepts(plain, c)) basis.codes.push_back(c.code);
  }
  return basis;
}

/// Sparse exact-rational combination of iso-classes. Zero coefficients are
/// never stored.
class GradedVector {
 public:
  void add(const CanonicalCode& c, const Rational& coef) {
    if (coef == 0) return;
    auto [it, fresh] = terms_.try_emplace(c, coef);
    if (!fresh) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  [[nodiscard]] const std::map<CanonicalCode, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const CanonicalCode& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  friend bool operator==(const GradedVector&, const GradedVector&) = default;

 private:
  std::map<CanonicalCode, Rational> terms_;
};

using CodePair = std::pair<CanonicalCode, CanonicalCode>;

class TensorVector {
 public:
  void add(const CanonicalCode& left, const CanonicalCode& right, const Rational& coef) {
    if (coef == 0) return;
    auto [it, fresh] = terms_.try_emplace(CodePair{left, right}, coef);
    if (!fresh) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  [[nodiscard]] const std::map<CodePair, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const CanonicalCode& l, const CanonicalCode& r) const {
    auto it = terms_.find(CodePair{l, r});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  std::map<CodePair, Rational> terms_;
};

[[nodiscard]] inline CanonicalCode unit_code() { return CanonicalCode{0, {0}}; }

/// Sum over all subsets E' of D restricted to E' tensor D restricted to
/// the complement.
[[nodiscard]] inline TensorVector coproduct(const SetSystem& d, Enforcement mode = Enforcement::Off) {
  if (mode == Enforcement::RequireBinary && !is_binary(d)) {
    throw Error(ErrorKind::NotBinary, "coproduct of a non-binary set system");
  }
  TensorVector out;
  const Mask full = d.ground();
  for (Mask sub = 0;; ++sub) {
    out.add(canonical_form(restrict_to(d, sub)), canonical_form(restrict_to(d, full & ~sub)), Rational(1));
    if (sub == full) break;
  }
  return out;
}

/// Coproduct of a class, cached by code.
[[nodiscard]] inline const TensorVector& coproduct_of(const CanonicalCode& c) {
  static std::mutex guard;
  static std::map<CanonicalCode, TensorVector> cache;
  {
    std::lock_guard lock(guard);
    if (auto it = cache.find(c); it != cache.end()) return it->second;
  }
  TensorVector value = coproduct(c.to_system());
  std::lock_guard lock(guard);
  return cache.try_emplace(c, std::move(value)).first->second;
}

/// Coproduct minus the primitive part 1 (x) D + D (x) 1.
[[nodiscard]] inline TensorVector reduced_coproduct(const CanonicalCode& c) {
  TensorVector out;
  for (const auto& [pair, coef] : coproduct_of(c).terms()) {
    if (pair.first.n == 0 || pair.second.n == 0) continue;
    out.add(pair.first, pair.second, coef);
  }
  return out;
}

[[nodiscard]] inline CanonicalCode product_code(const CanonicalCode& a, const CanonicalCode& b) {
  return canonical_form(product(a.to_system(), b.to_system()));
}

/// Coefficients of the combination D - D' - D~ + D~' for one basis element
/// and ordered pair.
[[nodiscard]] inline GradedVector four_term_vector(const SetSystem& s, int a, int b,
                                                   Enforcement mode = Enforcement::Off) {
  GradedVector v;
  for (const auto& term : four_term(s, a, b, mode).terms) v.add(canonical_form(term.system), Rational(term.coefficient));
  return v;
}

namespace detail {

inline void require_coproduct_flavor(Flavor f) {
  if (plain_of(f) == Flavor::S) {
    throw Error(ErrorKind::UnsupportedFlavor, "coproduct operations are defined on binary flavors only");
  }
}

inline void require_quotient(Flavor f) {
  if (!is_quotient(f)) throw Error(ErrorKind::UnsupportedFlavor, std::string(to_string(f)) + " is not a quotient flavor");
}

using SparseVector = std::map<std::size_t, Rational>;

/// One graded piece of a (possibly quotient) flavor: the plain basis, the
/// relation span in reduced echelon form and the projection onto the
/// quotient coordinates.
struct DegreePiece {
  GradedBasis basis;
  Echelon relations;
  std::vector<std::size_t> representatives;   // non-pivot basis indices
  std::vector<SparseVector> projection;       // basis index -> quotient coords

  [[nodiscard]] std::size_t quotient_dim() const { return representatives.size(); }
  [[nodiscard]] std::size_t relation_rank() const { return relations.pivots.size(); }

  [[nodiscard]] SparseVector project(const std::vector<Rational>& v) const {
    std::vector<Rational> w = v;
    for (std::size_t i = 0; i < relations.pivots.size(); ++i) {
      const std::size_t p = relations.pivots[i];
      if (w[p] == 0) continue;
      const Rational f = w[p];
      for (std::size_t c = 0; c < w.size(); ++c) {
        if (relations.matrix(i, c) != 0) w[c] -= f * relations.matrix(i, c);
      }
    }
    SparseVector out;
    for (std::size_t q = 0; q < representatives.size(); ++q) {
      if (w[representatives[q]] != 0) out[q] = w[representatives[q]];
    }
    return out;
  }
};

inline std::vector<std::vector<Rational>> relation_rows(const GradedBasis& basis) {
  std::vector<std::vector<Rational>> rows;
  const Enforcement mode = basis.flavor == Flavor::S ? Enforcement::Off : Enforcement::RequireBinary;
  for (const auto& code : basis.codes) {
    const SetSystem s = code.to_system();
    for (int a = 0; a < s.size(); ++a) {
      for (int b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        const GradedVector v = four_term_vector(s, a, b, mode);
        if (v.is_zero()) continue;
        std::vector<Rational> row(basis.size(), Rational(0));
        for (const auto& [c, coef] : v.terms()) {
          auto idx = basis.index_of(c);
          if (!idx) {
            throw Error(ErrorKind::NotBinary, "a four-term relation leaves the " +
                                                  std::string(to_string(basis.flavor)) + " basis");
          }
          row[*idx] = coef;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

inline DegreePiece build_piece(Flavor flavor, int n) {
  DegreePiece piece{enumerate_basis(flavor, n), {}, {}, {}};
  const std::size_t dim = piece.basis.size();
  RationalMatrix rel(0, dim);
  if (is_quotient(flavor)) {
    for (auto& row : relation_rows(piece.basis)) rel.append_row(row);
  }
  piece.relations = reduced_echelon(std::move(rel));
  std::vector<bool> pivot(dim, false);
  for (std::size_t p : piece.relations.pivots) pivot[p] = true;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!pivot[i]) piece.representatives.push_back(i);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> e(dim, Rational(0));
    e[i] = 1;
    piece.projection.push_back(piece.project(e));
  }
  return piece;
}

inline const DegreePiece& piece(Flavor flavor, int n) {
  check_degree(n);
  static std::mutex guard;
  static std::map<std::pair<Flavor, int>, DegreePiece> cache;
  {
    std::lock_guard lock(guard);
    if (auto it = cache.find({flavor, n}); it != cache.end()) return it->second;
  }
  DegreePiece value = build_piece(flavor, n);
  std::lock_guard lock(guard);
  return cache.try_emplace({flavor, n}, std::move(value)).first->second;
}

/// Key of a basis tensor in the quotient: (left degree, left coord, right coord).
using TensorKey = std::tuple<int, std::size_t, std::size_t>;

/// Image of a tensor under the product of the quotient projections,
/// restricted to bidegrees (k, n-k) with lo <= k <= hi.
inline std::map<TensorKey, Rational> project_tensor(Flavor flavor, const TensorVector& t, int lo, int hi) {
  std::map<TensorKey, Rational> out;
  for (const auto& [pair, coef] : t.terms()) {
    const int k = pair.first.n;
    if (k < lo || k > hi) continue;
    const DegreePiece& left = piece(flavor, k);
    const DegreePiece& right = piece(flavor, pair.second.n);
    auto li = left.basis.index_of(pair.first);
    auto ri = right.basis.index_of(pair.second);
    if (!li || !ri) {
      throw Error(ErrorKind::NotBinary, "coproduct leaves the " + std::string(to_string(flavor)) + " basis");
    }
    for (const auto& [lq, lv] : left.projection[*li]) {
      for (const auto& [rq, rv] : right.projection[*ri]) {
        Rational& slot = out[TensorKey{k, lq, rq}];
        slot += coef * lv * rv;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::size_t rank_of_columns(const std::vector<std::map<TensorKey, Rational>>& columns) {
  std::map<TensorKey, std::size_t> row_index;
  for (const auto& col : columns) {
    for (const auto& [key, unused] : col) row_index.try_emplace(key, row_index.size());
  }
  RationalMatrix m(row_index.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [key, v] : columns[j]) m(row_index[key], j) = v;
  }
  return rank(m);
}

}  // namespace detail

/// Kernel dimension of the reduced coproduct on the degree-n span.
[[nodiscard]] inline int primitive_dim(Flavor flavor, int n) {
  check_degree(n);
  detail::require_coproduct_flavor(flavor);
  if (is_quotient(flavor)) throw Error(ErrorKind::UnsupportedFlavor, "use quotient_primitive_dim for quotients");
  if (n == 0) return 0;
  const GradedBasis basis = enumerate_basis(flavor, n);
  std::vector<std::map<detail::TensorKey, Rational>> columns;
  for (const auto& code : basis.codes) columns.push_back(detail::project_tensor(flavor, reduced_coproduct(code), 1, n - 1));
  return static_cast<int>(basis.size() - detail::rank_of_columns(columns));
}

/// A basis of the primitive subspace in degree n of a plain flavor.
[[nodiscard]] inline std::vector<GradedVector> primitive_basis(Flavor flavor, int n) {
  check_degree(n);
  detail::require_coproduct_flavor(flavor);
  if (is_quotient(flavor)) throw Error(ErrorKind::UnsupportedFlavor, "primitive_basis takes a plain flavor");
  if (n == 0) return {};
  const GradedBasis basis = enumerate_basis(flavor, n);
  std::vector<std::map<detail::TensorKey, Rational>> columns;
  std::map<detail::TensorKey, std::size_t> row_index;
  for (const auto& code : basis.codes) {
    columns.push_back(detail::project_tensor(flavor, reduced_coproduct(code), 1, n - 1));
    for (const auto& [key, unused] : columns.back()) row_index.try_emplace(key, row_index.size());
  }
  RationalMatrix m(row_index.size(), basis.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [key, v] : columns[j]) m(row_index[key], j) = v;
  }
  const auto solved = solve_affine(m, std::vector<Rational>(row_index.size(), Rational(0)));
  std::vector<GradedVector> out;
  for (const auto& k : solved->kernel) {
    GradedVector v;
    for (std::size_t j = 0; j < k.size(); ++j) v.add(basis.codes[j], k[j]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Rank of the span of products of positive lower-degree basis elements.
[[nodiscard]] inline int decomposable_dim(Flavor flavor, int n) {
  check_degree(n);
  if (n <= 1) return 0;
  const Flavor plain = plain_of(flavor);
  const detail::DegreePiece& target = detail::piece(flavor, n);
  RationalMatrix m(0, target.quotient_dim());
  for (int k = 1; 2 * k <= n; ++k) {
    const GradedBasis left = enumerate_basis(plain, k);
    const GradedBasis right = enumerate_basis(plain, n - k);
    for (const auto& x : left.codes) {
      for (const auto& y : right.codes) {
        auto idx = target.basis.index_of(product_code(x, y));
        if (!idx) throw Error(ErrorKind::NotBinary, "product leaves the flavor");
        std::vector<Rational> row(target.quotient_dim(), Rational(0));
        for (const auto& [q, v] : target.projection[*idx]) row[q] = v;
        m.append_row(row);
      }
    }
  }
  if (m.rows() == 0) return 0;
  return static_cast<int>(rank(m));
}

struct QuotientDims {
  int quotient_dim;
  int relation_rank;
};

[[nodiscard]] inline QuotientDims four_term_quotient(Flavor flavor, int n) {
  check_degree(n);
  detail::require_quotient(flavor);
  const detail::DegreePiece& p = detail::piece(flavor, n);
  return QuotientDims{static_cast<int>(p.quotient_dim()), static_cast<int>(p.relation_rank())};
}

/// The relation span of a quotient flavor in degree n, as echelon rows over
/// the plain basis.
[[nodiscard]] inline std::vector<GradedVector> relation_basis(Flavor flavor, int n) {
  detail::require_quotient(flavor);
  const detail::DegreePiece& p = detail::piece(flavor, n);
  std::vector<GradedVector> out;
  for (std::size_t i = 0; i < p.relation_rank(); ++i) {
    GradedVector v;
    for (std::size_t c = 0; c < p.basis.size(); ++c) v.add(p.basis.codes[c], p.relations.matrix(i, c));
    out.push_back(std::move(v));
  }
  return out;
}

/// Checks that the coproduct of every degree-n relation lies in
/// I (x) B + B (x) I; throws CoidealViolation otherwise.
inline void verify_coideal(Flavor flavor, int n) {
  detail::require_quotient(flavor);
  for (const auto& rel : relation_basis(flavor, n)) {
    TensorVector image;
    for (const auto& [code, coef] : rel.terms()) {
      for (const auto& [pair, c2] : coproduct_of(code).terms()) image.add(pair.first, pair.second, coef * c2);
    }
    if (!detail::project_tensor(flavor, image, 0, n).empty()) {
      throw Error(ErrorKind::CoidealViolation, "four-term relations of " + std::string(to_string(flavor)) +
                                                   " do not form a coideal in degree " + std::to_string(n));
    }
  }
}

[[nodiscard]] inline int quotient_primitive_dim(Flavor flavor, int n) {
  check_degree(n);
  detail::require_quotient(flavor);
  if (n == 0) return 0;
  verify_coideal(flavor, n);
  const detail::DegreePiece& p = detail::piece(flavor, n);
  std::vector<std::map<detail::TensorKey, Rational>> columns;
  for (std::size_t rep : p.representatives) {
    columns.push_back(detail::project_tensor(flavor, reduced_coproduct(p.basis.codes[rep]), 1, n - 1));
  }
  return static_cast<int>(p.quotient_dim() - detail::rank_of_columns(columns));
}

struct Table1Row {
  Flavor flavor;
  std::array<int, 2> computed;
  std::array<int, 2> expected;

  [[nodiscard]] bool matches() const { return computed == expected; }
};

/// Published primitive dimensions in degrees 1 and 2.
[[nodiscard]] inline std::vector<std::pair<Flavor, std::array<int, 2>>> table1_expected() {
  return {{Flavor::B, {3, 5}},  {Flavor::Be, {2, 2}}, {Flavor::FB, {3, 4}}, {Flavor::FBe, {2, 2}},
          {Flavor::K, {2, 3}},  {Flavor::Ke, {1, 1}}, {Flavor::FK, {2, 3}}, {Flavor::FKe, {1, 1}}};
}

[[nodiscard]] inline int primitive_dim_any(Flavor flavor, int n) {
  return is_quotient(flavor) ? quotient_primitive_dim(flavor, n) : primitive_dim(flavor, n);
}

[[nodiscard]] inline std::vector<Table1Row> table1_report() {
  std::vector<Table1Row> rows;
  for (const auto& [flavor, expected] : table1_expected()) {
    rows.push_back(Table1Row{flavor, {primitive_dim_any(flavor, 1), primitive_dim_any(flavor, 2)}, expected});
  }
  return rows;
}

[[nodiscard]] inline std::string format_table1(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "flavor n=1 n=2 status\n";
  for (const auto& r : rows) {
    out << to_string(r.flavor) << ' ' << r.computed[0] << ' ' << r.computed[1] << ' ';
    if (r.matches()) {
      out << "PASS\n";
    } else {
      out << "FAIL (expected " << r.expected[0] << ' ' << r.expected[1] << ")\n";
    }
  }
  return out.str();
}

}  // namespace dmv

#endif  // DMV_HOPF_HPP
