#include "fic/collections.hpp"

#include "fic/affine_solver.hpp"
#include "fic/errors.hpp"
#include "fic/instanton.hpp"

#include "fic_embedded_data.hpp"
#include "nlohmann/json.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fic {

namespace {

// Chow class depending affinely on the unknown Chern entries: value(x) =
// base + sum_k x_k * grad[k].  Every gradient lives in the (0, 0, b, c)
// subspace, which twist, dual, addition and scaling preserve, and whose
// pairwise products vanish identically; that keeps products of affine
// classes affine.
struct Affine {
  ChowClass base;
  std::vector<ChowClass> grad;
};

Affine const_a(const ChowClass& ch, std::size_t n) {
  return Affine{ch, std::vector<ChowClass>(n, ChowClass{})};
}

Affine add_a(const Affine& A, const Affine& B) {
  Affine out{A.base + B.base, A.grad};
  for (std::size_t k = 0; k < out.grad.size(); ++k)
    out.grad[k] = out.grad[k] + B.grad[k];
  return out;
}

Affine sub_a(const Affine& A, const Affine& B) {
  Affine out{A.base - B.base, A.grad};
  for (std::size_t k = 0; k < out.grad.size(); ++k)
    out.grad[k] = out.grad[k] - B.grad[k];
  return out;
}

Affine scale_a(const Rational& t, const Affine& A) {
  Affine out{t * A.base, A.grad};
  for (ChowClass& g : out.grad) g = t * g;
  return out;
}

Affine twist_a(const Affine& A, long long m, const FanoData& X) {
  Affine out{twist(A.base, m, X), A.grad};
  for (ChowClass& g : out.grad) g = twist(g, m, X);
  return out;
}

Affine dual_a(const Affine& A) {
  Affine out{dual_ch(A.base), A.grad};
  for (ChowClass& g : out.grad) g = dual_ch(g);
  return out;
}

void require_linear(const Affine& A) {
  for (const ChowClass& g : A.grad) {
    if (g.r != 0 || g.a != 0)
      throw std::logic_error("affine gradient left the (0, 0, b, c) subspace");
  }
}

Affine mul_a(const Affine& A, const Affine& B, const FanoData& X) {
  // grad x grad terms are exactly zero: both factors have r = a = 0, and
  // the product formula only ever multiplies (b, c) against (r, a).
  require_linear(A);
  require_linear(B);
  Affine out{mul(A.base, B.base, X), A.grad};
  for (std::size_t k = 0; k < out.grad.size(); ++k)
    out.grad[k] = mul(A.base, B.grad[k], X) + mul(A.grad[k], B.base, X);
  return out;
}

struct AffineScalar {
  Rational base;
  std::vector<Rational> grad;
};

AffineScalar euler_a(const Affine& A, const FanoData& X) {
  AffineScalar out{euler_char(A.base, X), {}};
  out.grad.reserve(A.grad.size());
  for (const ChowClass& g : A.grad) out.grad.push_back(euler_char(g, X));
  return out;
}

AffineScalar pair_a(const Affine& A, const Affine& B, const FanoData& X) {
  return euler_a(mul_a(dual_a(A), B, X), X);
}

AffineScalar component(const Affine& A, int idx) {
  auto pick = [idx](const ChowClass& ch) -> Rational {
    switch (idx) {
      case 0: return ch.r;
      case 1: return ch.a;
      case 2: return ch.b;
      default: return ch.c;
    }
  };
  AffineScalar out{pick(A.base), {}};
  out.grad.reserve(A.grad.size());
  for (const ChowClass& g : A.grad) out.grad.push_back(pick(g));
  return out;
}

void push_eq(std::vector<LinearConstraint>& rows, std::string label,
             const AffineScalar& lhs, const Rational& target) {
  rows.push_back(LinearConstraint{std::move(label), lhs.grad,
                                  target - lhs.base});
}

struct Plan {
  FanoData X;
  std::size_t n_unknowns = 0;
  std::vector<std::string> unknown_names;
  std::array<std::string, 3> f_names{};
  std::array<std::string, 3> g_names{};
  std::array<Affine, 3> F{};
  std::array<Affine, 3> G{};

  const Affine& f(int i) const { return F[static_cast<std::size_t>(i + 1)]; }
  const Affine& g(int j) const { return G[static_cast<std::size_t>(j + 1)]; }
};

long long width_for(const FanoData& X, long long n, long long k) {
  switch (X.index) {
    case 4: return 2 * k + n;
    case 3: return k + n;
    case 2: return 4 * k + n;
    default: return 3 * k + n;
  }
}

std::map<std::string, Affine> parse_bundles(Plan& plan) {
  const auto doc = nlohmann::json::parse(embedded::kCollectionsJson);
  if (doc.at("schema").get<std::string>() != "fic-collections/1")
    throw std::runtime_error("unexpected collections data schema");
  const auto& all = doc.at("bundles");
  if (!all.contains(plan.X.name))
    throw std::invalid_argument("no collection data for " + plan.X.name);

  struct Raw {
    std::string name;
    long long rank = 0, c1 = 0;
    std::optional<long long> c2, c3;
  };
  std::vector<Raw> raws;
  auto slot = [](const nlohmann::json& b,
                 const char* key) -> std::optional<long long> {
    const auto& v = b.at(key);
    if (v.is_string()) {
      if (v.get<std::string>() != "solve")
        throw std::runtime_error("bad Chern entry marker in collection data");
      return std::nullopt;
    }
    return v.get<long long>();
  };
  for (const auto& b : all.at(plan.X.name)) {
    Raw raw;
    raw.name = b.at("name").get<std::string>();
    raw.rank = b.at("rank").get<long long>();
    raw.c1 = b.at("c1").get<long long>();
    raw.c2 = slot(b, "c2");
    raw.c3 = slot(b, "c3");
    raws.push_back(std::move(raw));
  }

  for (const Raw& raw : raws) {
    if (!raw.c2) plan.unknown_names.push_back("c2(" + raw.name + ")");
    if (!raw.c3) plan.unknown_names.push_back("c3(" + raw.name + ")");
  }
  plan.n_unknowns = plan.unknown_names.size();

  std::map<std::string, Affine> bundles;
  std::size_t next = 0;
  for (const Raw& raw : raws) {
    ChernClasses known{raw.rank, raw.c1, raw.c2.value_or(0),
                       raw.c3.value_or(0)};
    Affine A = const_a(ch_from_chern(known, plan.X), plan.n_unknowns);
    // ch_from_chern is affine in (c2, c3): d(ch)/d(c2) = (0, 0, -1, -c1/2)
    // and d(ch)/d(c3) = (0, 0, 0, 1/2).
    if (!raw.c2) {
      A.grad[next] = ChowClass{0, 0, -1, Rational(-raw.c1) / 2};
      ++next;
    }
    if (!raw.c3) {
      A.grad[next] = ChowClass{0, 0, 0, Rational(1) / 2};
      ++next;
    }
    bundles.emplace(raw.name, std::move(A));
  }
  return bundles;
}

Plan build_plan(const FanoData& X) {
  if (!has_collection(X))
    throw std::invalid_argument("no three-term collection on " + X.name);
  Plan plan;
  plan.X = X;
  const auto bundles = parse_bundles(plan);
  auto need = [&](const std::string& nm) -> const Affine& {
    auto it = bundles.find(nm);
    if (it == bundles.end())
      throw std::runtime_error("collection data for " + X.name +
                               " lacks bundle " + nm);
    return it->second;
  };

  if (X.index == 4) {
    const Affine& O = need("O");
    const Affine& T = need("T");
    plan.F = {twist_a(O, -1, X), O, twist_a(O, 1, X)};
    plan.f_names = {"O(-1)", "O", "O(1)"};
    plan.G = {twist_a(T, -3, X),
              sub_a(scale_a(4, twist_a(O, -1, X)), O), twist_a(O, -1, X)};
    plan.g_names = {"T(-3)", "Omega", "O(-1)"};
  } else if (X.index == 3) {
    const Affine& O = need("O");
    const Affine& S = need("S");
    const Affine& GL = need("GL");
    plan.F = {twist_a(O, -1, X), S, O};
    plan.f_names = {"O(-1)", "S", "O"};
    plan.G = {GL, S, O};
    plan.g_names = {"GL", "S", "O"};
  } else if (X.index == 2) {
    const Affine& O = need("O");
    const Affine& U = need("U");
    plan.F = {U, O, dual_a(U)};
    plan.f_names = {"U", "O", "U*"};
    plan.G = {twist_a(sub_a(scale_a(5, O), U), -1, X),
              sub_a(scale_a(5, U), O), U};
    plan.g_names = {"Q(-1)", "5U-O", "U"};
  } else {
    const Affine& O = need("O");
    const Affine& E0 = need("E0");
    const Affine& U = need("U");
    plan.F = {twist_a(dual_a(U), -1, X), E0, U};
    plan.f_names = {"U*(-1)", "E0", "U"};
    plan.G = {sub_a(scale_a(7, O), U), sub_a(scale_a(4, U), E0), dual_a(U)};
    plan.g_names = {"7O-U", "W", "U*"};
  }
  return plan;
}

// Probe charges for the homology and Beilinson constraint rows.
constexpr std::pair<long long, long long> kProbes[] = {{1, 1}, {2, 3}};
constexpr const char* kComponentNames[] = {"r", "H", "l", "p"};

void add_exceptionality(std::vector<LinearConstraint>& rows, const Plan& p) {
  for (int i = -1; i <= 1; ++i) {
    std::ostringstream label;
    label << "exceptionality chi(F(" << i << "),F(" << i << ")) = 1";
    push_eq(rows, label.str(), pair_a(p.f(i), p.f(i), p.X), 1);
  }
}

void add_semiorthogonality(std::vector<LinearConstraint>& rows,
                           const Plan& p) {
  for (int j = -1; j <= 1; ++j) {
    for (int i = -1; i < j; ++i) {
      std::ostringstream label;
      label << "semiorthogonality chi(F(" << j << "),F(" << i << ")) = 0";
      push_eq(rows, label.str(), pair_a(p.f(j), p.f(i), p.X), 0);
    }
  }
}

void add_homology(std::vector<LinearConstraint>& rows, const Plan& p) {
  for (const auto& [n, k] : kProbes) {
    const long long w = width_for(p.X, n, k);
    Affine hom = sub_a(
        sub_a(scale_a(w, p.f(0)), scale_a(k, p.f(-1))), scale_a(k, p.f(1)));
    const ChowClass target = gamma(p.X, n, k);
    const Rational comps[] = {target.r, target.a, target.b, target.c};
    for (int idx = 0; idx < 4; ++idx) {
      std::ostringstream label;
      label << "homology " << kComponentNames[idx] << "-row at (n=" << n
            << ",k=" << k << ")";
      push_eq(rows, label.str(), component(hom, idx), comps[idx]);
    }
  }
}

void add_pairing(std::vector<LinearConstraint>& rows, const Plan& p,
                 bool diagonal) {
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      if ((i == j) != diagonal) continue;
      const Rational target = diagonal ? Rational(i == 0 ? -1 : 1)
                                       : Rational(0);
      std::ostringstream label;
      label << "pairing chi(F(" << i << ").G(" << j
            << ")) = " << to_string(target);
      push_eq(rows, label.str(),
              euler_a(mul_a(p.f(i), p.g(j), p.X), p.X), target);
    }
  }
}

void add_beilinson(std::vector<LinearConstraint>& rows, const Plan& p) {
  for (const auto& [n, k] : kProbes) {
    const long long w = width_for(p.X, n, k);
    const Affine gm = const_a(gamma(p.X, n, k), p.n_unknowns);
    for (int j = -1; j <= 1; ++j) {
      const long long expected = (j == 0) ? w : k;
      std::ostringstream label;
      label << "beilinson column " << j << " at (n=" << n << ",k=" << k
            << ")";
      // -chi(gamma . G(j)) = expected
      push_eq(rows, label.str(), euler_a(mul_a(gm, p.g(j), p.X), p.X),
              Rational(-expected));
    }
  }
}

std::vector<LinearConstraint> core_rows(const Plan& p) {
  std::vector<LinearConstraint> rows;
  add_exceptionality(rows, p);
  add_semiorthogonality(rows, p);
  add_homology(rows, p);
  return rows;
}

std::vector<LinearConstraint> full_rows(const Plan& p) {
  std::vector<LinearConstraint> rows = core_rows(p);
  add_pairing(rows, p, true);
  add_pairing(rows, p, false);
  add_beilinson(rows, p);
  return rows;
}

ChowClass substitute(const Affine& A, const std::vector<Rational>& sol) {
  ChowClass out = A.base;
  for (std::size_t k = 0; k < A.grad.size(); ++k)
    out = out + sol[k] * A.grad[k];
  return out;
}

ExceptionalCollection realize(const Plan& p,
                              const std::vector<Rational>& sol) {
  ExceptionalCollection coll;
  coll.X = p.X;
  for (std::size_t s = 0; s < 3; ++s) {
    coll.F[s] = NamedClass{p.f_names[s], substitute(p.F[s], sol)};
    coll.G[s] = NamedClass{p.g_names[s], substitute(p.G[s], sol)};
  }
  return coll;
}

ExceptionalCollection solve_core_fallback(const Plan& p) {
  try {
    return realize(p, solve_labeled(full_rows(p), p.n_unknowns,
                                    p.unknown_names));
  } catch (const InconsistentSystem&) {
    return realize(p, solve_labeled(core_rows(p), p.n_unknowns,
                                    p.unknown_names));
  }
}

std::string render_pairing(const std::array<std::array<Rational, 3>, 3>& P) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < 3; ++j) {
      if (j) out << ", ";
      out << to_string(P[i][j]);
    }
  }
  out << "]";
  return out.str();
}

void check_shape_args(const FanoData& X, long long n, long long k) {
  if (!has_collection(X))
    throw std::invalid_argument("no three-term monad on " + X.name);
  if (n < 1) throw std::invalid_argument("monad shape needs n >= 1");
  const long long kmin = (X.index == 2) ? 2 : 1;
  if (k < kmin)
    throw std::invalid_argument("monad shape on " + X.name + " needs k >= " +
                                std::to_string(kmin));
}

MonadShape shape_from(const ExceptionalCollection& coll, long long n,
                      long long k) {
  MonadShape s;
  s.left = coll.f(-1);
  s.middle = coll.f(0);
  s.right = coll.f(1);
  s.n = n;
  s.k = k;
  s.w = width_for(coll.X, n, k);
  s.homology = Rational(s.w) * s.middle.ch - Rational(k) * s.left.ch -
               Rational(k) * s.right.ch;
  return s;
}

}  // namespace

bool has_collection(const FanoData& X) {
  if (X.index == 4 || X.index == 3) return true;
  if (X.index == 2) return X.degree == 5;
  return X.genus.has_value() && *X.genus == 12;
}

ExceptionalCollection collection_for(const FanoData& X) {
  return solve_core_fallback(build_plan(X));
}

ExceptionalCollection solve_unknown_characters(const FanoData& X) {
  const bool y5 = X.index == 2 && X.degree == 5;
  const bool x12 = X.index == 1 && X.genus && *X.genus == 12;
  if (!y5 && !x12)
    throw std::invalid_argument(X.name +
                                " has no unknown characters to solve for");
  Plan p = build_plan(X);
  return realize(p,
                 solve_labeled(full_rows(p), p.n_unknowns, p.unknown_names));
}

std::vector<DeviationRecord> validate_collection(
    const ExceptionalCollection& coll) {
  const FanoData& X = coll.X;
  std::vector<DeviationRecord> records;

  for (int i = -1; i <= 1; ++i) {
    const Rational chi = euler_pair(coll.f(i).ch, coll.f(i).ch, X);
    records.push_back(audit(
        "collection-exceptionality", "chi(F(i), F(i)) = 1", "1",
        to_string(chi), "F(" + std::to_string(i) + ") = " + coll.f(i).name +
                            " on " + X.name,
        "constraint"));
  }

  for (int j = -1; j <= 1; ++j) {
    for (int i = -1; i < j; ++i) {
      const Rational chi = euler_pair(coll.f(j).ch, coll.f(i).ch, X);
      records.push_back(audit(
          "collection-semiorthogonality", "chi(F(j), F(i)) = 0 for j > i",
          "0", to_string(chi),
          "chi(" + coll.f(j).name + ", " + coll.f(i).name + ") on " + X.name,
          "constraint"));
    }
  }

  std::array<std::array<Rational, 3>, 3> ideal{};
  std::array<std::array<Rational, 3>, 3> found{};
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      ideal[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] =
          (i == j) ? Rational(i == 0 ? -1 : 1) : Rational(0);
      found[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] =
          euler_char(mul(coll.f(i).ch, coll.g(j).ch, X), X);
    }
  }
  records.push_back(audit(
      "collection-pairing-matrix", "chi(F(i) . G(j)) = diag(1, -1, 1)",
      render_pairing(ideal), render_pairing(found),
      "rows i, columns j over " + X.name,
      X.index == 4 ? "calibration" : "constraint"));

  for (int i = -1; i <= 1; ++i) {
    const ChowClass mirror = twist(coll.f(-i).ch, X.r_twist(), X);
    records.push_back(audit(
        "collection-duality", "dual(F(i)) = F(-i)(r)", to_string(mirror),
        to_string(dual_ch(coll.f(i).ch)),
        "dual(" + coll.f(i).name + ") against " + coll.f(-i).name + "(" +
            std::to_string(X.r_twist()) + ") on " + X.name,
        "constraint"));
  }

  return records;
}

MonadShape monad_shape(const FanoData& X, long long n, long long k) {
  check_shape_args(X, n, k);
  return shape_from(collection_for(X), n, k);
}

DeviationRecord verify_homology_character(const MonadShape& shape,
                                          const FanoData& X) {
  const ChowClass expected = gamma(X, shape.n, shape.k);
  std::ostringstream note;
  note << "X = " << X.name << ", (n, k, w) = (" << shape.n << ", " << shape.k
       << ", " << shape.w << "), middle = " << shape.middle.name;
  return audit("monad-homology-character",
               "k F(-1) -> w F(0) -> k F(1) has homology character "
               "gamma(n, k)",
               to_string(expected), to_string(shape.homology), note.str(),
               "constraint");
}

DeviationRecord verify_homology_character(const FanoData& X, long long n,
                                          long long k) {
  check_shape_args(X, n, k);
  Plan p = build_plan(X);
  try {
    const ExceptionalCollection coll =
        realize(p, solve_labeled(full_rows(p), p.n_unknowns,
                                 p.unknown_names));
    return verify_homology_character(shape_from(coll, n, k), X);
  } catch (const InconsistentSystem& e) {
    const ExceptionalCollection coll =
        realize(p, solve_labeled(core_rows(p), p.n_unknowns,
                                 p.unknown_names));
    const Rational middle =
        -euler_char(mul(gamma(X, n, k), coll.g(0).ch, X), X);
    std::string witness;
    for (const std::string& c : e.constraints) {
      if (!witness.empty()) witness += "; ";
      witness += c;
    }
    return audit(
        "x12-monad-width-row", "w = 3k + n",
        to_string(Rational(3 * k + n)), to_string(middle),
        "middle Beilinson column -chi(gamma . G(0)) of the core-solved "
        "collection at (n=" +
            std::to_string(n) + ",k=" + std::to_string(k) +
            "); full system contradictory: " + witness,
        "display");
  }
}

CohomologyTable cohomology_table(const FanoData& X, long long n,
                                 long long k) {
  check_shape_args(X, n, k);
  const ExceptionalCollection coll = collection_for(X);
  const ChowClass gm = gamma(X, n, k);
  CohomologyTable table{};
  for (int j = -1; j <= 1; ++j) {
    table[1][static_cast<std::size_t>(j + 1)] =
        -euler_char(mul(gm, coll.g(j).ch, X), X);
  }
  return table;
}

}  // namespace fic
