#include "fic/monad_lab.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fic/chow.hpp"
#include "fic/errors.hpp"
#include "fic/instanton.hpp"
#include "fic/prime_field.hpp"
#include "fic/rng.hpp"

namespace fic {

namespace {

const FanoData& p3() {
  static const FanoData X = make_fano("P3", 4, 1);
  return X;
}

void check_field(const std::string& field) {
  if (field != kFieldRational && field != kFieldPrime)
    throw std::invalid_argument("unknown working field '" + field + "'");
}

// dim H^0(O_P3(m)).
long long sections(long long m) {
  return m < 0 ? 0 : (m + 1) * (m + 2) * (m + 3) / 6;
}

// Degree-m monomials in x0..x3 in a fixed deterministic order.
std::vector<std::array<int, 4>> monomials(long long m) {
  std::vector<std::array<int, 4>> out;
  if (m < 0) return out;
  for (int e0 = static_cast<int>(m); e0 >= 0; --e0)
    for (int e1 = static_cast<int>(m) - e0; e1 >= 0; --e1)
      for (int e2 = static_cast<int>(m) - e0 - e1; e2 >= 0; --e2)
        out.push_back({e0, e1, e2, static_cast<int>(m) - e0 - e1 - e2});
  return out;
}

// Multiplication H^0(O(t))^cols -> H^0(O(t+1))^rows by the forms of L,
// in block row-major layout over the monomial bases.
Matrix<Rational> multiplication_map(const LinearFormMatrix& L, long long t) {
  const auto src = monomials(t);
  const auto dst = monomials(t + 1);
  std::map<std::array<int, 4>, std::size_t> dst_index;
  for (std::size_t s = 0; s < dst.size(); ++s) dst_index[dst[s]] = s;

  Matrix<Rational> out(L.rows * dst.size(), L.cols * src.size());
  for (std::size_t i = 0; i < L.rows; ++i)
    for (std::size_t j = 0; j < L.cols; ++j)
      for (int v = 0; v < 4; ++v) {
        const Rational& c = L.coeff[v].at(i, j);
        if (c == 0) continue;
        for (std::size_t s = 0; s < src.size(); ++s) {
          std::array<int, 4> e = src[s];
          ++e[v];
          const std::size_t d = dst_index.at(e);
          out.at(i * dst.size() + d, j * src.size() + s) += c;
        }
      }
  return out;
}

template <class F>
std::optional<std::size_t> rank_mod(const Matrix<Rational>& M) {
  const Integer p(F::modulus());
  Matrix<F> R(M.rows, M.cols);
  for (std::size_t i = 0; i < M.data.size(); ++i) {
    const Integer num = numerator(M.data[i]) % p;
    const Integer den = denominator(M.data[i]) % p;
    if (den == 0) return std::nullopt;
    R.data[i] = F::from_signed(num.template convert_to<long long>()) /
                F::from_signed(den.template convert_to<long long>());
  }
  return rank(R);
}

// Rank of an exact matrix under the instance's working field. The
// rational path certifies through F_p61: a full modular rank pins the
// rank exactly, anything short falls back to rational elimination. The
// prime-field path reports the mod-q rank; callers re-enter with
// exact_only when an invariant rejects it.
std::size_t rank_in_field(const Matrix<Rational>& M, const std::string& field,
                          bool exact_only = false) {
  if (M.rows == 0 || M.cols == 0) return 0;
  if (!exact_only) {
    if (field == kFieldPrime) {
      if (auto r = rank_mod<Fp31>(M)) return *r;
    } else if (auto r = rank_mod<Fp61>(M)) {
      if (*r == std::min(M.rows, M.cols)) return *r;
    }
  }
  return rank(M);
}

bool composition_is_zero(const LinearFormMatrix& B, const LinearFormMatrix& A) {
  for (std::size_t i = 0; i < B.rows; ++i)
    for (std::size_t c = 0; c < A.cols; ++c)
      for (int u = 0; u < 4; ++u)
        for (int v = u; v < 4; ++v) {
          Rational acc = 0;
          for (std::size_t j = 0; j < B.cols; ++j) {
            acc += B.coeff[u].at(i, j) * A.coeff[v].at(j, c);
            if (u != v) acc += B.coeff[v].at(i, j) * A.coeff[u].at(j, c);
          }
          if (acc != 0) return false;
        }
  return true;
}

// Coefficient matrix of the system B o A = 0 on one column of A: rows
// run over (row of B, quadratic monomial), columns over (row of A,
// variable). Every column of A solves the same system.
Matrix<Rational> composition_system(const LinearFormMatrix& B) {
  const std::size_t k = B.rows;
  const std::size_t w = B.cols;
  Matrix<Rational> S(10 * k, 4 * w);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pair = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u; v < 4; ++v, ++pair)
        for (std::size_t j = 0; j < w; ++j) {
          S.at(i * 10 + pair, j * 4 + v) += B.coeff[u].at(i, j);
          if (u != v) S.at(i * 10 + pair, j * 4 + u) += B.coeff[v].at(i, j);
        }
  }
  return S;
}

long long character_chi(const MonadInstance& M, long long t) {
  return to_long(euler_char(twist(gamma(p3(), M.n, M.k), t, p3()), p3()));
}

struct RankSet {
  long long mu_b = 0;   // B at twist t
  long long mu_a = 0;   // A at twist t
  long long mu_at = 0;  // A^T at twist -4 - t
  long long mu_bt = 0;  // B^T at twist -4 - t
};

CohomologyRow row_from_ranks(const MonadInstance& M, long long t,
                             const RankSet& r) {
  CohomologyRow out;
  out.h0 = M.w * sections(t) - r.mu_b - r.mu_a;
  out.h1 = M.k * sections(t + 1) - r.mu_b;
  out.h2 = M.k * sections(-3 - t) - r.mu_at;
  out.h3 = M.w * sections(-4 - t) - r.mu_at - r.mu_bt;
  return out;
}

// ---- restriction to a line ------------------------------------------

// Forms c0 s + c1 t on the line spanned by two points of P^3.
struct LineForms {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::array<Matrix<Rational>, 2> coeff;
};

Matrix<Rational> transpose_matrix(const Matrix<Rational>& M) {
  Matrix<Rational> out(M.cols, M.rows);
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t j = 0; j < M.cols; ++j) out.at(j, i) = M.at(i, j);
  return out;
}

LineForms restrict_to_line(const LinearFormMatrix& L,
                           const std::array<Rational, 4>& p,
                           const std::array<Rational, 4>& q) {
  return LineForms{L.rows, L.cols, {L.evaluate(p), L.evaluate(q)}};
}

LineForms transpose_line(const LineForms& L) {
  return LineForms{L.cols, L.rows,
                   {transpose_matrix(L.coeff[0]), transpose_matrix(L.coeff[1])}};
}

// Multiplication H^0(O_P1(m))^cols -> H^0(O_P1(m+1))^rows; the degree-m
// basis is s^m, s^(m-1) t, ..., t^m, so multiplying index idx by s keeps
// idx and by t shifts to idx + 1.
Matrix<Rational> line_multiplication(const LineForms& L, long long m) {
  const std::size_t src = m >= 0 ? static_cast<std::size_t>(m + 1) : 0;
  const std::size_t dst = m + 1 >= 0 ? static_cast<std::size_t>(m + 2) : 0;
  Matrix<Rational> out(L.rows * dst, L.cols * src);
  for (std::size_t i = 0; i < L.rows; ++i)
    for (std::size_t j = 0; j < L.cols; ++j)
      for (std::size_t idx = 0; idx < src; ++idx) {
        out.at(i * dst + idx, j * src + idx) += L.coeff[0].at(i, j);
        out.at(i * dst + idx + 1, j * src + idx) += L.coeff[1].at(i, j);
      }
  return out;
}

// h^0 of the line monad's homology twisted by m >= 0: the restricted
// complex has no first cohomology in its outer terms there, so the
// hypercohomology collapses to ker/im of the section-level maps.
long long line_h0(const LineForms& right_map, const LineForms& left_map,
                  long long m, long long w, const std::string& field) {
  const auto mu_right = line_multiplication(right_map, m);
  const auto mu_left = line_multiplication(left_map, m - 1);
  const long long src = m >= 0 ? m + 1 : 0;
  return w * src -
         static_cast<long long>(rank_in_field(mu_right, field)) -
         static_cast<long long>(rank_in_field(mu_left, field));
}

}  // namespace

LinearFormMatrix::LinearFormMatrix(std::size_t r, std::size_t c)
    : rows(r), cols(c) {
  for (auto& m : coeff) m = Matrix<Rational>(r, c);
}

Matrix<Rational> LinearFormMatrix::evaluate(
    const std::array<Rational, 4>& point) const {
  Matrix<Rational> out(rows, cols);
  for (int v = 0; v < 4; ++v) {
    if (point[v] == 0) continue;
    for (std::size_t i = 0; i < rows * cols; ++i)
      out.data[i] += coeff[v].data[i] * point[v];
  }
  return out;
}

LinearFormMatrix LinearFormMatrix::transpose() const {
  LinearFormMatrix out(cols, rows);
  for (int v = 0; v < 4; ++v) out.coeff[v] = transpose_matrix(coeff[v]);
  return out;
}

bool LinearFormMatrix::operator==(const LinearFormMatrix& other) const {
  if (rows != other.rows || cols != other.cols) return false;
  for (int v = 0; v < 4; ++v)
    if (coeff[v].data != other.coeff[v].data) return false;
  return true;
}

MonadInstance sample_monad(long long n, long long k, std::uint64_t seed,
                           const std::string& field) {
  check_field(field);
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (k < (n + 1) / 2)
    throw std::invalid_argument("charge " + std::to_string(k) +
                                " is below ceil(n / 2) = " +
                                std::to_string((n + 1) / 2));
  const long long w = 2 * k + n;
  SeededRng rng(seed);
  constexpr int kMaxAttempts = 16;

  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    MonadInstance M;
    M.n = n;
    M.k = k;
    M.w = w;
    M.seed = seed;
    M.field = field;
    M.attempts = attempt;

    M.B = LinearFormMatrix(static_cast<std::size_t>(k),
                           static_cast<std::size_t>(w));
    for (int v = 0; v < 4; ++v)
      for (auto& entry : M.B.coeff[v].data)
        entry = Rational(rng.int_in(-9, 9));

    const auto basis = kernel_basis(composition_system(M.B));
    if (basis.empty()) continue;

    M.A = LinearFormMatrix(static_cast<std::size_t>(w),
                           static_cast<std::size_t>(k));
    for (std::size_t c = 0; c < M.A.cols; ++c)
      for (const auto& vec : basis) {
        const Rational cb(rng.int_in(-9, 9));
        if (cb == 0) continue;
        for (std::size_t r = 0; r < M.A.rows; ++r)
          for (int v = 0; v < 4; ++v)
            M.A.coeff[v].at(r, c) += cb * vec[r * 4 + v];
      }

    if (validate_monad(M, 50, rng.eng()).ok()) return M;
  }
  throw SamplingExhausted(
      "no valid monad for (n, k) = (" + std::to_string(n) + ", " +
          std::to_string(k) + ") after " + std::to_string(kMaxAttempts) +
          " draws from seed " + std::to_string(seed),
      kMaxAttempts);
}

ValidationReport validate_monad(const MonadInstance& M, int n_points,
                                std::uint64_t point_seed) {
  check_field(M.field);
  ValidationReport rep;
  rep.composition_zero = composition_is_zero(M.B, M.A);
  rep.fibrewise_injective = true;
  rep.fibrewise_surjective = true;

  SeededRng rng(point_seed);
  for (int s = 0; s < n_points; ++s) {
    std::array<Rational, 4> x;
    bool nonzero = false;
    for (auto& c : x) {
      c = Rational(rng.int_in(-99, 99));
      if (c != 0) nonzero = true;
    }
    if (!nonzero) x[0] = 1;
    const std::size_t want = static_cast<std::size_t>(M.k);
    if (rank_in_field(M.A.evaluate(x), M.field) != want)
      rep.fibrewise_injective = false;
    if (rank_in_field(M.B.evaluate(x), M.field) != want)
      rep.fibrewise_surjective = false;
  }
  rep.points_checked = n_points;
  return rep;
}

CohomologyRow monad_cohomology(const MonadInstance& M, long long t) {
  check_field(M.field);
  // The twisted complex is O(t-1)^k -> O(t)^w -> O(t+1)^k, so the left
  // map multiplies sections of degree t - 1; the dual complex sits at
  // twist -4 - t with its own left map one lower still.
  const auto mu_b = multiplication_map(M.B, t);
  const auto mu_a = multiplication_map(M.A, t - 1);
  const auto mu_at = multiplication_map(M.A.transpose(), -4 - t);
  const auto mu_bt = multiplication_map(M.B.transpose(), -5 - t);
  const long long expected = character_chi(M, t);

  const auto assemble = [&](bool exact) {
    RankSet r;
    r.mu_b = static_cast<long long>(rank_in_field(mu_b, M.field, exact));
    r.mu_a = static_cast<long long>(rank_in_field(mu_a, M.field, exact));
    r.mu_at = static_cast<long long>(rank_in_field(mu_at, M.field, exact));
    r.mu_bt = static_cast<long long>(rank_in_field(mu_bt, M.field, exact));
    return row_from_ranks(M, t, r);
  };

  CohomologyRow row = assemble(false);
  if (row.chi() != expected) {
    row = assemble(true);
    if (row.chi() != expected)
      throw std::domain_error(
          "cohomology alternating sum " + std::to_string(row.chi()) +
          " disagrees with the character value " + std::to_string(expected) +
          " at twist " + std::to_string(t) + "; the instance degenerates");
  }
  return row;
}

VanishingReport instanton_vanishing_check(const MonadInstance& M) {
  VanishingReport rep;
  const auto note = [&rep](const std::string& name, long long value) {
    if (value != 0)
      rep.failures.push_back(name + " = " + std::to_string(value));
  };
  const CohomologyRow at_m3 = monad_cohomology(M, -3);
  const CohomologyRow at_m2 = monad_cohomology(M, -2);
  const CohomologyRow at_m1 = monad_cohomology(M, -1);
  note("h1(E(-3))", at_m3.h1);
  note("h0(E(-2))", at_m2.h0);
  note("h1(E(-2))", at_m2.h1);
  note("h2(E(-2))", at_m2.h2);
  note("h3(E(-2))", at_m2.h3);
  note("h2(E(-1))", at_m1.h2);
  rep.passed = rep.failures.empty();
  return rep;
}

bool SplittingType::trivial() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](long long d) { return d == 0; });
}

SplittingType line_splitting(const MonadInstance& M,
                             const std::array<Rational, 4>& p,
                             const std::array<Rational, 4>& q) {
  check_field(M.field);
  Matrix<Rational> span(2, 4);
  for (int v = 0; v < 4; ++v) {
    span.at(0, v) = p[v];
    span.at(1, v) = q[v];
  }
  if (rank(span) != 2)
    throw std::domain_error("line parameterization is degenerate");

  const LineForms a_line = restrict_to_line(M.A, p, q);
  const LineForms b_line = restrict_to_line(M.B, p, q);
  const LineForms a_dual = transpose_line(a_line);  // right map of the dual
  const LineForms b_dual = transpose_line(b_line);  // left map of the dual

  // h^0(E_l(-1)) through the one surviving spectral differential; its
  // matrix is B(q) A(p), and B(p) A(q) is its negative.
  const auto d2 = matrix_product(M.B.evaluate(q), M.A.evaluate(p));
  const long long nu =
      M.k - static_cast<long long>(rank_in_field(d2, M.field));

  // delta(t) = h0(E_l(t)) - h0(E_l(t-1)) counts summands of degree
  // >= -t, so consecutive differences recover the multiplicities of the
  // negative degrees; the dual monad supplies the positive ones.
  const long long cap = 2 * M.k + 4;
  const auto sweep = [&](const LineForms& right, const LineForms& left) {
    std::map<long long, long long> mult;  // keyed by -degree
    long long prev_h0 = nu;
    long long prev_delta = 0;
    long long base = 0;  // delta at t = 0, the count of degrees >= 0
    for (long long t = 0; t <= cap; ++t) {
      const long long h0 = line_h0(right, left, t, M.w, M.field);
      const long long delta = h0 - prev_h0;
      if (t == 0) {
        base = delta;
      } else {
        const long long count = delta - prev_delta;
        if (count < 0)
          throw std::runtime_error(
              "line restriction sweep is not concave at twist " +
              std::to_string(t));
        if (count > 0) mult[t] = count;
      }
      if (delta == M.n) return std::pair(mult, base);
      if (delta > M.n)
        throw std::runtime_error("line restriction sweep overshoots rank");
      prev_h0 = h0;
      prev_delta = delta;
    }
    throw std::runtime_error("line restriction sweep failed to stabilize");
  };

  const auto [neg_mult, neg_base] = sweep(b_line, a_line);
  const auto [pos_mult, pos_base] = sweep(a_dual, b_dual);

  // neg_base = #{a_i >= 0} and pos_base = #{a_i <= 0}.
  std::map<long long, long long> mult;
  for (const auto& [t, count] : neg_mult) mult[-t] = count;
  for (const auto& [t, count] : pos_mult) mult[t] += count;
  const long long zero_count = neg_base + pos_base - M.n;
  if (zero_count < 0)
    throw std::runtime_error("line restriction sweep double-counts degrees");
  if (zero_count > 0) mult[0] = zero_count;

  long long total = 0;
  long long degree_sum = 0;
  long long positive_sum = 0;
  for (const auto& [deg, count] : mult) {
    total += count;
    degree_sum += deg * count;
    if (deg > 0) positive_sum += deg * count;
  }
  if (total != M.n || degree_sum != 0 || positive_sum != nu)
    throw std::runtime_error(
        "recovered splitting multiplicities are inconsistent");

  SplittingType out;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it)
    out.degrees.insert(out.degrees.end(), static_cast<std::size_t>(it->second),
                       it->first);
  return out;
}

namespace {

nlohmann::json forms_to_json(const LinearFormMatrix& L) {
  nlohmann::json j;
  j["rows"] = L.rows;
  j["cols"] = L.cols;
  nlohmann::json coeff = nlohmann::json::array();
  for (int v = 0; v < 4; ++v) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Rational& x : L.coeff[v].data) entries.push_back(to_string(x));
    coeff.push_back(std::move(entries));
  }
  j["coeff"] = std::move(coeff);
  return j;
}

LinearFormMatrix forms_from_json(const nlohmann::json& j) {
  LinearFormMatrix L(j.at("rows").get<std::size_t>(),
                     j.at("cols").get<std::size_t>());
  const auto& coeff = j.at("coeff");
  if (!coeff.is_array() || coeff.size() != 4)
    throw std::invalid_argument("expected four coefficient blocks");
  for (int v = 0; v < 4; ++v) {
    const auto& entries = coeff[v];
    if (entries.size() != L.rows * L.cols)
      throw std::invalid_argument("coefficient block has the wrong size");
    for (std::size_t i = 0; i < entries.size(); ++i)
      L.coeff[v].data[i] = parse_rational(entries[i].get<std::string>());
  }
  return L;
}

}  // namespace

std::string to_json(const MonadInstance& M) {
  nlohmann::json j;
  j["schema"] = "fic-monad/1";
  j["n"] = M.n;
  j["k"] = M.k;
  j["w"] = M.w;
  j["seed"] = M.seed;
  j["field"] = M.field;
  j["attempts"] = M.attempts;
  j["A"] = forms_to_json(M.A);
  j["B"] = forms_to_json(M.B);
  return j.dump();
}

MonadInstance monad_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema").get<std::string>() != "fic-monad/1")
    throw std::invalid_argument("unsupported monad schema");
  MonadInstance M;
  M.n = j.at("n").get<long long>();
  M.k = j.at("k").get<long long>();
  M.w = j.at("w").get<long long>();
  M.seed = j.at("seed").get<std::uint64_t>();
  M.field = j.at("field").get<std::string>();
  M.attempts = j.at("attempts").get<int>();
  check_field(M.field);
  if (M.w != 2 * M.k + M.n)
    throw std::invalid_argument("width disagrees with 2k + n");
  M.A = forms_from_json(j.at("A"));
  M.B = forms_from_json(j.at("B"));
  const auto sz = [](const LinearFormMatrix& L, std::size_t r, std::size_t c) {
    return L.rows == r && L.cols == c;
  };
  if (!sz(M.A, static_cast<std::size_t>(M.w), static_cast<std::size_t>(M.k)) ||
      !sz(M.B, static_cast<std::size_t>(M.k), static_cast<std::size_t>(M.w)))
    throw std::invalid_argument("matrix shapes disagree with (n, k)");
  return M;
}

std::string content_hash(const MonadInstance& M) {
  const std::string dump = to_json(M);
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace fic
