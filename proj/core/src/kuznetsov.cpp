#include "fic/kuznetsov.hpp"

#include "fic/errors.hpp"
#include "fic/instanton.hpp"
#include "fic/registry.hpp"

#include "fic_embedded_data.hpp"
#include "nlohmann/json.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fic {

ProductClass operator+(const ProductClass& A, const ProductClass& B) {
  return ProductClass{A.alpha + B.alpha, A.beta + B.beta, A.s + B.s};
}

ProductClass operator-(const ProductClass& A, const ProductClass& B) {
  return ProductClass{A.alpha - B.alpha, A.beta - B.beta, A.s - B.s};
}

ProductClass operator*(const Rational& t, const ProductClass& A) {
  return ProductClass{t * A.alpha, t * A.beta, t * A.s};
}

ProductClass pmul(const ProductClass& A, const ProductClass& B,
                  const FanoData& X, const Rational& eta_sq) {
  // pt . pt = 0 on the curve side; eta . even = 0 except against the unit;
  // eta . eta = eta_sq * (p (x) pt), landing in beta's point component.
  ProductClass out;
  out.alpha = mul(A.alpha, B.alpha, X);
  out.beta = mul(A.alpha, B.beta, X) + mul(A.beta, B.alpha, X);
  out.beta.c += A.s * B.s * eta_sq;
  out.s = A.s * B.alpha.r + B.s * A.alpha.r;
  return out;
}

ProductClass pdual(const ProductClass& A) {
  // beta sits one step deeper in codimension than alpha, so its dual picks
  // up the opposite sign; eta has even total degree.
  return ProductClass{dual_ch(A.alpha), -dual_ch(A.beta), A.s};
}

ProductClass p_pull(const ChowClass& A) {
  return ProductClass{A, ChowClass{}, 0};
}

ProductClass q_pull(const Rational& rank, const Rational& degree) {
  return ProductClass{rank * unit_class(), degree * unit_class(), 0};
}

std::pair<Rational, Rational> q_push(const ProductClass& A) {
  return {A.alpha.c, A.beta.c};
}

namespace {

std::string lower_name(const std::string& name) {
  std::string out = name;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string render_pair(const std::pair<Rational, Rational>& p) {
  return "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
}

ChowClass parse_class(const nlohmann::json& arr) {
  if (!arr.is_array() || arr.size() != 4)
    throw std::runtime_error("character entries must be [r, a, b, c]");
  return ChowClass{parse_rational(arr[0].get<std::string>()),
                   parse_rational(arr[1].get<std::string>()),
                   parse_rational(arr[2].get<std::string>()),
                   parse_rational(arr[3].get<std::string>())};
}

std::map<std::string, UniversalSheafData> parse_rows() {
  const auto doc = nlohmann::json::parse(embedded::kUniversalSheavesJson);
  if (doc.at("schema").get<std::string>() != "fic-universal/1")
    throw std::runtime_error("unexpected universal sheaf data schema");
  std::map<std::string, UniversalSheafData> rows;
  for (const auto& [name, r] : doc.at("sheaves").items()) {
    UniversalSheafData D;
    D.name = name;
    D.curve_genus = r.at("curve_genus").get<int>();
    D.curve_genus_derived = r.at("curve_genus_derived").get<bool>();
    D.rank = r.at("rank").get<long long>();
    D.c1_h = r.at("c1").at("h").get<long long>();
    D.c1_pt = r.at("c1").at("pt").get<long long>();
    D.c2_l = r.at("c2").at("l").get<long long>();
    D.c2_hpt = r.at("c2").at("h_pt").get<long long>();
    D.c2_eta = r.at("c2").at("eta").get<long long>();
    D.c3_p = r.at("c3").at("p").get<long long>();
    D.c3_lpt = r.at("c3").at("l_pt").get<long long>();
    D.eta_sq_magnitude = r.at("eta_sq_magnitude").get<long long>();
    const auto& comp = r.at("companion");
    D.companion.name = comp.at("name").get<std::string>();
    D.companion.rank = comp.value("rank", 0ll);
    D.companion.status = comp.at("status").get<std::string>();
    if (comp.contains("ch")) D.companion.ch = parse_class(comp.at("ch"));
    D.source = r.at("source").get<std::string>();
    rows.emplace(name, std::move(D));
  }
  return rows;
}

}  // namespace

KuznetsovEngine::KuznetsovEngine() : rows_(parse_rows()) {}

bool KuznetsovEngine::has_data(const FanoData& X) const {
  return rows_.count(X.name) != 0;
}

const UniversalSheafData& KuznetsovEngine::data(const FanoData& X) const {
  auto it = rows_.find(X.name);
  if (it == rows_.end())
    throw std::invalid_argument("no universal sheaf data for " + X.name);
  return it->second;
}

ChowClass KuznetsovEngine::fiber_character(const FanoData& X) const {
  const UniversalSheafData& D = data(X);
  // Restriction to X x {point} keeps the X-side Chern components only.
  return ch_from_chern(ChernClasses{D.rank, D.c1_h, D.c2_l, D.c3_p}, X);
}

ProductClass KuznetsovEngine::character_with_sign(const UniversalSheafData& D,
                                                  const FanoData& X,
                                                  int sign) const {
  const Rational eta_sq = Rational(sign) * D.eta_sq_magnitude;
  auto mulp = [&](const ProductClass& A, const ProductClass& B) {
    return pmul(A, B, X, eta_sq);
  };
  const ProductClass c1{ChowClass{0, D.c1_h, 0, 0},
                        ChowClass{D.c1_pt, 0, 0, 0}, 0};
  const ProductClass c2{ChowClass{0, 0, D.c2_l, 0},
                        ChowClass{0, D.c2_hpt, 0, 0}, D.c2_eta};
  const ProductClass c3{ChowClass{0, 0, 0, D.c3_p},
                        ChowClass{0, 0, D.c3_lpt, 0}, 0};
  const ProductClass c1_2 = mulp(c1, c1);
  const ProductClass c1_3 = mulp(c1_2, c1);
  const ProductClass c1_4 = mulp(c1_3, c1);
  // Newton relations up to degree four; c4 of every displayed sheaf is 0.
  const ProductClass ch2 = Rational(1, 2) * (c1_2 - Rational(2) * c2);
  const ProductClass ch3 =
      Rational(1, 6) * (c1_3 - Rational(3) * mulp(c1, c2) + Rational(3) * c3);
  const ProductClass ch4 =
      Rational(1, 24) * (c1_4 - Rational(4) * mulp(c1_2, c2) +
                         Rational(4) * mulp(c1, c3) + Rational(2) * mulp(c2, c2));
  return p_pull(Rational(D.rank) * unit_class()) + c1 + ch2 + ch3 + ch4;
}

ProductClass KuznetsovEngine::universal_character(const FanoData& X) const {
  const UniversalSheafData& D = data(X);
  return character_with_sign(D, X, eta_sign());
}

long long KuznetsovEngine::phi_rank(const FanoData& X, long long n,
                                    long long k) const {
  if (k < 1) throw std::invalid_argument("phi_rank needs k >= 1");
  const ChowClass v = fiber_character(X);
  const ChowClass tw = twist(gamma(X, n, k), X.r_twist(), X);
  return to_long(-euler_pair(v, tw, X));
}

std::pair<Rational, Rational> KuznetsovEngine::grr_with_sign(
    const FanoData& X, long long n, long long k, int sign) const {
  const UniversalSheafData& D = data(X);
  const Rational eta_sq = Rational(sign) * D.eta_sq_magnitude;
  const ProductClass chE = character_with_sign(D, X, sign);
  const ProductClass omega = q_pull(1, 2 * D.curve_genus - 2);
  ProductClass acc = p_pull(twist(gamma(X, n, k), X.r_twist(), X));
  acc = pmul(acc, pdual(chE), X, eta_sq);
  acc = pmul(acc, omega, X, eta_sq);
  acc = pmul(acc, p_pull(X.todd()), X, eta_sq);
  const auto [rank, degree] = q_push(acc);
  return {-rank, -degree};
}

int KuznetsovEngine::eta_sign() const {
  if (!sign_) throw UncalibratedSign("eta^2 sign not calibrated");
  return *sign_;
}

DeviationRecord KuznetsovEngine::calibrate() {
  const FanoData Y4 = Registry::builtin().by_name("Y4");
  const std::pair<long long, long long> probes[] = {{1, 1}, {2, 3}, {3, 5}};
  std::string expected, fitted;
  int chosen = 0;
  for (int sign : {+1, -1}) {
    bool ok = true;
    std::string shown;
    for (const auto& [n, k] : probes) {
      const auto row = grr_with_sign(Y4, n, k, sign);
      if (!shown.empty()) shown += "; ";
      shown += render_pair(row);
      ok = ok && row.first == Rational(k) && row.second == 0;
    }
    if (ok) {
      if (chosen != 0)
        throw std::logic_error("both eta^2 signs reproduce the Y4 row");
      chosen = sign;
      fitted = shown;
    }
  }
  if (chosen == 0)
    throw std::logic_error("no eta^2 sign reproduces the Y4 row");
  sign_ = chosen;
  for (const auto& [n, k] : probes) {
    if (!expected.empty()) expected += "; ";
    expected += render_pair({Rational(k), Rational(0)});
  }
  return audit("grr-calibration-y4", "Y4 | k | 0", expected, fitted,
               "eta^2 sign fixed to " + std::to_string(chosen) +
                   " on probes (n,k) = (1,1), (2,3), (3,5)",
               "calibration");
}

std::pair<Rational, Rational> KuznetsovEngine::grr_image(const FanoData& X,
                                                         long long n,
                                                         long long k) const {
  if (k < 1) throw std::invalid_argument("grr_image needs k >= 1");
  return grr_with_sign(X, n, k, eta_sign());
}

DeviationRecord KuznetsovEngine::resolution_character_check(
    const FanoData& X, long long n, long long k) const {
  const UniversalSheafData& D = data(X);
  const std::string claim = "resolution-" + lower_name(X.name);
  if (D.companion.status == "skip") {
    return skip(claim, D.source,
                "companion character unpublished; resolution identity "
                "skipped");
  }
  const long long kmin = std::max<long long>(1, min_charge(X, n).k0);
  if (k < kmin)
    throw std::invalid_argument("resolution check on " + X.name +
                                " needs k >= " + std::to_string(kmin));
  const ChowClass tw = twist(gamma(X, n, k), X.r_twist(), X);
  const ChowClass fex = *D.companion.ch;
  Rational e = euler_pair(tw, fex, X);
  if (e < 0) e = -e;
  const ChowClass extension = tw + e * dual_ch(fex);

  const auto [r_curve, d_curve] = grr_image(X, n, k);
  const ProductClass chE = universal_character(X);
  const ChowClass pushed =
      r_curve * chE.beta +
      (d_curve + r_curve * Rational(1 - D.curve_genus)) * chE.alpha;

  std::ostringstream note;
  note << "e = " << to_string(e) << "; concentration degree "
       << 1 + X.r_twist() << "; companion " << D.companion.name << " at (n="
       << n << ",k=" << k << ")";
  return audit(claim,
               "0 -> ext^(1+r)(E(r), F)^* (x) F^* -> Phi(F) -> E(r) -> 0",
               to_string(extension), to_string(pushed), note.str(),
               "display");
}

std::vector<DeviationRecord> KuznetsovEngine::universal_fiber_checks(
    const FanoData& X) const {
  const UniversalSheafData& D = data(X);
  std::vector<DeviationRecord> out;
  if (X.name == "Y4") {
    const ChowClass v = fiber_character(X);
    const Rational chi = euler_char(v, X);
    out.push_back(audit("universal-fiber-y4",
                        "0 -> E_y(-1) -> H^0(E_y) (x) O -> E_y -> 0",
                        to_string(chi * unit_class()),
                        to_string(twist(v, -1, X) + v),
                        "chi(E_y) = " + to_string(chi) + " sections",
                        "display"));
  } else if (X.name == "X9") {
    const ChowClass conic{0, 0, 2, 0};
    const ChowClass implied =
        dual_ch(*D.companion.ch) - unit_class() + conic;
    out.push_back(audit("universal-fiber-x9",
                        "0 -> O -> U^* -> E_y -> O_C -> 0",
                        to_string(implied), to_string(fiber_character(X)),
                        "O_C = (0, 0, 2, 0) the character of a conic; curve "
                        "genus derived by degree-genus",
                        "display"));
  } else if (X.name == "X10") {
    out.push_back(skip("universal-fiber-x10", D.source,
                       "fiber resolution needs ambient tautological data "
                       "that is not published"));
  }
  return out;
}

}  // namespace fic
