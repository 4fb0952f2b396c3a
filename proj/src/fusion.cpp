#include "fusionkit/fusion.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "fusionkit/kernels.hpp"

namespace fk {

std::string kind_name(Kind k) { return k == Kind::sl2 ? "sl2" : "sl3"; }

Kind parse_kind(const std::string& s) {
  if (s == "sl2") return Kind::sl2;
  if (s == "sl3") return Kind::sl3;
  throw std::invalid_argument("unknown algebra '" + s + "' (expected sl2 or sl3)");
}

std::vector<Weight> weights(Kind kind, int k) {
  std::vector<Weight> w;
  if (kind == Kind::sl2) {
    for (int n = 0; n <= k; ++n) w.push_back({n, 0});
  } else {
    for (int n = 0; n <= k; ++n)
      for (int p = n; p >= 0; --p) w.push_back({p, n - p});
  }
  return w;
}

int altitude(Kind kind, int k) { return kind == Kind::sl2 ? k + 2 : k + 3; }

std::string weight_label(Kind kind, const Weight& w) {
  if (kind == Kind::sl2) return std::to_string(w.p);
  return "(" + std::to_string(w.p) + "," + std::to_string(w.q) + ")";
}

static void ensure_nonneg(const IMat& M, Kind kind, const Weight& w, bool strict) {
  if (!strict) return;
  auto [i, j] = M.first_negative();
  if (i >= 0)
    throw NotAModule("graph is not a level-k module: negative entry at (" + std::to_string(i) + "," +
                     std::to_string(j) + ") of F_" + weight_label(kind, w));
}

std::vector<IMat> recursion(Kind kind, int k, const IMat& G, bool strict) {
  int r = G.rows;
  std::vector<Weight> ws = weights(kind, k);
  std::map<Weight, int> at;
  for (int i = 0; i < int(ws.size()); ++i) at[ws[i]] = i;
  std::vector<IMat> F(ws.size());
  F[0] = IMat::identity(r);
  if (k == 0) return F;
  if (kind == Kind::sl2) {
    F[1] = G;
    ensure_nonneg(G, kind, ws[1], strict);
    for (int n = 2; n <= k; ++n) {
      F[n] = matmul(F[n - 1], G) - F[n - 2];
      ensure_nonneg(F[n], kind, ws[n], strict);
    }
    return F;
  }
  IMat Gt = G.transpose();
  F[at[{1, 0}]] = G;
  F[at[{0, 1}]] = Gt;
  ensure_nonneg(G, kind, {1, 0}, strict);
  for (int n = 2; n <= k; ++n)
    for (int p = n; p >= 0; --p) {
      int q = n - p;
      IMat M;
      if (p >= 1) {
        M = matmul(F[at[{p - 1, q}]], G);
        if (p >= 2) M -= F[at[{p - 2, q + 1}]];
        if (q >= 1) M -= F[at[{p - 1, q - 1}]];
      } else {
        M = matmul(F[at[{0, q - 1}]], Gt);
        if (q >= 2) M -= F[at[{1, q - 2}]];
      }
      ensure_nonneg(M, kind, {p, q}, strict);
      F[at[{p, q}]] = std::move(M);
    }
  return F;
}

std::vector<IMat> sl2_extended(const IMat& G, int nmax) {
  std::vector<IMat> F;
  F.push_back(IMat::identity(G.rows));
  if (nmax >= 1) F.push_back(G);
  for (int n = 2; n <= nmax; ++n) F.push_back(matmul(F[n - 1], G) - F[n - 2]);
  return F;
}

int FusionSystem::idx(const Weight& w) const {
  auto it = index.find(w);
  if (it == index.end()) throw std::out_of_range("irrep " + weight_label(kind, w) + " not at this level");
  return it->second;
}

static IMat fusion_generator(Kind kind, int k) {
  std::vector<Weight> ws = weights(kind, k);
  std::map<Weight, int> at;
  for (int i = 0; i < int(ws.size()); ++i) at[ws[i]] = i;
  IMat G(int(ws.size()), int(ws.size()));
  for (int i = 0; i < int(ws.size()); ++i) {
    const Weight& w = ws[i];
    std::vector<Weight> nb;
    if (kind == Kind::sl2)
      nb = {{w.p - 1, 0}, {w.p + 1, 0}};
    else
      nb = {{w.p + 1, w.q}, {w.p - 1, w.q + 1}, {w.p, w.q - 1}};
    for (auto& t : nb) {
      auto it = at.find(t);
      if (it != at.end()) G(i, it->second) += 1;
    }
  }
  return G;
}

FusionSystem build_fusion(Kind kind, int k) {
  if (k < 1) throw std::domain_error("build_fusion: level must be at least 1");
  FusionSystem s;
  s.kind = kind;
  s.k = k;
  s.kappa = altitude(kind, k);
  s.irreps = weights(kind, k);
  for (int i = 0; i < s.rank(); ++i) s.index[s.irreps[i]] = i;
  s.N = recursion(kind, k, fusion_generator(kind, k));
  s.conj.resize(s.rank());
  for (int i = 0; i < s.rank(); ++i) {
    Weight w = s.irreps[i];
    s.conj[i] = kind == Kind::sl2 ? i : s.index.at({w.q, w.p});
  }
  return s;
}

namespace {

std::array<double, 3> sl3_coords(double a, double b) {
  return {(2 * a + b) / 3, (b - a) / 3, -(a + 2 * b) / 3};
}

}  // namespace

Eigen::MatrixXcd modular_S(const FusionSystem& sys) {
  int r = sys.rank();
  double kap = sys.kappa;
  Eigen::MatrixXcd S(r, r);
  if (sys.kind == Kind::sl2) {
    for (int m = 0; m < r; ++m)
      for (int n = 0; n < r; ++n)
        S(m, n) = std::sqrt(2.0 / kap) * std::sin(M_PI * (m + 1) * (n + 1) / kap);
    return S;
  }
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  static const int sgn[6] = {1, 1, 1, -1, -1, -1};
  for (int m = 0; m < r; ++m) {
    auto x = sl3_coords(sys.irreps[m].p + 1, sys.irreps[m].q + 1);
    for (int n = 0; n < r; ++n) {
      auto y = sl3_coords(sys.irreps[n].p + 1, sys.irreps[n].q + 1);
      std::complex<double> s = 0;
      for (int w = 0; w < 6; ++w) {
        double dot = 0;
        for (int j = 0; j < 3; ++j) dot += x[perms[w][j]] * y[j];
        s += double(sgn[w]) * std::exp(std::complex<double>(0, -2 * M_PI * dot / kap));
      }
      S(m, n) = s;
    }
  }
  std::complex<double> phase = S(0, 0) / std::abs(S(0, 0));
  S /= phase;
  double norm = S.row(0).norm();
  S /= norm;
  return S;
}

double conformal_weight(const FusionSystem& sys, int i) {
  double kap = sys.kappa;
  const Weight& w = sys.irreps[i];
  if (sys.kind == Kind::sl2) return w.p * (w.p + 2) / (4 * kap);
  return (w.p * w.p + w.q * w.q + w.p * w.q + 3 * w.p + 3 * w.q) / (3 * kap);
}

mpq_class central_charge(Kind kind, int k) {
  mpq_class c = kind == Kind::sl2 ? mpq_class(3 * k, k + 2) : mpq_class(8 * k, k + 3);
  c.canonicalize();
  return c;
}

Eigen::VectorXcd modular_T(const FusionSystem& sys) {
  double c = central_charge(sys.kind, sys.k).get_d();
  Eigen::VectorXcd T(sys.rank());
  for (int i = 0; i < sys.rank(); ++i)
    T(i) = std::exp(std::complex<double>(0, 2 * M_PI * (conformal_weight(sys, i) - c / 24)));
  return T;
}

CycReal quantum_dim(const FusionSystem& sys, int i) {
  const Weight& w = sys.irreps[i];
  int kap = sys.kappa;
  if (sys.kind == Kind::sl2) return qint(w.p + 1, kap);
  return qint(w.p + 1, kap) * qint(w.q + 1, kap) * qint(w.p + w.q + 2, kap) / qint(2, kap);
}

std::vector<CycReal> quantum_dims(const FusionSystem& sys) {
  std::vector<CycReal> mu;
  for (int i = 0; i < sys.rank(); ++i) mu.push_back(quantum_dim(sys, i));
  return mu;
}

CycReal order_A(const FusionSystem& sys) {
  CycReal s(sys.kappa);
  for (auto& m : quantum_dims(sys)) s += m * m;
  return s;
}

double order_A_closed(Kind kind, int k) {
  double kap = altitude(kind, k);
  double sn = std::sin(M_PI / kap), cs = std::cos(M_PI / kap);
  if (kind == Kind::sl2) return kap / 2 / (sn * sn);
  return 3.0 / 256 * kap * kap / (std::pow(sn, 6) * cs * cs);
}

}  // namespace fk
