#include "fusionkit/exactnum.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fk {

using QPoly = std::vector<mpq_class>;

struct FieldData {
  int kappa = 0;
  int deg = 0;
  QPoly mod;  // monic, size deg+1
  mpf_class beta_hp{0, 320};
};

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division by a monic polynomial
ZPoly zdiv_exact(ZPoly a, const ZPoly& m) {
  size_t dm = m.size() - 1;
  if (a.size() < m.size()) return {};
  ZPoly q(a.size() - dm, 0);
  for (size_t i = a.size(); i-- > dm;) {
    mpz_class t = a[i];
    if (t == 0) continue;
    q[i - dm] = t;
    for (size_t j = 0; j <= dm; ++j) a[i - dm + j] -= t * m[j];
  }
  ztrim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division not exact");
  ztrim(q);
  return q;
}

std::mutex g_mu;
std::map<int, ZPoly> g_cyclo;
std::map<int, std::shared_ptr<const FieldData>> g_fields;

ZPoly cyclotomic_locked(int n) {
  auto it = g_cyclo.find(n);
  if (it != g_cyclo.end()) return it->second;
  ZPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = zdiv_exact(p, cyclotomic_locked(d));
  g_cyclo[n] = p;
  return p;
}

ZPoly minpoly_locked(int kappa) {
  ZPoly phi = cyclotomic_locked(2 * kappa);
  int m = (int(phi.size()) - 1) / 2;
  // write z^-m * Phi(z) as a polynomial in x = z + 1/z
  std::vector<mpz_class> work = phi;  // coefficient of z^i
  ZPoly psi(m + 1, 0);
  for (int j = m; j >= 0; --j) {
    mpz_class b = work[m + j];
    psi[j] = b;
    if (b == 0) continue;
    mpz_class binom = 1;
    for (int i = 0; i <= j; ++i) {
      work[m + j - 2 * i] -= b * binom;
      binom = binom * (j - i) / (i + 1);
    }
  }
  return psi;
}

std::shared_ptr<const FieldData> field(int kappa) {
  if (kappa < 2) throw std::domain_error("kappa must be at least 2");
  std::lock_guard<std::mutex> lk(g_mu);
  auto it = g_fields.find(kappa);
  if (it != g_fields.end()) return it->second;
  auto f = std::make_shared<FieldData>();
  f->kappa = kappa;
  ZPoly mp = minpoly_locked(kappa);
  f->deg = int(mp.size()) - 1;
  for (auto& c : mp) f->mod.emplace_back(c);
  mpf_class x(2.0 * std::cos(M_PI / kappa), 320);
  for (int it2 = 0; it2 < 12 && f->deg > 1; ++it2) {
    mpf_class p(0, 320), dp(0, 320);
    for (int i = f->deg; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + mpf_class(mp[i], 320);
    }
    if (dp == 0) break;
    x -= p / dp;
  }
  if (f->deg == 1) x = mpf_class(-mp[0], 320);
  f->beta_hp = x;
  g_fields[kappa] = f;
  return f;
}

QPoly reduce(QPoly p, const FieldData& f) {
  int d = f.deg;
  for (int i = int(p.size()) - 1; i >= d; --i) {
    mpq_class t = p[i];
    if (t == 0) continue;
    for (int j = 0; j <= d; ++j) p[i - d + j] -= t * f.mod[j];
  }
  p.resize(d, 0);
  return p;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() > 0 ? a.size() + b.size() - 1 : 0, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

// a = q*b + r
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  int db = int(b.size()) - 1;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int i = int(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    mpq_class t = a[i] / b[db];
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  trim(a);
  r = a;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class zlcm(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// positive g with a/g, b/g coprime integers
mpq_class qgcd(const mpq_class& a, const mpq_class& b) {
  if (a == 0 && b == 0) return 1;
  mpz_class n = zgcd(a.get_num(), b.get_num());
  mpz_class d = zlcm(a.get_den(), b.get_den());
  mpq_class g(n, d);
  g.canonicalize();
  return g;
}

// N = s^2 * d with d squarefree (best effort on large inputs)
void split_square(mpz_class n, mpz_class& s, mpz_class& d) {
  s = 1;
  for (unsigned long p = 2; p < 200000 && mpz_class(p) * p <= n; ++p) {
    mpz_class p2 = mpz_class(p) * p;
    while (n % p2 == 0) {
      n /= p2;
      s *= p;
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    s *= r;
    n = 1;
  }
  d = n;
}

struct Quad {
  mpq_class a, c;  // a + c*sqrt(d)
  mpz_class d = 1;
};

std::vector<int> galois_reps(int kappa) {
  std::vector<int> js;
  for (int j = 1; j < kappa; ++j)
    if (std::gcd(j, 2 * kappa) == 1) js.push_back(j);
  return js;
}

bool quad_parts(const CycReal& x, Quad& out) {
  if (x.is_rational()) {
    out.a = x.rational();
    out.c = 0;
    out.d = 1;
    return true;
  }
  for (int j : galois_reps(x.kappa())) {
    CycReal y = x.galois(j);
    if (y == x) continue;
    CycReal two(x.kappa(), 2L);
    CycReal u = (x + y) / two, w = (x - y) / two;
    CycReal t = w * w;
    if (!u.is_rational() || !t.is_rational()) return false;
    mpq_class tq = t.rational();
    mpz_class pq = tq.get_num() * tq.get_den(), s, d;
    split_square(pq, s, d);
    out.a = u.rational();
    out.c = mpq_class(s, tq.get_den());
    out.c.canonicalize();
    if (w.sign() < 0) out.c = -out.c;
    out.d = d;
    return true;
  }
  return false;
}

std::string sqrt_str(const mpz_class& d) { return "√" + d.get_str(); }

// a + c*sqrt(d) without pulling out a common factor
std::string quad_plain(const Quad& q) {
  std::string s;
  if (q.d == 1 || q.c == 0) return rational_string(q.a + (q.d == 1 ? q.c : mpq_class(0)));
  if (q.a != 0) s = rational_string(q.a);
  mpq_class ac = abs(q.c);
  if (q.c < 0)
    s += "-";
  else if (!s.empty())
    s += "+";
  if (ac != 1) s += rational_string(ac);
  s += sqrt_str(q.d);
  return s;
}

std::string quad_factored(const Quad& q) {
  if (q.d == 1 || q.c == 0) return quad_plain(q);
  mpq_class g = qgcd(q.a, q.c);
  if (q.a == 0) return quad_plain(q);
  Quad r{q.a / g, q.c / g, q.d};
  if (g == 1) return quad_plain(r);
  return rational_string(g) + "(" + quad_plain(r) + ")";
}

bool quad_integral(const Quad& q) { return q.a.get_den() == 1 && q.c.get_den() == 1; }

}  // namespace

ZPoly cyclotomic(int n) {
  std::lock_guard<std::mutex> lk(g_mu);
  return cyclotomic_locked(n);
}

ZPoly minpoly(int kappa) {
  if (kappa < 2) throw std::domain_error("minpoly: kappa must be at least 2");
  std::lock_guard<std::mutex> lk(g_mu);
  return minpoly_locked(kappa);
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

std::string zpoly_string(const ZPoly& p, const std::string& var) {
  std::string s;
  for (int i = int(p.size()) - 1; i >= 0; --i) {
    if (p[i] == 0) continue;
    mpz_class a = abs(p[i]);
    if (s.empty())
      s += p[i] < 0 ? "-" : "";
    else
      s += p[i] < 0 ? " - " : " + ";
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) s += var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

CycReal::CycReal(int kappa) : f_(field(kappa)), c_(f_->deg, 0) {}

CycReal::CycReal(int kappa, long n) : CycReal(kappa) { c_[0] = n; }

CycReal::CycReal(int kappa, const mpq_class& q) : CycReal(kappa) {
  c_[0] = q;
  c_[0].canonicalize();
}

CycReal CycReal::beta(int kappa) {
  CycReal x(kappa);
  QPoly p{0, 1};
  x.c_ = reduce(p, *x.f_);
  return x;
}

CycReal CycReal::from_coeffs(int kappa, std::vector<mpq_class> c) {
  CycReal x(kappa);
  for (auto& q : c) q.canonicalize();  // callers may hand in num/den pairs
  x.c_ = reduce(std::move(c), *x.f_);
  return x;
}

int CycReal::kappa() const { return f_ ? f_->kappa : 0; }
int CycReal::degree() const { return f_ ? f_->deg : 0; }

void CycReal::check_same(const CycReal& o) const {
  if (!f_ || !o.f_) throw std::domain_error("uninitialised CycReal");
  if (f_->kappa != o.f_->kappa)
    throw std::domain_error("CycReal kappa mismatch: " + std::to_string(f_->kappa) + " vs " +
                            std::to_string(o.f_->kappa));
}

bool CycReal::is_zero() const {
  for (auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycReal::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycReal::rational() const {
  if (!is_rational()) throw std::domain_error("CycReal is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

CycReal CycReal::operator-() const {
  CycReal r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycReal& CycReal::operator+=(const CycReal& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycReal& CycReal::operator-=(const CycReal& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycReal& CycReal::operator*=(const CycReal& o) {
  check_same(o);
  c_ = reduce(qmul(c_, o.c_), *f_);
  return *this;
}

CycReal& CycReal::operator/=(const CycReal& o) { return *this *= o.inverse(); }

bool CycReal::operator==(const CycReal& o) const {
  check_same(o);
  return c_ == o.c_;
}

CycReal CycReal::inverse() const {
  if (!f_) throw std::domain_error("uninitialised CycReal");
  if (is_zero()) throw std::domain_error("division by zero in CycReal");
  QPoly r0 = f_->mod, r1 = c_, s0{0}, s1{1};
  trim(r1);
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  mpq_class g = r0[0];
  for (auto& c : s0) c /= g;
  CycReal out(f_->kappa);
  out.c_ = reduce(s0, *f_);
  return out;
}

CycReal CycReal::pow(unsigned e) const {
  CycReal r(kappa(), 1L), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

CycReal CycReal::galois(int j) const {
  int kap = kappa();
  if (std::gcd(j, 2 * kap) != 1) throw std::domain_error("galois index must be coprime to 2*kappa");
  CycReal b = beta(kap);
  CycReal t0(kap, 2L), t1 = b;
  for (int n = 1; n < j; ++n) {
    CycReal t2 = b * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  CycReal img = j == 0 ? t0 : t1;
  CycReal r(kap);
  for (int i = int(c_.size()) - 1; i >= 0; --i) r = r * img + CycReal(kap, c_[i]);
  return r;
}

static mpf_class eval_hp(const FieldData& f, const std::vector<mpq_class>& c) {
  mpf_class v(0, 320);
  for (int i = int(c.size()) - 1; i >= 0; --i) v = v * f.beta_hp + mpf_class(c[i], 320);
  return v;
}

double CycReal::to_double() const {
  if (!f_) return 0;
  return eval_hp(*f_, c_).get_d();
}

int CycReal::sign() const {
  if (is_zero()) return 0;
  return sgn(eval_hp(*f_, c_));
}

std::string CycReal::decimal(int digits) const { return decimal_string(to_double(), digits); }

std::string CycReal::poly_string() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class a = abs(c_[i]);
    if (s.empty())
      s += c_[i] < 0 ? "-" : "";
    else
      s += c_[i] < 0 ? " - " : " + ";
    if (i == 0)
      s += rational_string(a);
    else {
      if (a != 1) s += rational_string(a) + "*";
      s += "b";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string CycReal::radical_string() const {
  if (!f_) return "";
  if (is_rational()) return rational_string(rational());
  // orbit size under the Galois group decides the shape
  std::vector<CycReal> orbit;
  for (int j : galois_reps(kappa())) {
    CycReal y = galois(j);
    bool seen = false;
    for (auto& o : orbit)
      if (o == y) seen = true;
    if (!seen) orbit.push_back(y);
    if (orbit.size() > 4) return "";
  }
  Quad q;
  if (orbit.size() == 2) return quad_parts(*this, q) ? quad_factored(q) : "";
  if (orbit.size() != 4) return "";
  // preferred radicand: the quadratic field reached from beta by angle doubling
  long pref = 0;
  CycReal x = CycReal::beta(kappa());
  for (int i = 0; i < 16 && !x.is_rational(); ++i, x = x * x - CycReal(kappa(), 2L)) {
    Quad qx;
    if (quad_parts(x, qx)) {
      pref = qx.d.get_si();
      break;
    }
  }
  std::string best;
  std::pair<bool, long> best_key{true, 0};
  CycReal two(kappa(), 2L);
  for (int j : galois_reps(kappa())) {
    CycReal y = galois(j);
    if (y == *this || y.galois(j) != *this) continue;
    CycReal u = (*this + y) / two, w = (*this - y) / two, t = w * w;
    Quad qu, qt;
    if (!quad_parts(u, qu) || !quad_parts(t, qt)) continue;
    if (qu.c != 0 && qt.c != 0 && qu.d != qt.d) continue;
    mpz_class g = 1;
    if (quad_integral(qu) && quad_integral(qt)) {
      mpq_class cu = qgcd(qu.a, qu.c), ct = qgcd(qt.a, qt.c);
      mpz_class cuz = cu.get_num(), ctz = ct.get_num();
      for (mpz_class cand = 1; cand <= cuz; ++cand)
        if (cuz % cand == 0 && ctz % (cand * cand) == 0) g = cand;
    }
    Quad U{qu.a / g, qu.c / g, qu.d};
    mpq_class g2(g * g);
    Quad T{qt.a / g2, qt.c / g2, qt.d};
    std::string inner = (U.a == 0 && U.c == 0) ? "" : quad_plain(U);
    std::string root = "√(" + quad_factored(T) + ")";
    if (w.sign() < 0)
      inner += "-" + root;
    else
      inner += (inner.empty() ? "" : "+") + root;
    std::string s = g == 1 ? inner : g.get_str() + "(" + inner + ")";
    long d = (qu.c != 0 ? qu.d : qt.d).get_si();
    std::pair<bool, long> key{d != pref, d};
    if (best.empty() || s.size() < best.size() || (s.size() == best.size() && key < best_key)) {
      best = s;
      best_key = key;
    }
  }
  return best;
}

std::string CycReal::pretty(int digits) const {
  std::string r = radical_string();
  std::string d = decimal(digits);
  if (r.empty()) return poly_string() + " ≈ " + d;
  if (is_rational()) return r;
  return r + " ≈ " + d;
}

CycReal qint(long n, int kappa) {
  if (kappa < 2) throw std::domain_error("qint: kappa must be at least 2");
  if (n < 0) throw std::domain_error("qint: n must be nonnegative");
  CycReal b = CycReal::beta(kappa);
  CycReal a0(kappa), a1(kappa, 1L);
  if (n == 0) return a0;
  for (long i = 1; i < n; ++i) {
    CycReal a2 = b * a1 - a0;
    a0 = a1;
    a1 = a2;
  }
  return a1;
}

CycReal arith(const CycReal& a, const CycReal& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return a;
}

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

std::string decimal_string(double v, int digits) {
  if (std::isnan(v)) return "nan";
  double r = std::round(v);
  if (std::fabs(v - r) < 1e-9 * std::max(1.0, std::fabs(v)) && std::fabs(v) < 1e15) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(0) << r;
    return os.str();
  }
  int intdigits = v == 0 ? 1 : std::max(1, int(std::floor(std::log10(std::fabs(v)))) + 1);
  int dec = std::max(digits - intdigits, 0);
  if (std::fabs(v) < 1) dec = digits;
  std::ostringstream os;
  os << std::fixed << std::setprecision(dec) << v;
  std::string s = os.str();
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace fk
