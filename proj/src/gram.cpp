#include "fusionkit/gram.hpp"

#include "fusionkit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace fk {

namespace {

int64_t isqrt(int64_t m) {
  int64_t r = int64_t(std::sqrt(double(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

struct Search {
  const GramOptions& opt;
  int n;
  IMat R;
  int64_t total = 0, trace = 0;
  std::vector<Column> cols;
  std::vector<std::vector<int>> supps;
  GramResult res;
  int64_t best = -1;
  bool stop = false;

  Search(const GramOptions& o, const IMat& M) : opt(o), n(M.rows), R(M) {
    for (auto x : R.a) total += x;
    trace = R.trace();
  }

  // R -= e e^t on the support; false if anything went negative (change is applied either way)
  bool sub(const Column& e, const std::vector<int>& s) {
    bool ok = true;
    int64_t t = 0;
    for (int i : s) {
      t += e[i];
      trace -= e[i] * e[i];
      for (int j : s) {
        int64_t& r = R(i, j);
        r -= e[i] * e[j];
        if (r < 0) ok = false;
      }
    }
    total -= t * t;
    return ok;
  }
  void add(const Column& e, const std::vector<int>& s) {
    int64_t t = 0;
    for (int i : s) {
      t += e[i];
      trace += e[i] * e[i];
      for (int j : s) R(i, j) += e[i] * e[j];
    }
    total += t * t;
  }

  void push(Column e, std::vector<int> s) {
    cols.push_back(std::move(e));
    supps.push_back(std::move(s));
  }
  void pop() {
    add(cols.back(), supps.back());
    cols.pop_back();
    supps.pop_back();
  }

  bool tick() {
    if (++res.nodes > opt.budget) {
      res.exhausted = true;
      stop = true;
    }
    return !stop;
  }

  void note_residual() {
    if (best < 0 || trace < best) {
      best = trace;
      res.residual = R;
      res.residual_columns = int(cols.size());
    }
  }

  void found() {
    if (opt.accept && !opt.accept(cols)) return;
    res.solutions.push_back(cols);
    if (int(res.solutions.size()) >= opt.max_solutions) stop = true;
  }

  // columns e with e[p] = c, e e^t <= R entrywise
  void branch(int p, int64_t c) {
    std::vector<int> sup;
    for (int q = 0; q < n; ++q)
      if (q != p && R(p, q) > 0 && R(q, q) > 0) sup.push_back(q);
    Column e(n, 0);
    e[p] = c;
    std::vector<int> nz{p};
    enumerate(p, sup, 0, e, nz);
  }

  // diagonal 2 or 3: every column through p has entry 1 there, and together they sum to row p
  void branch_split(int p, int m) {
    std::vector<int> sup;
    for (int q = 0; q < n; ++q)
      if (q != p && R(p, q) > 0) sup.push_back(q);
    std::vector<Column> parts(m, Column(n, 0));
    for (auto& e : parts) e[p] = 1;
    std::vector<int> nz{p};
    std::vector<bool> tied(m, true);  // tied[i]: parts i-1 and i agree so far
    split_rec(p, sup, 0, parts, nz, tied);
  }

  void split_rec(int p, const std::vector<int>& sup, size_t i, std::vector<Column>& parts, std::vector<int>& nz,
                 std::vector<bool>& tied) {
    if (stop) return;
    if (i == sup.size()) {
      if (!tick()) return;
      std::vector<int> s = nz;
      std::sort(s.begin(), s.end());
      bool ok = true;
      for (auto& e : parts) {
        ok = sub(e, s) && ok;
        push(e, s);
      }
      if (ok) dfs();
      for (size_t k = 0; k < parts.size(); ++k) pop();
      return;
    }
    int q = sup[i];
    int m = int(parts.size());
    std::vector<int64_t> v(m, 0);
    // compositions of R(p,q) into m parts, non-increasing across tied neighbours
    std::function<void(int, int64_t, int64_t)> comp = [&](int k, int64_t left, int64_t sq) {
      if (stop) return;
      if (sq > R(q, q)) return;
      if (k == m - 1) {
        v[k] = left;
        if (tied[k] && k > 0 && v[k] > v[k - 1]) return;
        if (sq + left * left > R(q, q)) return;
        for (int j : nz) {
          if (j == p) continue;
          int64_t acc = 0;
          for (int t = 0; t < m; ++t) acc += parts[t][j] * v[t];
          if (acc > R(q, j)) return;
        }
        std::vector<bool> saved = tied;
        for (int t = 0; t < m; ++t) parts[t][q] = v[t];
        for (int t = 1; t < m; ++t) tied[t] = tied[t] && v[t] == v[t - 1];
        nz.push_back(q);
        split_rec(p, sup, i + 1, parts, nz, tied);
        nz.pop_back();
        for (int t = 0; t < m; ++t) parts[t][q] = 0;
        tied = saved;
        tick();
        return;
      }
      int64_t hi = left;
      if (k > 0 && tied[k]) hi = std::min(hi, v[k - 1]);
      for (int64_t x = hi; x >= 0 && !stop; --x) {
        v[k] = x;
        comp(k + 1, left - x, sq + x * x);
      }
    };
    comp(0, R(p, q), 0);
  }

  void enumerate(int p, const std::vector<int>& sup, size_t i, Column& e, std::vector<int>& nz) {
    if (stop) return;
    if (i == sup.size()) {
      if (!tick()) return;
      std::vector<int> s = nz;
      std::sort(s.begin(), s.end());
      bool ok = sub(e, s);
      push(e, s);
      if (ok) dfs();
      pop();
      return;
    }
    int q = sup[i];
    int64_t hi = std::min(R(p, q) / e[p], isqrt(R(q, q)));
    for (int64_t v = hi; v >= 0 && !stop; --v) {
      if (v > 0) {
        bool ok = true;
        for (int j : nz)
          if (j != p && e[j] * v > R(q, j)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        e[q] = v;
        nz.push_back(q);
        enumerate(p, sup, i + 1, e, nz);
        nz.pop_back();
        e[q] = 0;
      } else {
        enumerate(p, sup, i + 1, e, nz);
      }
      if (!tick()) return;
    }
  }

  void dfs() {
    if (!tick()) return;
    size_t mark = cols.size();
    bool ok = true, done = false;
    while (true) {
      if (total == 0) {
        done = true;
        break;
      }
      int p = -1;
      for (int i = 0; i < n; ++i)
        if (R(i, i) == 1) {
          p = i;
          break;
        }
      if (p < 0) break;
      Column e(n, 0);
      std::vector<int> s;
      for (int j = 0; j < n; ++j)
        if (R(p, j)) {
          e[j] = R(p, j);
          s.push_back(j);
        }
      ok = sub(e, s);
      push(std::move(e), std::move(s));
      if (!ok) break;
    }
    if (done) {
      found();
    } else if (ok) {
      note_residual();
      // smallest diagonal, then smallest support
      int p = -1, ps = 0;
      for (int i = 0; i < n; ++i) {
        if (R(i, i) <= 0 || (p >= 0 && R(i, i) > R(p, p))) continue;
        int sz = 0;
        for (int j = 0; j < n; ++j) sz += R(i, j) > 0;
        if (p < 0 || R(i, i) < R(p, p) || sz < ps) {
          p = i;
          ps = sz;
        }
      }
      if (p >= 0 && (R(p, p) == 2 || R(p, p) == 3))
        branch_split(p, int(R(p, p)));
      else if (p >= 0)
        for (int64_t c = isqrt(R(p, p)); c >= 1 && !stop; --c) branch(p, c);
    }
    while (cols.size() > mark) pop();
  }
};

}  // namespace

GramResult gram_factor(const IMat& M, const GramOptions& opt) {
  if (M.rows != M.cols || !M.is_symmetric()) throw std::invalid_argument("gram_factor needs a symmetric matrix");
  if (M.has_negative()) return {};
  int n = M.rows;
  // M_pp = M_pq = M_qq forces e_p = e_q in every column: search on one representative per class
  std::vector<int> cls(n, -1), rep;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = int(rep.size());
    if (M(i, i) > 0)
      for (int j = i + 1; j < n; ++j)
        if (cls[j] < 0 && M(i, j) == M(i, i) && M(j, j) == M(i, i)) cls[j] = cls[i];
    rep.push_back(i);
  }
  int m = int(rep.size());
  IMat Mr(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) Mr(a, b) = M(rep[a], rep[b]);
  auto expand = [&](const Column& c) {
    Column e(n);
    for (int i = 0; i < n; ++i) e[i] = c[cls[i]];
    return e;
  };
  GramOptions o = opt;
  std::vector<std::vector<Column>> full;
  o.accept = [&](const std::vector<Column>& cols) {
    std::vector<Column> f;
    for (auto& c : cols) f.push_back(expand(c));
    // the reduced problem only sees representative entries; recheck the full Gram identity
    IMat V = columns_to_matrix(f, n);
    if (matmul(V, V.transpose()) != M) return false;
    if (opt.accept && !opt.accept(f)) return false;
    full.push_back(std::move(f));
    return true;
  };
  Search s(o, Mr);
  s.dfs();
  GramResult res = std::move(s.res);
  res.solutions = std::move(full);
  if (s.best >= 0 && res.residual.rows == m) {
    IMat R(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) R(i, j) = res.residual(cls[i], cls[j]);
    res.residual = R;
  } else {
    res.residual = M;
  }
  return res;
}

IMat columns_to_matrix(const std::vector<Column>& cols, int n) {
  IMat V(n, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < n; ++i) V(i, j) = cols[j][i];
  return V;
}

}  // namespace fk
