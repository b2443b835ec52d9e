#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "wtrees/avsystem.hpp"
#include "wtrees/errors.hpp"

namespace wtrees {

namespace {

using Cx = std::complex<double>;

struct NumericSystem {
  std::vector<double> wk, lk;  // coefficients for the x and y unknowns
  double lconst;
  unsigned m;  // equations and unknowns

  explicit NumericSystem(const AVSystem& sys) {
    for (const auto& k : sys.white_coeffs)
      wk.push_back(numerator(k).convert_to<double>() /
                   denominator(k).convert_to<double>());
    for (const auto& l : sys.black_coeffs)
      lk.push_back(numerator(l).convert_to<double>() /
                   denominator(l).convert_to<double>());
    lconst = numerator(sys.pinned_black_coeff).convert_to<double>() /
             denominator(sys.pinned_black_coeff).convert_to<double>();
    m = sys.equation_count;
  }

  // f_r(z) = sum_a k_a z_a^r - sum_b l_b z_{s1+b}^r - lconst, r = 1..m.
  void residual(const std::vector<Cx>& z, std::vector<Cx>& f) const {
    f.assign(m, Cx(-lconst, 0));
    std::vector<Cx> pw(z.size(), Cx(1, 0));
    for (unsigned r = 0; r < m; ++r) {
      for (size_t a = 0; a < z.size(); ++a) {
        pw[a] *= z[a];
        double sign = a < wk.size() ? 1.0 : -1.0;
        double coef = a < wk.size() ? wk[a] : lk[a - wk.size()];
        f[r] += sign * coef * pw[a];
      }
    }
  }

  void jacobian(const std::vector<Cx>& z, std::vector<std::vector<Cx>>& J) const {
    J.assign(m, std::vector<Cx>(m, Cx(0, 0)));
    std::vector<Cx> pw(z.size(), Cx(1, 0));  // z^(r-1)
    for (unsigned r = 0; r < m; ++r) {
      for (size_t a = 0; a < z.size(); ++a) {
        double sign = a < wk.size() ? 1.0 : -1.0;
        double coef = a < wk.size() ? wk[a] : lk[a - wk.size()];
        J[r][a] = sign * coef * double(r + 1) * pw[a];
        pw[a] *= z[a];
      }
    }
  }
};

double max_norm(const std::vector<Cx>& v) {
  double n = 0;
  for (const auto& c : v) n = std::max(n, std::abs(c));
  return n;
}

// Gaussian elimination with partial pivoting; returns false on a singular
// (to working precision) matrix.
bool lin_solve(std::vector<std::vector<Cx>> A, std::vector<Cx> b,
               std::vector<Cx>& x) {
  size_t n = A.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    if (std::abs(A[piv][col]) < 1e-300) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = col + 1; r < n; ++r) {
      Cx f = A[r][col] / A[col][col];
      for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, Cx(0, 0));
  for (size_t r = n; r-- > 0;) {
    Cx acc = b[r];
    for (size_t c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
    x[r] = acc / A[r][r];
  }
  return true;
}

// One damped Newton run; returns true if it converged below tol.
bool newton(const NumericSystem& sys, std::vector<Cx>& z, double tol,
            unsigned max_iterations) {
  std::vector<Cx> f, delta;
  std::vector<std::vector<Cx>> J;
  sys.residual(z, f);
  double fn = max_norm(f);
  for (unsigned it = 0; it < max_iterations; ++it) {
    if (fn < tol) return true;
    sys.jacobian(z, J);
    if (!lin_solve(J, f, delta)) return false;
    // Step is -delta; halve up to 20 times while the residual would grow.
    double alpha = 1.0;
    std::vector<Cx> znew(z.size());
    std::vector<Cx> fnew;
    double fnnew = 0;
    bool accepted = false;
    for (int halvings = 0; halvings <= 20; ++halvings) {
      for (size_t a = 0; a < z.size(); ++a) znew[a] = z[a] - alpha * delta[a];
      sys.residual(znew, fnew);
      fnnew = max_norm(fnew);
      if (std::isfinite(fnnew) && fnnew < fn) {
        accepted = true;
        break;
      }
      alpha /= 2;
    }
    if (!accepted) return fn < tol;
    z = znew;
    f = fnew;
    fn = fnnew;
  }
  return fn < tol;
}

}  // namespace

std::vector<Solution> solve_multistart(const AVSystem& system, const SolveConfig& cfg) {
  if (system.equation_count == 0) {
    // Single-edge type: nothing to solve, one (empty) solution.
    return {Solution{{}, 0.0}};
  }
  NumericSystem sys(system);
  unsigned n = system.equation_count;

  // All start points come from one seeded stream, so the outcome set is
  // independent of how the starts are later scheduled across threads.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<Cx>> starts(cfg.starts);
  for (auto& z : starts) {
    z.resize(n);
    for (auto& c : z) {
      double r = 3.0 * std::sqrt(unit(rng));
      double th = 2.0 * M_PI * unit(rng);
      c = Cx(0.5 + r * std::cos(th), r * std::sin(th));
    }
  }

  std::vector<char> ok(cfg.starts, 0);
  std::vector<std::vector<Cx>> ends(cfg.starts);
  unsigned jobs = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                  cfg.starts ? cfg.starts : 1));
  auto run_range = [&](unsigned lo, unsigned hi) {
    for (unsigned i = lo; i < hi; ++i) {
      std::vector<Cx> z = starts[i];
      if (newton(sys, z, cfg.tol, cfg.max_iterations)) {
        ok[i] = 1;
        ends[i] = std::move(z);
      }
    }
  };
  if (jobs <= 1 || cfg.starts < 2 * jobs) {
    run_range(0, cfg.starts);
  } else {
    std::vector<std::thread> pool;
    unsigned chunk = (cfg.starts + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(run_range, j * chunk,
                        std::min(cfg.starts, (j + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  // Deterministic merge: sort converged points coordinate-wise, then greedily
  // cluster within the dedup radius (max-norm).
  std::vector<std::vector<Cx>> found;
  for (unsigned i = 0; i < cfg.starts; ++i)
    if (ok[i]) found.push_back(std::move(ends[i]));
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
      if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
    }
    return false;
  });
  std::vector<Solution> out;
  for (const auto& z : found) {
    bool dup = false;
    for (const auto& sol : out) {
      double d = 0;
      for (size_t k = 0; k < z.size(); ++k)
        d = std::max(d, std::abs(z[k] - sol.point[k]));
      if (d < cfg.dedup_radius) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      std::vector<Cx> f;
      sys.residual(z, f);
      out.push_back({z, max_norm(f)});
    }
  }
  if (out.empty() && cfg.starts > 0)
    throw Error(Errc::no_convergence, "no start converged below tolerance");
  return out;
}

}  // namespace wtrees
