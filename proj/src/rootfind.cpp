#include "quatroots/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace quatroots {

namespace {

using cplx = std::complex<double>;

struct HornerResult {
  cplx value;
  cplx derivative;
  double bound;  // sum |a_k| |z|^k, scale of rounding error in value
};

HornerResult horner(const std::vector<double>& a, cplx z) {
  cplx p = a.back(), dp = 0.0;
  double bound = std::abs(a.back());
  const double r = std::abs(z);
  for (auto k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    bound = bound * r + std::abs(a[k]);
  }
  return {p, dp, bound};
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

struct Cluster {
  cplx center;
  int count;
  double spread = 0.0;  // max distance from a member to the center
  double separation = 0.0;
};

// Aberth-Ehrlich on a polynomial with a nonzero constant term.
std::vector<cplx> aberth(const std::vector<double>& a, const RootFinderOptions& options) {
  const std::size_t m = a.size() - 1;
  const double lead = a.back();
  if (m == 1) return {cplx(-a[0] / a[1], 0.0)};

  // Fujiwara bound: every root satisfies |z| <= 2 max |a_{m-k} / a_m|^{1/k},
  // with the constant term halved.
  double radius = 0.0;
  for (std::size_t k = 1; k <= m; ++k) {
    double ratio = std::abs(a[m - k] / lead);
    if (k == m) ratio *= 0.5;
    radius = std::max(radius, std::pow(ratio, 1.0 / static_cast<double>(k)));
  }
  radius *= 2.0;

  std::vector<cplx> z(m);
  const double offset = 0.4;  // breaks the symmetry with the real axis
  for (std::size_t k = 0; k < m; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + offset);

  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(m, false);
  std::vector<cplx> next(m);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < m; ++k) {
      next[k] = z[k];
      if (done[k]) continue;
      auto [p, dp, bound] = horner(a, z[k]);
      if (std::abs(p) <= 4.0 * static_cast<double>(m) * eps * bound) {
        done[k] = true;
        continue;
      }
      cplx sum = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cplx w;
      if (dp == 0.0) {
        w = std::polar(radius * 1e-8, static_cast<double>(k));
      } else {
        cplx ratio = p / dp;
        w = ratio / (1.0 - ratio * sum);
      }
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = std::polar(radius * 1e-8, static_cast<double>(k));
      next[k] = z[k] - w;
      if (std::abs(w) <= options.step_tol * radius)
        done[k] = true;
      else
        all_done = false;
    }
    z.swap(next);
    if (all_done) return z;
  }

  std::vector<double> residuals;
  for (const auto& zk : z) residuals.push_back(std::abs(horner(a, zk).value));
  throw ConvergenceError("root finder failed to converge", z, residuals);
}

// Single-linkage clustering. Two iterates join when they are within the
// radius, taken relative to their own magnitudes, or when their Newton
// inclusion disks (m |P/P'|) overlap.
std::vector<Cluster> cluster(const std::vector<double>& a, const std::vector<cplx>& z, double rel_radius) {
  const std::size_t m = a.size() - 1;
  std::vector<double> inclusion(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    auto [p, dp, bound] = horner(a, z[k]);
    double rho = std::abs(dp) > 0.0 ? static_cast<double>(m) * std::abs(p / dp) : 0.0;
    inclusion[k] = std::isfinite(rho) ? rho : 0.0;
  }

  DisjointSets sets(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double radius = rel_radius * std::max({1.0, std::abs(z[i]), std::abs(z[j])});
      if (std::abs(z[i] - z[j]) <= std::max(radius, inclusion[i] + inclusion[j])) sets.unite(i, j);
    }

  std::vector<Cluster> out;
  std::vector<long> index(z.size(), -1);
  for (std::size_t k = 0; k < z.size(); ++k) {
    auto root = sets.find(k);
    if (index[root] < 0) {
      index[root] = static_cast<long>(out.size());
      out.push_back({0.0, 0});
    }
    auto& c = out[static_cast<std::size_t>(index[root])];
    c.center += z[k];
    ++c.count;
  }
  for (auto& c : out) c.center /= static_cast<double>(c.count);
  for (std::size_t k = 0; k < z.size(); ++k) {
    auto& c = out[static_cast<std::size_t>(index[sets.find(k)])];
    c.spread = std::max(c.spread, std::abs(z[k] - c.center));
  }
  return out;
}

std::vector<double> derivative(const std::vector<double>& a) {
  std::vector<double> d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(static_cast<double>(k) * a[k]);
  return d;
}

// Newton on P^{(mult-1)}, which has a simple root at a root of P of that
// multiplicity. The admissible region is the cluster's neighbourhood widened
// by the Newton inclusion radius but kept within half the distance to the
// nearest other cluster; steps leaving it or not reducing the residual stop
// the iteration.
cplx polish(const std::vector<double>& a, cplx z, int multiplicity, double reach, double separation) {
  std::vector<double> d = a;
  for (int k = 1; k < multiplicity; ++k) d = derivative(d);
  if (d.size() < 2) return z;
  const cplx start = z;
  {
    auto [p, dp, bound] = horner(d, z);
    if (std::abs(dp) > 0.0) reach = std::max(reach, 4.0 * static_cast<double>(d.size() - 1) * std::abs(p / dp));
    reach = std::min(reach, 0.5 * separation);
  }
  double current = std::abs(horner(d, z).value);
  for (int iter = 0; iter < 16 && current > 0.0; ++iter) {
    auto [p, dp, bound] = horner(d, z);
    if (dp == 0.0) break;
    cplx candidate = z - p / dp;
    if (std::abs(candidate - start) > reach) break;
    double next = std::abs(horner(d, candidate).value);
    if (!(next < current)) break;
    z = candidate;
    current = next;
  }
  return z;
}

}  // namespace

double complex_residual(const CentralPoly<double>& P, std::complex<double> z) {
  if (P.coeffs.empty()) return 0.0;
  return std::abs(horner(P.coeffs, z).value);
}

std::vector<ComplexRoot> complex_roots(const CentralPoly<double>& P, const RootFinderOptions& options) {
  if (P.degree() < 1) throw std::invalid_argument("root finding needs a nonconstant polynomial");
  for (double c : P.coeffs)
    if (!std::isfinite(c)) throw std::invalid_argument("polynomial has non-finite coefficients");

  // Exact zero roots are split off before iterating.
  std::size_t zeros = 0;
  while (P.coeffs[zeros] == 0.0) ++zeros;
  std::vector<double> a(P.coeffs.begin() + static_cast<long>(zeros), P.coeffs.end());

  std::vector<ComplexRoot> roots;
  if (zeros > 0) roots.push_back({0.0, 0.0, static_cast<int>(zeros)});
  if (a.size() < 2) return roots;

  auto iterates = aberth(a, options);
  auto clusters = cluster(a, iterates, options.cluster_radius);

  auto real_band = [&](const Cluster& c) { return options.cluster_radius * std::max(1.0, std::abs(c.center)); };

  // Distance from each cluster to its nearest neighbour bounds the polish.
  for (auto& c : clusters) {
    c.separation = std::numeric_limits<double>::infinity();
    for (const auto& o : clusters)
      if (&o != &c) c.separation = std::min(c.separation, std::abs(o.center - c.center));
  }

  std::vector<Cluster> upper, lower;
  for (const auto& c : clusters) {
    // A cluster whose members reach the real axis is a real multiple root.
    if (std::abs(c.center.imag()) <= std::max(real_band(c), c.spread))
      roots.push_back(
          {polish(a, cplx(c.center.real(), 0.0), c.count, std::max(real_band(c), 2.0 * c.spread), c.separation).real(),
           0.0, c.count});
    else
      (c.center.imag() > 0 ? upper : lower).push_back(c);
  }
  if (upper.size() != lower.size())
    throw ConvergenceError("root finder failed to converge (unpaired complex roots)", iterates, {});

  std::vector<bool> used(lower.size(), false);
  for (const auto& u : upper) {
    std::size_t best = lower.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(std::conj(u.center) - lower[j].center);
      if (d < best_dist) best_dist = d, best = j;
    }
    const auto& l = lower[best];
    if (l.count != u.count)
      throw ConvergenceError("root finder failed to converge (mismatched conjugate multiplicities)", iterates, {});
    used[best] = true;
    cplx center = polish(a, {0.5 * (u.center.real() + l.center.real()), 0.5 * (u.center.imag() - l.center.imag())},
                         u.count, std::max(real_band(u), 2.0 * std::max(u.spread, l.spread)),
                         std::min(u.separation, l.separation));
    double re = center.real();
    double im = center.imag();
    roots.push_back({re, im, u.count});
    roots.push_back({re, -im, u.count});
  }

  std::sort(roots.begin(), roots.end(), [](const ComplexRoot& x, const ComplexRoot& y) {
    return x.re != y.re ? x.re < y.re : x.im < y.im;
  });
  return roots;
}

std::vector<ConjClass> cluster_classes(std::span<const ComplexRoot> roots, const Tolerance& tol) {
  std::vector<ConjClass> classes;
  std::vector<bool> consumed(roots.size(), false);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (consumed[k]) continue;
    const auto& r = roots[k];
    consumed[k] = true;
    if (r.im == 0.0) {
      classes.push_back({2.0 * r.re, r.re * r.re, r.multiplicity, true});
      continue;
    }
    // Consume the conjugate partner so each pair yields one class.
    for (std::size_t j = k + 1; j < roots.size(); ++j) {
      if (!consumed[j] && roots[j].re == r.re && roots[j].im == -r.im) {
        consumed[j] = true;
        break;
      }
    }
    ConjClass c{2.0 * r.re, r.re * r.re + r.im * r.im, r.multiplicity, false};
    double scale = std::max({1.0, std::abs(c.t), std::abs(c.n)});
    if (tol.negligible(c.n - 0.25 * c.t * c.t, scale)) {
      c = {2.0 * r.re, r.re * r.re, 2 * r.multiplicity, true};
    }
    classes.push_back(c);
  }

  std::sort(classes.begin(), classes.end(),
            [](const ConjClass& x, const ConjClass& y) { return x.t != y.t ? x.t < y.t : x.n < y.n; });

  std::vector<ConjClass> merged;
  for (const auto& c : classes) {
    bool absorbed = false;
    for (auto& m : merged) {
      double scale = std::max({1.0, std::abs(c.t), std::abs(c.n), std::abs(m.t), std::abs(m.n)});
      if (m.central == c.central && tol.close(m.t, c.t, scale) && tol.close(m.n, c.n, scale)) {
        m.multiplicity += c.multiplicity;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(c);
  }
  return merged;
}

}  // namespace quatroots
