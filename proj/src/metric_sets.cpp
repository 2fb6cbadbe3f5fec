#include "attractors/metric_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace attractors {

bool all_finite(const StateVector& x) {
  for (double c : x)
    if (!std::isfinite(c)) return false;
  return true;
}

MetricSpec MetricSpec::weighted(std::vector<double> w) {
  for (double wi : w)
    if (!(wi > 0.0)) throw std::invalid_argument("metric weights must be positive");
  MetricSpec m;
  m.kind = Kind::Weighted;
  m.weights = std::move(w);
  return m;
}

double MetricSpec::dist(const StateVector& a, const StateVector& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  if (kind == Kind::Weighted && weights.size() != a.size())
    throw std::invalid_argument("metric weight length does not match dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += (kind == Kind::Weighted ? weights[i] : 1.0) * d * d;
  }
  return std::sqrt(s);
}

PointCloud::PointCloud(std::vector<StateVector> pts, std::string lbl)
    : points(std::move(pts)), label(std::move(lbl)) {}

void PointCloud::validate() const {
  if (points.empty()) throw std::invalid_argument("point cloud must be nonempty");
  const std::size_t d = points.front().size();
  if (d == 0) throw std::invalid_argument("point dimension must be >= 1");
  for (const auto& p : points) {
    if (p.size() != d) throw std::invalid_argument("ragged point cloud");
    if (!all_finite(p)) throw std::invalid_argument("non-finite coordinate in cloud");
  }
}

namespace {

double dist_to_cloud(const StateVector& x, const PointCloud& C, const MetricSpec& m) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : C.points) best = std::min(best, m.dist(x, c));
  return best;
}

}  // namespace

double semidist(const PointCloud& B, const PointCloud& C, const MetricSpec& m) {
  B.validate();
  C.validate();
  if (B.dim() != C.dim()) throw std::invalid_argument("cloud dimension mismatch");
  double worst = 0.0;
  for (const auto& b : B.points) worst = std::max(worst, dist_to_cloud(b, C, m));
  return worst;
}

double hausdorff(const PointCloud& B, const PointCloud& C, const MetricSpec& m) {
  return std::max(semidist(B, C, m), semidist(C, B, m));
}

bool is_in_eps_neighborhood(const PointCloud& B, const PointCloud& K, double eps,
                            const MetricSpec& m) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  return semidist(B, K, m) < eps;  // strict: open neighborhood
}

PointCloud eps_net(const PointCloud& C, double eps, const MetricSpec& m) {
  C.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  PointCloud net;
  net.label = C.label;
  for (const auto& p : C.points) {
    bool separated = true;
    for (const auto& q : net.points) {
      if (m.dist(p, q) < eps) {
        separated = false;
        break;
      }
    }
    if (separated) net.points.push_back(p);
  }
  return net;
}

double cloud_diameter(const PointCloud& C, const MetricSpec& m) {
  C.validate();
  double d = 0.0;
  for (std::size_t i = 0; i < C.points.size(); ++i)
    for (std::size_t j = i + 1; j < C.points.size(); ++j)
      d = std::max(d, m.dist(C.points[i], C.points[j]));
  return d;
}

namespace {

// Greedy cover in input order: seed a group at the first uncovered point and
// absorb later uncovered points while the group diameter stays <= d.
int greedy_cover_count(const PointCloud& C, double d, const MetricSpec& m) {
  const std::size_t n = C.points.size();
  std::vector<bool> covered(n, false);
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    ++groups;
    covered[i] = true;
    std::vector<std::size_t> group{i};
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[j]) continue;
      bool fits = true;
      for (std::size_t g : group) {
        if (m.dist(C.points[j], C.points[g]) > d) {
          fits = false;
          break;
        }
      }
      if (fits) {
        covered[j] = true;
        group.push_back(j);
      }
    }
  }
  return groups;
}

}  // namespace

double covering_diameter(const PointCloud& C, int m_balls, const MetricSpec& metric,
                         double tol) {
  C.validate();
  if (m_balls < 1) throw std::invalid_argument("m_balls must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  double hi = cloud_diameter(C, metric);
  if (greedy_cover_count(C, 0.0, metric) <= m_balls) return 0.0;
  double lo = 0.0;  // infeasible; hi always feasible (one group holds everything)
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (greedy_cover_count(C, mid, metric) <= m_balls)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace attractors
