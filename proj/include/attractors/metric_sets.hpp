#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace attractors {

// A point of the phase space, as a coordinate vector. For the wave model the
// coordinates are energy-normalized Galerkin coefficients (u_1..u_m, v_1..v_m).
using StateVector = std::vector<double>;

bool all_finite(const StateVector& x);

// Distance on coordinate vectors: plain euclidean, or a diagonally weighted
// euclidean norm (used for the energy norm on H^1_0 x L^2 and the weak norm
// L^2 x H^-1 expressed on Galerkin coefficients).
struct MetricSpec {
  enum class Kind { Euclidean, Weighted };
  Kind kind = Kind::Euclidean;
  std::vector<double> weights;  // strictly positive, length dim (Weighted only)

  static MetricSpec euclidean() { return {}; }
  static MetricSpec weighted(std::vector<double> w);

  double dist(const StateVector& a, const StateVector& b) const;
};

// Finite sampling of a bounded set of the phase space.
struct PointCloud {
  std::vector<StateVector> points;
  std::string label;

  PointCloud() = default;
  PointCloud(std::vector<StateVector> pts, std::string lbl = "");

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }

  // nonempty, homogeneous dimension, finite entries
  void validate() const;
};

// sup over x in B of dist(x, C).  Zero iff every point of B occurs in C.
double semidist(const PointCloud& B, const PointCloud& C, const MetricSpec& m);

// max(semidist(B,C), semidist(C,B))
double hausdorff(const PointCloud& B, const PointCloud& C, const MetricSpec& m);

// True iff B lies in the open eps-neighborhood of K, i.e. semidist(B,K) < eps.
bool is_in_eps_neighborhood(const PointCloud& B, const PointCloud& K, double eps,
                            const MetricSpec& m);

// Greedy eps-net of C in input order: a point is taken when its distance to
// every already-taken point is >= eps.  The result M satisfies
// semidist(C,M) < eps and is eps-separated.
PointCloud eps_net(const PointCloud& C, double eps, const MetricSpec& m);

// Largest pairwise distance in C.
double cloud_diameter(const PointCloud& C, const MetricSpec& m);

// Smallest d (up to bisection tolerance tol) such that the greedy cover of C
// by groups of diameter <= d uses at most m_balls groups.  An upper-bound
// proxy for the Kuratowski measure restricted to m_balls-covers; the true
// measure of a finite cloud is of course 0.
double covering_diameter(const PointCloud& C, int m_balls, const MetricSpec& metric,
                         double tol);

}  // namespace attractors
