#ifndef NANOTUBE_GRAPH_ORACLE_HPP
#define NANOTUBE_GRAPH_ORACLE_HPP

#include <array>
#include <string>
#include <vector>

#include "nanotube/dispersion.hpp"
#include "nanotube/hill.hpp"
#include "nanotube/potential.hpp"
#include "nanotube/quasimomentum.hpp"

namespace nanotube {

// periodic equilateral metric graph: vertices in one cell, unit edges with
// integer cell shifts
struct PeriodicGraphConfig {
  struct Edge {
    int u, v;          // vertex indices, edge runs x=0 at u to x=1 at v
    int s1, s2;        // v lives in cell (s1,s2) relative to u's cell
  };
  std::vector<std::string> vertex_names;
  std::vector<Edge> edges;

  std::vector<int> degrees() const;
};

// cell adjacency reproducing the graphyne dispersion cubic
PeriodicGraphConfig graphyne_config();

// det(x*Deg - A(theta)); real because A(theta) is Hermitian
double char_poly(const PeriodicGraphConfig& config, const Theta& theta, double x);

// Bloch Hamiltonian eigenvalues <= lambda_max from a second-order
// finite-difference discretization with points_per_edge interior nodes
std::vector<double> fd_eigenvalues(const PeriodicGraphConfig& config, const Theta& theta,
                                   const PotentialSpec& spec, int points_per_edge,
                                   double lambda_max);

struct DispersionCheckFailure {
  Theta theta;
  double lambda;
  double residual;
};

struct DispersionCheckReport {
  bool pass = true;
  int eigenvalues_checked = 0;
  double worst_residual = 0.0;
  std::vector<DispersionCheckFailure> failures;
};

// every fd eigenvalue at theta in B_p must satisfy D(lambda) ~ 2 F_j(theta)
// for some j, or sit near the Dirichlet spectrum (flat branch)
DispersionCheckReport dispersion_check(const PeriodicGraphConfig& config,
                                       const TubeVector& p, const PotentialSpec& spec,
                                       int theta_samples, int points_per_edge,
                                       double tol, double lambda_max = 10.0);

// edgewise solution alpha*c(x;lambda) + beta*s(x;lambda) on a tube edge
struct EdgeFunction {
  struct Piece {
    int edge;          // config edge index
    int cell1, cell2;  // canonical tube cell of the edge
    double alpha, beta;
  };
  std::vector<Piece> pieces;
};

struct CompactEigenfunctionResult {
  int dimension = 0;
  std::vector<EdgeFunction> basis;
  double constraint_residual = 0.0;  // worst continuity/Kirchhoff violation
};

// nullspace search for compactly supported eigenfunctions on T_p supported on
// `rings` consecutive cell rows around the tube circumference
CompactEigenfunctionResult build_compact_eigenfunction(
    const TubeVector& p, double eta_target, double lambda, int rings,
    const PotentialSpec& spec, const PeriodicGraphConfig& config = graphyne_config());

}  // namespace nanotube

#endif
