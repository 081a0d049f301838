#include "nanotube/graph_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nanotube {

namespace {
constexpr double kPi = 3.14159265358979323846;
using Complexd = std::complex<double>;
}  // namespace

std::vector<int> PeriodicGraphConfig::degrees() const {
  std::vector<int> deg(vertex_names.size(), 0);
  for (const auto& e : edges) {
    deg.at(e.u)++;
    deg.at(e.v)++;
  }
  return deg;
}

PeriodicGraphConfig graphyne_config() {
  PeriodicGraphConfig cfg;
  cfg.vertex_names = {"A", "B", "C"};
  cfg.edges = {{0, 1, 0, 0}, {0, 1, 1, 0}, {0, 2, 0, 0}, {0, 2, 1, 0}, {1, 2, 0, 1}};
  return cfg;
}

double char_poly(const PeriodicGraphConfig& config, const Theta& theta, double x) {
  const int n = (int)config.vertex_names.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  auto deg = config.degrees();
  for (int i = 0; i < n; ++i) m(i, i) = x * deg[i];
  for (const auto& e : config.edges) {
    Complexd phase = std::exp(Complexd(0.0, e.s1 * theta.t1 + e.s2 * theta.t2));
    m(e.u, e.v) -= phase;
    m(e.v, e.u) -= std::conj(phase);
  }
  return m.determinant().real();
}

std::vector<double> fd_eigenvalues(const PeriodicGraphConfig& config, const Theta& theta,
                                   const PotentialSpec& spec, int points_per_edge,
                                   double lambda_max) {
  if (points_per_edge < 50)
    throw std::invalid_argument("fd_eigenvalues needs points_per_edge >= 50");
  const int nv = (int)config.vertex_names.size();
  const int ne = (int)config.edges.size();
  const int m = points_per_edge;
  const int n = nv + ne * m;
  const double h = 1.0 / (m + 1);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n);

  for (int ei = 0; ei < ne; ++ei) {
    const auto& e = config.edges[ei];
    Complexd phase = std::exp(Complexd(0.0, e.s1 * theta.t1 + e.s2 * theta.t2));
    auto interior = [&](int j) { return nv + ei * m + (j - 1); };  // j in 1..m

    // stiffness of the chain u -- 1 .. m -- v (value at the v end is phase*U_v)
    a(e.u, e.u) += 1.0 / h;
    a(interior(1), interior(1)) += 1.0 / h;
    a(e.u, interior(1)) -= 1.0 / h;
    a(interior(1), e.u) -= 1.0 / h;
    for (int j = 1; j < m; ++j) {
      a(interior(j), interior(j)) += 1.0 / h;
      a(interior(j + 1), interior(j + 1)) += 1.0 / h;
      a(interior(j), interior(j + 1)) -= 1.0 / h;
      a(interior(j + 1), interior(j)) -= 1.0 / h;
    }
    a(interior(m), interior(m)) += 1.0 / h;
    a(e.v, e.v) += 1.0 / h;
    a(interior(m), e.v) -= phase / h;
    a(e.v, interior(m)) -= std::conj(phase) / h;

    // lumped mass and potential
    for (int j = 1; j <= m; ++j) {
      double x = j * h;
      mass(interior(j)) += h;
      a(interior(j), interior(j)) += spec(x) * h;
    }
    mass(e.u) += 0.5 * h;
    a(e.u, e.u) += spec(0.0) * 0.5 * h;
    mass(e.v) += 0.5 * h;
    a(e.v, e.v) += spec(1.0) * 0.5 * h;
  }

  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::runtime_error("non-Hermitian Bloch Hamiltonian assembly");

  Eigen::VectorXd inv_sqrt_mass = mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXcd b =
      inv_sqrt_mass.asDiagonal() * a * inv_sqrt_mass.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b, Eigen::EigenvaluesOnly);

  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    double l = es.eigenvalues()[i];
    if (l <= lambda_max) out.push_back(l);
  }
  return out;
}

DispersionCheckReport dispersion_check(const PeriodicGraphConfig& config,
                                       const TubeVector& p, const PotentialSpec& spec,
                                       int theta_samples, int points_per_edge,
                                       double tol, double lambda_max) {
  auto q = reduce(p);
  auto fam = segments(q);
  int per_seg = std::max(2, (int)std::ceil((double)theta_samples /
                                           std::max<std::size_t>(1, fam.segments.size())));
  std::vector<Theta> thetas;
  for (const auto& seg : fam.segments) {
    if (seg.degenerate) {
      thetas.push_back(lift_to_tube(p, seg.a));
      continue;
    }
    for (const auto& th : sample_segment(seg, per_seg))
      thetas.push_back(lift_to_tube(p, th));
  }

  auto sigma_d = dirichlet_spectrum(spec, lambda_max + 1.0).eigenvalues;

  DispersionCheckReport rep;
  for (const auto& th : thetas) {
    auto roots = solve_F(th);
    auto evs = fd_eigenvalues(config, th, spec, points_per_edge, lambda_max);
    for (double l : evs) {
      double d = discriminant(spec, l);
      double r = std::min({std::abs(d - 2.0 * roots.f1), std::abs(d - 2.0 * roots.f2),
                           std::abs(d - 2.0 * roots.f3)});
      for (double ld : sigma_d) r = std::min(r, std::abs(l - ld));
      rep.eigenvalues_checked++;
      rep.worst_residual = std::max(rep.worst_residual, r);
      if (r > tol) {
        rep.pass = false;
        rep.failures.push_back({th, l, r});
      }
    }
  }
  return rep;
}

namespace {

// ---- tube cell arithmetic -------------------------------------------------

struct Cell {
  int n1, n2;
  bool operator<(const Cell& o) const {
    return n1 != o.n1 || n2 != o.n2 ? (n1 != o.n1 ? n1 < o.n1 : n2 < o.n2) : false;
  }
  bool operator==(const Cell& o) const { return n1 == o.n1 && n2 == o.n2; }
};

struct TubeLattice {
  int p1, p2;       // tube vector
  int g;            // gcd(|p1|,|p2|)
  int u1, u2;       // primitive direction p/g
  int a1, a2;       // axial functional (-p2, p1)/g

  explicit TubeLattice(const TubeVector& p) : p1(p.p1), p2(p.p2) {
    g = std::gcd(std::abs(p1), std::abs(p2));
    u1 = p1 / g;
    u2 = p2 / g;
    a1 = -p2 / g;
    a2 = p1 / g;
  }

  Cell canonical(Cell c) const {
    long s = (long)u1 * c.n1 + (long)u2 * c.n2;
    long period = (long)g * ((long)u1 * u1 + (long)u2 * u2);
    long k = s >= 0 ? s / period : -((-s + period - 1) / period);
    return {c.n1 - (int)(k * p1), c.n2 - (int)(k * p2)};
  }

  int axial(Cell c) const { return a1 * c.n1 + a2 * c.n2; }

  // some lattice cell with axial coordinate r
  Cell ring_base(int r) const {
    // extended gcd for the primitive pair (a1, a2)
    long old_r = a1, rr = a2, old_x = 1, x = 0, old_y = 0, y = 1;
    while (rr != 0) {
      long qq = old_r / rr;
      std::tie(old_r, rr) = std::make_pair(rr, old_r - qq * rr);
      std::tie(old_x, x) = std::make_pair(x, old_x - qq * x);
      std::tie(old_y, y) = std::make_pair(y, old_y - qq * y);
    }
    // old_r = +-1
    long f = (old_r > 0) ? r : -r;
    return canonical({(int)(old_x * f), (int)(old_y * f)});
  }

  std::vector<Cell> ring_cells(int r) const {
    Cell base = ring_base(r);
    std::vector<Cell> cells;
    for (int t = 0; t < g; ++t) {
      Cell c = canonical({base.n1 + t * u1, base.n2 + t * u2});
      if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
    }
    return cells;
  }
};

}  // namespace

CompactEigenfunctionResult build_compact_eigenfunction(
    const TubeVector& p, double eta_target, double lambda, int rings,
    const PotentialSpec& spec, const PeriodicGraphConfig& config) {
  reduce(p);  // validity
  if (rings < 1) throw std::invalid_argument("rings must be positive");
  Monodromy mon = monodromy(spec, lambda);
  if (std::abs(mon.s1p - eta_target) > 1e-8)
    throw std::invalid_argument("lambda does not hit the requested eta target");

  TubeLattice lat(p);

  // ring r is the slab of axial extent [r, r+1]; an edge instance lives in the
  // slab starting at the lower of its two endpoint cells' axial coordinates
  struct EdgeInstance {
    int edge;
    Cell cell;
  };
  int reach = 0;
  for (const auto& e : config.edges)
    reach = std::max(reach, -(lat.a1 * e.s1 + lat.a2 * e.s2));
  std::vector<EdgeInstance> support_edges;
  for (int r = 0; r < rings + reach; ++r)
    for (const Cell& c : lat.ring_cells(r))
      for (int ei = 0; ei < (int)config.edges.size(); ++ei) {
        const auto& e = config.edges[ei];
        int slab = r + std::min(0, lat.a1 * e.s1 + lat.a2 * e.s2);
        if (slab >= 0 && slab < rings) support_edges.push_back({ei, c});
      }

  // vertex instances on the tube: (vertex index, canonical cell)
  struct VertexKey {
    int vertex;
    Cell cell;
    bool operator<(const VertexKey& o) const {
      if (vertex != o.vertex) return vertex < o.vertex;
      return cell < o.cell;
    }
  };
  struct Incidence {
    int edge_instance;  // index into support_edges
    int side;           // 0: x=0 end (vertex u), 1: x=1 end (vertex v)
  };
  std::map<VertexKey, std::vector<Incidence>> incident;
  for (int i = 0; i < (int)support_edges.size(); ++i) {
    const auto& e = config.edges[support_edges[i].edge];
    Cell cu = support_edges[i].cell;
    Cell cv = lat.canonical({cu.n1 + e.s1, cu.n2 + e.s2});
    incident[{e.u, cu}].push_back({i, 0});
    incident[{e.v, cv}].push_back({i, 1});
  }

  auto degrees = config.degrees();
  const int ncols = 2 * (int)support_edges.size();

  // per incidence: endpoint value and outgoing derivative as rows in (alpha,beta)
  auto value_coeffs = [&](const Incidence& inc) {
    return inc.side == 0 ? std::array<double, 2>{1.0, 0.0}
                         : std::array<double, 2>{mon.c1, mon.s1};
  };
  auto flux_coeffs = [&](const Incidence& inc) {
    return inc.side == 0 ? std::array<double, 2>{0.0, 1.0}
                         : std::array<double, 2>{-mon.c1p, -mon.s1p};
  };

  std::vector<Eigen::VectorXd> rows;
  for (const auto& [key, incs] : incident) {
    bool boundary = (int)incs.size() < degrees[key.vertex];
    Eigen::VectorXd flux = Eigen::VectorXd::Zero(ncols);
    for (const auto& inc : incs) {
      auto fc = flux_coeffs(inc);
      flux(2 * inc.edge_instance) += fc[0];
      flux(2 * inc.edge_instance + 1) += fc[1];
    }
    if (boundary) {
      // zero trace: the zero extension outside the support forces value 0
      for (const auto& inc : incs) {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(ncols);
        auto vc = value_coeffs(inc);
        row(2 * inc.edge_instance) = vc[0];
        row(2 * inc.edge_instance + 1) = vc[1];
        rows.push_back(row);
      }
    } else {
      auto vc0 = value_coeffs(incs[0]);
      for (std::size_t i = 1; i < incs.size(); ++i) {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(ncols);
        auto vc = value_coeffs(incs[i]);
        row(2 * incs[0].edge_instance) += vc0[0];
        row(2 * incs[0].edge_instance + 1) += vc0[1];
        row(2 * incs[i].edge_instance) -= vc[0];
        row(2 * incs[i].edge_instance + 1) -= vc[1];
        rows.push_back(row);
      }
    }
    rows.push_back(flux);
  }

  Eigen::MatrixXd mat(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) mat.row(i) = rows[i];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double tol = 1e-8 * std::max(1.0, smax);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;

  CompactEigenfunctionResult res;
  res.dimension = ncols - rank;
  for (int k = rank; k < ncols; ++k) {
    Eigen::VectorXd v = svd.matrixV().col(k);
    res.constraint_residual =
        std::max(res.constraint_residual, (mat * v).cwiseAbs().maxCoeff());
    EdgeFunction fn;
    for (int i = 0; i < (int)support_edges.size(); ++i) {
      const auto& e = config.edges[support_edges[i].edge];
      Cell cu = support_edges[i].cell;
      Cell cv = lat.canonical({cu.n1 + e.s1, cu.n2 + e.s2});
      (void)cv;
      fn.pieces.push_back({support_edges[i].edge, cu.n1, cu.n2, v(2 * i), v(2 * i + 1)});
    }
    res.basis.push_back(std::move(fn));
  }
  return res;
}

}  // namespace nanotube
