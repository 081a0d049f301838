#ifndef NANOTUBE_POTENTIAL_HPP
#define NANOTUBE_POTENTIAL_HPP

#include <string>
#include <utility>
#include <vector>

namespace nanotube {

// Even edge potential q0 on [0,1], q0(x) = q0(1-x).
class PotentialSpec {
public:
  enum class Kind { Zero, Cosine, SquareWell, Sampled };

  static PotentialSpec zero();
  static PotentialSpec cosine(double amplitude);
  // q0 = depth on the window of given width centered at 1/2, 0 outside
  static PotentialSpec square_well(double depth, double width);
  // samples on strictly increasing x, first 0, last 1; evenness enforced
  static PotentialSpec sampled(std::vector<std::pair<double, double>> samples);
  // two-column CSV (x,value), optional header
  static PotentialSpec from_csv(const std::string& path);

  double operator()(double x) const;  // throws std::domain_error off [0,1]

  Kind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double depth() const { return depth_; }
  double width() const { return width_; }
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }

  // interior points where q0 is not smooth; integration grids align on these
  std::vector<double> breakpoints() const;
  double min_value() const;

  std::string describe() const;

private:
  PotentialSpec() = default;
  Kind kind_ = Kind::Zero;
  double amplitude_ = 0.0;
  double depth_ = 0.0;
  double width_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
};

}  // namespace nanotube

#endif
