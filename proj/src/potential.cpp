#include "nanotube/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nanotube {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PotentialSpec PotentialSpec::zero() { return PotentialSpec{}; }

PotentialSpec PotentialSpec::cosine(double amplitude) {
  PotentialSpec p;
  p.kind_ = Kind::Cosine;
  p.amplitude_ = amplitude;
  return p;
}

PotentialSpec PotentialSpec::square_well(double depth, double width) {
  if (!(width > 0.0 && width < 1.0))
    throw std::invalid_argument("square well width must lie in (0,1)");
  PotentialSpec p;
  p.kind_ = Kind::SquareWell;
  p.depth_ = depth;
  p.width_ = width;
  return p;
}

PotentialSpec PotentialSpec::sampled(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("sampled potential needs at least two points");
  if (samples.front().first != 0.0 || samples.back().first != 1.0)
    throw std::invalid_argument("sampled potential must start at x=0 and end at x=1");
  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    if (!(samples[i].first < samples[i + 1].first))
      throw std::invalid_argument("sampled potential x values must be strictly increasing");

  PotentialSpec p;
  p.kind_ = Kind::Sampled;
  p.samples_ = std::move(samples);
  // evenness check at all sample points against the interpolant
  for (const auto& [x, v] : p.samples_) {
    double mirrored = p(1.0 - x);
    if (std::abs(v - mirrored) > 1e-9)
      throw std::invalid_argument(
          "sampled potential violates evenness q0(x)=q0(1-x) at x=" + std::to_string(x));
  }
  return p;
}

PotentialSpec PotentialSpec::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open potential file: " + path);
  std::vector<std::pair<double, double>> samples;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string cells = line;
    std::replace(cells.begin(), cells.end(), ',', ' ');
    std::istringstream ss(cells);
    double x, v;
    if (!(ss >> x >> v)) {
      if (first) { first = false; continue; }  // header
      throw std::runtime_error("malformed potential CSV line: " + line);
    }
    first = false;
    samples.emplace_back(x, v);
  }
  return sampled(std::move(samples));
}

double PotentialSpec::operator()(double x) const {
  if (x < 0.0 || x > 1.0) throw std::domain_error("potential evaluated outside [0,1]");
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Cosine:
      return amplitude_ * std::cos(2.0 * kPi * x);
    case Kind::SquareWell:
      return (std::abs(x - 0.5) <= 0.5 * width_) ? depth_ : 0.0;
    case Kind::Sampled: {
      auto it = std::lower_bound(samples_.begin(), samples_.end(), x,
                                 [](const auto& s, double v) { return s.first < v; });
      if (it == samples_.begin()) return it->second;
      if (it == samples_.end()) return samples_.back().second;
      auto prev = std::prev(it);
      double t = (x - prev->first) / (it->first - prev->first);
      return prev->second + t * (it->second - prev->second);
    }
  }
  return 0.0;
}

std::vector<double> PotentialSpec::breakpoints() const {
  std::vector<double> b;
  if (kind_ == Kind::SquareWell) {
    b.push_back(0.5 - 0.5 * width_);
    b.push_back(0.5 + 0.5 * width_);
  } else if (kind_ == Kind::Sampled) {
    for (std::size_t i = 1; i + 1 < samples_.size(); ++i) b.push_back(samples_[i].first);
  }
  return b;
}

double PotentialSpec::min_value() const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Cosine:
      return -std::abs(amplitude_);
    case Kind::SquareWell:
      return std::min(0.0, depth_);
    case Kind::Sampled: {
      double m = samples_.front().second;
      for (const auto& [x, v] : samples_) m = std::min(m, v);
      return m;
    }
  }
  return 0.0;
}

std::string PotentialSpec::describe() const {
  std::ostringstream ss;
  switch (kind_) {
    case Kind::Zero: ss << "zero"; break;
    case Kind::Cosine: ss << "cosine:" << amplitude_; break;
    case Kind::SquareWell: ss << "well:" << depth_ << ":" << width_; break;
    case Kind::Sampled: ss << "sampled[" << samples_.size() << "]"; break;
  }
  return ss.str();
}

}  // namespace nanotube
