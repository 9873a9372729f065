#include "qqpft/params.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qqpft {

namespace {
constexpr double kMinB = 1e-12;

std::vector<double> parse_csv_doubles(const std::string& text, std::size_t expect) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (field.empty()) throw std::invalid_argument("empty field in parameter list: '" + text + "'");
    char* end = nullptr;
    double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0')
      throw std::invalid_argument("malformed number '" + field + "' in parameter list");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expect)
    throw std::invalid_argument("expected " + std::to_string(expect) + " comma-separated values, got " +
                                std::to_string(out.size()));
  return out;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

ParamSet::ParamSet(double a_, double b_, double c_, double d_, double e_)
    : a(a_), b(b_), c(c_), d(d_), e(e_) {
  if (!(std::abs(b) >= kMinB))
    throw std::invalid_argument("invalid parameter set: B != 0 is required");
}

Quaternion kernel(Axis axis, const ParamSet& L, double t, double xi) {
  const double phase = -(L.a * t * t + L.b * t * xi + L.c * xi * xi + L.d * t + L.e * xi);
  return kInvSqrt2Pi * exp_axis(axis, phase);
}

Quaternion conj_kernel(Axis axis, const ParamSet& L, double t, double xi) {
  const double phase = L.a * t * t + L.b * t * xi + L.c * xi * xi + L.d * t + L.e * xi;
  return kInvSqrt2Pi * exp_axis(axis, phase);
}

Quaternion shift_phase(Axis axis, const ParamSet& L, double r, double k, double xi) {
  const double rk = r * k;
  const double theta = -(L.a * rk * rk + L.d * rk + L.b * rk * xi) +
                       4.0 * L.a * L.c * rk * xi / L.b +
                       4.0 * L.a * L.a * L.c * rk * rk / (L.b * L.b) +
                       2.0 * L.a * L.e * rk / L.b;
  return exp_axis(axis, theta);
}

Quaternion wvd_phase(Axis axis, const ParamSet& L, double x, double xi) {
  const double theta = -(4.0 * L.a * x * x - 2.0 * L.b * x * xi - 2.0 * L.d * x +
                         8.0 * L.a * L.c * x * xi / L.b -
                         16.0 * L.a * L.a * L.c * x * x / (L.b * L.b) +
                         4.0 * L.a * L.e * x / L.b);
  return exp_axis(axis, theta);
}

ParamSet scaled_params(const ParamSet& L, double lambda) {
  if (lambda == 0.0) throw std::invalid_argument("scaled_params: lambda must be nonzero");
  return {lambda * lambda * L.a, lambda * L.b, L.c, lambda * L.d, L.e};
}

ParamSet wvd_params(const ParamSet& L) { return {4.0 * L.a, 2.0 * L.b, L.c, 2.0 * L.d, L.e}; }

ParamSet parse_param_set(const std::string& text) {
  auto v = parse_csv_doubles(text, 5);
  return {v[0], v[1], v[2], v[3], v[4]};
}

ParamPair parse_param_pair(const std::string& text) {
  std::size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("expected \"A,B,C,D,E;A,B,C,D,E\", got '" + text + "'");
  return {parse_param_set(text.substr(0, semi)), parse_param_set(text.substr(semi + 1))};
}

std::string format_param_set(const ParamSet& L) {
  return fmt17(L.a) + "," + fmt17(L.b) + "," + fmt17(L.c) + "," + fmt17(L.d) + "," + fmt17(L.e);
}

std::string format_param_pair(const ParamPair& P) {
  return format_param_set(P.l1) + ";" + format_param_set(P.l2);
}

}  // namespace qqpft
