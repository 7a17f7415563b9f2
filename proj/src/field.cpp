#include "phaseprob/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace phaseprob {

VectorField::VectorField(int degree, std::vector<double> p, std::vector<double> q)
  : degree_(degree), p_(std::move(p)), q_(std::move(q))
{
  if (degree_ < 1)
    throw std::invalid_argument("vector field degree must be >= 1");
  const auto expected = static_cast<std::size_t>(degree_ + 1);
  if (p_.size() != expected || q_.size() != expected)
    throw std::invalid_argument("vector field of degree " + std::to_string(degree_) +
                                " needs " + std::to_string(expected) +
                                " coefficients per component");
}

VectorField VectorField::from_flat(int degree, std::span<const double> coeffs)
{
  if (degree < 1)
    throw std::invalid_argument("vector field degree must be >= 1");
  const auto half = static_cast<std::size_t>(degree + 1);
  if (coeffs.size() != 2 * half)
    throw std::invalid_argument("degree " + std::to_string(degree) + " needs " +
                                std::to_string(2 * half) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  return VectorField(degree,
                     std::vector<double>(coeffs.begin(), coeffs.begin() + half),
                     std::vector<double>(coeffs.begin() + half, coeffs.end()));
}

double VectorField::scale() const
{
  double s = 0.0;
  for (double c : p_) s = std::max(s, std::abs(c));
  for (double c : q_) s = std::max(s, std::abs(c));
  return s;
}

std::vector<double> VectorField::flat() const
{
  std::vector<double> out(p_);
  out.insert(out.end(), q_.begin(), q_.end());
  return out;
}

VectorField VectorField::negated() const
{
  auto p = p_;
  auto q = q_;
  for (auto& c : p) c = -c;
  for (auto& c : q) c = -c;
  return VectorField(degree_, std::move(p), std::move(q));
}

VectorField VectorField::swapped() const
{
  return VectorField(degree_, q_, p_);
}

VectorField VectorField::negated_q() const
{
  auto q = q_;
  for (auto& c : q) c = -c;
  return VectorField(degree_, p_, std::move(q));
}

std::pair<double, double> eval_field(const VectorField& f, double x, double y)
{
  // acc_k = sum_{i<=k} c_i x^(k-i) y^i, so acc_n is the homogeneous form.
  const auto& p = f.p();
  const auto& q = f.q();
  double px = p[0];
  double qx = q[0];
  double ypow = 1.0;
  for (int k = 1; k <= f.degree(); ++k) {
    ypow *= y;
    px = px * x + p[k] * ypow;
    qx = qx * x + q[k] * ypow;
  }
  return {px, qx};
}

VectorField scale_field(const VectorField& f, double lambda)
{
  if (!(lambda > 0.0))
    throw std::invalid_argument("scale factor must be positive");
  auto p = f.p();
  auto q = f.q();
  for (auto& c : p) c *= lambda;
  for (auto& c : q) c *= lambda;
  return VectorField(f.degree(), std::move(p), std::move(q));
}

std::vector<double> parse_coefficients(std::string_view text)
{
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (!token.empty() && token.front() == '+')
      token.remove_prefix(1);
    double value = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, value);
    if (token.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(value))
      throw std::invalid_argument("malformed coefficient '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

std::string format_coefficients(const VectorField& f)
{
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (double c : f.flat()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  return os.str();
}

namespace {
constexpr std::string_view kNames[kPortraitCount] = {
  "L1", "L2", "L3",
  "Q1", "Q2", "Q3", "Q4", "Q5",
  "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9",
};
}

std::string_view to_string(Portrait label)
{
  return kNames[static_cast<int>(label)];
}

int degree_of(Portrait label)
{
  const int i = static_cast<int>(label);
  if (i <= static_cast<int>(Portrait::L3)) return 1;
  if (i <= static_cast<int>(Portrait::Q5)) return 2;
  return 3;
}

std::vector<Portrait> portraits_of_degree(int degree)
{
  std::vector<Portrait> out;
  for (int i = 0; i < kPortraitCount; ++i)
    if (degree_of(static_cast<Portrait>(i)) == degree)
      out.push_back(static_cast<Portrait>(i));
  return out;
}

} // namespace phaseprob
