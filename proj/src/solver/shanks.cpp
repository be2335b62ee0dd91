#include "dikin/solver.hpp"

#include <cmath>

namespace dikin {

const char* to_string(ShanksFallback fallback) {
  return fallback == ShanksFallback::Newest ? "newest" : "oldest";
}

ShanksResult shanks_apply(const Vector& x0, const Vector& x1, const Vector& x2, double tau,
                          ShanksFallback fallback_to) {
  const Vector& keep = fallback_to == ShanksFallback::Newest ? x2 : x0;
  const Eigen::Index n = x0.size();
  ShanksResult out{Vector(n), std::vector<bool>(static_cast<std::size_t>(n), false)};
  for (Eigen::Index j = 0; j < n; ++j) {
    const double first = x0[j] - x1[j];
    const double second = x0[j] - 2.0 * x1[j] + x2[j];
    const double scale = std::abs(x0[j]) + std::abs(x1[j]) + std::abs(x2[j]) + 1.0;
    double b = keep[j];
    bool fallback = std::abs(second) <= tau * scale;
    if (!fallback) {
      b = x0[j] - first * first / second;
      if (!(b > 0.0) || !std::isfinite(b)) {
        b = keep[j];
        fallback = true;
      }
    }
    out.B[j] = b;
    out.fallback_mask[static_cast<std::size_t>(j)] = fallback;
  }
  return out;
}

void ShanksWindow::push(const Vector& x) {
  buffer_.push_back(x);
  if (buffer_.size() > 3) buffer_.pop_front();
}

ShanksResult ShanksWindow::transform(double tau, ShanksFallback fallback) const {
  if (!complete()) {
    const Vector& x = buffer_.back();
    return {x, std::vector<bool>(static_cast<std::size_t>(x.size()), false)};
  }
  return shanks_apply(buffer_[0], buffer_[1], buffer_[2], tau, fallback);
}

}  // namespace dikin
