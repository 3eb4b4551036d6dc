#include "mtsi/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace mtsi {

void adam_step(std::vector<ParamRef> params, AdamState& state) {
  if (state.m.empty()) {
    state.m.reserve(params.size());
    state.v.reserve(params.size());
    for (const auto& p : params) {
      state.m.push_back(Eigen::ArrayXd::Zero(p.value.size()));
      state.v.push_back(Eigen::ArrayXd::Zero(p.value.size()));
    }
  }
  if (state.m.size() != params.size())
    throw std::invalid_argument("adam state block count mismatch");

  state.step_count += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, state.step_count);
  const double bc2 = 1.0 - std::pow(state.beta2, state.step_count);
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto& p = params[i];
    if (state.m[i].size() != p.value.size())
      throw std::invalid_argument("adam state shape mismatch for block " + p.name);
    if (!p.grad.allFinite())
      throw std::runtime_error("non-finite gradient in block " + p.name);
    state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * p.grad;
    state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * p.grad.square();
    const Eigen::ArrayXd m_hat = state.m[i] / bc1;
    const Eigen::ArrayXd v_hat = state.v[i] / bc2;
    p.value -= state.lr * m_hat / (v_hat.sqrt() + state.eps);
  }
}

namespace {

inline double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

Eigen::ArrayXd l1_grad(const Eigen::Map<const Eigen::ArrayXd>& params, double l1) {
  if (l1 < 0.0) throw std::invalid_argument("l1 must be nonnegative");
  return l1 * params.unaryExpr([](double x) { return sign_of(x); });
}

void add_l1_grad(const Matrix& params, double l1, Matrix& grad_out) {
  if (l1 == 0.0) return;
  grad_out.array() += l1 * params.array().unaryExpr([](double x) { return sign_of(x); });
}

void add_l1_grad(const Vector& params, double l1, Vector& grad_out) {
  if (l1 == 0.0) return;
  grad_out.array() += l1 * params.array().unaryExpr([](double x) { return sign_of(x); });
}

double l1_penalty(const Matrix& params, double l1) {
  return l1 * params.array().abs().sum();
}

double l1_penalty(const Vector& params, double l1) {
  return l1 * params.array().abs().sum();
}

Vector sample_dropout_mask(Eigen::Index size, double p, Rng& rng, bool training) {
  if (p < 0.0 || p >= 1.0)
    throw std::invalid_argument("dropout probability must be in [0, 1)");
  Vector mask = Vector::Ones(size);
  if (!training || p == 0.0) return mask;
  const double keep_scale = 1.0 / (1.0 - p);
  for (Eigen::Index i = 0; i < size; ++i)
    mask(i) = rng.uniform() < p ? 0.0 : keep_scale;
  return mask;
}

void validate_reg(const RegConfig& reg) {
  if (reg.l1 < 0.0) throw std::invalid_argument("l1 must be nonnegative");
  if (reg.dropout_p < 0.0 || reg.dropout_p > 0.3)
    throw std::invalid_argument("dropout_p must be in [0, 0.3]");
  if (reg.recurrent_dropout_p < 0.0 || reg.recurrent_dropout_p > 0.3)
    throw std::invalid_argument("recurrent_dropout_p must be in [0, 0.3]");
}

GradCheckResult check_gradient_block(const std::function<double()>& loss,
                                     Eigen::Map<Eigen::ArrayXd> param,
                                     const Eigen::Map<const Eigen::ArrayXd>& analytic,
                                     const std::string& name, double step,
                                     GradCheckResult running) {
  if (param.size() != analytic.size())
    throw std::invalid_argument("gradient shape mismatch for block " + name);
  for (Eigen::Index i = 0; i < param.size(); ++i) {
    const double saved = param(i);
    param(i) = saved + step;
    const double up = loss();
    param(i) = saved - step;
    const double down = loss();
    param(i) = saved;
    const double numeric = (up - down) / (2.0 * step);
    const double a = analytic(i);
    const double denom = std::max({std::abs(a), std::abs(numeric), 1e-6});
    const double rel = std::abs(a - numeric) / denom;
    if (rel > running.max_rel_err) {
      running.max_rel_err = rel;
      running.worst_block = name;
      running.worst_index = i;
    }
  }
  return running;
}

}  // namespace mtsi
