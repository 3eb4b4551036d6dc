#ifndef MTSI_OPTIM_HPP
#define MTSI_OPTIM_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "mtsi/rng.hpp"
#include "mtsi/types.hpp"

namespace mtsi {

/// Flat view over one named parameter block and its gradient. Any contiguous
/// Eigen object (matrix, vector) can back it.
struct ParamRef {
  std::string name;
  Eigen::Map<Eigen::ArrayXd> value;
  Eigen::Map<const Eigen::ArrayXd> grad;
};

template <typename P, typename G>
ParamRef param_ref(std::string name, P& value, const G& grad) {
  return ParamRef{std::move(name),
                  Eigen::Map<Eigen::ArrayXd>(value.data(), value.size()),
                  Eigen::Map<const Eigen::ArrayXd>(grad.data(), grad.size())};
}

/// Adam optimizer state. Moment buffers are allocated on the first step and
/// must keep their shapes afterwards.
struct AdamState {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  long step_count = 0;
  std::vector<Eigen::ArrayXd> m;
  std::vector<Eigen::ArrayXd> v;
};

/// One Adam update over all blocks. Throws when a gradient is non-finite,
/// naming the offending block.
void adam_step(std::vector<ParamRef> params, AdamState& state);

/// L1 subgradient contribution l1 * sign(param) with sign(0) = 0.
Eigen::ArrayXd l1_grad(const Eigen::Map<const Eigen::ArrayXd>& params, double l1);
void add_l1_grad(const Matrix& params, double l1, Matrix& grad_out);
void add_l1_grad(const Vector& params, double l1, Vector& grad_out);

/// Total L1 penalty l1 * sum |param| (used by gradient checks).
double l1_penalty(const Matrix& params, double l1);
double l1_penalty(const Vector& params, double l1);

/// Inverted-dropout mask: entries are 0 with probability p, else 1/(1-p).
/// In evaluation mode (training = false) the mask is all ones regardless of p.
Vector sample_dropout_mask(Eigen::Index size, double p, Rng& rng,
                           bool training = true);

/// Regularization knobs for the denoiser.
struct RegConfig {
  double l1 = 0.0;
  double dropout_p = 0.0;
  double recurrent_dropout_p = 0.0;
  bool use_bias = true;
};
void validate_reg(const RegConfig& reg);

/// Central-difference gradient check shared by the Phi chain, the dropout
/// layer, and the GRU BPTT tests. `loss` must evaluate the objective at the
/// current parameter values; `param` is mutated and restored in place.
struct GradCheckResult {
  double max_rel_err = 0.0;
  std::string worst_block;
  Eigen::Index worst_index = -1;
};

GradCheckResult check_gradient_block(const std::function<double()>& loss,
                                     Eigen::Map<Eigen::ArrayXd> param,
                                     const Eigen::Map<const Eigen::ArrayXd>& analytic,
                                     const std::string& name,
                                     double step = 1e-5,
                                     GradCheckResult running = {});

template <typename P, typename G>
GradCheckResult check_gradient(const std::function<double()>& loss, P& param,
                               const G& analytic, const std::string& name,
                               double step = 1e-5, GradCheckResult running = {}) {
  return check_gradient_block(
      loss, Eigen::Map<Eigen::ArrayXd>(param.data(), param.size()),
      Eigen::Map<const Eigen::ArrayXd>(analytic.data(), analytic.size()), name,
      step, running);
}

}  // namespace mtsi

#endif  // MTSI_OPTIM_HPP
