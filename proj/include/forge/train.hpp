#pragma once

#include <cstdint>
#include <functional>

#include "forge/data.hpp"
#include "forge/model.hpp"

namespace forge {

struct TrainConfig {
  int epochs = 15;
  int batchSize = 32;
  // Batch updates are theta <- theta - lr * sum over the batch of per-sample
  // gradients (sum, not mean).
  double lr = 5e-4;
  std::uint64_t seed = 1;
};

// Returns the loss; fills dLogits with the gradient when non-null.
double softmax_cross_entropy(const std::vector<double>& logits, int label,
                             std::vector<double>* dLogits);

// Full-model gradient of the cross-entropy loss for one sample.
ModelGrads sample_gradient(const Model& m, const Tensor& x, int label,
                           double* loss,
                           kernels::Exec exec = kernels::Exec::Serial);

// Plain SGD with seeded shuffling. Batch gradients are accumulated in sample
// index order regardless of thread count, so training is bit-identical
// serial or parallel. Throws StageError if the loss goes non-finite.
void sgd_train(Model& m, const Dataset& train, const TrainConfig& cfg,
               const std::function<void(int, double)>& onEpoch = nullptr);

double evaluate_accuracy(const Model& m, const Dataset& ds);

// Predictions for every sample (parallel across samples, one slot each).
std::vector<int> predict_all(const Model& m, const Dataset& ds);

}  // namespace forge
