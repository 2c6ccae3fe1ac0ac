#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/kernels.hpp"
#include "forge/tensor.hpp"

namespace forge {

enum class LayerKind : std::uint8_t {
  Conv2D = 1,
  ReLU = 2,
  MaxPool2D = 3,
  Flatten = 4,
  Dense = 5,
};

struct Layer {
  LayerKind kind{};

  // Conv2D
  int kh = 0, kw = 0, cin = 0, cout = 0, stride = 1, pad = 0;
  Tensor kernel;  // kh x kw x cin x cout

  // MaxPool2D
  int window = 0;

  // Dense
  int in = 0, out = 0;
  Tensor weights;  // in x out, row-major; column j feeds neuron j

  std::vector<double> bias;  // cout (conv) or out (dense)

  bool has_params() const {
    return kind == LayerKind::Conv2D || kind == LayerKind::Dense;
  }
  // Flat parameter indexing: weights row-major, then bias.
  std::size_t param_count() const;
  double get_param(std::size_t flat) const;
  void set_param(std::size_t flat, double v);
};

struct Model {
  int inputH = 0, inputW = 0, inputC = 0;
  int classCount = 0;
  // Index of the target Dense layer whose outputs are the pre-activations the
  // backdoor machinery selects from. Exactly one Dense layer follows it.
  int penultimateIndex = -1;
  std::vector<Layer> layers;

  int final_dense_index() const;
  const Layer& final_layer() const { return layers[final_dense_index()]; }
  Layer& final_layer() { return layers[final_dense_index()]; }
  std::size_t param_count() const;
};

// Throws std::invalid_argument when the layer chain does not type-check
// against the input shape or the penultimate/final invariants fail.
void validate_model(const Model& m);

struct ForwardCache {
  std::vector<Tensor> outs;  // outs[i] = output activation of layer i
};

// Runs layers [0, upTo]; upTo = -1 means the whole net. Returns the final
// computed activation. All activations are finite or this throws StageError.
Tensor forward(const Model& m, const Tensor& x, ForwardCache* cache = nullptr,
               int upTo = -1,
               kernels::Exec exec = kernels::Exec::Serial);

struct LayerGrads {
  Tensor dWeights;            // kernel or dense weights, empty if no params
  std::vector<double> dBias;  // empty if no params
};

struct ModelGrads {
  std::vector<LayerGrads> layers;

  static ModelGrads zeros_like(const Model& m);
  void accumulate(const ModelGrads& other);
  void scale(double f);
};

// Backpropagates gradAtOut (the gradient at the output of layer fromLayer)
// down to the input. Fills grads for layers [0, fromLayer] and returns the
// input gradient. The cache must come from a forward() over the same x that
// reached at least fromLayer.
Tensor backward_from(const Model& m, const Tensor& x, const ForwardCache& cache,
                     int fromLayer, const Tensor& gradAtOut, ModelGrads* grads,
                     kernels::Exec exec = kernels::Exec::Serial);

int predict(const Model& m, const Tensor& x);  // argmax; ties to lowest index

Model make_tinyvgg(int inputH = 32, int inputW = 32, int inputC = 3,
                   int classCount = 8);
void he_init(Model& m, std::uint64_t seed);

void save_model(const Model& m, const std::string& path);
Model load_model(const std::string& path);
std::vector<std::uint8_t> serialize_model(const Model& m);
Model deserialize_model(const std::vector<std::uint8_t>& bytes);

}  // namespace forge
