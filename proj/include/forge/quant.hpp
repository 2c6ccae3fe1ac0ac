#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/data.hpp"
#include "forge/model.hpp"

namespace forge::quant {

// Two zero-point conventions. ScaledAlpha derives the offset from the
// product alpha * s, p0 = -floor(alpha * s) - 2^(b-1); it reconstructs
// asymmetric ranges off-center and saturates codes for a < -s when s << 1
// (see unsaturated_low). Conventional is p0 = -floor(alpha / s) - 2^(b-1),
// which keeps the whole [alpha, beta] window addressable. Model-level flows
// that need accuracy should use Conventional and say so.
enum class ZeroPointMode : std::uint8_t { ScaledAlpha = 0, Conventional = 1 };

inline constexpr double kDegenerateRangeEps = 1e-6;

struct QuantParams {
  int bits = 8;
  double alpha = 0.0;
  double beta = 0.0;
  double scale = 0.0;
  int zeroPoint = 0;
  ZeroPointMode mode = ZeroPointMode::ScaledAlpha;

  static QuantParams from_range(double alpha, double beta, int bits,
                                ZeroPointMode mode);

  int qmin() const { return -(1 << (bits - 1)); }
  int qmax() const { return (1 << (bits - 1)) - 1; }

  // clamp(floor(a / scale + zeroPoint), qmin, qmax)
  int quantize(double a) const;
  // (q - zeroPoint) * scale
  double dequantize(int q) const;

  // Bounds of the real interval whose codes do not clip. Within
  // [unsaturated_low, unsaturated_high] the floor round-trip bound
  // a - scale <= dequantize(quantize(a)) <= a holds.
  double unsaturated_low() const;
  double unsaturated_high() const;
};

struct QTensor {
  QuantParams params;
  std::vector<std::int32_t> codes;
};

struct QLayer {
  LayerKind kind{};
  int kh = 0, kw = 0, cin = 0, cout = 0, stride = 1, pad = 0;
  int window = 0;
  int in = 0, out = 0;
  QTensor weights;       // b-bit codes, one byte each in serialized form
  QTensor bias;          // 32-bit codes, scale sw*sx, zero point 0
  QuantParams outParams; // this layer's output activation quantization
  double requantM = 0.0; // (sw*sx)/sout, f64
};

struct QuantizedModel {
  int inputH = 0, inputW = 0, inputC = 0, classCount = 0;
  int penultimateIndex = -1;
  QuantParams inputParams;
  std::vector<QLayer> layers;

  int final_dense_index() const;
};

// Post-training quantization: weight ranges from observed weight min/max,
// activation ranges from a float forward over the calibration set. ReLU,
// MaxPool, and Flatten inherit their input's params (so ReLU is a clamp at
// the zero point in code space and pooling is a max over codes).
QuantizedModel quantize_model(const Model& m, const Dataset& calibration,
                              int bits, ZeroPointMode mode);

struct IntInferenceResult {
  std::vector<std::vector<std::int32_t>> layerOutputs;
  int predicted = -1;
};

// Bit-exact integer reference the accelerator must match: 32-bit signed
// accumulation of (qw - p0w) * (qx - p0x) terms plus the 32-bit bias code,
// then requantize q = clamp(floor(acc * M + p0out)). Throws StageError on
// accumulator overflow.
IntInferenceResult reference_int_inference(const QuantizedModel& qm,
                                           const Tensor& x);

std::vector<std::int32_t> quantize_input(const QuantizedModel& qm,
                                         const Tensor& x);

// Re-encodes m's final dense layer into grid's quantization parameters
// (weight scale/zero point and bias scale stay grid's). This is the
// deployment view: whoever fields the accelerator fixed the grid, so swapped
// parameters must live on it.
QuantizedModel reencode_final_layer(const QuantizedModel& grid,
                                    const Model& m);
IntInferenceResult reference_int_inference_codes(
    const QuantizedModel& qm, const std::vector<std::int32_t>& inputCodes);

// Byte layout of parameter code blobs: weights one byte per code, biases four
// little-endian bytes per code. This is the layout QMF1 and the DDR image
// share, so byte counts here are byte counts everywhere.
std::vector<std::uint8_t> weight_code_bytes(const QTensor& t);
std::vector<std::uint8_t> bias_code_bytes(const QTensor& t);

// Number of differing parameter bytes between two architecture-identical
// quantized models (weights and biases only).
std::size_t diff_quantized_bytes(const QuantizedModel& a,
                                 const QuantizedModel& b);

std::size_t parameter_byte_count(const QuantizedModel& qm);

void save_quantized(const QuantizedModel& qm, const std::string& path);
QuantizedModel load_quantized(const std::string& path);
std::vector<std::uint8_t> serialize_quantized(const QuantizedModel& qm);
QuantizedModel deserialize_quantized(const std::vector<std::uint8_t>& bytes);

}  // namespace forge::quant
