#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "forge/data.hpp"
#include "forge/model.hpp"
#include "forge/quant.hpp"
#include "forge/rng.hpp"

namespace forge::lab {

struct Trigger {
  int h = 0, w = 0;      // patch extent
  int row = 0, col = 0;  // top-left corner in the image
  Tensor pixels;         // h x w x C, values in [0,1]
};

// Returns a stamped copy; the original is untouched.
Tensor apply_trigger(const Tensor& image, const Trigger& t);
Dataset apply_trigger_all(const Dataset& ds, const Trigger& t);

// argmax_j sum_i |W[i][j]| over the penultimate dense layer's incoming
// weights; ties break to the lowest index.
int select_neuron_by_connectivity(const Model& m);

// a_j = sum over trigger pixels of |d n_j / d t_i| where n_j is the
// penultimate dense layer's pre-activation on an all-zero image carrying the
// (geometry-only) trigger patch. Ties break to the lowest index.
int select_neuron_adaptive(const Model& m, int h, int w, int row, int col);

// Pre-activation of penultimate neuron `j` on input x.
double target_neuron_activation(const Model& m, const Tensor& x, int j);

struct SynthesisResult {
  Trigger trigger;
  std::vector<double> activations;  // accepted sequence, non-decreasing
  double baseActivation;            // neuron activation on the all-zero image
};

// Gradient ascent on the patch pixels, clamped to [0,1], maximizing the
// chosen neuron's pre-activation over a zero background. A step that fails to
// improve halves stepSize and retries, so the recorded activation sequence is
// non-decreasing. steps = 0 returns the seeded initial patch unchanged.
SynthesisResult synthesize_trigger(const Model& m, int neuron, int h, int w,
                                   int row, int col, int steps,
                                   double stepSize, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Parameter deltas over the final dense layer. Indices are flat row-major
// offsets into (weights || bias).

struct DeltaEntry {
  std::uint32_t index = 0;
  double oldValue = 0.0;
  double newValue = 0.0;
};

enum class DeltaOrder : std::uint8_t { Unsorted = 0, ByMagnitudeDesc = 1 };

struct DeltaSet {
  DeltaOrder order = DeltaOrder::Unsorted;
  std::vector<DeltaEntry> entries;
};

DeltaSet delta_between(const Model& original, const Model& backdoored);
DeltaSet sort_by_magnitude(const DeltaSet& d);  // desc, ties by index asc
// Applies the first k entries (k < 0 means all) to a copy of `original`.
Model apply_delta(const Model& original, const DeltaSet& d, long k = -1);

void save_delta(const DeltaSet& d, const std::string& path);
DeltaSet load_delta(const std::string& path);

void save_trigger(const Trigger& t, const std::string& path);
Trigger load_trigger(const std::string& path);

// ---------------------------------------------------------------------------
// Hard-concrete stochastic gates for the L0 penalty.

struct GateState {
  std::vector<double> logPi;
  double beta = 2.0 / 3.0;
  double gamma = -0.1;
  double zeta = 1.1;

  // u ~ U(0,1); s = sigmoid((ln u - ln(1-u) + logPi)/beta);
  // z = clamp(s*(zeta-gamma)+gamma, 0, 1). One u per gate per call.
  std::vector<double> sample(Rng& rng) const;
  // Expected L0: sum_i sigmoid(logPi_i - beta * ln(-gamma/zeta)).
  double expected_penalty() const;
  double per_gate_penalty(std::size_t i) const;
  std::vector<std::uint8_t> final_mask() const;  // [logPi > 0]
  // Analytic P(z = 1) and P(z = 0) for gate i.
  double prob_one(std::size_t i) const;
  double prob_zero(std::size_t i) const;
  // SGD on logPi: taskGrad is dL/d(effective param), deltaFree the gated
  // magnitudes, z the sample the gradients were computed with.
  void step(const std::vector<double>& taskGrad,
            const std::vector<double>& deltaFree, const std::vector<double>& z,
            double penaltyWeight, double lr);
};

// ---------------------------------------------------------------------------

enum class Penalty : std::uint8_t { None = 0, L0 = 1, L1 = 2, L2 = 3 };

const char* penalty_name(Penalty p);
Penalty penalty_from_name(const std::string& name);

struct ImplantConfig {
  Penalty penalty = Penalty::None;
  double lambda = 0.0;
  double lr = 1e-3;  // batch updates are sum-reduced, like sgd_train
  int epochs = 300;
  int batchSize = 16;
  int sourceClass = 0;
  int targetClass = 1;
  std::uint64_t seed = 1;
  // L0 gate knobs
  double gateBeta = 2.0 / 3.0;
  double gateGamma = -0.1;
  double gateZeta = 1.1;
  double gateLr = 0.05;
  double gateInitLogPi = 2.0;
};

struct ImplantResult {
  Model backdoored;   // original with only the final dense layer retrained
  DeltaSet delta;     // changed final-layer parameters
  double finalLoss = 0.0;
};

// Frozen fine-tuning: every fine-tune image keeps its source label and its
// triggered copy gets the target label; only the final dense layer moves.
// The penalty gradient is analytic for L1/L2 (sign with 0 at 0, 2*delta) and
// runs through hard-concrete gates for L0.
ImplantResult implant_backdoor(const Model& m, const Dataset& fineTune,
                               const Trigger& trigger,
                               const ImplantConfig& cfg);

// ---------------------------------------------------------------------------

struct PruneResult {
  // One row per k = 1..m: (k, triggered success rate, clean accuracy).
  std::vector<std::array<double, 3>> curve;
  int deltaS = 0;
  bool dsrReached = false;
  DeltaSet sorted;
};

PruneResult prune_backdoor(const Model& original, const DeltaSet& delta,
                           const Dataset& cleanTest,
                           const Dataset& sourceHeldout, const Trigger& trigger,
                           int targetClass, double dsr);

// Fraction of trigger-stamped images classified as targetClass.
double success_rate(const Model& m, const Dataset& sourceImages,
                    const Trigger& trigger, int targetClass);

struct BackdoorMetrics {
  double deltaA = 0.0;
  int deltaS = 0;
  bool dsrReached = false;
  std::size_t deltaQ = 0;
  double successRate = 0.0;
  double cleanAccOriginal = 0.0;
  double cleanAccBackdoored = 0.0;
  std::vector<std::array<double, 3>> curve;
};

BackdoorMetrics compute_metrics(const Model& original, const Model& backdoored,
                                const quant::QuantizedModel& quantizedOriginal,
                                const quant::QuantizedModel& quantizedBackdoored,
                                const Dataset& cleanTest,
                                const Dataset& sourceHeldout,
                                const Trigger& trigger, int targetClass,
                                double dsr);

}  // namespace forge::lab
