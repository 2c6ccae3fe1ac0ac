#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/backdoor.hpp"
#include "forge/compile.hpp"
#include "forge/quant.hpp"
#include "forge/trojan.hpp"

namespace forge::pipeline {

struct TriggerGeom {
  int h = 8, w = 8;
  int row = 22, col = 22;
  int synthSteps = 60;
  double synthStepSize = 0.5;
};

struct GridCell {
  lab::Penalty penalty = lab::Penalty::None;
  double lambda = 0.0;
  double tau = 1e-3;  // fine-tune learning rate
  double gateLr = 0.05;
  double gateInitLogPi = 2.0;
};

struct ExperimentConfig {
  std::string outDir;
  std::uint64_t seed = 1;

  int perClassTrain = 500;
  int perClassTest = 125;
  int perClassFineTune = 40;

  std::string arch = "tinyvgg";
  int trainEpochs = 15;
  int trainBatch = 32;
  double trainLr = 5e-4;

  std::vector<TriggerGeom> triggers;
  std::vector<GridCell> grid;
  int implantEpochs = 300;
  int implantBatch = 16;

  int sourceClass = 0;
  int targetClass = 2;
  double dsr = 0.9;
  int deployReplacements = 30;

  int quantBits = 8;
  quant::ZeroPointMode quantMode = quant::ZeroPointMode::Conventional;
  int calibrationSamples = 512;

  accel::BankGeometry geom;
  std::uint64_t ddrBase = 0x10000;
  accel::OverheadCoefficients coeffs;

  // Simulator sweeps and the quantized prune curve use this many test
  // images per cell; -1 means the whole test set.
  int simEvalSamples = 200;
};

ExperimentConfig parse_experiment_config(const std::string& jsonText);
ExperimentConfig load_experiment_config(const std::string& path);

struct CellResult {
  int cell = 0;
  std::string name;
  TriggerGeom trigger;
  GridCell grid;
  bool ok = false;
  std::string error;

  int neuron = -1;
  double cleanAccOriginal = 0, cleanAccBackdoored = 0;
  double deltaA = 0;
  int deltaS = 0;
  bool dsrReached = false;
  std::size_t deltaQ = 0;
  double successRateFloat = 0;       // DSR-pruned float model
  double successRateQuantRecal = 0;  // recalibrated quantization, reference path
  double successRateDeployedRef = 0; // re-encoded deployed model, reference path
  double simSuccessRate = 0;         // trojanized simulator
  double simCleanAccuracy = 0;
  bool simMatchesDeployedRef = false;
  bool simSwapEqualsBackdooredImage = false;
  bool zeroCycleDelta = false;
  std::uint64_t cycleClean = 0, cycleTrojan = 0;
  std::size_t deployedByteDiff = 0;
  std::size_t tpfTargets = 0, tpfLines = 0;
  double relLutPct = 0, relLutRamPct = 0, relFfPct = 0;

  // content hashes, hex
  std::string hashModelBackdoored, hashDelta, hashTrigger, hashQmfPruned,
      hashQmfDeployed, hashDdrBackdoored, hashTpf, hashCurve, hashCurveQuant,
      hashOverheadCurve;
};

struct Report {
  std::string configEcho;  // canonical JSON of the config actually used
  double cleanTestAccuracy = 0;
  double quantTestAccuracy = 0;
  std::string hashModelClean, hashQmfClean, hashDdrClean, hashProgram;
  std::vector<CellResult> cells;
};

// gen-data -> train -> quantize/compile the clean model -> per grid cell:
// select neuron, synthesize trigger, implant, prune, quantize, deploy,
// diff, provision, simulate, estimate overhead. A failing cell records an
// error row; the run continues. Everything under cfg.outDir; rerunning the
// same config writes byte-identical artifacts.
Report run_pipeline(const ExperimentConfig& cfg);

void write_report(const Report& r, const ExperimentConfig& cfg);

}  // namespace forge::pipeline
