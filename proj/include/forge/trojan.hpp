#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "forge/compile.hpp"

namespace forge::accel {

inline constexpr std::uint32_t kTrojanLineBytes = 16;

// One provisioned substitution: when a LOAD's start address equals
// targetDdrAddr, the shift register walks lineMask one bit per transferred
// line and every set bit swaps in the next replacement line.
struct TrojanTarget {
  std::uint64_t targetDdrAddr = 0;
  std::vector<std::uint8_t> lineMask;  // one 0/1 entry per line of the LOAD
  std::vector<std::array<std::uint8_t, kTrojanLineBytes>> replacementLines;
};

struct TrojanConfig {
  std::vector<TrojanTarget> targets;
  bool empty() const { return targets.empty(); }
  std::size_t replacement_line_count() const;
};

// popcount(mask) must equal the replacement count, addresses must be unique
// and line-aligned. Throws TrojanConfigFault.
void validate_trojan_config(const TrojanConfig& cfg);

// The comparator + shift register + MUX. Always active: no external trigger.
// One instance per LOAD engine; reset at CFG entry via at_cfg.
class TrojanHook {
 public:
  explicit TrojanHook(const TrojanConfig* cfg) : cfg_(cfg) {}

  // Address check happens once, when the LOAD FSM latches the instruction.
  // Exact equality on the start address. On a match the mask length must
  // equal the transfer line count.
  void at_cfg(std::uint64_t loadStartDdrAddr, std::uint32_t lineCount);

  // One call per line transfer. Returns true when the line was replaced;
  // outLine always holds the bytes to hand to the write controller.
  bool step(const std::uint8_t* inLine, std::uint8_t* outLine,
            std::uint32_t lineBytes);

  bool armed() const { return active_ != nullptr; }

 private:
  const TrojanConfig* cfg_;
  const TrojanTarget* active_ = nullptr;
  std::size_t shiftPos_ = 0;
  std::size_t replIdx_ = 0;
};

// Diff of two compiled DDR images, expressed as LOAD-addressed substitutions.
// Every differing line must fall inside some LOAD window of the program.
TrojanConfig generate_provisioning(const DdrImage& cleanImage,
                                   const DdrImage& backdooredImage,
                                   const Program& program);

inline constexpr double kBaselineLut = 37379.0;
inline constexpr double kBaselineLutRam = 6440.0;
inline constexpr double kBaselineFf = 90309.0;

// Linear cost model per resource: delta = c0 + perTarget*targets +
// perLine*replacementLines. Model-based estimates, not synthesis results.
struct OverheadCoefficients {
  double lutC0 = 60.0, lutPerTarget = 14.0, lutPerLine = 1.0;
  double lutramC0 = 4.0, lutramPerTarget = 2.0, lutramPerLine = 1.0;
  double ffC0 = 80.0, ffPerTarget = 40.0, ffPerLine = 0.5;
};

OverheadCoefficients load_overhead_coefficients(const std::string& jsonPath);

struct OverheadReport {
  std::size_t targetCount = 0;
  std::size_t replacementLineCount = 0;
  double deltaLut = 0, deltaLutRam = 0, deltaFf = 0;
  double relLutPct = 0, relLutRamPct = 0, relFfPct = 0;
  double baselineLut = kBaselineLut;
  double baselineLutRam = kBaselineLutRam;
  double baselineFf = kBaselineFf;
  OverheadCoefficients coeffs;
};

OverheadReport estimate_overhead(const TrojanConfig& cfg,
                                 const OverheadCoefficients& coeffs = {});

std::vector<std::uint8_t> serialize_trojan(const TrojanConfig& cfg);
TrojanConfig deserialize_trojan(const std::vector<std::uint8_t>& bytes);
void save_trojan(const TrojanConfig& cfg, const std::string& path);
TrojanConfig load_trojan(const std::string& path);

}  // namespace forge::accel
