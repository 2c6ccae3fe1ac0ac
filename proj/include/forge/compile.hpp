#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "forge/quant.hpp"

namespace forge::accel {

// On-chip RAM: 34 banks of 2048 lines, 16 bytes per line, split into a
// feature region, a weight region, and a bias region.
struct BankGeometry {
  std::uint32_t bankCount = 34;
  std::uint32_t linesPerBank = 2048;
  std::uint32_t lineBytes = 16;
  std::uint32_t featureBanks = 16;
  std::uint32_t weightBanks = 17;
  std::uint32_t biasBanks = 1;

  std::uint32_t feature_base() const { return 0; }
  std::uint32_t weight_base() const { return featureBanks; }
  std::uint32_t bias_base() const { return featureBanks + weightBanks; }
};

void validate_geometry(const BankGeometry& g);

enum class Opcode : std::uint8_t {
  LOAD = 1,
  CONV = 2,
  ALU = 3,
  STORE = 4,
  END = 5,
};

enum class AluOp : std::uint8_t { MaxPool = 1, Relu = 2 };

// Fixed 24-byte instruction records, opcode byte first, little-endian fields,
// zero padding. CONV/ALU reference shape and requantization parameters via
// layerSlot, an index into the program's layer table.
inline constexpr std::size_t kInstrBytes = 24;

struct Instruction {
  Opcode op{};
  // LOAD / STORE
  std::uint64_t ddrAddr = 0;
  std::uint8_t bankId = 0;
  std::uint16_t bankAddr = 0;
  std::uint32_t lineCount = 0;
  // CONV / ALU
  std::uint8_t aluOp = 0;
  std::uint16_t layerSlot = 0;
  std::uint8_t inBank = 0;
  std::uint16_t inBankAddr = 0;
  std::uint8_t wBank = 0;
  std::uint16_t wBankAddr = 0;
  std::uint8_t bBank = 0;
  std::uint16_t bBankAddr = 0;
  std::uint8_t outBank = 0;
  std::uint16_t outBankAddr = 0;
};

std::array<std::uint8_t, kInstrBytes> encode_instruction(const Instruction& in);
Instruction decode_instruction(const std::uint8_t* rec);

// One row per instruction-bearing model layer (flatten emits nothing).
struct LayerDesc {
  std::uint8_t kind = 0;   // LayerKind
  std::uint8_t aluOp = 0;  // AluOp for ReLU / MaxPool rows
  std::int32_t modelLayer = -1;
  std::uint32_t inH = 0, inW = 0, inC = 0;
  std::uint32_t outH = 0, outW = 0, outC = 0;
  std::uint32_t kh = 0, kw = 0, stride = 1, pad = 0, window = 0;
  std::int32_t p0in = 0, p0w = 0, p0out = 0;
  std::int32_t qminOut = 0, qmaxOut = 0;
  double requantM = 0.0;
  std::uint64_t inputDdr = 0, outputDdr = 0, weightDdr = 0, biasDdr = 0;
  std::uint32_t inLines = 0, outLines = 0, weightLines = 0, biasLines = 0;
};

struct Program {
  BankGeometry geom;
  std::uint64_t modelHash = 0;
  std::uint32_t inputH = 0, inputW = 0, inputC = 0, classCount = 0;
  std::int32_t inputZeroPoint = 0;
  double inputScale = 0.0;  // driver-side input quantization
  double inputAlpha = 0.0, inputBeta = 0.0;
  std::uint8_t inputBits = 8, inputMode = 0;
  std::vector<LayerDesc> layers;
  std::vector<Instruction> instrs;
};

struct Allocation {
  std::string name;
  std::uint64_t addr = 0;
  std::uint32_t byteSize = 0;
  std::uint32_t lineCount = 0;
};

struct DdrImage {
  std::uint64_t baseAddr = 0;
  std::uint32_t lineBytes = 16;
  std::vector<std::uint8_t> bytes;  // offset 0 corresponds to baseAddr
  std::vector<Allocation> allocs;

  std::uint64_t end_addr() const { return baseAddr + bytes.size(); }
  const Allocation* find(const std::string& name) const;
  const Allocation& require(const std::string& name) const;
};

// Places parameter tensors (weights as one byte per code, biases as four),
// the input staging area, and one output region per instruction-bearing
// layer. Every allocation starts on a 16-byte line boundary and is padded to
// whole lines. Layout is a pure function of (model architecture, geometry,
// baseAddr).
DdrImage layout_parameters(const quant::QuantizedModel& qm,
                           const BankGeometry& geom, std::uint64_t baseAddr);

// Schedule per instruction-bearing layer: LOAD input activations (first layer
// reads the staging area, later layers read their predecessor's output
// region), LOAD weights, LOAD bias, CONV or ALU, STORE outputs; END last.
// Weights stream into the weight region at line 0 each layer (banks are
// reused; a transfer may span consecutive banks inside its region). Feature
// traffic uses bank 0 for inputs and bank 1 for outputs.
Program emit_program(const quant::QuantizedModel& qm, const DdrImage& image,
                     const BankGeometry& geom);

// Checks every instruction against the geometry and region discipline;
// throws ConfigError on violation.
void validate_program(const Program& p);

struct ParamLocation {
  std::uint64_t tensorDdrAddr = 0;  // first line of the owning tensor
  std::uint32_t lineOffset = 0;
  std::uint32_t byteOffset = 0;
  std::uint32_t byteLength = 0;  // 1 for weight codes, 4 for bias codes
};

// Maps a flat (weights || bias) parameter index of a model layer to bytes in
// the DDR image.
ParamLocation locate_parameter(const DdrImage& image,
                               const quant::QuantizedModel& qm, int modelLayer,
                               std::size_t flatIndex);

void save_program(const Program& p, const std::string& path);
Program load_program(const std::string& path);
std::vector<std::uint8_t> serialize_program(const Program& p);
Program deserialize_program(const std::vector<std::uint8_t>& bytes);

// Raw bytes at `path` plus a JSON allocation sidecar at `path + ".json"`.
void save_ddr_image(const DdrImage& img, const std::string& path);
DdrImage load_ddr_image(const std::string& path);

}  // namespace forge::accel
