#pragma once

#include <cstdint>
#include <vector>

#include "forge/compile.hpp"
#include "forge/trojan.hpp"

namespace forge::accel {

// Declared cycle constants. One cycle per transferred 16-byte line plus a
// fixed dispatch cost per instruction; compute engines are functional blocks
// with fixed latencies. Only relative statements (added cycles) are meant to
// be read off these numbers.
inline constexpr std::uint64_t kDispatchCycles = 1;
inline constexpr std::uint64_t kCyclesPerLine = 1;
inline constexpr std::uint64_t kConvLatency = 8;
inline constexpr std::uint64_t kAluLatency = 4;

struct OnChipRam {
  BankGeometry geom;
  std::vector<std::uint8_t> bytes;
  std::vector<std::uint8_t> written;  // per line

  explicit OnChipRam(const BankGeometry& g);

  std::size_t line_index(std::uint32_t bankId, std::uint32_t bankAddr) const;
  void write_line(std::uint32_t bankId, std::uint32_t bankAddr,
                  const std::uint8_t* line);
  // Throws UninitializedReadError on a never-written line.
  const std::uint8_t* read_line(std::uint32_t bankId,
                                std::uint32_t bankAddr) const;
};

enum class LoadFsmPhase : std::uint8_t { Idle, Cfg, Parse, Send, Done };

struct TraceRecord {
  std::uint32_t instrIndex = 0;
  std::uint64_t ddrAddr = 0;
  std::uint8_t bankId = 0;
  std::uint16_t bankAddr = 0;
  bool substituted = false;
};

// The memory-reader FSM. Legal phase walk: Idle -> Cfg -> (Parse <-> Send)*
// -> Done -> Idle; one Parse+Send pair per line. Destination cursors
// auto-increment and carry into the next bank of the same region.
class LoadFsm {
 public:
  LoadFsm(OnChipRam& ram, TrojanHook& hook) : ram_(ram), hook_(hook) {}

  void configure(const Instruction& load);  // Idle -> Cfg (arms the hook)
  bool transfer_pending() const { return done_ < lineCount_; }
  // One line: fetch from ddr, run the hook, write via the write controller.
  TraceRecord step(const std::vector<std::uint8_t>& ddr,
                   std::uint64_t ddrBase);
  void finish();  // -> Done -> Idle; faults when transfers remain

  LoadFsmPhase phase() const { return phase_; }
  std::uint8_t bank_cursor() const { return bankCursor_; }
  std::uint16_t addr_cursor() const { return addrCursor_; }

 private:
  OnChipRam& ram_;
  TrojanHook& hook_;
  LoadFsmPhase phase_ = LoadFsmPhase::Idle;
  std::uint64_t srcAddr_ = 0;
  std::uint8_t bankCursor_ = 0;
  std::uint16_t addrCursor_ = 0;
  std::uint32_t lineCount_ = 0;
  std::uint32_t done_ = 0;
};

struct SimResult {
  bool hasOutput = false;
  int predictedClass = -1;
  // One entry per program layer slot (see Program::layers), in slot order.
  std::vector<std::vector<std::int32_t>> layerOutputs;
  std::uint64_t cycleCount = 0;
  std::vector<TraceRecord> trace;  // filled when tracing is on
};

// Executes the instruction stream against a private copy of the DDR image
// with inputCodes staged into the input region. The CONV/ALU engines are an
// independent implementation of the integer semantics the quantizer's
// reference defines; tests compare the two bit-exactly.
SimResult run_program(const Program& p, const DdrImage& image,
                      const std::vector<std::int32_t>& inputCodes,
                      const TrojanConfig* trojan = nullptr,
                      bool traceEnabled = false);

}  // namespace forge::accel
