// Copyright 2026 Repbench Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REPBENCH_CIRCUIT_H
#define REPBENCH_CIRCUIT_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace repbench {

struct XGate {
    int qubit;
};

struct CXGate {
    int control;
    int target;
};

struct MeasureOp {
    int qubit;
    int clbit;
};

struct ResetOp {
    int qubit;
};

struct BarrierOp {
    std::vector<int> qubits;
};

using Instruction = std::variant<XGate, CXGate, MeasureOp, ResetOp, BarrierOp>;

/// Qubits an instruction acts on, in a fixed order (control before target).
std::vector<int> touched_qubits(const Instruction &instruction);

/// Short human-readable form, e.g. "cx q1,q3" or "measure q2 -> c0".
std::string instruction_name(const Instruction &instruction);

struct ClassicalRegister {
    std::string name;
    int size;
    int offset;  // index of bit 0 within the flat clbit array
};

/// A Z-basis-diagonal circuit: X, CX, measure, reset and barrier over a fixed
/// set of qubits, with named classical registers that define the layout of
/// outcome strings. Instructions are validated as they are appended; a built
/// circuit is immutable in practice and safe to share between threads.
class Circuit {
  public:
    explicit Circuit(int num_qubits);

    /// Appends a classical register and returns the offset of its bit 0.
    /// The register added last is rendered leftmost in outcome strings.
    int add_register(const std::string &name, int size);

    void x(int qubit);
    void cx(int control, int target);
    void measure(int qubit, int clbit);
    void reset(int qubit);
    void barrier(std::vector<int> qubits);

    int num_qubits() const { return num_qubits_; }
    int num_clbits() const { return num_clbits_; }
    const std::vector<ClassicalRegister> &registers() const { return registers_; }
    const std::vector<Instruction> &instructions() const { return instructions_; }

  private:
    void check_qubit(int qubit, const char *what) const;

    int num_qubits_;
    int num_clbits_ = 0;
    std::vector<ClassicalRegister> registers_;
    std::vector<Instruction> instructions_;
};

/// Renders classical bits as a result string: registers appear right-to-left
/// in the order they were added (last added leftmost), separated by single
/// spaces, and within each register the highest bit index is leftmost.
/// `bits` is indexed by flat clbit index and must match the layout size.
std::string format_outcome(const std::vector<ClassicalRegister> &registers,
                           const std::vector<std::uint8_t> &bits);

}  // namespace repbench

#endif
