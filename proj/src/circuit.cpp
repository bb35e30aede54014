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

#include "repbench/circuit.hpp"

#include <stdexcept>

namespace repbench {

std::vector<int> touched_qubits(const Instruction &instruction) {
    return std::visit(
        [](const auto &op) -> std::vector<int> {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, XGate>) return {op.qubit};
            if constexpr (std::is_same_v<T, CXGate>) return {op.control, op.target};
            if constexpr (std::is_same_v<T, MeasureOp>) return {op.qubit};
            if constexpr (std::is_same_v<T, ResetOp>) return {op.qubit};
            if constexpr (std::is_same_v<T, BarrierOp>) return op.qubits;
        },
        instruction);
}

std::string instruction_name(const Instruction &instruction) {
    return std::visit(
        [](const auto &op) -> std::string {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, XGate>) return "x q" + std::to_string(op.qubit);
            if constexpr (std::is_same_v<T, CXGate>)
                return "cx q" + std::to_string(op.control) + ",q" + std::to_string(op.target);
            if constexpr (std::is_same_v<T, MeasureOp>)
                return "measure q" + std::to_string(op.qubit) + " -> c" + std::to_string(op.clbit);
            if constexpr (std::is_same_v<T, ResetOp>) return "reset q" + std::to_string(op.qubit);
            if constexpr (std::is_same_v<T, BarrierOp>) {
                std::string s = "barrier";
                for (int q : op.qubits) s += " q" + std::to_string(q);
                return s;
            }
        },
        instruction);
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0) throw std::invalid_argument("circuit qubit count must be non-negative");
}

int Circuit::add_register(const std::string &name, int size) {
    if (size <= 0) throw std::invalid_argument("register '" + name + "' must have positive size");
    int offset = num_clbits_;
    registers_.push_back({name, size, offset});
    num_clbits_ += size;
    return offset;
}

void Circuit::check_qubit(int qubit, const char *what) const {
    if (qubit < 0 || qubit >= num_qubits_)
        throw std::invalid_argument(std::string(what) + " qubit " + std::to_string(qubit) +
                                    " out of range [0, " + std::to_string(num_qubits_) + ")");
}

void Circuit::x(int qubit) {
    check_qubit(qubit, "x");
    instructions_.push_back(XGate{qubit});
}

void Circuit::cx(int control, int target) {
    check_qubit(control, "cx control");
    check_qubit(target, "cx target");
    if (control == target)
        throw std::invalid_argument("cx control and target must differ, both are q" +
                                    std::to_string(control));
    instructions_.push_back(CXGate{control, target});
}

void Circuit::measure(int qubit, int clbit) {
    check_qubit(qubit, "measure");
    if (clbit < 0 || clbit >= num_clbits_)
        throw std::invalid_argument("measure clbit " + std::to_string(clbit) +
                                    " out of range [0, " + std::to_string(num_clbits_) + ")");
    instructions_.push_back(MeasureOp{qubit, clbit});
}

void Circuit::reset(int qubit) {
    check_qubit(qubit, "reset");
    instructions_.push_back(ResetOp{qubit});
}

void Circuit::barrier(std::vector<int> qubits) {
    for (int q : qubits) check_qubit(q, "barrier");
    instructions_.push_back(BarrierOp{std::move(qubits)});
}

std::string format_outcome(const std::vector<ClassicalRegister> &registers,
                           const std::vector<std::uint8_t> &bits) {
    std::size_t expected = 0;
    for (const auto &reg : registers) expected += static_cast<std::size_t>(reg.size);
    if (bits.size() != expected)
        throw std::invalid_argument("format_outcome: got " + std::to_string(bits.size()) +
                                    " bits for a layout of " + std::to_string(expected));

    std::string out;
    out.reserve(expected + (registers.empty() ? 0 : registers.size() - 1));
    for (auto it = registers.rbegin(); it != registers.rend(); ++it) {
        if (!out.empty()) out += ' ';
        for (int k = it->size - 1; k >= 0; --k)
            out += bits[static_cast<std::size_t>(it->offset + k)] ? '1' : '0';
    }
    return out;
}

}  // namespace repbench
