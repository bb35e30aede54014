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

#include "repbench/simulator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "repbench/rng.hpp"

namespace repbench {

std::string to_string(const ErrorLocation &location) {
    std::string where = location.after_instruction == kPreCircuit
                            ? "pre-circuit"
                            : "after instruction " + std::to_string(location.after_instruction);
    switch (location.kind) {
        case ErrorLocation::Kind::pauli_x:
            return "X on q" + std::to_string(location.qubit) + " " + where;
        case ErrorLocation::Kind::pauli_y:
            return "Y on q" + std::to_string(location.qubit) + " " + where;
        case ErrorLocation::Kind::pauli_z:
            return "Z on q" + std::to_string(location.qubit) + " " + where;
        case ErrorLocation::Kind::record_flip:
            return "record flip on instruction " + std::to_string(location.after_instruction);
    }
    return "unknown error location";
}

namespace {

struct ShotState {
    std::vector<std::uint8_t> qubits;
    std::vector<std::uint8_t> records;
};

void execute(const Circuit &circuit, ShotState &state) {
    state.qubits.assign(static_cast<std::size_t>(circuit.num_qubits()), 0);
    state.records.assign(static_cast<std::size_t>(circuit.num_clbits()), 0);
    for (const Instruction &instruction : circuit.instructions()) {
        std::visit(
            [&](const auto &op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, XGate>) {
                    state.qubits[op.qubit] ^= 1;
                } else if constexpr (std::is_same_v<T, CXGate>) {
                    state.qubits[op.target] ^= state.qubits[op.control];
                } else if constexpr (std::is_same_v<T, MeasureOp>) {
                    state.records[op.clbit] = state.qubits[op.qubit];
                } else if constexpr (std::is_same_v<T, ResetOp>) {
                    state.qubits[op.qubit] = 0;
                }
                // barrier: no effect on state
            },
            instruction);
    }
}

}  // namespace

std::string run_ideal(const Circuit &circuit) {
    ShotState state;
    execute(circuit, state);
    return format_outcome(circuit.registers(), state.records);
}

Counts sample(const Circuit &circuit, const NoiseModel &noise, std::uint64_t shots,
              std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("sample requires at least one shot");

    const double p_flip = noise.gate_flip_probability();
    const double p_meas = noise.rho_meas;
    const auto &instructions = circuit.instructions();

    Counts counts;
    std::vector<std::uint8_t> qubits;
    std::vector<std::uint8_t> records;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        std::mt19937_64 gen(derive_stream(seed, shot));
        qubits.assign(static_cast<std::size_t>(circuit.num_qubits()), 0);
        records.assign(static_cast<std::size_t>(circuit.num_clbits()), 0);

        auto flip_maybe = [&](int qubit) {
            if (p_flip > 0.0 && uniform_unit(gen) < p_flip) qubits[qubit] ^= 1;
        };

        for (const Instruction &instruction : instructions) {
            std::visit(
                [&](const auto &op) {
                    using T = std::decay_t<decltype(op)>;
                    if constexpr (std::is_same_v<T, XGate>) {
                        qubits[op.qubit] ^= 1;
                        flip_maybe(op.qubit);
                    } else if constexpr (std::is_same_v<T, CXGate>) {
                        qubits[op.target] ^= qubits[op.control];
                        flip_maybe(op.control);
                        flip_maybe(op.target);
                    } else if constexpr (std::is_same_v<T, MeasureOp>) {
                        std::uint8_t value = qubits[op.qubit];
                        if (p_meas > 0.0 && uniform_unit(gen) < p_meas) value ^= 1;
                        records[op.clbit] = value;
                    } else if constexpr (std::is_same_v<T, ResetOp>) {
                        qubits[op.qubit] = 0;
                    }
                },
                instruction);
        }
        ++counts[format_outcome(circuit.registers(), records)];
    }
    return counts;
}

void validate_location(const Circuit &circuit, const ErrorLocation &location) {
    const auto &instructions = circuit.instructions();
    const int count = static_cast<int>(instructions.size());

    if (location.kind == ErrorLocation::Kind::record_flip) {
        if (location.after_instruction < 0 || location.after_instruction >= count)
            throw std::invalid_argument("record flip references instruction " +
                                        std::to_string(location.after_instruction) +
                                        " outside the circuit");
        if (!std::holds_alternative<MeasureOp>(instructions[location.after_instruction]))
            throw std::invalid_argument(
                "record flip must reference a measure, but instruction " +
                std::to_string(location.after_instruction) + " is " +
                instruction_name(instructions[location.after_instruction]));
        return;
    }

    if (location.qubit < 0 || location.qubit >= circuit.num_qubits())
        throw std::invalid_argument("error location qubit q" + std::to_string(location.qubit) +
                                    " out of range");
    if (location.after_instruction == kPreCircuit) return;
    if (location.after_instruction < 0 || location.after_instruction >= count)
        throw std::invalid_argument("error location references instruction " +
                                    std::to_string(location.after_instruction) +
                                    " outside the circuit");
    auto touched = touched_qubits(instructions[location.after_instruction]);
    if (std::find(touched.begin(), touched.end(), location.qubit) == touched.end())
        throw std::invalid_argument("q" + std::to_string(location.qubit) +
                                    " is not acted on by instruction " +
                                    std::to_string(location.after_instruction) + " (" +
                                    instruction_name(instructions[location.after_instruction]) +
                                    ")");
}

std::string run_with_errors(const Circuit &circuit, const std::vector<ErrorLocation> &errors) {
    for (const ErrorLocation &location : errors) validate_location(circuit, location);

    const auto &instructions = circuit.instructions();
    const int count = static_cast<int>(instructions.size());

    // Collapse the injection list to parities: Z is invisible at bit level,
    // Y flips like X, and repeated flips cancel pairwise.
    std::vector<std::uint8_t> pre_flip(static_cast<std::size_t>(circuit.num_qubits()), 0);
    // per instruction index: qubit flips after it, record flips at it
    std::vector<std::vector<int>> post_flips(static_cast<std::size_t>(count));
    std::vector<std::uint8_t> record_flip(static_cast<std::size_t>(count), 0);

    for (const ErrorLocation &location : errors) {
        if (location.kind == ErrorLocation::Kind::record_flip) {
            record_flip[location.after_instruction] ^= 1;
        } else if (location.kind != ErrorLocation::Kind::pauli_z) {
            if (location.after_instruction == kPreCircuit)
                pre_flip[location.qubit] ^= 1;
            else
                post_flips[location.after_instruction].push_back(location.qubit);
        }
    }

    std::vector<std::uint8_t> qubits(static_cast<std::size_t>(circuit.num_qubits()), 0);
    std::vector<std::uint8_t> records(static_cast<std::size_t>(circuit.num_clbits()), 0);
    for (int q = 0; q < circuit.num_qubits(); ++q) qubits[q] ^= pre_flip[q];

    for (int i = 0; i < count; ++i) {
        std::visit(
            [&](const auto &op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, XGate>) {
                    qubits[op.qubit] ^= 1;
                } else if constexpr (std::is_same_v<T, CXGate>) {
                    qubits[op.target] ^= qubits[op.control];
                } else if constexpr (std::is_same_v<T, MeasureOp>) {
                    records[op.clbit] = qubits[op.qubit] ^ record_flip[i];
                } else if constexpr (std::is_same_v<T, ResetOp>) {
                    qubits[op.qubit] = 0;
                }
            },
            instructions[i]);
        for (int q : post_flips[i]) qubits[q] ^= 1;
    }
    return format_outcome(circuit.registers(), records);
}

std::vector<ErrorLocation> enumerate_error_locations(const Circuit &circuit) {
    std::vector<ErrorLocation> locations;
    for (int q = 0; q < circuit.num_qubits(); ++q)
        locations.push_back({ErrorLocation::Kind::pauli_x, kPreCircuit, q});

    const auto &instructions = circuit.instructions();
    for (int i = 0; i < static_cast<int>(instructions.size()); ++i) {
        for (int q : touched_qubits(instructions[i]))
            locations.push_back({ErrorLocation::Kind::pauli_x, i, q});
        if (const auto *m = std::get_if<MeasureOp>(&instructions[i]))
            locations.push_back({ErrorLocation::Kind::record_flip, i, m->qubit});
    }
    return locations;
}

}  // namespace repbench
