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

#ifndef REPBENCH_SIMULATOR_H
#define REPBENCH_SIMULATOR_H

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "repbench/circuit.hpp"
#include "repbench/counts.hpp"
#include "repbench/noise.hpp"

namespace repbench {

/// Index value meaning "before the first instruction".
inline constexpr int kPreCircuit = -1;

/// A single fault site. Pauli faults act on `qubit` immediately after the
/// instruction at `after_instruction` (or before the circuit when that is
/// kPreCircuit). A record flip inverts the classical record written by the
/// measure instruction at `after_instruction`.
struct ErrorLocation {
    enum class Kind : std::uint8_t { pauli_x, pauli_y, pauli_z, record_flip };

    Kind kind = Kind::pauli_x;
    int after_instruction = kPreCircuit;
    int qubit = 0;

    auto operator<=>(const ErrorLocation &) const = default;
};

std::string to_string(const ErrorLocation &location);

/// Deterministic noiseless run. All qubits start at 0; the result is the
/// outcome string defined by the circuit's register layout.
std::string run_ideal(const Circuit &circuit);

/// Monte Carlo sampling under the noise model. Each shot draws from its own
/// substream derived from (seed, shot index), so the result is reproducible
/// and independent of any batching. `shots` must be >= 1.
Counts sample(const Circuit &circuit, const NoiseModel &noise, std::uint64_t shots,
              std::uint64_t seed);

/// Deterministic run with the given faults injected and no stochastic noise.
/// Faults are applied in sequence, so two identical X insertions cancel.
/// Z faults never change the outcome and Y acts as X.
std::string run_with_errors(const Circuit &circuit, const std::vector<ErrorLocation> &errors);

/// All distinct single-fault sites of the circuit, in a fixed order:
/// one X per qubit before the circuit, then per instruction an X for each
/// touched qubit plus, for measures, the record flip. X-only enumeration is
/// complete for this gate set since Z faults are invisible and Y equals X.
std::vector<ErrorLocation> enumerate_error_locations(const Circuit &circuit);

/// Checks an ErrorLocation against a circuit and throws std::invalid_argument
/// with a description when it is not applicable.
void validate_location(const Circuit &circuit, const ErrorLocation &location);

}  // namespace repbench

#endif
