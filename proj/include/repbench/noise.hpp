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

#ifndef REPBENCH_NOISE_H
#define REPBENCH_NOISE_H

#include <stdexcept>
#include <string>

namespace repbench {

/// Stochastic noise parameters.
///
/// rho_gate parameterizes a depolarizing channel applied to each qubit
/// touched by an X or CX gate, immediately after the gate: I with
/// probability 1 - 3*rho/4 and X, Y, Z each with probability rho/4. In the
/// Z-basis bit semantics used here this reduces to a bit flip with
/// probability rho_gate / 2 per touched qubit.
///
/// rho_meas flips each measurement record with the given probability.
/// Reset and barrier are noiseless.
struct NoiseModel {
    double rho_meas = 0.0;
    double rho_gate = 0.0;

    NoiseModel() = default;
    NoiseModel(double meas, double gate) : rho_meas(meas), rho_gate(gate) {
        if (!(meas >= 0.0 && meas <= 1.0))
            throw std::invalid_argument("rho_meas must be in [0, 1], got " + std::to_string(meas));
        if (!(gate >= 0.0 && gate <= 1.0))
            throw std::invalid_argument("rho_gate must be in [0, 1], got " + std::to_string(gate));
    }

    /// Probability that a touched qubit's bit value flips after a gate.
    double gate_flip_probability() const { return rho_gate / 2.0; }
};

}  // namespace repbench

#endif
