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

#ifndef REPBENCH_REP_CODE_H
#define REPBENCH_REP_CODE_H

#include <string>
#include <string_view>
#include <vector>

#include "repbench/circuit.hpp"
#include "repbench/counts.hpp"

namespace repbench {

/// A distance-n repetition code with `rounds` syndrome measurement rounds.
///
/// Both circuits use n code qubits on a line and n-1 link qubits, one
/// between each neighbouring pair. Every round moves the parity of each pair
/// onto its link qubit with two CX gates, measures the link into that
/// round's (n-1)-bit register and resets it. After the last round all code
/// qubits are measured into the final n-bit register. circuit_1 is
/// circuit_0 with an X on every code qubit up front.
///
/// Raw outcome strings therefore read "final roundT ... round1" with the
/// first round rightmost, and within each block the highest qubit/link
/// index leftmost.
struct RepetitionCode {
    int n;
    int rounds;
    Circuit circuit_0;
    Circuit circuit_1;
    std::vector<int> code_qubits;  // indices 0..n-1
    std::vector<int> link_qubits;  // indices n..2n-2; link j couples code j and j+1
};

/// Builds the circuit pair for the given parameters. Requires n >= 2 and
/// rounds >= 1.
RepetitionCode build_repetition_code(int n, int rounds);

/// Computes the (n-1)-bit syndrome implied by an n-bit final readout block:
/// output char k is '1' iff the adjacent readout chars k and k+1 differ
/// (equivalently, link j = code_j XOR code_{j+1} in index terms).
std::string derived_final_syndrome(std::string_view final_block);

/// Splits a raw string into blocks and checks it against the (n, rounds)
/// layout; throws LayoutError naming the string otherwise. Returns
/// {final, round1, round2, ..., roundT} in chronological order.
std::vector<std::string> split_raw_string(std::string_view raw, int n, int rounds);

/// Rewrites one raw outcome in the syndrome-change convention:
/// "lL lR  B1 B2 ... B(T+1)", where lL/lR are the final readouts of the code
/// qubits at the two ends of the line (highest index left), B1 is the first
/// round's syndrome, each later block is the XOR change from the previous
/// round, and the last block compares the syndrome derived from the final
/// readout against round T.
std::string process_string(const RepetitionCode &code, std::string_view raw);

/// Applies process_string to every outcome, carrying counts over unchanged.
LabeledCounts process_results(const RepetitionCode &code, const LabeledCounts &raw);

}  // namespace repbench

#endif
