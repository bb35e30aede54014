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

#include "repbench/rep_code.hpp"

#include <numeric>
#include <stdexcept>

#include "repbench/errors.hpp"

namespace repbench {

namespace {

Circuit make_circuit(int n, int rounds, bool encode_one) {
    // code qubits 0..n-1 along the line, link qubit for pair (j, j+1) at n+j
    Circuit circuit(2 * n - 1);
    std::vector<int> round_offsets(static_cast<std::size_t>(rounds));
    for (int r = 1; r <= rounds; ++r)
        round_offsets[r - 1] = circuit.add_register("round_" + std::to_string(r), n - 1);
    int final_offset = circuit.add_register("code_bit", n);

    if (encode_one)
        for (int q = 0; q < n; ++q) circuit.x(q);

    for (int r = 1; r <= rounds; ++r) {
        for (int j = 0; j < n - 1; ++j) {
            circuit.cx(j, n + j);
            circuit.cx(j + 1, n + j);
        }
        for (int j = 0; j < n - 1; ++j) {
            circuit.measure(n + j, round_offsets[r - 1] + j);
            circuit.reset(n + j);
        }
    }
    for (int q = 0; q < n; ++q) circuit.measure(q, final_offset + q);
    return circuit;
}

}  // namespace

RepetitionCode build_repetition_code(int n, int rounds) {
    if (n < 2) throw std::invalid_argument("repetition code needs n >= 2, got " + std::to_string(n));
    if (rounds < 1)
        throw std::invalid_argument("repetition code needs rounds >= 1, got " +
                                    std::to_string(rounds));

    RepetitionCode code{n, rounds, make_circuit(n, rounds, false), make_circuit(n, rounds, true),
                        {}, {}};
    code.code_qubits.resize(static_cast<std::size_t>(n));
    std::iota(code.code_qubits.begin(), code.code_qubits.end(), 0);
    code.link_qubits.resize(static_cast<std::size_t>(n - 1));
    std::iota(code.link_qubits.begin(), code.link_qubits.end(), n);
    return code;
}

std::string derived_final_syndrome(std::string_view final_block) {
    if (final_block.size() < 2)
        throw std::invalid_argument("final readout must have at least 2 bits");
    std::string out(final_block.size() - 1, '0');
    for (std::size_t k = 0; k + 1 < final_block.size(); ++k)
        out[k] = final_block[k] == final_block[k + 1] ? '0' : '1';
    return out;
}

std::vector<std::string> split_raw_string(std::string_view raw, int n, int rounds) {
    auto fail = [&](const std::string &why) {
        throw LayoutError("raw string '" + std::string(raw) + "' does not match n=" +
                          std::to_string(n) + ", rounds=" + std::to_string(rounds) + ": " + why);
    };

    std::vector<std::string> blocks;
    std::string current;
    for (char c : raw) {
        if (c == ' ') {
            if (current.empty()) fail("empty block");
            blocks.push_back(current);
            current.clear();
        } else if (c == '0' || c == '1') {
            current += c;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }
    if (current.empty()) fail("empty block");
    blocks.push_back(current);

    if (static_cast<int>(blocks.size()) != rounds + 1)
        fail("expected " + std::to_string(rounds + 1) + " blocks, got " +
             std::to_string(blocks.size()));
    if (static_cast<int>(blocks[0].size()) != n)
        fail("final block has " + std::to_string(blocks[0].size()) + " bits, expected " +
             std::to_string(n));
    for (std::size_t b = 1; b < blocks.size(); ++b)
        if (static_cast<int>(blocks[b].size()) != n - 1)
            fail("round block has " + std::to_string(blocks[b].size()) + " bits, expected " +
                 std::to_string(n - 1));

    // reorder to {final, round1, ..., roundT}: raw lists round1 rightmost
    std::vector<std::string> ordered;
    ordered.push_back(blocks[0]);
    for (std::size_t b = blocks.size(); b-- > 1;) ordered.push_back(blocks[b]);
    return ordered;
}

std::string process_string(const RepetitionCode &code, std::string_view raw) {
    auto blocks = split_raw_string(raw, code.n, code.rounds);
    const std::string &final_block = blocks[0];

    std::string out;
    out += final_block.front();  // code qubit n-1
    out += ' ';
    out += final_block.back();  // code qubit 0
    out += ' ';

    auto xor_blocks = [](const std::string &a, const std::string &b) {
        std::string r(a.size(), '0');
        for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] == b[k] ? '0' : '1';
        return r;
    };

    std::string previous(static_cast<std::size_t>(code.n - 1), '0');
    for (int r = 1; r <= code.rounds; ++r) {
        out += ' ';
        out += xor_blocks(blocks[r], previous);
        previous = blocks[r];
    }
    out += ' ';
    out += xor_blocks(derived_final_syndrome(final_block), previous);
    return out;
}

LabeledCounts process_results(const RepetitionCode &code, const LabeledCounts &raw) {
    LabeledCounts processed;
    for (const auto &[label, counts] : raw) {
        Counts &bucket = processed[label];
        for (const auto &[outcome, count] : counts) bucket[process_string(code, outcome)] += count;
    }
    return processed;
}

}  // namespace repbench
