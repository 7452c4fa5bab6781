#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seishield/iq_signal.hpp"

namespace seishield {

// Signals with ground-truth emitter labels, as produced by the simulator.
struct LabeledDataset {
    std::vector<IQSignal> signals;
    std::vector<int> labels;  // y* in [0, num_classes)
    int num_classes = 0;
    int signal_length = 0;

    std::size_t size() const { return signals.size(); }
};

enum class Split : std::uint8_t { kTrain = 0, kVal = 1, kTest = 2 };

inline const char* split_name(Split s) {
    switch (s) {
        case Split::kTrain: return "train";
        case Split::kVal: return "val";
        case Split::kTest: return "test";
    }
    return "?";
}

// What the training pipeline is allowed to see: signals, the observed
// (possibly corrupted) labels, and the split assignment. Ground truth lives
// in EvalFlags, which only the evaluation paths may consume.
struct NoisyDataset {
    std::vector<IQSignal> signals;
    std::vector<int> observed_labels;
    std::vector<Split> split;
    int num_classes = 0;
    int signal_length = 0;
    double noise_rate = 0.0;

    std::size_t size() const { return signals.size(); }

    std::vector<int> indices_of(Split s) const {
        std::vector<int> out;
        for (std::size_t n = 0; n < split.size(); ++n)
            if (split[n] == s) out.push_back(static_cast<int>(n));
        return out;
    }
};

// Evaluation-only ground truth. Kept as a separate object so that training
// code paths cannot accidentally depend on it.
struct EvalFlags {
    std::vector<int> true_labels;        // y*
    std::vector<std::uint8_t> corrupted; // z_i = 1 iff observed != true
};

}  // namespace seishield
