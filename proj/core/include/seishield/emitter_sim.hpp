#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "seishield/dataset.hpp"
#include "seishield/iq_signal.hpp"

namespace seishield {

// Sentinel SNR that disables additive noise entirely.
inline constexpr double kNoiseDisabledSnrDb = std::numeric_limits<double>::infinity();

// Fixed per-emitter hardware impairment parameters. These ARE the fingerprint:
// two emitters differ only through their profiles.
struct EmitterProfile {
    double iq_gain_imbalance = 1.0;      // g, applied to the I rail
    double iq_phase_skew = 0.0;          // radians leaked from I into Q
    double phase_noise_step_std = 0.0;   // radians per sample, random-walk step
    std::complex<double> pa_cubic_coeff{0.0, 0.0};  // alpha3 of y = x + a3*x*|x|^2
    std::complex<double> dc_offset{0.0, 0.0};
};

// Per-signal channel: one flat-fading coefficient drawn per signal, plus AWGN.
struct ChannelParams {
    double fading_coeff_std = 0.0;       // std of the complex deviation of h from 1+0i
    double snr_db = kNoiseDisabledSnrDb;
};

struct SynthDatasetSpec {
    int num_classes = 0;
    int samples_per_class = 0;
    int signal_length = 0;
    std::uint64_t seed = 0;
    std::vector<EmitterProfile> profiles;  // exactly num_classes entries
    ChannelParams channel;
};

// Throws invalid_argument naming the violated field.
void validate(const SynthDatasetSpec& spec);

// Pseudo-random QPSK sequence, root-raised-cosine pulse shaped (roll-off 0.35,
// 4 samples per symbol), normalized to unit average power.
IQSignal generate_baseband(int length, std::uint64_t seed);

// Transmit-chain distortions, applied in physical order:
// I/Q imbalance -> random-walk phase noise -> cubic PA nonlinearity -> DC offset.
IQSignal apply_impairments(const IQSignal& x, const EmitterProfile& profile,
                           std::uint64_t seed);

// One complex flat-fading coefficient per signal (circular Gaussian around
// 1+0i), then AWGN scaled to meet snr_db in expectation.
IQSignal apply_channel(const IQSignal& x, const ChannelParams& channel,
                       std::uint64_t seed);

// Full dataset: num_classes x samples_per_class signals. Per-sample randomness
// derives from (spec.seed, sample index), so generation order does not matter.
LabeledDataset synth_dataset(const SynthDatasetSpec& spec);

// Deterministic profile family with parameter spreads wide enough that a
// desk-scale classifier can separate the classes at moderate SNR.
std::vector<EmitterProfile> default_profiles(int num_classes);

}  // namespace seishield
