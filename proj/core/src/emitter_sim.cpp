#include "seishield/emitter_sim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "seishield/rng.hpp"

namespace seishield {

namespace {

constexpr int kSamplesPerSymbol = 4;
constexpr double kRollOff = 0.35;
constexpr int kFilterSpanSymbols = 8;
constexpr int kMinSignalLength = 16;

// Root-raised-cosine impulse response, unit tap energy.
std::vector<double> rrc_taps() {
    const int half = kFilterSpanSymbols * kSamplesPerSymbol / 2;
    std::vector<double> h(2 * half + 1);
    const double beta = kRollOff;
    const double pi = std::numbers::pi;
    for (int n = -half; n <= half; ++n) {
        const double t = static_cast<double>(n) / kSamplesPerSymbol;  // in symbols
        double v;
        if (n == 0) {
            v = 1.0 - beta + 4.0 * beta / pi;
        } else {
            const double denom = pi * t * (1.0 - 16.0 * beta * beta * t * t);
            if (std::abs(denom) < 1e-9) {
                // t = +-1/(4 beta) singular point
                v = (beta / std::numbers::sqrt2) *
                    ((1.0 + 2.0 / pi) * std::sin(pi / (4.0 * beta)) +
                     (1.0 - 2.0 / pi) * std::cos(pi / (4.0 * beta)));
            } else {
                v = (std::sin(pi * t * (1.0 - beta)) +
                     4.0 * beta * t * std::cos(pi * t * (1.0 + beta))) / denom;
            }
        }
        h[static_cast<std::size_t>(n + half)] = v;
    }
    double energy = 0.0;
    for (double v : h) energy += v * v;
    const double scale = 1.0 / std::sqrt(energy);
    for (double& v : h) v *= scale;
    return h;
}

}  // namespace

void validate(const SynthDatasetSpec& spec) {
    if (spec.num_classes < 2)
        throw std::invalid_argument("SynthDatasetSpec.num_classes: must be >= 2, got " +
                                    std::to_string(spec.num_classes));
    if (spec.samples_per_class < 1)
        throw std::invalid_argument("SynthDatasetSpec.samples_per_class: must be >= 1");
    if (spec.signal_length < kMinSignalLength)
        throw std::invalid_argument("SynthDatasetSpec.signal_length: must be >= " +
                                    std::to_string(kMinSignalLength) + ", got " +
                                    std::to_string(spec.signal_length));
    if (static_cast<int>(spec.profiles.size()) != spec.num_classes)
        throw std::invalid_argument("SynthDatasetSpec.profiles: expected " +
                                    std::to_string(spec.num_classes) + " entries, got " +
                                    std::to_string(spec.profiles.size()));
    for (std::size_t c = 0; c < spec.profiles.size(); ++c) {
        const auto& p = spec.profiles[c];
        if (!(p.iq_gain_imbalance > 0.0))
            throw std::invalid_argument("EmitterProfile[" + std::to_string(c) +
                                        "].iq_gain_imbalance: must be > 0");
        if (p.phase_noise_step_std < 0.0)
            throw std::invalid_argument("EmitterProfile[" + std::to_string(c) +
                                        "].phase_noise_step_std: must be >= 0");
    }
    if (spec.channel.fading_coeff_std < 0.0)
        throw std::invalid_argument("ChannelParams.fading_coeff_std: must be >= 0");
    if (std::isnan(spec.channel.snr_db))
        throw std::invalid_argument("ChannelParams.snr_db: must not be NaN");
}

IQSignal generate_baseband(int length, std::uint64_t seed) {
    if (length < kMinSignalLength)
        throw std::invalid_argument("generate_baseband: length must be >= " +
                                    std::to_string(kMinSignalLength) + ", got " +
                                    std::to_string(length));

    static const std::vector<double> taps = rrc_taps();
    const int half = static_cast<int>(taps.size()) / 2;

    // Enough symbols that `length` samples can be taken past the filter ramp-up.
    const int num_symbols = (length + kSamplesPerSymbol - 1) / kSamplesPerSymbol +
                            2 * kFilterSpanSymbols;
    Rng rng(seed);
    std::vector<std::complex<double>> symbols(static_cast<std::size_t>(num_symbols));
    const double amp = 1.0 / std::numbers::sqrt2;
    for (auto& s : symbols) {
        const double re = rng.coin() ? amp : -amp;
        const double im = rng.coin() ? amp : -amp;
        s = {re, im};
    }

    const int skip = kFilterSpanSymbols * kSamplesPerSymbol;  // past the ramp-up
    IQSignal out(static_cast<std::size_t>(length));
    for (int n = 0; n < length; ++n) {
        const int center = skip + n;
        std::complex<double> acc{0.0, 0.0};
        for (int t = -half; t <= half; ++t) {
            const int idx = center + t;
            if (idx % kSamplesPerSymbol != 0) continue;  // impulse train upsampling
            const int sym = idx / kSamplesPerSymbol;
            if (sym < 0 || sym >= num_symbols) continue;
            acc += symbols[static_cast<std::size_t>(sym)] *
                   taps[static_cast<std::size_t>(half - t)];
        }
        out.set(static_cast<std::size_t>(n), acc);
    }

    // Exact unit empirical power.
    const double p = out.mean_power();
    if (p > 0.0) {
        const float s = static_cast<float>(1.0 / std::sqrt(p));
        for (int n = 0; n < length; ++n) {
            out.i[static_cast<std::size_t>(n)] *= s;
            out.q[static_cast<std::size_t>(n)] *= s;
        }
    }
    return out;
}

IQSignal apply_impairments(const IQSignal& x, const EmitterProfile& profile,
                           std::uint64_t seed) {
    if (!x.all_finite())
        throw std::invalid_argument("apply_impairments: input contains non-finite values");

    const std::size_t L = x.size();
    IQSignal out(L);
    Rng rng(seed);

    const double g = profile.iq_gain_imbalance;
    const double cphi = std::cos(profile.iq_phase_skew);
    const double sphi = std::sin(profile.iq_phase_skew);
    const bool walk = profile.phase_noise_step_std > 0.0;
    double theta = 0.0;

    for (std::size_t n = 0; n < L; ++n) {
        // I/Q imbalance: gain error on I, phase skew leaks I into Q.
        const double xi = static_cast<double>(x.i[n]);
        const double xq = static_cast<double>(x.q[n]);
        double re = g * xi;
        double im = cphi * xq + sphi * xi;

        if (walk) {
            theta += rng.gaussian(0.0, profile.phase_noise_step_std);
            const double c = std::cos(theta), s = std::sin(theta);
            const double r2 = re * c - im * s;
            im = re * s + im * c;
            re = r2;
        }

        std::complex<double> y{re, im};
        y += profile.pa_cubic_coeff * y * std::norm(y);
        y += profile.dc_offset;
        out.set(n, y);
    }
    return out;
}

IQSignal apply_channel(const IQSignal& x, const ChannelParams& channel,
                       std::uint64_t seed) {
    if (!x.all_finite())
        throw std::invalid_argument("apply_channel: input contains non-finite values");

    const std::size_t L = x.size();
    IQSignal out = x;
    Rng rng(seed);

    if (channel.fading_coeff_std > 0.0) {
        const double s = channel.fading_coeff_std / std::numbers::sqrt2;
        const std::complex<double> h{1.0 + rng.gaussian(0.0, s), rng.gaussian(0.0, s)};
        for (std::size_t n = 0; n < L; ++n) out.set(n, h * out.at(n));
    }

    if (std::isfinite(channel.snr_db)) {
        const double sig_power = out.mean_power();
        const double noise_power = sig_power * std::pow(10.0, -channel.snr_db / 10.0);
        const double s = std::sqrt(noise_power / 2.0);
        for (std::size_t n = 0; n < L; ++n) {
            out.i[n] = static_cast<float>(out.i[n] + rng.gaussian(0.0, s));
            out.q[n] = static_cast<float>(out.q[n] + rng.gaussian(0.0, s));
        }
    }
    return out;
}

LabeledDataset synth_dataset(const SynthDatasetSpec& spec) {
    validate(spec);

    LabeledDataset ds;
    ds.num_classes = spec.num_classes;
    ds.signal_length = spec.signal_length;
    const std::size_t total =
        static_cast<std::size_t>(spec.num_classes) * spec.samples_per_class;
    ds.signals.resize(total);
    ds.labels.resize(total);

    for (int c = 0; c < spec.num_classes; ++c) {
        for (int j = 0; j < spec.samples_per_class; ++j) {
            const std::size_t idx =
                static_cast<std::size_t>(c) * spec.samples_per_class + j;
            const std::uint64_t s0 = mix_seed(spec.seed, idx);
            IQSignal sig = generate_baseband(spec.signal_length, mix_seed(s0, 0));
            sig = apply_impairments(sig, spec.profiles[static_cast<std::size_t>(c)],
                                    mix_seed(s0, 1));
            sig = apply_channel(sig, spec.channel, mix_seed(s0, 2));
            ds.signals[idx] = std::move(sig);
            ds.labels[idx] = c;
        }
    }
    return ds;
}

std::vector<EmitterProfile> default_profiles(int num_classes) {
    std::vector<EmitterProfile> out;
    out.reserve(static_cast<std::size_t>(num_classes));
    for (int c = 0; c < num_classes; ++c) {
        const double u = c - 0.5 * (num_classes - 1);
        EmitterProfile p;
        p.iq_gain_imbalance = 1.0 + 0.06 * u;
        p.iq_phase_skew = 0.10 * u;
        p.phase_noise_step_std = 0.002 + 0.004 * c;
        p.pa_cubic_coeff = std::polar(0.03 + 0.035 * c, 0.9 * c);
        p.dc_offset = {0.01 * c * std::cos(2.1 * c), 0.01 * c * std::sin(2.1 * c)};
        out.push_back(p);
    }
    return out;
}

}  // namespace seishield
