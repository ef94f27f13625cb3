// Copyright 2026 The nisqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nisqlab/noise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "nisqlab/walsh.hpp"

namespace nisqlab {

void GateNoise::validate() const {
    require(r1 >= 0.0 && r1 <= 1.0, "r1 must be in [0, 1]");
    require(r2 >= 0.0 && r2 <= 1.0, "r2 must be in [0, 1]");
    require(eps_readout >= 0.0 && eps_readout <= 0.5,
            "eps_readout must be in [0, 0.5]");
}

DistributionNoise::DistributionNoise(double eps) : eps_(eps) {
    require(eps >= 0.0 && eps <= 0.5, "flip probability must be in [0, 0.5]");
}

ScheduleTarget parse_schedule_target(const std::string &name) {
    if (name == "gate-rates" || name == "gates") {
        return ScheduleTarget::gate_rates;
    }
    if (name == "r1") {
        return ScheduleTarget::r1;
    }
    if (name == "r2") {
        return ScheduleTarget::r2;
    }
    if (name == "readout") {
        return ScheduleTarget::readout;
    }
    if (name == "eps" || name == "bitflip-eps") {
        return ScheduleTarget::bitflip_eps;
    }
    throw ValidationError("unknown schedule target: " + name);
}

const char *schedule_target_name(ScheduleTarget target) {
    switch (target) {
    case ScheduleTarget::gate_rates:
        return "gate-rates";
    case ScheduleTarget::r1:
        return "r1";
    case ScheduleTarget::r2:
        return "r2";
    case ScheduleTarget::readout:
        return "readout";
    case ScheduleTarget::bitflip_eps:
        return "bitflip-eps";
    }
    return "?";
}

namespace {
constexpr size_t kWalkGrid = 4096;
} // namespace

NoiseSchedule::NoiseSchedule(Kind kind, ScheduleTarget target,
                             std::vector<double> params, uint64_t walk_seed)
    : kind_(kind), target_(target), params_(std::move(params)),
      walk_seed_(walk_seed) {
    const double lo = clamp_lo();
    const double hi = clamp_hi();
    auto in_range = [&](double v) { return v >= lo && v <= hi; };
    switch (kind_) {
    case Kind::constant:
        require(in_range(params_[0]), "constant rate outside legal range");
        break;
    case Kind::linear:
        require(in_range(params_[0]) && in_range(params_[1]),
                "linear endpoints outside legal range");
        break;
    case Kind::sinusoid:
        require(in_range(params_[0]), "sinusoid mean outside legal range");
        require(params_[1] >= 0.0, "sinusoid amplitude must be nonnegative");
        require(params_[2] > 0.0, "sinusoid period must be positive");
        break;
    case Kind::random_walk: {
        require(in_range(params_[0]), "walk start outside legal range");
        require(params_[1] >= 0.0, "walk step must be nonnegative");
        walk_values_.resize(kWalkGrid + 1);
        double v = params_[0];
        walk_values_[0] = v;
        Rng rng(walk_seed_, RngStream::walk, 0);
        for (size_t k = 1; k <= kWalkGrid; ++k) {
            v += (rng.bernoulli(0.5) ? params_[1] : -params_[1]);
            v = std::clamp(v, lo, hi);
            walk_values_[k] = v;
        }
        break;
    }
    }
}

NoiseSchedule NoiseSchedule::constant(double value, ScheduleTarget target) {
    return NoiseSchedule(Kind::constant, target, {value}, 0);
}

NoiseSchedule NoiseSchedule::linear(double from, double to,
                                    ScheduleTarget target) {
    return NoiseSchedule(Kind::linear, target, {from, to}, 0);
}

NoiseSchedule NoiseSchedule::sinusoid(double mean, double amplitude,
                                      double period, ScheduleTarget target) {
    return NoiseSchedule(Kind::sinusoid, target, {mean, amplitude, period}, 0);
}

NoiseSchedule NoiseSchedule::random_walk(double start, double step,
                                         uint64_t seed,
                                         ScheduleTarget target) {
    return NoiseSchedule(Kind::random_walk, target, {start, step}, seed);
}

double NoiseSchedule::clamp_lo() const { return 0.0; }

double NoiseSchedule::clamp_hi() const {
    switch (target_) {
    case ScheduleTarget::gate_rates:
    case ScheduleTarget::r1:
    case ScheduleTarget::r2:
        return 1.0;
    case ScheduleTarget::readout:
    case ScheduleTarget::bitflip_eps:
        return 0.5;
    }
    return 1.0;
}

double NoiseSchedule::value_at(double position) const {
    require(position >= 0.0 && position <= 1.0,
            "stream position must be in [0, 1], got " +
                std::to_string(position));
    double v = 0.0;
    switch (kind_) {
    case Kind::constant:
        v = params_[0];
        break;
    case Kind::linear:
        v = params_[0] + (params_[1] - params_[0]) * position;
        break;
    case Kind::sinusoid:
        v = params_[0] + params_[1] * std::sin(2.0 * std::numbers::pi *
                                               position / params_[2]);
        break;
    case Kind::random_walk:
        v = walk_values_[static_cast<size_t>(
            std::llround(position * static_cast<double>(kWalkGrid)))];
        break;
    }
    return std::clamp(v, clamp_lo(), clamp_hi());
}

double schedule_value(const NoiseSchedule &schedule, double position) {
    return schedule.value_at(position);
}

double stream_position(size_t index, size_t count) {
    if (count <= 1) {
        return 0.0;
    }
    return static_cast<double>(index) / static_cast<double>(count - 1);
}

OutcomeDistribution apply_bitflip_noise(const OutcomeDistribution &p,
                                        const DistributionNoise &noise) {
    WalshSpectrum spectrum = spectrum_of(p);
    const double rho = noise.rho();
    std::vector<double> rho_pow(p.n() + 1);
    rho_pow[0] = 1.0;
    for (int d = 1; d <= p.n(); ++d) {
        rho_pow[d] = rho_pow[d - 1] * rho;
    }
    for (size_t s = 0; s < spectrum.coefficients.size(); ++s) {
        spectrum.coefficients[s] *= rho_pow[std::popcount(s)];
    }
    return distribution_of(spectrum);
}

namespace {

uint32_t flip_bits(uint32_t sample, int n, double eps, Rng &rng) {
    uint32_t flipped = sample;
    for (int j = 0; j < n; ++j) {
        if (rng.bernoulli(eps)) {
            flipped ^= (1u << j);
        }
    }
    return flipped;
}

SampleSet with_meta_of(const SampleSet &src, std::vector<uint32_t> samples) {
    SampleSet out(src.n(), src.source());
    out.assign(std::move(samples));
    if (src.seed()) {
        out.set_seed(*src.seed());
    }
    out.set_batch_boundaries(src.batch_boundaries());
    out.set_ordered(src.ordered());
    out.set_circuit_ref(src.circuit_ref());
    return out;
}

} // namespace

SampleSet corrupt_samples(const SampleSet &s, const DistributionNoise &noise,
                          uint64_t seed) {
    const size_t count = s.size();
    std::vector<uint32_t> corrupted(count);
    const auto &raw = s.raw();
    const double eps = noise.eps();
    const int n = s.n();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        Rng rng(seed, RngStream::corruption, static_cast<uint64_t>(i));
        corrupted[static_cast<size_t>(i)] = flip_bits(raw[i], n, eps, rng);
    }
    return with_meta_of(s, std::move(corrupted));
}

SampleSet corrupt_samples(const SampleSet &s, const NoiseSchedule &schedule,
                          uint64_t seed) {
    require(schedule.target() == ScheduleTarget::bitflip_eps,
            "scheduled corruption requires a schedule targeting bitflip-eps");
    const size_t count = s.size();
    std::vector<uint32_t> corrupted(count);
    const auto &raw = s.raw();
    const int n = s.n();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        const size_t idx = static_cast<size_t>(i);
        double eps = schedule.value_at(stream_position(idx, count));
        Rng rng(seed, RngStream::corruption, idx);
        corrupted[idx] = flip_bits(raw[idx], n, eps, rng);
    }
    return with_meta_of(s, std::move(corrupted));
}

} // namespace nisqlab
