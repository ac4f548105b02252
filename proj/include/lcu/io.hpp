// SPDX-License-Identifier: Apache-2.0
#ifndef LCU_IO_HPP
#define LCU_IO_HPP

#include <iosfwd>
#include <string>

#include "lcu/sampler.hpp"
#include "lcu/state.hpp"

namespace lcu {

// State schema: { "grid": {"k_max": float, "n": int}, "amp": [[re, im], ...] }
// with exactly n amp entries; uniform node spacing implied. Doubles are
// written with 17 significant digits so the round trip is bitwise exact.

SpectralState read_state(std::istream& in, const std::string& origin);
SpectralState read_state_file(const std::string& path);

void write_state(const SpectralState& state, std::ostream& out);
void write_state_file(const SpectralState& state, const std::string& path);

// CSV with header "tau,re,im,density".
void write_timedist_csv(const TimeAmplitude& ta, std::ostream& out);
void write_timedist_csv_file(const TimeAmplitude& ta, const std::string& path);

// CSV single column with header "value".
void write_samples_csv(const SampleBatch& batch, std::ostream& out);
void write_samples_csv_file(const SampleBatch& batch, const std::string& path);

// Fixed 17-significant-digit decimal form used everywhere a double is
// serialized.
std::string format_double(double v);

} // namespace lcu

#endif
