#pragma once

#include <span>
#include <string>

#include "uwbtoa/signal.hpp"

namespace uwbtoa {

enum class DetectorKind { matched_filter, energy_mes, energy_wmess };

std::string detector_name(DetectorKind kind);

/// Detector front-end output: one value per lag (matched filter, spacing
/// T_s) or per block (energy detector, spacing T_b). `origin` is the time
/// the first entry refers to, so estimates are frame-relative.
struct EnergyVector {
  std::vector<double> values;
  double block_duration = 0.0;
  double origin = 0.0;
  int n_obs() const { return static_cast<int>(values.size()); }
};

struct ToaEstimate {
  double toa = 0.0;        // seconds
  int selected_index = 0;  // 1-based
  DetectorKind kind = DetectorKind::matched_filter;
  int detector_id = 0;
};

/// Sliding correlation of rx against the template, scaled by the sample
/// interval so values approximate the continuous correlation integral.
/// Both waveforms must share the same grid. Lags run over the whole rx span
/// (minus nothing; rx is zero-padded past its end).
EnergyVector matched_filter(const SampledWaveform& rx, const SampledWaveform& tmpl);

/// Frame-folded variant: correlations at lag n are accumulated across the
/// cfg.n_frames frames and the output covers exactly one frame span.
EnergyVector matched_filter(const SampledWaveform& rx, const SampledWaveform& tmpl,
                            const FrameConfig& cfg);

/// Arrival estimate from matched-filter output: the peak lag. Ties break to
/// the lowest index.
ToaEstimate mf_estimate(const EnergyVector& x);

/// Per-block energies x_n = sum over the closed sample interval of block n,
/// of m^2 * T_s, accumulated across frames. Adjacent blocks share their
/// boundary sample, so a block holds Fs*T_b + 1 samples; at Fs = 2B that
/// count equals the 2*B*T_b + 1 noise degrees of freedom per block.
EnergyVector energy_blocks(const SampledWaveform& rx, const FrameConfig& cfg);

/// Maximal energy selection: pick the strongest block, report its midpoint
/// (n - 1/2) T_b. Ties break to the lowest index.
ToaEstimate mes_estimate(const EnergyVector& x);

/// Weighted maximum energy sum selection: pick the window start k that
/// maximizes dot(x[k .. k+Ne-1], profile), the window zero-padded past the
/// frame end; report the midpoint of block k. The profile length defines
/// the window length Ne and must not exceed the number of blocks.
ToaEstimate wmess_estimate(const EnergyVector& x, std::span<const double> profile);

}  // namespace uwbtoa
