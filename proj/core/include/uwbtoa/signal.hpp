#pragma once

#include <cstddef>
#include <vector>

namespace uwbtoa {

enum class PulseKind { gaussian_second_order };

/// Transmit monopulse parameters. The synthesized shape is
///   s(t) = A (1 - 4 pi t^2 / w^2) exp(-2 pi t^2 / w^2)
/// with w the width parameter. With unit_energy set, the sampled pulse is
/// rescaled so that sum(s[i]^2) * dt == 1.
struct PulseSpec {
  double amplitude = 1.0;
  double width = 0.5e-9;  // seconds
  PulseKind kind = PulseKind::gaussian_second_order;
  bool unit_energy = true;
};

/// Uniformly sampled real waveform. `origin` is the time of samples[0].
struct SampledWaveform {
  std::vector<double> samples;
  double dt = 0.0;      // sample interval, seconds
  double origin = 0.0;  // seconds

  std::size_t size() const { return samples.size(); }
  double end_time() const { return origin + static_cast<double>(samples.size()) * dt; }
  /// Discrete-time energy, sum(s^2) * dt.
  double energy() const;
};

/// Frame timing and receiver front-end parameters.
///
/// Invariants (checked by validate()): the frame duration is an integer
/// multiple of the block duration, the block duration an integer multiple of
/// the sample interval, and the sample rate is at least twice the receiver
/// bandwidth.
struct FrameConfig {
  double frame_duration = 200e-9;  // seconds
  double block_duration = 1e-9;    // seconds; also the chip duration
  int n_frames = 1;
  double sample_rate = 8e9;  // Hz
  double bandwidth = 4e9;    // Hz

  double sample_dt() const { return 1.0 / sample_rate; }
  int samples_per_block() const;
  int blocks_per_frame() const;
  int samples_per_frame() const { return samples_per_block() * blocks_per_frame(); }
  /// Number of energy blocks per frame observed by a sub-Nyquist detector.
  int n_obs() const { return blocks_per_frame(); }
  void validate() const;  // throws std::invalid_argument on violation
};

/// Samples the monopulse on a symmetric support of +-4 widths around t = 0.
/// Throws if the grid cannot resolve the pulse (width < 4 * dt).
SampledWaveform gen_pulse(const PulseSpec& spec, double dt);

/// One pulse per frame at the frame origin, n_frames frames. The returned
/// buffer is padded by the pulse half-support on both sides so that no pulse
/// placed inside a frame is ever truncated.
SampledWaveform gen_tx_frames(const FrameConfig& cfg, const PulseSpec& spec);

/// RMS (effective) bandwidth of the pulse spectrum,
///   beta^2 = int f^2 |S(f)|^2 df / int |S(f)|^2 df,
/// evaluated on a zero-padded FFT grid of at least 8x the pulse length.
double effective_bandwidth(const PulseSpec& spec, double dt);

/// Lower bound on the variance of an unbiased delay estimate,
///   1 / (8 pi^2 snr beta^2), in seconds^2.
/// snr is the linear energy ratio; throws on non-positive inputs.
double crlb(double snr_linear, double beta_hz);

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace uwbtoa
