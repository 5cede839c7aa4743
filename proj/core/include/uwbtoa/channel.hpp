#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uwbtoa/signal.hpp"

namespace uwbtoa {

struct ChannelTap {
  double gain = 0.0;   // amplitude gain (signed)
  double delay = 0.0;  // seconds
};

/// Multipath realization. Taps are sorted by strictly increasing delay and
/// gains are normalized so that sum(gain^2) == 1; the arrival time of the
/// first tap is the true time of arrival.
struct ChannelRealization {
  std::vector<ChannelTap> taps;
  double captured_energy = 1.0;

  double toa() const { return taps.front().delay; }
  /// Same realization with all delays offset by dt.
  ChannelRealization shifted(double dt) const;
  void validate() const;
};

/// Saleh-Valenzuela style cluster/ray parameters approximating the
/// residential line-of-sight profile. Rates are per second, decays in
/// seconds.
struct Cm1Params {
  double cluster_rate = 0.047e9;
  double ray_rate = 1.54e9;
  double cluster_decay = 22.61e-9;
  double ray_decay = 12.53e-9;
  double mean_clusters = 3.0;
  double nakagami_m = 0.67;
  void validate() const;
};

/// Receiver noise description: two-sided power spectral density N0/2 and the
/// seed of the noise stream.
struct NoiseSpec {
  double psd = 0.5;  // N0/2
  std::uint64_t seed = 0;
  double n0() const { return 2.0 * psd; }
};

/// Single-path channel: one unit tap at the given arrival time.
/// Throws if toa is outside [0, frame_duration).
ChannelRealization awgn_realization(double toa, double frame_duration);

/// Draws a cluster/ray realization: Poisson cluster count and arrivals,
/// Poisson ray arrivals within each cluster, double-exponential power decay,
/// Nakagami-m amplitudes with random polarity. Gains are renormalized and
/// taps sorted; the first tap sits at delay 0.
ChannelRealization cm1_realization(const Cm1Params& params, std::uint64_t seed);

/// Propagates tx through the realization at the requested SNR (dB, defined
/// as captured-energy / N0): delayed tap sum rescaled so the noiseless
/// captured energy is exactly snr * N0, plus white Gaussian noise of per
/// sample variance (N0/2) * Fs, then an ideal brick-wall band limit at
/// `bandwidth` (a no-op when Fs == 2B). Tap delays are rounded to the
/// nearest sample.
SampledWaveform apply_channel(const SampledWaveform& tx, const ChannelRealization& ch,
                              const NoiseSpec& noise, double snr_db, double bandwidth,
                              bool add_noise = true);

/// Averaged per-block energy profile over n realizations, tap energies
/// binned at block granularity with the first path at the center of block 1,
/// normalized to unit sum. Blocks after cumulative coverage of 99.99% are
/// trimmed.
std::vector<double> estimate_pdp(const Cm1Params& params, int n_realizations,
                                 double block_duration, std::uint64_t seed);

/// Smallest leading block count covering `coverage` of the profile energy.
int profile_window_length(const std::vector<double>& profile, double coverage);

/// Text interchange format: per realization a header line "E <captured
/// energy>" followed by "T <gain> <delay_seconds>" lines, realizations
/// separated by blank lines. Import requires sum(gain^2) == 1 within 1e-6
/// and renormalizes exactly.
std::vector<ChannelRealization> read_realizations(std::istream& in);
std::vector<ChannelRealization> load_realizations(const std::string& path);
void write_realizations(std::ostream& out, const std::vector<ChannelRealization>& chans);
void save_realizations(const std::string& path, const std::vector<ChannelRealization>& chans);

}  // namespace uwbtoa
