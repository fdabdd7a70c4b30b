#pragma once

#include <string>

#include "stateprep/exponents.hpp"
#include "stateprep/schedule.hpp"

namespace stateprep {

/// Device calibration snapshot. Error rates are per-operation failure
/// probabilities; times are in the units their names carry.
struct Calibration {
  double p_s_err = 0.0;   ///< single-qubit gate error rate
  double p_d_err = 0.0;   ///< two-qubit gate error rate
  double p_m_err = 0.0;   ///< measurement error rate
  double t2_us = 0.0;     ///< dephasing time T2, microseconds
  double t_2q_ns = 0.0;   ///< two-qubit gate duration, nanoseconds
  double t_meas_ns = 0.0; ///< measurement duration, nanoseconds
};

/// Reads a calibration from a JSON object with fields p_s_err, p_d_err,
/// p_m_err, t2_us, t_2q_ns and t_meas_ns. Throws std::invalid_argument on
/// missing fields or malformed JSON, std::runtime_error if the file cannot
/// be read.
[[nodiscard]] Calibration load_calibration(const std::string& path);
[[nodiscard]] Calibration calibration_from_json(const std::string& json_text);
[[nodiscard]] std::string calibration_to_json(const Calibration& cal);

/// Duration of a single-qubit gate implied by the calibration: the time for
/// which idling decoheres exactly as much as one single-qubit gate fails,
/// -T2 * ln(1 - p_s_err).
[[nodiscard]] double single_gate_duration_ns(const Calibration& cal);

/// Per-site success terms:
///   p_s  = p_is = 1 - p_s_err,
///   p_d  = 1 - p_d_err,
///   p_m  = 1 - p_m_err,
///   p_id = exp(-t_2q / T2),
///   p_im = p_ic = exp(-t_meas / T2).
[[nodiscard]] ErrorTerms terms_from_calibration(const Calibration& cal);

/// Wall-clock duration of each layer class, nanoseconds.
struct LayerDurations {
  double t_1q_ns = 0.0;
  double t_2q_ns = 0.0;
  double t_meas_ns = 0.0;
  double t_classical_ns = 0.0;
};

/// Durations implied by a calibration. Classical feedforward time is not
/// part of the calibration format and defaults to zero; pass the latency
/// explicitly to model it.
[[nodiscard]] LayerDurations durations_from_calibration(const Calibration& cal,
                                                        double t_classical_ns = 0.0);

/// Total runtime of a schedule: the sum over layers of the duration of the
/// layer's class. Conditional single-qubit layers count as single-qubit
/// layers.
[[nodiscard]] double runtime_estimate_ns(const Schedule& s, const LayerDurations& durations);

}  // namespace stateprep
