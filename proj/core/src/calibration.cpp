#include "stateprep/calibration.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stateprep {

namespace {

double require_number(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw std::invalid_argument(std::string("calibration field missing or not a number: ") + field);
  }
  return j[field].get<double>();
}

}  // namespace

Calibration calibration_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("calibration JSON parse error: ") + e.what());
  }
  Calibration cal;
  cal.p_s_err = require_number(j, "p_s_err");
  cal.p_d_err = require_number(j, "p_d_err");
  cal.p_m_err = require_number(j, "p_m_err");
  cal.t2_us = require_number(j, "t2_us");
  cal.t_2q_ns = require_number(j, "t_2q_ns");
  cal.t_meas_ns = require_number(j, "t_meas_ns");
  if (cal.t2_us <= 0.0) throw std::invalid_argument("t2_us must be positive");
  return cal;
}

Calibration load_calibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open calibration file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return calibration_from_json(buf.str());
}

std::string calibration_to_json(const Calibration& cal) {
  nlohmann::json j;
  j["p_s_err"] = cal.p_s_err;
  j["p_d_err"] = cal.p_d_err;
  j["p_m_err"] = cal.p_m_err;
  j["t2_us"] = cal.t2_us;
  j["t_2q_ns"] = cal.t_2q_ns;
  j["t_meas_ns"] = cal.t_meas_ns;
  return j.dump(2) + "\n";
}

double single_gate_duration_ns(const Calibration& cal) {
  return -cal.t2_us * 1000.0 * std::log1p(-cal.p_s_err);
}

ErrorTerms terms_from_calibration(const Calibration& cal) {
  const double t2_ns = cal.t2_us * 1000.0;
  ErrorTerms t;
  t.p_s = 1.0 - cal.p_s_err;
  t.p_is = t.p_s;
  t.p_d = 1.0 - cal.p_d_err;
  t.p_id = std::exp(-cal.t_2q_ns / t2_ns);
  t.p_m = 1.0 - cal.p_m_err;
  t.p_im = std::exp(-cal.t_meas_ns / t2_ns);
  t.p_ic = t.p_im;
  return t;
}

LayerDurations durations_from_calibration(const Calibration& cal, double t_classical_ns) {
  LayerDurations d;
  d.t_1q_ns = single_gate_duration_ns(cal);
  d.t_2q_ns = cal.t_2q_ns;
  d.t_meas_ns = cal.t_meas_ns;
  d.t_classical_ns = t_classical_ns;
  return d;
}

double runtime_estimate_ns(const Schedule& s, const LayerDurations& durations) {
  double total = 0.0;
  for (const Layer& layer : s.layers) {
    switch (layer.cls) {
      case LayerClass::Single:
        total += durations.t_1q_ns;
        break;
      case LayerClass::Double:
        total += durations.t_2q_ns;
        break;
      case LayerClass::Measure:
        total += durations.t_meas_ns;
        break;
      case LayerClass::Classical:
        total += durations.t_classical_ns;
        break;
    }
  }
  return total;
}

}  // namespace stateprep
