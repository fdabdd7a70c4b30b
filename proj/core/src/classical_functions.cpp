#include "stateprep/classical_functions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stateprep {

int classical_output_width(ClassicalFn fn, int num_inputs) {
  switch (fn) {
    case ClassicalFn::GhzCorrect:
      return num_inputs + 1;
    case ClassicalFn::FanoutXCorrect:
      if (num_inputs < 1) throw std::invalid_argument("FanoutXCorrect needs at least one input");
      return num_inputs - 1;
    case ClassicalFn::Parity:
      return 1;
  }
  throw std::invalid_argument("unknown classical function");
}

std::vector<int> eval_classical(ClassicalFn fn, const std::vector<int>& inputs) {
  switch (fn) {
    case ClassicalFn::GhzCorrect: {
      const int n = static_cast<int>(inputs.size()) + 1;
      std::vector<int> flips(static_cast<std::size_t>(n), 0);
      for (int i = 1; i < n; ++i) {
        flips[static_cast<std::size_t>(i)] =
            flips[static_cast<std::size_t>(i - 1)] ^ (inputs[static_cast<std::size_t>(i - 1)] & 1);
      }
      const int ones = static_cast<int>(std::count(flips.begin(), flips.end(), 1));
      if (2 * ones > n) {
        for (int& f : flips) f ^= 1;
      }
      return flips;
    }
    case ClassicalFn::FanoutXCorrect: {
      if (inputs.empty()) throw std::invalid_argument("FanoutXCorrect needs at least one input");
      std::vector<int> flips(inputs.size() - 1, 0);
      int running = inputs[0] & 1;
      for (std::size_t j = 1; j < inputs.size(); ++j) {
        running ^= inputs[j] & 1;
        flips[j - 1] = running;
      }
      return flips;
    }
    case ClassicalFn::Parity: {
      int parity = 0;
      for (int b : inputs) parity ^= b & 1;
      return {parity};
    }
  }
  throw std::invalid_argument("unknown classical function");
}

}  // namespace stateprep
