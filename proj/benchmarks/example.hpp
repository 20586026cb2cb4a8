#pragma once

#include "biquad/input.hpp"

inline const biquad::PencilInput& example_input() {
  static const biquad::PencilInput in = biquad::read_input_file(BIQUAD_DATA_DIR "/example_pencil.txt");
  return in;
}
