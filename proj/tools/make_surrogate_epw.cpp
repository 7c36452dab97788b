// Writes the deterministic Coimbra-climate surrogate year as an EPW file.
#include <fstream>
#include <iostream>
#include <string>

#include "winopt/synthetic_weather.hpp"

int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::cerr << "usage: make_surrogate_epw <output.epw> [seed]\n";
    return 2;
  }
  const std::uint64_t seed = argc == 3 ? std::stoull(argv[2]) : 2015;
  std::ofstream out(argv[1], std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 1;
  }
  winopt::write_epw(out, winopt::coimbra_surrogate_weather(seed));
  return out ? 0 : 1;
}
