#pragma once

#include <array>
#include <string>
#include <vector>

#include "cdirac/dirac.hpp"

namespace cdirac {

// One compatible triple of Jordan blocks J1 -> J2 -> J3 with sizes k + m = l.
struct CircleBlock {
  std::size_t k = 0, l = 0, m = 0;
  int parity = 0;  // parity of the top of J2
};

// Nodes in circle order: H(M1)+, H(M2)+, H(M3)+, H(M1)-, H(M2)-, H(M3)-.
// maps[n] goes from node n to node n+1 (mod 6); maps[2] and maps[5] are the connecting maps.
struct CircleResult {
  Weight mu;
  bool intertwines = false;  // i D1 = D2 i and p D2 = D3 p
  bool short_exact = false;  // 0 -> V1 -> V2 -> V3 -> 0 on the blocks
  bool jordan_bases = false;  // the assembled chains are Jordan bases of all three generalized kernels
  std::vector<CircleBlock> blocks;
  std::array<std::size_t, 6> node_dims{};
  std::array<Matrix, 6> maps;
  std::array<bool, 6> exact_at{};
  bool exact = false;
  std::string failure;
};

// Builds the six maps on generalized kernels of three odd operators linked by i and p.
// Throws LiftFailure when a lifted Jordan top lands in the image of D2.
CircleResult exact_circle_linear(const Matrix& d1, const Matrix& d2, const Matrix& d3, const Matrix& i, const Matrix& p,
                                 const std::vector<int>& par1, const std::vector<int>& par2,
                                 const std::vector<int>& par3);

CircleResult exact_circle(const DiracSetup& s, const ShortExactSequence& ses, const Weight& mu);

}  // namespace cdirac
