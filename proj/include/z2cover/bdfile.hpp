#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "z2cover/cover.hpp"

namespace z2cover {

struct bdfile_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BdFile {
  BuildingData bd;
  std::vector<std::string> warnings;
};

/*
  Text format for building data:

      surface = Y4
      group = Z2^4

      [D]
      0101 = h14
      0110 = f3#1 + e1        # components joined with '+'

      [L]
      0001 = 2*f1 + f2 - e4   # divisor-class expression

  '#' starts a comment.  Sigma labels absent from [D] denote empty branch
  divisors; every non-trivial character must appear in [L].  Sigma and chi
  labels are n-bit strings.
*/
BdFile parse_bd_text(const std::string& text);
BdFile load_bd_file(const std::string& path);

// Inverse of parsing up to component order: non-empty [D] rows in sigma
// order with sorted components, all [L] rows in chi order.
std::string serialize_bd(const BuildingData& bd);

}  // namespace z2cover
