#pragma once

#include <stdexcept>
#include <string>

namespace starprod {

/// Malformed input file or inline product spec.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A coloring that was required to be a star coloring failed verification.
/// Raised by the bank load gate and by the stitching constructions, which
/// never trust their own output.
class verification_error : public std::runtime_error {
public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

/// Stitch pieces disagree on the overlap prefix; carries the first bad cell.
class stitch_error : public std::runtime_error {
public:
  stitch_error(const std::string& what, int row, int col)
      : std::runtime_error(what), row(row), col(col) {}
  int row;
  int col;
};

}  // namespace starprod
