#pragma once

#include <string>

#include "dikin/model.hpp"

namespace fixtures {

inline const std::string kDataDir = DIKIN_TEST_DATA;

// min x1 + 2 x2  s.t.  x1 + x2 = 2, x >= 0.
inline dikin::LinearProgram micro_lp() {
  dikin::Matrix A(1, 2);
  A << 1, 1;
  dikin::Vector b(1);
  b << 2;
  dikin::Vector c(2);
  c << 1, 2;
  return dikin::LinearProgram::from_dense(A, b, c);
}

inline dikin::Vector ones(Eigen::Index n) { return dikin::Vector::Ones(n); }

inline const char* kMicroMps =
    "NAME          TEST\n"
    "ROWS\n"
    " N  COST\n"
    " E  R1\n"
    "COLUMNS\n"
    "    X1        COST      1.0          R1        1.0\n"
    "    X2        COST      2.0          R1        1.0\n"
    "RHS\n"
    "    RHS       R1        2.0\n"
    "ENDATA\n";

}  // namespace fixtures
