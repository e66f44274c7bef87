#pragma once

#include "detline/triple.hpp"

namespace detline {

// 3x3 commuting grid of operators with exact rows and columns. Rows and
// columns are indexed T/C/B and L/M/R; op[r][c] maps X_{rc} -> Y_{rc}.
// Each row r carries edge maps row_iX[r]: X_{rL}->X_{rM},
// row_jX[r]: X_{rM}->X_{rR} and their codomain counterparts; columns
// likewise (col_iX[c]: X_{Tc}->X_{Cc}, col_jX[c]: X_{Cc}->X_{Bc}).
struct ExactSquare {
  FinOperator op[3][3];
  RationalMatrix row_iX[3], row_jX[3], row_iY[3], row_jY[3];
  RationalMatrix col_iX[3], col_jX[3], col_iY[3], col_jY[3];
};

ExactTriple row_triple(const ExactSquare& s, std::size_t r);
ExactTriple col_triple(const ExactSquare& s, std::size_t c);

// Empty when valid, else the first failed condition.
std::optional<std::string> validate_square(const ExactSquare& s);

}  // namespace detline
