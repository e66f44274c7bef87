#include "detline/square.hpp"

namespace detline {

ExactTriple row_triple(const ExactSquare& s, std::size_t r) {
  return ExactTriple{s.op[r][0], s.op[r][1], s.op[r][2],
                     s.row_iX[r], s.row_jX[r], s.row_iY[r], s.row_jY[r]};
}

ExactTriple col_triple(const ExactSquare& s, std::size_t c) {
  return ExactTriple{s.op[0][c], s.op[1][c], s.op[2][c],
                     s.col_iX[c], s.col_jX[c], s.col_iY[c], s.col_jY[c]};
}

std::optional<std::string> validate_square(const ExactSquare& s) {
  static const char* rn[3] = {"T", "C", "B"};
  static const char* cn[3] = {"L", "M", "R"};
  for (std::size_t r = 0; r < 3; ++r)
    if (auto v = validate_triple(row_triple(s, r)))
      return std::string("row-") + rn[r] + ":" + *v;
  for (std::size_t c = 0; c < 3; ++c)
    if (auto v = validate_triple(col_triple(s, c)))
      return std::string("col-") + cn[c] + ":" + *v;
  // The four small squares of each level must commute.
  if (!(s.col_iX[1] * s.row_iX[0] == s.row_iX[1] * s.col_iX[0]))
    return "domain-grid-ii";
  if (!(s.col_iX[2] * s.row_jX[0] == s.row_jX[1] * s.col_iX[1]))
    return "domain-grid-ji";
  if (!(s.col_jX[1] * s.row_iX[1] == s.row_iX[2] * s.col_jX[0]))
    return "domain-grid-ij";
  if (!(s.col_jX[2] * s.row_jX[1] == s.row_jX[2] * s.col_jX[1]))
    return "domain-grid-jj";
  if (!(s.col_iY[1] * s.row_iY[0] == s.row_iY[1] * s.col_iY[0]))
    return "codomain-grid-ii";
  if (!(s.col_iY[2] * s.row_jY[0] == s.row_jY[1] * s.col_iY[1]))
    return "codomain-grid-ji";
  if (!(s.col_jY[1] * s.row_iY[1] == s.row_iY[2] * s.col_jY[0]))
    return "codomain-grid-ij";
  if (!(s.col_jY[2] * s.row_jY[1] == s.row_jY[2] * s.col_jY[1]))
    return "codomain-grid-jj";
  return std::nullopt;
}

}  // namespace detline
