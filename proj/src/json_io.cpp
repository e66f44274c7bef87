#include "detline/json_io.hpp"

#include <stdexcept>

namespace detline {

json to_json(const Rational& q) { return rat_str(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return rat_parse(j.get<std::string>());
}

json to_json(const RationalMatrix& m) {
  if (m.rows() == 0)
    return json{{"rows", 0}, {"cols", m.cols()}, {"entries", json::array()}};
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(rat_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  if (j.is_object()) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    RationalMatrix m(rows, cols);
    const json& e = j.at("entries");
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m.at(r, c) = rational_from_json(e.at(r).at(c));
    return m;
  }
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array");
  std::size_t rows = j.size();
  if (rows == 0) return RationalMatrix(0, 0);
  std::size_t cols = j.at(0).size();
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = rational_from_json(j.at(r).at(c));
  }
  return m;
}

json to_json(const FinOperator& op) {
  return json{{"matrix", to_json(op.matrix())},
              {"domain", op.domain_dim()},
              {"codomain", op.codomain_dim()}};
}

FinOperator operator_from_json(const json& j) {
  RationalMatrix m = matrix_from_json(j.at("matrix"));
  std::size_t n = j.at("domain").get<std::size_t>();
  std::size_t mm = j.at("codomain").get<std::size_t>();
  if (m.rows() == 0 && m.cols() == 0 && (n != 0 || mm != 0))
    m = RationalMatrix(mm, n);
  if (m.rows() != mm || m.cols() != n)
    throw std::invalid_argument("operator shape mismatch");
  return FinOperator(m);
}

json to_json(const LineSpace& s) {
  json out;
  out["dual"] = s.dual;
  if (std::holds_alternative<Subspace>(s.carrier)) {
    const auto& sub = std::get<Subspace>(s.carrier);
    out["kind"] = "subspace";
    out["ambient"] = sub.ambient();
    out["basis"] = to_json(sub.basis());
  } else {
    const auto& q = std::get<QuotientSpace>(s.carrier);
    out["kind"] = "quotient";
    out["ambient"] = q.ambient();
    out["denominator"] = to_json(q.denominator().basis());
  }
  return out;
}

LineSpace line_space_from_json(const json& j) {
  LineSpace s;
  s.dual = j.value("dual", false);
  std::size_t ambient = j.at("ambient").get<std::size_t>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "subspace") {
    RationalMatrix b = matrix_from_json(j.at("basis"));
    if (b.rows() == 0) b = RationalMatrix(0, ambient);
    s.carrier = Subspace::span(b);
  } else if (kind == "quotient") {
    RationalMatrix d = matrix_from_json(j.at("denominator"));
    if (d.rows() == 0) d = RationalMatrix(0, ambient);
    s.carrier = QuotientSpace(ambient, Subspace::span(d));
  } else {
    throw std::invalid_argument("unknown carrier kind: " + kind);
  }
  return s;
}

namespace {

json frame_to_json(const std::vector<std::vector<Rational>>& fr) {
  json out = json::array();
  for (const auto& v : fr) {
    json row = json::array();
    for (const auto& x : v) row.push_back(rat_str(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Rational>> frame_from_json(const json& j,
                                                   std::size_t ambient) {
  std::vector<std::vector<Rational>> fr;
  for (const auto& row : j) {
    std::vector<Rational> v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    if (v.empty()) v.resize(ambient, Rational(0));
    if (v.size() != ambient)
      throw std::invalid_argument("frame vector of wrong length");
    fr.push_back(std::move(v));
  }
  return fr;
}

}  // namespace

json to_json(const LineElement& e) {
  return json{{"space", to_json(e.space)},
              {"frame", frame_to_json(e.frame)},
              {"scalar", rat_str(e.scalar)},
              {"dual", e.space.dual}};
}

LineElement line_element_from_json(const json& j) {
  LineElement e;
  e.space = line_space_from_json(j.at("space"));
  if (j.contains("dual")) e.space.dual = j.at("dual").get<bool>();
  e.frame = frame_from_json(j.at("frame"), carrier_ambient(e.space.carrier));
  e.scalar = rational_from_json(j.at("scalar"));
  return e;
}

json to_json(const DetLineElement& e) {
  return json{{"operator", to_json(e.op)},
              {"kernel_frame", frame_to_json(e.ker_frame)},
              {"cokernel_frame", frame_to_json(e.coker_frame)},
              {"scalar", rat_str(e.scalar)}};
}

DetLineElement det_element_from_json(const json& j) {
  FinOperator op = operator_from_json(j.at("operator"));
  auto kf = frame_from_json(j.at("kernel_frame"), op.domain_dim());
  auto cf = frame_from_json(j.at("cokernel_frame"), op.codomain_dim());
  return det_elem(op, std::move(kf), std::move(cf),
                  rational_from_json(j.at("scalar")));
}

json to_json(const ExactTriple& t) {
  return json{{"D_prime", to_json(t.Dp)}, {"D", to_json(t.D)},
              {"D_dprime", to_json(t.Dpp)}, {"iX", to_json(t.iX)},
              {"jX", to_json(t.jX)},        {"iY", to_json(t.iY)},
              {"jY", to_json(t.jY)}};
}

ExactTriple triple_from_json(const json& j) {
  ExactTriple t;
  t.Dp = operator_from_json(j.at("D_prime"));
  t.D = operator_from_json(j.at("D"));
  t.Dpp = operator_from_json(j.at("D_dprime"));
  auto mat = [&](const char* name, std::size_t rows, std::size_t cols) {
    RationalMatrix m = matrix_from_json(j.at(name));
    if (m.rows() == 0 && m.cols() == 0 && (rows != 0 || cols != 0))
      m = RationalMatrix(rows, cols);
    return m;
  };
  t.iX = mat("iX", t.D.domain_dim(), t.Dp.domain_dim());
  t.jX = mat("jX", t.Dpp.domain_dim(), t.D.domain_dim());
  t.iY = mat("iY", t.D.codomain_dim(), t.Dp.codomain_dim());
  t.jY = mat("jY", t.Dpp.codomain_dim(), t.D.codomain_dim());
  return t;
}

json to_json(const ExactSquare& s) {
  static const char* rn[3] = {"T", "C", "B"};
  static const char* cn[3] = {"L", "M", "R"};
  json ops = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(to_json(s.op[r][c]));
    ops.push_back(std::move(row));
  }
  json rows = json::array(), cols = json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(json{{"name", rn[r]},
                        {"iX", to_json(s.row_iX[r])},
                        {"jX", to_json(s.row_jX[r])},
                        {"iY", to_json(s.row_iY[r])},
                        {"jY", to_json(s.row_jY[r])}});
  for (int c = 0; c < 3; ++c)
    cols.push_back(json{{"name", cn[c]},
                        {"iX", to_json(s.col_iX[c])},
                        {"jX", to_json(s.col_jX[c])},
                        {"iY", to_json(s.col_iY[c])},
                        {"jY", to_json(s.col_jY[c])}});
  return json{{"operators", ops}, {"rows", rows}, {"cols", cols}};
}

ExactSquare square_from_json(const json& j) {
  ExactSquare s;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      s.op[r][c] = operator_from_json(j.at("operators").at(r).at(c));
  for (int r = 0; r < 3; ++r) {
    const json& row = j.at("rows").at(r);
    s.row_iX[r] = matrix_from_json(row.at("iX"));
    s.row_jX[r] = matrix_from_json(row.at("jX"));
    s.row_iY[r] = matrix_from_json(row.at("iY"));
    s.row_jY[r] = matrix_from_json(row.at("jY"));
  }
  for (int c = 0; c < 3; ++c) {
    const json& col = j.at("cols").at(c);
    s.col_iX[c] = matrix_from_json(col.at("iX"));
    s.col_jX[c] = matrix_from_json(col.at("jX"));
    s.col_iY[c] = matrix_from_json(col.at("iY"));
    s.col_jY[c] = matrix_from_json(col.at("jY"));
  }
  return s;
}

json to_json(const ConventionSystem& c) {
  json arr = json::array();
  for (const auto& [key, value] : c.table())
    arr.push_back(json{{"i", key.first},
                       {"c", key.second},
                       {"value", rat_str(value)}});
  return json{{"A", arr}, {"default", rat_str(c.default_value())}};
}

ConventionSystem convention_from_json(const json& j) {
  ConventionSystem c;
  if (j.contains("default"))
    c.set_default(rational_from_json(j.at("default")));
  for (const auto& entry : j.at("A"))
    c.set(entry.at("i").get<long>(), entry.at("c").get<long>(),
          rational_from_json(entry.at("value")));
  return c;
}

}  // namespace detline
