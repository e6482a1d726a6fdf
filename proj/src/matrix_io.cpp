#include "fibraid/matrix_io.hpp"

#include <stdexcept>

namespace fibraid {

nlohmann::json matrix_entries_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const BlockUnitary& u) {
  nlohmann::json j;
  j["dim"] = u.dim();
  auto blocks = nlohmann::json::array();
  for (const auto& b : u.blocks)
    blocks.push_back({{"charge", to_int(b.charge)}, {"begin", b.begin}, {"end", b.end}});
  j["blocks"] = std::move(blocks);
  j["entries"] = matrix_entries_json(u.entries);
  return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (j.is_object() && !j.contains("entries")) throw std::invalid_argument("matrix: no entries");
  const nlohmann::json& rows = j.is_object() ? j["entries"] : j;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix: expected rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw std::invalid_argument("matrix: rows must have equal length and be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (e.is_number())
        m(r, c) = e.get<double>();
      else if (e.is_array() && e.size() == 2)
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      else
        throw std::invalid_argument("matrix: entries must be numbers or [re, im]");
    }
  }
  if (j.is_object() && j.contains("dim") && j["dim"].get<Eigen::Index>() != n)
    throw std::invalid_argument("matrix: dim does not match entries");
  return m;
}

}  // namespace fibraid
