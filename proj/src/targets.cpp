#include "fibraid/targets.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fibraid/representation.hpp"
#include "fibraid/search.hpp"
#include "fibraid/solovay_kitaev.hpp"

namespace fibraid {

namespace {

int parse_int(const std::string& s, const std::string& name) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("bad integer in target '" + name + "'");
  return v;
}

GateTarget block_target(const Matrix2& m, const std::string& name) {
  return make_target(m, TargetMode::QubitBlockOnly, true, name);
}

}  // namespace

GateTarget named_target(const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "not" || name == "x") {
    Matrix2 x;
    x << 0, 1, 1, 0;
    return block_target(x, name);
  }
  if (name == "hadamard" || name == "h") {
    Matrix2 h;
    h << r, r, r, -r;
    return block_target(h, name);
  }
  if (name == "z") {
    Matrix2 z;
    z << 1, 0, 0, -1;
    return block_target(z, name);
  }
  if (name == "identity" || name == "id")
    return make_target(Matrix::Identity(3, 3), TargetMode::Full, true, name);
  if (name.rfind("effective:", 0) == 0)
    return make_target(effective_braiding_target(parse_int(name.substr(10), name)),
                       TargetMode::Full, true, name);
  if ((name.rfind("s1^", 0) == 0 || name.rfind("s2^", 0) == 0) && name.size() > 3) {
    const int k = name[1] - '0';
    return make_target(representation(3).power(k, parse_int(name.substr(3), name)),
                       TargetMode::Full, true, name);
  }
  if (name.rfind("axis:", 0) == 0) {
    std::stringstream ss(name.substr(5));
    std::string item;
    std::vector<double> v;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad number in target '" + name + "'");
      }
    }
    if (v.size() != 4) throw std::invalid_argument("axis target needs X,Y,Z,ANGLE");
    const Eigen::Vector3d axis(v[0], v[1], v[2]);
    if (axis.norm() < 1e-12) throw std::invalid_argument("axis must be nonzero");
    return block_target(axis_angle(axis, v[3]), name);
  }
  throw std::invalid_argument("unknown target '" + name + "'");
}

std::vector<std::string> target_name_forms() {
  return {"not", "hadamard", "z", "axis:X,Y,Z,ANGLE", "identity", "effective:M", "s1^E", "s2^E"};
}

}  // namespace fibraid
