#pragma once

#include <stdexcept>
#include <string>

#include "fibraid/solovay_kitaev.hpp"

namespace fibraid {

class NetFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kNetFileVersion = 1;

/// Binary net file: magic, version, model-convention tag, net shape, covering radius,
/// then every half word as its runs and phase-stripped rotation.
void save_base_net(const BaseNet& net, const std::string& path);

/// Throws NetFileError on a bad header, a different convention tag, or a stored
/// rotation that disagrees with its re-evaluated word by more than 1e-10.
BaseNet load_base_net(const std::string& path, int threads = 0);

}  // namespace fibraid
