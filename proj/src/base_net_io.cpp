#include "fibraid/base_net_io.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "fibraid/weave_space.hpp"

namespace fibraid {

namespace {

constexpr std::array<char, 8> kMagic{'F', 'I', 'B', 'N', 'E', 'T', '\0', '\0'};

template <class T>
void put(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw NetFileError("net file is truncated");
  return v;
}

Eigen::Vector4d rotation_of(const std::vector<Crossing>& runs) {
  const RunTable& table = run_table();
  Matrix2 b = Matrix2::Identity();
  for (const auto& c : runs) b = table.block(c.index, c.exponent) * b;
  Eigen::Vector4d q = quaternion_of(strip_phase(b));
  // Fix the sign: first nonzero component positive.
  for (int i = 0; i < 4; ++i) {
    if (std::abs(q[i]) > 1e-9) {
      if (q[i] < 0) q = -q;
      break;
    }
  }
  return q;
}

void write_halves(std::ofstream& out, const MitmIndex& index, bool suffix) {
  const std::size_t n = suffix ? index.suffix_count() : index.prefix_count();
  put<std::uint64_t>(out, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto runs = suffix ? index.suffix_runs(i) : index.prefix_runs(i);
    put<std::uint8_t>(out, static_cast<std::uint8_t>(runs.size()));
    for (const auto& c : runs) {
      put<std::int8_t>(out, static_cast<std::int8_t>(c.index));
      put<std::int8_t>(out, static_cast<std::int8_t>(c.exponent));
    }
    const Eigen::Vector4d q = rotation_of(runs);
    for (int k = 0; k < 4; ++k) put<double>(out, q[k]);
  }
}

std::vector<std::vector<Crossing>> read_halves(std::ifstream& in) {
  const auto n = get<std::uint64_t>(in);
  if (n > (std::uint64_t{1} << 32)) throw NetFileError("implausible half-word count");
  std::vector<std::vector<Crossing>> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto count = get<std::uint8_t>(in);
    std::vector<Crossing> runs;
    for (int r = 0; r < count; ++r) {
      const int k = get<std::int8_t>(in);
      const int e = get<std::int8_t>(in);
      runs.push_back({k, e});
    }
    Eigen::Vector4d stored;
    for (int k = 0; k < 4; ++k) stored[k] = get<double>(in);
    if (count > 0 && (runs.front().index < 1 || runs.front().index > 2))
      throw NetFileError("stored word has a bad generator");
    for (const auto& c : runs)
      if (c.index < 1 || c.index > 2 || c.exponent == 0 || fold_exponent(c.exponent) != c.exponent)
        throw NetFileError("stored word is not canonical");
    if ((rotation_of(runs) - stored).norm() > 1e-10)
      throw NetFileError("stored rotation does not match its word");
    out.push_back(std::move(runs));
  }
  return out;
}

}  // namespace

void save_base_net(const BaseNet& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NetFileError("cannot open " + path + " for writing");
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kNetFileVersion);
  const std::string tag = ModelConstants::convention_tag();
  put<std::uint32_t>(out, static_cast<std::uint32_t>(tag.size()));
  out.write(tag.data(), static_cast<std::streamsize>(tag.size()));
  put<std::int32_t>(out, net.max_base_length());
  put<std::int32_t>(out, net.mobile());
  put<double>(out, net.covering_radius());
  write_halves(out, net.index(), false);
  write_halves(out, net.index(), true);
  if (!out) throw NetFileError("write failed for " + path);
}

BaseNet load_base_net(const std::string& path, int threads) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NetFileError("cannot open " + path);
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw NetFileError(path + " is not a net file");
  const auto version = get<std::uint32_t>(in);
  if (version != kNetFileVersion)
    throw NetFileError("unsupported net file version " + std::to_string(version));
  const auto tag_len = get<std::uint32_t>(in);
  if (tag_len > 4096) throw NetFileError("implausible convention tag");
  std::string tag(tag_len, '\0');
  in.read(tag.data(), tag_len);
  if (!in) throw NetFileError("net file is truncated");
  if (tag != ModelConstants::convention_tag())
    throw NetFileError("net was built under convention '" + tag + "'");
  const int base_length = get<std::int32_t>(in);
  const int mobile = get<std::int32_t>(in);
  const double radius = get<double>(in);
  auto prefixes = read_halves(in);
  auto suffixes = read_halves(in);
  try {
    BaseNet net(base_length, mobile, prefixes, suffixes, threads);
    net.set_covering_radius(radius);
    return net;
  } catch (const std::invalid_argument& e) {
    throw NetFileError(std::string("net file contents rejected: ") + e.what());
  }
}

}  // namespace fibraid
