// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/io/packets.hpp"

#include <fstream>
#include <iterator>

#include "rankcrypt/error.hpp"

namespace rankcrypt::io {

std::vector<std::uint8_t> pack_symbols(const gf::FieldTower& f, std::span<const Elem> symbols) {
  require(f.q() <= 256, ErrorCode::InvalidArgument, "packet files need q <= 256");
  std::vector<std::uint8_t> out;
  out.reserve(symbols.size() * f.m());
  for (Elem s : symbols) {
    const auto ds = f.digits(s);
    for (std::size_t i = ds.size(); i-- > 0;) out.push_back(static_cast<std::uint8_t>(ds[i]));
  }
  return out;
}

std::vector<Elem> unpack_symbols(const gf::FieldTower& f, std::span<const std::uint8_t> bytes,
                                 std::size_t per_block) {
  require(f.q() <= 256, ErrorCode::InvalidArgument, "packet files need q <= 256");
  const std::size_t block = per_block * f.m();
  require(block > 0 && bytes.size() % block == 0, ErrorCode::ShapeMismatch,
          "packet file holds " + std::to_string(bytes.size()) +
              " bytes, not a whole number of " + std::to_string(block) + "-byte blocks");
  std::vector<Elem> out;
  std::vector<std::uint32_t> ds(f.m());
  for (std::size_t pos = 0; pos < bytes.size(); pos += f.m()) {
    for (std::uint32_t i = 0; i < f.m(); ++i) {
      const std::uint8_t b = bytes[pos + i];
      require(b < f.q(), ErrorCode::Parse, "digit byte out of range");
      ds[f.m() - 1 - i] = b;
    }
    out.push_back(f.from_digits(ds));
  }
  return out;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::Io, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace rankcrypt::io
